#include "hlr/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hlr {

HalfSpace canonical_halfspace(HalfSpace h) {
    int lead = -1;
    for (int i = 0; i < h.functional.dim(); ++i)
        if (h.functional[i] != 0) { lead = i; break; }
    if (lead < 0) throw Error("halfspace functional is zero");
    Rat scale = Rat(1) / abs(h.functional[lead]);
    if (scale != 1) {
        for (int i = 0; i < h.functional.dim(); ++i) h.functional[i] *= scale;
        h.offset *= scale;
    }
    return h;
}

static bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
    if (lex_less(a.functional, b.functional)) return true;
    if (lex_less(b.functional, a.functional)) return false;
    return a.offset < b.offset;
}

// ---------------------------------------------------------------------------
// Builder: mutable V+H representation with incidence, supporting clipping
// ---------------------------------------------------------------------------

struct PolyBuilder {
    int n = 0;
    std::shared_ptr<const RatMat> metric;
    std::vector<HalfSpace> hs;
    std::vector<RatVec> verts;
    std::vector<boost::dynamic_bitset<>> inc;

    enum class ClipStatus { Unchanged, Clipped, Empty };

    static PolyBuilder from_polytope(const Polytope& p);
    static PolyBuilder box(int n, const std::vector<Rat>& bound, std::shared_ptr<const RatMat> metric);

    ClipStatus clip(const HalfSpace& h_in);
    bool full_dimensional() const {
        return static_cast<int>(verts.size()) >= n + 1 && affine_rank(verts) == n;
    }
    Polytope finalize() &&;

private:
    void drop_facets(const std::vector<char>& keep);
};

PolyBuilder PolyBuilder::from_polytope(const Polytope& p) {
    PolyBuilder b;
    b.n = p.dim();
    b.metric = std::make_shared<const RatMat>(p.metric());
    b.hs = p.facets();
    b.verts = p.vertices();
    b.inc.reserve(b.verts.size());
    for (int i = 0; i < static_cast<int>(b.verts.size()); ++i)
        b.inc.push_back(p.incident_facets(i));
    return b;
}

PolyBuilder PolyBuilder::box(int n, const std::vector<Rat>& bound,
                             std::shared_ptr<const RatMat> metric) {
    PolyBuilder b;
    b.n = n;
    b.metric = std::move(metric);
    for (int i = 0; i < n; ++i) {
        HalfSpace pos, neg;
        pos.functional = RatVec(n);
        pos.functional[i] = 1;
        pos.offset = bound[static_cast<size_t>(i)];
        neg.functional = RatVec(n);
        neg.functional[i] = -1;
        neg.offset = bound[static_cast<size_t>(i)];
        b.hs.push_back(std::move(pos));
        b.hs.push_back(std::move(neg));
    }
    const size_t m = b.hs.size();
    for (size_t mask = 0; mask < (static_cast<size_t>(1) << n); ++mask) {
        RatVec v(n);
        boost::dynamic_bitset<> in(m);
        for (int i = 0; i < n; ++i) {
            bool plus = (mask >> i) & 1;
            v[i] = plus ? bound[static_cast<size_t>(i)] : -bound[static_cast<size_t>(i)];
            in.set(static_cast<size_t>(2 * i + (plus ? 0 : 1)));
        }
        b.verts.push_back(std::move(v));
        b.inc.push_back(std::move(in));
    }
    return b;
}

void PolyBuilder::drop_facets(const std::vector<char>& keep) {
    std::vector<size_t> remap(hs.size());
    std::vector<HalfSpace> new_hs;
    for (size_t j = 0; j < hs.size(); ++j) {
        if (!keep[j]) continue;
        remap[j] = new_hs.size();
        new_hs.push_back(std::move(hs[j]));
    }
    for (auto& bits : inc) {
        boost::dynamic_bitset<> nb(new_hs.size());
        for (size_t j = bits.find_first(); j != boost::dynamic_bitset<>::npos;
             j = bits.find_next(j))
            if (keep[j]) nb.set(remap[j]);
        bits = std::move(nb);
    }
    hs = std::move(new_hs);
}

PolyBuilder::ClipStatus PolyBuilder::clip(const HalfSpace& h_in) {
    const HalfSpace h = canonical_halfspace(h_in);
    const size_t nv = verts.size();
    std::vector<Rat> s(nv);
    bool any_cut = false;
    for (size_t v = 0; v < nv; ++v) {
        s[v] = dot(h.functional, verts[v]) - h.offset;
        if (s[v] > 0) any_cut = true;
    }
    if (!any_cut) return ClipStatus::Unchanged;  // redundant (possibly touching)

    std::vector<size_t> kept, cut;
    for (size_t v = 0; v < nv; ++v) (s[v] <= 0 ? kept : cut).push_back(v);
    if (kept.empty()) {
        verts.clear();
        inc.clear();
        return ClipStatus::Empty;
    }

    const size_t m = hs.size();  // index of the new facet
    // Facets that can change status are exactly those incident to a cut vertex.
    boost::dynamic_bitset<> touched(m + 1);
    for (size_t w : cut) {
        for (size_t j = inc[w].find_first(); j != boost::dynamic_bitset<>::npos;
             j = inc[w].find_next(j))
            touched.set(j);
    }
    touched.set(m);

    std::vector<RatVec> new_verts;
    std::vector<boost::dynamic_bitset<>> new_inc;
    for (size_t v : kept) {
        boost::dynamic_bitset<> bits = inc[v];
        bits.resize(m + 1);
        if (s[v] == 0) bits.set(m);
        new_verts.push_back(std::move(verts[v]));
        new_inc.push_back(std::move(bits));
    }
    // Crossing points: one per edge {u strictly kept, w cut}. An edge is
    // recognized combinatorially: no third vertex carries all common facets.
    for (size_t u : kept) {
        if (s[u] == 0) continue;
        for (size_t w : cut) {
            boost::dynamic_bitset<> common = inc[u] & inc[w];
            bool edge = true;
            for (size_t z = 0; z < nv; ++z) {
                if (z == u || z == w) continue;
                if (common.is_subset_of(inc[z])) { edge = false; break; }
            }
            if (!edge) continue;
            Rat lam = s[u] / (s[u] - s[w]);
            RatVec p = verts[u] + lam * (verts[w] - verts[u]);
            common.resize(m + 1);
            common.set(m);
            new_verts.push_back(std::move(p));
            new_inc.push_back(std::move(common));
        }
    }

    hs.push_back(h);
    verts = std::move(new_verts);
    inc = std::move(new_inc);

    // Irredundancy: a facet survives iff its contact set still spans an
    // affine hyperplane.
    std::vector<char> keep(hs.size(), 1);
    for (size_t j = touched.find_first(); j != boost::dynamic_bitset<>::npos;
         j = touched.find_next(j)) {
        std::vector<RatVec> contact;
        for (size_t v = 0; v < verts.size(); ++v)
            if (inc[v].test(j)) contact.push_back(verts[v]);
        keep[j] = static_cast<int>(contact.size()) >= n &&
                  affine_rank(contact) == n - 1;
    }
    if (std::find(keep.begin(), keep.end(), 0) != keep.end()) drop_facets(keep);
    return ClipStatus::Clipped;
}

Polytope PolyBuilder::finalize() && {
    // canonical order: vertices lex, facets by (functional, offset)
    std::vector<size_t> vperm(verts.size());
    for (size_t i = 0; i < vperm.size(); ++i) vperm[i] = i;
    std::sort(vperm.begin(), vperm.end(),
              [&](size_t a, size_t b) { return lex_less(verts[a], verts[b]); });
    std::vector<size_t> fperm(hs.size());
    for (size_t i = 0; i < fperm.size(); ++i) fperm[i] = i;
    std::sort(fperm.begin(), fperm.end(),
              [&](size_t a, size_t b) { return halfspace_less(hs[a], hs[b]); });

    Polytope p;
    p.n_ = n;
    p.metric_ = std::move(metric);
    p.facets_.reserve(hs.size());
    for (size_t j : fperm) p.facets_.push_back(std::move(hs[j]));
    p.vertices_.reserve(verts.size());
    p.inc_.reserve(verts.size());
    for (size_t v : vperm) {
        p.vertices_.push_back(std::move(verts[v]));
        boost::dynamic_bitset<> bits(hs.size());
        for (size_t jj = 0; jj < fperm.size(); ++jj)
            if (inc[v].test(fperm[jj])) bits.set(jj);
        p.inc_.push_back(std::move(bits));
    }
    p.cache_ = std::make_shared<Polytope::Cache>();
    return p;
}

// ---------------------------------------------------------------------------
// Feasibility / recession tests (Fourier-Motzkin)
// ---------------------------------------------------------------------------

namespace {

struct Row {
    RatVec coef;
    Rat rhs;  // coef . y <= rhs
};

// Exact feasibility of a small system by eliminating all variables.
bool fm_feasible(std::vector<Row> rows, int n) {
    for (int var = 0; var < n; ++var) {
        std::vector<Row> pos, neg, zero;
        for (auto& r : rows) {
            const Rat& c = r.coef[var];
            if (c > 0) pos.push_back(std::move(r));
            else if (c < 0) neg.push_back(std::move(r));
            else zero.push_back(std::move(r));
        }
        std::vector<Row> next = std::move(zero);
        for (const Row& p : pos)
            for (const Row& q : neg) {
                // p: c_p y_v + a.y' <= b_p  (c_p > 0), q: c_q y_v + c.y' <= b_q (c_q < 0)
                Row r;
                r.coef = (-q.coef[var]) * p.coef + p.coef[var] * q.coef;
                r.rhs = (-q.coef[var]) * p.rhs + p.coef[var] * q.rhs;
                next.push_back(std::move(r));
            }
        // prune duplicates (after normalization) to keep growth in check
        for (auto& r : next) {
            int lead = -1;
            for (int i = 0; i < n; ++i)
                if (r.coef[i] != 0) { lead = i; break; }
            if (lead >= 0) {
                Rat sc = Rat(1) / abs(r.coef[lead]);
                r.coef = sc * r.coef;
                r.rhs *= sc;
            }
        }
        std::sort(next.begin(), next.end(), [](const Row& a, const Row& b) {
            if (lex_less(a.coef, b.coef)) return true;
            if (lex_less(b.coef, a.coef)) return false;
            return a.rhs < b.rhs;
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const Row& a, const Row& b) {
                                   return a.coef == b.coef && a.rhs == b.rhs;
                               }),
                   next.end());
        rows = std::move(next);
    }
    for (const Row& r : rows)
        if (r.rhs < 0) return false;
    return true;
}

// Does { y != 0 : f.y <= 0 for all functionals } exist?
bool has_nonzero_recession(const std::vector<HalfSpace>& hs, int n) {
    std::vector<RatVec> funcs;
    funcs.reserve(hs.size());
    for (const auto& h : hs) funcs.push_back(h.functional);
    if (rank(funcs) < n) return true;
    // A nonzero direction can be scaled so that some coordinate is +-1.
    for (int i = 0; i < n; ++i) {
        for (int sign = -1; sign <= 1; sign += 2) {
            std::vector<Row> rows;
            for (const auto& f : funcs) {
                Row r;
                r.coef = f;
                r.coef[i] = 0;
                r.rhs = -Rat(sign) * f[i];
                rows.push_back(std::move(r));
            }
            // variable i is fixed; fm_feasible ignores the zeroed column
            if (fm_feasible(std::move(rows), n)) return true;
        }
    }
    return false;
}

std::vector<HalfSpace> dedupe_canonical(std::vector<HalfSpace> hs) {
    for (auto& h : hs) h = canonical_halfspace(std::move(h));
    std::sort(hs.begin(), hs.end(), halfspace_less);
    // identical functionals: only the smallest offset matters
    std::vector<HalfSpace> out;
    for (auto& h : hs) {
        if (!out.empty() && out.back().functional == h.functional) continue;
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

Polytope Polytope::from_halfspaces(std::vector<HalfSpace> hs_in, RatMat metric, int cap) {
    if (hs_in.empty()) throw Error("no halfspaces");
    const int n = hs_in[0].functional.dim();
    if (n < 1) throw Error("dimension must be >= 1");
    if (n > cap) throw DimensionCapError("dimension " + std::to_string(n) +
                                         " exceeds cap " + std::to_string(cap));
    std::vector<HalfSpace> hs = dedupe_canonical(std::move(hs_in));
    const int m = static_cast<int>(hs.size());

    // all n-subsets of facets; every solvable subset proposes a vertex
    std::vector<RatVec> cand;
    std::vector<int> idx(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    if (m >= n) {
        for (;;) {
            RatMat a(n, n);
            RatVec b(n);
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c)
                    a.at(r, c) = hs[static_cast<size_t>(idx[static_cast<size_t>(r)])].functional[c];
                b[r] = hs[static_cast<size_t>(idx[static_cast<size_t>(r)])].offset;
            }
            try {
                RatVec x = solve(a, b);
                bool feasible = true;
                for (const auto& h : hs)
                    if (dot(h.functional, x) > h.offset) { feasible = false; break; }
                if (feasible) cand.push_back(std::move(x));
            } catch (const SingularError&) {
            }
            // next combination
            int i = n - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == m - n + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    std::sort(cand.begin(), cand.end(), lex_less);
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    if (cand.empty()) {
        if (fm_feasible(
                [&] {
                    std::vector<Row> rows;
                    for (const auto& h : hs) rows.push_back({h.functional, h.offset});
                    return rows;
                }(),
                n))
            throw UnboundedError("feasible region has no vertex");
        throw LowerDimensionalError("empty intersection");
    }
    if (has_nonzero_recession(hs, n)) throw UnboundedError("intersection is unbounded");
    if (affine_rank(cand) < n) throw LowerDimensionalError("intersection is not full-dimensional");

    PolyBuilder b;
    b.n = n;
    b.metric = std::make_shared<const RatMat>(std::move(metric));
    b.verts = std::move(cand);
    b.inc.assign(b.verts.size(), boost::dynamic_bitset<>(static_cast<size_t>(m)));
    for (size_t v = 0; v < b.verts.size(); ++v)
        for (size_t j = 0; j < hs.size(); ++j)
            if (dot(hs[j].functional, b.verts[v]) == hs[j].offset) b.inc[v].set(j);
    b.hs = std::move(hs);
    // keep only facet-defining halfspaces
    std::vector<char> keep(b.hs.size());
    for (size_t j = 0; j < b.hs.size(); ++j) {
        std::vector<RatVec> contact;
        for (size_t v = 0; v < b.verts.size(); ++v)
            if (b.inc[v].test(j)) contact.push_back(b.verts[v]);
        keep[j] = static_cast<int>(contact.size()) >= n && affine_rank(contact) == n - 1;
    }
    if (std::find(keep.begin(), keep.end(), 0) != keep.end()) {
        std::vector<HalfSpace> kept_hs;
        for (size_t j = 0; j < b.hs.size(); ++j)
            if (keep[j]) kept_hs.push_back(b.hs[j]);
        PolyBuilder b2;
        b2.n = n;
        b2.metric = b.metric;
        b2.hs = std::move(kept_hs);
        b2.verts = std::move(b.verts);
        b2.inc.assign(b2.verts.size(), boost::dynamic_bitset<>(b2.hs.size()));
        for (size_t v = 0; v < b2.verts.size(); ++v)
            for (size_t j = 0; j < b2.hs.size(); ++j)
                if (dot(b2.hs[j].functional, b2.verts[v]) == b2.hs[j].offset) b2.inc[v].set(j);
        return std::move(b2).finalize();
    }
    return std::move(b).finalize();
}

Polytope Polytope::from_halfspaces_boxed(std::vector<HalfSpace> hs_in, RatMat metric,
                                         const std::vector<Rat>& box_bound, int cap) {
    if (hs_in.empty()) throw Error("no halfspaces");
    const int n = hs_in[0].functional.dim();
    if (n > cap) throw DimensionCapError("dimension " + std::to_string(n) +
                                         " exceeds cap " + std::to_string(cap));
    std::vector<HalfSpace> hs = dedupe_canonical(std::move(hs_in));
    PolyBuilder b = PolyBuilder::box(n, box_bound, std::make_shared<const RatMat>(std::move(metric)));
    for (const auto& h : hs) {
        if (b.clip(h) == PolyBuilder::ClipStatus::Empty)
            throw LowerDimensionalError("empty intersection");
    }
    if (!b.full_dimensional()) throw LowerDimensionalError("intersection is not full-dimensional");
    return std::move(b).finalize();
}

// ---------------------------------------------------------------------------
// Queries and transforms
// ---------------------------------------------------------------------------

bool Polytope::contains(const RatVec& x) const {
    for (const auto& h : facets_)
        if (dot(h.functional, x) > h.offset) return false;
    return true;
}

bool Polytope::contains_strictly(const RatVec& x) const {
    for (const auto& h : facets_)
        if (dot(h.functional, x) >= h.offset) return false;
    return true;
}

void Polytope::bounding_box(std::vector<Rat>& lo, std::vector<Rat>& hi) const {
    lo.assign(static_cast<size_t>(n_), Rat(0));
    hi.assign(static_cast<size_t>(n_), Rat(0));
    for (int i = 0; i < n_; ++i) {
        lo[static_cast<size_t>(i)] = vertices_[0][i];
        hi[static_cast<size_t>(i)] = vertices_[0][i];
        for (const auto& v : vertices_) {
            if (v[i] < lo[static_cast<size_t>(i)]) lo[static_cast<size_t>(i)] = v[i];
            if (v[i] > hi[static_cast<size_t>(i)]) hi[static_cast<size_t>(i)] = v[i];
        }
    }
}

Polytope Polytope::translated(const RatVec& s) const {
    Polytope p = *this;
    for (auto& v : p.vertices_) v = v + s;
    for (auto& h : p.facets_) h.offset += dot(h.functional, s);
    p.cache_ = std::make_shared<Cache>();
    return p;  // lex order is translation invariant, no re-sort needed
}

Polytope Polytope::scaled_half() const {
    Polytope p = *this;
    const Rat half(1, 2);
    for (auto& v : p.vertices_) v = half * v;
    for (auto& h : p.facets_) h.offset *= half;
    p.cache_ = std::make_shared<Cache>();
    return p;
}

bool Polytope::is_zero_symmetric() const {
    for (const auto& v : vertices_) {
        RatVec neg = -v;
        if (!std::binary_search(vertices_.begin(), vertices_.end(), neg, lex_less))
            return false;
    }
    return true;
}

bool Polytope::same_polytope(const Polytope& o) const {
    return n_ == o.n_ && vertices_ == o.vertices_;
}

// ---------------------------------------------------------------------------
// Triangulation and moments
// ---------------------------------------------------------------------------

Rat simplex_volume(const Simplex& s) {
    const int n = static_cast<int>(s.verts.size()) - 1;
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = s.verts[static_cast<size_t>(i + 1)][j] - s.verts[0][j];
    Rat d = det(m);
    if (d < 0) d = -d;
    Int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    return d / fact;
}

Rat simplex_second_moment(const Simplex& s, const RatVec& c, const RatMat& g) {
    // For vertices v_0..v_n (shifted by -c):
    //   int_S Q_G(x) dx = vol(S) / ((n+1)(n+2)) * ( sum_k Q_G(w_k) + Q_G(sum_k w_k) )
    const int n = static_cast<int>(s.verts.size()) - 1;
    Rat vol = simplex_volume(s);
    if (vol == 0) return Rat(0);
    Rat sum_q = 0;
    RatVec sum_w(c.dim());
    for (const auto& v : s.verts) {
        RatVec w = v - c;
        sum_q += dot(w, g.mul(w));
        sum_w = sum_w + w;
    }
    sum_q += dot(sum_w, g.mul(sum_w));
    return vol * sum_q / ((n + 1) * (n + 2));
}

namespace {

// Triangulates the face spanned by `face` (vertex indices, sorted) of
// dimension d, fanning from its first vertex over the sub-faces generated
// by inactive facets. Returns (d+1)-tuples of vertex indices.
void triangulate_face(const std::vector<RatVec>& verts,
                      const std::vector<boost::dynamic_bitset<>>& inc,
                      const std::vector<int>& face, const boost::dynamic_bitset<>& active,
                      int d, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(face.size()) == d + 1) {
        out.push_back(face);
        return;
    }
    const int apex = face[0];
    const size_t m = active.size();
    std::set<std::vector<int>> seen;
    for (size_t j = 0; j < m; ++j) {
        if (active.test(j)) continue;
        std::vector<int> contact;
        for (int v : face)
            if (inc[static_cast<size_t>(v)].test(j)) contact.push_back(v);
        if (static_cast<int>(contact.size()) < d) continue;
        if (!seen.insert(contact).second) continue;
        std::vector<RatVec> pts;
        pts.reserve(contact.size());
        for (int v : contact) pts.push_back(verts[static_cast<size_t>(v)]);
        if (affine_rank(pts) != d - 1) continue;
        if (std::binary_search(contact.begin(), contact.end(), apex)) continue;
        boost::dynamic_bitset<> sub_active = inc[static_cast<size_t>(contact[0])];
        for (int v : contact) sub_active &= inc[static_cast<size_t>(v)];
        std::vector<std::vector<int>> sub;
        triangulate_face(verts, inc, contact, sub_active, d - 1, sub);
        for (auto& simp : sub) {
            simp.push_back(apex);
            out.push_back(std::move(simp));
        }
    }
}

}  // namespace

void Polytope::build_cache() const {
    Cache& c = *cache_;
    const size_t nv = vertices_.size();
    if (static_cast<int>(nv) == n_ + 1) {
        Simplex s;
        s.verts = vertices_;
        c.tris.push_back(std::move(s));
    } else {
        RatVec center(n_);
        for (const auto& v : vertices_) center = center + v;
        center = Rat(1, static_cast<unsigned>(nv)) * center;
        // fan from the vertex centroid over triangulated facets
        for (size_t j = 0; j < facets_.size(); ++j) {
            std::vector<int> contact;
            for (size_t v = 0; v < nv; ++v)
                if (inc_[v].test(j)) contact.push_back(static_cast<int>(v));
            boost::dynamic_bitset<> active = inc_[static_cast<size_t>(contact[0])];
            for (int v : contact) active &= inc_[static_cast<size_t>(v)];
            std::vector<std::vector<int>> facet_tris;
            triangulate_face(vertices_, inc_, contact, active, n_ - 1, facet_tris);
            for (const auto& tri : facet_tris) {
                Simplex s;
                s.verts.reserve(static_cast<size_t>(n_) + 1);
                for (int v : tri) s.verts.push_back(vertices_[static_cast<size_t>(v)]);
                s.verts.push_back(center);
                c.tris.push_back(std::move(s));
            }
        }
    }
    c.volume = 0;
    RatVec weighted(n_);
    c.tri_vols.reserve(c.tris.size());
    for (const auto& t : c.tris) {
        Rat vol = simplex_volume(t);
        c.tri_vols.push_back(vol);
        c.volume += vol;
        RatVec mean(n_);
        for (const auto& v : t.verts) mean = mean + v;
        weighted = weighted + (vol / (n_ + 1)) * mean;
    }
    if (c.volume <= 0) throw InternalInconsistencyError("polytope with nonpositive volume");
    c.centroid = (Rat(1) / c.volume) * weighted;
}

const std::vector<Simplex>& Polytope::triangulation() const {
    std::call_once(cache_->once, [this] { build_cache(); });
    return cache_->tris;
}

const Rat& Polytope::volume() const {
    triangulation();
    return cache_->volume;
}

const RatVec& Polytope::centroid() const {
    triangulation();
    return cache_->centroid;
}

Rat Polytope::second_moment(const RatVec& c) const {
    if (c.dim() != n_) throw Error("center dimension mismatch");
    const auto& tris = triangulation();
    Rat total = 0;
    for (const auto& t : tris) total += simplex_second_moment(t, c, *metric_);
    return total;
}

MomentData Polytope::moments(const RatVec& c) const { return {volume(), second_moment(c)}; }

// ---------------------------------------------------------------------------
// Intersection
// ---------------------------------------------------------------------------

std::optional<Polytope> intersect(const Polytope& p, const Polytope& q) {
    if (p.dim() != q.dim()) throw Error("dimension mismatch");
    if (!(p.metric() == q.metric())) throw Error("metric mismatch");

    std::vector<Rat> plo, phi, qlo, qhi;
    p.bounding_box(plo, phi);
    q.bounding_box(qlo, qhi);
    for (int i = 0; i < p.dim(); ++i) {
        const Rat lo = std::max(plo[static_cast<size_t>(i)], qlo[static_cast<size_t>(i)]);
        const Rat hi = std::min(phi[static_cast<size_t>(i)], qhi[static_cast<size_t>(i)]);
        if (lo >= hi) return std::nullopt;  // at most measure-zero contact
    }

    PolyBuilder b = PolyBuilder::from_polytope(p);
    for (const auto& h : q.facets()) {
        auto st = b.clip(h);
        if (st == PolyBuilder::ClipStatus::Empty) return std::nullopt;
        if (st == PolyBuilder::ClipStatus::Clipped && !b.full_dimensional())
            return std::nullopt;
    }
    return std::move(b).finalize();
}

// ---------------------------------------------------------------------------
// Box recognition
// ---------------------------------------------------------------------------

BoxVerdict is_rectangular_box(const Polytope& p) {
    if (!p.is_zero_symmetric())
        throw NotCentrallySymmetricError("polytope is not symmetric about the origin");
    BoxVerdict v;
    const int n = p.dim();
    const auto& hs = p.facets();
    if (static_cast<int>(hs.size()) != 2 * n) {
        v.why_not = "facet count " + std::to_string(hs.size()) + " != 2n";
        return v;
    }
    // pair each facet with its exact opposite
    std::vector<char> used(hs.size(), 0);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t j = 0; j < hs.size(); ++j) {
        if (used[j]) continue;
        RatVec negf = -hs[j].functional;
        size_t mate = hs.size();
        for (size_t k = j + 1; k < hs.size(); ++k)
            if (!used[k] && hs[k].functional == negf && hs[k].offset == hs[j].offset) {
                mate = k;
                break;
            }
        if (mate == hs.size()) {
            v.why_not = "facets do not pair up under negation";
            return v;
        }
        used[j] = used[mate] = 1;
        pairs.emplace_back(j, mate);
    }
    // pull functionals back to directions d with <d, x>_G = functional . x
    struct Axis {
        RatVec dir;
        Rat semi_sq;
        int lead;
    };
    std::vector<Axis> axes;
    for (auto [j, k] : pairs) {
        // pick the representative with positive leading coefficient
        const HalfSpace& rep = [&]() -> const HalfSpace& {
            for (int i = 0; i < n; ++i) {
                if (hs[j].functional[i] > 0) return hs[j];
                if (hs[j].functional[i] != 0) return hs[k];
            }
            return hs[j];
        }();
        RatVec d = solve(p.metric(), rep.functional);
        Rat q = dot(rep.functional, d);  // Q_G(d)
        int lead = 0;
        while (lead < n && d[lead] == 0) ++lead;
        axes.push_back({std::move(d), rep.offset * rep.offset / q, lead});
    }
    for (size_t a = 0; a < axes.size(); ++a)
        for (size_t b = a + 1; b < axes.size(); ++b)
            if (dot(axes[a].dir, p.metric().mul(axes[b].dir)) != 0) {
                v.why_not = "facet directions are not pairwise orthogonal";
                return v;
            }
    std::sort(axes.begin(), axes.end(), [](const Axis& a, const Axis& b) {
        if (a.lead != b.lead) return a.lead < b.lead;
        return lex_less(a.dir, b.dir);
    });
    v.is_box = true;
    for (auto& ax : axes) {
        v.semi_axes_sq.push_back(std::move(ax.semi_sq));
        v.axes.push_back(std::move(ax.dir));
    }
    return v;
}

}  // namespace hlr
