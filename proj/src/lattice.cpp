#include "hlr/lattice.hpp"

#include <algorithm>

namespace hlr {

RatVec LatticePoint::to_vec() const {
    RatVec v(dim());
    for (int i = 0; i < dim(); ++i) v[i] = Rat(c[static_cast<size_t>(i)]);
    return v;
}

LatticePoint LatticePoint::negated() const {
    LatticePoint p = *this;
    for (auto& x : p.c) x = -x;
    return p;
}

GramLattice::GramLattice(RatMat gram) : n_(gram.rows), g_(std::move(gram)) {
    if (n_ < 1) throw Error("lattice dimension must be >= 1");
    LdlResult ldl = ldl_decompose(g_);  // validates symmetry + positive definiteness
    l_ = std::move(ldl.l);
    d_.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) d_.push_back(ldl.d.at(i, i));
}

Rat GramLattice::inner(const RatVec& x, const RatVec& y) const {
    return dot(x, g_.mul(y));
}

Rat GramLattice::norm_sq(const RatVec& x) const { return inner(x, x); }

Rat GramLattice::babai_radius_sq_bound() const {
    Rat s = 0;
    for (const Rat& di : d_) s += di;
    return s / 4;
}

// ---------------------------------------------------------------------------
// Enumeration engine
// ---------------------------------------------------------------------------
//
// With G = L D L^T and y = w - center, Q_G(y) = sum_i d_i z_i^2 where
// z_i = y_i + sum_{j>i} L(j,i) y_j. Fixing w_{i+1..n-1} makes z_i an affine
// function of w_i alone, so levels are processed from n-1 down to 0 and the
// feasible w_i at each level form an integer interval that is scanned
// outward from its center. All comparisons are exact, so no point on the
// boundary of the ball can be missed.

namespace {

struct Enumerator {
    const GramLattice& lat;
    const RatVec& center;
    Rat bound;  // callers may shrink via the leaf callback
    std::function<void(const std::vector<Int>&, const Rat&)> leaf;

    int n;
    std::vector<Int> w;
    std::vector<Rat> y;  // y_j = w_j - center_j for fixed levels

    void run() {
        n = lat.dim();
        w.assign(static_cast<size_t>(n), Int(0));
        y.assign(static_cast<size_t>(n), Rat(0));
        if (bound < 0) return;
        descend(n - 1, Rat(0));
    }

    void descend(int i, const Rat& partial) {
        if (i < 0) {
            leaf(w, partial);
            return;
        }
        const RatMat& l = lat.ldl_l();
        const Rat& di = lat.ldl_d()[static_cast<size_t>(i)];
        Rat s = 0;
        for (int j = i + 1; j < n; ++j)
            if (l.at(j, i) != 0) s += l.at(j, i) * y[static_cast<size_t>(j)];
        // cost of this level: d_i * (w_i - mu)^2
        const Rat mu = center[i] - s;
        const Int m0 = round_rat(mu);
        for (Int wi = m0;; ++wi) {
            Rat z = Rat(wi) - mu;
            Rat cost = partial + di * z * z;
            if (cost > bound) break;
            place(i, wi, cost);
        }
        for (Int wi = m0 - 1;; --wi) {
            Rat z = Rat(wi) - mu;
            Rat cost = partial + di * z * z;
            if (cost > bound) break;
            place(i, wi, cost);
        }
    }

    void place(int i, const Int& wi, const Rat& cost) {
        w[static_cast<size_t>(i)] = wi;
        y[static_cast<size_t>(i)] = Rat(wi) - center[i];
        descend(i - 1, cost);
    }
};

}  // namespace

CvpResult closest_vectors(const GramLattice& lat, const RatVec& target) {
    if (target.dim() != lat.dim()) throw Error("target dimension mismatch");
    // Babai rounding gives the initial (attained) search radius.
    RatVec rounded(lat.dim());
    for (int i = 0; i < lat.dim(); ++i) rounded[i] = Rat(round_rat(target[i]));
    Rat best = lat.norm_sq(rounded - target);

    CvpResult res;
    res.dist_sq = best;
    Enumerator e{lat, target, best, nullptr, 0, {}, {}};
    e.leaf = [&](const std::vector<Int>& w, const Rat& q) {
        if (q < res.dist_sq) {
            res.dist_sq = q;
            e.bound = q;  // shrink; paths that tie the new bound stay alive
            res.minimizers.clear();
            res.minimizers.emplace_back(w);
        } else if (q == res.dist_sq) {
            res.minimizers.emplace_back(w);
        }
    };
    e.run();
    std::sort(res.minimizers.begin(), res.minimizers.end());
    res.minimizers.erase(std::unique(res.minimizers.begin(), res.minimizers.end()),
                         res.minimizers.end());
    return res;
}

std::vector<LatticePoint> enumerate_in_ball(const GramLattice& lat, const RatVec& center,
                                            const Rat& r_sq) {
    if (center.dim() != lat.dim()) throw Error("center dimension mismatch");
    std::vector<LatticePoint> out;
    Enumerator e{lat, center, r_sq, nullptr, 0, {}, {}};
    e.leaf = [&](const std::vector<Int>& w, const Rat&) { out.emplace_back(w); };
    e.run();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticePoint> relevant_vectors(const GramLattice& lat) {
    const int n = lat.dim();
    std::vector<LatticePoint> out;
    // v != 0 is relevant iff +-v are the only minimizers of Q_G over
    // v + 2Z^n. Writing v = c + 2u reduces each coset c to a CVP instance
    // at -c/2: Q_G(c + 2u) = 4 Q_G(u + c/2).
    std::vector<Int> c(static_cast<size_t>(n), Int(0));
    for (;;) {
        int i = 0;
        while (i < n && c[static_cast<size_t>(i)] == 1) {
            c[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == n) break;
        c[static_cast<size_t>(i)] = 1;

        RatVec target(n);
        for (int j = 0; j < n; ++j) target[j] = Rat(-c[static_cast<size_t>(j)], 2);
        CvpResult cvp = closest_vectors(lat, target);
        if (cvp.minimizers.size() != 2) continue;
        for (const LatticePoint& u : cvp.minimizers) {
            LatticePoint v;
            v.c.reserve(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j)
                v.c.push_back(c[static_cast<size_t>(j)] + 2 * u.c[static_cast<size_t>(j)]);
            out.push_back(std::move(v));
        }
        if (out[out.size() - 1] != out[out.size() - 2].negated())
            throw InternalInconsistencyError("coset minimizers are not a +- pair");
    }
    std::sort(out.begin(), out.end());
    return out;
}

CosetSystem coset_system(const GramLattice& lat) {
    const int n = lat.dim();
    CosetSystem cs;
    cs.reps.reserve(static_cast<size_t>(1) << n);
    std::vector<Int> c(static_cast<size_t>(n), Int(0));
    for (;;) {
        cs.reps.emplace_back(c);
        int i = n - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == 1) {
            c[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        c[static_cast<size_t>(i)] = 1;
    }
    std::sort(cs.reps.begin(), cs.reps.end());
    return cs;
}

}  // namespace hlr
