#include "hlr/verify.hpp"

#include <algorithm>
#include <chrono>

namespace hlr {

bool ProofReport::all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const EqRecord& r) { return r.pass; });
}

// ---------------------------------------------------------------------------
// Pieces
// ---------------------------------------------------------------------------

static bool symmetric_about(const Polytope& p, const RatVec& c) {
    const RatVec c2 = Rat(2) * c;
    for (const auto& v : p.vertices()) {
        RatVec mirror = c2 - v;
        if (!std::binary_search(p.vertices().begin(), p.vertices().end(), mirror, lex_less))
            return false;
    }
    return true;
}

std::vector<TessellationPiece> tessellation_pieces(const GramLattice& lat, const Polytope& cell,
                                                   const DeepHole& t) {
    const Rat& r_sq = t.r_sq;
    const Rat half(1, 2);
    std::vector<TessellationPiece> pieces;

    // Any v with a positive-volume piece satisfies Q_G(v + t) <= (2R)^2,
    // since both cells have circumradius R; the net uses (3R)^2 as slack.
    for (const LatticePoint& vp : enumerate_in_ball(lat, -t.t, 9 * r_sq)) {
        RatVec shift = t.t + vp.to_vec();
        if (lat.norm_sq(shift) > 4 * r_sq) continue;
        RatVec center = half * shift;
        std::optional<Polytope> region = intersect(cell, cell.translated(shift));
        // the piece has positive volume exactly when its symmetry center is
        // interior to the cell
        if (region.has_value() != cell.contains_strictly(center))
            throw InternalInconsistencyError("piece volume / interior-center dichotomy failed");
        if (!region) continue;
        if (!symmetric_about(*region, center))
            throw InternalInconsistencyError("piece is not symmetric about (t+v)/2");
        Rat vol = region->volume();
        Rat m0 = region->second_moment(RatVec(lat.dim()));
        Rat mc = region->second_moment(center);
        pieces.push_back(TessellationPiece{vp, std::move(*region), std::move(center),
                                           std::move(vol), std::move(m0), std::move(mc)});
    }

    // interiors of distinct pieces lie in distinct cosets mod 2Z^n
    std::vector<std::vector<Int>> parities;
    for (const auto& p : pieces) {
        std::vector<Int> par;
        for (const Int& x : p.v.c) par.push_back(((x % 2) + 2) % 2);
        parities.push_back(std::move(par));
    }
    std::sort(parities.begin(), parities.end());
    if (std::adjacent_find(parities.begin(), parities.end()) != parities.end())
        throw InternalInconsistencyError("two pieces share a coset mod 2");
    return pieces;
}

// ---------------------------------------------------------------------------
// Individual identities
// ---------------------------------------------------------------------------

EqRecord verify_eq1(const Polytope& cell, const std::vector<TessellationPiece>& pieces) {
    Rat vol_sum = 0, moment_sum = 0;
    for (const auto& p : pieces) {
        vol_sum += p.volume;
        moment_sum += p.moment_origin;
    }
    if (vol_sum != cell.volume())
        throw IncompletePiecesError("piece volumes sum to " + to_string(vol_sum) +
                                    ", cell volume is " + to_string(cell.volume()));
    EqRecord rec;
    rec.eq = "Eq1";
    rec.lhs = cell.second_moment(RatVec(cell.dim()));
    rec.rhs = moment_sum;
    rec.relation = "=";
    rec.pass = rec.lhs == rec.rhs;
    return rec;
}

Eq2Check verify_eq2(const GramLattice& lat, const TessellationPiece& piece) {
    if (!symmetric_about(piece.region, piece.center))
        throw NotCentrallySymmetricError("piece is not symmetric about its center");
    Eq2Check check;
    check.lhs = piece.moment_origin;
    check.rhs = lat.norm_sq(piece.center) * piece.volume + piece.moment_center;
    // int_Q <c, x - c> dx = vol * <c, centroid - c>
    check.cross_term =
        piece.volume * lat.inner(piece.center, piece.region.centroid() - piece.center);
    check.pass = check.lhs == check.rhs && check.cross_term == 0;
    return check;
}

EqRecord verify_eq5(const GramLattice& lat, const DeepHole& t) {
    EqRecord rec;
    rec.eq = "Eq5";
    // min_v Q_G((t+v)/2) = dist^2(-t, lattice) / 4
    rec.lhs = closest_vectors(lat, -t.t).dist_sq / 4;
    rec.rhs = lat.norm_sq(t.t) / 4;
    rec.relation = "=";
    rec.pass = rec.lhs == rec.rhs;
    return rec;
}

Rat half_lattice_distance_integral(const GramLattice& lat, const Polytope& cell,
                                   const DeepHole& t) {
    const Rat& r_sq = t.r_sq;
    const Rat half(1, 2);
    const Polytope half_cell = cell.scaled_half();

    // Nearest points of (1/2)L + t/2 to points of the cell lie within
    // 3R/2 of the origin: enumerate u with Q_G(u + t) <= 9 R^2.
    Rat total = 0, vol_sum = 0;
    for (const LatticePoint& u : enumerate_in_ball(lat, -t.t, 9 * r_sq)) {
        RatVec p = half * (u.to_vec() + t.t);
        std::optional<Polytope> piece = intersect(cell, half_cell.translated(p));
        if (!piece) continue;
        total += piece->second_moment(p);
        vol_sum += piece->volume();
    }
    if (vol_sum != cell.volume())
        throw InternalInconsistencyError("half-lattice cells do not partition the cell");
    return total;
}

EqRecord verify_eq3_aggregate(const std::vector<TessellationPiece>& pieces,
                              const GramLattice& lat, const DeepHole& t,
                              const Rat& half_integral) {
    EqRecord rec;
    rec.eq = "Eq3agg";
    rec.lhs = 0;
    for (const auto& p : pieces) rec.lhs += p.moment_center;
    rec.rhs = half_integral;
    rec.relation = ">=";
    bool pointwise = true;
    // spot-check the pointwise bound at every piece vertex:
    //   Q_G(x - (t+v)/2) >= dist^2(x, (1/2)L + t/2) = dist^2(2x - t, L) / 4
    for (const auto& p : pieces) {
        for (const auto& x : p.region.vertices()) {
            Rat lhs_pt = lat.norm_sq(x - p.center);
            Rat rhs_pt = closest_vectors(lat, Rat(2) * x - t.t).dist_sq / 4;
            if (lhs_pt < rhs_pt) { pointwise = false; break; }
        }
        if (!pointwise) break;
    }
    rec.pass = rec.lhs >= rec.rhs && pointwise;
    return rec;
}

// ---------------------------------------------------------------------------
// Obtuseness and box checks
// ---------------------------------------------------------------------------

NonObtuseCheck check_nonobtuse(const std::vector<RatVec>& points, const RatMat& g) {
    NonObtuseCheck res;
    const int k = static_cast<int>(points.size());
    for (int l = 0; l < k; ++l)
        for (int i = 0; i < k; ++i) {
            if (i == l) continue;
            const RatVec a = points[static_cast<size_t>(i)] - points[static_cast<size_t>(l)];
            const RatVec ga = g.mul(a);
            for (int j = i + 1; j < k; ++j) {
                if (j == l) continue;
                if (dot(ga, points[static_cast<size_t>(j)] - points[static_cast<size_t>(l)]) < 0) {
                    res.pass = false;
                    res.witness = {i, j, l};
                    return res;
                }
            }
        }
    return res;
}

BoxSetVerdict check_box_vertexset(const std::vector<RatVec>& points, const RatMat& g) {
    const int n = g.rows;
    BoxSetVerdict v;
    std::vector<RatVec> sorted = points;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw WrongCardinalityError("points are not pairwise distinct");
    if (sorted.size() != (static_cast<size_t>(1) << n))
        throw WrongCardinalityError("expected 2^n points, got " + std::to_string(sorted.size()));

    const RatVec& base = sorted[0];
    struct Diff {
        RatVec d;
        Rat q;
    };
    std::vector<Diff> diffs;
    for (size_t i = 1; i < sorted.size(); ++i) {
        RatVec d = sorted[i] - base;
        Rat q = dot(d, g.mul(d));
        diffs.push_back({std::move(d), std::move(q)});
    }
    std::sort(diffs.begin(), diffs.end(), [](const Diff& a, const Diff& b) {
        if (a.q != b.q) return a.q < b.q;
        return lex_less(a.d, b.d);
    });

    // In a box, the shortest difference orthogonal to the edges found so
    // far is always the next edge.
    std::vector<RatVec> edges;
    for (const Diff& cand : diffs) {
        bool ortho = true;
        for (const RatVec& e : edges)
            if (dot(e, g.mul(cand.d)) != 0) { ortho = false; break; }
        if (!ortho) continue;
        edges.push_back(cand.d);
        if (static_cast<int>(edges.size()) == n) break;
    }
    if (static_cast<int>(edges.size()) < n) {
        v.why_not = "fewer than n pairwise orthogonal edges";
        return v;
    }
    std::vector<RatVec> rebuilt;
    for (size_t mask = 0; mask < (static_cast<size_t>(1) << n); ++mask) {
        RatVec p = base;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) p = p + edges[static_cast<size_t>(i)];
        rebuilt.push_back(std::move(p));
    }
    std::sort(rebuilt.begin(), rebuilt.end(), lex_less);
    if (rebuilt != sorted) {
        v.why_not = "sign combinations do not reproduce the point set";
        return v;
    }
    v.is_box = true;
    v.edges = std::move(edges);
    return v;
}

// ---------------------------------------------------------------------------
// The full chain
// ---------------------------------------------------------------------------

namespace {

struct HoleRun {
    std::vector<EqRecord> records;
    EqualityVerdict verdict;
    std::size_t k = 0;
    Rat inf_lattice;
    Rat inf_pieces;
};

HoleRun run_chain(const GramLattice& lat, const Polytope& cell, const DeepHole& hole,
                  const Rat& volume, const Rat& moment) {
    HoleRun run;
    const int n = lat.dim();
    const std::size_t two_n = static_cast<size_t>(1) << n;

    std::vector<TessellationPiece> pieces = tessellation_pieces(lat, cell, hole);
    run.k = pieces.size();

    run.records.push_back(verify_eq1(cell, pieces));

    EqRecord eq2{"Eq2", Rat(0), Rat(0), "=", true};
    for (const auto& p : pieces) {
        Eq2Check c = verify_eq2(lat, p);
        eq2.lhs += c.lhs;
        eq2.rhs += c.rhs;
        eq2.pass = eq2.pass && c.pass;
    }
    eq2.pass = eq2.pass && eq2.lhs == eq2.rhs;
    run.records.push_back(std::move(eq2));

    const Rat half_integral = half_lattice_distance_integral(lat, cell, hole);
    run.records.push_back(verify_eq3_aggregate(pieces, lat, hole, half_integral));

    run.inf_lattice = closest_vectors(lat, -hole.t).dist_sq / 4;
    run.inf_pieces = lat.norm_sq(hole.t + pieces[0].v.to_vec()) / 4;
    for (const auto& p : pieces) {
        Rat q = lat.norm_sq(hole.t + p.v.to_vec()) / 4;
        if (q < run.inf_pieces) run.inf_pieces = q;
    }

    EqRecord eq4{"Eq4", moment, volume * run.inf_lattice + half_integral, ">=", false};
    eq4.pass = eq4.lhs >= eq4.rhs;
    run.records.push_back(std::move(eq4));

    run.records.push_back(verify_eq5(lat, hole));

    EqRecord eq7{"Eq7", half_integral, moment / 4, "=", false};
    eq7.pass = eq7.lhs == eq7.rhs;
    run.records.push_back(std::move(eq7));

    EqRecord main_rec{"Main", 3 * moment, hole.r_sq * volume, ">=", false};
    main_rec.pass = main_rec.lhs >= main_rec.rhs;
    run.records.push_back(std::move(main_rec));

    // --- equality chain ---
    const Polytope half_cell = cell.scaled_half();
    std::string first_fail;
    auto fail = [&](const std::string& name) {
        if (first_fail.empty()) first_fail = name;
    };

    for (const auto& p : pieces) {
        const Polytope target = half_cell.translated(p.center);
        bool included = true;
        for (const auto& x : p.region.vertices())
            if (!target.contains(x)) { included = false; break; }
        if (!included) { fail("eq9_inclusion"); break; }
    }
    if (run.k != two_n) fail("piece_count_2n");
    if (first_fail.empty()) {
        for (const auto& p : pieces) {
            if (!p.region.same_polytope(half_cell.translated(p.center))) {
                fail("eq9_equality");
                break;
            }
        }
    }
    for (const auto& p : pieces)
        if (lat.norm_sq(hole.t + p.v.to_vec()) != hole.r_sq) { fail("eq10_norm"); break; }

    // Delaunay cell at the deep hole; its construction certifies the sphere
    // is empty, and non-obtuseness must hold for any Delaunay cell.
    DelaunayCell dc = delaunay_cell_at(lat, hole);
    std::vector<RatVec> dc_points;
    dc_points.reserve(dc.vertices.size());
    for (const auto& w : dc.vertices) dc_points.push_back(w.to_vec());
    if (!check_nonobtuse(dc_points, lat.gram()).pass)
        throw InternalInconsistencyError("Delaunay cell spans an obtuse triangle");

    if (dc.vertices.size() != two_n) {
        fail("delaunay_vertex_count_2n");
    } else if (!check_box_vertexset(dc_points, lat.gram()).is_box) {
        fail("delaunay_box");
    }
    BoxVerdict cell_box = is_rectangular_box(cell);
    if (!cell_box.is_box) fail("cell_box");

    const Rat gap = moment - hole.r_sq * volume / 3;
    if (first_fail.empty()) {
        if (gap != 0)
            throw InternalInconsistencyError("equality chain passed but the gap is " +
                                             to_string(gap));
        run.verdict.type = EqualityVerdict::Type::Equality;
        run.verdict.semi_axes_sq = cell_box.semi_axes_sq;
        run.verdict.k = run.k;
        run.verdict.delaunay_vertices = dc.vertices;
        run.verdict.gap = 0;
    } else {
        if (gap <= 0)
            throw InternalInconsistencyError("equality chain failed at " + first_fail +
                                             " but the gap is " + to_string(gap));
        run.verdict.type = EqualityVerdict::Type::Strict;
        run.verdict.gap = gap;
        run.verdict.first_fail = first_fail;
        run.verdict.k = run.k;
    }
    return run;
}

}  // namespace

ProofReport verify_main(const GramLattice& lat, const VerifyOptions& opts,
                        const std::string& name) {
    const auto t0 = std::chrono::steady_clock::now();
    ProofReport rep;
    rep.name = name;
    rep.n = lat.dim();
    rep.gram = lat.gram();

    const Polytope cell = voronoi_cell(lat, opts.cap);
    rep.r_sq = covering_radius_sq(lat, cell);
    rep.volume = cell.volume();
    rep.second_moment = cell.second_moment(RatVec(lat.dim()));

    const std::vector<DeepHole> holes = deep_holes(lat, cell);
    if (holes.empty()) throw InternalInconsistencyError("no deep holes found");
    rep.deep_hole = holes[0].t;
    rep.holes_swept = opts.all_deep_holes ? static_cast<int>(holes.size()) : 1;

    HoleRun first = run_chain(lat, cell, holes[0], rep.volume, rep.second_moment);
    rep.k = first.k;
    rep.records = std::move(first.records);
    rep.inf_half_shift_sq_lattice = first.inf_lattice;
    rep.inf_half_shift_sq_pieces = first.inf_pieces;
    rep.verdict = std::move(first.verdict);

    for (int h = 1; h < rep.holes_swept; ++h) {
        HoleRun other = run_chain(lat, cell, holes[static_cast<size_t>(h)], rep.volume,
                                  rep.second_moment);
        if (other.verdict.type != rep.verdict.type)
            throw InternalInconsistencyError("verdict differs between deep holes");
        for (const auto& r : other.records)
            if (!r.pass)
                throw InternalInconsistencyError("record " + r.eq + " fails at deep hole " +
                                                 std::to_string(h));
    }

    rep.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

EqualityVerdict classify_equality(const GramLattice& lat, const VerifyOptions& opts) {
    return verify_main(lat, opts).verdict;
}

}  // namespace hlr
