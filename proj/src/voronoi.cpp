#include "hlr/voronoi.hpp"

#include <algorithm>

namespace hlr {

Polytope voronoi_cell(const GramLattice& lat, int cap) {
    const int n = lat.dim();
    if (n > cap)
        throw DimensionCapError("dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
    std::vector<HalfSpace> hs;
    for (const LatticePoint& v : relevant_vectors(lat)) {
        HalfSpace h;
        h.functional = lat.gram().mul(v.to_vec());  // <x, v>_G
        h.offset = dot(h.functional, v.to_vec()) / 2;
        hs.push_back(std::move(h));
    }
    if (n <= 3) return Polytope::from_halfspaces(std::move(hs), lat.gram(), cap);

    // Incremental clipping from a box that provably contains the cell:
    // the cell sits inside the ball Q_G(x) <= sum(d_i)/4 (nearest-plane
    // bound), and Q_G(x) <= B implies x_i^2 <= B * (G^{-1})_ii.
    const Rat bound = lat.babai_radius_sq_bound();
    const RatMat ginv = inverse(lat.gram());
    std::vector<Rat> box;
    box.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) box.push_back(Rat(ceil_sqrt(bound * ginv.at(i, i))));
    return Polytope::from_halfspaces_boxed(std::move(hs), lat.gram(), box, cap);
}

Rat covering_radius_sq(const GramLattice& lat, const Polytope& cell) {
    Rat best = 0;
    for (const auto& v : cell.vertices()) {
        Rat q = lat.norm_sq(v);
        if (q > best) best = q;
    }
    return best;
}

Rat covering_radius_sq(const GramLattice& lat, int cap) {
    return covering_radius_sq(lat, voronoi_cell(lat, cap));
}

std::vector<DeepHole> deep_holes(const GramLattice& lat, const Polytope& cell) {
    const Rat r_sq = covering_radius_sq(lat, cell);
    std::vector<DeepHole> holes;
    for (const auto& v : cell.vertices()) {
        if (lat.norm_sq(v) != r_sq) continue;
        CvpResult cvp = closest_vectors(lat, v);
        if (cvp.dist_sq != r_sq)
            throw InternalInconsistencyError("cell vertex of maximal norm is not a deep hole");
        holes.push_back({v, r_sq});
    }
    // cell vertices are already sorted lexicographically
    return holes;
}

std::vector<DeepHole> deep_holes(const GramLattice& lat, int cap) {
    return deep_holes(lat, voronoi_cell(lat, cap));
}

DelaunayCell delaunay_cell_at(const GramLattice& lat, const DeepHole& t) {
    if (lat.norm_sq(t.t) != t.r_sq)
        throw NotADeepHoleError("Q_G(t) != r_sq");
    CvpResult at_t = closest_vectors(lat, t.t);
    if (at_t.dist_sq != t.r_sq)
        throw NotADeepHoleError("dist^2(t, lattice) != Q_G(t)");

    DelaunayCell cell;
    cell.center = -t.t;
    cell.r_sq = t.r_sq;
    CvpResult cvp = closest_vectors(lat, cell.center);
    if (cvp.dist_sq != t.r_sq)
        throw InternalInconsistencyError("distance to -t differs from distance to t");
    cell.vertices = std::move(cvp.minimizers);

    EmptySphereCheck check = verify_empty_sphere(lat, cell);
    if (!check.pass)
        throw InternalInconsistencyError("sphere around -t is not empty");
    return cell;
}

EmptySphereCheck verify_empty_sphere(const GramLattice& lat, const DelaunayCell& cell) {
    EmptySphereCheck res;
    for (const LatticePoint& w : enumerate_in_ball(lat, cell.center, cell.r_sq)) {
        if (lat.norm_sq(w.to_vec() - cell.center) < cell.r_sq) {
            res.pass = false;
            res.witness = w;
            return res;
        }
    }
    res.pass = true;
    return res;
}

}  // namespace hlr
