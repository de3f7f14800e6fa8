// Voronoi cells, covering radii, deep holes and Delaunay cells.

#pragma once

#include "hlr/lattice.hpp"
#include "hlr/polytope.hpp"

#include <optional>
#include <vector>

namespace hlr {

// A point t with Q_G(t) = r_sq = dist^2(t, Z^n): as far from the lattice as
// it is long, so the origin is among its nearest lattice points.
struct DeepHole {
    RatVec t;
    Rat r_sq;
};

// conv of the lattice points on an empty sphere. The sphere is centered at
// -t for the deep hole t it was built from.
struct DelaunayCell {
    RatVec center;
    Rat r_sq;
    std::vector<LatticePoint> vertices;  // sorted lexicographically
};

// The Voronoi cell of the origin: all x with <x,v>_G <= Q_G(v)/2 for every
// relevant vector v. 0-symmetric with coordinate volume exactly 1.
Polytope voronoi_cell(const GramLattice& lat, int cap = kDefaultDimensionCap);

// Exact R^2 = max over cell vertices of Q_G(vertex).
Rat covering_radius_sq(const GramLattice& lat, int cap = kDefaultDimensionCap);
Rat covering_radius_sq(const GramLattice& lat, const Polytope& cell);

// All cell vertices attaining R^2, each cross-checked against CVP,
// sorted lexicographically.
std::vector<DeepHole> deep_holes(const GramLattice& lat, int cap = kDefaultDimensionCap);
std::vector<DeepHole> deep_holes(const GramLattice& lat, const Polytope& cell);

// The Delaunay cell whose circumsphere has radius ||t|| and center -t:
// vertices are every lattice point w with Q_G(w + t) = r_sq. Throws
// NotADeepHoleError if t fails its invariant.
DelaunayCell delaunay_cell_at(const GramLattice& lat, const DeepHole& t);

struct EmptySphereCheck {
    bool pass = false;
    std::optional<LatticePoint> witness;  // a strictly interior lattice point
};

// Passes iff no lattice point lies strictly inside the cell's sphere.
EmptySphereCheck verify_empty_sphere(const GramLattice& lat, const DelaunayCell& cell);

}  // namespace hlr
