// Exact convex polytopes in lattice coordinates.
//
// A polytope carries an irredundant H-representation, the complete vertex
// set, the vertex-facet incidence, and the Gram form of the owning lattice.
// All measures are coordinate Lebesgue measure: skipping the sqrt(det G)
// Jacobian keeps every quantity rational, and the factor cancels from every
// identity this project checks.

#pragma once

#include "hlr/exactnum.hpp"

#include <boost/dynamic_bitset.hpp>

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace hlr {

inline constexpr int kDefaultDimensionCap = 5;

// { x : functional . x <= offset }
struct HalfSpace {
    RatVec functional;
    Rat offset;

    bool operator==(const HalfSpace& o) const = default;
};

// Scales so the leading nonzero coefficient has absolute value 1. (Only
// positive scalings preserve the inequality, so the sign of the leading
// entry is geometric and stays.)
HalfSpace canonical_halfspace(HalfSpace h);

struct Simplex {
    std::vector<RatVec> verts;  // n+1 affinely independent points
};

struct MomentData {
    Rat volume;
    Rat second_moment;
};

class Polytope {
public:
    // Vertex enumeration over all n-subsets of facets.
    // Throws UnboundedError, LowerDimensionalError, DimensionCapError.
    static Polytope from_halfspaces(std::vector<HalfSpace> hs, RatMat metric,
                                    int cap = kDefaultDimensionCap);

    // Incremental construction: start from the box prod [-box_bound_i, box_bound_i]
    // and clip halfspaces one at a time. The box must contain the intersection.
    static Polytope from_halfspaces_boxed(std::vector<HalfSpace> hs, RatMat metric,
                                          const std::vector<Rat>& box_bound, int cap);

    int dim() const { return n_; }
    const RatMat& metric() const { return *metric_; }
    const std::vector<HalfSpace>& facets() const { return facets_; }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    // Facet indices incident to vertex i.
    const boost::dynamic_bitset<>& incident_facets(int vertex) const {
        return inc_[static_cast<size_t>(vertex)];
    }

    bool contains(const RatVec& x) const;
    bool contains_strictly(const RatVec& x) const;

    // Coordinate bounding box (from vertices).
    void bounding_box(std::vector<Rat>& lo, std::vector<Rat>& hi) const;

    Polytope translated(const RatVec& s) const;
    Polytope scaled_half() const;

    // Fan over the facets from the vertex centroid (a simplex is returned
    // as itself); cached after the first call.
    const std::vector<Simplex>& triangulation() const;
    const Rat& volume() const;
    const RatVec& centroid() const;
    // Exact integral of Q_G(x - c) over the polytope.
    Rat second_moment(const RatVec& c) const;
    MomentData moments(const RatVec& c) const;

    bool is_zero_symmetric() const;

    // Structural equality: canonical vertex sets agree (same metric assumed).
    bool same_polytope(const Polytope& o) const;

private:
    friend struct PolyBuilder;
    Polytope() = default;

    void build_cache() const;

    int n_ = 0;
    std::shared_ptr<const RatMat> metric_;
    std::vector<HalfSpace> facets_;
    std::vector<RatVec> vertices_;
    std::vector<boost::dynamic_bitset<>> inc_;

    struct Cache {
        std::once_flag once;
        std::vector<Simplex> tris;
        std::vector<Rat> tri_vols;
        Rat volume;
        RatVec centroid;
    };
    std::shared_ptr<Cache> cache_;
};

// Exact intersection; nullopt when the interior is empty (lower-dimensional
// contact counts as empty).
std::optional<Polytope> intersect(const Polytope& p, const Polytope& q);

// Exact volume and moment of a single simplex under the metric g.
Rat simplex_volume(const Simplex& s);
Rat simplex_second_moment(const Simplex& s, const RatVec& c, const RatMat& g);

struct BoxVerdict {
    bool is_box = false;
    std::vector<Rat> semi_axes_sq;  // ordered by leading coordinate of the axis
    std::vector<RatVec> axes;       // directions d with <d,x>_G = facet functional . x
    std::string why_not;            // set when !is_box
};

// Recognizes Voronoi cells that are rectangular boxes under the metric:
// exactly 2n facets in opposite pairs whose pulled-back directions are
// pairwise G-orthogonal. Throws NotCentrallySymmetricError if the input is
// not 0-symmetric.
BoxVerdict is_rectangular_box(const Polytope& p);

}  // namespace hlr
