// Lattices given by a rational Gram matrix.
//
// Lattice points are the integer coordinate vectors Z^n; the geometry comes
// from the quadratic form Q_G(x) = x^T G x. Using the Gram matrix instead of
// an embedded basis keeps every quantity rational even for lattices whose
// natural embeddings are irrational (hexagonal, fcc, ...).

#pragma once

#include "hlr/exactnum.hpp"

#include <functional>
#include <vector>

namespace hlr {

struct LatticePoint {
    std::vector<Int> c;

    LatticePoint() = default;
    explicit LatticePoint(std::vector<Int> v) : c(std::move(v)) {}
    LatticePoint(std::initializer_list<Int> init) : c(init) {}

    int dim() const { return static_cast<int>(c.size()); }
    bool operator==(const LatticePoint& o) const = default;
    bool operator<(const LatticePoint& o) const {
        return std::lexicographical_compare(c.begin(), c.end(), o.c.begin(), o.c.end());
    }

    RatVec to_vec() const;
    LatticePoint negated() const;
};

struct CosetSystem {
    std::vector<LatticePoint> reps;  // 2^n vectors with {0,1} coordinates
};

class GramLattice {
public:
    // Validates the form; throws NotSymmetricError / NotPositiveDefiniteError.
    explicit GramLattice(RatMat gram);

    int dim() const { return n_; }
    const RatMat& gram() const { return g_; }

    Rat inner(const RatVec& x, const RatVec& y) const;  // x^T G y
    Rat norm_sq(const RatVec& x) const;                 // Q_G(x)

    // Cached LDL factors of G (L unit lower triangular, d the pivots).
    const RatMat& ldl_l() const { return l_; }
    const std::vector<Rat>& ldl_d() const { return d_; }

    // Covering radius upper bound (nearest-plane argument): sum(d)/4.
    Rat babai_radius_sq_bound() const;

private:
    int n_;
    RatMat g_;
    RatMat l_;
    std::vector<Rat> d_;
};

struct CvpResult {
    Rat dist_sq;
    std::vector<LatticePoint> minimizers;  // complete, sorted lexicographically
};

// Exact closest-vector enumeration seeded with the Babai rounding bound.
// Returns the squared distance and every lattice point attaining it.
CvpResult closest_vectors(const GramLattice& lat, const RatVec& target);

// All w in Z^n with Q_G(w - center) <= r_sq, sorted lexicographically.
std::vector<LatticePoint> enumerate_in_ball(const GramLattice& lat, const RatVec& center,
                                            const Rat& r_sq);

// Facet normals of the Voronoi cell of 0: nonzero v such that +-v are the
// unique minimizers of Q_G over the coset v + 2Z^n. Closed under negation,
// sorted lexicographically.
std::vector<LatticePoint> relevant_vectors(const GramLattice& lat);

// The 2^n coset representatives of Z^n / 2Z^n, i.e. {0,1}^n in
// lexicographic order.
CosetSystem coset_system(const GramLattice& lat);

}  // namespace hlr
