// Floating-point Monte-Carlo cross-check of the exact volume and second
// moment. This is the only place in the project where floats appear.

#pragma once

#include "hlr/lattice.hpp"
#include "hlr/polytope.hpp"

#include <cstdint>

namespace hlr {

struct McResult {
    long long samples = 0;
    long long accepted = 0;
    double est_volume = 0;
    double est_moment = 0;
    double exact_volume = 0;
    double exact_moment = 0;
    double rel_dev_volume = 0;
    double rel_dev_moment = 0;
};

// Rejection sampling over the cell's coordinate bounding box.
McResult monte_carlo_check(const GramLattice& lat, const Polytope& cell, long long samples,
                           std::uint64_t seed);

}  // namespace hlr
