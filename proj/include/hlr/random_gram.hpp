// Seeded random Gram matrices for batch runs and the test corpus.

#pragma once

#include "hlr/exactnum.hpp"

#include <random>

namespace hlr {

// G = B^T B with B entries uniform in {k/8 : -16 <= k <= 16}. Draws are
// rejected while det(G) < (1/100) * prod(G_ii), which screens out
// ill-conditioned forms that blow up enumeration.
RatMat random_gram(int n, std::mt19937_64& rng);

// diag(b_i^2) with b_i = k/8, k uniform in [4, 16]; the floor keeps the
// form comfortably positive definite even after small off-diagonal
// perturbations.
RatMat random_diagonal_gram(int n, std::mt19937_64& rng);

}  // namespace hlr
