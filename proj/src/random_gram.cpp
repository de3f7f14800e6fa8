#include "hlr/random_gram.hpp"

namespace hlr {

RatMat random_gram(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-16, 16);
    for (;;) {
        RatMat b(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b.at(i, j) = Rat(entry(rng), 8);
        RatMat g = b.transposed().mul(b);
        Rat d = det(g);
        Rat diag_prod = 1;
        for (int i = 0; i < n; ++i) diag_prod *= g.at(i, i);
        if (diag_prod == 0 || d < diag_prod / 100) continue;
        return g;
    }
}

RatMat random_diagonal_gram(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(4, 16);
    RatMat g(n, n);
    for (int i = 0; i < n; ++i) {
        Rat b(entry(rng), 8);
        g.at(i, i) = b * b;
    }
    return g;
}

}  // namespace hlr
