#include "hlr/exactnum.hpp"

#include <doctest.h>

#include <random>

using namespace hlr;

namespace {

RatMat mat2(Rat a, Rat b, Rat c, Rat d) {
    RatMat m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

// random symmetric PD matrix, entries in (1/8)Z within [-10, 10],
// via diagonal dominance
RatMat random_spd(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> off(-8, 8), diag(1, 16);
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m.at(i, j) = Rat(off(rng), 8);
            m.at(j, i) = m.at(i, j);
        }
    for (int i = 0; i < n; ++i) {
        Rat row_sum = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) row_sum += abs(m.at(i, j));
        m.at(i, i) = row_sum + Rat(diag(rng), 8);
    }
    return m;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
    Rat r = parse_rat("6/-8");  // InputError? no: gmp parses the sign in den
    // parse_rat splits on '/', so the denominator sign is normalized away
    CHECK(to_string(r) == "-3/4");
    CHECK(numerator(r) == -3);
    CHECK(denominator(r) == 4);
    CHECK(to_string(parse_rat("4/2")) == "2");
    CHECK(to_string(parse_rat("-7")) == "-7");
    CHECK(parse_rat("1/3") + parse_rat("1/6") == Rat(1, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), InputError);
    CHECK_THROWS_AS(parse_rat("x"), InputError);
    CHECK_THROWS_AS(parse_rat(""), InputError);
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(Rat(5, 4)) == "1.250000000000");
    CHECK(decimal_string(Rat(1, 3), 6) == "0.333333");
    CHECK(decimal_string(Rat(2, 3), 6) == "0.666667");
    CHECK(decimal_string(Rat(-1, 3), 6) == "-0.333333");
    CHECK(decimal_string(Rat(0)) == "0.000000000000");
}

TEST_CASE("floor / ceil / round / sqrt helpers") {
    CHECK(floor_rat(Rat(7, 2)) == 3);
    CHECK(floor_rat(Rat(-7, 2)) == -4);
    CHECK(ceil_rat(Rat(7, 2)) == 4);
    CHECK(ceil_rat(Rat(-7, 2)) == -3);
    CHECK(round_rat(Rat(5, 2)) == 3);  // ties go up
    CHECK(round_rat(Rat(-5, 2)) == -2);
    CHECK(round_rat(Rat(2, 5)) == 0);
    CHECK(floor_sqrt(Rat(10)) == 3);
    CHECK(floor_sqrt(Rat(9)) == 3);
    CHECK(floor_sqrt(Rat(35, 4)) == 2);  // 8.75
    CHECK(ceil_sqrt(Rat(9)) == 3);
    CHECK(ceil_sqrt(Rat(10)) == 4);
}

TEST_CASE("ldl of the identity") {
    auto ldl = ldl_decompose(RatMat::identity(2));
    CHECK(ldl.l == RatMat::identity(2));
    CHECK(ldl.d == RatMat::identity(2));
}

TEST_CASE("ldl of the hexagonal gram matrix") {
    auto ldl = ldl_decompose(mat2(1, Rat(1, 2), Rat(1, 2), 1));
    CHECK(ldl.l.at(1, 0) == Rat(1, 2));
    CHECK(ldl.d.at(0, 0) == 1);
    CHECK(ldl.d.at(1, 1) == Rat(3, 4));
}

TEST_CASE("ldl rejects invalid forms") {
    CHECK_THROWS_AS(ldl_decompose(mat2(1, 2, 2, 1)), NotPositiveDefiniteError);
    CHECK_THROWS_AS(ldl_decompose(mat2(1, 2, 3, 1)), NotSymmetricError);
    CHECK_THROWS_AS(ldl_decompose(mat2(0, 1, 1, 0)), NotPositiveDefiniteError);
}

TEST_CASE("ldl round-trip on 100 random SPD matrices") {
    std::mt19937_64 rng(20240517);
    for (int it = 0; it < 100; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);  // 2..5
        RatMat g = random_spd(n, rng);
        auto ldl = ldl_decompose(g);
        CHECK(ldl.l.mul(ldl.d).mul(ldl.l.transposed()) == g);
        Rat prod = 1;
        for (int i = 0; i < n; ++i) {
            CHECK(ldl.d.at(i, i) > 0);
            CHECK(ldl.l.at(i, i) == 1);
            for (int j = i + 1; j < n; ++j) CHECK(ldl.l.at(i, j) == 0);
            prod *= ldl.d.at(i, i);
        }
        CHECK(det(g) == prod);
    }
}

TEST_CASE("determinants") {
    CHECK(det(RatMat::identity(4)) == 1);
    CHECK(det(RatMat::diagonal({Rat(1), Rat(4)})) == 4);
    CHECK(det(mat2(1, Rat(1, 2), Rat(1, 2), 1)) == Rat(3, 4));
    CHECK(det(mat2(1, 2, 2, 4)) == 0);
    CHECK(det(mat2(0, 1, 1, 0)) == -1);  // needs the row swap
}

TEST_CASE("solve") {
    RatVec b{Rat(2), Rat(1)};
    CHECK(solve(RatMat::identity(2), b) == b);
    CHECK(solve(RatMat::diagonal({Rat(2), Rat(2)}), RatVec{Rat(1), Rat(1)}) ==
          RatVec{Rat(1, 2), Rat(1, 2)});
    CHECK(solve(mat2(1, 1, 0, 1), RatVec{Rat(2), Rat(1)}) == RatVec{Rat(1), Rat(1)});
    CHECK_THROWS_AS(solve(mat2(1, 2, 2, 4), b), SingularError);
}

TEST_CASE("inverse and rank") {
    RatMat g = mat2(1, Rat(1, 2), Rat(1, 2), 1);
    CHECK(g.mul(inverse(g)) == RatMat::identity(2));
    CHECK(rank({RatVec{Rat(1), Rat(0)}, RatVec{Rat(2), Rat(0)}}) == 1);
    CHECK(rank({RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)}}) == 2);
    CHECK(affine_rank({RatVec{Rat(1), Rat(1)}}) == 0);
    CHECK(affine_rank({RatVec{Rat(0), Rat(0)}, RatVec{Rat(1), Rat(0)}, RatVec{Rat(2), Rat(0)}}) ==
          1);
    CHECK(affine_rank({RatVec{Rat(0), Rat(0)}, RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)}}) ==
          2);
}
