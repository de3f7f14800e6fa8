#include "hlr/polytope.hpp"

#include <doctest.h>

#include <random>

#include "hlr/random_gram.hpp"
#include "hlr/voronoi.hpp"
#include "oracles.hpp"

using namespace hlr;

namespace {

HalfSpace hs(std::initializer_list<Rat> f, Rat b) { return {RatVec(f), std::move(b)}; }

std::vector<HalfSpace> square_halfspaces(Rat r) {
    return {hs({Rat(1), Rat(0)}, r), hs({Rat(-1), Rat(0)}, r), hs({Rat(0), Rat(1)}, r),
            hs({Rat(0), Rat(-1)}, r)};
}

RatMat a2_gram() {
    RatMat g(2, 2);
    g.at(0, 0) = 1;
    g.at(0, 1) = Rat(1, 2);
    g.at(1, 0) = Rat(1, 2);
    g.at(1, 1) = 1;
    return g;
}

// the six bisector halfspaces of the hexagonal cell
std::vector<HalfSpace> hexagon_halfspaces() {
    RatMat g = a2_gram();
    std::vector<HalfSpace> out;
    const int dirs[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
    for (auto& d : dirs) {
        RatVec v{Rat(d[0]), Rat(d[1])};
        HalfSpace h;
        h.functional = g.mul(v);
        h.offset = dot(h.functional, v) / 2;
        out.push_back(std::move(h));
    }
    return out;
}

RatMat random_spd2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> off(-8, 8), diag(1, 16);
    RatMat m(2, 2);
    m.at(0, 1) = Rat(off(rng), 8);
    m.at(1, 0) = m.at(0, 1);
    m.at(0, 0) = abs(m.at(0, 1)) + Rat(diag(rng), 8);
    m.at(1, 1) = abs(m.at(0, 1)) + Rat(diag(rng), 8);
    return m;
}

}  // namespace

// The per-simplex moment formula is validated against iterated integration
// before anything else relies on it.
TEST_CASE("simplex second moment matches iterated integration") {
    SUBCASE("unit right triangle about the origin") {
        Simplex t{{RatVec{Rat(0), Rat(0)}, RatVec{Rat(1), Rat(0)}, RatVec{Rat(0), Rat(1)}}};
        CHECK(simplex_second_moment(t, RatVec(2), RatMat::identity(2)) == Rat(1, 6));
        CHECK(oracle::triangle_moment_iterated(t.verts, RatMat::identity(2), RatVec(2)) ==
              Rat(1, 6));
    }
    SUBCASE("segments in dimension one") {
        // int_a^b (x - c)^2 g dx, directly
        auto direct = [](Rat a, Rat b, Rat c, Rat g) {
            Rat bb = b - c, aa = a - c;
            return g * (bb * bb * bb - aa * aa * aa) / 3;
        };
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> num(-20, 20);
        for (int it = 0; it < 20; ++it) {
            Rat a(num(rng), 4), b(num(rng), 4), c(num(rng), 8), g(1 + (num(rng) + 20), 8);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            Simplex s{{RatVec{a}, RatVec{b}}};
            CHECK(simplex_second_moment(s, RatVec{c}, RatMat::diagonal({g})) == direct(a, b, c, g));
        }
        Simplex unit{{RatVec{Rat(-1, 2)}, RatVec{Rat(1, 2)}}};
        CHECK(simplex_second_moment(unit, RatVec{Rat(0)}, RatMat::identity(1)) == Rat(1, 12));
    }
    SUBCASE("random triangles, metrics and centers") {
        std::mt19937_64 rng(42);
        std::uniform_int_distribution<int> num(-16, 16);
        int done = 0;
        while (done < 30) {
            std::vector<RatVec> tri;
            for (int k = 0; k < 3; ++k) tri.push_back(RatVec{Rat(num(rng), 4), Rat(num(rng), 4)});
            if (affine_rank(tri) != 2) continue;
            RatMat g = random_spd2(rng);
            RatVec c{Rat(num(rng), 8), Rat(num(rng), 8)};
            Simplex s{tri};
            CHECK(simplex_second_moment(s, c, g) == oracle::triangle_moment_iterated(tri, g, c));
            ++done;
        }
    }
}

TEST_CASE("from_halfspaces: squares, hexagons, errors") {
    SUBCASE("square") {
        Polytope p = Polytope::from_halfspaces(square_halfspaces(Rat(1, 2)), RatMat::identity(2));
        REQUIRE(p.vertices().size() == 4);
        CHECK(p.vertices()[0] == RatVec{Rat(-1, 2), Rat(-1, 2)});
        CHECK(p.vertices()[3] == RatVec{Rat(1, 2), Rat(1, 2)});
        CHECK(p.facets().size() == 4);
    }
    SUBCASE("hexagon") {
        Polytope p = Polytope::from_halfspaces(hexagon_halfspaces(), a2_gram());
        CHECK(p.vertices().size() == 6);
        CHECK(p.facets().size() == 6);
        // all vertices at squared norm 1/3 under the hexagonal metric
        GramLattice lat(a2_gram());
        for (const auto& v : p.vertices()) CHECK(lat.norm_sq(v) == Rat(1, 3));
    }
    SUBCASE("empty intersection") {
        std::vector<HalfSpace> empty = {hs({Rat(1)}, Rat(0)), hs({Rat(-1)}, Rat(-1))};
        CHECK_THROWS_AS(Polytope::from_halfspaces(empty, RatMat::identity(1)),
                        LowerDimensionalError);
    }
    SUBCASE("unbounded inputs are rejected") {
        CHECK_THROWS_AS(
            Polytope::from_halfspaces({hs({Rat(1), Rat(0)}, Rat(1))}, RatMat::identity(2)),
            UnboundedError);
        // a quadrant has a vertex but recedes
        CHECK_THROWS_AS(
            Polytope::from_halfspaces(
                {hs({Rat(-1), Rat(0)}, Rat(0)), hs({Rat(0), Rat(-1)}, Rat(0))},
                RatMat::identity(2)),
            UnboundedError);
    }
    SUBCASE("dimension cap") {
        CHECK_THROWS_AS(Polytope::from_halfspaces(square_halfspaces(Rat(1)),
                                                  RatMat::identity(2), 1),
                        DimensionCapError);
    }
    SUBCASE("redundant halfspaces are dropped") {
        auto hs_list = square_halfspaces(Rat(1, 2));
        hs_list.push_back(hs({Rat(1), Rat(1)}, Rat(5)));
        hs_list.push_back(hs({Rat(2), Rat(0)}, Rat(1)));  // duplicate of x <= 1/2
        Polytope p = Polytope::from_halfspaces(hs_list, RatMat::identity(2));
        CHECK(p.facets().size() == 4);
    }
}

TEST_CASE("boxed construction agrees with subset pivoting") {
    // two independent vertex-enumeration routes
    Polytope a = Polytope::from_halfspaces(hexagon_halfspaces(), a2_gram());
    Polytope b = Polytope::from_halfspaces_boxed(hexagon_halfspaces(), a2_gram(),
                                                 {Rat(2), Rat(2)}, 5);
    CHECK(a.same_polytope(b));
    CHECK(a.facets() == b.facets());

    Polytope sq = Polytope::from_halfspaces(square_halfspaces(Rat(1, 2)), RatMat::identity(2));
    Polytope sq2 = Polytope::from_halfspaces_boxed(square_halfspaces(Rat(1, 2)),
                                                   RatMat::identity(2), {Rat(3), Rat(3)}, 5);
    CHECK(sq.same_polytope(sq2));
}

TEST_CASE("intersect") {
    RatMat g1 = RatMat::identity(1);
    Polytope seg = Polytope::from_halfspaces({hs({Rat(1)}, Rat(1, 2)), hs({Rat(-1)}, Rat(1, 2))},
                                             g1);
    SUBCASE("shifted segment") {
        auto r = intersect(seg, seg.translated(RatVec{Rat(1, 2)}));
        REQUIRE(r.has_value());
        CHECK(r->vertices() == std::vector<RatVec>{RatVec{Rat(0)}, RatVec{Rat(1, 2)}});
    }
    SUBCASE("self intersection is the identity") {
        auto r = intersect(seg, seg);
        REQUIRE(r.has_value());
        CHECK(r->same_polytope(seg));
        CHECK(r->facets() == seg.facets());
    }
    SUBCASE("touching intersection is empty") {
        CHECK_FALSE(intersect(seg, seg.translated(RatVec{Rat(1)})).has_value());
        CHECK_FALSE(intersect(seg, seg.translated(RatVec{Rat(2)})).has_value());
    }
    SUBCASE("commutative and idempotent on shifted squares") {
        Polytope sq = Polytope::from_halfspaces(square_halfspaces(Rat(1, 2)),
                                                RatMat::identity(2));
        RatVec s{Rat(1, 3), Rat(1, 5)};
        auto pq = intersect(sq, sq.translated(s));
        auto qp = intersect(sq.translated(s), sq);
        REQUIRE(pq.has_value());
        REQUIRE(qp.has_value());
        CHECK(pq->same_polytope(*qp));
        CHECK(pq->facets() == qp->facets());
        auto again = intersect(*pq, *pq);
        REQUIRE(again.has_value());
        CHECK(again->same_polytope(*pq));
    }
}

TEST_CASE("translate and scale") {
    Polytope sq = Polytope::from_halfspaces(square_halfspaces(Rat(1, 2)), RatMat::identity(2));
    SUBCASE("translate by zero") { CHECK(sq.translated(RatVec(2)).same_polytope(sq)); }
    SUBCASE("translate and back") {
        RatVec s{Rat(2, 7), Rat(-3, 5)};
        CHECK(sq.translated(s).translated(-s).same_polytope(sq));
    }
    SUBCASE("translated square vertices") {
        Polytope t = sq.translated(RatVec{Rat(1), Rat(0)});
        CHECK(t.vertices()[0] == RatVec{Rat(1, 2), Rat(-1, 2)});
        CHECK(t.vertices()[3] == RatVec{Rat(3, 2), Rat(1, 2)});
    }
    SUBCASE("halving") {
        Polytope h = sq.scaled_half();
        CHECK(h.vertices()[0] == RatVec{Rat(-1, 4), Rat(-1, 4)});
        CHECK(h.volume() == Rat(1, 4));
        CHECK(sq.volume() == 1);
    }
}

TEST_CASE("triangulation shapes") {
    Polytope sq = Polytope::from_halfspaces(square_halfspaces(Rat(1, 2)), RatMat::identity(2));
    CHECK(sq.triangulation().size() == 4);  // centroid fan over 4 edges
    Polytope hex = Polytope::from_halfspaces(hexagon_halfspaces(), a2_gram());
    CHECK(hex.triangulation().size() == 6);
    // a simplex triangulates as itself
    Polytope tri = Polytope::from_halfspaces({hs({Rat(-1), Rat(0)}, Rat(0)),
                                              hs({Rat(0), Rat(-1)}, Rat(0)),
                                              hs({Rat(1), Rat(1)}, Rat(1))},
                                             RatMat::identity(2));
    CHECK(tri.triangulation().size() == 1);
    CHECK(tri.volume() == Rat(1, 2));
    CHECK(tri.second_moment(RatVec(2)) == Rat(1, 6));
}

TEST_CASE("volumes and moments of reference bodies") {
    SUBCASE("unit cube") {
        std::vector<HalfSpace> cube;
        for (int i = 0; i < 3; ++i)
            for (int s = -1; s <= 1; s += 2) {
                RatVec f(3);
                f[i] = s;
                cube.push_back({f, Rat(1, 2)});
            }
        Polytope p = Polytope::from_halfspaces(cube, RatMat::identity(3));
        CHECK(p.volume() == 1);
        CHECK(p.second_moment(RatVec(3)) == Rat(1, 4));  // 3/12
        std::vector<Rat> lo, hi;
        p.bounding_box(lo, hi);
        CHECK(p.second_moment(RatVec(3)) ==
              oracle::box_moment_product(lo, hi, RatMat::identity(3), RatVec(3)));
    }
    SUBCASE("unit square moment is 1/6") {
        Polytope p = Polytope::from_halfspaces(square_halfspaces(Rat(1, 2)),
                                               RatMat::identity(2));
        CHECK(p.second_moment(RatVec(2)) == Rat(1, 6));
    }
    SUBCASE("hexagon against the iterated-integration oracle") {
        Polytope hex = Polytope::from_halfspaces(hexagon_halfspaces(), a2_gram());
        CHECK(hex.volume() == 1);
        CHECK(hex.volume() == oracle::polygon_area_shoelace(hex.vertices()));
        CHECK(hex.second_moment(RatVec(2)) ==
              oracle::polygon_moment_iterated(hex.vertices(), a2_gram(), RatVec(2)));
        CHECK(hex.second_moment(RatVec(2)) == Rat(5, 36));
    }
    SUBCASE("random boxes under random metrics") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<int> num(-12, 12);
        for (int it = 0; it < 15; ++it) {
            Rat l0(num(rng), 4), h0 = l0 + Rat(1 + (it % 5), 2);
            Rat l1(num(rng), 4), h1 = l1 + Rat(1 + (it % 3), 2);
            std::vector<HalfSpace> box = {
                hs({Rat(1), Rat(0)}, h0), hs({Rat(-1), Rat(0)}, -l0),
                hs({Rat(0), Rat(1)}, h1), hs({Rat(0), Rat(-1)}, -l1)};
            RatMat g = random_spd2(rng);
            RatVec c{Rat(num(rng), 8), Rat(num(rng), 8)};
            Polytope p = Polytope::from_halfspaces(box, g);
            CHECK(p.volume() == (h0 - l0) * (h1 - l1));
            CHECK(p.second_moment(c) == oracle::box_moment_product({l0, l1}, {h0, h1}, g, c));
        }
    }
}

TEST_CASE("moment identities on random cells") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> num(-10, 10);
    int done = 0;
    while (done < 20) {
        int n = 2 + (done % 2);
        GramLattice lat(random_gram(n, rng));
        Polytope p = voronoi_cell(lat);
        RatVec c(n);
        for (int i = 0; i < n; ++i) c[i] = Rat(num(rng), 8);
        SUBCASE("") {}
        // parallel axis: moment about c = moment about centroid + vol * Q_G(centroid - c)
        Rat lhs = p.second_moment(c);
        Rat rhs = p.second_moment(p.centroid()) +
                  p.volume() * lat.norm_sq(p.centroid() - c);
        CHECK(lhs == rhs);
        // translation covariance
        RatVec s(n);
        for (int i = 0; i < n; ++i) s[i] = Rat(num(rng), 4);
        CHECK(p.translated(s).second_moment(c + s) == p.second_moment(c));
        // 2-D cells also against the independent polygon oracle
        if (n == 2) {
            CHECK(p.volume() == oracle::polygon_area_shoelace(p.vertices()));
            CHECK(p.second_moment(c) ==
                  oracle::polygon_moment_iterated(p.vertices(), lat.gram(), c));
        }
        ++done;
    }
}

TEST_CASE("rectangular box recognition") {
    SUBCASE("square cell") {
        Polytope sq = Polytope::from_halfspaces(square_halfspaces(Rat(1, 2)),
                                                RatMat::identity(2));
        BoxVerdict v = is_rectangular_box(sq);
        REQUIRE(v.is_box);
        CHECK(v.semi_axes_sq == std::vector<Rat>{Rat(1, 4), Rat(1, 4)});
    }
    SUBCASE("hexagon is not a box") {
        Polytope hex = Polytope::from_halfspaces(hexagon_halfspaces(), a2_gram());
        CHECK_FALSE(is_rectangular_box(hex).is_box);
    }
    SUBCASE("cell of diag(1,4)") {
        GramLattice lat(RatMat::diagonal({Rat(1), Rat(4)}));
        BoxVerdict v = is_rectangular_box(voronoi_cell(lat));
        REQUIRE(v.is_box);
        CHECK(v.semi_axes_sq == std::vector<Rat>{Rat(1, 4), Rat(1)});
    }
    SUBCASE("asymmetric input is rejected") {
        Polytope sq = Polytope::from_halfspaces(square_halfspaces(Rat(1, 2)),
                                                RatMat::identity(2));
        CHECK_THROWS_AS(is_rectangular_box(sq.translated(RatVec{Rat(1), Rat(0)})),
                        NotCentrallySymmetricError);
    }
}
