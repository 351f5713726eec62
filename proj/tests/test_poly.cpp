#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ogw/poly.hpp"

using namespace ogw;

namespace {

RationalPoly from_ints(std::initializer_list<int> coeffs) {
    std::vector<Rat> c;
    for (int v : coeffs) c.emplace_back(v);
    return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial basics") {
    RationalPoly p = RationalPoly::parse("1,2,1");
    CHECK(p.degree() == 2);
    CHECK(p(Rat(1)) == 4);
    CHECK(p.str() == "1,2,1");
    CHECK(p.str(5) == "1,2,1,0,0");
    CHECK(RationalPoly::parse("3/2,0,-1/3").coeff(2) == Rat(-1, 3));
    CHECK(RationalPoly{}.is_zero());
    CHECK(RationalPoly({Rat(0), Rat(0)}).is_zero());
    CHECK_THROWS_AS(RationalPoly::parse("1,х"), std::invalid_argument);

    auto [q, r] = from_ints({-1, 0, 1}).divmod(from_ints({1, 1}));
    CHECK(q == from_ints({-1, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(from_ints({1, 1, 1}).exact_div(from_ints({1, 1})), std::logic_error);
}

TEST_CASE("fraction free gcd") {
    RationalPoly a = from_ints({1, 1}) * from_ints({1, 1}) * from_ints({-3, 1});
    RationalPoly b = from_ints({1, 1}) * from_ints({5, 1});
    RationalPoly g = poly_gcd(a, b).monic();
    CHECK(g == from_ints({1, 1}));

    CHECK(poly_gcd(RationalPoly{}, b).monic() == b.monic());
    CHECK(poly_gcd(a, from_ints({7})).degree() == 0);
}

TEST_CASE("square-free decomposition") {
    auto dec = squarefree_decomposition(RationalPoly::monomial(6));
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == RationalPoly::monomial(1));
    CHECK(dec[0].second == 6);

    dec = squarefree_decomposition(from_ints({0, 1, 1}));  // z(z+1)
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].second == 1);

    dec = squarefree_decomposition(from_ints({1, 2, 1}));  // (1+z)^2
    REQUIRE(dec.size() == 1);
    CHECK(dec[0].first == from_ints({1, 1}));
    CHECK(dec[0].second == 2);

    CHECK_THROWS_AS(squarefree_decomposition(RationalPoly{}), std::invalid_argument);
}

TEST_CASE("perfect squares") {
    CHECK(is_perfect_square(from_ints({1, 2, 1})));
    CHECK(is_perfect_square(RationalPoly::monomial(6)));
    CHECK_FALSE(is_perfect_square(from_ints({0, 1, 1})));
    CHECK_FALSE(is_perfect_square(from_ints({1, 0, 1})));  // z^2+1, no rational roots
    CHECK(is_perfect_square(from_ints({3})));              // constants are squares up to scalar

    SECTION("agrees with direct square-root synthesis") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Rat> c(1 + rng() % 5);
            for (auto& v : c) v = static_cast<int>(rng() % 11) - 5;
            RationalPoly q(std::move(c));
            if (q.is_zero()) continue;
            RationalPoly sq = q * q;
            CHECK(is_perfect_square(sq));
            auto root = poly_sqrt(sq);
            REQUIRE(root.has_value());
            CHECK(*root == q.monic());

            RationalPoly maybe = sq + from_ints({0, 1});
            if (!maybe.is_zero())
                CHECK(is_perfect_square(maybe) == poly_sqrt(maybe).has_value());
        }
    }
}

TEST_CASE("root multiplicities") {
    CHECK(root_multiplicity(from_ints({1, 2, 1}), ExtPoint::of(1), 4) == 2);
    CHECK(root_multiplicity(RationalPoly::monomial(6), ExtPoint::at_infinity(), 6) == 0);
    CHECK(root_multiplicity(from_ints({1}), ExtPoint::at_infinity(), 2) == 2);
    CHECK(root_multiplicity(from_ints({1, 1}), ExtPoint::of(2), 4) == 0);
    CHECK_THROWS_AS(root_multiplicity(RationalPoly{}, ExtPoint::of(0), 2),
                    std::invalid_argument);
}

TEST_CASE("rational divisor points") {
    // (z+1)^2 (z - 3/2) z
    RationalPoly p = from_ints({1, 2, 1}) * RationalPoly({Rat(-3, 2), Rat(1)}) *
                     RationalPoly::monomial(1);
    auto pts = rational_divisor_points(p);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == std::pair{Rat(-3, 2), 1});
    CHECK(pts[1] == std::pair{Rat(0), 1});
    CHECK(pts[2] == std::pair{Rat(1), 2});

    CHECK(rational_divisor_points(from_ints({1, 0, 1})).empty());
}

TEST_CASE("projective points") {
    CHECK(ExtPoint::parse("inf").infinite);
    CHECK(ExtPoint::parse("-7/3").value == Rat(-7, 3));
    CHECK(ExtPoint::parse("inf").str() == "inf");
    CHECK(ExtPoint::of(Rat(1, 2)).str() == "1/2");
    CHECK_THROWS_AS(ExtPoint::parse("zzz"), std::invalid_argument);
}
