#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ogw/jdt.hpp"
#include "ogw/partition.hpp"
#include "ogw/tableau.hpp"

using namespace ogw;

namespace {

const char* kSample45 =
    "1 2 4 8 10\n"
    "3 5 6 12 16\n"
    "7 11 13 14 18\n"
    "9 15 17 19 20\n";

std::vector<std::pair<SkewShape, SkewShape>> plain_switch_instances(int max_cells) {
    std::vector<std::pair<SkewShape, SkewShape>> out;
    for (const Partition& nu : partitions_in_box(4, 4)) {
        if (nu.size() > max_cells || nu.empty()) continue;
        for (const Partition& mu : subpartitions(nu)) {
            if (mu == nu) continue;
            out.emplace_back(SkewShape(mu), SkewShape(nu, mu));
        }
    }
    return out;
}

std::vector<std::pair<SkewShape, SkewShape>> shifted_switch_instances(int n) {
    std::vector<std::pair<SkewShape, SkewShape>> out;
    for (const StrictPartition& sigma : strict_partitions_in_box(n)) {
        if (sigma.empty()) continue;
        for (const StrictPartition& tau : strict_subpartitions(sigma)) {
            if (tau == sigma) continue;
            out.emplace_back(SkewShape{tau}, SkewShape(sigma, tau));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("switching a single box") {
    Tableau u = parse_tableau("1\n");
    Tableau t = parse_tableau(". 1\n2 3\n");
    SwitchResult r = switch_tableaux(u, t);
    CHECK(r.inner == parse_tableau("1 3\n2\n"));
    CHECK(r.outer.entries() == std::vector<std::pair<Cell, int>>{{{2, 2}, 1}});
}

TEST_CASE("switching with an empty side") {
    Tableau u = parse_tableau("1 2 3\n4 5\n");
    SwitchResult r = switch_tableaux(u, Tableau{});
    CHECK(r.inner.empty());
    CHECK(r.outer == u);
}

TEST_CASE("switching rejects bad configurations") {
    CHECK_THROWS_AS(switch_tableaux(parse_tableau("1\n"), parse_tableau("shifted\n. 1\n")),
                    std::invalid_argument);
    CHECK_THROWS_AS(switch_tableaux(parse_tableau("1 2\n"), parse_tableau(". 1\n2 3\n")),
                    std::invalid_argument);
    CHECK_THROWS_AS(switch_tableaux(parse_tableau(". 1\n2\n"), parse_tableau(". . 1\n. 2\n3\n")),
                    std::invalid_argument);
}

TEST_CASE("switching is an involution") {
    SECTION("plain, exhaustive") {
        for (const auto& [mu, skew] : plain_switch_instances(8)) {
            for (const Tableau& u : enumerate_standard(mu))
                for (const Tableau& t : enumerate_standard(skew)) {
                    SwitchResult r = switch_tableaux(u, t);
                    SwitchResult back = switch_tableaux(r.inner, r.outer);
                    CHECK(back.inner == u);
                    CHECK(back.outer == t);
                }
        }
    }
    SECTION("shifted, exhaustive in the rank-4 staircase") {
        for (const auto& [tau, skew] : shifted_switch_instances(4)) {
            for (const Tableau& u : enumerate_standard(tau))
                for (const Tableau& t : enumerate_standard(skew)) {
                    SwitchResult r = switch_tableaux(u, t);
                    SwitchResult back = switch_tableaux(r.inner, r.outer);
                    CHECK(back.inner == u);
                    CHECK(back.outer == t);
                }
        }
    }
}

TEST_CASE("rectification") {
    Tableau t = parse_tableau(". 1\n2 3\n");
    CHECK(rectify(t) == parse_tableau("1 3\n2\n"));
    CHECK(rectification_shape(t) == Partition{2, 1});

    Tableau straight = parse_tableau("1 2\n3 4\n");
    CHECK(rectify(straight) == straight);
    CHECK(rectification_shape(straight) == Partition{2, 2});
}

TEST_CASE("rectification does not depend on the inner tableau") {
    for (const auto& [mu, skew] : plain_switch_instances(7)) {
        auto inners = enumerate_standard(mu);
        for (const Tableau& t : enumerate_standard(skew)) {
            Tableau expected = switch_tableaux(inners[0], t).inner;
            for (std::size_t i = 1; i < inners.size(); ++i)
                CHECK(switch_tableaux(inners[i], t).inner == expected);
        }
    }
}

TEST_CASE("rectification shape of doubled pairs is a row") {
    for (const Tableau& t : enumerate_standard(SkewShape{staircase(3)})) {
        Tableau d = doubled(t);
        for (int k = 1; k <= t.size(); ++k) {
            Tableau pair = d.subtableau(2 * k - 1, 2 * k);
            CHECK(rectification_shape(pair) == Partition{2});
        }
    }
}

TEST_CASE("rectification shape of the sample tail") {
    Tableau t = parse_tableau(kSample45);
    CHECK(rectification_shape(t.subtableau(11, 20)) == Partition{4, 4, 2});
    // consistent with doubling: the shifted half [6,10] rectifies to (3,2)
    Tableau s = undoubled(t);
    CHECK(rectification_shape(s.subtableau(6, 10)) == Partition{3, 2});
    CHECK(doubled_shape(StrictPartition{3, 2}, 4) == Partition{4, 4, 2});
}

TEST_CASE("dual equivalence") {
    SECTION("straight shapes are a single class") {
        auto all = enumerate_standard(SkewShape(Partition{2, 1}));
        REQUIRE(all.size() == 2);
        CHECK(dual_equivalent(all[0], all[1]));
        auto classes = dual_classes(SkewShape(Partition{2, 1}));
        REQUIRE(classes.size() == 1);
        CHECK(classes[0].members.size() == 2);
        CHECK(classes[0].rect_shape == Partition{2, 1});
    }

    SECTION("the two fillings of (2,2)/(1) form one class") {
        auto classes = dual_classes(SkewShape(Partition{2, 2}, Partition{1}));
        REQUIRE(classes.size() == 1);
        CHECK(classes[0].members.size() == 2);
        CHECK(classes[0].rect_shape == Partition{2, 1});
    }

    SECTION("the two fillings of (2,1)/(1) are inequivalent") {
        auto all = enumerate_standard(SkewShape(Partition{2, 1}, Partition{1}));
        REQUIRE(all.size() == 2);
        CHECK_FALSE(dual_equivalent(all[0], all[1]));
        CHECK(dual_classes(SkewShape(Partition{2, 1}, Partition{1})).size() == 2);
    }

    SECTION("shape mismatch is an error") {
        Tableau a = parse_tableau("1\n");
        Tableau b = parse_tableau("1 2\n");
        CHECK_THROWS_AS(dual_equivalent(a, b), std::invalid_argument);
    }

    SECTION("the canonical fingerprint agrees with checking every inner tableau") {
        for (const auto& [mu, skew] : plain_switch_instances(6)) {
            auto all = enumerate_standard(skew);
            for (std::size_t i = 0; i < all.size(); ++i)
                for (std::size_t j = i; j < all.size(); ++j)
                    CHECK(dual_equivalent(all[i], all[j]) ==
                          dual_equivalent(all[i], all[j], /*verify_all_u=*/true));
        }
    }
}

TEST_CASE("staircase tableaux and their complements are single classes") {
    // rank <= 3 here; rank 4 runs in the acceptance suite
    for (int n = 1; n <= 3; ++n) {
        for (const StrictPartition& tau : strict_partitions_in_box(n)) {
            if (!tau.empty()) {
                auto classes = dual_classes(SkewShape{tau});
                CHECK(classes.size() == 1);
            }
            if (tau != staircase(n)) {
                auto classes = dual_classes(SkewShape(staircase(n), tau));
                CHECK(classes.size() == 1);
            }
        }
    }
}

TEST_CASE("switching commutes with doubling") {
    int checked = 0;
    for (const auto& [tau_shape, skew] : shifted_switch_instances(3)) {
        for (const Tableau& u : enumerate_standard(tau_shape)) {
            for (const Tableau& t_raw : enumerate_standard(skew)) {
                Tableau t = t_raw;  // entries 1..m already
                SwitchResult shifted_result = switch_tableaux(u, t);

                std::vector<SlideRecord> trace;
                SwitchResult doubled_result = switch_tableaux(doubled(u), doubled(t), &trace);

                CHECK(doubled_result.inner == doubled(shifted_result.inner));
                CHECK(doubled_result.outer == doubled(shifted_result.outer));

                // slides come in pairs (even value then odd); the leading
                // slide of each pair must stay weakly above the diagonal
                REQUIRE(trace.size() % 2 == 0);
                for (std::size_t i = 0; i < trace.size(); i += 2) {
                    CHECK(trace[i].value % 2 == 0);
                    CHECK(trace[i + 1].value == trace[i].value - 1);
                    for (const Cell& c : trace[i].path) CHECK(c.col >= c.row);
                }
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("switching commutes with doubling on sampled rank-4 instances") {
    std::mt19937_64 rng(2026);
    auto instances = shifted_switch_instances(4);
    for (int trial = 0; trial < 40; ++trial) {
        const auto& [tau_shape, skew] = instances[rng() % instances.size()];
        auto inners = enumerate_standard(tau_shape);
        auto outers = enumerate_standard(skew);
        const Tableau& u = inners[rng() % inners.size()];
        const Tableau& t = outers[rng() % outers.size()];
        SwitchResult shifted_result = switch_tableaux(u, t);
        SwitchResult doubled_result = switch_tableaux(doubled(u), doubled(t));
        CHECK(doubled_result.inner == doubled(shifted_result.inner));
        CHECK(doubled_result.outer == doubled(shifted_result.outer));
    }
}

TEST_CASE("shifted dual equivalence matches doubled dual equivalence") {
    for (const auto& [tau_shape, skew] : shifted_switch_instances(3)) {
        (void)tau_shape;
        auto all = enumerate_standard(skew);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                CHECK(dual_equivalent(all[i], all[j]) ==
                      dual_equivalent(doubled(all[i]), doubled(all[j])));
    }
}
