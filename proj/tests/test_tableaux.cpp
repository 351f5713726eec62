#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "ogw/partition.hpp"
#include "ogw/tableau.hpp"

using namespace ogw;

namespace {

// A 4x5 symmetrical tableau and the shifted staircase tableau it encodes.
const char* kSample45 =
    "1 2 4 8 10\n"
    "3 5 6 12 16\n"
    "7 11 13 14 18\n"
    "9 15 17 19 20\n";

const char* kSampleShifted =
    "shifted\n"
    "1 2 4 5\n"
    ". 3 6 8\n"
    ". . 7 9\n"
    ". . . 10\n";

}  // namespace

TEST_CASE("tableau parsing and printing") {
    Tableau t = parse_tableau(kSample45);
    CHECK(t.size() == 20);
    CHECK_FALSE(t.shifted());
    CHECK(t.shape().outer() == rectangle_shape(4));
    CHECK(t.value_at(3, 2) == 11);
    CHECK(tableau_str(t) == kSample45);

    Tableau s = parse_tableau(kSampleShifted);
    CHECK(s.shifted());
    CHECK(s.shape().outer() == Partition{4, 3, 2, 1});
    CHECK(s.value_at(2, 3) == 6);
    CHECK(tableau_str(s) == kSampleShifted);

    CHECK_THROWS_AS(parse_tableau("1 q\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau("1 2\n3 1\n"), std::invalid_argument);  // repeated entry
    CHECK_THROWS_AS(parse_tableau("2 1\n"), std::invalid_argument);       // row decreases
    CHECK_THROWS_AS(parse_tableau("shifted\n1 2\n3\n"), std::invalid_argument);  // off diagonal
}

TEST_CASE("tableau validity") {
    CHECK_THROWS_AS(Tableau(SkewShape(Partition{2, 1}), {2, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Tableau(SkewShape(Partition{2, 1}), {2, 3, 1}), std::invalid_argument);
    CHECK_NOTHROW(Tableau(SkewShape(Partition{2, 1}), {1, 2, 3}));
    CHECK_NOTHROW(Tableau(SkewShape(Partition{2, 1}), {1, 3, 2 + 40}));  // arbitrary entries
}

TEST_CASE("skew shape inference tolerates empty rows") {
    std::map<Cell, int> cells{{{1, 3}, 1}, {{3, 1}, 2}};
    Tableau t = Tableau::from_cells(false, cells);
    CHECK(t.shape().outer() == Partition{3, 1, 1});
    CHECK(t.subtableau(1, 1).size() == 1);

    std::map<Cell, int> bad{{{1, 1}, 1}, {{2, 2}, 2}};
    CHECK_THROWS_AS(Tableau::from_cells(false, bad), std::invalid_argument);
}

TEST_CASE("subtableau") {
    Tableau t = parse_tableau(kSample45);

    Tableau lo = t.subtableau(1, 2);
    CHECK(lo.entries() ==
          std::vector<std::pair<Cell, int>>{{{1, 1}, 1}, {{1, 2}, 2}});

    CHECK(t.subtableau(1, 20) == t);

    Tableau hi = t.subtableau(19, 20);
    CHECK(hi.entries() ==
          std::vector<std::pair<Cell, int>>{{{4, 4}, 19}, {{4, 5}, 20}});

    SECTION("adjacent intervals partition the cells") {
        for (int split = 0; split <= 20; ++split) {
            Tableau a = t.subtableau(1, split);
            Tableau b = t.subtableau(split + 1, 20);
            CHECK(a.size() + b.size() == 20);
            std::set<Cell> seen;
            for (const auto& [c, v] : a.entries()) seen.insert(c);
            for (const auto& [c, v] : b.entries()) CHECK_FALSE(seen.count(c));
        }
    }
}

TEST_CASE("symmetry criterion") {
    CHECK(is_symmetrical(parse_tableau(kSample45)));
    CHECK(is_symmetrical(parse_tableau("1 2\n")));

    Tableau superstandard = row_superstandard(SkewShape(Partition{3, 3}));
    CHECK_FALSE(is_symmetrical(superstandard));

    CHECK_THROWS_AS(is_symmetrical(parse_tableau("1 2 3\n")), std::invalid_argument);
    CHECK_THROWS_AS(is_symmetrical(parse_tableau(kSampleShifted)), std::invalid_argument);
}

TEST_CASE("doubling") {
    CHECK(doubled(parse_tableau("shifted\n1\n")) == parse_tableau("1 2\n"));
    CHECK(doubled(parse_tableau("shifted\n1 2\n. 3\n")) == parse_tableau("1 2 4\n3 5 6\n"));
    CHECK(doubled(parse_tableau(kSampleShifted)) == parse_tableau(kSample45));

    SECTION("shape and symmetry for straight shifted tableaux") {
        for (int n = 1; n <= 4; ++n) {
            for (const StrictPartition& s : strict_partitions_in_box(n)) {
                for (const Tableau& t : enumerate_standard(SkewShape{s})) {
                    Tableau d = doubled(t);
                    CHECK(d.shape().outer() == doubled_shape(s, n));
                    CHECK(is_symmetrical(d));
                    // entry 2k-1 sits strictly left of entry 2k
                    for (int v = 1; v <= t.size(); ++v)
                        CHECK(d.find(2 * v - 1)->col < d.find(2 * v)->col);
                }
            }
        }
    }
}

TEST_CASE("undoubling") {
    CHECK(undoubled(parse_tableau(kSample45)) == parse_tableau(kSampleShifted));

    SECTION("round trips") {
        for (int n = 1; n <= 4; ++n)
            for (const StrictPartition& s : strict_partitions_in_box(n))
                for (const Tableau& t : enumerate_standard(SkewShape{s}))
                    CHECK(undoubled(doubled(t)) == t);
    }

    SECTION("rejects non-symmetrical input, naming the first bad pair") {
        Tableau superstandard = row_superstandard(SkewShape(Partition{3, 3}));
        CHECK_THROWS_WITH(undoubled(superstandard),
                          Catch::Matchers::ContainsSubstring("pair 2"));
    }
}

TEST_CASE("doubling bijection onto symmetrical tableaux") {
    // for n <= 3 here; the acceptance suite extends this to n = 4
    for (int n = 1; n <= 3; ++n) {
        std::set<std::string> doubled_images;
        for (const Tableau& t : enumerate_standard(SkewShape{staircase(n)}))
            doubled_images.insert(tableau_str(doubled(t)));
        int symmetrical = 0;
        for (const Tableau& t : enumerate_standard(SkewShape(rectangle_shape(n)), 20)) {
            if (is_symmetrical(t)) {
                ++symmetrical;
                CHECK(doubled_images.count(tableau_str(t)));
            }
        }
        CHECK(Int(symmetrical) == count_sst(staircase(n)));
        CHECK(doubled_images.size() == static_cast<std::size_t>(symmetrical));
    }
}

TEST_CASE("enumeration") {
    CHECK(enumerate_standard(SkewShape(Partition{2, 1})).size() == 2);
    CHECK(enumerate_standard(SkewShape(Partition{1})).size() == 1);
    CHECK(enumerate_standard(SkewShape(Partition{3, 3})).size() == 5);

    auto shifted21 = enumerate_shifted(SkewShape{staircase(2)});
    REQUIRE(shifted21.size() == 1);
    CHECK(shifted21[0] == parse_tableau("shifted\n1 2\n. 3\n"));

    CHECK(enumerate_shifted(SkewShape{StrictPartition{1}}).size() == 1);
    CHECK(enumerate_shifted(SkewShape{staircase(3)}).size() == 2);

    SECTION("row-reading lexicographic order") {
        auto all = enumerate_standard(SkewShape(Partition{3, 2}));
        for (std::size_t i = 0; i + 1 < all.size(); ++i)
            CHECK(all[i].reading_word() < all[i + 1].reading_word());
    }

    SECTION("cap is enforced") {
        CHECK_THROWS_AS(enumerate_standard(SkewShape(rectangle_shape(4))), std::length_error);
    }
}

TEST_CASE("normalization") {
    Tableau t = parse_tableau("11 14\n13 19\n");
    Tableau n = t.normalized();
    CHECK(n == parse_tableau("1 3\n2 4\n"));
    CHECK(n.shape() == t.shape());
}
