#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ogw/jdt.hpp"
#include "ogw/lr.hpp"
#include "ogw/partition.hpp"
#include "ogw/poly.hpp"
#include "ogw/tableau.hpp"
#include "ogw/wronski.hpp"

namespace ogw {

struct CriterionResult {
    int id = 0;
    std::string name;
    long long attempted = 0;
    long long passed = 0;
    std::string first_failure;
    double seconds = 0.0;

    bool ok() const { return attempted == passed && attempted > 0; }
    void tally(bool good, const std::string& what) {
        ++attempted;
        if (good)
            ++passed;
        else if (first_failure.empty())
            first_failure = what;
    }
};

struct RunReport {
    std::string suite;
    std::vector<CriterionResult> criteria;
    double seconds = 0.0;

    long long attempted() const {
        long long t = 0;
        for (const auto& c : criteria) t += c.attempted;
        return t;
    }
    long long passed() const {
        long long t = 0;
        for (const auto& c : criteria) t += c.passed;
        return t;
    }
    bool ok() const {
        for (const auto& c : criteria)
            if (!c.ok()) return false;
        return !criteria.empty();
    }
    std::string first_failure() const {
        for (const auto& c : criteria)
            if (!c.first_failure.empty()) return c.name + ": " + c.first_failure;
        return {};
    }
};

namespace verify {

/// Symmetrical rectangle tableaux are exactly the doubled shifted staircase
/// tableaux, and the two undo each other.
inline CriterionResult doubling_bijection(int n_max) {
    CriterionResult r{1, "doubling-bijection"};
    const long long expected[] = {0, 1, 1, 2};
    for (int n = 1; n <= n_max; ++n) {
        long long symmetrical = 0;
        bool roundtrips = true;
        std::string bad;
        for_each_standard(SkewShape(rectangle_shape(n)), [&](const std::vector<Cell>& pos) {
            const int pairs = (static_cast<int>(pos.size()) - 1) / 2;
            for (int k = 1; k <= pairs; ++k) {
                const Cell& odd = pos[2 * k - 1];
                const Cell& even = pos[2 * k];
                if (even.row != odd.col || even.col != odd.row + 1) return;
            }
            ++symmetrical;
            std::map<Cell, int> entries;
            for (std::size_t v = 1; v < pos.size(); ++v) entries[pos[v]] = static_cast<int>(v);
            Tableau t = Tableau::from_cells(false, entries);
            if (doubled(undoubled(t)) != t) {
                roundtrips = false;
                bad = "round trip failed on a rank-" + std::to_string(n) + " tableau";
            }
        });
        Int staircase_count = count_sst(staircase(n));
        bool counts_match = (staircase_count == symmetrical);
        bool literal_ok = (n > 3) || (symmetrical == expected[n]);
        for (const Tableau& u : enumerate_standard(SkewShape{staircase(n)}))
            if (undoubled(doubled(u)) != u) roundtrips = false;
        std::ostringstream what;
        what << "rank " << n << ": symmetrical=" << symmetrical << " staircase="
             << staircase_count << (roundtrips ? "" : ", " + bad);
        r.tally(counts_match && literal_ok && roundtrips, what.str());
    }
    return r;
}

/// Tableau switching commutes with doubling, exhaustively inside a staircase.
inline CriterionResult switching_commutation(int n) {
    CriterionResult r{2, "switching-commutation"};
    for (const StrictPartition& sigma : strict_partitions_in_box(n)) {
        if (sigma.empty()) continue;
        for (const StrictPartition& tau : strict_subpartitions(sigma)) {
            if (tau == sigma) continue;
            SkewShape skew(sigma, tau);
            for (const Tableau& u : enumerate_standard(SkewShape{tau}))
                for (const Tableau& t : enumerate_standard(skew)) {
                    SwitchResult shifted = switch_tableaux(u, t);
                    SwitchResult plain = switch_tableaux(doubled(u), doubled(t));
                    bool ok = plain.inner == doubled(shifted.inner) &&
                              plain.outer == doubled(shifted.outer);
                    r.tally(ok, "sigma=" + sigma.str() + " tau=" + tau.str());
                }
        }
    }
    return r;
}

/// Straight shifted shapes and staircase complements form one dual class.
inline CriterionResult trivial_dual_classes(int n_max) {
    CriterionResult r{3, "trivial-dual-classes"};
    for (int n = 1; n <= n_max; ++n)
        for (const StrictPartition& tau : strict_partitions_in_box(n)) {
            r.tally(dual_classes(SkewShape{tau}).size() == 1, "SST(" + tau.str() + ")");
            r.tally(dual_classes(SkewShape(staircase(n), tau)).size() == 1,
                    "SST(" + staircase(n).str() + "/" + tau.str() + ")");
        }
    return r;
}

/// The orthogonal class-counting rule equals the P-function expansion,
/// exhaustively in small staircases and on seeded random larger queries.
inline CriterionResult og_rule_vs_oracle(LrTable& lr, int exhaustive_n, int samples, int sample_n,
                                         std::uint64_t seed, int exhaustive_n2 = 0) {
    CriterionResult r{4, "og-rule-vs-oracle"};
    for (int box : {exhaustive_n, exhaustive_n2}) {
        if (box <= 0) continue;
        auto shapes = strict_partitions_in_box(box);
        for (const StrictPartition& kappa : shapes)
            for (const StrictPartition& tau : shapes) {
                if (!contains(kappa, tau)) continue;
                for (const StrictPartition& sigma :
                     strict_partitions_of(kappa.size() - tau.size(), box)) {
                    bool ok =
                        lr.lr_og(sigma, tau, kappa, box) == lr.lr_og_schur_p(sigma, tau, kappa);
                    r.tally(ok, sigma.str() + " * " + tau.str() + " -> " + kappa.str());
                }
            }
    }

    std::mt19937_64 rng(seed);
    auto big = strict_partitions_in_box(sample_n);
    int done = 0;
    while (done < samples) {
        const StrictPartition& kappa = big[rng() % big.size()];
        auto taus = strict_subpartitions(kappa);
        const StrictPartition& tau = taus[rng() % taus.size()];
        auto sigmas = strict_partitions_of(kappa.size() - tau.size(), sample_n);
        if (sigmas.empty()) continue;
        const StrictPartition& sigma = sigmas[rng() % sigmas.size()];
        bool ok = lr.lr_og(sigma, tau, kappa, sample_n) == lr.lr_og_schur_p(sigma, tau, kappa);
        r.tally(ok, sigma.str() + " * " + tau.str() + " -> " + kappa.str());
        ++done;
    }
    return r;
}

/// The plain class-counting rule equals the lattice-word rule over a box.
inline CriterionResult gr_rule_vs_oracle(LrTable& lr, int rows, int cols, int max_cells) {
    CriterionResult r{5, "gr-rule-vs-oracle"};
    for (const Partition& nu : partitions_in_box(rows, cols)) {
        if (nu.size() > max_cells) continue;
        for (const Partition& mu : subpartitions(nu)) {
            SkewShape shape(nu, mu);
            auto by_classes = lr.class_histogram(shape);
            auto by_words = lr.lattice_histogram(shape);
            std::set<Partition> keys;
            for (const auto& [k, v] : by_classes) keys.insert(k);
            for (const auto& [k, v] : by_words) keys.insert(k);
            for (const Partition& lam : keys) {
                long long a = by_classes.count(lam) ? by_classes.at(lam) : 0;
                long long b = by_words.count(lam) ? by_words.at(lam) : 0;
                r.tally(a == b, "nu=" + nu.str() + " mu=" + mu.str() + " lambda=" + lam.str());
            }
        }
    }
    return r;
}

/// Staircase complements rectify to the Poincare dual, which matches the
/// part complement and pairs to one.
inline CriterionResult duality(LrTable& lr, int n_max) {
    CriterionResult r{6, "duality"};
    for (int n = 1; n <= n_max; ++n)
        for (const StrictPartition& kappa : strict_partitions_in_box(n)) {
            bool ok = true;
            std::string what = "kappa=" + kappa.str() + " rank " + std::to_string(n);
            try {
                StrictPartition dual = lr.poincare_dual(kappa, n);  // checks the complement
                for (const Tableau& t : enumerate_standard(SkewShape(staircase(n), kappa)))
                    ok &= rectification_shape(t) == dual.as_partition();
                ok &= lr.lr_og(kappa, dual, staircase(n), n) == 1;
            } catch (const std::exception& e) {
                ok = false;
                what += std::string(": ") + e.what();
            }
            r.tally(ok, what);
        }
    return r;
}

/// The staircase coefficient of the box-power counts shifted tableaux; so
/// does every other coefficient.
inline CriterionResult fiber_count(LrTable& lr, int n_max) {
    CriterionResult r{7, "fiber-count"};
    const long long expected[] = {0, 1, 1, 2};
    for (int n = 1; n <= n_max; ++n) {
        auto table = lr.pieri_power_table(n);
        for (const StrictPartition& sigma : strict_partitions_in_box(n)) {
            long long coeff = table.count(sigma) ? table.at(sigma) : 0;
            bool ok = Int(coeff) == count_sst(sigma);
            if (sigma == staircase(n) && n <= 3) ok &= (coeff == expected[n]);
            r.tally(ok, "rank " + std::to_string(n) + " sigma=" + sigma.str() + " coeff=" +
                            std::to_string(coeff));
        }
    }
    return r;
}

/// Segment-wise dual equivalence classes match intersection numbers for
/// every composition.
inline CriterionResult class_counting(LrTable& lr, int n) {
    CriterionResult r{8, "class-counting"};
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int rest) {
        if (rest == 0) {
            comps.push_back(cur);
            return;
        }
        for (int c = 1; c <= rest; ++c) {
            cur.push_back(c);
            gen(rest - c);
            cur.pop_back();
        }
    };
    gen(n * (n + 1));
    for (const auto& comp : comps) {
        long long classes = lr.segment_class_count(comp, n);
        long long points = lr.segment_intersection_number(comp, n);
        std::ostringstream what;
        what << "composition";
        for (int c : comp) what << ' ' << c;
        what << ": classes=" << classes << " points=" << points;
        r.tally(classes == points, what.str());
    }
    return r;
}

/// Wronskians of sampled isotropic subspaces are monic perfect squares.
inline CriterionResult perfect_squares(const std::vector<int>& ranks, int samples,
                                       std::uint64_t seed) {
    CriterionResult r{9, "perfect-square-wronskians"};
    for (int n : ranks)
        for (int i = 0; i < samples; ++i) {
            Subspace y = random_isotropic(n, seed + static_cast<std::uint64_t>(i));
            RationalPoly wr = wronskian(y);
            bool ok = wr.leading() == 1 && is_perfect_square(wr);
            r.tally(ok, "rank " + std::to_string(n) + " seed offset " + std::to_string(i));
        }
    return r;
}

/// Divisibility laws at infinity, at fixed points, and at every rational
/// root of the Wronskian, for general and isotropic samples.
inline CriterionResult divisibility(int n, int general_samples, int isotropic_samples,
                                    std::uint64_t seed) {
    CriterionResult r{10, "divisibility"};
    auto run_one = [&](const Subspace& x, const std::string& label) {
        RationalPoly wr = wronskian(x);
        std::vector<ExtPoint> points{ExtPoint::at_infinity(), ExtPoint::of(0), ExtPoint::of(1)};
        for (const auto& [a, mult] : rational_divisor_points(wr)) points.push_back(ExtPoint::of(a));
        for (const ExtPoint& a : points) {
            DivisibilityReport rep = check_divisibility(x, a);
            r.tally(rep.pass, label + " at a=" + a.str() + ": " + rep.detail);
        }
    };
    for (int i = 0; i < general_samples; ++i)
        run_one(random_subspace(n, seed + static_cast<std::uint64_t>(i)),
                "general sample " + std::to_string(i));
    for (int i = 0; i < isotropic_samples; ++i)
        run_one(random_isotropic(n, seed + 100000 + static_cast<std::uint64_t>(i)),
                "isotropic sample " + std::to_string(i));
    return r;
}

}  // namespace verify

/// Every criterion at the scale set by n (n <= 3 keeps the exhaustive parts
/// small); the acceptance suite runs the full scales.
inline RunReport verify_all(int n, std::uint64_t seed, bool full_scale = false) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    RunReport report;
    report.suite = full_scale ? "acceptance" : "verify-all(n=" + std::to_string(n) + ")";
    LrTable lr;
    auto clock = [] { return std::chrono::steady_clock::now(); };
    auto add = [&](CriterionResult c, std::chrono::steady_clock::time_point t0) {
        c.seconds = std::chrono::duration<double>(clock() - t0).count();
        report.criteria.push_back(std::move(c));
    };

    using namespace verify;
    auto t0 = clock();
    if (full_scale) {
        add(doubling_bijection(4), t0);
        t0 = clock();
        add(switching_commutation(3), t0);
        t0 = clock();
        add(trivial_dual_classes(4), t0);
        t0 = clock();
        add(og_rule_vs_oracle(lr, 3, 50, 4, seed, /*exhaustive_n2=*/4), t0);
        t0 = clock();
        add(gr_rule_vs_oracle(lr, 4, 5, 10), t0);
        t0 = clock();
        add(duality(lr, 4), t0);
        t0 = clock();
        add(fiber_count(lr, 4), t0);
        t0 = clock();
        add(class_counting(lr, 2), t0);
        t0 = clock();
        add(perfect_squares({2, 3}, 100, seed), t0);
        t0 = clock();
        add(divisibility(2, 50, 50, seed), t0);
    } else {
        const int small = std::min(n, 3);
        add(doubling_bijection(std::min(n, 4)), t0);
        t0 = clock();
        add(switching_commutation(small), t0);
        t0 = clock();
        add(trivial_dual_classes(std::min(n, 4)), t0);
        t0 = clock();
        add(og_rule_vs_oracle(lr, small, 10, std::min(n + 1, 4), seed), t0);
        t0 = clock();
        add(gr_rule_vs_oracle(lr, n, n + 1, std::min(10, n * (n + 1))), t0);
        t0 = clock();
        add(duality(lr, std::min(n, 4)), t0);
        t0 = clock();
        add(fiber_count(lr, std::min(n, 4)), t0);
        t0 = clock();
        add(class_counting(lr, std::min(n, 2)), t0);
        t0 = clock();
        add(perfect_squares({2, std::min(std::max(n, 2), 3)}, 20, seed), t0);
        t0 = clock();
        add(divisibility(2, 10, 10, seed), t0);
    }
    for (const auto& c : report.criteria) report.seconds += c.seconds;
    return report;
}

}  // namespace ogw
