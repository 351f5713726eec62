#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogw/jdt.hpp"
#include "ogw/partition.hpp"
#include "ogw/schur_p.hpp"
#include "ogw/tableau.hpp"

namespace ogw {

struct LrQuery {
    enum class Kind { grassmannian, orthogonal };
    Kind kind = Kind::grassmannian;
    Partition first, second;  // lambda,mu or sigma,tau
    Partition target;         // nu or kappa
    std::optional<int> n;     // ambient rank; required for orthogonal
};

/// Littlewood-Richardson coefficients by dual-equivalence class counting,
/// with independent cross-checking rules. Results are memoized; the memo
/// behaves as a thread-safe cache.
class LrTable {
public:
    /// Dual-equivalence classes of standard fillings, keyed by rectification
    /// shape.
    std::map<Partition, long long> class_histogram(const SkewShape& shape) {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = class_memo_.find(shape);
            if (it != class_memo_.end()) return it->second;
        }
        std::map<Partition, long long> hist;
        for (const DualClass& cls : dual_classes(shape)) ++hist[cls.rect_shape];
        std::lock_guard<std::mutex> lock(mu_);
        return class_memo_.emplace(shape, std::move(hist)).first->second;
    }

    /// Semistandard fillings whose reverse reading word is a lattice word,
    /// keyed by content.
    std::map<Partition, long long> lattice_histogram(const SkewShape& shape) {
        if (shape.shifted()) throw std::invalid_argument("lattice rule works on plain shapes");
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = lattice_memo_.find(shape);
            if (it != lattice_memo_.end()) return it->second;
        }
        std::map<Partition, long long> hist = lattice_fillings(shape);
        std::lock_guard<std::mutex> lock(mu_);
        return lattice_memo_.emplace(shape, std::move(hist)).first->second;
    }

    /// Number of dual-equivalence classes of SYT(nu/mu) rectifying to lambda.
    long long lr_gr(const Partition& lambda, const Partition& mu, const Partition& nu,
                    std::optional<int> n = std::nullopt) {
        if (n) {
            for (const Partition* p : {&lambda, &mu, &nu})
                if (!fits_gr_box(*p, *n))
                    throw std::invalid_argument("shape " + p->str() + " does not fit rank " +
                                                std::to_string(*n));
        }
        if (lambda.size() + mu.size() != nu.size()) return 0;
        if (!contains(nu, mu) || !contains(nu, lambda)) return 0;
        auto hist = class_histogram(SkewShape(nu, mu));
        auto it = hist.find(lambda);
        return it == hist.end() ? 0 : it->second;
    }

    /// Number of dual-equivalence classes of SST(kappa/tau) rectifying to
    /// sigma.
    long long lr_og(const StrictPartition& sigma, const StrictPartition& tau,
                    const StrictPartition& kappa, int n) {
        for (const StrictPartition* p : {&sigma, &tau, &kappa})
            if (!fits_og_box(*p, n))
                throw std::invalid_argument("strict shape " + p->str() + " does not fit rank " +
                                            std::to_string(n));
        if (sigma.size() + tau.size() != kappa.size()) return 0;
        if (!contains(kappa, tau) || !contains(kappa, sigma)) return 0;
        auto hist = class_histogram(SkewShape(kappa, tau));
        auto it = hist.find(sigma.as_partition());
        return it == hist.end() ? 0 : it->second;
    }

    /// Independent route: the lattice-word rule.
    long long lr_gr_lattice(const Partition& lambda, const Partition& mu, const Partition& nu) {
        if (lambda.size() + mu.size() != nu.size()) return 0;
        if (!contains(nu, mu)) return 0;
        auto hist = lattice_histogram(SkewShape(nu, mu));
        auto it = hist.find(lambda);
        return it == hist.end() ? 0 : it->second;
    }

    /// Independent route: expand P_sigma * P_tau exactly in |kappa| variables
    /// and read off the P_kappa coefficient.
    long long lr_og_schur_p(const StrictPartition& sigma, const StrictPartition& tau,
                            const StrictPartition& kappa) {
        if (sigma.size() + tau.size() != kappa.size()) return 0;
        auto expansion = schur_p_expansion(sigma, tau, kappa.size());
        for (const auto& [shape, coeff] : expansion)
            if (coeff < 0)
                throw std::logic_error("negative coefficient in the P-basis expansion");
        auto it = expansion.find(kappa);
        return it == expansion.end() ? 0 : it->second;
    }

    std::map<StrictPartition, long long> schur_p_expansion(const StrictPartition& sigma,
                                                           const StrictPartition& tau, int vars) {
        auto key = std::make_tuple(sigma, tau, vars);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = schurp_memo_.find(key);
            if (it != schurp_memo_.end()) return it->second;
        }
        auto expansion = schur_p_product_expansion(sigma, tau, vars);
        std::lock_guard<std::mutex> lock(mu_);
        return schurp_memo_.emplace(key, std::move(expansion)).first->second;
    }

    /// The strict partition pairing with kappa to intersection number one.
    /// Computed by rectifying a staircase complement, cross-checked against
    /// the part-complement rule.
    StrictPartition poincare_dual(const StrictPartition& kappa, int n) {
        if (!fits_og_box(kappa, n))
            throw std::invalid_argument("strict shape " + kappa.str() + " does not fit rank " +
                                        std::to_string(n));
        StrictPartition by_rectification;
        if (kappa == staircase(n)) {
            by_rectification = StrictPartition{};
        } else {
            Tableau rep = row_superstandard(SkewShape(staircase(n), kappa));
            by_rectification = StrictPartition(rectification_shape(rep));
        }
        std::vector<int> complement;
        for (int v = n; v >= 1; --v) {
            bool used = false;
            for (int p : kappa.parts()) used |= (p == v);
            if (!used) complement.push_back(v);
        }
        if (by_rectification != StrictPartition(complement))
            throw std::logic_error("rectified dual " + by_rectification.str() +
                                   " disagrees with the part complement of " + kappa.str());
        return by_rectification;
    }

    /// Coefficient of each [Y_sigma] in the |sigma|-th power of [Y_1],
    /// accumulated by repeated expansion against the class-counting rule.
    std::map<StrictPartition, long long> pieri_power_table(int n) {
        std::map<StrictPartition, long long> table;
        std::map<StrictPartition, long long> state{{StrictPartition{}, 1}};
        table[StrictPartition{}] = 1;
        const int dim = n * (n + 1) / 2;
        const StrictPartition one{1};
        for (int k = 1; k <= dim; ++k) {
            std::map<StrictPartition, long long> next;
            for (const auto& [sig, coeff] : state)
                for (const StrictPartition& kap : strict_partitions_in_box(n)) {
                    if (kap.size() != k || !contains(kap, sig)) continue;
                    long long c = lr_og(one, sig, kap, n);
                    if (c) next[kap] += coeff * c;
                }
            state = std::move(next);
            for (const auto& [sig, coeff] : state) table[sig] = coeff;
        }
        return table;
    }

    /// Number of equivalence classes of standard rectangle fillings under
    /// segment-wise dual equivalence, the segments cut by the composition.
    long long segment_class_count(const std::vector<int>& composition, int n) {
        validate_composition(composition, n);
        std::vector<int> bounds{0};
        for (int c : composition) bounds.push_back(bounds.back() + c);
        std::set<std::string> keys;
        for (const Tableau& t :
             enumerate_standard(SkewShape(rectangle_shape(n)), kEnumerationCap)) {
            std::string key;
            for (std::size_t l = 0; l + 1 < bounds.size(); ++l) {
                Tableau sub = t.subtableau(bounds[l] + 1, bounds[l + 1]);
                key += sub.shape().str() + "|" + tableau_str(dual_fingerprint(sub)) + ";";
            }
            keys.insert(key);
        }
        return static_cast<long long>(keys.size());
    }

    /// The same number as an intersection number: expand the product of
    /// full-degree sums of Schubert classes and take the point coefficient.
    long long segment_intersection_number(const std::vector<int>& composition, int n) {
        validate_composition(composition, n);
        std::map<Partition, long long> state{{Partition{}, 1}};
        for (int c : composition) {
            std::map<Partition, long long> next;
            for (const auto& [mu, coeff] : state)
                for (const Partition& nu : partitions_in_box(n, n + 1)) {
                    if (nu.size() != mu.size() + c || !contains(nu, mu)) continue;
                    long long total = 0;
                    for (const Partition& lam : partitions_of(c, n, n + 1))
                        total += lr_gr(lam, mu, nu, n);
                    if (total) next[nu] += coeff * total;
                }
            state = std::move(next);
        }
        auto it = state.find(rectangle_shape(n));
        return it == state.end() ? 0 : it->second;
    }

    long long run(const LrQuery& q, bool use_oracle_route = false) {
        if (q.kind == LrQuery::Kind::grassmannian) {
            return use_oracle_route ? lr_gr_lattice(q.first, q.second, q.target)
                                    : lr_gr(q.first, q.second, q.target, q.n);
        }
        if (!q.n) throw std::invalid_argument("orthogonal queries need the rank");
        StrictPartition s{q.first}, t{q.second}, k{q.target};
        return use_oracle_route ? lr_og_schur_p(s, t, k) : lr_og(s, t, k, *q.n);
    }

private:
    static void validate_composition(const std::vector<int>& composition, int n) {
        int sum = 0;
        for (int c : composition) {
            if (c <= 0) throw std::invalid_argument("composition parts must be positive");
            sum += c;
        }
        if (sum != n * (n + 1))
            throw std::invalid_argument("composition must sum to " + std::to_string(n * (n + 1)));
    }

    static std::map<Partition, long long> lattice_fillings(const SkewShape& shape) {
        // cells in reverse reading order: rows top to bottom, right to left
        std::vector<Cell> order;
        for (int r = 1; r <= shape.outer().length(); ++r)
            for (int c = shape.row_end(r); c >= shape.row_begin(r); --c) order.push_back({r, c});

        std::map<Partition, long long> hist;
        const int total = static_cast<int>(order.size());
        if (total == 0) {
            hist[Partition{}] = 1;
            return hist;
        }
        std::map<Cell, int> fill;
        std::vector<int> counts(total + 2, 0);
        std::function<void(int)> go = [&](int idx) {
            if (idx == total) {
                std::vector<int> content;
                for (int v = 1; v <= total && counts[v] > 0; ++v) content.push_back(counts[v]);
                ++hist[Partition(content)];
                return;
            }
            Cell cell = order[idx];
            auto right = fill.find({cell.row, cell.col + 1});
            auto above = fill.find({cell.row - 1, cell.col});
            int hi = right != fill.end() ? right->second : total;
            int lo = above != fill.end() ? above->second + 1 : 1;
            for (int v = lo; v <= hi; ++v) {
                if (v > 1 && counts[v] + 1 > counts[v - 1]) continue;  // lattice word
                ++counts[v];
                fill[cell] = v;
                go(idx + 1);
                fill.erase(cell);
                --counts[v];
            }
        };
        go(0);
        return hist;
    }

    std::mutex mu_;
    std::map<SkewShape, std::map<Partition, long long>> class_memo_;
    std::map<SkewShape, std::map<Partition, long long>> lattice_memo_;
    std::map<std::tuple<StrictPartition, StrictPartition, int>,
             std::map<StrictPartition, long long>>
        schurp_memo_;
};

}  // namespace ogw
