#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "ogw/partition.hpp"

namespace ogw {

/// Monomial in up to 16 variables, 4 bits of exponent per variable.
using Mono = std::uint64_t;
/// Sparse integer polynomial, exact coefficients.
using PolyZ = std::map<Mono, long long>;

inline constexpr int kMaxVars = 16;

inline Mono mono_shift(int var, int exp) {
    return static_cast<Mono>(exp) << (4 * var);
}

inline Mono mono_of(const StrictPartition& p) {
    Mono m = 0;
    for (int i = 0; i < p.length(); ++i) m |= mono_shift(i, p.parts()[i]);
    return m;
}

namespace detail {

inline bool is_vertical_strip_cells(const std::vector<Cell>& cells) {
    std::map<int, int> per_row;
    for (const Cell& c : cells)
        if (++per_row[c.row] > 1) return false;
    return true;
}

inline bool is_horizontal_strip_cells(const std::vector<Cell>& cells) {
    std::map<int, int> per_col;
    for (const Cell& c : cells)
        if (++per_col[c.col] > 1) return false;
    return true;
}

/// Ways to place one letter (primed and unprimed marks) extending mu to lam
/// on the shifted grid: an intermediate nu with nu/mu a vertical strip that
/// starts no new row (primes stay off the diagonal) and lam/nu a horizontal
/// strip.
inline long long marked_addition_count(const StrictPartition& mu, const StrictPartition& lam) {
    if (!contains(lam, mu)) return 0;
    const int rows = mu.length();
    long long ways = 0;
    for (unsigned mask = 0; mask < (1u << rows); ++mask) {
        std::vector<int> nu_parts;
        bool ok = true;
        for (int j = 0; j < rows && ok; ++j) {
            int v = mu.parts()[j] + ((mask >> j) & 1u);
            if (v > lam.part(j + 1)) ok = false;
            nu_parts.push_back(v);
        }
        if (!ok) continue;
        for (std::size_t j = 0; j + 1 < nu_parts.size() && ok; ++j)
            if (nu_parts[j] <= nu_parts[j + 1]) ok = false;
        if (!ok) continue;
        StrictPartition nu(nu_parts);
        if (!is_horizontal_strip_cells(SkewShape(lam, nu).cells())) continue;
        ++ways;
    }
    return ways;
}

}  // namespace detail

/// Schur P-polynomial of a strict partition in m variables, built one letter
/// at a time over prefix shapes. Memoized behind a lock; map references stay
/// valid across inserts.
inline const PolyZ& schur_p(const StrictPartition& lambda, int m) {
    if (m > kMaxVars) throw std::invalid_argument("too many variables for packed monomials");
    static std::map<std::pair<StrictPartition, int>, PolyZ> memo;
    static std::mutex memo_mu;
    auto key = std::make_pair(lambda, m);
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    std::vector<StrictPartition> shapes = strict_subpartitions(lambda);
    std::map<StrictPartition, PolyZ> layer;
    layer[StrictPartition{}] = PolyZ{{0, 1}};
    for (int var = 0; var < m; ++var) {
        std::map<StrictPartition, PolyZ> next;
        for (const StrictPartition& target : shapes) {
            PolyZ acc;
            for (const auto& [mu, poly] : layer) {
                if (!contains(target, mu)) continue;
                long long ways = detail::marked_addition_count(mu, target);
                if (ways == 0) continue;
                Mono step = mono_shift(var, target.size() - mu.size());
                for (const auto& [mono, coeff] : poly) acc[mono + step] += coeff * ways;
            }
            if (!acc.empty()) next[target] = std::move(acc);
        }
        layer = std::move(next);
    }
    std::lock_guard<std::mutex> lock(memo_mu);
    return memo.emplace(key, layer.count(lambda) ? layer[lambda] : PolyZ{}).first->second;
}

inline PolyZ poly_mul(const PolyZ& a, const PolyZ& b) {
    PolyZ out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out[ma + mb] += ca * cb;
    return out;
}

/// Expands P_sigma * P_tau in the P-basis by peeling leading monomials in
/// lexicographically decreasing order of strict partitions. Throws if a
/// remainder survives (the product must lie in the span).
inline std::map<StrictPartition, long long> schur_p_product_expansion(
    const StrictPartition& sigma, const StrictPartition& tau, int m) {
    const int total = sigma.size() + tau.size();
    PolyZ rem = poly_mul(schur_p(sigma, m), schur_p(tau, m));

    std::vector<StrictPartition> basis = strict_partitions_of(total, total);
    std::sort(basis.begin(), basis.end(),
              [](const StrictPartition& a, const StrictPartition& b) { return b < a; });

    std::map<StrictPartition, long long> out;
    for (const StrictPartition& kappa : basis) {
        if (kappa.length() > m) continue;
        auto it = rem.find(mono_of(kappa));
        long long c = (it == rem.end()) ? 0 : it->second;
        if (c == 0) continue;
        out[kappa] = c;
        for (const auto& [mono, coeff] : schur_p(kappa, m)) {
            auto jt = rem.find(mono);
            if (jt == rem.end()) jt = rem.emplace(mono, 0).first;
            jt->second -= c * coeff;
            if (jt->second == 0) rem.erase(jt);
        }
    }
    if (!rem.empty())
        throw std::logic_error("P-function product does not resolve in the P-basis");
    return out;
}

}  // namespace ogw
