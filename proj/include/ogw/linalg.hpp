#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ogw/numeric.hpp"

namespace ogw {

using RatMatrix = std::vector<std::vector<Rat>>;

inline RatMatrix identity_matrix(int n) {
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = k ? static_cast<int>(b[0].size()) : 0;
    RatMatrix out(n, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

/// In-place reduced row echelon form; returns the rank.
inline int rref(RatMatrix& m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rat lead = m[rank][col];
        for (int j = 0; j < cols; ++j) m[rank][j] /= lead;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Rank by fraction-free (Bareiss) elimination over the integers after
/// clearing denominators row by row.
inline int exact_rank(const RatMatrix& input) {
    if (input.empty()) return 0;
    int rows = static_cast<int>(input.size());
    int cols = static_cast<int>(input[0].size());
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
    for (int i = 0; i < rows; ++i) {
        Int l = 1;
        for (int j = 0; j < cols; ++j) l = boost::multiprecision::lcm(l, den(input[i][j]));
        for (int j = 0; j < cols; ++j) m[i][j] = num(input[i][j]) * (l / den(input[i][j]));
    }
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = cols - 1; j >= col; --j)
                m[r][j] = (m[rank][col] * m[r][j] - m[r][col] * m[rank][j]) / prev;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

/// Solves A X = B for square A; empty when A is singular.
inline std::optional<RatMatrix> solve_linear(const RatMatrix& a, const RatMatrix& b) {
    int n = static_cast<int>(a.size());
    if (n == 0) return RatMatrix{};
    int m = static_cast<int>(b[0].size());
    RatMatrix probe = a;
    if (rref(probe) < n) return std::nullopt;
    RatMatrix aug(n, std::vector<Rat>(n + m, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        for (int j = 0; j < m; ++j) aug[i][n + j] = b[i][j];
    }
    if (rref(aug) < n) return std::nullopt;
    RatMatrix x(n, std::vector<Rat>(m, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) x[i][j] = aug[i][n + j];
    return x;
}

}  // namespace ogw
