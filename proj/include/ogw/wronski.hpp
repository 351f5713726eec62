#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogw/linalg.hpp"
#include "ogw/partition.hpp"
#include "ogw/poly.hpp"

namespace ogw {

/// A subspace of the polynomials of degree at most 2n, held as the reduced
/// row echelon form of its basis in the monomial basis. Equal subspaces have
/// identical stored bases.
class Subspace {
public:
    Subspace(int n, const std::vector<RationalPoly>& basis) : n_(n) {
        if (n < 1) throw std::invalid_argument("ambient rank must be positive");
        RatMatrix m;
        for (const RationalPoly& p : basis) {
            if (p.degree() > 2 * n)
                throw std::invalid_argument("degree exceeds the ambient space");
            std::vector<Rat> row(2 * n + 1, Rat(0));
            for (int k = 0; k <= p.degree(); ++k) row[k] = p.coeff(k);
            m.push_back(std::move(row));
        }
        int rank = rref(m);
        if (rank != static_cast<int>(m.size()))
            throw std::invalid_argument("basis polynomials are linearly dependent");
        rows_ = std::move(m);
    }

    int ambient_rank() const { return n_; }           // the n of C_{2n}[z]
    int ambient_dim() const { return 2 * n_ + 1; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const RatMatrix& coefficient_rows() const { return rows_; }

    std::vector<RationalPoly> basis() const {
        std::vector<RationalPoly> out;
        for (const auto& row : rows_) out.emplace_back(std::vector<Rat>(row));
        return out;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    int n_;
    RatMatrix rows_;
};

/// Subspace file: header "n=<N>", then one polynomial per line, "c0,c1,...".
inline Subspace parse_subspace(std::istream& in) {
    std::string line;
    int n = 0;
    std::vector<RationalPoly> basis;
    bool have_n = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!have_n) {
            if (line.rfind("n=", 0) != 0)
                throw std::invalid_argument("subspace file must start with 'n=<rank>'");
            n = std::stoi(line.substr(2));
            have_n = true;
            continue;
        }
        basis.push_back(RationalPoly::parse(line));
    }
    if (!have_n) throw std::invalid_argument("missing subspace header");
    return Subspace(n, basis);
}

inline Subspace parse_subspace(const std::string& text) {
    std::istringstream is(text);
    return parse_subspace(is);
}

inline std::string subspace_str(const Subspace& x) {
    std::ostringstream os;
    os << "n=" << x.ambient_rank() << "\n";
    for (const RationalPoly& p : x.basis()) os << p.str(x.ambient_dim()) << "\n";
    return os.str();
}

/// Monic Wronskian determinant of a basis; independent of the basis choice.
inline RationalPoly wronskian(const Subspace& x) {
    const auto basis = x.basis();
    const int d = static_cast<int>(basis.size());
    if (d == 0) return RationalPoly::constant(1);
    std::vector<std::vector<RationalPoly>> m(d, std::vector<RationalPoly>(d));
    for (int c = 0; c < d; ++c) {
        m[0][c] = basis[c];
        for (int r = 1; r < d; ++r) m[r][c] = m[r - 1][c].derivative();
    }
    // permutation expansion; d stays tiny
    std::vector<int> perm(d);
    for (int i = 0; i < d; ++i) perm[i] = i;
    RationalPoly det;
    do {
        int inversions = 0;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) inversions += perm[i] > perm[j];
        RationalPoly term = RationalPoly::constant(inversions % 2 ? -1 : 1);
        for (int r = 0; r < d; ++r) term = term * m[r][perm[r]];
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (det.is_zero()) throw std::logic_error("vanishing Wronskian of an independent basis");
    return det.monic();
}

/// The symmetric pairing sum_m (-1)^m a_m b_{2n-m} in divided-power
/// coordinates a_m = m! c_m.
inline Rat bilinear(const RationalPoly& f, const RationalPoly& g, int n) {
    if (f.degree() > 2 * n || g.degree() > 2 * n)
        throw std::invalid_argument("degree exceeds the ambient space");
    Rat acc = 0;
    for (int m = 0; m <= 2 * n; ++m) {
        Rat a = Rat(factorial(m)) * f.coeff(m);
        Rat b = Rat(factorial(2 * n - m)) * g.coeff(2 * n - m);
        acc += (m % 2 ? -a : a) * b;
    }
    return acc;
}

inline RatMatrix gram_matrix(int n) {
    const int dim = 2 * n + 1;
    RatMatrix g(dim, std::vector<Rat>(dim, Rat(0)));
    for (int k = 0; k < dim; ++k)
        g[k][2 * n - k] = Rat((k % 2 ? -1 : 1) * factorial(k) * factorial(2 * n - k));
    return g;
}

inline bool is_isotropic(const Subspace& x) {
    const auto basis = x.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (bilinear(basis[i], basis[j], x.ambient_rank()) != 0) return false;
    return true;
}

/// The i-dimensional flag space at a: polynomials divisible by
/// (z+a)^(2n+1-i); at infinity, polynomials of degree below i.
inline Subspace osculating_flag(int i, const ExtPoint& a, int n) {
    if (i < 0 || i > 2 * n + 1) throw std::invalid_argument("flag index out of range");
    std::vector<RationalPoly> basis;
    if (a.infinite) {
        for (int j = 0; j < i; ++j) basis.push_back(RationalPoly::monomial(j));
    } else {
        RationalPoly factor(std::vector<Rat>{a.value, Rat(1)});  // z + a
        RationalPoly power = RationalPoly::constant(1);
        for (int e = 0; e < 2 * n + 1 - i; ++e) power = power * factor;
        for (int j = 0; j < i; ++j) {
            basis.push_back(power);
            power = power * factor;
        }
    }
    return Subspace(n, basis);
}

inline int intersect_dim(const Subspace& x, const Subspace& f) {
    if (x.ambient_rank() != f.ambient_rank())
        throw std::invalid_argument("subspaces live in different ambient spaces");
    RatMatrix stacked = x.coefficient_rows();
    for (const auto& row : f.coefficient_rows()) stacked.push_back(row);
    return x.dim() + f.dim() - exact_rank(stacked);
}

inline bool in_schubert_gr(const Subspace& x, const Partition& lambda, const ExtPoint& a) {
    const int n = x.ambient_rank();
    if (!fits_gr_box(lambda, n))
        throw std::invalid_argument("shape " + lambda.str() + " does not fit rank " +
                                    std::to_string(n));
    if (x.dim() != n) throw std::invalid_argument("expected an n-dimensional subspace");
    for (int i = 1; i <= n; ++i) {
        int idx = n + 1 - lambda.part(i) + i;
        if (intersect_dim(x, osculating_flag(idx, a, n)) < i) return false;
    }
    return true;
}

inline bool in_schubert_og(const Subspace& y, const StrictPartition& sigma, const ExtPoint& a) {
    const int n = y.ambient_rank();
    if (!fits_og_box(sigma, n))
        throw std::invalid_argument("strict shape " + sigma.str() + " does not fit rank " +
                                    std::to_string(n));
    return is_isotropic(y) && in_schubert_gr(y, doubled_shape(sigma, n), a);
}

/// span{z^(n+1), ..., z^(2n)}: isotropic, with Wronskian z^(n(n+1)).
inline Subspace seed_isotropic(int n) {
    std::vector<RationalPoly> basis;
    for (int j = n + 1; j <= 2 * n; ++j) basis.push_back(RationalPoly::monomial(j));
    return Subspace(n, basis);
}

/// Image of the seed subspace under the Cayley transform (I-S)^{-1}(I+S) of
/// S = G^{-1} A, an infinitesimal isometry of the pairing. Throws when I-S
/// is singular.
inline Subspace cayley_isotropic(int n, const RatMatrix& antisym) {
    const int dim = 2 * n + 1;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (antisym[i][j] != -antisym[j][i])
                throw std::invalid_argument("expected an antisymmetric matrix");
    RatMatrix g = gram_matrix(n);
    auto ginv = solve_linear(g, identity_matrix(dim));
    RatMatrix s = matmul(*ginv, antisym);
    RatMatrix lhs = identity_matrix(dim), rhs = identity_matrix(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            lhs[i][j] -= s[i][j];
            rhs[i][j] += s[i][j];
        }
    auto q = solve_linear(lhs, rhs);
    if (!q) throw std::domain_error("singular Cayley transform");
    std::vector<RationalPoly> basis;
    for (int col = n + 1; col <= 2 * n; ++col) {
        std::vector<Rat> coeffs(dim, Rat(0));
        for (int row = 0; row < dim; ++row) coeffs[row] = (*q)[row][col];
        basis.emplace_back(std::move(coeffs));
    }
    return Subspace(n, basis);
}

/// Deterministic per seed; resamples until the transform is regular.
inline Subspace random_isotropic(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int dim = 2 * n + 1;
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatMatrix a(dim, std::vector<Rat>(dim, Rat(0)));
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j) {
                int v = static_cast<int>(rng() % 19) - 9;
                a[i][j] = v;
                a[j][i] = -v;
            }
        try {
            Subspace y = cayley_isotropic(n, a);
            if (!is_isotropic(y)) throw std::logic_error("isometry failed to preserve the form");
            return y;
        } catch (const std::domain_error&) {
            continue;  // singular draw
        }
    }
    throw std::runtime_error("could not sample a regular transform");
}

/// A random point of the plain Grassmannian, from small integer coefficients.
inline Subspace random_subspace(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<RationalPoly> basis;
        for (int r = 0; r < n; ++r) {
            std::vector<Rat> coeffs(2 * n + 1);
            for (auto& c : coeffs) c = static_cast<int>(rng() % 19) - 9;
            basis.emplace_back(std::move(coeffs));
        }
        try {
            return Subspace(n, basis);
        } catch (const std::invalid_argument&) {
            continue;  // dependent draw
        }
    }
    throw std::runtime_error("could not sample an independent basis");
}

struct DivisibilityReport {
    bool pass = false;
    ExtPoint point;
    int multiplicity = 0;   // order of (z+a) in the Wronskian
    int max_gr_weight = 0;  // largest |lambda| with x in X_lambda(a)
    bool isotropic = false;
    int max_og_weight = 0;  // largest |sigma| with x in Y_sigma(a), when isotropic
    std::string detail;
};

/// Checks the divisibility laws at one point: the root multiplicity must
/// equal the largest Schubert weight, and for isotropic subspaces it must be
/// even with half of it attained on the orthogonal side.
inline DivisibilityReport check_divisibility(const Subspace& x, const ExtPoint& a) {
    const int n = x.ambient_rank();
    DivisibilityReport rep;
    rep.point = a;
    RationalPoly wr = wronskian(x);
    rep.multiplicity = root_multiplicity(wr, a, n * (n + 1));
    rep.max_gr_weight = 0;
    for (const Partition& lam : partitions_in_box(n, n + 1))
        if (in_schubert_gr(x, lam, a)) rep.max_gr_weight = std::max(rep.max_gr_weight, lam.size());
    rep.isotropic = is_isotropic(x);
    rep.pass = (rep.multiplicity == rep.max_gr_weight);
    if (!rep.pass)
        rep.detail = "multiplicity " + std::to_string(rep.multiplicity) + " but weight " +
                     std::to_string(rep.max_gr_weight) + " at a=" + a.str();
    if (rep.isotropic) {
        rep.max_og_weight = 0;
        for (const StrictPartition& sig : strict_partitions_in_box(n))
            if (in_schubert_og(x, sig, a)) rep.max_og_weight = std::max(rep.max_og_weight, sig.size());
        bool even_ok = (rep.multiplicity % 2 == 0) && (rep.multiplicity / 2 == rep.max_og_weight);
        if (!even_ok) {
            rep.pass = false;
            rep.detail += std::string(rep.detail.empty() ? "" : "; ") + "isotropic side: multiplicity " +
                          std::to_string(rep.multiplicity) + " vs strict weight " +
                          std::to_string(rep.max_og_weight) + " at a=" + a.str();
        }
    }
    return rep;
}

}  // namespace ogw
