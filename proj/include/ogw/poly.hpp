#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ogw/numeric.hpp"

namespace ogw {

/// A point of the rational projective line: a rational number or infinity.
struct ExtPoint {
    bool infinite = false;
    Rat value = 0;

    static ExtPoint at_infinity() { return {true, 0}; }
    static ExtPoint of(Rat v) { return {false, std::move(v)}; }

    static ExtPoint parse(const std::string& s) {
        if (s == "inf" || s == "infinity" || s == "oo") return at_infinity();
        return of(parse_rational(s));
    }
    std::string str() const { return infinite ? "inf" : rational_str(value); }

    friend bool operator==(const ExtPoint& a, const ExtPoint& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

/// Univariate polynomial with exact rational coefficients, low degree first.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RationalPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static RationalPoly constant(Rat v) { return RationalPoly({std::move(v)}); }
    static RationalPoly monomial(int degree, Rat coeff = 1) {
        std::vector<Rat> c(degree + 1, Rat(0));
        c[degree] = std::move(coeff);
        return RationalPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0); }
    Rat leading() const { return is_zero() ? Rat(0) : c_.back(); }

    Rat operator()(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return RationalPoly(std::move(c));
    }
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
        std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return RationalPoly(std::move(c));
    }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return RationalPoly(std::move(c));
    }
    friend RationalPoly operator*(const Rat& s, const RationalPoly& p) {
        if (s == 0) return {};
        std::vector<Rat> c = p.c_;
        for (Rat& v : c) v *= s;
        return RationalPoly(std::move(c));
    }

    RationalPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rat> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<int>(i)) * c_[i];
        return RationalPoly(std::move(d));
    }

    RationalPoly monic() const {
        if (is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
        return Rat(1) / leading() * *this;
    }

    /// Exact quotient and remainder.
    std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
        std::vector<Rat> rem(c_.begin(), c_.end());
        std::vector<Rat> quot(std::max<std::size_t>(1, c_.size()), Rat(0));
        int dd = d.degree();
        for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
            if (rem[k] == 0) continue;
            Rat q = rem[k] / d.leading();
            quot[k - dd] = q;
            for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.c_[j];
        }
        return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
    }

    /// Exact division; throws when the remainder is non-zero.
    RationalPoly exact_div(const RationalPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
        return q;
    }

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    /// Text form "c0,c1,...", optionally padded to a fixed length.
    std::string str(int fixed_len = 0) const {
        int len = std::max<int>(fixed_len, static_cast<int>(c_.size()));
        if (len == 0) len = 1;
        std::ostringstream os;
        for (int i = 0; i < len; ++i) {
            if (i) os << ',';
            os << rational_str(coeff(i));
        }
        return os.str();
    }

    static RationalPoly parse(const std::string& text) {
        std::vector<Rat> c;
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) c.push_back(parse_rational(tok));
        return RationalPoly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// ---------------------------------------------------------------------------
// Fraction-free gcd over the integers, used for square-free splitting.

namespace detail {

using ZPoly = std::vector<Int>;  // low degree first, trimmed

inline void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Int zcontent(const ZPoly& p) {
    Int g = 0;
    for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

inline ZPoly zprimitive(ZPoly p) {
    Int g = zcontent(p);
    if (g > 1)
        for (Int& c : p) c /= g;
    if (!p.empty() && p.back() < 0)
        for (Int& c : p) c = -c;
    return p;
}

/// prem(a, b): remainder of lead(b)^(deg a - deg b + 1) * a under b.
inline ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    Int lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int da = static_cast<int>(a.size()) - 1;
        Int la = a.back();
        for (Int& c : a) c *= lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
        ztrim(a);
    }
    return a;
}

inline ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    if (a.empty()) return zprimitive(std::move(b));
    if (b.empty()) return zprimitive(std::move(a));
    a = zprimitive(std::move(a));
    b = zprimitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zprimitive(zpseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline ZPoly clear_denominators(const RationalPoly& p) {
    Int l = 1;
    for (const Rat& c : p.coeffs()) l = boost::multiprecision::lcm(l, den(c));
    ZPoly out;
    for (const Rat& c : p.coeffs()) out.push_back(num(c) * (l / den(c)));
    ztrim(out);
    return out;
}

inline RationalPoly to_rational(const ZPoly& p) {
    std::vector<Rat> c;
    for (const Int& v : p) c.emplace_back(v);
    return RationalPoly(std::move(c));
}

}  // namespace detail

/// Primitive gcd, computed fraction-free over the integers after clearing
/// denominators.
inline RationalPoly poly_gcd(const RationalPoly& a, const RationalPoly& b) {
    return detail::to_rational(
        detail::zgcd(detail::clear_denominators(a), detail::clear_denominators(b)));
}

/// Square-free decomposition (Yun): monic factors with their multiplicities,
/// pairwise coprime, product over factor^multiplicity = p up to scalar.
inline std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    std::vector<std::pair<RationalPoly, int>> out;
    if (p.degree() == 0) return out;
    RationalPoly f = p.monic();
    RationalPoly fp = f.derivative();
    RationalPoly d = poly_gcd(f, fp).monic();
    if (d.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    RationalPoly b = f.exact_div(d);
    RationalPoly e = fp.exact_div(d) - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RationalPoly s = poly_gcd(b, e).monic();
        if (s.degree() > 0) out.emplace_back(s, i);
        b = b.exact_div(s);
        e = e.exact_div(s) - b.derivative();
        ++i;
    }
    return out;
}

/// True iff p = c * q^2 for a rational c and polynomial q: every square-free
/// factor occurs with even multiplicity.
inline bool is_perfect_square(const RationalPoly& p) {
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        if (mult % 2 != 0) return false;
    return true;
}

/// Monic square root by coefficient synthesis; independent of the gcd route.
inline std::optional<RationalPoly> poly_sqrt(const RationalPoly& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.degree() % 2 != 0) return std::nullopt;
    RationalPoly f = p.monic();
    int h = f.degree() / 2;
    std::vector<Rat> q(h + 1, Rat(0));
    q[h] = 1;
    for (int k = 1; k <= h; ++k) {
        Rat acc = 0;  // contributions to the coefficient of z^{2h-k}
        for (int i = h - k + 1; i <= h; ++i) {
            int j = 2 * h - k - i;
            if (j > h || j <= h - k) continue;
            acc += q[i] * q[j];
        }
        q[h - k] = (f.coeff(2 * h - k) - acc) / 2;
    }
    RationalPoly root{std::vector<Rat>(q.begin(), q.end())};
    if (root * root == f) return root;
    return std::nullopt;
}

/// Multiplicity of the factor (z + a); at infinity, the deficit against the
/// stated target degree.
inline int root_multiplicity(const RationalPoly& p, const ExtPoint& a, int target_degree) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (a.infinite) {
        int deficit = target_degree - p.degree();
        if (deficit < 0) throw std::invalid_argument("degree exceeds the stated target");
        return deficit;
    }
    RationalPoly cur = p;
    RationalPoly factor(std::vector<Rat>{a.value, Rat(1)});  // z + a
    int mult = 0;
    while (cur.degree() >= 1 && cur(-a.value) == 0) {
        cur = cur.exact_div(factor);
        ++mult;
    }
    return mult;
}

/// All rational a with (z + a) dividing p, with multiplicities. Factorizes
/// the outer coefficients by trial division.
inline std::vector<std::pair<Rat, int>> rational_divisor_points(const RationalPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    std::vector<std::pair<Rat, int>> out;
    detail::ZPoly z = detail::zprimitive(detail::clear_denominators(p));

    int zero_mult = 0;
    while (static_cast<int>(z.size()) > 1 && z[0] == 0) {
        z.erase(z.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) out.emplace_back(Rat(0), zero_mult);
    if (z.size() <= 1) return out;

    auto divisors = [](Int v) {
        std::vector<Int> primes;
        Int n = boost::multiprecision::abs(v);
        for (Int d = 2; d * d <= n && d < 1000000; ++d)
            while (n % d == 0) {
                primes.push_back(d);
                n /= d;
            }
        if (n > 1) primes.push_back(n);
        std::vector<Int> divs{1};
        for (const Int& q : primes) {
            std::vector<Int> more;
            for (const Int& d : divs) more.push_back(d * q);
            for (const Int& d : more)
                if (std::find(divs.begin(), divs.end(), d) == divs.end()) divs.push_back(d);
        }
        return divs;
    };

    RationalPoly q = detail::to_rational(z);
    for (const Int& d1 : divisors(z.front())) {
        for (const Int& d2 : divisors(z.back())) {
            for (int sign : {1, -1}) {
                Int numerator = sign > 0 ? d1 : Int(-d1);
                Rat root(numerator, d2);  // candidate zero of q
                if (q(root) != 0) continue;
                Rat a = -root;
                bool seen = false;
                for (const auto& [prev, mult] : out) seen |= (prev == a);
                if (seen) continue;
                int mult = root_multiplicity(q, ExtPoint::of(a), 0x7fffffff - 1);
                out.emplace_back(a, mult);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ogw
