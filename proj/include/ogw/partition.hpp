#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ogw/numeric.hpp"

namespace ogw {

/// Grid position, 1-based, rows growing downwards.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell& a, const Cell& b) {
        return std::pair(a.row, a.col) <=> std::pair(b.row, b.col);
    }
};

/// Weakly decreasing non-negative parts, trailing zeros trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
                throw std::invalid_argument("parts must be weakly decreasing and non-negative");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; zero beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    /// Text form "4,3,1"; the empty partition prints as "-".
    std::string str() const {
        if (parts_.empty()) return "-";
        std::ostringstream os;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        return os.str();
    }

    static Partition parse(const std::string& text) {
        if (text == "-" || text.empty()) return Partition{};
        std::vector<int> parts;
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad partition token: '" + tok + "'");
            }
            if (pos != tok.size()) throw std::invalid_argument("bad partition token: '" + tok + "'");
            parts.push_back(v);
        }
        return Partition(std::move(parts));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Strictly decreasing positive parts.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1]))
                throw std::invalid_argument("parts must be strictly decreasing and positive");
        }
    }
    StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}
    explicit StrictPartition(const Partition& p) : StrictPartition(p.parts()) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    Partition as_partition() const { return Partition(parts_); }
    std::string str() const { return as_partition().str(); }

    static StrictPartition parse(const std::string& text) {
        return StrictPartition(Partition::parse(text).parts());
    }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

inline bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

inline bool contains(const StrictPartition& outer, const StrictPartition& inner) {
    return contains(outer.as_partition(), inner.as_partition());
}

inline Partition conjugate(const Partition& p) {
    if (p.empty()) return {};
    std::vector<int> cols(p.part(1), 0);
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 0; j < p.part(i); ++j) ++cols[j];
    return Partition(std::move(cols));
}

/// Staircase (n, n-1, ..., 1).
inline StrictPartition staircase(int n) {
    std::vector<int> parts;
    for (int i = n; i >= 1; --i) parts.push_back(i);
    return StrictPartition(std::move(parts));
}

/// n rows of length n+1; the largest shape for rank n.
inline Partition rectangle_shape(int n) {
    return Partition(std::vector<int>(n, n + 1));
}

inline bool fits_gr_box(const Partition& p, int n) {
    return p.length() <= n && p.part(1) <= n + 1;
}

inline bool fits_og_box(const StrictPartition& p, int n) { return p.part(1) <= n; }

/// Glues the shifted diagram of sigma to its transpose: row i gains one box
/// for every row j whose shifted cells pass over column i.
inline Partition doubled_shape(const StrictPartition& sigma, int n) {
    if (sigma.part(1) > n)
        throw std::invalid_argument("strict partition does not fit rank " + std::to_string(n));
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
        int overlap = 0;
        for (int j = 1; j <= sigma.length(); ++j)
            if (j <= i && i < j + sigma.part(j)) ++overlap;
        parts.push_back(sigma.part(i) + overlap);
    }
    return Partition(std::move(parts));
}

inline Partition doubled_shape(const StrictPartition& sigma) {
    return doubled_shape(sigma, std::max(1, sigma.part(1)));
}

/// A skew diagram outer/inner, on the plain or the shifted grid. On the
/// shifted grid row j starts at column j and both shapes must be strict.
class SkewShape {
public:
    SkewShape() = default;
    SkewShape(Partition outer, Partition inner, bool shifted = false)
        : outer_(std::move(outer)), inner_(std::move(inner)), shifted_(shifted) {
        if (!ogw::contains(outer_, inner_))
            throw std::invalid_argument("inner shape " + inner_.str() +
                                        " not contained in outer " + outer_.str());
        if (shifted_) {
            StrictPartition{outer_};  // validates strictness
            StrictPartition{inner_};
        }
    }
    SkewShape(const StrictPartition& outer, const StrictPartition& inner)
        : SkewShape(outer.as_partition(), inner.as_partition(), true) {}
    explicit SkewShape(const Partition& straight) : SkewShape(straight, Partition{}, false) {}
    explicit SkewShape(const StrictPartition& straight)
        : SkewShape(straight, StrictPartition{}) {}

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    bool shifted() const { return shifted_; }
    bool straight() const { return inner_.empty(); }
    int size() const { return outer_.size() - inner_.size(); }

    int row_begin(int r) const {  // first column of row r
        return shifted_ ? r + inner_.part(r) : inner_.part(r) + 1;
    }
    int row_end(int r) const {  // last column of row r (begin-1 if empty)
        return shifted_ ? r + outer_.part(r) - 1 : outer_.part(r);
    }
    bool has_cell(int r, int c) const {
        return r >= 1 && r <= outer_.length() && c >= row_begin(r) && c <= row_end(r);
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (int r = 1; r <= outer_.length(); ++r)
            for (int c = row_begin(r); c <= row_end(r); ++c) out.push_back({r, c});
        return out;
    }

    std::string str() const {
        std::string s = outer_.str();
        if (!inner_.empty()) s += "/" + inner_.str();
        if (shifted_) s += " (shifted)";
        return s;
    }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape& a, const SkewShape& b) {
        return std::tuple(a.shifted_, a.outer_, a.inner_) <=>
               std::tuple(b.shifted_, b.outer_, b.inner_);
    }

private:
    Partition outer_;
    Partition inner_;
    bool shifted_ = false;
};

// ---------------------------------------------------------------------------
// Counting

namespace detail {

/// Counts standard fillings of an arbitrary skew diagram by walking the cell
/// poset row-frontier by row-frontier. Memoized on the per-row fill counts.
inline Int count_fillings(const SkewShape& shape) {
    const int rows = shape.outer().length();
    std::vector<int> width(rows + 1, 0), begin(rows + 1, 0);
    int total = 0;
    for (int r = 1; r <= rows; ++r) {
        begin[r] = shape.row_begin(r);
        width[r] = std::max(0, shape.row_end(r) - shape.row_begin(r) + 1);
        total += width[r];
    }
    if (total == 0) return 1;

    std::map<std::vector<int>, Int> memo;
    std::vector<int> filled(rows + 1, 0);
    std::function<Int(int)> go = [&](int placed) -> Int {
        if (placed == total) return 1;
        auto it = memo.find(filled);
        if (it != memo.end()) return it->second;
        Int total_count = 0;
        for (int r = 1; r <= rows; ++r) {
            if (filled[r] >= width[r]) continue;
            int col = begin[r] + filled[r];
            // the cell above must be outside the diagram or already filled
            if (r > 1 && shape.has_cell(r - 1, col) && begin[r - 1] + filled[r - 1] <= col)
                continue;
            ++filled[r];
            total_count += go(placed + 1);
            --filled[r];
        }
        memo[filled] = total_count;
        return total_count;
    };
    return go(0);
}

}  // namespace detail

/// Number of standard Young tableaux: hook lengths for straight shapes,
/// filling enumeration for skew ones.
inline Int count_syt(const SkewShape& shape) {
    if (shape.shifted()) throw std::invalid_argument("count_syt expects a plain shape");
    if (shape.straight()) {
        const Partition& p = shape.outer();
        Partition conj = conjugate(p);
        Int hooks = 1;
        for (int i = 1; i <= p.length(); ++i)
            for (int j = 1; j <= p.part(i); ++j)
                hooks *= (p.part(i) - j) + (conj.part(j) - i) + 1;
        return factorial(p.size()) / hooks;
    }
    return detail::count_fillings(shape);
}

inline Int count_syt(const Partition& p) { return count_syt(SkewShape(p)); }

/// Number of standard shifted tableaux, by filling enumeration.
inline Int count_sst(const SkewShape& shape) {
    if (!shape.shifted()) throw std::invalid_argument("count_sst expects a shifted shape");
    return detail::count_fillings(shape);
}

inline Int count_sst(const StrictPartition& p) { return count_sst(SkewShape(p)); }

// ---------------------------------------------------------------------------
// Shape generators, in lexicographic order.

inline std::vector<Partition> partitions_in_box(int max_rows, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int row, int bound) {
        out.push_back(Partition(cur));
        if (row > max_rows) return;
        for (int v = 1; v <= bound; ++v) {
            cur.push_back(v);
            go(row + 1, v);
            cur.pop_back();
        }
    };
    go(1, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Partition> partitions_of(int k, int max_rows, int max_part) {
    std::vector<Partition> out;
    for (const auto& p : partitions_in_box(max_rows, max_part))
        if (p.size() == k) out.push_back(p);
    return out;
}

/// All strict partitions with parts <= n (subsets of {1..n}).
inline std::vector<StrictPartition> strict_partitions_in_box(int n) {
    std::vector<StrictPartition> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> parts;
        for (int v = n; v >= 1; --v)
            if (mask & (1u << (v - 1))) parts.push_back(v);
        out.push_back(StrictPartition(std::move(parts)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<StrictPartition> strict_partitions_of(int k, int max_part) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int remaining, int bound) {
        if (remaining == 0) {
            out.push_back(StrictPartition(cur));
            return;
        }
        for (int v = std::min(remaining, bound); v >= 1; --v) {
            cur.push_back(v);
            go(remaining - v, v - 1);
            cur.pop_back();
        }
    };
    go(k, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

/// All partitions contained in p.
inline std::vector<Partition> subpartitions(const Partition& p) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> go = [&](int row, int bound) {
        out.push_back(Partition(cur));
        if (row > p.length()) return;
        for (int v = 1; v <= std::min(bound, p.part(row)); ++v) {
            cur.push_back(v);
            go(row + 1, v);
            cur.pop_back();
        }
    };
    go(1, p.part(1));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<StrictPartition> strict_subpartitions(const StrictPartition& p) {
    std::vector<StrictPartition> out;
    for (const auto& q : strict_partitions_in_box(std::max(1, p.part(1))))
        if (contains(p, q)) out.push_back(q);
    if (p.empty()) out.push_back(StrictPartition{});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace ogw
