#pragma once

#include <algorithm>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ogw/partition.hpp"

namespace ogw {

/// A standard filling of a skew diagram, plain or shifted, with distinct
/// integer entries increasing along rows and down columns. One grid
/// representation backs both kinds; the shape carries the flag.
class Tableau {
public:
    Tableau() = default;

    /// Entries listed row-major over the shape's cells.
    Tableau(SkewShape shape, const std::vector<int>& row_major)
        : shape_(std::move(shape)) {
        auto cs = shape_.cells();
        if (cs.size() != row_major.size())
            throw std::invalid_argument("entry count does not match shape " + shape_.str());
        for (std::size_t i = 0; i < cs.size(); ++i) cells_.emplace_back(cs[i], row_major[i]);
        validate();
    }

    static Tableau from_cells(bool shifted, const std::map<Cell, int>& entries) {
        Tableau t;
        t.shape_ = infer_shape(shifted, entries);
        for (const auto& [cell, v] : entries) t.cells_.emplace_back(cell, v);
        t.validate();
        return t;
    }

    const SkewShape& shape() const { return shape_; }
    bool shifted() const { return shape_.shifted(); }
    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }

    /// (cell, value) pairs in row-major order.
    const std::vector<std::pair<Cell, int>>& entries() const { return cells_; }

    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (const auto& [c, v] : cells_) w.push_back(v);
        return w;
    }

    std::optional<int> value_at(int row, int col) const {
        for (const auto& [c, v] : cells_)
            if (c.row == row && c.col == col) return v;
        return std::nullopt;
    }

    std::optional<Cell> find(int value) const {
        for (const auto& [c, v] : cells_)
            if (v == value) return c;
        return std::nullopt;
    }

    std::vector<int> sorted_values() const {
        std::vector<int> vals;
        for (const auto& [c, v] : cells_) vals.push_back(v);
        std::sort(vals.begin(), vals.end());
        return vals;
    }

    /// Restriction to entries in [lo, hi]; values keep their positions.
    Tableau subtableau(int lo, int hi) const {
        std::map<Cell, int> kept;
        for (const auto& [c, v] : cells_)
            if (v >= lo && v <= hi) kept[c] = v;
        return from_cells(shifted(), kept);
    }

    /// Same positions, entries remapped to 1..m preserving order.
    Tableau normalized() const {
        auto vals = sorted_values();
        std::map<int, int> rank;
        for (std::size_t i = 0; i < vals.size(); ++i) rank[vals[i]] = static_cast<int>(i) + 1;
        std::map<Cell, int> entries;
        for (const auto& [c, v] : cells_) entries[c] = rank[v];
        return from_cells(shifted(), entries);
    }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.shifted() == b.shifted() && a.cells_ == b.cells_;
    }
    friend bool operator!=(const Tableau& a, const Tableau& b) { return !(a == b); }
    /// Row-reading lexicographic order (on equal cell sets this compares
    /// reading words).
    friend bool operator<(const Tableau& a, const Tableau& b) {
        return std::tuple(a.shifted(), a.cells_) < std::tuple(b.shifted(), b.cells_);
    }

    /// Canonical skew shape of an explicit cell set. Rows without cells take
    /// the narrowest width compatible with the rows below.
    static SkewShape infer_shape(bool shifted, const std::map<Cell, int>& entries) {
        int rows = 0;
        for (const auto& [c, v] : entries) rows = std::max(rows, c.row);
        std::vector<int> outer(rows + 2, 0), inner(rows + 2, 0);
        for (int r = rows; r >= 1; --r) {
            int lo = std::numeric_limits<int>::max(), hi = 0;
            for (const auto& [c, v] : entries)
                if (c.row == r) {
                    lo = std::min(lo, c.col);
                    hi = std::max(hi, c.col);
                }
            if (hi == 0) {  // empty row: collapse onto the row below
                int below = outer[r + 1];
                outer[r] = inner[r] = below == 0 ? 0 : below + (shifted ? 1 : 0);
            } else if (shifted) {
                if (lo < r)
                    throw std::invalid_argument("cell left of the diagonal in a shifted tableau");
                inner[r] = lo - r;
                outer[r] = hi - r + 1;
            } else {
                inner[r] = lo - 1;
                outer[r] = hi;
            }
        }
        outer.resize(rows + 1);
        inner.resize(rows + 1);
        SkewShape shape(Partition(std::vector<int>(outer.begin() + 1, outer.end())),
                        Partition(std::vector<int>(inner.begin() + 1, inner.end())), shifted);
        auto cs = shape.cells();
        if (cs.size() != entries.size())
            throw std::invalid_argument("cells do not form a skew diagram");
        for (const Cell& c : cs)
            if (!entries.count(c)) throw std::invalid_argument("cells do not form a skew diagram");
        return shape;
    }

private:
    void validate() const {
        std::vector<int> vals = sorted_values();
        if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
            throw std::invalid_argument("repeated entry in tableau");
        for (const auto& [c, v] : cells_) {
            auto right = value_at(c.row, c.col + 1);
            if (right && *right <= v)
                throw std::invalid_argument("row entries must increase");
            auto below = value_at(c.row + 1, c.col);
            if (below && *below <= v)
                throw std::invalid_argument("column entries must increase");
        }
    }

    SkewShape shape_;
    std::vector<std::pair<Cell, int>> cells_;  // row-major
};

// ---------------------------------------------------------------------------
// Text format: one line per row, "." for a grid position without a cell,
// optional leading "shifted" header line.

inline Tableau parse_tableau(std::istream& in) {
    bool shifted = false;
    std::map<Cell, int> entries;
    int row = 0;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (first && toks.size() == 1 && (toks[0] == "shifted" || toks[0] == "plain")) {
            shifted = (toks[0] == "shifted");
            first = false;
            continue;
        }
        first = false;
        ++row;
        for (std::size_t c = 0; c < toks.size(); ++c) {
            if (toks[c] == ".") continue;
            std::size_t pos = 0;
            int v;
            try {
                v = std::stoi(toks[c], &pos);
            } catch (const std::exception&) {
                pos = std::string::npos;
            }
            if (pos != toks[c].size())
                throw std::invalid_argument("bad tableau token: '" + toks[c] + "'");
            entries[{row, static_cast<int>(c) + 1}] = v;
        }
    }
    return Tableau::from_cells(shifted, entries);
}

inline Tableau parse_tableau(const std::string& text) {
    std::istringstream is(text);
    return parse_tableau(is);
}

inline void print_tableau(std::ostream& out, const Tableau& t, bool with_header = true) {
    if (with_header && t.shifted()) out << "shifted\n";
    const SkewShape& s = t.shape();
    for (int r = 1; r <= s.outer().length(); ++r) {
        if (s.row_end(r) < s.row_begin(r)) {
            out << ".\n";
            continue;
        }
        for (int c = 1; c <= s.row_end(r); ++c) {
            if (c > 1) out << ' ';
            if (c < s.row_begin(r))
                out << '.';
            else
                out << *t.value_at(r, c);
        }
        out << '\n';
    }
}

inline std::string tableau_str(const Tableau& t, bool with_header = true) {
    std::ostringstream os;
    print_tableau(os, t, with_header);
    return os.str();
}

// ---------------------------------------------------------------------------
// Doubling

/// True iff the entries, taken in increasing order v_1 < v_2 < ..., satisfy
/// row(v_2k) = col(v_2k-1) and col(v_2k) = row(v_2k-1) + 1 for every pair.
/// Throws on an odd number of entries.
inline bool is_symmetrical(const Tableau& t) {
    if (t.shifted()) throw std::invalid_argument("is_symmetrical expects a plain tableau");
    if (t.size() % 2 != 0)
        throw std::invalid_argument("symmetry is defined for an even number of entries");
    auto vals = t.sorted_values();
    for (std::size_t k = 0; k + 1 < vals.size(); k += 2) {
        Cell odd = *t.find(vals[k]);
        Cell even = *t.find(vals[k + 1]);
        if (even.row != odd.col || even.col != odd.row + 1) return false;
    }
    return true;
}

/// The plain tableau carrying each shifted entry v twice: 2v-1 on the
/// transposed cell, 2v one column right of the original cell. For a straight
/// shifted tableau the result is symmetrical and has the doubled shape.
inline Tableau doubled(const Tableau& t) {
    if (!t.shifted()) throw std::invalid_argument("doubled expects a shifted tableau");
    std::map<Cell, int> entries;
    for (const auto& [c, v] : t.entries()) {
        entries[{c.col, c.row}] = 2 * v - 1;
        entries[{c.row, c.col + 1}] = 2 * v;
    }
    return Tableau::from_cells(false, entries);
}

/// Inverse of doubled. Reports the first violated coordinate relation.
inline Tableau undoubled(const Tableau& t) {
    if (t.shifted()) throw std::invalid_argument("undoubled expects a plain tableau");
    if (t.size() % 2 != 0)
        throw std::invalid_argument("cannot undouble an odd number of entries");
    auto vals = t.sorted_values();
    std::map<Cell, int> entries;
    for (std::size_t k = 0; k + 1 < vals.size(); k += 2) {
        Cell odd = *t.find(vals[k]);
        Cell even = *t.find(vals[k + 1]);
        if (even.row != odd.col || even.col != odd.row + 1) {
            std::ostringstream os;
            os << "not symmetrical: pair " << (k / 2 + 1) << " has entry " << vals[k] << " at ("
               << odd.row << "," << odd.col << ") and entry " << vals[k + 1] << " at ("
               << even.row << "," << even.col << "); expected row " << odd.col << " and column "
               << odd.row + 1;
            throw std::invalid_argument(os.str());
        }
        bool literal_pair = (vals[k + 1] % 2 == 0) && (vals[k] == vals[k + 1] - 1);
        int v = literal_pair ? vals[k + 1] / 2 : static_cast<int>(k / 2) + 1;
        entries[{even.row, even.col - 1}] = v;
    }
    return Tableau::from_cells(true, entries);
}

// ---------------------------------------------------------------------------
// Enumeration

/// Rows filled left to right, top to bottom, with 1..m.
inline Tableau row_superstandard(const SkewShape& shape) {
    std::vector<int> vals(shape.cells().size());
    for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = static_cast<int>(i) + 1;
    return Tableau(shape, vals);
}

/// Visits every standard filling; positions[v] is the cell of value v
/// (1-based, positions[0] unused).
inline void for_each_standard(const SkewShape& shape,
                              const std::function<void(const std::vector<Cell>&)>& fn) {
    const int rows = shape.outer().length();
    const int total = shape.size();
    std::vector<Cell> positions(total + 1);
    std::vector<int> filled(rows + 2, 0);
    std::function<void(int)> go = [&](int v) {
        if (v > total) {
            fn(positions);
            return;
        }
        for (int r = 1; r <= rows; ++r) {
            int width = shape.row_end(r) - shape.row_begin(r) + 1;
            if (filled[r] >= std::max(0, width)) continue;
            int col = shape.row_begin(r) + filled[r];
            if (r > 1 && shape.has_cell(r - 1, col) &&
                shape.row_begin(r - 1) + filled[r - 1] <= col)
                continue;
            positions[v] = {r, col};
            ++filled[r];
            go(v + 1);
            --filled[r];
        }
    };
    go(1);
}

inline constexpr int kEnumerationCap = 16;

/// All standard fillings with entries 1..m, in row-reading lexicographic
/// order. Throws once the shape exceeds the cap.
inline std::vector<Tableau> enumerate_standard(const SkewShape& shape,
                                               int cap = kEnumerationCap) {
    if (shape.size() > cap)
        throw std::length_error("shape " + shape.str() + " exceeds the enumeration cap of " +
                                std::to_string(cap) + " cells");
    std::vector<Tableau> out;
    for_each_standard(shape, [&](const std::vector<Cell>& positions) {
        std::map<Cell, int> entries;
        for (std::size_t v = 1; v < positions.size(); ++v)
            entries[positions[v]] = static_cast<int>(v);
        out.push_back(Tableau::from_cells(shape.shifted(), entries));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Tableau> enumerate_shifted(const SkewShape& shape,
                                              int cap = kEnumerationCap) {
    if (!shape.shifted()) throw std::invalid_argument("enumerate_shifted expects a shifted shape");
    return enumerate_standard(shape, cap);
}

}  // namespace ogw
