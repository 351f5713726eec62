#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogw/partition.hpp"
#include "ogw/tableau.hpp"

namespace ogw {

struct SwitchResult {
    Tableau inner;  // carries the entries of the outer input
    Tableau outer;  // carries the entries of the inner input
};

/// Cells visited by one sliding entry, start first.
struct SlideRecord {
    int value = 0;
    std::vector<Cell> path;
};

/// Slides every entry of `inner_u` through `outer_t`, largest first. At each
/// step the smaller of the right/below entries of the outer tableau swaps
/// with the slider. Works verbatim on plain and shifted grids.
inline SwitchResult switch_tableaux(const Tableau& inner_u, const Tableau& outer_t,
                                    std::vector<SlideRecord>* trace = nullptr) {
    if (inner_u.shifted() != outer_t.shifted())
        throw std::invalid_argument("cannot switch tableaux of different kinds");
    if (outer_t.empty()) return {Tableau::from_cells(inner_u.shifted(), {}), inner_u};
    if (!inner_u.empty() && !inner_u.shape().straight())
        throw std::invalid_argument("the inner tableau must have straight shape");

    enum class Owner { T, U };
    std::map<Cell, std::pair<int, Owner>> grid;
    for (const auto& [c, v] : inner_u.entries()) grid[c] = {v, Owner::U};
    for (const auto& [c, v] : outer_t.entries()) {
        if (!grid.emplace(c, std::pair{v, Owner::T}).second)
            throw std::invalid_argument("overlapping tableaux");
    }
    if (!inner_u.empty()) {
        // together the two cell sets must tile one straight diagram
        std::map<Cell, int> combined;
        for (const auto& [c, slot] : grid) combined[c] = slot.first;
        SkewShape whole = Tableau::infer_shape(outer_t.shifted(), combined);
        if (!whole.straight())
            throw std::invalid_argument("inner tableau " + inner_u.shape().str() +
                                        " does not fill the skew region of " +
                                        outer_t.shape().str());
    }

    auto t_entry = [&](Cell c) -> std::optional<int> {
        auto it = grid.find(c);
        if (it != grid.end() && it->second.second == Owner::T) return it->second.first;
        return std::nullopt;
    };

    std::vector<int> u_values = inner_u.sorted_values();
    std::map<int, Cell> u_pos;
    for (const auto& [c, v] : inner_u.entries()) u_pos[v] = c;

    for (auto it = u_values.rbegin(); it != u_values.rend(); ++it) {
        int v = *it;
        Cell cur = u_pos[v];
        SlideRecord rec{v, {cur}};
        while (true) {
            Cell right{cur.row, cur.col + 1};
            Cell below{cur.row + 1, cur.col};
            auto rv = t_entry(right);
            auto bv = t_entry(below);
            if (!rv && !bv) break;
            Cell next = (!bv || (rv && *rv < *bv)) ? right : below;
            std::swap(grid[cur], grid[next]);
            cur = next;
            rec.path.push_back(cur);
        }
        if (trace) trace->push_back(std::move(rec));
    }

    std::map<Cell, int> inner_cells, outer_cells;
    for (const auto& [c, slot] : grid)
        (slot.second == Owner::T ? inner_cells : outer_cells)[c] = slot.first;
    return {Tableau::from_cells(outer_t.shifted(), inner_cells),
            Tableau::from_cells(outer_t.shifted(), outer_cells)};
}

/// The fixed inner tableau used for rectification and fingerprints.
inline Tableau canonical_inner(const SkewShape& shape) {
    SkewShape straight(shape.inner(), Partition{}, shape.shifted());
    return row_superstandard(straight);
}

inline Tableau rectify(const Tableau& t) {
    if (t.empty() || t.shape().straight()) return t;
    return switch_tableaux(canonical_inner(t.shape()), t).inner;
}

inline Partition rectification_shape(const Tableau& t) {
    return rectify(t).shape().outer();
}

/// The ejected tableau determines the dual equivalence class.
inline Tableau dual_fingerprint(const Tableau& t) {
    return switch_tableaux(canonical_inner(t.shape()), t).outer;
}

/// With verify_all_u set, checks agreement of the ejected tableaux over every
/// standard filling of the inner shape rather than just the canonical one.
inline bool dual_equivalent(const Tableau& a, const Tableau& b, bool verify_all_u = false,
                            int cap = kEnumerationCap) {
    if (a.shape() != b.shape())
        throw std::invalid_argument("dual equivalence needs equal shapes: " + a.shape().str() +
                                    " vs " + b.shape().str());
    if (a.shape().straight()) return true;
    if (!verify_all_u) return dual_fingerprint(a) == dual_fingerprint(b);
    SkewShape inner_straight(a.shape().inner(), Partition{}, a.shifted());
    for (const Tableau& u : enumerate_standard(inner_straight, cap))
        if (switch_tableaux(u, a).outer != switch_tableaux(u, b).outer) return false;
    return true;
}

struct DualClass {
    std::vector<Tableau> members;  // row-reading lexicographic order
    Tableau ejected;
    Partition rect_shape;
};

/// Partition of all standard fillings into dual equivalence classes,
/// ordered by smallest member.
inline std::vector<DualClass> dual_classes(const SkewShape& shape, int cap = kEnumerationCap) {
    std::vector<DualClass> classes;
    std::map<std::string, std::size_t> index;
    for (const Tableau& t : enumerate_standard(shape, cap)) {
        SwitchResult sw = switch_tableaux(canonical_inner(shape), t);
        std::string key = tableau_str(sw.outer);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, classes.size());
            classes.push_back({{t}, sw.outer, sw.inner.shape().outer()});
        } else {
            classes[it->second].members.push_back(t);
        }
    }
    return classes;
}

}  // namespace ogw
