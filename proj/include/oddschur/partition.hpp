#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "oddschur/core.hpp"

namespace oddschur {

// Weakly decreasing positive parts; no trailing zeros stored.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) fail("partition parts must be positive");
            if (i > 0 && parts[i - 1] < parts[i]) fail("partition parts must weakly decrease");
        }
    }
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    int length() const { return static_cast<int>(parts.size()); }
    long long weight() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }
    bool empty() const { return parts.empty(); }
    // Row lengths beyond the last row are zero.
    int row(int r) const { return (r >= 1 && r <= length()) ? parts[r - 1] : 0; }

    auto operator<=>(const Partition&) const = default;
};

inline Partition transpose(const Partition& p) {
    std::vector<int> t(p.empty() ? 0 : p.parts[0], 0);
    for (int c = 1; c <= (p.empty() ? 0 : p.parts[0]); ++c)
        t[c - 1] = static_cast<int>(std::count_if(p.parts.begin(), p.parts.end(),
                                                  [&](int r) { return r >= c; }));
    return Partition(std::move(t));
}

inline bool contains(const Partition& outer, const Partition& inner) {
    for (int r = 1; r <= inner.length(); ++r)
        if (inner.row(r) > outer.row(r)) return false;
    return true;
}

// Inner shape is part of the identity: (1,1)/(1) and (2)/(1) are distinct shapes.
struct SkewShape {
    Partition outer, inner;

    SkewShape() = default;
    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!contains(outer, inner)) fail("skew shape requires inner inside outer");
    }

    long long box_count_total() const { return outer.weight() - inner.weight(); }
    auto operator<=>(const SkewShape&) const = default;
};

// Box (row, col), 1-based, English notation: row 1 on top, rows grow downward.
struct Box {
    int row = 0, col = 0;
    auto operator<=>(const Box&) const = default;
};

inline std::vector<Box> boxes_of(const Partition& p) {
    std::vector<Box> out;
    for (int r = 1; r <= p.length(); ++r)
        for (int c = 1; c <= p.row(r); ++c) out.push_back({r, c});
    return out;
}

inline std::vector<Box> boxes_of(const SkewShape& s) {
    std::vector<Box> out;
    for (int r = 1; r <= s.outer.length(); ++r)
        for (int c = s.inner.row(r) + 1; c <= s.outer.row(r); ++c) out.push_back({r, c});
    return out;
}

// Capital letter: strict offset; lowercase: weak (or-equal); d: directly (same row/column).
enum class Direction {
    N, S, E, W,
    NE, NW, SE, SW,
    nE, nW, sE, sW,
    Ne, Nw, Se, Sw,
    dN, dS, dE, dW,
};

enum class EntryCmp { Lt, Le, Gt, Ge };

struct BoxCountSpec {
    Direction dir;
    std::optional<EntryCmp> cmp; // absent: undecorated count
};

namespace detail {
enum class Rel { Any, Lt, Le, Gt, Ge, Eq };

inline bool rel_holds(Rel rel, int a, int b) { // does a rel b hold
    switch (rel) {
        case Rel::Any: return true;
        case Rel::Lt: return a < b;
        case Rel::Le: return a <= b;
        case Rel::Gt: return a > b;
        case Rel::Ge: return a >= b;
        case Rel::Eq: return a == b;
    }
    return false;
}

struct DirRels
{
    Rel row, col;
};

// How (row', col') of the counted box B' must relate to (row, col) of B.
inline DirRels dir_rels(Direction d) {
    using R = Rel;
    switch (d) {
        case Direction::N: return {R::Lt, R::Any};
        case Direction::S: return {R::Gt, R::Any};
        case Direction::E: return {R::Any, R::Gt};
        case Direction::W: return {R::Any, R::Lt};
        case Direction::NE: return {R::Lt, R::Gt};
        case Direction::NW: return {R::Lt, R::Lt};
        case Direction::SE: return {R::Gt, R::Gt};
        case Direction::SW: return {R::Gt, R::Lt};
        case Direction::nE: return {R::Le, R::Gt};
        case Direction::nW: return {R::Le, R::Lt};
        case Direction::sE: return {R::Ge, R::Gt};
        case Direction::sW: return {R::Ge, R::Lt};
        case Direction::Ne: return {R::Lt, R::Ge};
        case Direction::Nw: return {R::Lt, R::Le};
        case Direction::Se: return {R::Gt, R::Ge};
        case Direction::Sw: return {R::Gt, R::Le};
        case Direction::dN: return {R::Lt, R::Eq};
        case Direction::dS: return {R::Gt, R::Eq};
        case Direction::dE: return {R::Eq, R::Gt};
        case Direction::dW: return {R::Eq, R::Lt};
    }
    return {R::Any, R::Any};
}
} // namespace detail

inline bool box_in_direction(Direction d, const Box& from, const Box& other) {
    auto rels = detail::dir_rels(d);
    return detail::rel_holds(rels.row, other.row, from.row) &&
           detail::rel_holds(rels.col, other.col, from.col);
}

// Undecorated count summed over all boxes of the diagram.
inline long long box_count(const std::vector<Box>& boxes, Direction d) {
    long long total = 0;
    for (const auto& b : boxes)
        for (const auto& o : boxes)
            if (box_in_direction(d, b, o)) ++total;
    return total;
}

inline long long box_count(const Partition& p, Direction d) { return box_count(boxes_of(p), d); }
inline long long box_count(const SkewShape& s, Direction d) { return box_count(boxes_of(s), d); }

inline long long dN_count(const Partition& p) { return box_count(p, Direction::dN); }
inline long long N_count(const Partition& p) { return box_count(p, Direction::N); }
inline long long NE_count(const Partition& p) { return box_count(p, Direction::NE); }

// eps_lambda = (-1)^{dN(lambda)} = (-1)^{sum_j C(lambda^T_j, 2)}.
inline int eps(const Partition& p) { return parity_sign(dN_count(p)); }

enum class StripType { Horizontal, Vertical, Both, Neither };

inline StripType strip_type(const SkewShape& s) {
    auto bs = boxes_of(s);
    bool two_in_col = false, two_in_row = false;
    for (size_t i = 0; i < bs.size(); ++i)
        for (size_t j = i + 1; j < bs.size(); ++j) {
            if (bs[i].col == bs[j].col) two_in_col = true;
            if (bs[i].row == bs[j].row) two_in_row = true;
        }
    if (!two_in_col && !two_in_row) return StripType::Both;
    if (!two_in_col) return StripType::Horizontal;
    if (!two_in_row) return StripType::Vertical;
    return StripType::Neither;
}

// The four truncations at index i:
//   i/λ removes rows 1..i, λ/i removes rows i..bottom,
//   i|λ removes columns 1..i, λ|i removes columns i..rightmost.
struct Truncations {
    Partition rows_below;  // i/λ
    Partition rows_above;  // λ/i
    Partition cols_right;  // i|λ
    Partition cols_left;   // λ|i
};

inline Truncations row_col_truncations(const Partition& p, int i) {
    if (i < 1) fail("truncation index must be >= 1");
    Truncations t;
    {
        std::vector<int> v(p.parts.begin() + std::min<size_t>(i, p.parts.size()), p.parts.end());
        t.rows_below = Partition(std::move(v));
    }
    {
        std::vector<int> v(p.parts.begin(), p.parts.begin() + std::min<size_t>(i - 1, p.parts.size()));
        t.rows_above = Partition(std::move(v));
    }
    {
        std::vector<int> v;
        for (int part : p.parts) v.push_back(std::max(part - i, 0));
        t.cols_right = Partition(std::move(v));
    }
    {
        std::vector<int> v;
        for (int part : p.parts) v.push_back(std::min(part, i - 1));
        t.cols_left = Partition(std::move(v));
    }
    return t;
}

// All partitions of k, descending lexicographic: (k) first, (1^k) last.
inline std::vector<Partition> enumerate_partitions(int k) {
    if (k < 0) fail("cannot enumerate partitions of negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(std::vector<int>(cur));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(remaining - part, part);
            cur.pop_back();
        }
    };
    rec(k, k == 0 ? 1 : k);
    return out;
}

// Descending lex on part vectors: (3) > (2,1) > (1,1,1).
inline bool desc_lex_less(const Partition& a, const Partition& b) { return b.parts < a.parts; }

} // namespace oddschur
