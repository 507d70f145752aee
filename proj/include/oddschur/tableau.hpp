#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "oddschur/partition.hpp"

namespace oddschur {

using Word = std::vector<int>; // letters are positive; 0 is reserved for skew completions

// Semistandard: rows weakly increase left to right, columns strictly increase downward.
struct Tableau {
    std::vector<std::vector<int>> rows;

    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> r) : rows(std::move(r)) { validate(); }

    void validate() const {
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].empty()) fail("tableau rows must be nonempty");
            if (r > 0 && rows[r].size() > rows[r - 1].size())
                fail("tableau row lengths must weakly decrease");
            for (size_t c = 0; c < rows[r].size(); ++c) {
                if (rows[r][c] < 1) fail("tableau entries must be positive");
                if (c > 0 && rows[r][c - 1] > rows[r][c]) fail("tableau rows must weakly increase");
                if (r > 0 && rows[r - 1][c] >= rows[r][c])
                    fail("tableau columns must strictly increase");
            }
        }
    }

    Partition shape() const {
        std::vector<int> s;
        for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return Partition(std::move(s));
    }

    int entry(int r, int c) const { return rows[r - 1][c - 1]; } // 1-based
    long long size() const {
        long long n = 0;
        for (const auto& r : rows) n += static_cast<long long>(r.size());
        return n;
    }
    int max_entry() const {
        int m = 0;
        for (const auto& r : rows)
            for (int e : r) m = std::max(m, e);
        return m;
    }

    auto operator<=>(const Tableau&) const = default;
};

// Stored as full rows of the outer shape with inner boxes at 0, i.e. the completion:
// the inner shape is filled with a letter below the alphabet.
struct SkewTableau {
    Partition inner;
    std::vector<std::vector<int>> rows; // length outer_r, first inner_r entries are 0

    SkewTableau() = default;
    SkewTableau(Partition in, std::vector<std::vector<int>> r)
        : inner(std::move(in)), rows(std::move(r)) {
        validate();
    }

    Partition outer() const {
        std::vector<int> s;
        for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return Partition(std::move(s));
    }

    SkewShape shape() const { return SkewShape(outer(), inner); }

    void validate() const {
        Partition out = outer(); // checks weakly decreasing row lengths
        if (!contains(out, inner)) fail("skew tableau inner shape not contained in outer");
        for (size_t r = 0; r < rows.size(); ++r) {
            int in = inner.row(static_cast<int>(r) + 1);
            for (size_t c = 0; c < rows[r].size(); ++c) {
                int e = rows[r][c];
                if (static_cast<int>(c) < in) {
                    if (e != 0) fail("inner boxes must hold 0");
                    continue;
                }
                if (e < 1) fail("skew entries must be positive");
                if (static_cast<int>(c) > in && rows[r][c - 1] > e)
                    fail("skew rows must weakly increase");
                if (r > 0 && c < rows[r - 1].size() &&
                    static_cast<int>(c) >= inner.row(static_cast<int>(r)) && rows[r - 1][c] >= e)
                    fail("skew columns must strictly increase");
            }
        }
    }

    int entry(int r, int c) const { return rows[r - 1][c - 1]; } // 0 on inner boxes

    auto operator<=>(const SkewTableau&) const = default;
};

inline SkewTableau as_skew(const Tableau& t) { return SkewTableau(Partition{}, t.rows); }

// Entries left to right within a row, bottom row first.
inline Word row_word(const Tableau& t) {
    Word w;
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

// Skew row word reads only the filled boxes.
inline Word row_word(const SkewTableau& s) {
    Word w;
    for (size_t r = s.rows.size(); r-- > 0;) {
        int in = s.inner.row(static_cast<int>(r) + 1);
        w.insert(w.end(), s.rows[r].begin() + in, s.rows[r].end());
    }
    return w;
}

// Rebuild a tableau from its row word: maximal weakly increasing runs are the
// rows, bottom row first. Errors when the runs do not stack into a tableau.
inline Tableau word_to_tableau_reading(const Word& w) {
    if (w.empty()) return Tableau{};
    std::vector<std::vector<int>> runs(1);
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 1) fail("word letters must be positive");
        if (!runs.back().empty() && w[i] < runs.back().back()) runs.emplace_back();
        runs.back().push_back(w[i]);
    }
    std::reverse(runs.begin(), runs.end());
    return Tableau(std::move(runs)); // validation rejects non-row-words
}

inline bool is_row_word(const Word& w) {
    try {
        word_to_tableau_reading(w);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

inline std::vector<int> content_of(const Tableau& t) {
    std::vector<int> c(t.max_entry(), 0);
    for (const auto& r : t.rows)
        for (int e : r) ++c[e - 1];
    return c;
}

inline std::vector<int> content_of(const SkewTableau& s) {
    std::vector<int> c;
    for (const auto& r : s.rows)
        for (int e : r)
            if (e > 0) {
                if (e > static_cast<int>(c.size())) c.resize(e, 0);
                ++c[e - 1];
            }
    return c;
}

// The super tableau: row i filled with the letter i.
inline Tableau super_tableau(const Partition& p) {
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= p.length(); ++r) rows.emplace_back(p.row(r), r);
    return Tableau(std::move(rows));
}

namespace detail {

template <typename Grid>
std::vector<std::pair<Box, int>> entry_boxes(const Grid& g) {
    std::vector<std::pair<Box, int>> out;
    for (size_t r = 0; r < g.rows.size(); ++r)
        for (size_t c = 0; c < g.rows[r].size(); ++c)
            out.push_back({Box{static_cast<int>(r) + 1, static_cast<int>(c) + 1}, g.rows[r][c]});
    return out;
}

inline bool cmp_holds(EntryCmp cmp, int other, int base) {
    switch (cmp) {
        case EntryCmp::Lt: return other < base;
        case EntryCmp::Le: return other <= base;
        case EntryCmp::Gt: return other > base;
        case EntryCmp::Ge: return other >= base;
    }
    return false;
}

inline long long decorated_count_impl(const std::vector<std::pair<Box, int>>& boxes,
                                      const BoxCountSpec& spec) {
    long long total = 0;
    for (const auto& [b, be] : boxes)
        for (const auto& [o, oe] : boxes) {
            if (!box_in_direction(spec.dir, b, o)) continue;
            if (spec.cmp && !cmp_holds(*spec.cmp, oe, be)) continue;
            ++total;
        }
    return total;
}

} // namespace detail

inline long long decorated_count(const Tableau& t, const BoxCountSpec& spec) {
    return detail::decorated_count_impl(detail::entry_boxes(t), spec);
}

// Counts on a skew tableau are counts on its completion (inner boxes read 0).
inline long long decorated_count(const SkewTableau& s, const BoxCountSpec& spec) {
    return detail::decorated_count_impl(detail::entry_boxes(s), spec);
}

// sign(T) = (-1)^{N^<(T)}, the sign of the minimal permutation sorting the row word.
inline int tableau_sign(const Tableau& t) {
    return parity_sign(decorated_count(t, {Direction::N, EntryCmp::Lt}));
}

inline int skew_sign(const SkewTableau& s) {
    return parity_sign(decorated_count(s, {Direction::N, EntryCmp::Lt}));
}

// Backwards reading: every prefix of the reversed word has at least as many
// a's as b's whenever a < b.
inline bool is_yamanouchi(const Word& w) {
    std::vector<long long> counts;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int letter = *it;
        if (letter > static_cast<int>(counts.size())) counts.resize(letter, 0);
        ++counts[letter - 1];
        if (letter > 1 && counts[letter - 1] > counts[letter - 2]) return false;
    }
    return true;
}

// All semistandard fillings, entries in 1..alphabet_max, optionally with fixed
// content. Emitted in lexicographic order of the top-down row-major reading.
inline std::vector<Tableau> enumerate_ssyt(const Partition& shape,
                                           const std::vector<int>& content,
                                           int alphabet_max) {
    bool fixed = !content.empty();
    if (fixed) {
        long long total = 0;
        for (int c : content) total += c;
        if (total != shape.weight()) return {};
        alphabet_max = std::max<int>(alphabet_max, static_cast<int>(content.size()));
    }
    if (alphabet_max < 1) fail("alphabet_max must be >= 1");
    if (shape.empty()) return {Tableau{}};

    std::vector<std::vector<int>> grid;
    for (int r = 1; r <= shape.length(); ++r) grid.emplace_back(shape.row(r), 0);
    std::vector<int> remaining(alphabet_max, 0);
    if (fixed)
        for (size_t i = 0; i < content.size(); ++i) remaining[i] = content[i];

    std::vector<Tableau> out;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == shape.length()) {
            out.push_back(Tableau(grid));
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape.row(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0) lo = std::max(lo, grid[r - 1][c] + 1);
        for (int e = lo; e <= alphabet_max; ++e) {
            if (fixed) {
                if (e > static_cast<int>(content.size()) || remaining[e - 1] == 0) continue;
                --remaining[e - 1];
            }
            grid[r][c] = e;
            rec(nr, nc);
            if (fixed) ++remaining[e - 1];
        }
        grid[r][c] = 0;
    };
    rec(0, 0);
    return out;
}

inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, int alphabet_max) {
    return enumerate_ssyt(shape, {}, alphabet_max);
}

// Skew fillings with fixed content; semistandardness is checked on the skew
// boxes (the 0-completion is then automatically semistandard for the letter 0).
inline std::vector<SkewTableau> enumerate_skew_ssyt(const SkewShape& shape,
                                                    const std::vector<int>& content) {
    long long total = 0;
    for (int c : content) total += c;
    if (total != shape.box_count_total()) return {};
    int alphabet_max = static_cast<int>(content.size());

    const Partition& outer = shape.outer;
    const Partition& inner = shape.inner;
    std::vector<std::vector<int>> grid;
    for (int r = 1; r <= outer.length(); ++r) grid.emplace_back(outer.row(r), 0);
    std::vector<int> remaining(content);

    std::vector<Box> cells; // fillable boxes, row-major
    for (int r = 1; r <= outer.length(); ++r)
        for (int c = inner.row(r) + 1; c <= outer.row(r); ++c) cells.push_back({r, c});

    std::vector<SkewTableau> out;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            out.push_back(SkewTableau(inner, grid));
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c - 1 > inner.row(r)) lo = std::max(lo, grid[r - 1][c - 2]);
        if (r > 1 && c <= outer.row(r - 1) && c > inner.row(r - 1))
            lo = std::max(lo, grid[r - 2][c - 1] + 1);
        for (int e = lo; e <= alphabet_max; ++e) {
            if (remaining[e - 1] == 0) continue;
            --remaining[e - 1];
            grid[r - 1][c - 1] = e;
            rec(idx + 1);
            grid[r - 1][c - 1] = 0;
            ++remaining[e - 1];
        }
    };
    rec(0);
    return out;
}

} // namespace oddschur
