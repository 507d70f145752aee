#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "oddschur/opol.hpp"
#include "oddschur/partition.hpp"
#include "oddschur/tableau.hpp"

namespace oddschur {

// Elementary signed Knuth moves, both applied left to right on a window of
// three consecutive letters:
//   first kind   y z x -> y x z   when x < y <= z   (swaps positions 2,3)
//   second kind  x z y -> z x y   when x <= y < z   (swaps positions 1,2)
// Each move flips the sign of the word.
enum class KnuthKind { First, Second };

struct KnuthMove {
    KnuthKind kind;
    size_t pos; // window occupies pos, pos+1, pos+2

    bool operator==(const KnuthMove&) const = default;
};

inline void apply_knuth_move(Word& w, const KnuthMove& mv) {
    if (mv.pos + 2 >= w.size()) fail("knuth move window out of range");
    int a = w[mv.pos], b = w[mv.pos + 1], c = w[mv.pos + 2];
    if (mv.kind == KnuthKind::First) {
        if (!(c < a && a <= b)) fail("illegal first-kind knuth move");
        std::swap(w[mv.pos + 1], w[mv.pos + 2]);
    } else {
        if (!(a <= c && c < b)) fail("illegal second-kind knuth move");
        std::swap(w[mv.pos], w[mv.pos + 1]);
    }
}

struct KnuthTrace {
    Word word; // evolves as moves are applied
    std::vector<KnuthMove> moves;
};

// Normal form of a word: the unique tableau whose row word the input is
// equivalent to, together with the sign (-1)^{#moves}. Bumping a row of
// length p costs p-1 moves: with the bump at index j, first p-1-j moves of
// the first kind drift the new letter left to its slot, then j moves of the
// second kind carry the bumped letter out to the front of the row. All
// windows stay inside the row segment, so rows below are untouched.
inline std::pair<int, Tableau> knuth_normalize(const Word& w, KnuthTrace* trace = nullptr) {
    for (int letter : w)
        if (letter < 1) fail("letters must be positive");
    if (trace) {
        trace->word = w;
        trace->moves.clear();
    }
    std::vector<Word> rows; // rows[0] is the top row
    long long moves = 0;
    for (size_t m = 0; m < w.size(); ++m) {
        int carry = w[m];
        size_t o = m; // offset of the current row segment in the word prefix
        bool placed = false;
        for (auto& row : rows) {
            o -= row.size();
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                placed = true;
                break;
            }
            size_t j = it - row.begin();
            size_t p = row.size();
            if (trace) {
                for (size_t t = p - 1; t > j; --t) {
                    trace->moves.push_back({KnuthKind::First, o + t - 1});
                    apply_knuth_move(trace->word, trace->moves.back());
                }
                for (size_t u = j; u-- > 0;) {
                    trace->moves.push_back({KnuthKind::Second, o + u});
                    apply_knuth_move(trace->word, trace->moves.back());
                }
            }
            moves += static_cast<long long>(p) - 1;
            std::swap(row[j], carry);
        }
        if (!placed) rows.push_back({carry});
    }
    return {parity_sign(moves), Tableau(rows)};
}

inline std::pair<int, Word> knuth_normalize_word(const Word& w) {
    auto [sign, t] = knuth_normalize(w);
    return {sign, row_word(t)};
}

// Plain insertion with no sign bookkeeping; kept separate as a cross-check.
inline Tableau even_insertion_tableau(const Word& w) {
    std::vector<Word> rows;
    for (int c : w) {
        if (c < 1) fail("letters must be positive");
        int carry = c;
        bool placed = false;
        for (auto& row : rows) {
            bool bumped = false;
            for (int& entry : row)
                if (entry > carry) {
                    std::swap(entry, carry);
                    bumped = true;
                    break;
                }
            if (!bumped) {
                row.push_back(carry);
                placed = true;
                break;
            }
        }
        if (!placed) rows.push_back({carry});
    }
    return Tableau(rows);
}

// Element of the signed plactic ring on letters 1..n, written in the tableau
// basis.
struct PlacticElement {
    int n = 1;
    std::map<Tableau, Int> terms;

    PlacticElement() = default;
    explicit PlacticElement(int alphabet) : n(alphabet) {
        if (n < 1) fail("alphabet must be nonempty");
    }

    static PlacticElement zero(int n) { return PlacticElement(n); }
    static PlacticElement one(int n) {
        PlacticElement e(n);
        e.terms[Tableau{}] = 1;
        return e;
    }
    static PlacticElement from_tableau(const Tableau& t, int n) {
        PlacticElement e(n);
        e.add(t, 1);
        return e;
    }

    void add(const Tableau& t, const Int& c) {
        if (t.max_entry() > n) fail("tableau entry exceeds alphabet");
        detail::add_to(terms, t, c);
    }

    bool is_zero() const { return terms.empty(); }

    auto operator<=>(const PlacticElement&) const = default;
};

inline PlacticElement operator+(const PlacticElement& a, const PlacticElement& b) {
    if (a.n != b.n) fail("mismatched alphabets");
    PlacticElement out(a);
    for (const auto& [t, c] : b.terms) detail::add_to(out.terms, t, c);
    return out;
}

inline PlacticElement operator-(const PlacticElement& a) {
    PlacticElement out(a);
    for (auto& [t, c] : out.terms) c = -c;
    return out;
}

inline PlacticElement operator-(const PlacticElement& a, const PlacticElement& b) {
    return a + (-b);
}

inline PlacticElement operator*(const Int& s, const PlacticElement& a) {
    PlacticElement out(a.n);
    if (s == 0) return out;
    out.terms = a.terms;
    for (auto& [t, c] : out.terms) c *= s;
    return out;
}

// Product: concatenate row words and normalize.
inline PlacticElement plactic_multiply(const PlacticElement& a, const PlacticElement& b) {
    if (a.n != b.n) fail("mismatched alphabets");
    PlacticElement out(a.n);
    for (const auto& [t, ct] : a.terms)
        for (const auto& [u, cu] : b.terms) {
            Word w = row_word(t);
            Word wu = row_word(u);
            w.insert(w.end(), wu.begin(), wu.end());
            auto [sign, prod] = knuth_normalize(w);
            detail::add_to(out.terms, prod, ct * cu * sign);
        }
    return out;
}

inline PlacticElement operator*(const PlacticElement& a, const PlacticElement& b) {
    return plactic_multiply(a, b);
}

// The plactic Schur element: the signed sum of all semistandard tableaux of
// the given shape with entries at most n.
inline PlacticElement plactic_schur(const Partition& shape, int n) {
    PlacticElement out(n);
    if (shape.length() > n) return out;
    Int pre = parity_sign(dN_count(shape) + N_count(shape));
    for (const auto& t : enumerate_ssyt(shape, n)) detail::add_to(out.terms, t, pre);
    return out;
}

// Letters map to the twisted variables; signed Knuth moves transpose distinct
// letters, so this descends to a ring map into the skew polynomial ring.
inline SkewPolynomial to_opol(const PlacticElement& a) {
    SkewPolynomial out(a.n);
    for (const auto& [t, c] : a.terms) out = out + c * monomial_of_word(row_word(t), a.n);
    return out;
}

} // namespace oddschur
