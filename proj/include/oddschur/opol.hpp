#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "oddschur/core.hpp"
#include "oddschur/tableau.hpp"

namespace oddschur {

// Monomial in normal form: subscripts weakly increasing. x_i^2 is central and
// squares do not vanish, so letters repeat freely.
using SortedMonomial = Word;

// Sign of ascend-sorting a word: inversions between distinct letters only.
inline std::pair<int, SortedMonomial> normalize_word(const Word& w) {
    long long inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    SortedMonomial sorted(w);
    std::sort(sorted.begin(), sorted.end());
    return {parity_sign(inv), sorted};
}

namespace detail {

template <typename Key>
void add_to(std::map<Key, Int>& terms, const Key& key, const Int& c) {
    if (c == 0) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

inline void check_letters(const Word& w, int n) {
    for (int letter : w)
        if (letter < 1 || letter > n) fail("monomial letter out of range");
}

} // namespace detail

// Element of the skew-commutative ring on x_1..x_n. Finite map from normal
// forms to nonzero coefficients.
struct SkewPolynomial {
    int n = 1;
    std::map<SortedMonomial, Int> terms;

    SkewPolynomial() = default;
    explicit SkewPolynomial(int vars) : n(vars) {
        if (n < 1) fail("need at least one variable");
    }

    static SkewPolynomial zero(int n) { return SkewPolynomial(n); }
    static SkewPolynomial constant(int n, const Int& c) {
        SkewPolynomial p(n);
        detail::add_to(p.terms, SortedMonomial{}, c);
        return p;
    }
    static SkewPolynomial one(int n) { return constant(n, 1); }
    static SkewPolynomial variable(int i, int n) {
        SkewPolynomial p(n);
        detail::check_letters({i}, n);
        p.terms[{i}] = 1;
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_word(const Word& w, const Int& c) {
        detail::check_letters(w, n);
        auto [sign, sorted] = normalize_word(w);
        detail::add_to(terms, sorted, c * sign);
    }

    auto operator<=>(const SkewPolynomial&) const = default;
};

inline SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b) {
    if (a.n != b.n) fail("mismatched variable counts");
    SkewPolynomial out(a);
    for (const auto& [m, c] : b.terms) detail::add_to(out.terms, m, c);
    return out;
}

inline SkewPolynomial operator-(const SkewPolynomial& a) {
    SkewPolynomial out(a);
    for (auto& [m, c] : out.terms) c = -c;
    return out;
}

inline SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b) {
    return a + (-b);
}

inline SkewPolynomial operator*(const Int& s, const SkewPolynomial& a) {
    SkewPolynomial out(a.n);
    if (s == 0) return out;
    out.terms = a.terms;
    for (auto& [m, c] : out.terms) c *= s;
    return out;
}

// Inversions across the boundary of two sorted words: pairs x from a, y from b
// with x > y. Equal letters commute without sign.
inline long long cross_inversions(const SortedMonomial& a, const SortedMonomial& b) {
    long long inv = 0;
    for (int y : b)
        inv += a.end() - std::upper_bound(a.begin(), a.end(), y);
    return inv;
}

inline SkewPolynomial multiply(const SkewPolynomial& a, const SkewPolynomial& b) {
    if (a.n != b.n) fail("mismatched variable counts");
    SkewPolynomial out(a.n);
    for (const auto& [u, cu] : a.terms)
        for (const auto& [v, cv] : b.terms) {
            SortedMonomial merged(u.size() + v.size());
            std::merge(u.begin(), u.end(), v.begin(), v.end(), merged.begin());
            detail::add_to(out.terms, merged, cu * cv * parity_sign(cross_inversions(u, v)));
        }
    return out;
}

inline SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b) {
    return multiply(a, b);
}

// Free (noncommuting) words; the definitional home of the s_i and del_i
// operators, which then descend to SkewPolynomial.
struct FreeWordPolynomial {
    int n = 1;
    std::map<Word, Int> terms;

    FreeWordPolynomial() = default;
    explicit FreeWordPolynomial(int vars) : n(vars) {
        if (n < 1) fail("need at least one variable");
    }

    void add_word(const Word& w, const Int& c) {
        detail::check_letters(w, n);
        detail::add_to(terms, w, c);
    }

    auto operator<=>(const FreeWordPolynomial&) const = default;
};

inline FreeWordPolynomial lift(const SkewPolynomial& p) {
    FreeWordPolynomial out(p.n);
    out.terms = p.terms;
    return out;
}

inline SkewPolynomial project(const FreeWordPolynomial& p) {
    SkewPolynomial out(p.n);
    for (const auto& [w, c] : p.terms) out.add_word(w, c);
    return out;
}

// s_i sends x_i -> -x_{i+1}, x_{i+1} -> -x_i, and x_j -> -x_j otherwise:
// every letter is negated and i <-> i+1 swapped. A ring endomorphism.
inline Word swap_letters(const Word& w, int i) {
    Word out(w);
    for (int& letter : out) {
        if (letter == i)
            letter = i + 1;
        else if (letter == i + 1)
            letter = i;
    }
    return out;
}

inline FreeWordPolynomial si_action(const FreeWordPolynomial& f, int i) {
    if (i < 1 || i >= f.n) fail("si index out of range");
    FreeWordPolynomial out(f.n);
    for (const auto& [w, c] : f.terms)
        detail::add_to(out.terms, swap_letters(w, i), c * parity_sign(w.size()));
    return out;
}

inline SkewPolynomial si_action(const SkewPolynomial& f, int i) {
    if (i < 1 || i >= f.n) fail("si index out of range");
    SkewPolynomial out(f.n);
    for (const auto& [w, c] : f.terms)
        out.add_word(swap_letters(w, i), c * parity_sign(w.size()));
    return out;
}

// The fixed reduced word s_1 (s_2 s_1) ... (s_{n-1} ... s_1), rightmost listed
// factor applied first.
inline std::vector<int> longest_word_application_order(int n) {
    std::vector<int> listed;
    for (int m = 1; m <= n - 1; ++m)
        for (int i = m; i >= 1; --i) listed.push_back(i);
    std::reverse(listed.begin(), listed.end());
    return listed;
}

inline SkewPolynomial w0_twist(const SkewPolynomial& f) {
    SkewPolynomial out(f);
    for (int i : longest_word_application_order(f.n)) out = si_action(out, i);
    return out;
}

// del_i on a word by the Leibniz rule: sum over positions holding x_i or
// x_{i+1} of s_i(prefix) * suffix.
inline FreeWordPolynomial divided_difference(const FreeWordPolynomial& f, int i) {
    if (i < 1 || i >= f.n) fail("divided difference index out of range");
    FreeWordPolynomial out(f.n);
    for (const auto& [w, c] : f.terms)
        for (size_t t = 0; t < w.size(); ++t) {
            if (w[t] != i && w[t] != i + 1) continue;
            Word prefix(w.begin(), w.begin() + t);
            prefix = swap_letters(prefix, i);
            prefix.insert(prefix.end(), w.begin() + t + 1, w.end());
            detail::add_to(out.terms, prefix, c * parity_sign(t));
        }
    return out;
}

// Same operator on normal forms. For a sorted word the i and i+1 letters form
// one contiguous block, so each surviving Leibniz term re-sorts in closed form.
inline SkewPolynomial divided_difference(const SkewPolynomial& f, int i) {
    if (i < 1 || i >= f.n) fail("divided difference index out of range");
    SkewPolynomial out(f.n);
    for (const auto& [w, c] : f.terms) {
        size_t p = std::lower_bound(w.begin(), w.end(), i) - w.begin();
        size_t a = std::upper_bound(w.begin(), w.end(), i) - w.begin() - p;
        size_t b = std::upper_bound(w.begin(), w.end(), i + 1) - w.begin() - p - a;
        if (a + b == 0) continue;
        SortedMonomial result(w);
        for (size_t s = 0; s < a; ++s) {
            // delete the (s+1)-th i: {smalls, i^{a-1-s}, (i+1)^{b+s}, bigs}
            result.erase(result.begin() + p);
            for (size_t t = 0; t < a - 1; ++t) result[p + t] = (t < a - 1 - s) ? i : i + 1;
            long long sign = static_cast<long long>(p) + s + s * (a - 1 - s);
            detail::add_to(out.terms, result, c * parity_sign(sign));
            result = w;
        }
        for (size_t s = 0; s < b; ++s) {
            // delete the (s+1)-th i+1: {smalls, i^{s}, (i+1)^{a+b-1-s}, bigs}
            result.erase(result.begin() + p);
            for (size_t t = 0; t < a + b - 1; ++t) result[p + t] = (t < s) ? i : i + 1;
            long long sign = static_cast<long long>(p) + a + s + a * s;
            detail::add_to(out.terms, result, c * parity_sign(sign));
            result = w;
        }
    }
    return out;
}

inline SkewPolynomial longest_divided_difference(const SkewPolynomial& f) {
    SkewPolynomial out(f);
    for (int i : longest_word_application_order(f.n)) out = divided_difference(out, i);
    return out;
}

inline bool is_odd_symmetric(const SkewPolynomial& f) {
    for (int i = 1; i < f.n; ++i)
        if (!divided_difference(f, i).is_zero()) return false;
    return true;
}

// x~_i = (-1)^{i-1} x_i; monomial_of_word("21") = x~_2 x~_1.
inline SkewPolynomial monomial_of_word(const Word& w, int n) {
    SkewPolynomial out(n);
    long long tw = 0;
    for (int letter : w) tw += letter - 1;
    out.add_word(w, parity_sign(tw));
    return out;
}

// e_k = sum over strictly increasing index words of x~-monomials; 0 for k > n.
inline SkewPolynomial elementary(int k, int n) {
    SkewPolynomial out(n);
    if (k < 0) return out;
    if (k == 0) return SkewPolynomial::one(n);
    Word idx;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(idx.size()) == k) {
            long long tw = 0;
            for (int letter : idx) tw += letter - 1;
            detail::add_to(out.terms, idx, Int(parity_sign(tw))); // already sorted
            return;
        }
        for (int i = next; i <= n; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(1);
    return out;
}

// h_k: weakly increasing index words.
inline SkewPolynomial complete(int k, int n) {
    SkewPolynomial out(n);
    if (k < 0) return out;
    if (k == 0) return SkewPolynomial::one(n);
    Word idx;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(idx.size()) == k) {
            long long tw = 0;
            for (int letter : idx) tw += letter - 1;
            detail::add_to(out.terms, idx, Int(parity_sign(tw)));
            return;
        }
        for (int i = next; i <= n; ++i) {
            idx.push_back(i);
            rec(i);
            idx.pop_back();
        }
    };
    rec(1);
    return out;
}

inline bool is_homogeneous(const SkewPolynomial& f) {
    if (f.terms.empty()) return true;
    size_t d = f.terms.begin()->first.size();
    for (const auto& [m, c] : f.terms)
        if (m.size() != d) return false;
    return true;
}

// Z-degree of x_i is 2; super-degree is length mod 2.
inline long long z_degree(const SortedMonomial& m) { return 2 * static_cast<long long>(m.size()); }
inline int super_degree(const SortedMonomial& m) { return static_cast<int>(m.size() % 2); }

} // namespace oddschur
