#pragma once

#include <vector>

#include "oddschur/core.hpp"
#include "oddschur/oddsym.hpp"
#include "oddschur/opol.hpp"
#include "oddschur/plactic.hpp"

namespace oddschur {

// Signed generating function of SSYT(lambda) with entries <= n.
inline SkewPolynomial schur_plactic(const Partition& lambda, int n) {
    return to_opol(plactic_schur(lambda, n));
}

// Symmetrization of x^{lambda} against the staircase; the outer twist keeps
// the variables in their original order.
inline SkewPolynomial schur_symmetrized(const Partition& lambda, int n) {
    if (lambda.length() > n) fail("schur_symmetrized needs a partition with at most n parts");
    // x^lambda times the staircase, as one word in that order: merging the
    // two ascending blocks into normal form costs a sign.
    Word w;
    for (int i = 1; i <= n; ++i)
        for (int r = 0; r < lambda.row(i); ++r) w.push_back(i);
    for (int i = 1; i < n; ++i)
        for (int r = 0; r < n - i; ++r) w.push_back(i);
    SkewPolynomial x(n);
    x.add_word(w, 1);
    return parity_sign(binom3(n)) * w0_twist(longest_divided_difference(x));
}

inline SkewPolynomial schur_combinatorial(const Partition& lambda, int n) {
    return to_polynomial(schur_K(lambda), n);
}

struct PieriTerm {
    Partition mu;
    Int coeff;
};

namespace detail {

// Boxes of lambda strictly below row r.
inline long long rows_below(const Partition& lambda, int r) {
    long long total = 0;
    for (int j = r + 1; j <= lambda.length(); ++j) total += lambda.row(j);
    return total;
}

// Boxes of lambda strictly right of column c.
inline long long cols_right(const Partition& lambda, int c) {
    long long total = 0;
    for (int j = 1; j <= lambda.length(); ++j)
        if (lambda.row(j) > c) total += lambda.row(j) - c;
    return total;
}

} // namespace detail

// Expansion of s_lambda * s_{(1^k)}: mu runs over additions of a vertical
// strip of size k, and a box added in row r counts the boxes of lambda below
// row r toward the sign.
inline std::vector<PieriTerm> pieri_e_right(const Partition& lambda, int k) {
    if (k < 0) fail("strip size must be nonnegative");
    std::vector<PieriTerm> out;
    int rows = lambda.length() + k;
    std::vector<int> mu(rows, 0);
    auto emit = [&](long long signexp) {
        std::vector<int> parts;
        for (int v : mu)
            if (v > 0) parts.push_back(v);
        out.push_back({Partition(parts), parity_sign(signexp)});
    };
    auto rec = [&](auto&& self, int r, int left, long long signexp) -> void {
        if (left == 0) {
            for (int j = r; j <= rows; ++j) mu[j - 1] = lambda.row(j);
            emit(signexp);
            return;
        }
        if (r > rows) return;
        mu[r - 1] = lambda.row(r);
        self(self, r + 1, left, signexp);
        mu[r - 1] = lambda.row(r) + 1;
        if (r == 1 || mu[r - 1] <= mu[r - 2])
            self(self, r + 1, left - 1, signexp + detail::rows_below(lambda, r));
        mu[r - 1] = 0;
    };
    rec(rec, 1, k, 0);
    return out;
}

// Expansion of s_lambda * s_{(k)}: mu runs over additions of a horizontal
// strip of size k, a box added in column c counts the boxes of lambda right
// of column c, and both shapes contribute their NE box count.
inline std::vector<PieriTerm> pieri_h_right(const Partition& lambda, int k) {
    if (k < 0) fail("strip size must be nonnegative");
    std::vector<PieriTerm> out;
    int rows = lambda.length() + 1;
    std::vector<int> mu(rows, 0);
    auto rec = [&](auto&& self, int r, int left, long long signexp) -> void {
        if (r > rows) {
            if (left != 0) return;
            std::vector<int> parts;
            for (int v : mu)
                if (v > 0) parts.push_back(v);
            Partition p(parts);
            out.push_back({p, parity_sign(signexp + NE_count(lambda) + NE_count(p))});
            return;
        }
        // Row r grows from lambda_r to at most lambda_{r-1} (interlacing).
        int lo = lambda.row(r);
        int hi = (r == 1) ? lambda.row(1) + left : lambda.row(r - 1);
        for (int v = lo; v <= hi && v - lo <= left; ++v) {
            long long s = signexp;
            for (int c = lo + 1; c <= v; ++c) s += detail::cols_right(lambda, c);
            mu[r - 1] = v;
            self(self, r + 1, left - (v - lo), s);
        }
        mu[r - 1] = 0;
    };
    rec(rec, 1, k, 0);
    return out;
}

} // namespace oddschur
