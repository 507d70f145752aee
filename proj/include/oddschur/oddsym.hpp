#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "oddschur/opol.hpp"
#include "oddschur/partition.hpp"
#include "oddschur/tableau.hpp"

namespace oddschur {

enum class Basis { E, H, S };

// Element of the abstract ring in a single fixed basis: finite map from
// partitions to nonzero integer coefficients, b_lambda = b_{l1} b_{l2} ...
struct SymFunction {
    Basis basis = Basis::H;
    std::map<Partition, Int> terms;

    SymFunction() = default;
    explicit SymFunction(Basis b) : basis(b) {}

    static SymFunction zero(Basis b) { return SymFunction(b); }
    static SymFunction unit(Basis b) {
        SymFunction f(b);
        f.terms[Partition{}] = 1;
        return f;
    }
    static SymFunction basis_element(Basis b, const Partition& p, const Int& c = 1) {
        SymFunction f(b);
        detail::add_to(f.terms, p, c);
        return f;
    }

    void add(const Partition& p, const Int& c) { detail::add_to(terms, p, c); }
    bool is_zero() const { return terms.empty(); }

    auto operator<=>(const SymFunction&) const = default;
};

inline SymFunction operator+(const SymFunction& a, const SymFunction& b) {
    if (a.basis != b.basis) fail("mismatched bases");
    SymFunction out(a);
    for (const auto& [p, c] : b.terms) detail::add_to(out.terms, p, c);
    return out;
}

inline SymFunction operator-(const SymFunction& a) {
    SymFunction out(a);
    for (auto& [p, c] : out.terms) c = -c;
    return out;
}

inline SymFunction operator-(const SymFunction& a, const SymFunction& b) { return a + (-b); }

inline SymFunction operator*(const Int& s, const SymFunction& a) {
    SymFunction out(a.basis);
    if (s == 0) return out;
    out.terms = a.terms;
    for (auto& [p, c] : out.terms) c *= s;
    return out;
}

namespace detail {

// Replacement terms for an ascending generator pair b_a b_b (a < b, a+b odd)
// as descending words, derived from the (b,a) instance of the defining
// relation: b_a b_b = b_{b+1} b_{a-1} + (-1)^b b_{a-1} b_{b+1} - (-1)^b b_b b_a.
inline const std::vector<std::pair<std::vector<int>, int>>& sort2_terms(int a, int b) {
    static std::map<std::pair<int, int>, std::vector<std::pair<std::vector<int>, int>>> memo;
    static std::recursive_mutex memo_mutex; // map nodes are stable, so references persist
    std::lock_guard<std::recursive_mutex> lock(memo_mutex);
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<std::pair<std::vector<int>, int>> out;
    if (a == 0) {
        out.push_back({{b}, 1});
    } else {
        if (a - 1 == 0)
            out.push_back({{b + 1}, 1});
        else
            out.push_back({{b + 1, a - 1}, 1});
        int sgn = parity_sign(b);
        for (const auto& [w, c] : sort2_terms(a - 1, b + 1)) out.push_back({w, sgn * c});
        out.push_back({{b, a}, -sgn});
    }
    return memo.emplace(key, std::move(out)).first->second;
}

} // namespace detail

// Rewrite an arbitrary word of generator subscripts into the partition basis:
// even-sum neighbors commute, odd-sum neighbors expand via the defining
// relations. Subscript 0 is the unit and is dropped.
inline std::map<Partition, Int> straighten_parts(const std::vector<int>& factors) {
    std::vector<int> start;
    for (int a : factors) {
        if (a < 0) fail("generator subscripts must be nonnegative");
        if (a > 0) start.push_back(a);
    }
    std::map<Partition, Int> out;
    std::vector<std::pair<std::vector<int>, Int>> work;
    work.emplace_back(std::move(start), 1);
    long long steps = 0;
    while (!work.empty()) {
        if (++steps > 20'000'000) fail("straightening did not terminate");
        auto [w, c] = std::move(work.back());
        work.pop_back();
        size_t i = 0;
        bool sorted = true;
        for (; i + 1 < w.size(); ++i)
            if (w[i] < w[i + 1]) {
                sorted = false;
                break;
            }
        if (sorted) {
            detail::add_to(out, Partition(w), c);
            continue;
        }
        if ((w[i] + w[i + 1]) % 2 == 0) {
            std::swap(w[i], w[i + 1]);
            work.emplace_back(std::move(w), std::move(c));
            continue;
        }
        for (const auto& [repl, sgn] : detail::sort2_terms(w[i], w[i + 1])) {
            std::vector<int> v(w.begin(), w.begin() + i);
            v.insert(v.end(), repl.begin(), repl.end());
            v.insert(v.end(), w.begin() + i + 2, w.end());
            work.emplace_back(std::move(v), c * sgn);
        }
    }
    return out;
}

inline SymFunction straighten_product(Basis basis, const std::vector<int>& factors) {
    if (basis == Basis::S) fail("straightening applies to the e and h bases");
    SymFunction out(basis);
    out.terms = straighten_parts(factors);
    return out;
}

inline SymFunction multiply(const SymFunction& a, const SymFunction& b) {
    if (a.basis != b.basis) fail("mismatched bases");
    if (a.basis == Basis::S) fail("products in the s basis go through the h basis");
    SymFunction out(a.basis);
    for (const auto& [p, cp] : a.terms)
        for (const auto& [q, cq] : b.terms) {
            std::vector<int> word(p.parts);
            word.insert(word.end(), q.parts.begin(), q.parts.end());
            for (const auto& [r, cr] : straighten_parts(word))
                detail::add_to(out.terms, r, cp * cq * cr);
        }
    return out;
}

inline SymFunction operator*(const SymFunction& a, const SymFunction& b) {
    return multiply(a, b);
}

// e_k written in the h basis, from e_l = -(-1)^{l(l+1)/2} sum_{k<l}
// (-1)^{k(k+1)/2} e_k h_{l-k}.
inline const SymFunction& e_in_h(int k) {
    static std::map<int, SymFunction> memo;
    static std::recursive_mutex memo_mutex;
    std::lock_guard<std::recursive_mutex> lock(memo_mutex);
    if (k < 0) fail("negative subscript");
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    SymFunction out(Basis::H);
    if (k == 0) {
        out = SymFunction::unit(Basis::H);
    } else {
        SymFunction acc(Basis::H);
        for (int j = 0; j < k; ++j) {
            SymFunction h = SymFunction::basis_element(Basis::H, Partition{{k - j}});
            acc = acc + Int(triangle_sign(j)) * (e_in_h(j) * h);
        }
        out = Int(-triangle_sign(k)) * acc;
    }
    return memo.emplace(k, std::move(out)).first->second;
}

// Signed Kostka number: sign(T_lambda) times the signed count of
// semistandard tableaux of shape lambda and content mu.
inline Int kostka_number(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    if (lambda.weight() == 0) return 1;
    Int total = 0;
    for (const auto& t : enumerate_ssyt(lambda, mu.parts, mu.length()))
        total += tableau_sign(t);
    return Int(tableau_sign(super_tableau(lambda))) * total;
}

// Rows indexed by content mu, columns by shape lambda, both in descending lex
// order; this orientation is lower triangular with unit diagonal.
struct KostkaMatrix {
    int k = 0;
    std::vector<Partition> parts;
    std::vector<std::vector<Int>> rows;

    const Int& entry(const Partition& lambda, const Partition& mu) const {
        auto col = std::find(parts.begin(), parts.end(), lambda);
        auto row = std::find(parts.begin(), parts.end(), mu);
        if (col == parts.end() || row == parts.end()) fail("partition of the wrong degree");
        return rows[row - parts.begin()][col - parts.begin()];
    }
};

inline KostkaMatrix kostka_matrix(int k) {
    if (k < 0) fail("degree must be nonnegative");
    KostkaMatrix m;
    m.k = k;
    m.parts = enumerate_partitions(k);
    size_t d = m.parts.size();
    m.rows.assign(d, std::vector<Int>(d, 0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) m.rows[i][j] = kostka_number(m.parts[j], m.parts[i]);
    return m;
}

// The combinatorial Schur basis in the h basis, by forward substitution in
// h_mu = sum_lambda K_{lambda mu} s_lambda.
inline const std::map<Partition, SymFunction>& schur_K_table(int k) {
    static std::map<int, std::map<Partition, SymFunction>> memo;
    static std::recursive_mutex memo_mutex;
    std::lock_guard<std::recursive_mutex> lock(memo_mutex);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    KostkaMatrix m = kostka_matrix(k);
    std::map<Partition, SymFunction> table;
    for (size_t i = 0; i < m.parts.size(); ++i) {
        SymFunction s = SymFunction::basis_element(Basis::H, m.parts[i]);
        for (size_t j = 0; j < i; ++j) s = s - m.rows[i][j] * table.at(m.parts[j]);
        table.emplace(m.parts[i], std::move(s));
    }
    return memo.emplace(k, std::move(table)).first->second;
}

inline const SymFunction& schur_K(const Partition& lambda) {
    return schur_K_table(static_cast<int>(lambda.weight())).at(lambda);
}

inline SymFunction to_h_basis(const SymFunction& f) {
    switch (f.basis) {
        case Basis::H:
            return f;
        case Basis::E: {
            SymFunction out(Basis::H);
            for (const auto& [p, c] : f.terms) {
                SymFunction prod = SymFunction::unit(Basis::H);
                for (int part : p.parts) prod = prod * e_in_h(part);
                out = out + c * prod;
            }
            return out;
        }
        case Basis::S: {
            SymFunction out(Basis::H);
            for (const auto& [p, c] : f.terms) out = out + c * schur_K(p);
            return out;
        }
    }
    fail("unknown basis");
}

inline SkewPolynomial to_polynomial(const SymFunction& f, int n) {
    SkewPolynomial out(n);
    if (f.basis == Basis::S) return to_polynomial(to_h_basis(f), n);
    for (const auto& [p, c] : f.terms) {
        SkewPolynomial prod = SkewPolynomial::one(n);
        for (int part : p.parts)
            prod = prod * (f.basis == Basis::E ? elementary(part, n) : complete(part, n));
        out = out + c * prod;
    }
    return out;
}

namespace detail {

inline const SkewPolynomial& basis_image(Basis basis, const Partition& p, int n) {
    static std::map<std::tuple<Basis, Partition, int>, SkewPolynomial> memo;
    static std::recursive_mutex memo_mutex;
    std::lock_guard<std::recursive_mutex> lock(memo_mutex);
    auto key = std::make_tuple(basis, p, n);
    auto it = memo.find(key);
    if (it == memo.end())
        it = memo.emplace(key, to_polynomial(SymFunction::basis_element(basis, p), n)).first;
    return it->second; // map nodes are stable, so references persist
}

} // namespace detail

// Exact coordinates of a polynomial over the images of one basis in degree k.
// Basis directions that die in OPol_n (too many rows/columns for n) are
// dropped; anything outside the remaining integral span is an error.
inline SymFunction expand_in_basis(const SkewPolynomial& f, Basis basis, int k) {
    if (k < 0) fail("degree must be nonnegative");
    for (const auto& [m, c] : f.terms)
        if (static_cast<int>(m.size()) != k) fail("input is not homogeneous of the requested degree");

    if (basis == Basis::S) {
        // The Schur images are unitriangular against monomials: every monomial
        // of the lambda image sorts to a partition dominated by lambda, and the
        // sorted monomial x^lambda itself carries coefficient +-1.  The
        // ascending-letter word order reverses exponent lex order, so the next
        // pivot is always the first remaining term, and forward substitution
        // needs no linear algebra.
        SkewPolynomial rem = f;
        SymFunction out(basis);
        while (!rem.terms.empty()) {
            const auto& [mon, coeff] = *rem.terms.begin();
            std::vector<int> counts(f.n + 1, 0);
            for (int letter : mon) ++counts[letter];
            std::vector<int> parts;
            for (int i = 1; i <= f.n; ++i) {
                if (i > 1 && counts[i] > counts[i - 1]) fail("not odd symmetric of this degree");
                if (counts[i] > 0) parts.push_back(counts[i]);
            }
            Partition lambda(parts);
            const SkewPolynomial& img = detail::basis_image(basis, lambda, f.n);
            const Int& lead = img.terms.at(mon);
            if (coeff % lead != 0) fail("not in the integral span");
            Int c = coeff / lead;
            rem = rem - c * img;
            out.add(lambda, c);
        }
        return out; // rem reached zero, which is already the expansion self-check
    }

    std::vector<Partition> idx;
    std::vector<const SkewPolynomial*> images;
    for (const auto& p : enumerate_partitions(k)) {
        const SkewPolynomial& img = detail::basis_image(basis, p, f.n);
        if (img.is_zero()) continue;
        idx.push_back(p);
        images.push_back(&img);
    }

    std::map<SortedMonomial, size_t> monomial_row;
    for (const auto* img : images)
        for (const auto& [m, c] : img->terms) monomial_row.emplace(m, monomial_row.size());
    for (const auto& [m, c] : f.terms)
        if (!monomial_row.count(m)) fail("not odd symmetric of this degree");

    size_t nrows = monomial_row.size(), ncols = images.size();
    std::vector<std::vector<Rat>> a(nrows, std::vector<Rat>(ncols + 1, 0));
    for (size_t j = 0; j < ncols; ++j)
        for (const auto& [m, c] : images[j]->terms) a[monomial_row.at(m)][j] = Rat(c);
    for (const auto& [m, c] : f.terms) a[monomial_row.at(m)][ncols] = Rat(c);

    std::vector<size_t> pivot_row(ncols, nrows);
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < nrows; ++col) {
        size_t piv = rank;
        while (piv < nrows && a[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(a[piv], a[rank]);
        for (size_t r = 0; r < nrows; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rat factor = a[r][col] / a[rank][col];
            for (size_t cc = col; cc <= ncols; ++cc) a[r][cc] -= factor * a[rank][cc];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (size_t col = 0; col < ncols; ++col)
        if (pivot_row[col] == nrows) fail("basis images are linearly dependent");
    for (size_t r = rank; r < nrows; ++r)
        if (a[r][ncols] != 0) fail("not odd symmetric of this degree");

    SymFunction out(basis);
    for (size_t col = 0; col < ncols; ++col) {
        Rat q = a[pivot_row[col]][ncols] / a[pivot_row[col]][col];
        if (boost::multiprecision::denominator(q) != 1) fail("not in the integral span");
        out.add(idx[col], Int(boost::multiprecision::numerator(q)));
    }
    if (to_polynomial(out, f.n) != f) fail("expansion self-check failed");
    return out;
}

enum class PsiKind { Psi1, Psi2, Psi3, Psi12, Antipode };

namespace detail {

inline SymFunction psi1_h(const SymFunction& f) {
    SymFunction out(Basis::H);
    for (const auto& [p, c] : f.terms) {
        SymFunction prod = SymFunction::unit(Basis::H);
        for (int part : p.parts) prod = prod * e_in_h(part);
        out = out + c * prod;
    }
    return out;
}

inline SymFunction psi2_h(const SymFunction& f) {
    SymFunction out(Basis::H);
    for (const auto& [p, c] : f.terms) {
        long long t = 0;
        for (int part : p.parts) t += static_cast<long long>(part) * (part + 1) / 2;
        out.add(p, c * parity_sign(t));
    }
    return out;
}

inline SymFunction psi3_h(const SymFunction& f) {
    SymFunction out(Basis::H);
    for (const auto& [p, c] : f.terms) {
        std::vector<int> rev(p.parts.rbegin(), p.parts.rend());
        for (const auto& [r, cr] : straighten_parts(rev)) detail::add_to(out.terms, r, c * cr);
    }
    return out;
}

} // namespace detail

// All maps take and return the h basis; other bases are converted first.
inline SymFunction psi(PsiKind which, const SymFunction& f) {
    SymFunction g = to_h_basis(f);
    switch (which) {
        case PsiKind::Psi1:
            return detail::psi1_h(g);
        case PsiKind::Psi2:
            return detail::psi2_h(g);
        case PsiKind::Psi3:
            return detail::psi3_h(g);
        case PsiKind::Psi12:
            return detail::psi1_h(detail::psi2_h(g));
        case PsiKind::Antipode:
            return detail::psi1_h(detail::psi2_h(detail::psi3_h(g)));
    }
    fail("unknown map");
}

// Element of the twisted tensor square, both factors in the h basis.
struct HTensor {
    std::map<std::pair<Partition, Partition>, Int> terms;

    static HTensor unit() {
        HTensor t;
        t.terms[{Partition{}, Partition{}}] = 1;
        return t;
    }
    bool is_zero() const { return terms.empty(); }

    auto operator<=>(const HTensor&) const = default;
};

inline HTensor operator+(const HTensor& a, const HTensor& b) {
    HTensor out(a);
    for (const auto& [p, c] : b.terms) detail::add_to(out.terms, p, c);
    return out;
}

// (f (x) g)(f' (x) g') = (-1)^{|g||f'|} ff' (x) gg' with the super degree
// |h_mu| = |mu| mod 2.
inline HTensor tensor_multiply(const HTensor& a, const HTensor& b) {
    HTensor out;
    for (const auto& [pq, c] : a.terms)
        for (const auto& [rs, d] : b.terms) {
            int koszul = parity_sign(pq.second.weight() * rs.first.weight());
            SymFunction left = SymFunction::basis_element(Basis::H, pq.first) *
                               SymFunction::basis_element(Basis::H, rs.first);
            SymFunction right = SymFunction::basis_element(Basis::H, pq.second) *
                                SymFunction::basis_element(Basis::H, rs.second);
            for (const auto& [lp, lc] : left.terms)
                for (const auto& [rp, rc] : right.terms)
                    detail::add_to(out.terms, std::make_pair(lp, rp), c * d * koszul * lc * rc);
        }
    return out;
}

inline HTensor operator*(const HTensor& a, const HTensor& b) { return tensor_multiply(a, b); }

inline HTensor coproduct_generator(int k) {
    HTensor out;
    for (int i = 0; i <= k; ++i) {
        Partition left = i == 0 ? Partition{} : Partition{{i}};
        Partition right = i == k ? Partition{} : Partition{{k - i}};
        out.terms[{left, right}] = 1;
    }
    return out;
}

inline HTensor coproduct(const SymFunction& f) {
    SymFunction g = to_h_basis(f);
    HTensor out;
    for (const auto& [p, c] : g.terms) {
        HTensor acc = HTensor::unit();
        for (int part : p.parts) acc = acc * coproduct_generator(part);
        for (const auto& [pq, d] : acc.terms) detail::add_to(out.terms, pq, c * d);
    }
    return out;
}

} // namespace oddschur
