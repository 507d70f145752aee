#pragma once

#include <map>
#include <string>
#include <vector>

#include "oddschur/core.hpp"
#include "oddschur/schur.hpp"

namespace oddschur {

struct LRQuery {
    Partition mu, nu, lambda;
};

enum class LRMethod { Direct, Yamanouchi, Plactic, Even, All };

namespace detail {

inline bool lr_degree_ok(const LRQuery& q) {
    return q.mu.weight() + q.nu.weight() == q.lambda.weight();
}

inline std::string partition_brackets(const Partition& p) {
    std::string out = "[";
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts[i]);
    }
    return out + "]";
}

} // namespace detail

// Coordinate of s_lambda in s_mu s_nu, read off from the polynomial product
// by an exact linear solve against the Schur images.
inline Int lr_direct(const LRQuery& q) {
    if (!detail::lr_degree_ok(q)) return 0;
    int deg = static_cast<int>(q.lambda.weight());
    int n = deg > 0 ? deg : 1;
    SkewPolynomial prod = schur_plactic(q.mu, n) * schur_plactic(q.nu, n);
    SymFunction coords = expand_in_basis(prod, Basis::S, deg);
    auto it = coords.terms.find(q.lambda);
    return it == coords.terms.end() ? Int(0) : it->second;
}

// Signed count of Littlewood-Richardson skew tableaux: semistandard fillings
// of lambda/mu with content nu whose row word is Yamanouchi.
inline Int lr_yamanouchi(const LRQuery& q) {
    if (!detail::lr_degree_ok(q) || !contains(q.lambda, q.mu)) return 0;
    SkewShape shape(q.lambda, q.mu);
    Int acc = 0;
    for (const auto& s : enumerate_skew_ssyt(shape, q.nu.parts))
        if (is_yamanouchi(row_word(s))) acc += skew_sign(s);
    return parity_sign(N_count(q.mu) + N_count(q.lambda)) * acc;
}

// Signed count of tableaux U of shape mu with U T_nu = T_lambda in the even
// plactic ring; the prefactor repays sorting the factors together.
inline Int lr_plactic(const LRQuery& q) {
    if (!detail::lr_degree_ok(q)) return 0;
    if (q.lambda.empty()) return 1; // degree match forces mu = nu = ()
    std::vector<int> content;
    long long cross = 0, below = 0;
    for (int i = 1; i <= q.lambda.length(); ++i) {
        int rowgap = q.lambda.row(i) - q.nu.row(i);
        if (rowgap < 0) return 0;
        content.push_back(rowgap);
        cross += static_cast<long long>(rowgap) * below;
        below += q.nu.row(i);
    }
    if (q.nu.length() > q.lambda.length()) return 0;
    Tableau t_nu = super_tableau(q.nu);
    Tableau t_lambda = super_tableau(q.lambda);
    Word tail = row_word(t_nu);
    Int acc = 0;
    for (const auto& u : enumerate_ssyt(q.mu, content, q.lambda.length())) {
        Word w = row_word(u);
        w.insert(w.end(), tail.begin(), tail.end());
        if (even_insertion_tableau(w) == t_lambda)
            acc += parity_sign(decorated_count(u, {Direction::N, EntryCmp::Lt}));
    }
    Int pre = parity_sign(dN_count(q.mu) + dN_count(q.nu) + dN_count(q.lambda) +
                          N_count(q.mu) + cross);
    return pre * acc;
}

// Plain count of Littlewood-Richardson tableaux (the even coefficient).
inline Int lr_even(const LRQuery& q) {
    if (!detail::lr_degree_ok(q) || !contains(q.lambda, q.mu)) return 0;
    SkewShape shape(q.lambda, q.mu);
    Int acc = 0;
    for (const auto& s : enumerate_skew_ssyt(shape, q.nu.parts))
        if (is_yamanouchi(row_word(s))) ++acc;
    return acc;
}

// All nonzero coefficients in degree |mu|+|nu|. With All, the three signed
// methods must agree exactly and match the even count mod 2.
inline std::map<Partition, Int> lr_table(const Partition& mu, const Partition& nu,
                                         LRMethod method = LRMethod::All) {
    int deg = static_cast<int>(mu.weight() + nu.weight());
    std::map<Partition, Int> direct;
    if (method == LRMethod::Direct || method == LRMethod::All) {
        int n = deg > 0 ? deg : 1;
        SkewPolynomial prod = schur_plactic(mu, n) * schur_plactic(nu, n);
        direct = expand_in_basis(prod, Basis::S, deg).terms;
        if (method == LRMethod::Direct) return direct;
    }
    std::map<Partition, Int> out;
    std::vector<Partition> divergent;
    for (const auto& lambda : enumerate_partitions(deg)) {
        LRQuery q{mu, nu, lambda};
        Int c;
        switch (method) {
            case LRMethod::Yamanouchi: c = lr_yamanouchi(q); break;
            case LRMethod::Plactic: c = lr_plactic(q); break;
            case LRMethod::Even: c = lr_even(q); break;
            default: {
                auto it = direct.find(lambda);
                c = it == direct.end() ? Int(0) : it->second;
                Int y = lr_yamanouchi(q), p = lr_plactic(q), e = lr_even(q);
                if (y != c || p != c || (c - e) % 2 != 0) divergent.push_back(lambda);
                break;
            }
        }
        if (c != 0) out[lambda] = c;
    }
    if (!divergent.empty()) {
        std::string msg = "Littlewood-Richardson methods disagree at";
        for (const auto& p : divergent) msg += " " + detail::partition_brackets(p);
        fail(msg);
    }
    return out;
}

} // namespace oddschur
