#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "oddschur/schur.hpp"

using namespace oddschur;

namespace {

Partition row_shape(int k) { return Partition(std::vector<int>(k ? 1 : 0, k)); }
Partition col_shape(int k) { return Partition(std::vector<int>(k, 1)); }

std::vector<Partition> partitions_up_to(int k) {
    std::vector<Partition> out;
    for (int j = 0; j <= k; ++j)
        for (const auto& p : enumerate_partitions(j)) out.push_back(p);
    return out;
}

std::map<Partition, Int> as_map(const std::vector<PieriTerm>& terms) {
    std::map<Partition, Int> out;
    for (const auto& t : terms) out[t.mu] += t.coeff;
    return out;
}

} // namespace

TEST_CASE("straight shapes", "[schur]") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            Int esign = parity_sign(static_cast<long long>(k) * (k - 1) / 2);
            REQUIRE(schur_plactic(row_shape(k), n) == complete(k, n));
            REQUIRE(schur_plactic(col_shape(k), n) == esign * elementary(k, n));
            REQUIRE(schur_symmetrized(row_shape(k), n) == complete(k, n));
            REQUIRE(schur_symmetrized(col_shape(k), n) == esign * elementary(k, n));
            REQUIRE(schur_combinatorial(row_shape(k), n) == complete(k, n));
            REQUIRE(schur_combinatorial(col_shape(k), n) == esign * elementary(k, n));
        }
    }
}

TEST_CASE("degenerate shapes", "[schur]") {
    REQUIRE(schur_symmetrized(Partition{}, 1) == SkewPolynomial::one(1));
    REQUIRE(schur_combinatorial(Partition{}, 3) == SkewPolynomial::one(3));
    REQUIRE(schur_plactic(Partition{}, 2) == SkewPolynomial::one(2));

    // Too many rows for the variable count: plactic and Kostka forms vanish,
    // the symmetrized form has no defining monomial and is rejected.
    REQUIRE(schur_plactic(Partition{1, 1, 1}, 2).is_zero());
    REQUIRE(schur_combinatorial(Partition{1, 1, 1}, 2).is_zero());
    REQUIRE(schur_plactic(Partition{2, 2, 1}, 2).is_zero());
    REQUIRE(schur_combinatorial(Partition{2, 2, 1}, 2).is_zero());
    REQUIRE_THROWS_AS(schur_symmetrized(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("coincidence of the three constructions", "[schur]") {
    SECTION("all shapes of weight at most 4, smallest faithful variable count") {
        for (int k = 1; k <= 4; ++k) {
            for (const auto& lambda : enumerate_partitions(k)) {
                SkewPolynomial p = schur_plactic(lambda, k);
                REQUIRE(p == schur_symmetrized(lambda, k));
                REQUIRE(p == schur_combinatorial(lambda, k));
                REQUIRE(is_odd_symmetric(p));
            }
        }
    }
    SECTION("extra variables") {
        for (int k = 1; k <= 3; ++k) {
            for (const auto& lambda : enumerate_partitions(k)) {
                SkewPolynomial p = schur_plactic(lambda, k + 1);
                REQUIRE(p == schur_symmetrized(lambda, k + 1));
                REQUIRE(p == schur_combinatorial(lambda, k + 1));
            }
        }
    }
    SECTION("weight five spot checks") {
        for (const Partition& lambda : {Partition{3, 2}, Partition{2, 2, 1}}) {
            SkewPolynomial p = schur_plactic(lambda, 5);
            REQUIRE(p == schur_symmetrized(lambda, 5));
            REQUIRE(p == schur_combinatorial(lambda, 5));
        }
    }
}

TEST_CASE("pieri expansions as polynomials", "[schur]") {
    SECTION("e-right, plactic") {
        for (const auto& lambda : partitions_up_to(4)) {
            for (int k = 1; k <= 2; ++k) {
                int n = static_cast<int>(lambda.weight()) + k;
                SkewPolynomial lhs = schur_plactic(lambda, n) * schur_plactic(col_shape(k), n);
                SkewPolynomial rhs(n);
                for (const auto& t : pieri_e_right(lambda, k))
                    rhs = rhs + t.coeff * schur_plactic(t.mu, n);
                REQUIRE(lhs == rhs);
            }
        }
    }
    SECTION("h-right, plactic") {
        for (const auto& lambda : partitions_up_to(4)) {
            for (int k = 1; k <= 2; ++k) {
                int n = static_cast<int>(lambda.weight()) + k;
                SkewPolynomial lhs = schur_plactic(lambda, n) * schur_plactic(row_shape(k), n);
                SkewPolynomial rhs(n);
                for (const auto& t : pieri_h_right(lambda, k))
                    rhs = rhs + t.coeff * schur_plactic(t.mu, n);
                REQUIRE(lhs == rhs);
            }
        }
    }
    SECTION("e-right, symmetrized instance") {
        Partition lambda{2, 1};
        int k = 2, n = 5;
        SkewPolynomial lhs = schur_symmetrized(lambda, n) * schur_symmetrized(col_shape(k), n);
        SkewPolynomial rhs(n);
        for (const auto& t : pieri_e_right(lambda, k))
            rhs = rhs + t.coeff * schur_symmetrized(t.mu, n);
        REQUIRE(lhs == rhs);
    }
    SECTION("strip size zero and empty start") {
        auto e0 = pieri_e_right(Partition{2, 1}, 0);
        REQUIRE(e0.size() == 1);
        REQUIRE(e0[0].mu == Partition{2, 1});
        REQUIRE(e0[0].coeff == 1);
        auto he = as_map(pieri_h_right(Partition{}, 3));
        REQUIRE(he == std::map<Partition, Int>{{Partition{3}, 1}});
        auto ve = as_map(pieri_e_right(Partition{}, 3));
        REQUIRE(ve == std::map<Partition, Int>{{Partition{1, 1, 1}, 1}});
    }
}

TEST_CASE("pieri expansions through coordinates", "[schur]") {
    for (const auto& lambda : partitions_up_to(3)) {
        for (int k = 1; k <= 2; ++k) {
            int deg = static_cast<int>(lambda.weight()) + k;
            SkewPolynomial prod_e =
                schur_plactic(lambda, deg) * schur_plactic(col_shape(k), deg);
            SymFunction coords_e = expand_in_basis(prod_e, Basis::S, deg);
            REQUIRE(coords_e.terms == as_map(pieri_e_right(lambda, k)));

            SkewPolynomial prod_h =
                schur_plactic(lambda, deg) * schur_plactic(row_shape(k), deg);
            SymFunction coords_h = expand_in_basis(prod_h, Basis::S, deg);
            REQUIRE(coords_h.terms == as_map(pieri_h_right(lambda, k)));
        }
    }
}

TEST_CASE("tableau sign comparison across corner conventions", "[schur]") {
    // For semistandard T the NorthWest contributions vanish entrywise:
    // counting (shape NE) + (NE with smaller entry) agrees mod 2 with
    // (shape N) + (N with smaller entry).
    for (int k = 1; k <= 5; ++k) {
        for (const auto& lambda : enumerate_partitions(k)) {
            for (const auto& t : enumerate_ssyt(lambda, 4)) {
                long long lhs = NE_count(lambda) + decorated_count(t, {Direction::NE, EntryCmp::Lt});
                long long rhs = N_count(lambda) + decorated_count(t, {Direction::N, EntryCmp::Lt});
                REQUIRE((lhs - rhs) % 2 == 0);
            }
        }
    }
}

TEST_CASE("complete functions as signed tableau sums", "[schur]") {
    // h_mu expands over the plactic Schur polynomials with the signed count
    // (shape NE) + (NE with smaller entry) over tableaux of content mu.
    for (int w = 1; w <= 4; ++w) {
        for (const auto& mu : enumerate_partitions(w)) {
            int n = w;
            SkewPolynomial want = SkewPolynomial::one(n);
            for (int part : mu.parts) want = want * complete(part, n);
            SkewPolynomial acc(n);
            for (const auto& lambda : enumerate_partitions(w)) {
                SkewPolynomial s = schur_plactic(lambda, n);
                for (const auto& t : enumerate_ssyt(lambda, mu.parts, mu.length())) {
                    Int sgn = parity_sign(NE_count(lambda) +
                                          decorated_count(t, {Direction::NE, EntryCmp::Lt}));
                    acc = acc + sgn * s;
                }
            }
            REQUIRE(acc == want);
        }
    }
}
