#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <tuple>

#include "oddschur/polytope.hpp"

using namespace oddschur;

namespace {

std::vector<std::tuple<Partition, Partition, Partition>> boundary_triples(int degree) {
    std::vector<std::tuple<Partition, Partition, Partition>> out;
    for (const auto& lambda : enumerate_partitions(degree))
        for (int m = 0; m <= degree; ++m)
            for (const auto& mu : enumerate_partitions(m)) {
                if (!contains(lambda, mu)) continue;
                for (const auto& nu : enumerate_partitions(degree - m))
                    out.push_back({lambda, mu, nu});
            }
    return out;
}

std::vector<SkewTableau> lr_tableaux(const Partition& lambda, const Partition& mu,
                                     const Partition& nu) {
    std::vector<SkewTableau> out;
    if (!contains(lambda, mu) || mu.weight() + nu.weight() != lambda.weight()) return out;
    for (const auto& s : enumerate_skew_ssyt(SkewShape(lambda, mu), nu.parts))
        if (is_yamanouchi(row_word(s))) out.push_back(s);
    return out;
}

Triangle random_triangle(int n, std::mt19937& gen, bool zero_corner) {
    std::uniform_int_distribution<int> dist(-3, 5);
    Triangle t(n);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i) t.at(i, j) = dist(gen);
    if (zero_corner) t.at(0, 0) = 0;
    return t;
}

} // namespace

TEST_CASE("worked triangle and hive example", "[polytope]") {
    SkewTableau s(Partition{{2, 1}}, {{0, 0, 1}, {0, 2}, {1}});
    Triangle a = triangle_from_skew_tableau(s);

    std::vector<std::vector<long long>> expected_a = {{0}, {2, 1}, {1, 0, 1}, {0, 1, 0, 0}};
    REQUIRE(a.n == 3);
    REQUIRE(a.rows == expected_a);
    REQUIRE(is_lr_triangle(a));

    REQUIRE(q_triangle(a) == 6);
    REQUIRE(decorated_count(s, {Direction::N, EntryCmp::Lt}) == 6);

    Hive h = phi(a);
    std::vector<std::vector<long long>> expected_h = {{0}, {2, 3}, {3, 4, 5}, {3, 5, 6, 6}};
    REQUIRE(h.rows == expected_h);
    REQUIRE(is_hive(h));
    REQUIRE(q_hive(h) == 6);
    REQUIRE(phi_inverse(h) == a);

    Partition lambda{{3, 2, 1}}, mu{{2, 1}}, nu{{2, 1}};
    Boundary bt = boundary_partitions(a);
    REQUIRE(bt.lambda == lambda);
    REQUIRE(bt.mu == mu);
    REQUIRE(bt.nu == nu);
    Boundary bh = boundary_partitions(h);
    REQUIRE(bh.lambda == lambda);
    REQUIRE(bh.mu == mu);
    REQUIRE(bh.nu == nu);

    // Two integer points whose quadratic-form values have opposite parity, so
    // the signed sums cancel while the plain count does not.
    auto triangles = enumerate_triangles(lambda, mu, nu);
    REQUIRE(triangles.size() == 2);
    std::vector<long long> qs;
    for (const auto& t : triangles) qs.push_back(q_triangle(t));
    std::sort(qs.begin(), qs.end());
    REQUIRE(qs == std::vector<long long>{6, 7});

    auto hives = enumerate_hives(lambda, mu, nu);
    REQUIRE(hives.size() == 2);
    REQUIRE(enumerate_hives(lambda, mu, nu, HiveEnumeration::ViaPhi) == hives);

    LRQuery q{mu, nu, lambda};
    REQUIRE(lr_triangle(q) == 0);
    REQUIRE(lr_hive(q) == 0);
    REQUIRE(lr_even(q) == 2);
}

TEST_CASE("membership checks", "[polytope]") {
    SkewTableau s(Partition{{2, 1}}, {{0, 0, 1}, {0, 2}, {1}});
    Triangle a = triangle_from_skew_tableau(s);

    SECTION("perturbing a point leaves the polytope") {
        Triangle bad = a;
        bad.at(1, 3) = -1;
        REQUIRE_FALSE(is_lr_triangle(bad));

        bad = a;
        bad.at(1, 2) += 5; // breaks the column partial-sum inequality
        REQUIRE_FALSE(is_lr_triangle(bad));
    }

    SECTION("ambient arrays may carry negative boundary entries") {
        Triangle t(2);
        t.at(0, 1) = -2;
        t.at(2, 2) = -1;
        REQUIRE(t.at(0, 1) == -2);
    }

    SECTION("hives need a zero corner and rhombus inequalities") {
        Hive h = phi(a);
        Hive bad = h;
        bad.cell(0, 0) = 1;
        REQUIRE_FALSE(is_hive(bad));

        bad = h;
        bad.cell(1, 2) += 3;
        REQUIRE_FALSE(is_hive(bad));
    }

    SECTION("boundary extraction rejects non-partition marginals") {
        Triangle t(2);
        t.at(0, 2) = 1; // mu would be (0, 1)
        REQUIRE_THROWS_AS(boundary_partitions(t), std::invalid_argument);

        Hive h(2);
        h.cell(1, 2) = -1; // nu would be (-1, ...)
        REQUIRE_THROWS_AS(boundary_partitions(h), std::invalid_argument);
    }

    SECTION("triangle construction needs a Yamanouchi filling") {
        SkewTableau bad(Partition{}, {{1, 2}});
        REQUIRE_THROWS_AS(triangle_from_skew_tableau(bad), std::invalid_argument);
    }
}

TEST_CASE("tableau bijection with integer points", "[polytope]") {
    for (int degree = 0; degree <= 6; ++degree)
        for (const auto& [lambda, mu, nu] : boundary_triples(degree)) {
            auto tableaux = lr_tableaux(lambda, mu, nu);
            std::vector<Triangle> images;
            for (const auto& s : tableaux) {
                Triangle a = triangle_from_skew_tableau(s);
                REQUIRE(is_lr_triangle(a));
                Boundary b = boundary_partitions(a);
                REQUIRE(b.lambda == lambda);
                REQUIRE(b.mu == mu);
                REQUIRE(b.nu == nu);
                // The quadratic form computes the sign statistic of the tableau.
                REQUIRE(q_triangle(a) == decorated_count(s, {Direction::N, EntryCmp::Lt}));
                images.push_back(a);
            }
            std::sort(images.begin(), images.end());
            auto points = enumerate_triangles(lambda, mu, nu);
            std::sort(points.begin(), points.end());
            REQUIRE(images == points);
        }
}

TEST_CASE("transport between the two polytopes", "[polytope]") {
    std::mt19937 gen(20260814);

    SECTION("the coordinate change is a lattice bijection") {
        for (int trial = 0; trial < 100; ++trial) {
            int n = 1 + trial % 5;
            Triangle t = random_triangle(n, gen, false);
            Hive h = phi(t);
            REQUIRE(phi_inverse(h) == t);
            REQUIRE(phi(phi_inverse(h)) == h);
        }
    }

    SECTION("the quadratic forms correspond") {
        for (int trial = 0; trial < 100; ++trial) {
            int n = 1 + trial % 5;
            Triangle t = random_triangle(n, gen, true);
            REQUIRE(q_hive(phi(t)) == q_triangle(t));
        }
    }
}

TEST_CASE("hive enumeration paths agree", "[polytope]") {
    for (int degree = 0; degree <= 5; ++degree)
        for (const auto& [lambda, mu, nu] : boundary_triples(degree)) {
            auto direct = enumerate_hives(lambda, mu, nu, HiveEnumeration::Direct);
            auto mapped = enumerate_hives(lambda, mu, nu, HiveEnumeration::ViaPhi);
            REQUIRE(direct == mapped);
            for (const auto& h : direct) {
                REQUIRE(is_hive(h));
                // Mixed second differences along rows are nonnegative inside
                // the polytope, so each quadratic-form summand factor is too.
                for (int j = 1; j <= h.n; ++j)
                    for (int i = 1; i < j; ++i)
                        REQUIRE(h.at(i, j) - h.at(i - 1, j) - h.at(i, j - 1) +
                                    h.at(i - 1, j - 1) >=
                                0);
            }
        }
}

TEST_CASE("degenerate boundaries", "[polytope]") {
    Partition empty{};
    auto unit = enumerate_triangles(empty, empty, empty);
    REQUIRE(unit.size() == 1);
    REQUIRE(q_triangle(unit[0]) == 0);
    REQUIRE(lr_triangle({empty, empty, empty}) == 1);
    REQUIRE(lr_hive({empty, empty, empty}) == 1);

    Partition one{{1}};
    REQUIRE(lr_triangle({one, empty, one}) == 1);
    REQUIRE(lr_triangle({empty, one, one}) == 1);
    REQUIRE(lr_hive({one, one, Partition{{2}}}) == 1);
    REQUIRE(lr_hive({one, one, Partition{{1, 1}}}) == 1);

    // Degree mismatch gives the zero coefficient and no points.
    REQUIRE(enumerate_triangles(Partition{{2}}, one, empty).empty());
    REQUIRE(enumerate_hives(Partition{{2}}, one, empty).empty());
    REQUIRE(lr_triangle({one, empty, Partition{{2}}}) == 0);
}

TEST_CASE("polytope sums match the other expansions", "[polytope]") {
    for (int degree = 0; degree <= 5; ++degree)
        for (const auto& [lambda, mu, nu] : boundary_triples(degree)) {
            LRQuery q{mu, nu, lambda};
            Int reference = lr_yamanouchi(q);
            REQUIRE(lr_triangle(q) == reference);
            REQUIRE(lr_hive(q) == reference);
        }

    SECTION("larger spot checks") {
        std::vector<LRQuery> queries = {
            {Partition{{2, 2}}, Partition{{2, 1}}, Partition{{3, 2, 2}}},
            {Partition{{2, 1}}, Partition{{3, 1}}, Partition{{4, 2, 1}}},
            {Partition{{3, 2, 1}}, Partition{{1}}, Partition{{3, 2, 2}}},
            {Partition{{2, 2, 1}}, Partition{{2, 2}}, Partition{{3, 3, 2, 1}}},
        };
        for (const auto& q : queries) {
            Int reference = lr_yamanouchi(q);
            REQUIRE(lr_triangle(q) == reference);
            REQUIRE(lr_hive(q) == reference);
        }
    }
}
