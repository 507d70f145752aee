#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "oddschur/io.hpp"

namespace oddschur {

struct VerificationCase {
    std::string inputs;
    std::string expected_source; // "example", "trivial", or "oracle"
    std::string got;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<VerificationCase> cases;
    int passed = 0;
    int failed = 0;
    long long wall_ms = 0;
};

namespace detail {

struct PendingCase {
    std::string inputs;
    std::string expected_source;
    std::function<std::pair<bool, std::string>()> check; // (pass, got)
};

// Cases run on a pool but land in their submission slots, so the report is
// identical across thread counts.
inline VerificationReport run_suite(const std::string& name, std::vector<PendingCase> pending,
                                    int threads) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = name;
    report.cases.resize(pending.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= pending.size()) break;
            VerificationCase c;
            c.inputs = pending[i].inputs;
            c.expected_source = pending[i].expected_source;
            try {
                auto [pass, got] = pending[i].check();
                c.pass = pass;
                c.got = std::move(got);
            } catch (const std::exception& e) {
                c.pass = false;
                c.got = std::string("exception: ") + e.what();
            }
            report.cases[i] = std::move(c);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& c : report.cases) ++(c.pass ? report.passed : report.failed);
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

inline std::string brackets(const Partition& p) { return print_partition(p); }

inline std::pair<bool, std::string> equal_polys(const SkewPolynomial& got,
                                                const SkewPolynomial& want) {
    if (got == want) return {true, std::to_string(got.terms.size()) + " terms, equal"};
    return {false, "got " + print_polynomial(got) + ", want " + print_polynomial(want)};
}

} // namespace detail

inline VerificationReport verify_ring(int max_degree, int threads) {
    std::vector<detail::PendingCase> cases;
    int n = std::min(8, std::max(2, max_degree + 3));

    cases.push_back({"(x1+x2)*x1 = x1*(x1-x2) in two variables", "example", [] {
        SkewPolynomial x1 = SkewPolynomial::variable(1, 2);
        SkewPolynomial x2 = SkewPolynomial::variable(2, 2);
        return detail::equal_polys((x1 + x2) * x1, x1 * (x1 - x2));
    }});
    cases.push_back({"(x1-x2)^2 = (x1+x2)^2 in two variables", "example", [] {
        SkewPolynomial x1 = SkewPolynomial::variable(1, 2);
        SkewPolynomial x2 = SkewPolynomial::variable(2, 2);
        return detail::equal_polys((x1 - x2) * (x1 - x2), (x1 + x2) * (x1 + x2));
    }});
    cases.push_back({"generator square vanishes, generator braid holds", "trivial", [] {
        SkewPolynomial f(3);
        f.add_word({1, 1, 2, 3}, 2);
        f.add_word({2, 3, 3}, -1);
        f.add_word({1}, 5);
        bool square = divided_difference(divided_difference(f, 1), 1).is_zero() &&
                      divided_difference(divided_difference(f, 2), 2).is_zero();
        auto d = [&](const SkewPolynomial& g, int i) { return divided_difference(g, i); };
        bool braid = d(d(d(f, 1), 2), 1) == d(d(d(f, 2), 1), 2);
        return std::pair<bool, std::string>{square && braid,
                                            square && braid ? "both hold" : "violated"};
    }});
    for (int m = 2; m <= std::min(5, n); ++m)
        cases.push_back({"longest operator on the staircase, n=" + std::to_string(m), "oracle",
                         [m] {
                             SkewPolynomial stair(m);
                             Word w;
                             for (int i = 1; i < m; ++i)
                                 for (int r = 0; r < m - i; ++r) w.push_back(i);
                             stair.add_word(w, 1);
                             return detail::equal_polys(
                                 longest_divided_difference(stair),
                                 SkewPolynomial::constant(m, parity_sign(binom3(m))));
                         }});
    for (int ell = 1; ell <= n; ++ell)
        cases.push_back({"alternating e-h sum, l=" + std::to_string(ell) + ", n=" +
                             std::to_string(n),
                         "oracle", [ell, n] {
                             SkewPolynomial acc(n);
                             for (int k = 0; k <= ell; ++k)
                                 acc = acc + Int(triangle_sign(k)) *
                                                 (elementary(k, n) * complete(ell - k, n));
                             return std::pair<bool, std::string>{
                                 acc.is_zero(),
                                 acc.is_zero() ? "zero" : "residual " + print_polynomial(acc)};
                         }});
    for (int a = 1; a < n; ++a)
        for (int b = 1; a + b <= n; ++b)
            for (int which = 0; which < 2; ++which)
                cases.push_back(
                    {std::string("defining relation for ") + (which ? "h" : "e") + ", a=" +
                         std::to_string(a) + ", b=" + std::to_string(b),
                     "oracle", [a, b, n, which] {
                         auto gen = [&](int k) { return which ? complete(k, n) : elementary(k, n); };
                         SkewPolynomial lhs(n), rhs(n);
                         if ((a + b) % 2 == 0) {
                             lhs = gen(a) * gen(b);
                             rhs = gen(b) * gen(a);
                         } else {
                             lhs = gen(a) * gen(b) + Int(parity_sign(a)) * (gen(b) * gen(a));
                             rhs = Int(parity_sign(a)) * (gen(a + 1) * gen(b - 1)) +
                                   gen(b - 1) * gen(a + 1);
                         }
                         return detail::equal_polys(lhs, rhs);
                     }});
    return detail::run_suite("ring", std::move(cases), threads);
}

inline VerificationReport verify_coincidence(int max_degree, bool deep, int threads) {
    std::vector<detail::PendingCase> cases;
    int top = deep ? std::max(max_degree, 6) : max_degree;
    for (int k = 1; k <= top; ++k)
        for (const auto& lambda : enumerate_partitions(k))
            cases.push_back({"lambda=" + detail::brackets(lambda) + ", n=" + std::to_string(k),
                             "oracle", [lambda, k] {
                                 SkewPolynomial a = schur_plactic(lambda, k);
                                 SkewPolynomial b = schur_symmetrized(lambda, k);
                                 SkewPolynomial c = schur_combinatorial(lambda, k);
                                 bool pass = a == b && b == c;
                                 return std::pair<bool, std::string>{
                                     pass, pass ? "three constructions equal, " +
                                                      std::to_string(a.terms.size()) + " terms"
                                                : "constructions diverge"};
                             }});
    return detail::run_suite("coincidence", std::move(cases), threads);
}

inline VerificationReport verify_pieri(int max_degree, int threads) {
    std::vector<detail::PendingCase> cases;
    for (int w = 0; w <= max_degree; ++w)
        for (const auto& lambda : enumerate_partitions(w))
            for (int k = 1; k <= 3; ++k)
                for (int kind = 0; kind < 2; ++kind)
                    cases.push_back(
                        {std::string("lambda=") + detail::brackets(lambda) + ", k=" +
                             std::to_string(k) + ", strip=" + (kind ? "horizontal" : "vertical"),
                         "oracle", [lambda, k, kind] {
                             int n = static_cast<int>(lambda.weight()) + k;
                             Partition other =
                                 kind ? Partition{{k}} : Partition{std::vector<int>(k, 1)};
                             SkewPolynomial prod =
                                 schur_plactic(lambda, n) * schur_plactic(other, n);
                             SymFunction coords = expand_in_basis(prod, Basis::S, n);
                             auto terms =
                                 kind ? pieri_h_right(lambda, k) : pieri_e_right(lambda, k);
                             std::map<Partition, Int> want;
                             for (const auto& t : terms)
                                 if (t.coeff != 0) want[t.mu] = t.coeff;
                             bool pass = coords.terms == want;
                             return std::pair<bool, std::string>{
                                 pass, pass ? std::to_string(want.size()) + " summands match"
                                            : "signed strip sum disagrees with coordinates"};
                         }});
    return detail::run_suite("pieri", std::move(cases), threads);
}

inline VerificationReport verify_lr(int max_degree, int threads) {
    std::vector<detail::PendingCase> cases;
    Partition l321{{3, 2, 1}}, p21{{2, 1}};

    cases.push_back({"mu=[2,1], nu=[2,1], lambda=[3,2,1], five signed methods", "example",
                     [l321, p21] {
                         LRQuery q{p21, p21, l321};
                         std::vector<Int> vals = {lr_direct(q), lr_yamanouchi(q), lr_plactic(q),
                                                  lr_triangle(q), lr_hive(q)};
                         bool pass = true;
                         for (const auto& v : vals) pass = pass && v == 0;
                         return std::pair<bool, std::string>{pass, pass ? "all methods give 0"
                                                                        : "method disagreement"};
                     }});
    cases.push_back({"mu=[2,1], nu=[2,1], lambda=[3,2,1], two fillings with statistics 7 and 6",
                     "example", [l321, p21] {
                         std::vector<long long> stats;
                         for (const auto& s : enumerate_skew_ssyt(SkewShape(l321, p21), p21.parts))
                             if (is_yamanouchi(row_word(s)))
                                 stats.push_back(
                                     decorated_count(s, {Direction::N, EntryCmp::Lt}));
                         std::sort(stats.begin(), stats.end());
                         bool pass = stats == std::vector<long long>{6, 7};
                         std::string got = "statistics {";
                         for (size_t i = 0; i < stats.size(); ++i)
                             got += (i ? "," : "") + std::to_string(stats[i]);
                         return std::pair<bool, std::string>{pass, got + "}"};
                     }});
    cases.push_back({"unsigned square of s[2,1]", "example", [p21] {
        std::map<Partition, Int> want = {
            {Partition{{2, 2, 1, 1}}, 1}, {Partition{{2, 2, 2}}, 1}, {Partition{{3, 1, 1, 1}}, 1},
            {Partition{{3, 2, 1}}, 2},    {Partition{{3, 3}}, 1},    {Partition{{4, 1, 1}}, 1},
            {Partition{{4, 2}}, 1}};
        std::map<Partition, Int> got;
        for (const auto& lambda : enumerate_partitions(6)) {
            Int c = lr_even({p21, p21, lambda});
            if (c != 0) got[lambda] = c;
        }
        bool pass = got == want;
        return std::pair<bool, std::string>{pass, pass ? "seven shapes, multiplicity two at [3,2,1]"
                                                       : "table disagrees"};
    }});
    for (int dm = 0; dm <= max_degree; ++dm)
        for (int dn = 0; dm + dn <= max_degree; ++dn)
            for (const auto& mu : enumerate_partitions(dm))
                for (const auto& nu : enumerate_partitions(dn))
                    cases.push_back(
                        {"mu=" + detail::brackets(mu) + ", nu=" + detail::brackets(nu) +
                             ", all methods and symmetries",
                         "oracle", [mu, nu] {
                             auto table = lr_table(mu, nu, LRMethod::All); // throws on divergence
                             auto swapped = lr_table(nu, mu, LRMethod::Direct);
                             long long fixed = dN_count(mu) + dN_count(nu) + N_count(mu) +
                                               N_count(nu);
                             Partition mt = transpose(mu), nt = transpose(nu);
                             int degree = static_cast<int>(mu.weight() + nu.weight());
                             for (const auto& lambda : enumerate_partitions(degree)) {
                                 auto coeff_of = [&](const std::map<Partition, Int>& t,
                                                     const Partition& p) {
                                     auto it = t.find(p);
                                     return it == t.end() ? Int(0) : it->second;
                                 };
                                 Int c = coeff_of(table, lambda);
                                 Int sw = coeff_of(swapped, lambda);
                                 if (c != parity_sign(fixed + dN_count(lambda) + N_count(lambda)) *
                                              sw)
                                     return std::pair<bool, std::string>{
                                         false, "swap symmetry fails at " +
                                                    detail::brackets(lambda)};
                                 Int tr = lr_yamanouchi({mt, nt, transpose(lambda)});
                                 if (c != parity_sign(NE_count(mu) + NE_count(nu) +
                                                      NE_count(lambda)) *
                                              tr)
                                     return std::pair<bool, std::string>{
                                         false, "transpose symmetry fails at " +
                                                    detail::brackets(lambda)};
                             }
                             return std::pair<bool, std::string>{
                                 true, std::to_string(table.size()) + " nonzero coefficients"};
                         }});
    return detail::run_suite("lr", std::move(cases), threads);
}

inline VerificationReport verify_polytopes(int max_degree, int threads) {
    std::vector<detail::PendingCase> cases;

    cases.push_back({"worked triangle/hive pair with both forms equal to 6", "example", [] {
        SkewTableau s(Partition{{2, 1}}, {{0, 0, 1}, {0, 2}, {1}});
        Triangle a = triangle_from_skew_tableau(s);
        bool pass = print_triangle(a) == "0/2,1/1,0,1/0,1,0,0" && q_triangle(a) == 6;
        Hive h = phi(a);
        pass = pass && print_hive(h) == "0/2,3/3,4,5/3,5,6,6" && q_hive(h) == 6;
        return std::pair<bool, std::string>{
            pass, "Q_triangle=" + std::to_string(q_triangle(a)) +
                      ", Q_hive=" + std::to_string(q_hive(h))};
    }});
    for (int degree = 0; degree <= max_degree; ++degree)
        for (const auto& lambda : enumerate_partitions(degree))
            cases.push_back(
                {"bijection and statistics at lambda=" + detail::brackets(lambda), "oracle",
                 [lambda, degree] {
                     long long triples = 0;
                     for (int m = 0; m <= degree; ++m)
                         for (const auto& mu : enumerate_partitions(m)) {
                             if (!contains(lambda, mu)) continue;
                             for (const auto& nu : enumerate_partitions(degree - m)) {
                                 std::vector<Triangle> images;
                                 for (const auto& s :
                                      enumerate_skew_ssyt(SkewShape(lambda, mu), nu.parts)) {
                                     if (!is_yamanouchi(row_word(s))) continue;
                                     Triangle a = triangle_from_skew_tableau(s);
                                     if (q_triangle(a) !=
                                         decorated_count(s, {Direction::N, EntryCmp::Lt}))
                                         return std::pair<bool, std::string>{
                                             false, "quadratic form misses the statistic"};
                                     images.push_back(a);
                                 }
                                 std::sort(images.begin(), images.end());
                                 auto points = enumerate_triangles(lambda, mu, nu);
                                 std::sort(points.begin(), points.end());
                                 if (images != points)
                                     return std::pair<bool, std::string>{
                                         false, "tableaux and lattice points disagree at mu=" +
                                                    detail::brackets(mu) + ", nu=" +
                                                    detail::brackets(nu)};
                                 auto direct = enumerate_hives(lambda, mu, nu);
                                 auto mapped =
                                     enumerate_hives(lambda, mu, nu, HiveEnumeration::ViaPhi);
                                 if (direct != mapped)
                                     return std::pair<bool, std::string>{
                                         false, "hive enumeration paths disagree"};
                                 ++triples;
                             }
                         }
                     return std::pair<bool, std::string>{
                         true, std::to_string(triples) + " boundary triples check out"};
                 }});
    for (int dm = 0; dm <= max_degree; ++dm)
        for (int dn = 0; dm + dn <= max_degree; ++dn)
            for (const auto& mu : enumerate_partitions(dm))
                for (const auto& nu : enumerate_partitions(dn))
                    cases.push_back({"signed lattice sums at mu=" + detail::brackets(mu) +
                                         ", nu=" + detail::brackets(nu),
                                     "oracle", [mu, nu] {
                                         auto table = lr_table(mu, nu, LRMethod::Direct);
                                         int degree =
                                             static_cast<int>(mu.weight() + nu.weight());
                                         for (const auto& lambda : enumerate_partitions(degree)) {
                                             auto it = table.find(lambda);
                                             Int want = it == table.end() ? Int(0) : it->second;
                                             LRQuery q{mu, nu, lambda};
                                             if (lr_triangle(q) != want || lr_hive(q) != want)
                                                 return std::pair<bool, std::string>{
                                                     false, "polytope sum differs at " +
                                                                detail::brackets(lambda)};
                                         }
                                         return std::pair<bool, std::string>{true,
                                                                             "sums match"};
                                     }});
    return detail::run_suite("polytopes", std::move(cases), threads);
}

inline std::vector<VerificationReport> run_verification(const std::string& suite, int max_degree,
                                                        bool deep, int threads) {
    if (max_degree < 0) fail("max degree must be nonnegative");
    std::vector<VerificationReport> reports;
    auto want = [&suite](const char* name) { return suite == name || suite == "all"; };
    bool known = false;
    if (want("ring")) reports.push_back(verify_ring(max_degree, threads)), known = true;
    if (want("coincidence"))
        reports.push_back(verify_coincidence(max_degree, deep, threads)), known = true;
    if (want("pieri")) reports.push_back(verify_pieri(max_degree, threads)), known = true;
    if (want("lr")) reports.push_back(verify_lr(max_degree, threads)), known = true;
    if (want("polytopes")) reports.push_back(verify_polytopes(max_degree, threads)), known = true;
    if (!known) fail("unknown suite: " + suite);
    return reports;
}

inline void to_json(json& j, const VerificationCase& c) {
    j = json{{"inputs", c.inputs},
             {"expected_source", c.expected_source},
             {"got", c.got},
             {"pass", c.pass}};
}

inline void to_json(json& j, const VerificationReport& r) {
    j = json{{"suite", r.suite}, {"passed", r.passed},   {"failed", r.failed},
             {"wall_ms", r.wall_ms}, {"cases", r.cases}};
}

} // namespace oddschur
