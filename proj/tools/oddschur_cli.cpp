// Command-line front end: exact computations in the signed plactic model,
// with cross-checked Schur and Littlewood-Richardson methods.

#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "oddschur/verify.hpp"

namespace {

using namespace oddschur;

constexpr int kMaxWeight = 12;      // partition weight accepted anywhere
constexpr int kMaxSchurWeight = 10; // monomial expansions stay printable
constexpr int kMaxVariables = 8;
constexpr int kMaxLRDegree = 8;
constexpr int kMaxWordLength = 16;
constexpr int kMaxVerifyDegree = 7;

Partition read_partition(const std::string& text, const char* what) {
    Partition p = parse_partition(text);
    if (p.weight() > kMaxWeight)
        fail(std::string(what) + " is too large (weight is capped at " +
             std::to_string(kMaxWeight) + ")");
    return p;
}

std::string sign_string(int s) { return s >= 0 ? "+1" : "-1"; }

// ---------------------------------------------------------------------------
// schur
// ---------------------------------------------------------------------------

int run_schur(const std::string& format, const std::string& lambda_text, int n,
              const std::string& method) {
    Partition lambda = read_partition(lambda_text, "--lambda");
    if (lambda.weight() > kMaxSchurWeight)
        fail("--lambda is too large (weight is capped at " + std::to_string(kMaxSchurWeight) +
             " here)");
    if (n == 0) n = std::max<int>(1, static_cast<int>(lambda.weight()));
    if (n < 1 || n > kMaxVariables)
        fail("--n must be between 1 and " + std::to_string(kMaxVariables));
    if (static_cast<int>(lambda.parts.size()) > n)
        fail("--lambda has more rows than variables; increase --n");

    std::vector<std::pair<std::string, SkewPolynomial>> results;
    if (method == "plactic" || method == "all")
        results.emplace_back("plactic", schur_plactic(lambda, n));
    if (method == "symmetrized" || method == "all")
        results.emplace_back("symmetrized", schur_symmetrized(lambda, n));
    if (method == "kostka" || method == "all")
        results.emplace_back("kostka", schur_combinatorial(lambda, n));

    bool agree = true;
    for (const auto& [name, poly] : results) agree = agree && poly == results.front().second;

    if (format == "json") {
        json out{{"lambda", lambda}, {"n", n}, {"method", method}};
        json values = json::object();
        for (const auto& [name, poly] : results) values[name] = poly;
        out["results"] = std::move(values);
        if (method == "all") out["agree"] = agree;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [name, poly] : results)
            std::cout << name << ": " << print_polynomial(poly) << "\n";
        if (method == "all") std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// lr
// ---------------------------------------------------------------------------

Int lr_by_name(const std::string& name, const LRQuery& q) {
    if (name == "direct") return lr_direct(q);
    if (name == "yamanouchi") return lr_yamanouchi(q);
    if (name == "plactic") return lr_plactic(q);
    if (name == "even") return lr_even(q);
    if (name == "triangle") return lr_triangle(q);
    return lr_hive(q);
}

std::map<Partition, Int> lr_table_by_name(const std::string& name, const Partition& mu,
                                          const Partition& nu) {
    if (name == "direct") return lr_table(mu, nu, LRMethod::Direct);
    if (name == "yamanouchi") return lr_table(mu, nu, LRMethod::Yamanouchi);
    if (name == "plactic") return lr_table(mu, nu, LRMethod::Plactic);
    if (name == "even") return lr_table(mu, nu, LRMethod::Even);
    if (name == "all") return lr_table(mu, nu, LRMethod::All);
    std::map<Partition, Int> table; // triangle or hive
    int degree = static_cast<int>(mu.weight() + nu.weight());
    for (const auto& lambda : enumerate_partitions(degree)) {
        Int c = lr_by_name(name, {mu, nu, lambda});
        if (c != 0) table[lambda] = c;
    }
    return table;
}

int run_lr(const std::string& format, const std::string& mu_text, const std::string& nu_text,
           const std::string& lambda_text, const std::string& method) {
    Partition mu = read_partition(mu_text, "--mu");
    Partition nu = read_partition(nu_text, "--nu");
    if (mu.weight() + nu.weight() > kMaxLRDegree)
        fail("total degree is capped at " + std::to_string(kMaxLRDegree));

    static const std::vector<std::string> signed_methods = {"direct", "yamanouchi", "plactic",
                                                            "triangle", "hive"};

    if (!lambda_text.empty()) {
        Partition lambda = read_partition(lambda_text, "--lambda");
        LRQuery q{mu, nu, lambda};
        std::vector<std::pair<std::string, Int>> values;
        if (method == "all") {
            for (const auto& name : signed_methods) values.emplace_back(name, lr_by_name(name, q));
            values.emplace_back("even", lr_even(q));
        } else {
            values.emplace_back(method, lr_by_name(method, q));
        }
        bool agree = true;
        if (method == "all") {
            for (const auto& [name, v] : values)
                if (name != "even" && v != values.front().second) agree = false;
            Int parity = (values.front().second - values.back().second) % 2;
            if (parity != 0) agree = false;
        }
        if (format == "json") {
            json out{{"mu", mu}, {"nu", nu}, {"lambda", lambda}, {"method", method}};
            json coeffs = json::object();
            for (const auto& [name, v] : values) coeffs[name] = v.str();
            out["coefficients"] = std::move(coeffs);
            if (method == "all") out["agree"] = agree;
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& [name, v] : values) std::cout << name << ": " << v.str() << "\n";
            if (method == "all") std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
        }
        return agree ? 0 : 1;
    }

    // Table mode: every lambda of the right degree at once.
    bool agree = true;
    std::map<Partition, Int> table;
    if (method == "all") {
        table = lr_table(mu, nu, LRMethod::All); // throws if the core methods diverge
        int degree = static_cast<int>(mu.weight() + nu.weight());
        for (const auto& lambda : enumerate_partitions(degree)) {
            auto it = table.find(lambda);
            Int want = it == table.end() ? Int(0) : it->second;
            LRQuery q{mu, nu, lambda};
            if (lr_triangle(q) != want || lr_hive(q) != want) agree = false;
        }
    } else {
        table = lr_table_by_name(method, mu, nu);
    }
    if (format == "json") {
        json out{{"mu", mu}, {"nu", nu}, {"method", method}};
        json rows = json::array();
        for (const auto& [lambda, c] : table)
            rows.push_back(json{{"lambda", lambda}, {"coeff", c.str()}});
        out["table"] = std::move(rows);
        if (method == "all") out["agree"] = agree;
        std::cout << out.dump(2) << "\n";
    } else {
        if (table.empty()) std::cout << "0\n";
        for (const auto& [lambda, c] : table)
            std::cout << "s" << print_partition(lambda) << ": " << c.str() << "\n";
        if (method == "all") std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// kostka
// ---------------------------------------------------------------------------

int run_kostka(const std::string& format, int k) {
    if (k < 0 || k > kMaxVariables) fail("--k must be between 0 and " + std::to_string(kMaxVariables));
    KostkaMatrix m = kostka_matrix(k);
    if (format == "json") {
        json rows = json::array();
        for (const auto& row : m.rows) {
            json r = json::array();
            for (const auto& c : row) r.push_back(c.str());
            rows.push_back(std::move(r));
        }
        std::cout << json{{"k", k}, {"order", m.parts}, {"rows", rows}}.dump(2) << "\n";
    } else {
        std::cout << "order:";
        for (const auto& p : m.parts) std::cout << " " << print_partition(p);
        std::cout << "\n";
        for (size_t i = 0; i < m.rows.size(); ++i) {
            std::cout << print_partition(m.parts[i]) << ":";
            for (const auto& c : m.rows[i]) std::cout << " " << c.str();
            std::cout << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// hive
// ---------------------------------------------------------------------------

int run_hive(const std::string& format, const std::string& mu_text, const std::string& nu_text,
             const std::string& lambda_text, const std::string& emit) {
    Partition mu = read_partition(mu_text, "--mu");
    Partition nu = read_partition(nu_text, "--nu");
    Partition lambda = read_partition(lambda_text, "--lambda");
    std::vector<Hive> hives = enumerate_hives(lambda, mu, nu);
    json out{{"mu", mu}, {"nu", nu}, {"lambda", lambda}};
    if (emit == "count") {
        if (format == "json") {
            out["count"] = hives.size();
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << hives.size() << "\n";
        }
    } else if (emit == "signed") {
        Int c = lr_hive({mu, nu, lambda});
        if (format == "json") {
            out["signed"] = c.str();
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << c.str() << "\n";
        }
    } else {
        if (format == "json") {
            out["points"] = hives;
            std::cout << out.dump(2) << "\n";
        } else {
            for (const auto& h : hives) std::cout << print_hive(h) << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// pieri
// ---------------------------------------------------------------------------

int run_pieri(const std::string& format, const std::string& lambda_text, int k,
              const std::string& kind) {
    Partition lambda = read_partition(lambda_text, "--lambda");
    if (k < 0 || lambda.weight() + k > kMaxWeight)
        fail("--k must be nonnegative with |lambda| + k at most " + std::to_string(kMaxWeight));
    auto terms = kind == "e" ? pieri_e_right(lambda, k) : pieri_h_right(lambda, k);
    SymFunction f(Basis::S);
    for (const auto& t : terms) f.add(t.mu, t.coeff);
    if (format == "json") {
        std::cout << json{{"lambda", lambda}, {"k", k}, {"kind", kind}, {"result", f}}.dump(2)
                  << "\n";
    } else {
        std::cout << print_symfunction(f) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// plactic
// ---------------------------------------------------------------------------

int run_plactic(const std::string& format, const std::string& word_text) {
    if (word_text.size() > kMaxWordLength)
        fail("--word is capped at " + std::to_string(kMaxWordLength) + " letters");
    Word w;
    for (char ch : word_text) {
        if (ch < '1' || ch > '9') fail("--word must use letters 1..9");
        w.push_back(ch - '0');
    }
    auto [sign, tableau] = knuth_normalize(w);
    if (format == "json") {
        std::cout << json{{"word", word_text}, {"tableau", tableau}, {"sign", sign}}.dump(2)
                  << "\n";
    } else {
        std::cout << "tableau " << print_tableau(tableau) << ", sign " << sign_string(sign)
                  << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& format, const std::string& suite, int max_degree, bool deep,
               int threads) {
    if (max_degree < 0 || max_degree > kMaxVerifyDegree)
        fail("--max-degree must be between 0 and " + std::to_string(kMaxVerifyDegree));
    if (threads < 0) fail("--threads must be nonnegative");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    auto reports = run_verification(suite, max_degree, deep, threads);
    int failed = 0;
    if (format == "json") {
        std::cout << json(reports).dump(2) << "\n";
        for (const auto& r : reports) failed += r.failed;
    } else {
        for (const auto& r : reports) {
            std::cout << "suite " << r.suite << ": " << r.passed << " passed, " << r.failed
                      << " failed (" << r.wall_ms << " ms)\n";
            for (const auto& c : r.cases)
                if (!c.pass)
                    std::cout << "  FAIL " << c.inputs << " [" << c.expected_source << "] "
                              << c.got << "\n";
            failed += r.failed;
        }
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for odd symmetric functions"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::function<int()> action;

    auto* schur = app.add_subcommand("schur", "expand an odd Schur function in noncommuting variables");
    {
        auto lambda = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto method = std::make_shared<std::string>("all");
        schur->add_option("--lambda", *lambda, "partition, e.g. [2,1]")->required();
        schur->add_option("--n", *n, "number of variables (default: weight of lambda)");
        schur->add_option("--method", *method, "construction to use")
            ->check(CLI::IsMember({"plactic", "symmetrized", "kostka", "all"}))
            ->capture_default_str();
        schur->callback([&, lambda, n, method] {
            action = [&format, lambda, n, method] { return run_schur(format, *lambda, *n, *method); };
        });
    }

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients of s_mu s_nu");
    {
        auto mu = std::make_shared<std::string>();
        auto nu = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>();
        auto method = std::make_shared<std::string>("all");
        lr->add_option("--mu", *mu, "left factor partition")->required();
        lr->add_option("--nu", *nu, "right factor partition")->required();
        lr->add_option("--lambda", *lambda, "target partition (omit for the whole table)");
        lr->add_option("--method", *method, "computation to use")
            ->check(CLI::IsMember(
                {"direct", "yamanouchi", "plactic", "even", "triangle", "hive", "all"}))
            ->capture_default_str();
        lr->callback([&, mu, nu, lambda, method] {
            action = [&format, mu, nu, lambda, method] {
                return run_lr(format, *mu, *nu, *lambda, *method);
            };
        });
    }

    auto* kostka = app.add_subcommand("kostka", "signed Kostka matrix in one degree");
    {
        auto k = std::make_shared<int>(0);
        kostka->add_option("--k", *k, "degree")->required();
        kostka->callback([&, k] {
            action = [&format, k] { return run_kostka(format, *k); };
        });
    }

    auto* hive = app.add_subcommand("hive", "integer points of the hive polytope");
    {
        auto mu = std::make_shared<std::string>();
        auto nu = std::make_shared<std::string>();
        auto lambda = std::make_shared<std::string>();
        auto emit = std::make_shared<std::string>("count");
        hive->add_option("--mu", *mu, "left boundary partition")->required();
        hive->add_option("--nu", *nu, "right boundary partition")->required();
        hive->add_option("--lambda", *lambda, "outer boundary partition")->required();
        hive->add_option("--emit", *emit, "what to print")
            ->check(CLI::IsMember({"count", "signed", "points"}))
            ->capture_default_str();
        hive->callback([&, mu, nu, lambda, emit] {
            action = [&format, mu, nu, lambda, emit] {
                return run_hive(format, *mu, *nu, *lambda, *emit);
            };
        });
    }

    auto* pieri = app.add_subcommand("pieri", "signed Pieri expansion of s_lambda e_k or s_lambda h_k");
    {
        auto lambda = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        auto kind = std::make_shared<std::string>("h");
        pieri->add_option("--lambda", *lambda, "partition")->required();
        pieri->add_option("--k", *k, "degree of the one-row or one-column factor")->required();
        pieri->add_option("--kind", *kind, "h for horizontal strips, e for vertical strips")
            ->check(CLI::IsMember({"h", "e"}))
            ->capture_default_str();
        pieri->callback([&, lambda, k, kind] {
            action = [&format, lambda, k, kind] { return run_pieri(format, *lambda, *k, *kind); };
        });
    }

    auto* plactic = app.add_subcommand("plactic", "normalize a word in the signed plactic ring");
    {
        auto word = std::make_shared<std::string>();
        plactic->add_option("--word", *word, "letters 1..9, e.g. 3211")->required();
        plactic->callback([&, word] {
            action = [&format, word] { return run_plactic(format, *word); };
        });
    }

    auto* verify = app.add_subcommand("verify", "run the internal verification suites");
    {
        auto suite = std::make_shared<std::string>("all");
        auto max_degree = std::make_shared<int>(5);
        auto deep = std::make_shared<bool>(false);
        auto threads = std::make_shared<int>(0);
        verify->add_option("--suite", *suite, "which suite to run")
            ->check(CLI::IsMember({"ring", "coincidence", "pieri", "lr", "polytopes", "all"}))
            ->capture_default_str();
        verify->add_option("--max-degree", *max_degree, "sweep bound")->capture_default_str();
        verify->add_flag("--deep", *deep, "extend the coincidence sweep to degree 6");
        verify->add_option("--threads", *threads, "worker threads (0 = hardware)")
            ->capture_default_str();
        verify->callback([&, suite, max_degree, deep, threads] {
            action = [&format, suite, max_degree, deep, threads] {
                return run_verify(format, *suite, *max_degree, *deep, *threads);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
