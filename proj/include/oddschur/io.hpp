#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oddschur/oddsym.hpp"
#include "oddschur/polytope.hpp"

namespace oddschur {

// ---------------------------------------------------------------------------
// Text forms. Printing is canonical; parsing accepts the printed grammar with
// optional whitespace and reports malformed input through invalid_argument.
// ---------------------------------------------------------------------------

inline std::string print_partition(const Partition& p) {
    std::string out = "[";
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts[i]);
    }
    return out + "]";
}

namespace detail {

// Rows joined by '/'; single-character cells are concatenated, otherwise the
// row is comma-separated. Inner boxes (entry 0) print as dots.
inline std::string print_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return "-";
    bool compact = true;
    for (const auto& r : rows)
        for (int e : r)
            if (e > 9) compact = false;
    std::string out;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) out += "/";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (!compact && c) out += ",";
            out += rows[r][c] == 0 ? "." : std::to_string(rows[r][c]);
        }
    }
    // The parser switches on the presence of a comma, so a comma-mode string
    // of single-cell rows needs one made visible.
    if (!compact && out.find(',') == std::string::npos) {
        size_t slash = out.find('/');
        if (slash == std::string::npos)
            out += ",";
        else
            out.insert(slash, ",");
    }
    return out;
}

class Cursor {
  public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ == s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "' in \"" + std::string(s_) + "\"");
    }
    long long integer() {
        skip_ws();
        bool neg = pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+') ? s_[pos_++] == '-'
                                                                            : false;
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer in \"" + std::string(s_) + "\"");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
            if (v > 1000000000) fail("integer out of range");
        }
        return neg ? -v : v;
    }

  private:
    std::string_view s_;
    size_t pos_ = 0;
};

inline std::vector<std::vector<int>> parse_rows(const std::string& text, bool allow_dots) {
    std::vector<std::vector<int>> rows;
    if (text == "-") return rows;
    bool comma_mode = text.find(',') != std::string::npos;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('/', start);
        std::string cell = text.substr(start, end == std::string::npos ? end : end - start);
        std::vector<int> row;
        if (comma_mode) {
            Cursor cur(cell);
            while (!cur.done()) {
                if (allow_dots && cur.eat('.')) {
                    row.push_back(0);
                } else {
                    long long v = cur.integer();
                    if (v < 1) fail("entries must be positive in \"" + text + "\"");
                    row.push_back(static_cast<int>(v));
                }
                if (!cur.done()) cur.expect(',');
            }
        } else {
            for (char c : cell) {
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                if (allow_dots && c == '.') {
                    row.push_back(0);
                } else if (std::isdigit(static_cast<unsigned char>(c)) && c != '0') {
                    row.push_back(c - '0');
                } else {
                    fail(std::string("unexpected character '") + c + "' in \"" + text + "\"");
                }
            }
        }
        rows.push_back(std::move(row));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return rows;
}

} // namespace detail

inline Partition parse_partition(const std::string& text) {
    detail::Cursor cur(text);
    cur.expect('[');
    std::vector<int> parts;
    if (!cur.eat(']')) {
        while (true) {
            long long v = cur.integer();
            if (v < 0 || v > 1000000) fail("partition parts must be small nonnegative integers");
            parts.push_back(static_cast<int>(v));
            if (cur.eat(']')) break;
            cur.expect(',');
        }
    }
    if (!cur.done()) fail("trailing characters after partition in \"" + text + "\"");
    return Partition(parts);
}

inline std::string print_tableau(const Tableau& t) { return detail::print_rows(t.rows); }

inline Tableau parse_tableau(const std::string& text) {
    return Tableau(detail::parse_rows(text, false));
}

inline std::string print_skew_tableau(const SkewTableau& s) { return detail::print_rows(s.rows); }

inline SkewTableau parse_skew_tableau(const std::string& text) {
    auto rows = detail::parse_rows(text, true);
    std::vector<int> inner;
    for (const auto& row : rows) {
        size_t k = 0;
        while (k < row.size() && row[k] == 0) ++k;
        inner.push_back(static_cast<int>(k));
    }
    while (!inner.empty() && inner.back() == 0) inner.pop_back();
    return SkewTableau(Partition(inner), rows);
}

inline std::string print_monomial(const SortedMonomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < m.size();) {
        size_t run = i;
        while (run < m.size() && m[run] == m[i]) ++run;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(m[i]);
        if (run - i > 1) out += "^" + std::to_string(run - i);
        i = run;
    }
    return out;
}

inline std::string print_polynomial(const SkewPolynomial& f) {
    if (f.terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : f.terms) {
        Int mag = c < 0 ? Int(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || m.empty()) {
            out += mag.str();
            if (!m.empty()) out += "*";
        }
        if (!m.empty()) out += print_monomial(m);
    }
    return out;
}

// Terms are read as written: letters in a product contribute in their written
// order, so x2*x1 parses to the negative of x1*x2.
inline SkewPolynomial parse_polynomial(const std::string& text, int n) {
    SkewPolynomial f(n);
    detail::Cursor cur(text);
    if (cur.done()) fail("empty polynomial");
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.eat('-')) {
            sign = -1;
        } else if (!cur.eat('+') && !first) {
            fail("expected '+' or '-' between terms in \"" + text + "\"");
        }
        first = false;
        Int coeff = sign;
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff *= Int(cur.integer());
            saw_factor = true;
        }
        Word word;
        bool pending_star = false;
        while (true) {
            if (saw_factor) {
                if (!cur.eat('*')) break;
                pending_star = true;
            }
            if (cur.peek() != 'x') {
                if (pending_star) fail("dangling '*' in \"" + text + "\"");
                if (!saw_factor) fail("expected a term in \"" + text + "\"");
                break;
            }
            cur.expect('x');
            long long letter = cur.integer();
            if (letter < 1 || letter > n) fail("variable index out of range in \"" + text + "\"");
            long long exp = 1;
            if (cur.eat('^')) exp = cur.integer();
            if (exp < 0 || exp > 64) fail("exponent out of range in \"" + text + "\"");
            for (long long e = 0; e < exp; ++e) word.push_back(static_cast<int>(letter));
            saw_factor = true;
            pending_star = false;
        }
        f.add_word(word, coeff);
    }
    return f;
}

inline char basis_letter(Basis b) {
    switch (b) {
        case Basis::E: return 'e';
        case Basis::H: return 'h';
        case Basis::S: return 's';
    }
    fail("unknown basis");
}

inline Basis basis_from_letter(char c) {
    if (c == 'e') return Basis::E;
    if (c == 'h') return Basis::H;
    if (c == 's') return Basis::S;
    fail(std::string("unknown basis letter '") + c + "'");
}

inline std::string print_symfunction(const SymFunction& f) {
    if (f.terms.empty()) return "0";
    std::string out;
    char b = basis_letter(f.basis);
    for (const auto& [p, c] : f.terms) {
        Int mag = c < 0 ? Int(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += mag.str() + "*";
        out += b + print_partition(p);
    }
    return out;
}

inline SymFunction parse_symfunction(const std::string& text,
                                     std::optional<Basis> basis = std::nullopt) {
    detail::Cursor cur(text);
    if (cur.peek() == '0') {
        cur.expect('0');
        if (!cur.done()) fail("trailing characters after zero in \"" + text + "\"");
        if (!basis) fail("cannot infer the basis of a zero sum");
        return SymFunction(*basis);
    }
    std::optional<SymFunction> f;
    bool first = true;
    while (!cur.done()) {
        int sign = 1;
        if (cur.eat('-')) {
            sign = -1;
        } else if (!cur.eat('+') && !first) {
            fail("expected '+' or '-' between terms in \"" + text + "\"");
        }
        first = false;
        Int coeff = sign;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff *= Int(cur.integer());
            cur.expect('*');
        }
        Basis b = basis_from_letter(cur.peek());
        cur.expect(basis_letter(b));
        if (!f) {
            if (basis && *basis != b) fail("basis letter does not match in \"" + text + "\"");
            f = SymFunction(b);
        } else if (f->basis != b) {
            fail("mixed basis letters in \"" + text + "\"");
        }
        cur.expect('[');
        std::vector<int> parts;
        if (!cur.eat(']')) {
            while (true) {
                long long v = cur.integer();
                if (v < 0 || v > 1000000) fail("partition parts out of range");
                parts.push_back(static_cast<int>(v));
                if (cur.eat(']')) break;
                cur.expect(',');
            }
        }
        f->add(Partition(parts), coeff);
    }
    return *f;
}

namespace detail {

inline std::string print_long_rows(const std::vector<std::vector<long long>>& rows) {
    std::string out;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) out += "/";
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) out += ",";
            out += std::to_string(rows[r][c]);
        }
    }
    return out;
}

inline std::vector<std::vector<long long>> parse_long_rows(const std::string& text) {
    std::vector<std::vector<long long>> rows;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('/', start);
        std::string cell = text.substr(start, end == std::string::npos ? end : end - start);
        std::vector<long long> row;
        Cursor cur(cell);
        while (!cur.done()) {
            row.push_back(cur.integer());
            if (!cur.done()) cur.expect(',');
        }
        rows.push_back(std::move(row));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return rows;
}

} // namespace detail

inline std::string print_triangle(const Triangle& t) { return detail::print_long_rows(t.rows); }
inline std::string print_hive(const Hive& h) { return detail::print_long_rows(h.rows); }

inline Triangle parse_triangle(const std::string& text) {
    auto rows = detail::parse_long_rows(text);
    int n = static_cast<int>(rows.size()) - 1;
    return Triangle(n, std::move(rows));
}

inline Hive parse_hive(const std::string& text) {
    auto rows = detail::parse_long_rows(text);
    int n = static_cast<int>(rows.size()) - 1;
    return Hive(n, std::move(rows));
}

// ---------------------------------------------------------------------------
// JSON forms, via ADL hooks. Coefficients travel as decimal strings so that
// arbitrary-precision values survive the round trip.
// ---------------------------------------------------------------------------

using nlohmann::json;

inline void to_json(json& j, const Partition& p) { j = p.parts; }
inline void from_json(const json& j, Partition& p) {
    p = Partition(j.get<std::vector<int>>());
}

inline void to_json(json& j, const Tableau& t) { j = t.rows; }
inline void from_json(const json& j, Tableau& t) {
    t = Tableau(j.get<std::vector<std::vector<int>>>());
}

inline void to_json(json& j, const SkewTableau& s) {
    j = json{{"inner", s.inner}, {"rows", s.rows}};
}
inline void from_json(const json& j, SkewTableau& s) {
    s = SkewTableau(j.at("inner").get<Partition>(),
                    j.at("rows").get<std::vector<std::vector<int>>>());
}

inline void to_json(json& j, const SkewPolynomial& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms) terms.push_back({{"monomial", m}, {"coeff", c.str()}});
    j = json{{"n", f.n}, {"terms", std::move(terms)}};
}
inline void from_json(const json& j, SkewPolynomial& f) {
    f = SkewPolynomial(j.at("n").get<int>());
    for (const auto& term : j.at("terms"))
        f.add_word(term.at("monomial").get<Word>(), Int(term.at("coeff").get<std::string>()));
}

inline void to_json(json& j, const SymFunction& f) {
    json terms = json::array();
    for (const auto& [p, c] : f.terms) terms.push_back({{"partition", p}, {"coeff", c.str()}});
    j = json{{"basis", std::string(1, basis_letter(f.basis))}, {"terms", std::move(terms)}};
}
inline void from_json(const json& j, SymFunction& f) {
    std::string b = j.at("basis").get<std::string>();
    if (b.size() != 1) fail("basis must be a single letter");
    f = SymFunction(basis_from_letter(b[0]));
    for (const auto& term : j.at("terms"))
        f.add(term.at("partition").get<Partition>(), Int(term.at("coeff").get<std::string>()));
}

// Triangles and hives are bare row-lists, top row first.
inline void to_json(json& j, const Triangle& t) { j = t.rows; }
inline void from_json(const json& j, Triangle& t) {
    auto rows = j.get<std::vector<std::vector<long long>>>();
    int n = static_cast<int>(rows.size()) - 1;
    t = Triangle(n, std::move(rows));
}

inline void to_json(json& j, const Hive& h) { j = h.rows; }
inline void from_json(const json& j, Hive& h) {
    auto rows = j.get<std::vector<std::vector<long long>>>();
    int n = static_cast<int>(rows.size()) - 1;
    h = Hive(n, std::move(rows));
}

} // namespace oddschur
