#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "oddschur/core.hpp"
#include "oddschur/lr.hpp"

namespace oddschur {

// Triangular integer arrays indexed by 0 <= i <= j <= n, stored as rows
// top-down: row j holds (x_{0,j}, ..., x_{j,j}). Membership in the
// Littlewood-Richardson cone or the hive cone is checked separately.
struct Triangle {
    int n = 0;
    std::vector<std::vector<long long>> rows;

    Triangle() = default;
    explicit Triangle(int size) : n(size) {
        if (n < 0) fail("triangle size must be nonnegative");
        for (int j = 0; j <= n; ++j) rows.push_back(std::vector<long long>(j + 1, 0));
    }
    Triangle(int size, std::vector<std::vector<long long>> r) : n(size), rows(std::move(r)) {
        if (n < 0 || static_cast<int>(rows.size()) != n + 1) fail("triangle needs n+1 rows");
        for (int j = 0; j <= n; ++j)
            if (static_cast<int>(rows[j].size()) != j + 1) fail("triangle row j needs j+1 entries");
    }

    long long at(int i, int j) const { return rows[j][i]; }
    long long& at(int i, int j) { return rows[j][i]; }

    auto operator<=>(const Triangle&) const = default;
};

struct Hive {
    int n = 0;
    std::vector<std::vector<long long>> rows;

    Hive() = default;
    explicit Hive(int size) : n(size) {
        if (n < 0) fail("hive size must be nonnegative");
        for (int j = 0; j <= n; ++j) rows.push_back(std::vector<long long>(j + 1, 0));
    }
    Hive(int size, std::vector<std::vector<long long>> r) : n(size), rows(std::move(r)) {
        if (n < 0 || static_cast<int>(rows.size()) != n + 1) fail("hive needs n+1 rows");
        for (int j = 0; j <= n; ++j)
            if (static_cast<int>(rows[j].size()) != j + 1) fail("hive row j needs j+1 entries");
    }

    // Zero outside the index range, per the boundary convention.
    long long at(int i, int j) const {
        if (i < 0 || i > j || j > n) return 0;
        return rows[j][i];
    }
    long long& cell(int i, int j) { return rows[j][i]; }

    auto operator<=>(const Hive&) const = default;
};

struct Boundary {
    Partition lambda, mu, nu;
};

namespace detail {

inline Partition marginal_partition(const std::vector<long long>& vals, const char* what) {
    std::vector<int> parts;
    for (size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] < 0 || (i > 0 && vals[i] > vals[i - 1]))
            fail(std::string("boundary ") + what + " is not weakly decreasing and nonnegative");
        parts.push_back(static_cast<int>(vals[i]));
    }
    return Partition(parts);
}

} // namespace detail

inline bool is_lr_triangle(const Triangle& t) {
    int n = t.n;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            if (t.at(i, j) < 0) return false;
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= j; ++i) {
            long long lhs = 0, rhs = 0;
            for (int p = 0; p <= i - 1; ++p) lhs += t.at(p, j);
            for (int p = 0; p <= i; ++p) rhs += t.at(p, j + 1);
            if (lhs < rhs) return false;
        }
    // The row partial-sum family must include its diagonal instances (i = j):
    // they carry the per-row letter-count dominance that makes the filling
    // Yamanouchi, and they match the third rhombus family under the
    // coordinate change to hives.
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= j; ++i) {
            long long lhs = 0, rhs = 0;
            for (int q = i; q <= j; ++q) lhs += t.at(i, q);
            for (int q = i + 1; q <= j + 1; ++q) rhs += t.at(i + 1, q);
            if (lhs < rhs) return false;
        }
    return true;
}

inline bool is_hive(const Hive& h) {
    if (h.at(0, 0) != 0) return false;
    int n = h.n;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            if (h.at(i, j) - h.at(i, j - 1) < h.at(i - 1, j) - h.at(i - 1, j - 1)) return false;
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= j; ++i)
            if (h.at(i - 1, j) - h.at(i - 1, j - 1) < h.at(i, j + 1) - h.at(i, j)) return false;
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= j; ++i)
            if (h.at(i, j) - h.at(i - 1, j) < h.at(i + 1, j + 1) - h.at(i, j + 1)) return false;
    return true;
}

inline Boundary boundary_partitions(const Triangle& t) {
    std::vector<long long> l, m, v;
    for (int j = 1; j <= t.n; ++j) {
        long long col = 0;
        for (int p = 0; p <= j; ++p) col += t.at(p, j);
        l.push_back(col);
        m.push_back(t.at(0, j));
        long long row = 0;
        for (int q = j; q <= t.n; ++q) row += t.at(j, q);
        v.push_back(row);
    }
    return {detail::marginal_partition(l, "lambda"), detail::marginal_partition(m, "mu"),
            detail::marginal_partition(v, "nu")};
}

inline Boundary boundary_partitions(const Hive& h) {
    std::vector<long long> l, m, v;
    for (int j = 1; j <= h.n; ++j) {
        l.push_back(h.at(j, j) - h.at(j - 1, j - 1));
        m.push_back(h.at(0, j) - h.at(0, j - 1));
        v.push_back(h.at(j, h.n) - h.at(j - 1, h.n));
    }
    return {detail::marginal_partition(l, "lambda"), detail::marginal_partition(m, "mu"),
            detail::marginal_partition(v, "nu")};
}

// Row fillings of a Littlewood-Richardson skew tableau, recorded as letter
// counts per row, with the inner shape across the top edge.
inline Triangle triangle_from_skew_tableau(const SkewTableau& s) {
    if (!is_yamanouchi(row_word(s))) fail("triangle construction needs a Yamanouchi filling");
    Partition outer = s.outer();
    int n = std::max(outer.length(), 1);
    Triangle t(n);
    for (int j = 1; j <= n; ++j) t.at(0, j) = s.inner.row(j);
    for (int j = 1; j <= outer.length(); ++j) {
        int inner_len = s.inner.row(j);
        for (size_t c = inner_len; c < s.rows[j - 1].size(); ++c) {
            int entry = s.rows[j - 1][c];
            if (entry > j) fail("entry exceeds its row index; not a Yamanouchi filling");
            ++t.at(entry, j);
        }
    }
    return t;
}

inline long long q_triangle(const Triangle& t) {
    long long total = 0;
    for (int i = 1; i <= t.n; ++i)
        for (int j = i; j <= t.n; ++j) {
            long long y = 0;
            for (int p = 0; p <= i - 1; ++p)
                for (int q = p; q <= j - 1; ++q) y += t.at(p, q);
            total += t.at(i, j) * y;
        }
    return total;
}

inline Hive phi(const Triangle& t) {
    Hive h(t.n);
    for (int j = 0; j <= t.n; ++j)
        for (int i = 0; i <= j; ++i) {
            long long sum = 0;
            for (int p = 0; p <= i; ++p)
                for (int q = p; q <= j; ++q) sum += t.at(p, q);
            h.cell(i, j) = sum;
        }
    return h;
}

inline Triangle phi_inverse(const Hive& h) {
    Triangle t(h.n);
    for (int j = 0; j <= h.n; ++j)
        for (int i = 0; i <= j; ++i)
            t.at(i, j) = (i == j) ? h.at(i, i) - h.at(i - 1, i)
                                  : h.at(i, j) - h.at(i - 1, j) - h.at(i, j - 1) + h.at(i - 1, j - 1);
    return t;
}

inline long long q_hive(const Hive& h) {
    long long total = 0;
    for (int i = 1; i <= h.n; ++i)
        for (int j = i; j <= h.n; ++j)
            total += h.at(i - 1, j - 1) *
                     (h.at(i, j) - h.at(i - 1, j) - h.at(i, j - 1) + h.at(i - 1, j - 1));
    for (int i = 1; i <= h.n - 1; ++i) total -= h.at(i, i) * h.at(i, i);
    return total;
}

namespace detail {

inline int polytope_size(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return std::max({lambda.length(), mu.length(), nu.length(), 1});
}

} // namespace detail

// Integer points of the Littlewood-Richardson polytope: the top edge carries
// mu, each row i sums to nu_i (fixing the diagonal), each column j sums to
// lambda_j, and the off-diagonal cells are nonnegative. Cells are bounded
// above through the column partial-sum inequality against already-fixed rows.
inline std::vector<Triangle> enumerate_triangles(const Partition& lambda, const Partition& mu,
                                                 const Partition& nu) {
    std::vector<Triangle> out;
    if (mu.weight() + nu.weight() != lambda.weight()) return out;
    int n = detail::polytope_size(lambda, mu, nu);
    Triangle t(n);
    for (int j = 1; j <= n; ++j) t.at(0, j) = mu.row(j);

    auto fill_row = [&](auto&& self, int i, int j, long long placed) -> void {
        if (j > n) {
            t.at(i, i) = nu.row(i) - placed;
            long long col = 0;
            for (int p = 0; p <= i; ++p) col += t.at(p, i);
            if (col != lambda.row(i)) return;
            if (i == n) {
                if (is_lr_triangle(t)) out.push_back(t);
            } else {
                self(self, i + 1, i + 2, 0);
            }
            return;
        }
        long long hi = 0;
        for (int p = 0; p <= i - 1; ++p) hi += t.at(p, j - 1) - t.at(p, j);
        for (long long v = 0; v <= hi; ++v) {
            t.at(i, j) = v;
            self(self, i, j + 1, placed + v);
        }
        t.at(i, j) = 0;
    };
    fill_row(fill_row, 1, 2, 0);
    return out;
}

enum class HiveEnumeration { Direct, ViaPhi };

// Integer points of the hive polytope. The boundary (top-left edge, diagonal,
// and last column) is forced by the three partitions; interior cells are
// searched between the bounds that the rhombus inequalities place on the last
// unassigned corner, and full membership is re-checked at the leaves.
inline std::vector<Hive> enumerate_hives(const Partition& lambda, const Partition& mu,
                                         const Partition& nu,
                                         HiveEnumeration path = HiveEnumeration::Direct) {
    std::vector<Hive> out;
    if (mu.weight() + nu.weight() != lambda.weight()) return out;
    if (path == HiveEnumeration::ViaPhi) {
        for (const auto& t : enumerate_triangles(lambda, mu, nu)) {
            Hive h = phi(t);
            if (!is_hive(h)) fail("triangle image violates the rhombus inequalities");
            out.push_back(h);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    int n = detail::polytope_size(lambda, mu, nu);
    Hive h(n);
    std::vector<std::vector<bool>> assigned(n + 1);
    for (int j = 0; j <= n; ++j) assigned[j] = std::vector<bool>(j + 1, false);
    auto set_cell = [&](int i, int j, long long v) {
        h.cell(i, j) = v;
        assigned[j][i] = true;
    };
    set_cell(0, 0, 0);
    long long acc = 0;
    for (int j = 1; j <= n; ++j) set_cell(0, j, acc += mu.row(j));
    acc = 0;
    for (int j = 1; j <= n; ++j) set_cell(j, j, acc += lambda.row(j));
    acc = mu.weight();
    for (int i = 1; i < n; ++i) set_cell(i, n, acc += nu.row(i));

    // One rhombus inequality: sum of signs[k] * h(cells[k]) >= 0.
    struct Instance {
        std::array<std::pair<int, int>, 4> cells;
        std::array<int, 4> signs;
    };
    std::vector<Instance> instances;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            instances.push_back({{{{i, j}, {i, j - 1}, {i - 1, j}, {i - 1, j - 1}}},
                                 {1, -1, -1, 1}});
    for (int j = 1; j < n; ++j)
        for (int i = 1; i <= j; ++i) {
            instances.push_back({{{{i - 1, j}, {i - 1, j - 1}, {i, j + 1}, {i, j}}},
                                 {1, -1, -1, 1}});
            instances.push_back({{{{i, j}, {i - 1, j}, {i + 1, j + 1}, {i, j + 1}}},
                                 {1, -1, -1, 1}});
        }

    std::vector<std::pair<int, int>> free_cells;
    for (int j = 2; j < n; ++j)
        for (int i = 1; i < j; ++i) free_cells.push_back({i, j});

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == free_cells.size()) {
            if (is_hive(h)) out.push_back(h);
            return;
        }
        auto [ci, cj] = free_cells[idx];
        bool bounded_below = false, bounded_above = false;
        long long lo = 0, hi = 0;
        for (const auto& inst : instances) {
            long long rest = 0;
            int self_sign = 0;
            bool usable = true;
            for (int k = 0; k < 4 && usable; ++k) {
                auto [i, j] = inst.cells[k];
                if (i == ci && j == cj) {
                    self_sign = inst.signs[k];
                } else if (assigned[j][i]) {
                    rest += inst.signs[k] * h.at(i, j);
                } else {
                    usable = false;
                }
            }
            if (!usable || self_sign == 0) continue;
            if (self_sign > 0) {
                long long b = -rest;
                if (!bounded_below || b > lo) lo = b, bounded_below = true;
            } else {
                long long b = rest;
                if (!bounded_above || b < hi) hi = b, bounded_above = true;
            }
        }
        if (!bounded_below || !bounded_above) fail("interior hive cell is unbounded");
        for (long long v = lo; v <= hi; ++v) {
            set_cell(ci, cj, v);
            self(self, idx + 1);
        }
        assigned[cj][ci] = false;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline Int lr_triangle(const LRQuery& q) {
    Int acc = 0;
    for (const auto& t : enumerate_triangles(q.lambda, q.mu, q.nu))
        acc += parity_sign(q_triangle(t));
    return parity_sign(N_count(q.mu) + N_count(q.lambda)) * acc;
}

inline Int lr_hive(const LRQuery& q) {
    Int acc = 0;
    for (const auto& h : enumerate_hives(q.lambda, q.mu, q.nu))
        acc += parity_sign(q_hive(h));
    return parity_sign(N_count(q.mu) + N_count(q.lambda)) * acc;
}

} // namespace oddschur
