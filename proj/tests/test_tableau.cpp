#include <catch2/catch_amalgamated.hpp>

#include "oddschur/tableau.hpp"

using namespace oddschur;

namespace {

// Oracle: word inversions among distinct letters, counted by a double loop.
long long word_inversions(const Word& w) {
    long long inv = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

// Oracle: classical Kostka number by peeling horizontal strips off the top of
// the content, independent of the backtracking filler.
long long kostka_classical(const Partition& shape, std::vector<int> content) {
    while (!content.empty() && content.back() == 0) content.pop_back();
    if (content.empty()) return shape.empty() ? 1 : 0;
    int last = content.back();
    content.pop_back();
    long long total = 0;
    // Enumerate inner shapes eta with shape/eta a horizontal strip of size `last`.
    std::vector<int> eta(shape.parts);
    std::function<void(int, int)> rec = [&](int row, int removed) {
        if (row > shape.length()) {
            if (removed == last) {
                std::vector<int> clean(eta);
                total += kostka_classical(Partition(clean), content);
            }
            return;
        }
        int lo = (row < shape.length()) ? shape.row(row + 1) : 0; // keep eta a partition
        int hi = shape.row(row);
        for (int keep = lo; keep <= hi; ++keep) {
            int cut = hi - keep;
            if (removed + cut > last) continue;
            // horizontal strip: at most one removed box per column, i.e. eta_row >= shape_{row+1}
            eta[row - 1] = keep;
            rec(row + 1, removed + cut);
            eta[row - 1] = hi;
        }
    };
    rec(1, 0);
    return total;
}

// Oracle: skew fillings by unpruned brute force over all entry assignments.
long long skew_fillings_bruteforce(const SkewShape& shape, const std::vector<int>& content) {
    auto cells = boxes_of(shape);
    long long total = 0;
    std::vector<int> entries(cells.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == cells.size()) {
            std::vector<int> counts(content.size(), 0);
            for (size_t t = 0; t < cells.size(); ++t) {
                ++counts[entries[t] - 1];
                for (size_t u = 0; u < cells.size(); ++u) {
                    if (cells[u].row == cells[t].row && cells[u].col == cells[t].col - 1 &&
                        entries[u] > entries[t])
                        return;
                    if (cells[u].col == cells[t].col && cells[u].row == cells[t].row - 1 &&
                        entries[u] >= entries[t])
                        return;
                }
            }
            if (std::vector<int>(counts) == content) ++total;
            return;
        }
        for (int e = 1; e <= static_cast<int>(content.size()); ++e) {
            entries[i] = e;
            rec(i + 1);
        }
    };
    rec(0);
    return total;
}

const Tableau worked_T({{1, 1, 2, 2}, {2, 3, 3, 4}, {3, 4, 4}, {5, 6}});

} // namespace

TEST_CASE("boxterpretation counts on the worked tableau", "[tableau]") {
    REQUIRE(decorated_count(worked_T, {Direction::dN, std::nullopt}) == 16);
    REQUIRE(decorated_count(worked_T, {Direction::E, EntryCmp::Gt}) == 28);
    REQUIRE(decorated_count(worked_T, {Direction::sW, std::nullopt}) == 47);
}

TEST_CASE("tableau signs from the worked examples", "[tableau]") {
    REQUIRE(tableau_sign(Tableau({{1, 1, 2}, {2, 3}})) == -1);
    REQUIRE(tableau_sign(super_tableau(Partition{2, 1})) == 1);
    REQUIRE(tableau_sign(super_tableau(Partition{3, 1, 1})) == -1);
}

TEST_CASE("tableau sign equals the row-word inversion sign", "[tableau]") {
    for (const auto& shape : {Partition{3, 2}, Partition{2, 2, 1}, Partition{4, 1}})
        for (const auto& t : enumerate_ssyt(shape, 4))
            REQUIRE(tableau_sign(t) == parity_sign(word_inversions(row_word(t))));
    // sign(T_lambda) = (-1)^{N(lambda)}
    for (int k = 0; k <= 7; ++k)
        for (const auto& p : enumerate_partitions(k))
            REQUIRE(tableau_sign(super_tableau(p)) == parity_sign(N_count(p)));
}

TEST_CASE("row word and reconstruction", "[tableau]") {
    REQUIRE(row_word(Tableau({{1, 1, 2}, {2, 3}})) == Word{2, 3, 1, 1, 2});

    Word w{5, 3, 4, 2, 2, 3, 3, 1, 1, 1, 2};
    Tableau t = word_to_tableau_reading(w);
    REQUIRE(t == Tableau({{1, 1, 1, 2}, {2, 2, 3, 3}, {3, 4}, {5}}));
    REQUIRE(row_word(t) == w);

    for (const auto& shape : {Partition{3, 2, 1}, Partition{2, 2}, Partition{4}})
        for (const auto& t2 : enumerate_ssyt(shape, 4))
            REQUIRE(word_to_tableau_reading(row_word(t2)) == t2);

    REQUIRE_THROWS(word_to_tableau_reading(Word{2, 2, 1}));   // run lengths decrease
    REQUIRE_THROWS(word_to_tableau_reading(Word{1, 2, 1, 2})); // column not strict
    REQUIRE(word_to_tableau_reading(Word{}) == Tableau{});
}

TEST_CASE("ssyt enumeration matches the classical Kostka oracle", "[tableau]") {
    for (int k = 1; k <= 6; ++k)
        for (const auto& shape : enumerate_partitions(k))
            for (const auto& mu : enumerate_partitions(k)) {
                auto got = enumerate_ssyt(shape, mu.parts, mu.length());
                REQUIRE(static_cast<long long>(got.size()) ==
                        kostka_classical(shape, mu.parts));
                for (const auto& t : got) {
                    REQUIRE(t.shape() == shape);
                    REQUIRE(content_of(t) == mu.parts);
                }
            }
    REQUIRE(enumerate_ssyt(Partition{2, 1}, {1, 1, 1}, 3).size() == 2);
}

TEST_CASE("ssyt enumeration without content and dimension counts", "[tableau]") {
    // #SSYT((2,1), entries <= 3) = 8, the GL_3 adjoint dimension.
    REQUIRE(enumerate_ssyt(Partition{2, 1}, 3).size() == 8);
    REQUIRE(enumerate_ssyt(Partition{1, 1, 1, 1}, 3).empty()); // too tall
    auto all = enumerate_ssyt(Partition{2, 1}, 3);
    for (size_t i = 1; i < all.size(); ++i) REQUIRE(all[i - 1] < all[i]);
    // Splitting by content recovers the full enumeration.
    size_t by_content = 0;
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                if (a + b + c == 3)
                    by_content += enumerate_ssyt(Partition{2, 1}, {a, b, c}, 3).size();
    REQUIRE(by_content == all.size());
}

TEST_CASE("skew enumeration matches brute force", "[tableau]") {
    SkewShape s1(Partition{3, 2, 1}, Partition{2, 1});
    REQUIRE(static_cast<long long>(enumerate_skew_ssyt(s1, {2, 1}).size()) ==
            skew_fillings_bruteforce(s1, {2, 1}));
    SkewShape s2(Partition{3, 3, 1}, Partition{1});
    for (std::vector<int> content : {std::vector<int>{3, 3}, {2, 2, 2}, {4, 1, 1}})
        REQUIRE(static_cast<long long>(enumerate_skew_ssyt(s2, content).size()) ==
                skew_fillings_bruteforce(s2, content));
    for (const auto& t : enumerate_skew_ssyt(s2, {2, 2, 2})) REQUIRE_NOTHROW(t.validate());
}

TEST_CASE("skew sign via the 0-completion", "[tableau]") {
    SkewTableau s(Partition{2, 1, 1},
                  {{0, 0, 1}, {0, 1, 2}, {0, 2}, {3}});
    REQUIRE(decorated_count(s, {Direction::N, EntryCmp::Lt}) == 18);
    REQUIRE(skew_sign(s) == 1);

    // Same single box and entry, different inner shape: opposite signs.
    SkewTableau below(Partition{1}, {{0}, {2}});
    SkewTableau beside(Partition{1}, {{0, 2}});
    REQUIRE(skew_sign(below) == -1);
    REQUIRE(skew_sign(beside) == 1);
}

TEST_CASE("yamanouchi words", "[tableau]") {
    REQUIRE(is_yamanouchi(Word{3, 1, 2, 2, 1, 1}));
    REQUIRE_FALSE(is_yamanouchi(Word{1, 2, 2, 1}));
    REQUIRE_FALSE(is_yamanouchi(Word{1, 1, 2}));
    REQUIRE(is_yamanouchi(Word{}));
    REQUIRE(is_yamanouchi(Word{1, 1, 1}));
    // Row words of super tableaux are Yamanouchi.
    for (const auto& p : enumerate_partitions(6))
        REQUIRE(is_yamanouchi(row_word(super_tableau(p))));
}

TEST_CASE("skew tableau storage validates", "[tableau]") {
    REQUIRE_THROWS(SkewTableau(Partition{1}, {{5}}));            // inner box must hold 0
    REQUIRE_THROWS(SkewTableau(Partition{1}, {{0, 1}, {1, 1}})); // column not strict
    REQUIRE_NOTHROW(SkewTableau(Partition{1}, {{0, 1}, {1}}));
    REQUIRE_THROWS(SkewTableau(Partition{1}, {{0, 1}, {2, 1}})); // row decreases
    REQUIRE_THROWS(SkewTableau(Partition{}, {{1, 1}, {1, 2}}));  // column not strict
    REQUIRE_THROWS(SkewTableau(Partition{3}, {{0, 0}, {1}}));    // inner exceeds outer row
}
