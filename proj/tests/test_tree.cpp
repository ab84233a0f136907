#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "wiener/errors.hpp"
#include "wiener/tree.hpp"

using namespace wiener;

namespace {

Tree path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Tree(n, std::move(e));
}

Tree star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Tree(n, std::move(e));
}

} // namespace

TEST_CASE("wiener values of small named trees") {
    CHECK(wiener_pairwise(path(2)) == 1);
    CHECK(wiener_pairwise(path(3)) == 4);
    CHECK(wiener_pairwise(path(4)) == 10);
    CHECK(wiener_pairwise(star(4)) == 9);
    // path: n(n^2-1)/6, star: (n-1)^2
    CHECK(wiener_edgecut(path(10)) == 10 * 99 / 6);
    CHECK(wiener_edgecut(star(10)) == 81);
    CHECK(wiener_pairwise(Tree(1, {})) == 0);
    CHECK(wiener_edgecut(Tree(1, {})) == 0);
}

TEST_CASE("the two wiener implementations agree on random trees") {
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 60; ++it) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 120);
        Tree t = random_tree(n, rng);
        CHECK(wiener_pairwise(t) == wiener_edgecut(t));
    }
}

TEST_CASE("tree constructor rejects non-trees") {
    CHECK_THROWS_AS(Tree(3, {{0, 1}}), InvalidTreeError);          // too few
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {0, 1}}), InvalidTreeError); // duplicate
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 1}}), InvalidTreeError); // self loop
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {0, 3}}), InvalidTreeError); // range
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 0}, {2, 3}}), InvalidTreeError);
}

TEST_CASE("tree file io round-trips and rejects junk") {
    std::ostringstream out;
    write_tree(out, path(4));
    std::istringstream in(out.str());
    Tree t = read_tree(in);
    CHECK(t.n() == 4);
    CHECK(wiener_pairwise(t) == 10);

    std::istringstream bad1("3\n0 1\n");
    CHECK_THROWS_AS(read_tree(bad1), InputError);
    std::istringstream bad2("3\n0 1\n1 2\nextra\n");
    CHECK_THROWS_AS(read_tree(bad2), InputError);
    std::istringstream bad3("2\n0 5\n");
    CHECK_THROWS_AS(read_tree(bad3), InputError);
    std::istringstream bad4("nope\n");
    CHECK_THROWS_AS(read_tree(bad4), InputError);
    std::istringstream bad5("4\n0 1\n1 2\n0 2\n");
    CHECK_THROWS_AS(read_tree(bad5), InvalidTreeError); // cycle + disconnected
}

TEST_CASE("pruefer decoding hits known trees") {
    // code of all zeros is the star centered at 0
    std::vector<int> code{0, 0};
    Tree t = decode_pruefer(code, 4);
    auto deg = t.degrees();
    CHECK(deg[0] == 3);
    CHECK(wiener_pairwise(t) == 9);

    CHECK(decode_pruefer({}, 2).n() == 2);
    CHECK_THROWS_AS(decode_pruefer(code, 3), InputError); // wrong length
    std::vector<int> bad{5};
    CHECK_THROWS_AS(decode_pruefer(bad, 3), InputError);
}

TEST_CASE("pruefer codes cover all distinct labeled trees") {
    // 16 codes on n=4 decode to 16 distinct edge sets (Cayley: 4^2)
    std::set<std::vector<std::pair<int, int>>> seen;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            std::vector<int> code{a, b};
            Tree t = decode_pruefer(code, 4);
            auto e = t.edges();
            for (auto& [u, v] : e)
                if (u > v) std::swap(u, v);
            std::sort(e.begin(), e.end());
            seen.insert(e);
        }
    CHECK(seen.size() == 16);
}

TEST_CASE("caterpillar recognition") {
    CHECK(is_caterpillar(path(7)));
    CHECK(is_caterpillar(star(7)));
    CHECK(is_caterpillar(Tree(2, {{0, 1}})));
    // spider with three legs of length 2 is the smallest non-caterpillar
    Tree spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK_FALSE(is_caterpillar(spider));
}
