#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibindex/counting.hpp"
#include "fibindex/generators.hpp"
#include "test_support.hpp"

using namespace fibindex;
using test_support::make;

namespace {

BigCount fib(const Graph& g) { return fibonacci_index(g); }

BigCount pow2(int k) {
    BigCount r = 1;
    return r << k;
}

}  // namespace

TEST_CASE("known values") {
    CHECK(fib(Graph()) == 1);
    CHECK(fib(Graph(1)) == 2);
    CHECK(fib(generate({Family::complete, 5, 0})) == 6);
    CHECK(fib(generate({Family::star, 7, 0})) == 65);
    CHECK(fib(generate({Family::path, 4, 0})) == 8);
    CHECK(fib(generate({Family::path, 10, 0})) == 144);
    CHECK(fib(generate({Family::cycle, 5, 0})) == 11);
    CHECK(fib(generate({Family::turan, 7, 3})) == 36);
    CHECK(fib(generate({Family::turan_connected, 7, 3})) == 31);
    CHECK(fib(generate({Family::turan_connected, 6, 3})) == 22);
    CHECK(fib(generate({Family::turan_connected, 4, 2})) == 8);
    CHECK(fib(generate({Family::turan_connected, 5, 2})) == 11);
    CHECK(fib(generate({Family::complete_split, 7, 3})) == 12);
}

TEST_CASE("closed forms for the classical families") {
    for (int n = 1; n <= 20; ++n) {
        CHECK(fib(generate({Family::complete, n, 0})) == n + 1);
        CHECK(fib(generate({Family::empty_complement, n, 0})) == pow2(n));
        CHECK(fib(generate({Family::star, n, 0})) == pow2(n - 1) + 1);
        CHECK(fib(generate({Family::path, n, 0})) == fibonacci_of_path_closed(n));
    }
    // Fibonacci numbers themselves: F(P_n) = f_{n+2}
    CHECK(fibonacci_of_path_closed(0) == 1);
    CHECK(fibonacci_of_path_closed(1) == 2);
    CHECK(fibonacci_of_path_closed(2) == 3);
    CHECK(fibonacci_of_path_closed(3) == 5);
    CHECK(fibonacci_of_path_closed(10) == 144);
    CHECK(fibonacci_of_path_closed(50) == BigCount("32951280099"));
}

TEST_CASE("matches the subset-scan oracle") {
    // every labeled graph on 5 vertices
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
        const Graph g = Graph::from_edge_mask(5, mask);
        CHECK(fib(g) == fibonacci_index_naive(g));
    }
    // seeded random instances at mixed densities
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const double p = (rep % 3 == 0) ? 0.15 : (rep % 3 == 1) ? 0.5 : 0.85;
        const Graph g = random_graph(n, p, rng());
        CHECK(fib(g) == fibonacci_index_naive(g));
    }
}

TEST_CASE("naive oracle capability cap") {
    CHECK_THROWS_AS(fibonacci_index_naive(Graph(26)), capability_error);
    CHECK(fibonacci_index_naive(Graph(20)) == pow2(20));
}

TEST_CASE("multiplicative over components") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 25; ++rep) {
        const Graph a = random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng());
        const Graph b = random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng());
        CHECK(fib(disjoint_union(a, b)) == fib(a) * fib(b));
    }
    const Graph k3 = generate({Family::complete, 3, 0});
    CHECK(fib(disjoint_union(disjoint_union(k3, k3), k3)) == 64);
}

TEST_CASE("vertex deletion identity") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 30; ++rep) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Graph g = random_graph(n, 0.4, rng());
        const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        CHECK(fib(g) == fib(delete_vertex(g, v)) + fib(delete_closed_neighborhood(g, v)));
    }
}

TEST_CASE("deleting an edge strictly increases the count") {
    std::mt19937_64 rng(17);
    int seen = 0;
    while (seen < 25) {
        const Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.5, rng());
        if (g.size() == 0) continue;
        ++seen;
        const auto es = g.edges();
        const auto& [u, v] = es[rng() % es.size()];
        CHECK(fib(delete_edge(g, u, v)) > fib(g));
    }
}

TEST_CASE("invariant under relabeling") {
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = random_graph(9, 0.5, rng());
        CHECK(fib(permuted(g, test_support::random_permutation(9, rng))) == fib(g));
    }
}

TEST_CASE("large sparse instances stay exact") {
    CHECK(fib(Graph(64)) == BigCount("18446744073709551616"));
    const Graph p40 = generate({Family::path, 40, 0});
    CHECK(fib(p40) == fibonacci_of_path_closed(40));
    const Graph g = random_graph(40, 0.1, 21);
    CHECK(fib(g) > 0);
    CHECK(fib(g) == fib(g));
}

TEST_CASE("stats reporting is deterministic") {
    const Graph g = random_graph(18, 0.3, 5);
    CountStats s1{}, s2{};
    const BigCount a = fibonacci_index(g, s1);
    const BigCount b = fibonacci_index(g, s2);
    CHECK(a == b);
    CHECK(s1.branch_nodes == s2.branch_nodes);
    CHECK(s1.memo_hits == s2.memo_hits);
    CHECK(s1.branch_nodes > 0);
    CHECK(s1.elapsed_seconds >= 0.0);
}
