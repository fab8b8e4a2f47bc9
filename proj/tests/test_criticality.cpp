#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fibindex/criticality.hpp"
#include "fibindex/generators.hpp"
#include "test_support.hpp"

using namespace fibindex;
using test_support::make;

namespace {

Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
        es.emplace_back(i, 5 + i);
    }
    return Graph::from_edges(10, es);
}

}  // namespace

TEST_CASE("stability numbers") {
    CHECK(stability_number(Graph()) == 0);
    CHECK(stability_number(Graph(1)) == 1);
    CHECK(stability_number(Graph(6)) == 6);
    CHECK(stability_number(generate({Family::complete, 7, 0})) == 1);
    CHECK(stability_number(generate({Family::cycle, 5, 0})) == 2);
    CHECK(stability_number(generate({Family::star, 7, 0})) == 6);
    CHECK(stability_number(petersen()) == 4);
    for (int n = 1; n <= 12; ++n)
        CHECK(stability_number(generate({Family::path, n, 0})) == (n + 1) / 2);
}

TEST_CASE("matches the subset-scan oracle") {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 60; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const Graph g = random_graph(n, 0.2 + 0.1 * (rep % 7), rng());
        CHECK(stability_number(g) == test_support::naive_alpha(g));
    }
}

TEST_CASE("edge criticality on the path") {
    const Graph p4 = generate({Family::path, 4, 0});
    CHECK(is_alpha_critical_edge(p4, 0, 1));
    CHECK(is_alpha_critical_edge(p4, 2, 3));
    CHECK_FALSE(is_alpha_critical_edge(p4, 1, 2));
    CHECK_FALSE(is_alpha_critical_graph(p4));
    CHECK_THROWS_AS(is_alpha_critical_edge(p4, 0, 2), std::invalid_argument);
}

TEST_CASE("critical families") {
    CHECK(is_alpha_critical_graph(Graph()));
    CHECK(is_alpha_critical_graph(Graph(4)));  // vacuous
    CHECK(is_alpha_critical_graph(generate({Family::cycle, 5, 0})));
    CHECK(is_alpha_critical_graph(generate({Family::cycle, 7, 0})));
    CHECK_FALSE(is_alpha_critical_graph(generate({Family::cycle, 4, 0})));
    CHECK_FALSE(is_alpha_critical_graph(generate({Family::cycle, 6, 0})));
    for (int n = 1; n <= 9; ++n) CHECK(is_alpha_critical_graph(generate({Family::complete, n, 0})));
    for (int n = 2; n <= 9; ++n)
        for (int alpha = 1; alpha <= n; ++alpha)
            CHECK(is_alpha_critical_graph(generate({Family::turan, n, alpha})));
    for (int n = 3; n <= 9; ++n) CHECK_FALSE(is_alpha_critical_graph(generate({Family::star, n, 0})));
}

TEST_CASE("hub edges of the connected extremal family are safe, the rest are not") {
    for (int n = 4; n <= 9; ++n)
        for (int alpha = 2; alpha <= n - 2; ++alpha) {
            const Graph tc = generate({Family::turan_connected, n, alpha});
            CHECK_FALSE(is_alpha_critical_graph(tc));
            for (const auto& [u, v] : turan_connected_bridges(n, alpha)) {
                CHECK(is_bridge(tc, u, v));
                CHECK_FALSE(is_alpha_critical_edge(tc, u, v));
            }
        }
    const Graph tc73 = generate({Family::turan_connected, 7, 3});
    CHECK(is_alpha_critical_edge(tc73, 3, 4));  // pendant-block edge: a bridge, yet critical
    CHECK(is_alpha_critical_edge(tc73, 0, 1));  // clique edge
}

TEST_CASE("decomposition of a short path") {
    const auto d = find_alpha_critical_decomposition(generate({Family::path, 3, 0}));
    REQUIRE(d.has_value());
    CHECK(d->g1 == Graph(1));
    CHECK(d->v1 == 0);
    CHECK(d->g2 == make(2, {{0, 1}}));
    CHECK(d->v2 == 0);
    CHECK(d->bridge == std::pair<int, int>{0, 1});
    CHECK(d->g1_alpha_critical);
}

TEST_CASE("decomposition splits off a pendant block") {
    const auto d = find_alpha_critical_decomposition(generate({Family::turan_connected, 7, 3}));
    REQUIRE(d.has_value());
    CHECK(d->bridge == std::pair<int, int>{0, 3});
    CHECK(d->g1 == make(2, {{0, 1}}));
    CHECK(d->v1 == 0);
    CHECK(d->g2 == generate({Family::turan_connected, 5, 2}));
    CHECK(d->v2 == 0);
    CHECK(d->g1_alpha_critical);
}

TEST_CASE("decomposition of the middle of an even path") {
    const auto d = find_alpha_critical_decomposition(generate({Family::path, 4, 0}));
    REQUIRE(d.has_value());
    CHECK(d->bridge == std::pair<int, int>{1, 2});
    CHECK(d->g1 == make(2, {{0, 1}}));
    CHECK(d->v1 == 1);
    CHECK(d->g2 == make(2, {{0, 1}}));
    CHECK(d->v2 == 0);
}

TEST_CASE("graphs without a safe bridge have no decomposition") {
    CHECK_FALSE(find_alpha_critical_decomposition(generate({Family::cycle, 5, 0})).has_value());
    CHECK_FALSE(find_alpha_critical_decomposition(make(2, {{0, 1}})).has_value());
    CHECK_FALSE(find_alpha_critical_decomposition(generate({Family::complete, 5, 0})).has_value());
    CHECK_THROWS_AS(find_alpha_critical_decomposition(Graph(3)), std::invalid_argument);
}

TEST_CASE("decomposition invariants hold wherever one exists") {
    std::mt19937_64 rng(29);
    int found = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const Graph g = random_graph(2 + static_cast<int>(rng() % 8), 0.3, rng());
        if (!is_connected(g)) continue;
        const auto d = find_alpha_critical_decomposition(g);
        if (!d) continue;
        ++found;
        CHECK(d->g1.order() + d->g2.order() == g.order());
        CHECK(d->g1.order() <= d->g2.order());
        CHECK(is_bridge(g, d->bridge.first, d->bridge.second));
        CHECK(stability_number(d->g1) + stability_number(d->g2) == stability_number(g));
        CHECK_FALSE(is_alpha_critical_edge(g, d->bridge.first, d->bridge.second));
    }
    CHECK(found > 10);
}

TEST_CASE("vertex identities on critical graphs") {
    const Graph c5 = generate({Family::cycle, 5, 0});
    for (int v = 0; v < 5; ++v) CHECK(check_critical_vertex_identities(c5, v));
    const Graph k4 = generate({Family::complete, 4, 0});
    for (int v = 0; v < 4; ++v) CHECK(check_critical_vertex_identities(k4, v));

    CHECK_THROWS_AS(check_critical_vertex_identities(generate({Family::path, 4, 0}), 0),
                    std::invalid_argument);  // not critical
    const Graph with_isolated = make(3, {{0, 1}});
    CHECK(is_alpha_critical_graph(with_isolated));
    CHECK_THROWS_AS(check_critical_vertex_identities(with_isolated, 2),
                    std::invalid_argument);  // isolated vertex
    CHECK(check_critical_vertex_identities(with_isolated, 0));
}

TEST_CASE("connected critical graphs stay connected under vertex deletion") {
    CHECK(check_critical_connectivity(generate({Family::cycle, 5, 0})));
    CHECK(check_critical_connectivity(generate({Family::complete, 6, 0})));
    CHECK(check_critical_connectivity(Graph(1)));
    CHECK_THROWS_AS(check_critical_connectivity(generate({Family::path, 4, 0})),
                    std::invalid_argument);  // not critical
    CHECK_THROWS_AS(check_critical_connectivity(Graph(3)), std::invalid_argument);  // disconnected
}

TEST_CASE("identities and connectivity across every small critical graph") {
    // scan all labeled graphs on 5 vertices
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
        const Graph g = Graph::from_edge_mask(5, mask);
        if (!is_alpha_critical_graph(g)) continue;
        for (int v = 0; v < 5; ++v)
            if (g.degree(v) > 0) CHECK(check_critical_vertex_identities(g, v));
        if (is_connected(g)) CHECK(check_critical_connectivity(g));
    }
}
