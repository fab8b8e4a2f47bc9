#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibindex/canonical.hpp"
#include "fibindex/criticality.hpp"
#include "fibindex/generators.hpp"
#include "test_support.hpp"

using namespace fibindex;
using test_support::make;

TEST_CASE("fixed labelings") {
    CHECK(generate({Family::path, 4, 0}) == make(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(generate({Family::cycle, 4, 0}) == make(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
    CHECK(generate({Family::star, 4, 0}) == make(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(generate({Family::complete, 3, 0}) == make(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(generate({Family::empty_complement, 3, 0}) == Graph(3));
    CHECK(generate({Family::path, 1, 0}) == Graph(1));

    // T(7,3): blocks {0,1,2}, {3,4}, {5,6}
    CHECK(generate({Family::turan, 7, 3}) ==
          make(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {5, 6}}));
    // TC(7,3) adds the hub edges 0-3, 0-5
    CHECK(generate({Family::turan_connected, 7, 3}) ==
          make(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {5, 6}, {0, 3}, {0, 5}}));
    // CS(7,3): stable 0..2, clique 3..6, full join
    const Graph cs = generate({Family::complete_split, 7, 3});
    CHECK(cs.size() == 6 + 12);
    CHECK(cs.neighbors(0) == 0b1111000);
    CHECK(cs.neighbors(3) == 0b1110111);
}

TEST_CASE("turan blocks") {
    CHECK(turan_blocks(7, 3) ==
          std::vector<std::pair<int, int>>{{0, 3}, {3, 2}, {5, 2}});
    CHECK(turan_blocks(5, 5) ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(turan_blocks(6, 1) == std::vector<std::pair<int, int>>{{0, 6}});
}

TEST_CASE("turan-connected hub edges are cut edges and exactly alpha-1 of them") {
    CHECK(turan_connected_bridges(7, 3) ==
          std::vector<std::pair<int, int>>{{0, 3}, {0, 5}});
    for (int n = 3; n <= 10; ++n)
        for (int alpha = 2; alpha <= n - 1; ++alpha) {
            const Graph tc = generate({Family::turan_connected, n, alpha});
            const auto hub = turan_connected_bridges(n, alpha);
            CHECK(static_cast<int>(hub.size()) == alpha - 1);
            for (const auto& [u, v] : hub) CHECK(is_bridge(tc, u, v));
        }
}

TEST_CASE("stability numbers across the grid") {
    for (int n = 1; n <= 12; ++n)
        for (int alpha = 1; alpha <= n; ++alpha) {
            CHECK(stability_number(generate({Family::turan, n, alpha})) == alpha);
            CHECK(stability_number(generate({Family::complete_split, n, alpha})) == alpha);
            if (alpha <= n - 1)
                CHECK(stability_number(generate({Family::turan_connected, n, alpha})) == alpha);
        }
}

TEST_CASE("spec string parsing") {
    const FamilySpec t = parse_family_spec("turan:n=7,alpha=3");
    CHECK(t.family == Family::turan);
    CHECK(t.n == 7);
    CHECK(t.alpha == 3);
    const FamilySpec p = parse_family_spec("path:n=10");
    CHECK(p.family == Family::path);
    CHECK(p.n == 10);
    CHECK(parse_family_spec("empty-complement:n=0").n == 0);
    CHECK(parse_family_spec("turan-connected:alpha=2,n=5").alpha == 2);

    CHECK_THROWS_AS(parse_family_spec("hypercube:n=3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("path"), std::invalid_argument);          // missing n
    CHECK_THROWS_AS(parse_family_spec("turan:n=7"), std::invalid_argument);     // missing alpha
    CHECK_THROWS_AS(parse_family_spec("path:n=5,k=2"), std::invalid_argument);  // unknown key
    CHECK_THROWS_AS(parse_family_spec("path:n=5,n=6"), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(parse_family_spec("path:n=x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("path:n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("path:n=-3"), std::invalid_argument);
}

TEST_CASE("parameter validation names the constraint") {
    CHECK_THROWS_WITH_AS(generate({Family::turan_connected, 7, 7}),
                         "turan-connected requires 1 <= alpha <= n-1 (got n=7, alpha=7)",
                         std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::turan, 5, 6}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::turan, 5, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::cycle, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::path, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::complete_split, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::star, 65, 0}), std::invalid_argument);
    CHECK_NOTHROW(generate({Family::complete, 0, 0}));
}

TEST_CASE("cross-family identities by canonical form") {
    for (int n = 3; n <= 8; ++n) CHECK(family_identities_check(n));
    CHECK_THROWS_AS(family_identities_check(2), std::invalid_argument);
    CHECK_THROWS_AS(family_identities_check(11), capability_error);
}

TEST_CASE("generation is deterministic") {
    for (int n = 1; n <= 9; ++n) {
        CHECK(generate({Family::turan, n, (n + 1) / 2}) ==
              generate({Family::turan, n, (n + 1) / 2}));
        CHECK(generate({Family::star, n, 0}) == generate({Family::star, n, 0}));
    }
}

TEST_CASE("seeded random graphs") {
    const Graph a = random_graph(14, 0.37, 99);
    const Graph b = random_graph(14, 0.37, 99);
    CHECK(a == b);
    CHECK(random_graph(14, 0.37, 100) != a);
    CHECK(random_graph(10, 0.0, 5) == Graph(10));
    CHECK(random_graph(5, 1.0, 5) == generate({Family::complete, 5, 0}));
    CHECK(random_graph(0, 0.5, 1) == Graph());
    CHECK_NOTHROW(random_graph(64, 0.5, 123));
    CHECK_THROWS_AS(random_graph(5, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_graph(5, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_graph(65, 0.5, 1), std::invalid_argument);

    // density tracks p on average
    int edges = 0;
    for (std::uint64_t s = 0; s < 20; ++s) edges += random_graph(20, 0.3, 1000 + s).size();
    const double mean = edges / 20.0;
    CHECK(mean > 0.2 * 190);
    CHECK(mean < 0.4 * 190);
}

TEST_CASE("family names") {
    CHECK(family_name(Family::turan_connected) == "turan-connected");
    CHECK(family_name(Family::empty_complement) == "empty-complement");
}
