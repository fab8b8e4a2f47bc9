#pragma once

#include <optional>
#include <utility>

#include "fibindex/graph.hpp"

namespace fibindex {

// Stability number alpha(g).  Same branching scheme as the stable-set
// counter, with integer values.
int stability_number(const Graph& g);

// Edge uv is alpha-critical iff removing it raises the stability number.
bool is_alpha_critical_edge(const Graph& g, int u, int v);

// Every edge alpha-critical; edgeless graphs qualify vacuously.
bool is_alpha_critical_graph(const Graph& g);

// Split of a connected graph along an alpha-safe bridge uv into the two
// components of g - uv, each reindexed; v1/v2 are the new indices of the
// bridge endpoints.  alpha(g1) + alpha(g2) = alpha(g) by construction.
struct Decomposition {
    Graph g1;
    int v1 = 0;
    Graph g2;
    int v2 = 0;
    std::pair<int, int> bridge;  // endpoints in g's labeling, u < v
    bool g1_alpha_critical = false;
};

// Picks g1 as the smaller side (ties: lexicographically smaller structure,
// then smaller bridge endpoints) and the overall candidate the same way, so
// the result is deterministic.  Empty when g has no alpha-safe bridge.
// Requires g connected.
std::optional<Decomposition> find_alpha_critical_decomposition(const Graph& g);

// alpha(g - v) = alpha(g) and alpha(g - N[v]) = alpha(g) - 1.
// Requires g alpha-critical and v not isolated.
bool check_critical_vertex_identities(const Graph& g, int v);

// g - v stays connected for every vertex.  Requires g connected and
// alpha-critical.  Deleting down to the 0-vertex graph counts as connected.
bool check_critical_connectivity(const Graph& g);

}  // namespace fibindex
