#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fibindex {

// Hard cap imposed by the 64-bit adjacency rows.
inline constexpr int kMaxVertices = 64;

// An exact routine was asked to exceed its supported range.
class capability_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge-list syntax or validity error; line() is 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
// One adjacency bit-row per vertex; symmetry and the absence of
// self-loops hold by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);  // edgeless

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // mask bit k <-> pair k in column-major order (0,1),(0,2),(1,2),(0,3),...
    // Requires n <= 11 so all C(n,2) pair bits fit in one word.
    static Graph from_edge_mask(int n, std::uint64_t mask);

    int order() const { return n_; }
    int size() const { return m_; }

    bool has_edge(int u, int v) const;
    std::uint64_t neighbors(int v) const;
    std::uint64_t closed_neighborhood(int v) const;
    int degree(int v) const;
    int max_degree() const;  // 0 when n == 0

    std::uint64_t vertex_mask() const;
    std::uint64_t edge_mask() const;  // inverse of from_edge_mask, same n <= 11 bound
    std::vector<std::pair<int, int>> edges() const;  // (u,v) with u < v, lexicographic

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Subgraph induced by the vertices in keep_mask; surviving vertices are
// reindexed to 0..k-1 preserving their relative order.
Graph induced_subgraph(const Graph& g, std::uint64_t keep_mask);

Graph delete_vertex(const Graph& g, int v);
Graph delete_closed_neighborhood(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);

// Vertex i of the result is vertex perm[i] of g.
Graph permuted(const Graph& g, const std::vector<int>& perm);

// b's vertices are shifted up by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Component vertex sets, ordered by smallest member index.
std::vector<std::uint64_t> component_masks(const Graph& g);
std::vector<Graph> connected_components(const Graph& g);

// The 0-vertex graph has zero components and counts as not connected.
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// All bridges, normalized (u < v) and sorted.  Works per component.
std::vector<std::pair<int, int>> bridge_edges(const Graph& g);

// Requires g connected and uv an edge.
bool is_bridge(const Graph& g, int u, int v);

// Exact text format: line "n m", then m lines "u v" with 0 <= u < v < n,
// ASCII decimal, single spaces, LF endings, nothing else.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

}  // namespace fibindex
