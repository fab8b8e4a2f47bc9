#include "fibindex/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace fibindex {

namespace {

int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

int pair_count(int n) { return n * (n - 1) / 2; }

}  // namespace

parse_error::parse_error(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be between 0 and " +
                                    std::to_string(kMaxVertices) + " (got " +
                                    std::to_string(n) + ")");
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (g.adj_[u] & bit(v))
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        g.adj_[u] |= bit(v);
        g.adj_[v] |= bit(u);
        ++g.m_;
    }
    return g;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
    if (n < 0 || n > 11)
        throw std::invalid_argument("edge masks cover n <= 11 (got n=" + std::to_string(n) + ")");
    const int k = pair_count(n);
    if (k < 64 && (mask >> k) != 0)
        throw std::invalid_argument("edge mask has bits beyond pair " + std::to_string(k - 1));
    Graph g(n);
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (mask >> idx & 1) {
                g.adj_[i] |= bit(j);
                g.adj_[j] |= bit(i);
                ++g.m_;
            }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex index " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
}

std::uint64_t Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::uint64_t Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    return adj_[v] | bit(v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, std::popcount(adj_[v]));
    return d;
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::uint64_t Graph::edge_mask() const {
    if (n_ > 11)
        throw capability_error("edge masks cover n <= 11 (got n=" + std::to_string(n_) + ")");
    std::uint64_t mask = 0;
    int idx = 0;
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (adj_[i] >> j & 1) mask |= bit(idx);
    return mask;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (std::uint64_t m = adj_[u] & ~(bit(u) | (bit(u) - 1)); m; m &= m - 1)
            out.emplace_back(u, lowest_bit(m));
    return out;
}

Graph induced_subgraph(const Graph& g, std::uint64_t keep_mask) {
    if (keep_mask & ~g.vertex_mask())
        throw std::invalid_argument("induced subgraph mask has bits outside the vertex set");
    std::vector<std::pair<int, int>> kept_edges;
    int iu = 0;
    for (std::uint64_t mu = keep_mask; mu; mu &= mu - 1, ++iu) {
        const int u = lowest_bit(mu);
        for (std::uint64_t mv = g.neighbors(u) & keep_mask; mv; mv &= mv - 1) {
            const int v = lowest_bit(mv);
            if (v <= u) continue;
            kept_edges.emplace_back(iu, std::popcount(keep_mask & ((std::uint64_t{1} << v) - 1)));
        }
    }
    return Graph::from_edges(std::popcount(keep_mask), kept_edges);
}

Graph delete_vertex(const Graph& g, int v) {
    g.neighbors(v);  // range check
    return induced_subgraph(g, g.vertex_mask() & ~(std::uint64_t{1} << v));
}

Graph delete_closed_neighborhood(const Graph& g, int v) {
    return induced_subgraph(g, g.vertex_mask() & ~g.closed_neighborhood(v));
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not an edge");
    auto es = g.edges();
    std::erase(es, std::pair{std::min(u, v), std::max(u, v)});
    return Graph::from_edges(g.order(), es);
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation length does not match graph order");
    std::uint64_t seen = 0;
    for (int v : perm) {
        if (v < 0 || v >= n || (seen >> v & 1))
            throw std::invalid_argument("not a permutation of 0.." + std::to_string(n - 1));
        seen |= std::uint64_t{1} << v;
    }
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(perm[i], perm[j])) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int n = a.order() + b.order();
    if (n > kMaxVertices)
        throw std::invalid_argument("disjoint union exceeds " + std::to_string(kMaxVertices) +
                                    " vertices");
    auto es = a.edges();
    for (const auto& [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
    return Graph::from_edges(n, es);
}

std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t rest = g.vertex_mask();
    while (rest) {
        std::uint64_t comp = rest & (~rest + 1);
        for (;;) {
            std::uint64_t grown = comp;
            for (std::uint64_t m = comp; m; m &= m - 1) grown |= g.neighbors(lowest_bit(m));
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        rest &= ~comp;
    }
    return out;
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    for (std::uint64_t mask : component_masks(g)) out.push_back(induced_subgraph(g, mask));
    return out;
}

bool is_connected(const Graph& g) { return component_masks(g).size() == 1; }

bool is_tree(const Graph& g) { return is_connected(g) && g.size() == g.order() - 1; }

namespace {

// Lowpoint DFS; a tree edge is a bridge iff the child's lowpoint stays
// strictly below it.
struct BridgeSearch {
    const Graph& g;
    std::vector<int> disc, low;
    int timer = 0;
    std::vector<std::pair<int, int>> found;

    explicit BridgeSearch(const Graph& graph)
        : g(graph), disc(static_cast<std::size_t>(graph.order()), -1), low(disc) {}

    void run(int u, int parent) {
        disc[u] = low[u] = timer++;
        bool parent_skipped = false;
        for (std::uint64_t m = g.neighbors(u); m; m &= m - 1) {
            const int v = lowest_bit(m);
            if (v == parent && !parent_skipped) {
                parent_skipped = true;  // one parallel edge back at most: simple graph
                continue;
            }
            if (disc[v] < 0) {
                run(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] > disc[u]) found.push_back(std::minmax(u, v));
            } else {
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

std::vector<std::pair<int, int>> bridge_edges(const Graph& g) {
    BridgeSearch search(g);
    for (int v = 0; v < g.order(); ++v)
        if (search.disc[v] < 0) search.run(v, -1);
    std::sort(search.found.begin(), search.found.end());
    return search.found;
}

bool is_bridge(const Graph& g, int u, int v) {
    if (!is_connected(g)) throw std::invalid_argument("bridge test requires a connected graph");
    if (!g.has_edge(u, v))
        throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not an edge");
    const auto all = bridge_edges(g);
    return std::find(all.begin(), all.end(), std::pair{std::min(u, v), std::max(u, v)}) !=
           all.end();
}

namespace {

// "a b" with nothing else: ASCII digits, one separating space.
bool split_two_numbers(const std::string& line, long long& a, long long& b) {
    std::size_t pos = 0;
    auto digits = [&](long long& out) {
        if (pos >= line.size() || !std::isdigit(static_cast<unsigned char>(line[pos])))
            return false;
        long long v = 0;
        while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
            v = v * 10 + (line[pos] - '0');
            if (v > 1'000'000) return false;  // far beyond any valid vertex count
            ++pos;
        }
        out = v;
        return true;
    };
    if (!digits(a)) return false;
    if (pos >= line.size() || line[pos] != ' ') return false;
    ++pos;
    if (!digits(b)) return false;
    return pos == line.size();
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 1;
    if (!std::getline(in, line)) throw parse_error(1, "missing header line \"n m\"");
    long long n = 0, m = 0;
    if (!split_two_numbers(line, n, m))
        throw parse_error(1, "header must be \"n m\" with single-space separated decimals");
    if (n > kMaxVertices)
        throw parse_error(1, "vertex count " + std::to_string(n) + " exceeds supported maximum " +
                                 std::to_string(kMaxVertices));
    if (m > n * (n - 1) / 2)
        throw parse_error(1, "edge count " + std::to_string(m) + " exceeds n(n-1)/2");

    Graph g(static_cast<int>(n));
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<std::size_t>(m));
    std::vector<std::uint64_t> seen(static_cast<std::size_t>(n), 0);
    for (long long i = 0; i < m; ++i) {
        ++lineno;
        if (!std::getline(in, line))
            throw parse_error(lineno, "expected " + std::to_string(m) + " edge lines, found " +
                                          std::to_string(i));
        long long u = 0, v = 0;
        if (!split_two_numbers(line, u, v))
            throw parse_error(lineno, "edge line must be \"u v\" with one separating space");
        if (u == v) throw parse_error(lineno, "self-loop at vertex " + std::to_string(u));
        if (u > v) throw parse_error(lineno, "edge endpoints must satisfy u < v");
        if (v >= n)
            throw parse_error(lineno, "vertex " + std::to_string(v) + " out of range for n=" +
                                          std::to_string(n));
        if (seen[static_cast<std::size_t>(u)] >> v & 1)
            throw parse_error(lineno, "duplicate edge (" + std::to_string(u) + "," +
                                          std::to_string(v) + ")");
        seen[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (std::getline(in, line)) throw parse_error(lineno + 1, "unexpected content after final edge");
    return Graph::from_edges(static_cast<int>(n), es);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace fibindex
