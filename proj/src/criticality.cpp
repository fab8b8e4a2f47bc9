#include "fibindex/criticality.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "fibindex/canonical.hpp"

namespace fibindex {

namespace {

int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }

// Same branching scheme as the stable-set counter, integer-valued:
// alpha = max(alpha(G - v), 1 + alpha(G - N[v])) on a max-degree pivot.
struct AlphaSolver {
    const Graph& g;
    std::unordered_map<std::uint64_t, int> memo;

    int alpha_set(std::uint64_t mask) {
        int total = 0;
        std::uint64_t rest = mask;
        while (rest) {
            std::uint64_t comp = rest & (~rest + 1);
            for (;;) {
                std::uint64_t grown = comp;
                for (std::uint64_t m = comp; m; m &= m - 1)
                    grown |= g.neighbors(lowest_bit(m)) & mask;
                if (grown == comp) break;
                comp = grown;
            }
            total += alpha_component(comp);
            rest &= ~comp;
        }
        return total;
    }

    int alpha_component(std::uint64_t comp) {
        const int k = std::popcount(comp);
        if (k == 1) return 1;
        if (auto it = memo.find(comp); it != memo.end()) return it->second;
        int pivot = -1, pivot_degree = -1;
        bool clique = true;
        for (std::uint64_t m = comp; m; m &= m - 1) {
            const int v = lowest_bit(m);
            const int d = std::popcount(g.neighbors(v) & comp);
            if (d != k - 1) clique = false;
            if (d > pivot_degree) {
                pivot_degree = d;
                pivot = v;
            }
        }
        int result;
        if (clique) {
            result = 1;
        } else {
            result = std::max(alpha_set(comp & ~(std::uint64_t{1} << pivot)),
                              1 + alpha_set(comp & ~g.closed_neighborhood(pivot)));
        }
        memo.emplace(comp, result);
        return result;
    }
};

}  // namespace

int stability_number(const Graph& g) {
    AlphaSolver solver{g, {}};
    return solver.alpha_set(g.vertex_mask());
}

bool is_alpha_critical_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not an edge");
    return stability_number(delete_edge(g, u, v)) > stability_number(g);
}

bool is_alpha_critical_graph(const Graph& g) {
    const int alpha = stability_number(g);
    for (const auto& [u, v] : g.edges())
        if (stability_number(delete_edge(g, u, v)) == alpha) return false;
    return true;
}

namespace {

// Order-free structure key used to break ties between equal-order sides:
// canonical bits when small enough, the induced edge list otherwise.
// Either way the comparison is deterministic for a fixed input labeling.
std::string structure_key(const Graph& g) {
    if (g.order() <= kCanonicalLimit) {
        std::string hex(16, '0');
        std::uint64_t bits = canonical_form(g).bits;
        for (int i = 15; i >= 0; --i, bits >>= 4) hex[i] = "0123456789abcdef"[bits & 15];
        return hex;
    }
    return to_edge_list(g);
}

}  // namespace

std::optional<Decomposition> find_alpha_critical_decomposition(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("decomposition requires a connected graph");
    const int alpha = stability_number(g);

    struct Candidate {
        int g1_order;
        std::string g1_key;
        std::pair<int, int> bridge;
        std::uint64_t g1_mask, g2_mask;
        int g1_anchor, g2_anchor;  // bridge endpoints, g's labeling
    };
    std::optional<Candidate> best;

    for (const auto& [u, v] : bridge_edges(g)) {
        // Component of u in g - uv, grown without crossing the bridge.
        std::uint64_t side = std::uint64_t{1} << u;
        for (;;) {
            std::uint64_t grown = side;
            for (std::uint64_t m = side; m; m &= m - 1) {
                const int w = lowest_bit(m);
                std::uint64_t nb = g.neighbors(w);
                if (w == u) nb &= ~(std::uint64_t{1} << v);
                grown |= nb;
            }
            if (grown == side) break;
            side = grown;
        }
        const std::uint64_t other = g.vertex_mask() & ~side;
        if (stability_number(induced_subgraph(g, side)) +
                stability_number(induced_subgraph(g, other)) !=
            alpha)
            continue;  // alpha-critical bridge, no split along it

        // Orient so g1 is the smaller side; break ties structurally.
        auto oriented = [&](std::uint64_t m1, int a1, std::uint64_t m2, int a2) {
            return Candidate{std::popcount(m1), structure_key(induced_subgraph(g, m1)),
                             std::minmax(u, v), m1, m2, a1, a2};
        };
        Candidate c1 = oriented(side, u, other, v);
        Candidate c2 = oriented(other, v, side, u);
        Candidate& local = std::tie(c1.g1_order, c1.g1_key) <= std::tie(c2.g1_order, c2.g1_key)
                               ? c1
                               : c2;
        if (!best || std::tie(local.g1_order, local.g1_key, local.bridge) <
                         std::tie(best->g1_order, best->g1_key, best->bridge))
            best = local;
    }
    if (!best) return std::nullopt;

    auto rank = [](std::uint64_t mask, int v) {
        return std::popcount(mask & ((std::uint64_t{1} << v) - 1));
    };
    Decomposition d;
    d.g1 = induced_subgraph(g, best->g1_mask);
    d.v1 = rank(best->g1_mask, best->g1_anchor);
    d.g2 = induced_subgraph(g, best->g2_mask);
    d.v2 = rank(best->g2_mask, best->g2_anchor);
    d.bridge = best->bridge;
    d.g1_alpha_critical = is_alpha_critical_graph(d.g1);
    return d;
}

bool check_critical_vertex_identities(const Graph& g, int v) {
    g.neighbors(v);  // range check
    if (!is_alpha_critical_graph(g))
        throw std::invalid_argument("vertex identities require an alpha-critical graph");
    if (g.degree(v) == 0)
        throw std::invalid_argument("vertex " + std::to_string(v) + " is isolated");
    const int alpha = stability_number(g);
    return stability_number(delete_vertex(g, v)) == alpha &&
           stability_number(delete_closed_neighborhood(g, v)) == alpha - 1;
}

bool check_critical_connectivity(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("connectivity check requires a connected graph");
    if (!is_alpha_critical_graph(g))
        throw std::invalid_argument("connectivity check requires an alpha-critical graph");
    for (int v = 0; v < g.order(); ++v) {
        const Graph h = delete_vertex(g, v);
        if (h.order() > 0 && !is_connected(h)) return false;
    }
    return true;
}

}  // namespace fibindex
