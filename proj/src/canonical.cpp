#include "fibindex/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace fibindex {

namespace detail {

namespace {

// Prefix-pruned backtracking over vertex orderings.  Position d's column
// holds the adjacency bits toward positions 0..d-1, bit for position 0 most
// significant, so placing vertices left to right fixes the bit string in
// column-major order and a prefix comparison against the incumbent prunes
// whole branches.  Candidates are tried in ascending (column, degree) order;
// that ordering is a speed heuristic only, the search is exhaustive.
struct CanonSearch {
    int n = 0;
    const std::uint64_t* adj = nullptr;
    bool abort_on_smaller = false;

    std::array<int, kCanonicalLimit> degree{};
    std::array<std::uint32_t, kCanonicalLimit> best_col{};
    std::array<std::uint32_t, kCanonicalLimit> cur_col{};
    std::array<int, kCanonicalLimit> chosen{};
    std::uint64_t used = 0;

    std::uint32_t column_of(int v, int d) const {
        std::uint32_t col = 0;
        for (int i = 0; i < d; ++i) col = (col << 1) | ((adj[chosen[i]] >> v) & 1);
        return col;
    }

    // Returns true iff the incumbent was beaten somewhere in this subtree.
    // prefix_eq: the current prefix coincides with the incumbent's.
    bool extend(int d, bool prefix_eq) {
        if (d == n) {
            if (prefix_eq) return false;
            std::copy(cur_col.begin(), cur_col.begin() + n, best_col.begin());
            return true;
        }
        struct Cand {
            std::uint32_t col;
            int deg;
            int v;
        };
        std::array<Cand, kCanonicalLimit> cand;
        int nc = 0;
        for (int v = 0; v < n; ++v)
            if (!(used >> v & 1)) cand[nc++] = {column_of(v, d), degree[v], v};
        std::sort(cand.begin(), cand.begin() + nc, [](const Cand& a, const Cand& b) {
            return std::tie(a.col, a.deg, a.v) < std::tie(b.col, b.deg, b.v);
        });
        bool improved = false;
        for (int ci = 0; ci < nc; ++ci) {
            const auto [col, deg, v] = cand[ci];
            if (prefix_eq && col > best_col[d]) break;
            const bool strictly_smaller = prefix_eq && col < best_col[d];
            if (strictly_smaller && abort_on_smaller) return true;
            chosen[d] = v;
            cur_col[d] = col;
            used |= std::uint64_t{1} << v;
            const bool sub = extend(d + 1, prefix_eq && !strictly_smaller);
            used &= ~(std::uint64_t{1} << v);
            if (sub) {
                if (abort_on_smaller) return true;
                improved = true;
                prefix_eq = true;  // the new incumbent runs through this prefix
            }
        }
        return improved;
    }

    void init(int order, const std::uint64_t* rows) {
        n = order;
        adj = rows;
        for (int v = 0; v < n; ++v) degree[v] = std::popcount(rows[v]);
        // incumbent: the identity labeling
        for (int d = 0; d < n; ++d) {
            std::uint32_t col = 0;
            for (int i = 0; i < d; ++i) col = (col << 1) | ((rows[i] >> d) & 1);
            best_col[d] = col;
        }
    }

    std::uint64_t packed_best() const {
        std::uint64_t bits = 0;
        int idx = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++idx)
                bits |= static_cast<std::uint64_t>((best_col[j] >> (j - 1 - i)) & 1) << idx;
        return bits;
    }
};

}  // namespace

std::uint64_t minimal_bits(int n, const std::uint64_t* rows) {
    if (n <= 1) return 0;
    CanonSearch search;
    search.init(n, rows);
    search.extend(0, true);
    return search.packed_best();
}

bool rows_canonical(int n, const std::uint64_t* rows) {
    if (n <= 1) return true;
    CanonSearch search;
    search.abort_on_smaller = true;
    search.init(n, rows);
    return !search.extend(0, true);
}

}  // namespace detail

namespace {

void check_order(int n) {
    if (n > kCanonicalLimit)
        throw capability_error("canonicalization supports n <= " +
                               std::to_string(kCanonicalLimit) + " (got n=" + std::to_string(n) +
                               ")");
}

std::array<std::uint64_t, kCanonicalLimit> rows_of(const Graph& g) {
    std::array<std::uint64_t, kCanonicalLimit> rows{};
    for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v);
    return rows;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    check_order(g.order());
    const auto rows = rows_of(g);
    return {g.order(), detail::minimal_bits(g.order(), rows.data())};
}

bool is_canonical_labeling(const Graph& g) {
    check_order(g.order());
    const auto rows = rows_of(g);
    return detail::rows_canonical(g.order(), rows.data());
}

Graph canonical_graph(const CanonicalForm& form) {
    check_order(form.n);
    return Graph::from_edge_mask(form.n, form.bits);
}

std::string to_string(const CanonicalForm& form) {
    return "n=" + std::to_string(form.n) + ",bits=" + std::to_string(form.bits);
}

}  // namespace fibindex
