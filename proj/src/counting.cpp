#include "fibindex/counting.hpp"

#include <bit>
#include <chrono>
#include <unordered_map>

namespace fibindex {

namespace {

int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }

// One top-level count owns one memo; keys are surviving-vertex masks of
// connected subproblems.
struct StableSetCounter {
    const Graph& g;
    CountStats* stats;
    std::unordered_map<std::uint64_t, BigCount> memo;

    BigCount count_set(std::uint64_t mask) {
        if (mask == 0) return 1;
        BigCount result = 1;
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
            result *= count_component(comp);
            rest &= ~comp;
        }
        return result;
    }

    // comp is a connected induced subproblem.
    BigCount count_component(std::uint64_t comp) {
        const int k = std::popcount(comp);
        if (k == 1) return 2;
        if (auto it = memo.find(comp); it != memo.end()) {
            if (stats) ++stats->memo_hits;
            return it->second;
        }
        if (stats) ++stats->branch_nodes;
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
        BigCount result;
        if (clique) {
            result = k + 1;
        } else {
            result = count_set(comp & ~(std::uint64_t{1} << pivot)) +
                     count_set(comp & ~g.closed_neighborhood(pivot));
        }
        memo.emplace(comp, result);
        return result;
    }
};

}  // namespace

BigCount fibonacci_index(const Graph& g, CountStats& stats) {
    const auto start = std::chrono::steady_clock::now();
    StableSetCounter counter{g, &stats, {}};
    counter.memo.reserve(1 << 10);
    BigCount result = counter.count_set(g.vertex_mask());
    stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

BigCount fibonacci_index(const Graph& g) {
    StableSetCounter counter{g, nullptr, {}};
    counter.memo.reserve(1 << 10);
    return counter.count_set(g.vertex_mask());
}

BigCount fibonacci_index_naive(const Graph& g) {
    const int n = g.order();
    if (n > kNaiveCountLimit)
        throw capability_error("naive stable-set scan supports n <= " +
                               std::to_string(kNaiveCountLimit) + " (got n=" + std::to_string(n) +
                               ")");
    // stable(S) = stable(S minus its lowest vertex v) and v has no neighbor
    // in the remainder; the empty set is stable.
    std::vector<bool> stable(std::uint64_t{1} << n);
    stable[0] = true;
    std::uint64_t count = 1;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        const int v = lowest_bit(s);
        const std::uint64_t rest = s & (s - 1);
        const bool ok = stable[rest] && (g.neighbors(v) & rest) == 0;
        stable[s] = ok;
        count += ok;
    }
    return BigCount(count);
}

BigCount fibonacci_of_path_closed(int n) {
    if (n < 0) throw std::invalid_argument("path length must be nonnegative");
    BigCount a = 0, b = 1;  // f_0, f_1
    for (int i = 0; i <= n; ++i) {
        BigCount next = a + b;
        a = b;
        b = next;
    }
    return b;  // f_{n+2}
}

}  // namespace fibindex
