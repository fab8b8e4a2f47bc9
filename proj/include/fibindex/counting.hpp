#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "fibindex/graph.hpp"

namespace fibindex {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr int kNaiveCountLimit = 25;

struct CountStats {
    std::uint64_t branch_nodes = 0;  // connected subproblems actually expanded
    std::uint64_t memo_hits = 0;
    double elapsed_seconds = 0.0;
};

// Number of stable sets of g, the empty set included.  Branch-and-reduce on
// a max-degree vertex with component factorization; subproblems are memoized
// on their surviving-vertex mask, cache local to the call.
BigCount fibonacci_index(const Graph& g);
BigCount fibonacci_index(const Graph& g, CountStats& stats);

// Subset-scan oracle, O(2^n) time; refuses n > kNaiveCountLimit.
BigCount fibonacci_index_naive(const Graph& g);

// Stable-set count of the n-vertex path: f_{n+2} with f_0 = 0, f_1 = 1.
BigCount fibonacci_of_path_closed(int n);

}  // namespace fibindex
