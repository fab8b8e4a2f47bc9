#pragma once

#include <string>

#include "fibindex/counting.hpp"
#include "fibindex/graph.hpp"

namespace fibindex {

enum class GraphClass { general, connected, tree };

std::string to_string(GraphClass c);

// Most specific class g belongs to: tree > connected > general.
GraphClass detect_class(const Graph& g);

// Stable-set count of the Turan graph T(n, alpha):
// (ceil(n/alpha)+1)^p * (floor(n/alpha)+1)^(alpha-p), p = n mod alpha.
// Domain 1 <= alpha <= n, plus (0,0) for the empty graph.
BigCount f_turan_closed(int n, int alpha);

// Same value by the deletion recurrence
// f(n,alpha) = f(n-1,alpha) + f(n-ceil(n/alpha),alpha-1), memoized.
BigCount f_turan_recursive(int n, int alpha);

// Stable-set count of TC(n, alpha) = f_T(n-1,alpha) + f_T(n',alpha') with
// n' = n - ceil(n/alpha) - alpha + 1, alpha' = min(n', alpha-1).
// Domain 1 <= alpha <= n-1.
BigCount f_turan_connected(int n, int alpha);

// Tree/forest specialization of the connected maximum:
// 3^(n-alpha-1) * 2^(2alpha-n+1) + 2^(n-alpha-1).
// Domain n/2 <= alpha <= n-1.
BigCount f_tree_closed(int n, int alpha);

// 2^alpha + n - alpha, attained by the complete split graph CS(n, alpha).
BigCount lower_bound(int n, int alpha);

struct BoundReport {
    int n = 0;
    int m = 0;
    int alpha = 0;
    GraphClass graph_class = GraphClass::general;
    BigCount fib;
    BigCount lower;
    BigCount upper;
    bool lower_tight = false;
    bool upper_tight = false;
};

// Evaluates the class-appropriate sandwich for g.  Verifies that g actually
// lies in requested_class (invalid-argument otherwise).  For n within the
// canonicalization limit, tightness is cross-checked against the canonical
// form of the extremal graph it implies.
BoundReport check_bounds(const Graph& g, GraphClass requested_class);

}  // namespace fibindex
