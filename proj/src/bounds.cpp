#include "fibindex/bounds.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>

#include "fibindex/canonical.hpp"
#include "fibindex/criticality.hpp"
#include "fibindex/generators.hpp"

namespace fibindex {

namespace {

BigCount pow2(int e) { return BigCount(1) << e; }

BigCount ipow(BigCount base, int e) {
    BigCount r = 1;
    for (; e > 0; --e) r *= base;
    return r;
}

void check_turan_domain(const char* what, int n, int alpha) {
    if (n == 0 && alpha == 0) return;
    if (n < 0 || alpha < 1 || alpha > n)
        throw std::invalid_argument(std::string(what) + " requires 1 <= alpha <= n (got n=" +
                                    std::to_string(n) + ", alpha=" + std::to_string(alpha) + ")");
}

}  // namespace

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::general: return "general";
        case GraphClass::connected: return "connected";
        case GraphClass::tree: return "tree";
    }
    throw std::invalid_argument("unknown graph class");
}

GraphClass detect_class(const Graph& g) {
    if (is_tree(g)) return GraphClass::tree;
    if (is_connected(g)) return GraphClass::connected;
    return GraphClass::general;
}

BigCount f_turan_closed(int n, int alpha) {
    check_turan_domain("f_turan_closed", n, alpha);
    if (n == 0) return 1;
    const int floor_q = n / alpha;
    const int p = n % alpha;
    const int ceil_q = floor_q + (p > 0 ? 1 : 0);
    return ipow(ceil_q + 1, p) * ipow(floor_q + 1, alpha - p);
}

namespace {

BigCount f_turan_rec(int n, int alpha, std::unordered_map<std::uint32_t, BigCount>& memo) {
    if (alpha == 1) return n + 1;
    if (alpha == n) return pow2(n);
    const std::uint32_t key = (static_cast<std::uint32_t>(n) << 16) |
                              static_cast<std::uint32_t>(alpha);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int ceil_q = (n + alpha - 1) / alpha;
    BigCount r = f_turan_rec(n - 1, alpha, memo) + f_turan_rec(n - ceil_q, alpha - 1, memo);
    memo.emplace(key, r);
    return r;
}

}  // namespace

BigCount f_turan_recursive(int n, int alpha) {
    check_turan_domain("f_turan_recursive", n, alpha);
    if (n == 0) return 1;
    std::unordered_map<std::uint32_t, BigCount> memo;
    return f_turan_rec(n, alpha, memo);
}

BigCount f_turan_connected(int n, int alpha) {
    if (alpha < 1 || alpha > n - 1)
        throw std::invalid_argument("f_turan_connected requires 1 <= alpha <= n-1 (got n=" +
                                    std::to_string(n) + ", alpha=" + std::to_string(alpha) + ")");
    if (alpha == 1) return n + 1;
    const int ceil_q = (n + alpha - 1) / alpha;
    const int np = n - ceil_q - alpha + 1;
    const int ap = std::min(np, alpha - 1);
    return f_turan_closed(n - 1, alpha) + f_turan_closed(np, ap);
}

BigCount f_tree_closed(int n, int alpha) {
    if (alpha < 1 || 2 * alpha < n || alpha > n - 1)
        throw std::invalid_argument("f_tree_closed requires n/2 <= alpha <= n-1 (got n=" +
                                    std::to_string(n) + ", alpha=" + std::to_string(alpha) + ")");
    const int x = n - alpha - 1;
    const int y = 2 * alpha - n + 1;
    return ipow(3, x) * pow2(y) + pow2(x);
}

BigCount lower_bound(int n, int alpha) {
    if (n < 0 || alpha < 0 || alpha > n)
        throw std::invalid_argument("lower_bound requires 0 <= alpha <= n (got n=" +
                                    std::to_string(n) + ", alpha=" + std::to_string(alpha) + ")");
    return pow2(alpha) + n - alpha;
}

BoundReport check_bounds(const Graph& g, GraphClass requested_class) {
    if (requested_class != GraphClass::general && !is_connected(g))
        throw std::invalid_argument("graph is not connected, cannot evaluate class " +
                                    to_string(requested_class));
    if (requested_class == GraphClass::tree && !is_tree(g))
        throw std::invalid_argument("graph is not a tree, cannot evaluate class tree");

    BoundReport report;
    report.n = g.order();
    report.m = g.size();
    report.graph_class = requested_class;
    report.alpha = stability_number(g);
    report.fib = fibonacci_index(g);
    report.lower = lower_bound(report.n, report.alpha);
    if (requested_class == GraphClass::general) {
        report.upper = f_turan_closed(report.n, report.alpha);
    } else if (report.n == 1) {
        report.upper = 2;  // the one-vertex graph; TC is undefined here
    } else if (requested_class == GraphClass::connected) {
        report.upper = f_turan_connected(report.n, report.alpha);
    } else {
        report.upper = f_tree_closed(report.n, report.alpha);
    }
    report.lower_tight = report.fib == report.lower;
    report.upper_tight = report.fib == report.upper;

    // The theorems say tight means isomorphic to the extremal graph; check
    // that whenever canonicalization can see it.
    if (report.n >= 2 && report.n <= kCanonicalLimit) {
        const CanonicalForm self = canonical_form(g);
        const bool is_cs =
            self == canonical_form(generate({Family::complete_split, report.n, report.alpha}));
        if (report.lower_tight != is_cs)
            throw std::logic_error("lower tightness disagrees with complete-split canonical form");
        bool is_extremal_upper;
        if (requested_class == GraphClass::general) {
            is_extremal_upper = self == canonical_form(generate({Family::turan, report.n, report.alpha}));
        } else {
            is_extremal_upper =
                self == canonical_form(generate({Family::turan_connected, report.n, report.alpha}));
            if (requested_class == GraphClass::connected && report.n == 5 && report.alpha == 2)
                is_extremal_upper =
                    is_extremal_upper || self == canonical_form(generate({Family::cycle, 5, 0}));
        }
        if (report.upper_tight != is_extremal_upper)
            throw std::logic_error("upper tightness disagrees with the extremal canonical form");
    }
    return report;
}

}  // namespace fibindex
