#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fibindex/graph.hpp"

namespace fibindex {

enum class Family {
    complete,          // K_n
    empty_complement,  // complement of K_n: n isolated vertices
    path,              // P_n, edges i..i+1
    cycle,             // C_n, n >= 3
    star,              // S_n, center 0
    complete_split,    // CS(n,alpha): stable set 0..alpha-1 joined to clique alpha..n-1
    turan,             // T(n,alpha): alpha balanced cliques in consecutive blocks
    turan_connected,   // TC(n,alpha): T(n-1,alpha)'s labeling plus a hub
};

std::string family_name(Family f);

struct FamilySpec {
    Family family = Family::complete;
    int n = 0;
    int alpha = 0;  // only read for complete_split / turan / turan_connected
};

// Grammar: family:key=value,...  with keys n and alpha, e.g.
// "turan:n=7,alpha=3" or "path:n=10".  Unknown families and keys rejected.
FamilySpec parse_family_spec(const std::string& text);

// Fixed labelings as documented on Family; invalid parameters raise
// invalid-argument errors naming the violated constraint.
Graph generate(const FamilySpec& spec);

// T(n,alpha)'s clique blocks as (start index, size), the p = n mod alpha
// larger blocks first.
std::vector<std::pair<int, int>> turan_blocks(int n, int alpha);

// The alpha-1 hub edges of TC(n,alpha): vertex 0 of the first (largest)
// clique to the lowest-index vertex of every other clique.  These are cut
// edges of TC by construction; the pendant cliques may contribute further
// bridges of their own.
std::vector<std::pair<int, int>> turan_connected_bridges(int n, int alpha);

// Cross-family identities T(n,1) = TC(n,1) = CS(n,1) = K_n,
// T(n,n) = CS(n,n) = complement of K_n, TC(n,n-1) = CS(n,n-1) = S_n,
// compared by canonical form.  Requires 3 <= n <= kCanonicalLimit.
bool family_identities_check(int n);

// Erdos-Renyi G(n,p) from a fixed stream: std::mt19937_64 seeded with seed,
// one draw per pair (u,v), u < v, in lexicographic order; the edge is
// present iff the draw is below floor(p * 2^64).  p outside (0,1) short-
// circuits to the empty/complete edge set without consuming draws.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace fibindex
