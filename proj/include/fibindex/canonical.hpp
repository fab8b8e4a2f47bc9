#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fibindex/graph.hpp"

namespace fibindex {

// Canonicalization is exhaustive over vertex orderings; C(10,2) = 45 pair
// bits also keeps the form inside one word.
inline constexpr int kCanonicalLimit = 10;

// Isomorphism fingerprint: the lexicographically minimal column-major
// upper-triangle bit string over all relabelings of the graph.
// Two graphs have equal forms iff they are isomorphic.
struct CanonicalForm {
    int n = 0;
    std::uint64_t bits = 0;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);

// True iff g's own labeling already realizes its canonical form.  Lets an
// enumeration over labeled graphs keep exactly one member per isomorphism
// class without storing anything.
bool is_canonical_labeling(const Graph& g);

// The representative graph carrying the canonical labeling.
Graph canonical_graph(const CanonicalForm& form);

std::string to_string(const CanonicalForm& form);

namespace detail {

// Row-level engine shared with the enumeration hot loop.
std::uint64_t minimal_bits(int n, const std::uint64_t* rows);
bool rows_canonical(int n, const std::uint64_t* rows);

}  // namespace detail

}  // namespace fibindex
