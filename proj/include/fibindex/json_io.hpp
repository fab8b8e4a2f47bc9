#pragma once

#include <json.hpp>

#include "fibindex/bounds.hpp"
#include "fibindex/extremal.hpp"
#include "fibindex/graph.hpp"

namespace fibindex {

// Serialization keeps insertion order and renders unbounded integers as
// decimal strings, so equal inputs give byte-equal documents.
using ordered_json = nlohmann::ordered_json;

ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const ordered_json& j);

ordered_json to_json(const CanonicalForm& form);
ordered_json to_json(const BoundReport& report);
ordered_json to_json(const AlphaRecord& record);
ordered_json to_json(const ExtremalReport& report);
ordered_json to_json(const VerificationVerdict& verdict);
ordered_json to_json(const CounterexampleReport& report);

std::string dump_json(const ordered_json& j);  // 2-space indent, trailing newline

}  // namespace fibindex
