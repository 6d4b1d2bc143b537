#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hitwalk/graph.hpp"
#include "hitwalk/partition.hpp"
#include "hitwalk/regularity.hpp"
#include "hitwalk/scheme.hpp"
#include "hitwalk/walks.hpp"

namespace hitwalk {

using Json = nlohmann::ordered_json;

// Serializes with floats rendered at 17 significant digits so identical
// results diff bit-for-bit across runs. Integral adjacency weights are stored
// as JSON integers upstream, so they render as exact decimals.
std::string format_json(const Json& j, int indent = 2);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Edge-list text format: one "u v" pair per line, 0-indexed, '#' comments,
// optional "n <count>" header (default n = max index + 1).
Graph parse_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

// Dispatches on extension: ".json" uses the JSON schema, anything else the
// edge-list format.
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j, int n);

Json quotient_to_json(const QuotientMatrix& q);

Json report_to_json(const HittingReport& r);

Json label_function_to_json(const LabelFunction& f);
LabelFunction label_function_from_json(const Json& j);

Json intersection_array_to_json(const IntersectionArray& a);
Json verdict_to_json(const EquiWisRVerdict& v);

// Scheme files: {"n": int, "relations": [matrix, ...]} or a single label
// matrix {"n": int, "labels": [[...]]} whose entry is the relation index.
AssociationScheme scheme_from_json(const Json& j);
Json scheme_to_json(const AssociationScheme& s);
AssociationScheme load_scheme(const std::string& path);

}  // namespace hitwalk
