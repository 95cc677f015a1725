#pragma once

#include <string>

#include "minforest/atoms.hpp"
#include "minforest/forest.hpp"

namespace minforest {

/// Text format, one directive per line:
///   # comment
///   vertices NAME...
///   arc FROM TO WEIGHT
/// Names are whitespace-free tokens; weights exact rationals ("3", "-1/2").
/// The vertices line comes first and appears once; at most one arc per
/// ordered pair; no self-loops. Throws ParseError with 1-based position.
WeightedDigraph parse_graph(const std::string& document);

/// Canonical form: the vertices line, then arcs sorted by endpoint indices.
/// parse_graph(serialize_graph(g)) reproduces g exactly.
std::string serialize_graph(const WeightedDigraph& graph);

WeightedDigraph load_graph_file(const std::string& path);

/// The plain graph as a DOT digraph, arcs labeled by weight.
std::string dot_graph(const WeightedDigraph& graph, const std::string& title);

/// One forest as a DOT digraph: roots double-circled; when a partition is
/// given its atoms become clusters, labeled atoms marked with '*'.
std::string dot_forest(const SpanningForest& forest, const AtomPartition* partition,
                       const std::string& title);

}  // namespace minforest
