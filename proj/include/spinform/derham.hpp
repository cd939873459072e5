// Structure of the twisted de Rham sequence at the algebra level: intersection
// bounds, the target map on the node set, and diagram emission.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinform/forms.hpp"
#include "spinform/report.hpp"

namespace spinform {

struct DiagramEdge {
  NodeIndex from;
  NodeIndex to;
  bool operator==(const DiagramEdge&) const = default;
  auto operator<=>(const DiagramEdge&) const = default;
};

// Node set with labels and the directed edges between adjacent columns. Every
// edge target stays inside the window {j-1, j, j+1} of the next column; the
// constructor of diagram() enforces it.
struct Diagram {
  int rank = 0;
  std::vector<std::pair<NodeIndex, ModuleLabel>> nodes;
  std::vector<DiagramEdge> edges;

  std::set<NodeIndex> targets_of(NodeIndex from) const;
};

// Labels occurring in both multisets: the isomorphism-class intersection that
// bounds the intersection of two submodules with these decompositions.
std::set<ModuleLabel> intersection_bound(const Decomposition& a, const Decomposition& b);

// Column-(i+1) nodes whose labels survive in the product of the node's label
// with the defining representation: an upper bound for where the covariant
// derivative can map sections supported in that node.
std::set<NodeIndex> targets(int rank, NodeIndex idx);

Diagram diagram(int rank);

enum class DiagramFormat { dot, text, json };

// "symplectic Dirac" for first-row horizontal arrows, "symplectic twistor" for
// first-row down-right arrows, "symplectic Rarita-Schwinger" for second-row
// horizontal arrows; other arrows carry no name.
std::optional<std::string> edge_name(const DiagramEdge& e);

std::string emit(const Diagram& d, DiagramFormat format);
nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

// Exhaustive three-window containment over all nodes, mirror symmetry of the
// edge set for small ranks, and at rank 3 the transcribed reference diagram
// edge for edge.
SuiteReport verify_diagram_structure(int rank);

// The tensor products and intersections behind the eleven classical label
// shapes, instantiated at this rank and checked against transcribed reference
// lists; list entries that the computation overrules are reported as notes.
SuiteReport verify_tensor_case_regression(int rank);

}  // namespace spinform
