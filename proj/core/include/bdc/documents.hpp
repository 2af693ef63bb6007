#pragma once

// Structured-text input documents.
//
// Graph:  {"vertices":[{"id":..,"weight":..}], "edges":[{"u":..,"v":..,"sign":..}],
//          "rotations":{"<id>":[edge index, ...]}, "marked": id?}
// Tree:   {"vertices":[{"id":..,"weight":..}], "edges":[[u, v], ...]}
//
// Ids may be strings or integers. Rotations list edge indices (positions in
// "edges") counterclockwise; when absent, edges are taken in file order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdc/chainmail.hpp"
#include "bdc/graph.hpp"
#include "bdc/plumbing.hpp"

namespace bdc {

struct GraphDocument {
  PlaneGraph graph;
  std::vector<std::string> ids;
  std::vector<std::optional<std::int64_t>> weights;
  std::vector<int> signs;
  std::optional<int> marked;

  int vertex_index(const std::string& id) const;  // throws MalformedInput
};

enum class DocumentKind { Diagram, Graph };

/// Looks at the top-level keys only. Throws MalformedInput.
DocumentKind detect_document(std::string_view text);

GraphDocument parse_graph_document(std::string_view text);
PlumbingTree parse_tree_document(std::string_view text);

/// With a marked vertex the document is the full white graph W. Without one
/// it is the reduced graph carrying Goeritz weights g_ii, and W is recovered
/// by joining a hub to each vertex -g_ii - deg times.
MarkedGraph white_graph(const GraphDocument& doc);

/// Chainmail link of the document: the reduced white graph with framings
/// -deg_W when marked, otherwise the graph with its own weights and signs.
/// `vertex_order` receives the document vertex of each component.
ChainmailLink chainmail_of(const GraphDocument& doc, std::vector<int>* vertex_order = nullptr);

/// Weights of an unmarked document, all required. Throws MalformedInput.
std::vector<std::int64_t> required_weights(const GraphDocument& doc);

}  // namespace bdc
