#include <gtest/gtest.h>

#include <functional>

#include "bdc/documents.hpp"
#include "bdc/errors.hpp"
#include "bdc/goeritz.hpp"

using namespace bdc;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
    return ErrorCode::Internal;
  } catch (const Error& e) {
    return e.code();
  }
}

// Twin-bundle white graph as a marked document: hub h, three edges to each of
// a and b, one edge a-b.
const char* kTwinBundle = R"({
  "vertices": [{"id": "h"}, {"id": "a"}, {"id": "b"}],
  "edges": [["h","a"],["h","a"],["h","a"],["h","b"],["h","b"],["h","b"],["a","b"]],
  "rotations": {"h": [0,1,2,3,4,5], "a": [0,6,2,1], "b": [3,6,5,4]},
  "marked": "h"
})";

}  // namespace

TEST(Documents, Detect) {
  EXPECT_EQ(detect_document(R"({"pd": []})"), DocumentKind::Diagram);
  EXPECT_EQ(detect_document(R"({"vertices": []})"), DocumentKind::Graph);
  EXPECT_EQ(code_of([] { detect_document("{}"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { detect_document("[1]"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { detect_document("not json"); }), ErrorCode::MalformedInput);
}

TEST(Documents, MarkedWhiteGraph) {
  const GraphDocument doc = parse_graph_document(kTwinBundle);
  ASSERT_TRUE(doc.marked);
  EXPECT_EQ(*doc.marked, 0);
  EXPECT_EQ(doc.vertex_index("b"), 2);
  EXPECT_TRUE(doc.graph.satisfies_euler());
  const MarkedGraph w = white_graph(doc);
  EXPECT_EQ(goeritz(w).matrix, (IntMatrix{{-4, 1}, {1, -4}}));
  std::vector<int> order;
  const ChainmailLink l = chainmail_of(doc, &order);
  EXPECT_EQ(order, (std::vector<int>{1, 2}));
  EXPECT_EQ(l.linking_matrix(), (IntMatrix{{-4, 1}, {1, -4}}));
}

TEST(Documents, UnmarkedReducedGraph) {
  const GraphDocument doc = parse_graph_document(R"({
    "vertices": [{"id": 1, "weight": -4}, {"id": 2, "weight": -2}, {"id": 3, "weight": -5}, {"id": 4, "weight": -2}],
    "edges": [{"u": 1, "v": 2}, {"u": 2, "v": 3, "sign": "+"}, {"u": 3, "v": 4, "sign": 1}]
  })");
  EXPECT_FALSE(doc.marked);
  const MarkedGraph w = white_graph(doc);
  EXPECT_EQ(w.graph.vertex_count(), 5);
  EXPECT_EQ(goeritz(w).matrix.diagonal(), make_int_vector({-4, -2, -5, -2}));
  const ChainmailLink l = chainmail_of(doc);
  EXPECT_EQ(l.linking_matrix(), (IntMatrix{{-4, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, -5, 1}, {0, 0, 1, -2}}));
}

TEST(Documents, SignedEdges) {
  const GraphDocument doc = parse_graph_document(R"({
    "vertices": [{"id": "x", "weight": -3}, {"id": "y", "weight": -3}],
    "edges": [{"u": "x", "v": "y", "sign": "-"}, {"u": "x", "v": "y", "sign": -1}],
    "rotations": {"x": [0, 1], "y": [1, 0]}
  })");
  EXPECT_EQ(doc.signs, (std::vector<int>{-1, -1}));
  EXPECT_EQ(chainmail_of(doc).linking_matrix(), (IntMatrix{{-3, -2}, {-2, -3}}));
}

TEST(Documents, GraphErrors) {
  auto parse = [](const char* s) { return [s] { parse_graph_document(s); }; };
  EXPECT_EQ(code_of(parse(R"({"edges": []})")), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of(parse(R"({"vertices": [{"id": "a"}, {"id": "a"}]})")), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of(parse(R"({"vertices": [{"id": "a"}], "edges": [["a", "z"]]})")), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of(parse(R"({"vertices": [{"id": "a"}, {"id": "b"}], "edges": [{"u": "a", "v": "b", "sign": 3}]})")),
            ErrorCode::MalformedInput);
  EXPECT_EQ(code_of(parse(R"({"vertices": [{"id": "a"}], "edges": [["a", "a"]]})")), ErrorCode::NotReduced);
  EXPECT_EQ(code_of(parse(R"({"vertices": []})")), ErrorCode::DegenerateGraph);
  EXPECT_EQ(code_of(parse(R"({"vertices": [{"id": "a"}, {"id": "b"}], "edges": [["a","b"]], "rotations": {"a": [0, 0]}})")),
            ErrorCode::MalformedInput);
  EXPECT_EQ(code_of(parse(R"({"vertices": [{"id": "a"}, {"id": "b"}], "edges": [["a","b"]], "rotations": {"q": [0]}})")),
            ErrorCode::MalformedInput);
  EXPECT_EQ(code_of(parse(R"({"vertices": [{"id": "a", "weight": "x"}]})")), ErrorCode::MalformedInput);
  // weights in a marked document must be -degree
  const GraphDocument doc = parse_graph_document(R"({
    "vertices": [{"id": "h"}, {"id": "a", "weight": -5}], "edges": [["h","a"],["h","a"]], "marked": "h"})");
  EXPECT_EQ(code_of([&] { white_graph(doc); }), ErrorCode::MalformedInput);
  const GraphDocument unweighted = parse_graph_document(R"({"vertices": [{"id": "a"}]})");
  EXPECT_EQ(code_of([&] { white_graph(unweighted); }), ErrorCode::MalformedInput);
}

TEST(Documents, Trees) {
  const PlumbingTree t = parse_tree_document(R"({
    "vertices": [{"id": "a", "weight": -2}, {"id": "b", "weight": -5}, {"id": "c", "weight": -2}],
    "edges": [["a", "b"], ["b", "c"]]
  })");
  EXPECT_EQ(t.weights, (std::vector<std::int64_t>{-2, -5, -2}));
  EXPECT_EQ(t.label(1), "b");
  EXPECT_EQ(abs(determinant(t.intersection_form())), 16);
  EXPECT_EQ(code_of([] { parse_tree_document(R"({"vertices": [{"id": "a"}]})"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] {
              parse_tree_document(
                  R"({"vertices": [{"id": "a", "weight": -2}, {"id": "b", "weight": -2}], "edges": []})");
            }),
            ErrorCode::NotATree);
  EXPECT_EQ(code_of([] {
              parse_tree_document(R"({"vertices": [{"id": "a", "weight": -2}, {"id": "b", "weight": -2}],
                                      "edges": [["a","b"],["b","a"]]})");
            }),
            ErrorCode::NotATree);
}
