#include "bdc/goeritz.hpp"

#include <algorithm>

#include "bdc/errors.hpp"

namespace bdc {

GoeritzForm goeritz(const MarkedGraph& w) {
  const Multigraph& g = w.graph;
  if (g.vertex_count() < 2) throw Error(ErrorCode::DegenerateGraph, "white graph needs at least two vertices");
  if (w.marked < 0 || w.marked >= g.vertex_count())
    throw Error(ErrorCode::MalformedInput, "marked vertex out of range");
  if (g.has_loop()) throw Error(ErrorCode::NotReduced, "white graph has a loop");

  GoeritzForm form;
  form.vertex_order = w.unmarked();
  const IntMatrix lap = g.signed_laplacian();
  const std::size_t m = form.vertex_order.size();
  form.matrix = IntMatrix(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) form.matrix(i, j) = lap(form.vertex_order[i], form.vertex_order[j]);
  return form;
}

MarkedGraph close_with_hub(const Multigraph& reduced, std::span<const std::int64_t> weights) {
  if (weights.size() != static_cast<std::size_t>(reduced.vertex_count()))
    throw Error(ErrorCode::DimensionMismatch, "one weight per vertex required");
  if (reduced.has_loop()) throw Error(ErrorCode::NotReduced, "reduced graph has a loop");
  MarkedGraph w;
  w.graph = reduced;
  w.marked = w.graph.add_vertex();
  for (int v = 0; v < reduced.vertex_count(); ++v) {
    const std::int64_t k = -weights[v] - reduced.degree(v);
    if (k < 0)
      throw Error(ErrorCode::NotAccessibleByConstruction,
                  "weight of vertex " + std::to_string(v) + " exceeds -degree");
    for (std::int64_t t = 0; t < k; ++t) w.graph.add_edge(w.marked, v);
  }
  return w;
}

std::int64_t cut_size(const MarkedGraph& w, std::span<const int> subset) {
  std::vector<bool> in(static_cast<std::size_t>(w.graph.vertex_count()), false);
  for (int v : subset) {
    if (v == w.marked) throw Error(ErrorCode::MalformedInput, "marked vertex cannot lie in a subgraph of the reduced graph");
    in[v] = true;
  }
  std::int64_t f = 0;
  for (const auto& e : w.graph.edges()) f += (in[e.u] != in[e.v]) ? 1 : 0;
  return f;
}

}  // namespace bdc
