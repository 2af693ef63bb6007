#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bdc/exact.hpp"
#include "bdc/graph.hpp"

namespace bdc {

/// Intersection form of the white Tait filling: the signed Laplacian of W
/// with the marked row and column deleted.
struct GoeritzForm {
  IntMatrix matrix;
  std::vector<int> vertex_order;  // W vertex for each row

  std::size_t m() const noexcept { return matrix.rows(); }
};

/// g_ii = -deg_W(v_i), g_ij = |E_W(v_i, v_j)|. Throws DegenerateGraph when
/// the reduced graph is empty and NotReduced on loops.
GoeritzForm goeritz(const MarkedGraph& w);

/// Rebuilds the full white graph from a reduced graph and its Goeritz
/// diagonal: the marked hub receives -weight(v) - deg(v) edges to each v.
/// Throws NotAccessibleByConstruction when some multiplicity is negative.
MarkedGraph close_with_hub(const Multigraph& reduced, std::span<const std::int64_t> weights);

/// Edges of W with exactly one endpoint in `subset` (the marked vertex is
/// never in a subset).
std::int64_t cut_size(const MarkedGraph& w, std::span<const int> subset);

}  // namespace bdc
