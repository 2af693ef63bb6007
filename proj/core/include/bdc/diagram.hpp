#pragma once

// Alternating link diagrams from PD codes.
//
// PD convention: each crossing is a 4-tuple of arc ids listed
// counterclockwise starting with the incoming under-strand. Corner k of a
// crossing is the sector between positions k and k+1. In an alternating
// diagram the corners {0, 2} of every crossing carry one checkerboard
// colour and {1, 3} the other; the white colour is the one on corners
// {0, 2}, which is the mu = -1 convention for the white surface.

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "bdc/exact.hpp"
#include "bdc/graph.hpp"

namespace bdc {

using PdCode = std::vector<std::array<int, 4>>;

struct CornerRef {
  int crossing = 0;
  int corner = 0;
  bool operator==(const CornerRef&) const = default;
};

class KnotDiagram {
 public:
  /// Validates and derives regions. Throws MalformedInput, SplitDiagram,
  /// NotAlternating, NonPlanar, NotReduced.
  KnotDiagram(PdCode pd, std::optional<int> marked_arc = std::nullopt);

  const PdCode& crossings() const noexcept { return pd_; }
  int crossing_count() const noexcept { return static_cast<int>(pd_.size()); }
  const std::vector<int>& arcs() const noexcept { return arcs_; }
  int marked_arc() const noexcept { return marked_arc_; }
  int region_count() const noexcept { return static_cast<int>(region_corners_.size()); }

  /// Region at corner k of crossing c.
  int corner_region(int crossing, int corner) const { return corner_region_.at(static_cast<std::size_t>(crossing))[corner]; }
  /// Corners of each region in boundary order (ccw around the region).
  const std::vector<CornerRef>& region_corners(int region) const { return region_corners_.at(static_cast<std::size_t>(region)); }

  /// The two regions on either side of an arc.
  std::array<int, 2> arc_regions(int arc) const;

  /// The 4-valent plane graph: one vertex per crossing, one edge per arc,
  /// rotation given by tuple order.
  const PlaneGraph& projection() const noexcept { return projection_; }

  int component_count() const noexcept { return components_; }

 private:
  PdCode pd_;
  std::vector<int> arcs_;
  int marked_arc_ = 0;
  PlaneGraph projection_;
  std::vector<int> arc_edge_;  // index into arcs_ -> projection edge
  std::vector<std::array<int, 4>> corner_region_;
  std::vector<std::vector<CornerRef>> region_corners_;
  int components_ = 0;
};

/// Parses {"pd": [[a,b,c,d],...], "marked_arc": k?}.
KnotDiagram parse_pd(std::string_view text);

enum class Color { White, Black };

struct Coloring {
  std::vector<Color> region;
  bool operator==(const Coloring&) const = default;
};

/// The unique colouring with every crossing in the white convention.
Coloring checkerboard(const KnotDiagram& d);

/// True iff adjacent regions differ and corners {0,2} are white everywhere.
bool satisfies_crossing_convention(const KnotDiagram& d, const Coloring& c);

struct TaitGraph : MarkedGraph {
  Color color = Color::White;
  std::vector<int> regions;         // vertex -> region id
  std::vector<int> edge_crossing;   // edge -> crossing index
  PlaneGraph embedding;             // same vertices/edges with rotations

  int vertex_of_region(int region) const;
  std::vector<std::int64_t> weights() const;  // -degree
};

struct TaitPair {
  TaitGraph white;
  TaitGraph black;
};

/// Throws NotReduced on a loop.
TaitPair tait_graphs(const KnotDiagram& d, const Coloring& c);

/// All degrees of W even. When `black` is given, also checks that it is
/// bipartite and asserts the two agree.
bool is_special(const TaitGraph& white, const TaitGraph* black = nullptr);

struct KauffmanState {
  std::vector<int> corner;  // crossing -> chosen corner (0..3)
  std::vector<int> region;  // crossing -> region at that corner
};

/// All Kauffman states, backtracking over crossings in index order and
/// candidate regions in id order.
std::vector<KauffmanState> kauffman_states(const KnotDiagram& d);

/// Signed degrees d_x(v) over unmarked white vertices (Goeritz order).
IntVector state_covector(const KnotDiagram& d, const Coloring& c, const TaitGraph& white,
                         const KauffmanState& state);

/// Mirror image: swaps over and under at every crossing.
PdCode mirror(const PdCode& pd);

/// Alternating diagram whose white Tait graph is `g` (median construction).
struct MedianDiagram {
  PdCode pd;
  std::vector<int> arc_white_vertex;  // arc id - 1 -> vertex of g beside it
  int arc_beside(int vertex) const;   // smallest arc id beside a vertex
};

/// Throws NotReduced if g has a loop or a bridge (the diagram would not be
/// reduced), Disconnected if g is not connected.
MedianDiagram median_diagram(const PlaneGraph& g);

}  // namespace bdc
