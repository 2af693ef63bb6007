#include "bdc/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "bdc/errors.hpp"
#include "json.hpp"

namespace bdc {

namespace {

struct Occurrence {
  int crossing;
  int position;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------
// KnotDiagram

KnotDiagram::KnotDiagram(PdCode pd, std::optional<int> marked_arc) : pd_(std::move(pd)) {
  if (pd_.empty()) throw Error(ErrorCode::MalformedInput, "PD code has no crossings");
  const int n = crossing_count();

  std::map<int, std::vector<Occurrence>> occ;
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) occ[pd_[c][p]].push_back({c, p});
  for (const auto& [arc, list] : occ) {
    if (list.size() != 2)
      throw Error(ErrorCode::MalformedInput,
                  "arc " + std::to_string(arc) + " appears " + std::to_string(list.size()) + " times");
    arcs_.push_back(arc);
  }

  // Projection graph: vertex per crossing, edge per arc.
  projection_ = PlaneGraph(n);
  std::vector<std::array<int, 4>> dart_at(static_cast<std::size_t>(n));
  for (const int arc : arcs_) {
    const auto& list = occ[arc];
    const int e = projection_.add_edge(list[0].crossing, list[1].crossing);
    arc_edge_.push_back(e);
    dart_at[list[0].crossing][list[0].position] = 2 * e;
    dart_at[list[1].crossing][list[1].position] = 2 * e + 1;
  }
  for (int c = 0; c < n; ++c)
    projection_.set_rotation(c, {dart_at[c][0], dart_at[c][1], dart_at[c][2], dart_at[c][3]});

  if (!projection_.abstract().is_connected())
    throw Error(ErrorCode::SplitDiagram, "diagram is split (projection graph disconnected)");

  // Alternation: each arc runs from an over-crossing to an under-crossing.
  for (const int arc : arcs_) {
    const auto& list = occ[arc];
    const bool under0 = list[0].position % 2 == 0;
    const bool under1 = list[1].position % 2 == 0;
    if (under0 == under1)
      throw Error(ErrorCode::NotAlternating,
                  "arc " + std::to_string(arc) + (under0 ? " is under" : " is over") + " at both ends");
  }

  // Orientation: an arc whose under-end is position 0 ends there, so it
  // leaves its over-end; position 2 means it starts there.
  for (int c = 0; c < n; ++c) {
    int incoming_over = 0;
    for (int p : {1, 3}) {
      const auto& list = occ[pd_[c][p]];
      const Occurrence& other = (list[0].crossing == c && list[0].position == p) ? list[1] : list[0];
      if (other.position == 2) ++incoming_over;
    }
    if (incoming_over != 1)
      throw Error(ErrorCode::MalformedInput,
                  "over-strand at crossing " + std::to_string(c) + " is not consistently oriented");
  }

  const auto faces = projection_.faces();
  if (static_cast<int>(faces.size()) != n + 2)
    throw Error(ErrorCode::NonPlanar, "face count " + std::to_string(faces.size()) + " != crossings + 2 = " +
                                          std::to_string(n + 2));

  std::vector<std::pair<int, int>> dart_corner(static_cast<std::size_t>(4 * n));
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) dart_corner[dart_at[c][p]] = {c, p};

  corner_region_.assign(static_cast<std::size_t>(n), {-1, -1, -1, -1});
  region_corners_.resize(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int d : faces[f]) {
      const auto [c, k] = dart_corner[d];
      corner_region_[c][k] = static_cast<int>(f);
      region_corners_[f].push_back({c, k});
    }

  for (int c = 0; c < n; ++c) {
    if (corner_region_[c][0] == corner_region_[c][2] || corner_region_[c][1] == corner_region_[c][3])
      throw Error(ErrorCode::NotReduced,
                  "crossing " + std::to_string(c) + " is nugatory (a Tait graph has a loop)");
  }

  std::vector<int> parent(arcs_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto arc_index = [&](int arc) {
    return static_cast<int>(std::lower_bound(arcs_.begin(), arcs_.end(), arc) - arcs_.begin());
  };
  for (int c = 0; c < n; ++c)
    for (int p : {0, 1}) {
      int a = find_root(parent, arc_index(pd_[c][p]));
      int b = find_root(parent, arc_index(pd_[c][p + 2]));
      if (a != b) parent[a] = b;
    }
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find_root(parent, static_cast<int>(i)) == static_cast<int>(i)) ++components_;

  if (marked_arc) {
    if (!std::binary_search(arcs_.begin(), arcs_.end(), *marked_arc))
      throw Error(ErrorCode::MalformedInput, "marked arc " + std::to_string(*marked_arc) + " not in diagram");
    marked_arc_ = *marked_arc;
  } else {
    marked_arc_ = arcs_.front();
  }
}

std::array<int, 2> KnotDiagram::arc_regions(int arc) const {
  for (int c = 0; c < crossing_count(); ++c)
    for (int p = 0; p < 4; ++p)
      if (pd_[c][p] == arc) return {corner_region(c, (p + 3) % 4), corner_region(c, p)};
  throw Error(ErrorCode::MalformedInput, "unknown arc " + std::to_string(arc));
}

KnotDiagram parse_pd(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("pd") || !doc["pd"].is_array())
    throw Error(ErrorCode::MalformedInput, "expected an object with a \"pd\" array");
  PdCode pd;
  for (const auto& x : doc["pd"]) {
    if (!x.is_array() || x.size() != 4) throw Error(ErrorCode::MalformedInput, "each crossing must have 4 arcs");
    std::array<int, 4> t{};
    for (std::size_t i = 0; i < 4; ++i) {
      if (!x[i].is_number_integer()) throw Error(ErrorCode::MalformedInput, "arc ids must be integers");
      t[i] = x[i].get<int>();
    }
    pd.push_back(t);
  }
  std::optional<int> mark;
  if (doc.contains("marked_arc") && !doc["marked_arc"].is_null()) {
    if (!doc["marked_arc"].is_number_integer()) throw Error(ErrorCode::MalformedInput, "marked_arc must be an integer");
    mark = doc["marked_arc"].get<int>();
  }
  return KnotDiagram(std::move(pd), mark);
}

// ---------------------------------------------------------------------------
// Colouring and Tait graphs

Coloring checkerboard(const KnotDiagram& d) {
  Coloring col;
  std::vector<int> parity(static_cast<std::size_t>(d.region_count()), -1);
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int k = 0; k < 4; ++k) {
      int& p = parity[d.corner_region(c, k)];
      if (p == -1)
        p = k % 2;
      else
        BDC_ASSERT(p == k % 2, "region meets corners of both parities in an alternating diagram");
    }
  col.region.resize(parity.size());
  for (std::size_t r = 0; r < parity.size(); ++r) col.region[r] = parity[r] == 0 ? Color::White : Color::Black;
  BDC_ASSERT(satisfies_crossing_convention(d, col), "checkerboard colouring violates the crossing convention");
  return col;
}

bool satisfies_crossing_convention(const KnotDiagram& d, const Coloring& c) {
  if (static_cast<int>(c.region.size()) != d.region_count()) return false;
  for (int x = 0; x < d.crossing_count(); ++x)
    for (int k = 0; k < 4; ++k) {
      const Color want = k % 2 == 0 ? Color::White : Color::Black;
      if (c.region[d.corner_region(x, k)] != want) return false;
    }
  for (int arc : d.arcs()) {
    const auto r = d.arc_regions(arc);
    if (c.region[r[0]] == c.region[r[1]]) return false;
  }
  return true;
}

int TaitGraph::vertex_of_region(int region) const {
  auto it = std::find(regions.begin(), regions.end(), region);
  if (it == regions.end()) throw Error(ErrorCode::MalformedInput, "region is not a vertex of this Tait graph");
  return static_cast<int>(it - regions.begin());
}

std::vector<std::int64_t> TaitGraph::weights() const {
  std::vector<std::int64_t> w;
  for (int v = 0; v < graph.vertex_count(); ++v) w.push_back(-graph.degree(v));
  return w;
}

namespace {

TaitGraph build_tait(const KnotDiagram& d, const Coloring& col, Color color) {
  TaitGraph t;
  t.color = color;
  for (int r = 0; r < d.region_count(); ++r)
    if (col.region[r] == color) t.regions.push_back(r);
  std::vector<int> vertex(static_cast<std::size_t>(d.region_count()), -1);
  for (std::size_t i = 0; i < t.regions.size(); ++i) vertex[t.regions[i]] = static_cast<int>(i);

  // Corners of this colour: {0,2} for white, {1,3} for black.
  const int first = color == Color::White ? 0 : 1;
  t.graph = Multigraph(static_cast<int>(t.regions.size()));
  t.embedding = PlaneGraph(static_cast<int>(t.regions.size()));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int u = vertex[d.corner_region(c, first)];
    const int v = vertex[d.corner_region(c, first + 2)];
    BDC_ASSERT(u >= 0 && v >= 0, "corner colour mismatch while building Tait graph");
    if (u == v) throw Error(ErrorCode::NotReduced, "Tait graph loop at crossing " + std::to_string(c));
    t.graph.add_edge(u, v);
    t.edge_crossing.push_back(c);
  }
  // Rotation at each vertex: crossings in boundary order of its region.
  std::vector<std::pair<int, int>> edge_uv;
  for (const auto& e : t.graph.edges()) t.embedding.add_edge(e.u, e.v);
  for (std::size_t i = 0; i < t.regions.size(); ++i) {
    std::vector<int> rot;
    for (const CornerRef& cr : d.region_corners(t.regions[i])) {
      BDC_ASSERT(cr.corner % 2 == first % 2, "region corners of mixed parity");
      const int dart = 2 * cr.crossing + (cr.corner == first ? 0 : 1);
      rot.push_back(dart);
    }
    t.embedding.set_rotation(static_cast<int>(i), std::move(rot));
  }
  BDC_ASSERT(t.embedding.satisfies_euler(), "Tait graph embedding is not planar");

  const auto sides = d.arc_regions(d.marked_arc());
  for (int r : sides)
    if (col.region[r] == color) t.marked = vertex[r];
  return t;
}

}  // namespace

TaitPair tait_graphs(const KnotDiagram& d, const Coloring& c) {
  TaitPair pair{build_tait(d, c, Color::White), build_tait(d, c, Color::Black)};
  const int n = d.crossing_count();
  BDC_ASSERT(pair.white.graph.vertex_count() + pair.black.graph.vertex_count() == n + 2,
             "Tait graphs do not account for every region");
  BDC_ASSERT(static_cast<int>(pair.white.embedding.faces().size()) == pair.black.graph.vertex_count(),
             "faces of W do not match vertices of B");
  return pair;
}

bool is_special(const TaitGraph& white, const TaitGraph* black) {
  bool even = true;
  for (int v = 0; v < white.graph.vertex_count(); ++v)
    if (white.graph.degree(v) % 2 != 0) even = false;
  if (black) BDC_ASSERT(black->graph.is_bipartite() == even, "W all-even and B bipartite disagree");
  return even;
}

// ---------------------------------------------------------------------------
// Kauffman states

std::vector<KauffmanState> kauffman_states(const KnotDiagram& d) {
  const int n = d.crossing_count();
  const auto marked = d.arc_regions(d.marked_arc());
  std::vector<bool> used(static_cast<std::size_t>(d.region_count()), false);
  used[marked[0]] = used[marked[1]] = true;

  // Candidate corners per crossing, sorted by region id.
  std::vector<std::array<int, 4>> order(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    std::array<int, 4> ks{0, 1, 2, 3};
    std::sort(ks.begin(), ks.end(), [&](int a, int b) { return d.corner_region(c, a) < d.corner_region(c, b); });
    order[c] = ks;
  }

  std::vector<KauffmanState> out;
  KauffmanState cur;
  cur.corner.assign(static_cast<std::size_t>(n), -1);
  cur.region.assign(static_cast<std::size_t>(n), -1);

  auto rec = [&](auto&& self, int c) -> void {
    if (c == n) {
      out.push_back(cur);
      return;
    }
    for (int k : order[c]) {
      const int r = d.corner_region(c, k);
      if (used[r]) continue;
      used[r] = true;
      cur.corner[c] = k;
      cur.region[c] = r;
      self(self, c + 1);
      used[r] = false;
    }
  };
  rec(rec, 0);
  return out;
}

IntVector state_covector(const KnotDiagram& d, const Coloring& col, const TaitGraph& white,
                         const KauffmanState& state) {
  const int n = d.crossing_count();
  if (static_cast<int>(state.corner.size()) != n) throw Error(ErrorCode::DimensionMismatch, "state size");
  std::vector<BigInt> deg(static_cast<std::size_t>(white.graph.vertex_count()));
  for (int c = 0; c < n; ++c) {
    const int w0 = col.region[d.corner_region(c, 0)] == Color::White ? 0 : 1;
    const int w1 = w0 + 2;
    // The over-strand (positions 1, 3) separates corners {1,2} from {3,0}.
    const int k = state.corner[c];
    const bool side_a = (k == 1 || k == 2);
    const int target_corner = ((w0 == 1 || w0 == 2) == side_a) ? w0 : w1;
    const int source_corner = target_corner == w0 ? w1 : w0;
    const int target = white.vertex_of_region(d.corner_region(c, target_corner));
    const int source = white.vertex_of_region(d.corner_region(c, source_corner));
    deg[target] += 1;
    deg[source] -= 1;
  }
  IntVector v;
  for (int x : white.unmarked()) {
    BDC_ASSERT((deg[x] - white.graph.degree(x)) % 2 == 0, "state covector fails the characteristic parity");
    v.push_back(deg[x]);
  }
  return v;
}

// ---------------------------------------------------------------------------
// Mirror and median construction

PdCode mirror(const PdCode& pd) {
  std::map<int, std::vector<Occurrence>> occ;
  for (int c = 0; c < static_cast<int>(pd.size()); ++c)
    for (int p = 0; p < 4; ++p) occ[pd[c][p]].push_back({c, p});
  PdCode out;
  for (int c = 0; c < static_cast<int>(pd.size()); ++c) {
    const auto& t = pd[c];
    const auto& list = occ[t[1]];
    if (list.size() != 2) throw Error(ErrorCode::MalformedInput, "arc must appear twice");
    const Occurrence& other = (list[0].crossing == c && list[0].position == 1) ? list[1] : list[0];
    const bool b_incoming = other.position == 2;
    out.push_back(b_incoming ? std::array<int, 4>{t[1], t[2], t[3], t[0]} : std::array<int, 4>{t[3], t[0], t[1], t[2]});
  }
  return out;
}

int MedianDiagram::arc_beside(int vertex) const {
  for (std::size_t i = 0; i < arc_white_vertex.size(); ++i)
    if (arc_white_vertex[i] == vertex) return static_cast<int>(i) + 1;
  throw Error(ErrorCode::MalformedInput, "vertex has no adjacent arc");
}

MedianDiagram median_diagram(const PlaneGraph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::DegenerateGraph, "median of an edgeless graph");
  if (!g.satisfies_euler()) throw Error(ErrorCode::InvalidEmbedding, "rotation system is not planar");
  const Multigraph abs = g.abstract();
  if (!abs.is_connected()) throw Error(ErrorCode::Disconnected, "median of a disconnected graph");
  if (abs.has_loop()) throw Error(ErrorCode::NotReduced, "loop gives a nugatory crossing");
  for (int e = 0; e < abs.edge_count(); ++e) {
    Multigraph without(abs.vertex_count());
    for (int f = 0; f < abs.edge_count(); ++f)
      if (f != e) without.add_edge(abs.edges()[f].u, abs.edges()[f].v);
    if (!without.is_connected()) throw Error(ErrorCode::NotReduced, "bridge gives a nugatory crossing");
  }

  const int ne = g.edge_count();
  // Slots around crossing e, ccw: 0 = DR, 1 = UR, 2 = UL, 3 = DL, with
  // u on the left and v on the right of the edge. Each medial arc is a
  // corner of g, identified by the dart that opens it.
  std::vector<std::array<int, 4>> slot_arc(static_cast<std::size_t>(ne));
  for (int e = 0; e < ne; ++e) {
    slot_arc[e][0] = 2 * e + 1;
    slot_arc[e][1] = g.prev_ccw(2 * e + 1);
    slot_arc[e][2] = 2 * e;
    slot_arc[e][3] = g.prev_ccw(2 * e);
  }
  struct End {
    int crossing;
    int slot;
  };
  const int arcs = 2 * ne;
  std::vector<std::array<End, 2>> ends(static_cast<std::size_t>(arcs));
  for (int x = 0; x < arcs; ++x) {
    const int nx = g.next_ccw(x);
    ends[x][0] = {PlaneGraph::edge_of(x), (x % 2 == 0) ? 2 : 0};
    ends[x][1] = {PlaneGraph::edge_of(nx), (nx % 2 == 0) ? 3 : 1};
  }

  std::vector<int> new_id(static_cast<std::size_t>(arcs), 0);
  std::vector<std::array<bool, 4>> incoming(static_cast<std::size_t>(ne), {false, false, false, false});
  int next_id = 1;
  for (int start = 0; start < arcs; ++start) {
    if (new_id[start]) continue;
    int a = start;
    int from = 0;  // traverse from ends[a][from] to ends[a][1 - from]
    while (!new_id[a]) {
      new_id[a] = next_id++;
      const End in = ends[a][1 - from];
      incoming[in.crossing][in.slot] = true;
      const int out_slot = (in.slot + 2) % 4;
      const int b = slot_arc[in.crossing][out_slot];
      from = (ends[b][0].crossing == in.crossing && ends[b][0].slot == out_slot) ? 0 : 1;
      a = b;
    }
  }

  MedianDiagram md;
  md.arc_white_vertex.assign(static_cast<std::size_t>(arcs), -1);
  for (int x = 0; x < arcs; ++x) md.arc_white_vertex[new_id[x] - 1] = g.tail(x);
  for (int e = 0; e < ne; ++e) {
    const auto& s = slot_arc[e];
    BDC_ASSERT(incoming[e][0] != incoming[e][2], "under-strand orientation broken");
    if (incoming[e][0])
      md.pd.push_back({new_id[s[0]], new_id[s[1]], new_id[s[2]], new_id[s[3]]});
    else
      md.pd.push_back({new_id[s[2]], new_id[s[3]], new_id[s[0]], new_id[s[1]]});
  }
  return md;
}

}  // namespace bdc
