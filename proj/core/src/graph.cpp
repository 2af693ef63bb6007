#include "bdc/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "bdc/errors.hpp"

namespace bdc {

// ---------------------------------------------------------------------------
// Multigraph

int Multigraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error(ErrorCode::MalformedInput, "edge endpoint out of range");
  edges_.push_back({u, v});
  return edge_count() - 1;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_) d += (e.u == v) + (e.v == v);
  return d;
}

int Multigraph::multiplicity(int u, int v) const {
  int k = 0;
  for (const auto& e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++k;
  return k;
}

bool Multigraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

std::vector<std::vector<int>> Multigraph::components() const {
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) {
    int a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n_; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool Multigraph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool Multigraph::is_bipartite() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> side(static_cast<std::size_t>(n_), -1);
  for (int s = 0; s < n_; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          q.push(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Multigraph::is_forest() const {
  return !has_loop() && edge_count() == n_ - static_cast<int>(components().size());
}

IntMatrix Multigraph::signed_laplacian() const {
  IntMatrix l(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    if (e.u == e.v) continue;
    l(e.u, e.v) += 1;
    l(e.v, e.u) += 1;
    l(e.u, e.u) -= 1;
    l(e.v, e.v) -= 1;
  }
  return l;
}

Multigraph Multigraph::induced(std::span<const int> keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Multigraph out(static_cast<int>(keep.size()));
  for (const auto& e : edges_)
    if (index[e.u] >= 0 && index[e.v] >= 0) out.add_edge(index[e.u], index[e.v]);
  return out;
}

std::vector<int> MarkedGraph::unmarked() const {
  std::vector<int> out;
  for (int v = 0; v < graph.vertex_count(); ++v)
    if (v != marked) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Spanning trees

namespace {

using Mult = std::vector<std::vector<int>>;

class TreeCounter {
 public:
  BigInt count(const Mult& g) {
    const std::size_t n = g.size();
    if (n <= 1) return 1;

    std::vector<int> key;
    key.reserve(n * (n - 1) / 2 + 1);
    key.push_back(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) key.push_back(g[i][j]);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BigInt result = compute(g);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  static bool connected(const Mult& g) {
    const std::size_t n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < n; ++y)
        if (!seen[y] && g[x][y] > 0) {
          seen[y] = true;
          ++reached;
          stack.push_back(y);
        }
    }
    return reached == n;
  }

  static Mult remove_vertex(const Mult& g, std::size_t v) {
    Mult out;
    out.reserve(g.size() - 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i == v) continue;
      std::vector<int> row;
      row.reserve(g.size() - 1);
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != v) row.push_back(g[i][j]);
      out.push_back(std::move(row));
    }
    return out;
  }

  BigInt compute(const Mult& g) {
    const std::size_t n = g.size();
    if (!connected(g)) return 0;

    // Pendant vertex: every spanning tree uses exactly one of its k edges.
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t nbrs = 0, w = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (x != v && g[v][x] > 0) {
          ++nbrs;
          w = x;
        }
      if (nbrs == 1) return BigInt(g[v][w]) * count(remove_vertex(g, v));
    }

    std::size_t u = 0, v = 1;
    while (v < n && g[u][v] == 0) ++v;
    BDC_ASSERT(v < n, "connected graph with isolated vertex");
    const int k = g[u][v];

    Mult deleted = g;
    deleted[u][v] = deleted[v][u] = 0;

    Mult merged = g;
    for (std::size_t x = 0; x < n; ++x) {
      if (x == u || x == v) continue;
      merged[u][x] += merged[v][x];
      merged[x][u] = merged[u][x];
    }
    merged[u][u] = 0;
    Mult contracted = remove_vertex(merged, v);

    return count(deleted) + BigInt(k) * count(contracted);
  }

  std::map<std::vector<int>, BigInt> memo_;
};

}  // namespace

BigInt spanning_tree_count(const Multigraph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::DegenerateGraph, "empty graph");
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "spanning trees of a disconnected graph");
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Mult m(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    if (e.u == e.v) continue;
    ++m[e.u][e.v];
    ++m[e.v][e.u];
  }
  TreeCounter counter;
  return counter.count(m);
}

// ---------------------------------------------------------------------------
// PlaneGraph

int PlaneGraph::add_vertex() {
  rot_.emplace_back();
  return vertex_count() - 1;
}

int PlaneGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorCode::MalformedInput, "edge endpoint out of range");
  const int e = edge_count();
  edges_.push_back({u, v});
  rot_[u].push_back(2 * e);
  rot_[v].push_back(2 * e + 1);
  return e;
}

int PlaneGraph::insert_edge(int u, int after_u, int v, int after_v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw Error(ErrorCode::MalformedInput, "edge endpoint out of range");
  const int e = edge_count();
  edges_.push_back({u, v});
  auto place = [&](int x, int after, int dart) {
    auto& r = rot_[x];
    if (after < 0) {
      BDC_ASSERT(r.empty() || (u == v && x == v), "insert_edge: anchor required for non-empty rotation");
      r.push_back(dart);
      return;
    }
    auto it = std::find(r.begin(), r.end(), after);
    BDC_ASSERT(it != r.end(), "insert_edge: anchor dart not at vertex");
    r.insert(it + 1, dart);
  };
  place(u, after_u, 2 * e);
  place(v, after_v, 2 * e + 1);
  return e;
}

void PlaneGraph::set_rotation(int v, std::vector<int> darts) { rot_.at(static_cast<std::size_t>(v)) = std::move(darts); }

int PlaneGraph::tail(int dart) const {
  const Edge& e = edges_.at(static_cast<std::size_t>(edge_of(dart)));
  return (dart & 1) ? e.v : e.u;
}

int PlaneGraph::head(int dart) const { return tail(twin(dart)); }

int PlaneGraph::position(int dart) const {
  const auto& r = rot_[tail(dart)];
  auto it = std::find(r.begin(), r.end(), dart);
  BDC_ASSERT(it != r.end(), "dart missing from rotation");
  return static_cast<int>(it - r.begin());
}

int PlaneGraph::next_ccw(int dart) const {
  const auto& r = rot_[tail(dart)];
  const int p = position(dart);
  return r[(static_cast<std::size_t>(p) + 1) % r.size()];
}

int PlaneGraph::prev_ccw(int dart) const {
  const auto& r = rot_[tail(dart)];
  const int p = position(dart);
  return r[(static_cast<std::size_t>(p) + r.size() - 1) % r.size()];
}

bool PlaneGraph::rotations_consistent() const {
  std::vector<int> seen(edges_.size() * 2, 0);
  for (int v = 0; v < vertex_count(); ++v)
    for (int d : rot_[v]) {
      if (d < 0 || d >= static_cast<int>(seen.size())) return false;
      if (tail(d) != v) return false;
      ++seen[d];
    }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

std::vector<std::vector<int>> PlaneGraph::faces() const {
  BDC_ASSERT(rotations_consistent(), "rotation system does not match edge list");
  // Position lookup table to avoid repeated linear scans.
  std::vector<int> pos(edges_.size() * 2, 0);
  for (int v = 0; v < vertex_count(); ++v)
    for (std::size_t i = 0; i < rot_[v].size(); ++i) pos[rot_[v][i]] = static_cast<int>(i);

  std::vector<bool> used(edges_.size() * 2, false);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < vertex_count(); ++v)
    for (int start : rot_[v]) {
      if (used[start]) continue;
      std::vector<int> face;
      int d = start;
      while (!used[d]) {
        used[d] = true;
        face.push_back(d);
        // Arrive at head(d) through twin(d); leave along the dart just
        // clockwise of it, keeping the face on the left.
        const int t = twin(d);
        const auto& r = rot_[tail(t)];
        const std::size_t j = static_cast<std::size_t>(pos[t]);
        d = r[(j + r.size() - 1) % r.size()];
      }
      BDC_ASSERT(d == start, "face walk did not close");
      out.push_back(std::move(face));
    }
  return out;
}

std::vector<int> PlaneGraph::face_of_dart() const {
  std::vector<int> out(edges_.size() * 2, -1);
  const auto fs = faces();
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (int d : fs[f]) out[d] = static_cast<int>(f);
  return out;
}

bool PlaneGraph::satisfies_euler() const {
  if (!rotations_consistent()) return false;
  const Multigraph g = abstract();
  const long long comps = static_cast<long long>(g.components().size());
  long long isolated = 0;
  for (int v = 0; v < vertex_count(); ++v) isolated += rot_[v].empty() ? 1 : 0;
  const long long f = static_cast<long long>(faces().size()) + isolated;
  return static_cast<long long>(vertex_count()) - edge_count() + f == 2 * comps;
}

Multigraph PlaneGraph::abstract() const {
  Multigraph g(vertex_count());
  for (const auto& e : edges_) g.add_edge(e.u, e.v);
  return g;
}

PlaneGraph PlaneGraph::induced(std::span<const int> keep, std::vector<int>* edge_map) const {
  std::vector<int> index(static_cast<std::size_t>(vertex_count()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  PlaneGraph out(static_cast<int>(keep.size()));
  std::vector<int> emap(edges_.size(), -1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (index[ed.u] < 0 || index[ed.v] < 0) continue;
    emap[e] = static_cast<int>(out.edges_.size());
    out.edges_.push_back({index[ed.u], index[ed.v]});
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    std::vector<int> r;
    for (int d : rot_[keep[i]]) {
      const int ne = emap[edge_of(d)];
      if (ne >= 0) r.push_back(2 * ne + (d & 1));
    }
    out.rot_[i] = std::move(r);
  }
  if (edge_map) *edge_map = std::move(emap);
  return out;
}

}  // namespace bdc
