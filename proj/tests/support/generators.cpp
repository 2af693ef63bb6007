#include "generators.hpp"

#include <algorithm>
#include <set>

namespace bdc::testing {

namespace {

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

}  // namespace

PlaneGraph random_plane_graph(Rng& rng, int edges) {
  PlaneGraph g(2);
  g.insert_edge(0, -1, 1, -1);
  g.insert_edge(0, 0, 1, 1);
  while (g.edge_count() < edges) {
    const PlaneGraph before = g;
    const auto faces = g.faces();
    const auto& f = faces[pick(rng, static_cast<int>(faces.size()))];
    const int d1 = f[pick(rng, static_cast<int>(f.size()))];
    const int d2 = f[pick(rng, static_cast<int>(f.size()))];
    const bool ear = edges - g.edge_count() >= 2 && (pick(rng, 3) == 0 || g.tail(d1) == g.tail(d2));
    if (ear) {
      const int w = g.add_vertex();
      const int e1 = g.insert_edge(g.tail(d1), d1, w, -1);
      g.insert_edge(g.tail(d2), d2, w, 2 * e1 + 1);
    } else if (g.tail(d1) != g.tail(d2)) {
      g.insert_edge(g.tail(d1), d1, g.tail(d2), d2);
    } else {
      continue;
    }
    if (!g.satisfies_euler()) g = before;
  }
  return g;
}

Multigraph random_multigraph(Rng& rng, int max_vertices, int max_edges) {
  const int n = 2 + pick(rng, std::max(1, max_vertices - 1));
  Multigraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(pick(rng, v), v);
  const int extra = pick(rng, std::max(1, max_edges - (n - 1) + 1));
  for (int t = 0; t < extra; ++t) {
    const int u = pick(rng, n);
    int v = pick(rng, n - 1);
    if (v >= u) ++v;
    g.add_edge(u, v);
  }
  return g;
}

PlaneGraph bundle_graph(int k) {
  PlaneGraph g(2);
  std::vector<int> ru, rv;
  for (int e = 0; e < k; ++e) {
    g.add_edge(0, 1);
    ru.push_back(2 * e);
    rv.insert(rv.begin(), 2 * e + 1);
  }
  g.set_rotation(0, ru);
  g.set_rotation(1, rv);
  return g;
}

PlaneGraph cycle_graph(int n) {
  PlaneGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;  // degree 2 everywhere, every rotation is planar
}

PlaneGraph path_graph(int n) {
  PlaneGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

PlaneGraph twin_bundle_white() {
  // hub 0; edges 0..2 hub-1, 3..5 hub-2, 6 is 1-2
  PlaneGraph g(3);
  for (int t = 0; t < 3; ++t) g.add_edge(0, 1);
  for (int t = 0; t < 3; ++t) g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.set_rotation(0, {0, 2, 4, 6, 8, 10});
  g.set_rotation(1, {1, 12, 5, 3});
  g.set_rotation(2, {7, 13, 11, 9});
  return g;
}

std::vector<NamedDiagram> named_diagrams() {
  return {
      {"trefoil", {{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}},
      {"hopf", {{4, 1, 3, 2}, {2, 3, 1, 4}}},
      {"figure-eight", {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}},
      {"5_1", {{1, 6, 2, 7}, {3, 8, 4, 9}, {5, 10, 6, 1}, {7, 2, 8, 3}, {9, 4, 10, 5}}},
      {"5_2", {{1, 4, 2, 5}, {3, 8, 4, 9}, {5, 10, 6, 1}, {9, 6, 10, 7}, {7, 2, 8, 3}}},
  };
}

std::vector<NamedDiagram> diagram_corpus(std::uint64_t seed, int random_count, int max_crossings) {
  std::vector<NamedDiagram> out;
  std::set<PdCode> seen;
  auto add = [&](const std::string& name, const PdCode& pd) {
    if (seen.insert(pd).second) out.push_back({name, pd});
  };
  for (const auto& d : named_diagrams()) {
    add(d.name, d.pd);
    add(d.name + "*", mirror(d.pd));
  }
  add("twin_bundle", median_diagram(twin_bundle_white()).pd);
  Rng rng(seed);
  for (int i = 0; i < random_count; ++i) {
    const int n = 2 + pick(rng, max_crossings - 1);
    const PdCode pd = median_diagram(random_plane_graph(rng, n)).pd;
    add("random" + std::to_string(i), pd);
    add("random" + std::to_string(i) + "*", mirror(pd));
  }
  return out;
}

PlumbingTree random_tree(Rng& rng, int max_vertices, std::int64_t wmin, std::int64_t wmax) {
  const int n = 1 + pick(rng, max_vertices);
  PlumbingTree t;
  std::uniform_int_distribution<std::int64_t> w(wmin, wmax);
  for (int v = 0; v < n; ++v) t.weights.push_back(w(rng));
  for (int v = 1; v < n; ++v) t.edges.push_back({pick(rng, v), v});
  return t;
}

PlumbingTree random_excessive_tree(Rng& rng, int max_vertices) {
  PlumbingTree t = random_tree(rng, max_vertices, 0, 0);
  const Multigraph g = t.graph();
  for (int v = 0; v < t.size(); ++v)
    t.weights[v] = -std::max(2, g.degree(v)) - pick(rng, 4);
  return t;
}

}  // namespace bdc::testing
