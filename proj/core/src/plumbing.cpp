#include "bdc/plumbing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "bdc/errors.hpp"

namespace bdc {

// ---------------------------------------------------------------------------
// PlumbingTree

std::string PlumbingTree::label(int v) const {
  if (static_cast<std::size_t>(v) < labels.size() && !labels[v].empty()) return labels[v];
  return std::to_string(v);
}

Multigraph PlumbingTree::graph() const {
  Multigraph g(size());
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

IntMatrix PlumbingTree::intersection_form() const {
  const auto n = static_cast<std::size_t>(size());
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) q(i, i) = weights[i];
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int s = signs.empty() ? 1 : signs[e];
    q(edges[e].u, edges[e].v) += s;
    q(edges[e].v, edges[e].u) += s;
  }
  return q;
}

bool PlumbingTree::is_tree() const {
  if (size() == 0) return edges.empty();
  const Multigraph g = graph();
  return !g.has_loop() && g.is_connected() && g.edge_count() == size() - 1;
}

void PlumbingTree::require_tree() const {
  require_forest();
  if (!is_tree()) throw Error(ErrorCode::NotATree, "plumbing graph must be a connected acyclic graph");
}

void PlumbingTree::require_forest() const {
  if (!signs.empty() && signs.size() != edges.size())
    throw Error(ErrorCode::DimensionMismatch, "one sign per edge required");
  if (!labels.empty() && labels.size() != weights.size())
    throw Error(ErrorCode::DimensionMismatch, "one label per vertex required");
  for (const auto& e : edges)
    if (e.u < 0 || e.v < 0 || e.u >= size() || e.v >= size())
      throw Error(ErrorCode::MalformedInput, "edge endpoint out of range");
  const Multigraph g = graph();
  if (g.has_loop() || !g.is_forest()) throw Error(ErrorCode::NotATree, "plumbing graph has a cycle");
}

PlumbingTree linear_plumbing(std::span<const std::int64_t> weights) {
  PlumbingTree t;
  t.weights.assign(weights.begin(), weights.end());
  for (int i = 0; i + 1 < t.size(); ++i) t.edges.push_back({i, i + 1});
  return t;
}

bool is_excessive(const PlumbingTree& t) {
  const Multigraph g = t.graph();
  for (int v = 0; v < t.size(); ++v)
    if (t.weights[v] > std::min<std::int64_t>(-2, -g.degree(v))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Moves

std::string_view to_string(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::R0: return "R0";
    case MoveKind::R1a: return "R1a";
    case MoveKind::R1b: return "R1b";
    case MoveKind::ZeroChain: return "zero-chain";
    case MoveKind::ZeroLeaf: return "zero-leaf";
    case MoveKind::PositiveChain: return "positive-chain";
  }
  return "?";
}

namespace {

// Mutable tree used by the reduction engine. Vertices are never renumbered
// while moves run; dead ones are skipped.
struct Work {
  std::vector<std::int64_t> w;
  std::vector<std::set<int>> adj;
  std::vector<bool> alive;
  std::vector<std::string> name;

  explicit Work(const PlumbingTree& t) {
    const auto n = static_cast<std::size_t>(t.size());
    w = t.weights;
    adj.resize(n);
    alive.assign(n, true);
    for (int v = 0; v < t.size(); ++v) name.push_back(t.label(v));
    for (const auto& e : t.edges) {
      adj[e.u].insert(e.v);
      adj[e.v].insert(e.u);
    }
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  int add(std::int64_t weight, std::string label) {
    w.push_back(weight);
    adj.emplace_back();
    alive.push_back(true);
    name.push_back(std::move(label));
    return static_cast<int>(w.size()) - 1;
  }

  void link(int a, int b) {
    adj[a].insert(b);
    adj[b].insert(a);
  }

  void kill(int v) {
    for (int x : adj[v]) adj[x].erase(v);
    adj[v].clear();
    alive[v] = false;
  }

  PlumbingTree freeze() const {
    PlumbingTree t;
    std::vector<int> index(w.size(), -1);
    for (std::size_t v = 0; v < w.size(); ++v)
      if (alive[v]) {
        index[v] = t.size();
        t.weights.push_back(w[v]);
        t.labels.push_back(name[v]);
      }
    for (std::size_t v = 0; v < w.size(); ++v)
      if (alive[v])
        for (int x : adj[v])
          if (static_cast<int>(v) < x) t.edges.push_back({index[v], index[x]});
    return t;
  }
};

struct Candidate {
  MoveKind kind;
  int v;
};

std::vector<Candidate> applicable(const Work& k) {
  std::vector<Candidate> out;
  for (std::size_t v = 0; v < k.w.size(); ++v) {
    if (!k.alive[v]) continue;
    const int vi = static_cast<int>(v);
    const int deg = k.degree(vi);
    const bool unit = k.w[v] == 1 || k.w[v] == -1;
    if (unit && deg == 0) out.push_back({MoveKind::R1a, vi});
    if (unit && (deg == 1 || deg == 2)) out.push_back({MoveKind::R1b, vi});
    if (k.w[v] == 0 && deg == 2) out.push_back({MoveKind::ZeroChain, vi});
    if (k.w[v] == 0 && deg == 1) out.push_back({MoveKind::ZeroLeaf, vi});
    if (k.w[v] >= 2 && deg <= 2) out.push_back({MoveKind::PositiveChain, vi});
  }
  return out;
}

Move apply(Work& k, const Candidate& c) {
  Move m{c.kind, k.name[c.v], ""};
  switch (c.kind) {
    case MoveKind::R1a:
      m.detail = "delete isolated vertex of weight " + std::to_string(k.w[c.v]);
      k.kill(c.v);
      break;
    case MoveKind::R1b: {
      const std::int64_t eps = k.w[c.v];
      const std::vector<int> nbrs(k.adj[c.v].begin(), k.adj[c.v].end());
      for (int x : nbrs) k.w[x] -= eps;
      k.kill(c.v);
      if (nbrs.size() == 2) {
        k.adj[nbrs[0]].insert(nbrs[1]);
        k.adj[nbrs[1]].insert(nbrs[0]);
      }
      m.detail = "blow down weight " + std::to_string(eps) + " vertex of degree " + std::to_string(nbrs.size());
      break;
    }
    case MoveKind::ZeroChain: {
      const std::vector<int> nbrs(k.adj[c.v].begin(), k.adj[c.v].end());
      const int a = nbrs[0], b = nbrs[1];
      k.kill(c.v);
      k.w[a] += k.w[b];
      const std::vector<int> moved(k.adj[b].begin(), k.adj[b].end());
      for (int x : moved) {
        k.adj[x].erase(b);
        BDC_ASSERT(x != a && !k.adj[a].count(x), "zero-chain absorption would create a cycle");
        k.adj[x].insert(a);
        k.adj[a].insert(x);
      }
      k.adj[b].clear();
      k.alive[b] = false;
      m.detail = "absorb 0-chain, merge " + k.name[a] + " and " + k.name[b];
      k.name[a] = k.name[a] + "+" + k.name[b];
      break;
    }
    case MoveKind::ZeroLeaf: {
      // A 0-framed meridian cancels its neighbour; the other branches
      // become separate components.
      const int v = *k.adj[c.v].begin();
      m.detail = "remove 0-leaf with its neighbour " + k.name[v] + " (weight " + std::to_string(k.w[v]) + ")";
      k.kill(c.v);
      k.kill(v);
      break;
    }
    case MoveKind::PositiveChain: {
      // e-1 blow-ups of -1 on one side, then blow down the vertex at +1:
      // u - e - x  becomes  (u-1) - (-2)^(e-1) - (x-1)
      const std::int64_t e = k.w[c.v];
      const std::vector<int> nbrs(k.adj[c.v].begin(), k.adj[c.v].end());
      const std::string base = k.name[c.v];
      k.kill(c.v);
      int prev = nbrs.empty() ? -1 : nbrs[0];
      if (prev >= 0) k.w[prev] -= 1;
      for (std::int64_t i = 1; i < e; ++i) {
        const int x = k.add(-2, base + "." + std::to_string(i));
        if (prev >= 0) k.link(prev, x);
        prev = x;
      }
      if (nbrs.size() == 2) {
        k.w[nbrs[1]] -= 1;
        k.link(prev, nbrs[1]);
      }
      m.detail = "replace weight " + std::to_string(e) + " by " + std::to_string(e - 1) + " vertices of weight -2";
      break;
    }
    case MoveKind::R0:
      break;
  }
  return m;
}

}  // namespace

Reduction reduce_normal_form(const PlumbingTree& t, std::optional<std::uint64_t> seed) {
  t.require_tree();
  Reduction out;
  if (!t.signs.empty() && std::any_of(t.signs.begin(), t.signs.end(), [](int s) { return s < 0; }))
    out.log.push_back({MoveKind::R0, "", "normalize edge signs to +"});

  Work k(t);
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  const BigInt det0 = abs(determinant(t.intersection_form()));
  // Every move but positive-chain deletes a vertex; positive-chain adds at
  // most |w| - 2 of them, so this bound is generous.
  std::size_t guard = 0, guard_limit = 16;
  for (auto w : t.weights) guard_limit += 4 * static_cast<std::size_t>(w < 0 ? -w : w) + 4;
  while (true) {
    const auto moves = applicable(k);
    if (moves.empty()) break;
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(*rng);
    out.log.push_back(apply(k, moves[pick]));
    if (++guard > guard_limit) throw Error(ErrorCode::NotReducible, "move sequence does not terminate");
    const PlumbingTree now = k.freeze();
    if (!now.graph().is_forest()) throw Error(ErrorCode::NotReducible, "move created a cycle");
    // |det| of the form is |H_1| of the boundary (0 means infinite), so it is a move invariant.
    const BigInt det = now.size() == 0 ? BigInt(1) : BigInt(abs(determinant(now.intersection_form())));
    BDC_ASSERT(det == det0, "move changed |det| of the intersection form");
  }
  out.tree = k.freeze();
  return out;
}

// ---------------------------------------------------------------------------
// Normal form conditions

NormalFormReport check_normal_form(const PlumbingTree& t) {
  t.require_forest();
  NormalFormReport r;
  Work k(t);
  for (const auto& c : applicable(k)) {
    r.n1_ok = false;
    r.n1_violations.push_back(std::string(to_string(c.kind)) + " applies at " + t.label(c.v));
  }

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.size()));
  for (const auto& e : t.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto minus_two_leaves = [&](int v) {
    int n = 0;
    for (int x : adj[v]) n += adj[x].size() == 1 && t.weights[x] == -2;
    return n;
  };

  for (const auto& comp : t.graph().components()) {
    // a lone 0 is S^1 x S^2 and cannot be reduced further
    const bool lone_zero = comp.size() == 1 && t.weights[comp[0]] == 0;
    for (int v : comp)
      if (adj[v].size() <= 2 && t.weights[v] > -2 && !lone_zero) {
        r.n2_ok = false;
        r.n2_violations.push_back("chain vertex " + t.label(v) + " has weight " + std::to_string(t.weights[v]));
      }

    // A node carrying two -2 leaves. Allowed only as a whole component:
    // a chain whose two ends each carry two -2 leaves, or one vertex with
    // four -2 leaves.
    std::vector<int> forked, branch;
    bool leaves_ok = true;
    for (int v : comp) {
      if (adj[v].size() >= 3) branch.push_back(v);
      if (adj[v].size() >= 3 && minus_two_leaves(v) >= 2) forked.push_back(v);
      if (adj[v].size() == 1 && t.weights[v] != -2) leaves_ok = false;
    }
    if (forked.empty()) continue;
    bool exceptional = false;
    if (leaves_ok && branch.size() == 1) exceptional = adj[branch[0]].size() == 4 && comp.size() == 5;
    if (leaves_ok && branch.size() == 2)
      exceptional = std::all_of(branch.begin(), branch.end(),
                                [&](int v) { return adj[v].size() == 3 && minus_two_leaves(v) == 2; });
    if (!exceptional) {
      r.n3_ok = false;
      for (int v : forked) r.n3_violations.push_back("vertex " + t.label(v) + " carries two -2 leaves");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Canonical form

std::string canonical_form(const PlumbingTree& t) {
  const int n = t.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : t.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  auto encode = [&](auto&& self, int v, int parent) -> std::string {
    std::vector<std::string> kids;
    for (int x : adj[v])
      if (x != parent) kids.push_back(self(self, x, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(t.weights[v]);
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::vector<std::string> comps;
  for (const auto& comp : t.graph().components()) {
    std::string best;
    for (int root : comp) {
      std::string s = encode(encode, root, -1);
      if (best.empty() || s < best) best = std::move(s);
    }
    comps.push_back(std::move(best));
  }
  std::sort(comps.begin(), comps.end());
  std::string out;
  for (const auto& c : comps) out += c;
  return out;
}

// ---------------------------------------------------------------------------
// Decision

std::string_view to_string(Decision d) noexcept {
  switch (d) {
    case Decision::Yes: return "YES";
    case Decision::No: return "NO";
    case Decision::HypothesesNotMet: return "HYPOTHESES_NOT_MET";
  }
  return "?";
}

PlumbedDecision decide_plumbed(const PlumbingTree& t) {
  t.require_tree();
  if (t.size() == 0) throw Error(ErrorCode::NotExcessive, "empty plumbing");
  if (!is_excessive(t)) throw Error(ErrorCode::NotExcessive, "some weight exceeds min(-2, -degree)");
  PlumbedDecision d;
  d.det = determinant(t.intersection_form());
  if (d.det % 2 == 0) {
    d.verdict = Decision::HypothesesNotMet;
    d.reason = std::string(to_string(ErrorCode::EvenDeterminant)) + ": determinant " + d.det.str() + " is even";
    return d;
  }
  for (int v = 0; v < t.size(); ++v)
    if (t.weights[v] % 2 != 0) d.odd_vertices.push_back(v);
  if (d.odd_vertices.empty()) {
    d.verdict = Decision::Yes;
    d.reason = "all weights even: the plumbing itself is a spin negative definite filling";
  } else {
    d.verdict = Decision::No;
    d.reason = "odd weight at " + t.label(d.odd_vertices.front()) +
               "; the normal form is the reduced white graph, which is not even";
  }
  return d;
}

// ---------------------------------------------------------------------------
// Lens space arithmetic

std::vector<std::int64_t> neg_cf(std::int64_t p, std::int64_t q) {
  if (!(p > q && q >= 1)) throw Error(ErrorCode::InvalidFraction, "need p > q >= 1");
  if (std::gcd(p, q) != 1) throw Error(ErrorCode::InvalidFraction, "p and q must be coprime");
  std::vector<std::int64_t> out;
  while (q != 0) {
    const std::int64_t a = (p + q - 1) / q;
    out.push_back(a);
    const std::int64_t r = a * q - p;
    p = q;
    q = r;
  }
  return out;
}

BergePair berge_ipm(std::int64_t i, std::int64_t k) {
  if (i < 1 || k < 1) throw Error(ErrorCode::InvalidFraction, "i and k must be positive");
  if (std::gcd(i, k) != 1) throw Error(ErrorCode::NotCoprime, "gcd(i, k) != 1");
  auto make = [&](std::int64_t p) {
    const std::int64_t q = ((-(k * k)) % p + p) % p;
    return LensParameters{p, q};
  };
  BergePair out;
  out.plus = make(i * k + 1);
  if (i * k - 1 > 0) out.minus = make(i * k - 1);
  return out;
}

// ---------------------------------------------------------------------------
// Accessible witness

namespace {

// Every block is a single edge or a cycle.
bool is_cactus(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
  for (int e = 0; e < g.edge_count(); ++e) {
    adj[g.edges()[e].u].push_back({g.edges()[e].v, e});
    adj[g.edges()[e].v].push_back({g.edges()[e].u, e});
  }
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int timer = 0;
  bool ok = true;
  auto dfs = [&](auto&& self, int v, int via) -> void {
    disc[v] = low[v] = timer++;
    for (auto [x, e] : adj[v]) {
      if (e == via) continue;
      if (disc[x] == -1) {
        stack.push_back(e);
        self(self, x, e);
        low[v] = std::min(low[v], low[x]);
        if (low[x] >= disc[v]) {
          std::set<int> verts;
          int edges = 0;
          while (true) {
            const int f = stack.back();
            stack.pop_back();
            ++edges;
            verts.insert(g.edges()[f].u);
            verts.insert(g.edges()[f].v);
            if (f == e) break;
          }
          const bool bridge = edges == 1;
          const bool cycle = edges == static_cast<int>(verts.size());
          if (!bridge && !cycle) ok = false;
        }
      } else if (disc[x] < disc[v]) {
        stack.push_back(e);
        low[v] = std::min(low[v], disc[x]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] == -1) dfs(dfs, v, -1);
  return ok;
}

}  // namespace

AccessibleWitness accessible_witness(const PlaneGraph& d, std::span<const std::int64_t> weights) {
  const int n = d.vertex_count();
  if (static_cast<int>(weights.size()) != n) throw Error(ErrorCode::DimensionMismatch, "one weight per vertex");
  if (n == 0) throw Error(ErrorCode::NotAccessibleByConstruction, "empty graph");
  if (!d.satisfies_euler()) throw Error(ErrorCode::InvalidEmbedding, "rotation system is not planar");
  const Multigraph g = d.abstract();
  if (!g.is_connected()) throw Error(ErrorCode::NotAccessibleByConstruction, "graph is not connected");
  if (g.has_loop()) throw Error(ErrorCode::NotAccessibleByConstruction, "graph has a loop");
  if (!is_cactus(g)) throw Error(ErrorCode::NotAccessibleByConstruction, "two cycles share more than one vertex");
  for (int v = 0; v < n; ++v)
    if (weights[v] > std::min<std::int64_t>(-2, -g.degree(v)))
      throw Error(ErrorCode::NotAccessibleByConstruction,
                  "vertex " + std::to_string(v) + " violates w <= min(-2, -deg)");

  AccessibleWitness out;
  out.hub_multiplicity.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.hub_multiplicity[v] = -weights[v] - g.degree(v);

  // First corner of the outer face at each vertex.
  std::vector<int> corner(static_cast<std::size_t>(n), -1);
  std::vector<int> walk;
  if (d.edge_count() > 0) {
    const auto faces = d.faces();
    const std::vector<int>* outer = nullptr;
    for (const auto& f : faces) {
      std::set<int> seen;
      for (int x : f) seen.insert(d.tail(x));
      if (static_cast<int>(seen.size()) == n) {
        outer = &f;
        break;
      }
    }
    if (!outer) throw Error(ErrorCode::NotAccessibleByConstruction, "no face contains every vertex");
    walk = *outer;
    for (int x : walk)
      if (corner[d.tail(x)] == -1) corner[d.tail(x)] = x;
  }

  PlaneGraph w(n);
  for (const auto& e : d.edges()) w.add_edge(e.u, e.v);
  out.hub = w.add_vertex();
  std::vector<std::vector<int>> hub_darts(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    for (std::int64_t k = 0; k < out.hub_multiplicity[v]; ++k) hub_darts[v].push_back(2 * w.add_edge(v, out.hub));

  for (int v = 0; v < n; ++v) {
    std::vector<int> rot;
    if (d.rotation(v).empty()) {
      rot = hub_darts[v];
    } else {
      for (int x : d.rotation(v)) {
        rot.push_back(x);
        if (x == corner[v]) rot.insert(rot.end(), hub_darts[v].begin(), hub_darts[v].end());
      }
    }
    w.set_rotation(v, std::move(rot));
  }
  std::vector<int> hub_rot;
  std::vector<int> order;
  if (walk.empty()) {
    order.push_back(0);
  } else {
    for (int x : walk)
      if (corner[d.tail(x)] == x) order.push_back(d.tail(x));
  }
  for (int v : order)
    for (auto it = hub_darts[v].rbegin(); it != hub_darts[v].rend(); ++it) hub_rot.push_back(*it + 1);
  w.set_rotation(out.hub, std::move(hub_rot));
  BDC_ASSERT(w.satisfies_euler(), "hub insertion broke planarity");

  MarkedGraph mg{w.abstract(), out.hub};
  out.form = goeritz(mg);
  for (int v = 0; v < n; ++v) {
    BDC_ASSERT(out.form.matrix(v, v) == weights[v], "hub construction missed a weight");
    for (int u = 0; u < n; ++u)
      if (u != v) BDC_ASSERT(out.form.matrix(u, v) == g.multiplicity(u, v), "hub construction changed D");
  }
  out.white = std::move(w);
  return out;
}

}  // namespace bdc
