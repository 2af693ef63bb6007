// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check is exact; oracles live in tests/support.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bdc/chainmail.hpp"
#include "bdc/diagram.hpp"
#include "bdc/errors.hpp"
#include "bdc/goeritz.hpp"
#include "bdc/lattice.hpp"
#include "bdc/plumbing.hpp"
#include "bdc/spinc.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bdc;
using namespace bdc::testing;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> to_components(const std::vector<int>& order, const std::vector<int>& white_vertices) {
  std::vector<int> out;
  for (int v : white_vertices)
    out.push_back(static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin()));
  std::sort(out.begin(), out.end());
  return out;
}

// A vertex whose removal leaves the graph connected.
int non_cut_vertex(Rng& rng, const Multigraph& g) {
  const int n = g.vertex_count();
  const int start = static_cast<int>(rng() % static_cast<unsigned>(n));
  for (int k = 0; k < n; ++k) {
    const int v = (start + k) % n;
    std::vector<int> rest;
    for (int x = 0; x < n; ++x)
      if (x != v) rest.push_back(x);
    if (g.induced(rest).is_connected()) return v;
  }
  throw Failure{"no non-cut vertex"};
}

MarkedGraph single_vertex(std::int64_t w) {
  return close_with_hub(Multigraph(1), std::vector<std::int64_t>{w});
}

PlumbingTree chain(std::vector<std::int64_t> w) { return linear_plumbing(w); }

BigInt abs_det(const PlumbingTree& t) { return t.size() == 0 ? BigInt(1) : abs(determinant(t.intersection_form())); }

// ---------------------------------------------------------------------------

std::string goeritz_reproduction() {
  const auto t0 = Clock::now();
  const PlaneGraph w = twin_bundle_white();
  const MarkedGraph mg{w.abstract(), 0};
  const GoeritzForm g = goeritz(mg);
  require(g.matrix == IntMatrix{{-4, 1}, {1, -4}}, "Goeritz form " + g.matrix.to_string());
  require(determinant(g.matrix) == 15, "det");

  // the same graph as an alternating diagram, marked beside the hub
  const MedianDiagram md = median_diagram(w);
  const KnotDiagram d(md.pd, md.arc_beside(0));
  const Coloring c = checkerboard(d);
  const TaitPair tp = tait_graphs(d, c);
  const GoeritzForm gd = goeritz(tp.white);
  require(gd.matrix == g.matrix, "diagram Goeritz form " + gd.matrix.to_string());
  require(is_special(tp.white, &tp.black), "not special");
  require(d.component_count() == 1, "not a knot");

  auto classes = enumerate_spinc(gd);
  attach_states(classes, d, c, tp.white, gd);
  int spin = 0;
  for (const auto& s : classes)
    if (s.spin) {
      ++spin;
      require(s.d == Rational(1, 2), "spin d = " + to_string(s.d));
    }
  require(spin == 1, "spin classes");
  const double secs = seconds_since(t0);
  require(secs < 1.0, "runtime " + std::to_string(secs));
  return "G=[[-4,1],[1,-4]], det 15, special, d(spin)=1/2";
}

std::string greene_max() {
  const auto t0 = Clock::now();
  const auto corpus = diagram_corpus(2024, 80, 8);
  std::size_t states = 0;
  std::size_t diagrams = 0;
  for (const auto& [name, pd] : corpus) {
    const KnotDiagram d(pd);
    if (d.crossing_count() > 8) continue;
    ++diagrams;
    const Coloring c = checkerboard(d);
    const TaitPair t = tait_graphs(d, c);
    const GoeritzForm g = goeritz(t.white);
    for (const auto& s : kauffman_states(d)) {
      const IntVector v = state_covector(d, c, t.white, s);
      const Rational q = quadform_inverse(g.matrix, v);
      const OrbitMax best = orbit_maximum(g.matrix, v);
      require(q == best.q, name + ": state below its orbit maximum");
      require(orbit_maximum_bruteforce(g.matrix, v).q == best.q, name + ": oracle disagrees");
      ++states;
    }
  }
  const double secs = seconds_since(t0);
  require(diagrams >= 80, "corpus too small");
  require(secs < 300.0, "runtime " + std::to_string(secs));
  return std::to_string(diagrams) + " diagrams, " + std::to_string(states) + " states";
}

std::string counting_laws() {
  std::size_t n = 0;
  for (const auto& [name, pd] : diagram_corpus(7, 80, 8)) {
    const KnotDiagram d(pd);
    const Coloring c = checkerboard(d);
    const TaitPair t = tait_graphs(d, c);
    const GoeritzForm g = goeritz(t.white);
    const BigInt det = abs(determinant(g.matrix));
    auto classes = enumerate_spinc(g);
    require(BigInt(kauffman_states(d).size()) == det, name + ": state count");
    require(spanning_tree_count(t.white.graph) == det, name + ": spanning trees");
    require(BigInt(classes.size()) == det, name + ": Spin^c count");
    attach_states(classes, d, c, t.white, g);
    ++n;
  }
  return std::to_string(n) + " diagrams";
}

void check_char_laws(const MarkedGraph& w) {
  const GoeritzForm g = goeritz(w);
  const auto cs = characteristic_subgraphs(w);
  const std::size_t k = cs.size();
  require(k > 0 && (k & (k - 1)) == 0, "count not a power of two");
  const bool odd = determinant(g.matrix) % 2 != 0;
  require(odd == (k == 1), "odd det vs unique subgraph");
  bool special = true;
  for (int v = 0; v < w.graph.vertex_count(); ++v) special = special && w.graph.degree(v) % 2 == 0;
  const bool has_empty = std::any_of(cs.begin(), cs.end(), [](const CharSubgraph& c) { return c.vertices.empty(); });
  require(has_empty == special, "empty subgraph vs special");
  std::set<std::vector<int>> ours;
  for (const auto& c : cs) ours.insert(c.vertices);
  const auto brute = brute_characteristic_subsets(w);
  require(ours == std::set<std::vector<int>>(brute.begin(), brute.end()), "differs from exhaustive search");
}

// All connected loopless multigraphs on n vertices with e edges, up to
// edge order (multisets of vertex pairs).
void all_multigraphs(int n, int e, const std::function<void(const Multigraph&)>& visit) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<int> pick;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      Multigraph g(n);
      for (int i : pick) g.add_edge(pairs[i].u, pairs[i].v);
      if (g.is_connected()) visit(g);
      return;
    }
    for (std::size_t i = from; i < pairs.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      rec(i, left - 1);
      pick.pop_back();
    }
  };
  rec(0, e);
}

std::string characteristic_laws() {
  std::size_t exhaustive = 0;
  for (int n = 2; n <= 6; ++n)
    for (int e = n - 1; e <= 8; ++e)
      all_multigraphs(n, e, [&](const Multigraph& g) {
        for (int marked = 0; marked < n; ++marked) {
          check_char_laws(MarkedGraph{g, marked});
          ++exhaustive;
        }
      });
  Rng rng(4);
  std::size_t sampled = 0;
  for (int t = 0; t < 4000; ++t) {
    const Multigraph g = random_multigraph(rng, 8, 16);
    if (g.vertex_count() < 2) continue;
    check_char_laws(MarkedGraph{g, static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count()))});
    ++sampled;
  }
  return std::to_string(exhaustive) + " exhaustive (<=6 vertices, <=8 edges), " + std::to_string(sampled) +
         " random (<=8 vertices, <=16 edges)";
}

std::string laplacian_identity() {
  Rng rng(3);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int t = 0; t < 1000; ++t) {
    const Multigraph g = random_multigraph(rng, 8, 16);
    if (g.vertex_count() < 2) {
      --t;
      continue;
    }
    const MarkedGraph w{g, static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count()))};
    const GoeritzForm f = goeritz(w);
    IntVector y(f.m());
    for (auto& x : y) x = coef(rng);
    require(quadform(f.matrix, y) == laplacian_sum(w, y), "identity fails");
  }
  return "1000 pairs";
}

std::string mk1_framing() {
  const auto t0 = Clock::now();
  Rng rng(6);
  int graphs = 0;
  std::size_t slides = 0;
  while (graphs < 500) {
    const PlaneGraph w = random_plane_graph(rng, 3 + static_cast<int>(rng() % 18));
    const Multigraph a = w.abstract();
    const int marked = non_cut_vertex(rng, a);
    const MarkedGraph mg{a, marked};
    std::vector<CharSubgraph> cs;
    for (auto& c : characteristic_subgraphs(mg))
      if (!c.vertices.empty()) cs.push_back(std::move(c));
    if (cs.empty()) continue;
    const CharSubgraph& c = cs[rng() % cs.size()];
    std::vector<int> order;
    const ChainmailLink l = chainmail_from_white(w, marked, &order);
    const std::vector<int> comp = to_components(order, c.vertices);
    const SlideLog log = mk1_run(l, comp);
    require(log.final_framing == -c.cut, "final framing differs from -cut");
    require(log.slides.size() == comp.size() - 1, "slide count");
    IntMatrix cur = l.linking_matrix();
    for (const auto& s : log.slides) {
      IntMatrix e = IntMatrix::identity(cur.rows());
      e(s.onto, s.moving) = 1;
      require(abs(determinant(e)) == 1, "slide not unimodular");
      cur = e.transpose() * cur * e;
      require(cur.diagonal() == IntVector(s.framings.begin(), s.framings.end()), "framings differ from E^T L E");
    }
    require(cur == log.final_linking, "final linking matrix differs");
    slides += log.slides.size();
    ++graphs;
  }
  const double secs = seconds_since(t0);
  require(secs < 60.0, "runtime " + std::to_string(secs));
  return "500 graphs, " + std::to_string(slides) + " slides replayed";
}

std::string kaplan_accounting() {
  const FillingStats one = kaplan_filling(build_chainmail(PlaneGraph(1), {-3}), std::vector<int>{0});
  require(one.b2 == 2 && one.sigma == 2 && one.even_form, "[-3] gives (" + std::to_string(one.b2) + "," +
                                                             std::to_string(one.sigma) + ")");
  Rng rng(8);
  std::size_t runs = 0;
  for (int t = 0; t < 300; ++t) {
    const PlaneGraph w = random_plane_graph(rng, 3 + t % 15);
    const int marked = non_cut_vertex(rng, w.abstract());
    std::vector<int> order;
    const ChainmailLink l = chainmail_from_white(w, marked, &order);
    const auto m = static_cast<std::int64_t>(l.size());
    for (const auto& c : characteristic_subgraphs(MarkedGraph{w.abstract(), marked})) {
      const FillingStats st = kaplan_filling(l, to_components(order, c.vertices));
      require(st.even_form, "diagonal not even");
      require(st.f == c.cut, "f differs from cut");
      if (st.f >= 1) require(st.b2 == m + st.f - 2 && st.sigma == -m + st.f, "b2/sigma accounting");
      require(BigInt(abs(inertia(st.form).signature())) <= BigInt(st.b2), "form signature exceeds rank");
      ++runs;
    }
  }
  return "[-3] -> (2,2), " + std::to_string(runs) + " fillings";
}

std::string obstruction_thresholds() {
  const ObstructionReport nine = obstruction_report(single_vertex(-9));
  require(nine.cutbound.verdict == Verdict::Obstructed, "[-9] cut bound");
  require(nine.capbound.verdict == Verdict::Obstructed, "[-9] 9m bound");

  const PlaneGraph path = path_graph(4);
  const std::vector<std::int64_t> pw{-4, -2, -5, -2};
  const AccessibleWitness wit = accessible_witness(path, pw);
  const ObstructionReport p = obstruction_report(MarkedGraph{wit.white.abstract(), wit.hub});
  require(p.cutbound.verdict == Verdict::Inconclusive && p.cutbound.f == 2 && p.cutbound.threshold == 4,
          "path verdict");
  require(p.capbound.verdict == Verdict::Inconclusive, "path 9m verdict");

  Rng rng(12);
  std::size_t applicable = 0;
  for (int t = 0; t < 400; ++t) {
    const PlaneGraph w = random_plane_graph(rng, 2 + t % 16);
    const ObstructionReport r = obstruction_report(MarkedGraph{w.abstract(), 0});
    if (r.capbound.verdict == Verdict::Obstructed && r.cutbound.verdict != Verdict::NotApplicable)
      require(r.cutbound.verdict == Verdict::Obstructed, "9m bound without cut bound");
    if (r.cutbound.verdict != Verdict::NotApplicable) ++applicable;
  }
  for (std::int64_t a = -2; a >= -30; --a) {
    const ObstructionReport r = obstruction_report(single_vertex(a));
    if (r.capbound.verdict == Verdict::Obstructed && r.cutbound.verdict != Verdict::NotApplicable)
      require(r.cutbound.verdict == Verdict::Obstructed, "9m bound without cut bound");
    ++applicable;
  }
  return "[-9] obstructed by both, path inconclusive (f=2<m=4), implication on " + std::to_string(applicable) + " cases";
}

std::string mu_bar_consistency() {
  const ObstructionReport three = obstruction_report(single_vertex(-3));
  require(three.mu_bar && three.mu_bar->size() == 1 && three.mu_bar->front().value == Rational(1, 4), "[-3] mu_bar");
  Rng rng(9);
  std::size_t entries = 0;
  for (int t = 0; t < 400; ++t) {
    const PlumbingTree tr = random_excessive_tree(rng, 8);
    const MarkedGraph w = close_with_hub(tr.graph(), tr.weights);
    const ObstructionReport r = obstruction_report(w);
    require(r.mu_bar.has_value(), "tree input without mu_bar");
    const auto m = static_cast<std::int64_t>(r.m);
    for (std::size_t i = 0; i < r.mu_bar->size(); ++i) {
      require(8 * (*r.mu_bar)[i].value == Rational(r.characteristic[i].cut - m), "8 mu_bar != f - m");
      // mu_bar straight from the plumbing, independent of the graph
      require(mu_bar(tr, r.characteristic[i].vertices) == (*r.mu_bar)[i].value, "plumbing mu_bar differs");
      ++entries;
    }
  }
  return "[-3] -> 1/4, " + std::to_string(entries) + " tree entries";
}

std::string neumann_engine() {
  for (std::int64_t e : {-1, 1}) {
    const Reduction r = reduce_normal_form(chain({e}));
    require(r.tree.size() == 0, "isolated unit vertex did not vanish");
  }
  require(check_normal_form(chain({-2, -5, -2})).n2_ok, "(-2,-5,-2) fails N2");
  Rng rng(10);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const PlumbingTree p = random_tree(rng, 8, -5, 1);
    const Reduction a = reduce_normal_form(p, seed);
    const Reduction b = reduce_normal_form(p, seed + 1000003);
    const Reduction c = reduce_normal_form(p);
    require(canonical_form(a.tree) == canonical_form(b.tree) && canonical_form(a.tree) == canonical_form(c.tree),
            "normal forms differ for " + canonical_form(p));
    require(abs_det(a.tree) == abs_det(p), "|det| changed");
    const NormalFormReport nf = check_normal_form(a.tree);
    require(nf.n1_ok && nf.n2_ok, "result violates N1/N2");
  }
  return "unit vertices vanish, 100 seeds confluent, (-2,-5,-2) passes N2";
}

std::string plumbed_decision() {
  require(decide_plumbed(chain({-4, -2, -5, -2})).verdict == Decision::No, "(-4,-2,-5,-2)");
  require(decide_plumbed(chain({-2, -2})).verdict == Decision::Yes, "(-2,-2)");
  Rng rng(11);
  int checked = 0;
  int yes = 0;
  while (checked < 200) {
    const PlumbingTree t = random_excessive_tree(rng, 8);
    if (abs_det(t) % 2 == 0) continue;
    const PlumbedDecision d = decide_plumbed(t);
    bool even = true;
    for (auto w : t.weights) even = even && w % 2 == 0;
    require((d.verdict == Decision::Yes) == even && d.verdict != Decision::HypothesesNotMet, "parity predicate");
    yes += d.verdict == Decision::Yes ? 1 : 0;
    ++checked;
  }
  return "examples agree, 200 trees (" + std::to_string(yes) + " YES)";
}

std::string arithmetic() {
  require(neg_cf(16, 9) == std::vector<std::int64_t>{2, 5, 2}, "neg_cf(16,9)");
  const BergePair b = berge_ipm(3, 5);
  require(b.plus.p == 16 && b.plus.q == 7, "berge(3,5) = (" + std::to_string(b.plus.p) + "," + std::to_string(b.plus.q) + ")");
  require(abs_det(chain({-2, -5, -2})) == 16, "|det P(-2,-5,-2)|");
  require(continuant({2, 5, 2}) == 16, "continuant oracle");
  return "[2,5,2], (16,7), 16";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"Goeritz reproduction", goeritz_reproduction},
      {"state covectors attain orbit maxima", greene_max},
      {"states = |det| = spanning trees = Spin^c classes", counting_laws},
      {"characteristic subgraph laws", characteristic_laws},
      {"Laplacian identity", laplacian_identity},
      {"MK1 final framing", mk1_framing},
      {"Kaplan accounting", kaplan_accounting},
      {"obstruction thresholds", obstruction_thresholds},
      {"mu_bar consistency", mu_bar_consistency},
      {"Neumann engine", neumann_engine},
      {"plumbed spin decision", plumbed_decision},
      {"lens space arithmetic", arithmetic},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      detail = check();
      ok = true;
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", seconds_since(t0));
    std::cout << (ok ? "PASS " : "FAIL ") << index << ". " << name << " [" << secs << "] " << detail << std::endl;
    if (!ok) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
