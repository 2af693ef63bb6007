#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "bdc/errors.hpp"
#include "bdc/gf2.hpp"
#include "bdc/goeritz.hpp"
#include "bdc/plumbing.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace bdc;
using namespace bdc::testing;

namespace {

PlumbingTree chain(std::vector<std::int64_t> w) { return linear_plumbing(w); }

PlumbingTree star(std::int64_t centre, std::vector<std::int64_t> legs) {
  PlumbingTree t;
  t.weights.push_back(centre);
  for (auto w : legs) {
    t.edges.push_back({0, t.size()});
    t.weights.push_back(w);
  }
  return t;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
    return ErrorCode::Internal;
  } catch (const Error& e) {
    return e.code();
  }
}

BigInt abs_det(const PlumbingTree& t) { return t.size() == 0 ? BigInt(1) : abs(determinant(t.intersection_form())); }

}  // namespace

TEST(PlumbingTree, FormAndValidation) {
  const PlumbingTree p = chain({-4, -2, -5, -2});
  EXPECT_EQ(p.intersection_form(), (IntMatrix{{-4, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, -5, 1}, {0, 0, 1, -2}}));
  EXPECT_EQ(determinant(p.intersection_form()), 55);
  PlumbingTree neg = chain({-2, -2});
  neg.signs = {-1};
  EXPECT_EQ(neg.intersection_form(), (IntMatrix{{-2, -1}, {-1, -2}}));
  PlumbingTree cyc;
  cyc.weights = {-2, -2, -2};
  cyc.edges = {{0, 1}, {1, 2}, {2, 0}};
  EXPECT_FALSE(cyc.is_tree());
  EXPECT_EQ(code_of([&] { cyc.require_tree(); }), ErrorCode::NotATree);
  EXPECT_TRUE(PlumbingTree{}.is_tree());
}

TEST(Excessive, Examples) {
  EXPECT_TRUE(is_excessive(chain({-4, -2, -5, -2})));
  EXPECT_FALSE(is_excessive(star(-2, {-3, -3, -3})));
  EXPECT_TRUE(is_excessive(chain({-2})));
  EXPECT_FALSE(is_excessive(chain({-1})));
  EXPECT_TRUE(is_excessive(star(-3, {-2, -2, -2})));
}

TEST(NormalForm, Examples) {
  EXPECT_TRUE(check_normal_form(chain({-2, -5, -2})).n2_ok);
  EXPECT_TRUE(check_normal_form(chain({-2, -5, -2})).ok());
  EXPECT_TRUE(check_normal_form(chain({-4, -2, -5, -2})).ok());
  const auto z = check_normal_form(chain({-3, 0, -3}));
  EXPECT_FALSE(z.n1_ok);
  EXPECT_FALSE(z.n2_ok);
  EXPECT_FALSE(check_normal_form(chain({-1, -3})).n1_ok);
  EXPECT_TRUE(check_normal_form(PlumbingTree{}).ok());
}

// Two -2 leaves on one node: the twin-leaf portion.
TEST(NormalForm, TwinLeavesFlagN3) {
  const PlumbingTree t = star(-3, {-2, -2, -4});
  const auto r = check_normal_form(t);
  EXPECT_TRUE(r.n1_ok);
  EXPECT_TRUE(r.n2_ok);
  EXPECT_FALSE(r.n3_ok);
  EXPECT_FALSE(r.n3_violations.empty());
  // the four-leaf star of -2's is an allowed exceptional component
  EXPECT_TRUE(check_normal_form(star(-2, {-2, -2, -2, -2})).n3_ok);
}

TEST(NormalForm, EvenTreesHaveEvenForms) {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    PlumbingTree p = random_tree(rng, 8, -3, -1);
    for (auto& w : p.weights) w *= 2;
    const IntMatrix q = p.intersection_form();
    for (std::size_t i = 0; i < q.rows(); ++i) ASSERT_EQ(q(i, i) % 2, 0);
    const auto r = check_normal_form(p);
    ASSERT_TRUE(r.n1_ok);
    ASSERT_TRUE(r.n2_ok);
  }
}

TEST(Reduce, Examples) {
  const Reduction a = reduce_normal_form(chain({-1}));
  EXPECT_EQ(a.tree.size(), 0);
  ASSERT_EQ(a.log.size(), 1U);
  EXPECT_EQ(a.log[0].kind, MoveKind::R1a);

  const Reduction b = reduce_normal_form(chain({1}));
  EXPECT_EQ(b.tree.size(), 0);

  // det is 0 here, so the chain cannot vanish: it stops at a lone 0
  const Reduction c = reduce_normal_form(chain({-2, -1, -2}));
  EXPECT_EQ(c.tree.weights, std::vector<std::int64_t>{0});
  EXPECT_EQ(determinant(chain({-2, -1, -2}).intersection_form()), 0);
  EXPECT_TRUE(check_normal_form(c.tree).n1_ok);

  const Reduction d = reduce_normal_form(chain({-4, -2, -5, -2}));
  EXPECT_TRUE(d.log.empty());
  EXPECT_EQ(canonical_form(d.tree), canonical_form(chain({-4, -2, -5, -2})));

  // -2 -1 -3: blow down the middle, leaving (-1, -2), then (-1)... to empty
  const Reduction e = reduce_normal_form(chain({-2, -1, -3}));
  EXPECT_EQ(abs_det(e.tree), 1);
  EXPECT_EQ(e.tree.size(), 0);
}

TEST(Reduce, SignsAreNormalized) {
  PlumbingTree t = chain({-2, -3});
  t.signs = {-1};
  const Reduction r = reduce_normal_form(t);
  ASSERT_FALSE(r.log.empty());
  EXPECT_EQ(r.log[0].kind, MoveKind::R0);
  for (int s : r.tree.signs) EXPECT_EQ(s, 1);
}

TEST(Reduce, ZeroChainAbsorption) {
  const Reduction r = reduce_normal_form(chain({-3, 0, -4, -2}));
  // -3 and -4 merge into -7
  EXPECT_EQ(canonical_form(r.tree), canonical_form(chain({-7, -2})));
  bool saw = false;
  for (const auto& m : r.log) saw = saw || m.kind == MoveKind::ZeroChain;
  EXPECT_TRUE(saw);
}

TEST(Reduce, ZeroLeafSplits) {
  // the 0 leaf cancels -3; what is left is two separate vertices
  const Reduction r = reduce_normal_form(star(-3, {0, -2, -4}));
  EXPECT_EQ(canonical_form(r.tree), canonical_form(PlumbingTree{{-2, -4}, {}, {}, {}}));
  EXPECT_TRUE(check_normal_form(r.tree).ok());
  // a 0 leaf on anything collapses a two-vertex tree to nothing
  EXPECT_EQ(reduce_normal_form(chain({-7, 0})).tree.size(), 0);
}

// Independent random move orders give isomorphic results, determinant is
// preserved, and the result passes N1.
TEST(Reduce, ConfluenceOverSeeds) {
  Rng rng(100);
  for (int t = 0; t < 300; ++t) {
    const PlumbingTree p = random_tree(rng, 8, -5, -1);
    const Reduction base = reduce_normal_form(p);
    ASSERT_EQ(abs_det(base.tree), abs_det(p));
    ASSERT_TRUE(check_normal_form(base.tree).n1_ok);
    ASSERT_TRUE(check_normal_form(base.tree).n2_ok);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Reduction r = reduce_normal_form(p, seed * 7919 + static_cast<std::uint64_t>(t));
      ASSERT_EQ(canonical_form(r.tree), canonical_form(base.tree)) << canonical_form(p);
    }
  }
}

// Mixed-sign weights exercise the positive-chain and zero moves; every
// result satisfies N1 and N2.
TEST(Reduce, MixedWeightsReachN1N2) {
  Rng rng(4242);
  for (int t = 0; t < 1500; ++t) {
    const PlumbingTree p = random_tree(rng, 8, -4, 4);
    const Reduction a = reduce_normal_form(p);
    const auto r = check_normal_form(a.tree);
    ASSERT_TRUE(r.n1_ok) << canonical_form(p);
    ASSERT_TRUE(r.n2_ok) << canonical_form(p);
    ASSERT_EQ(abs_det(a.tree), abs_det(p));
    const Reduction b = reduce_normal_form(p, static_cast<std::uint64_t>(t) + 1);
    ASSERT_EQ(canonical_form(a.tree), canonical_form(b.tree)) << canonical_form(p);
  }
}

TEST(CanonicalForm, IsomorphismInvariant) {
  PlumbingTree a = star(-3, {-2, -4, -5});
  PlumbingTree b;
  b.weights = {-5, -4, -3, -2};
  b.edges = {{2, 0}, {1, 2}, {2, 3}};
  EXPECT_EQ(canonical_form(a), canonical_form(b));
  EXPECT_NE(canonical_form(a), canonical_form(chain({-2, -3, -4, -5})));
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const PlumbingTree p = random_tree(rng, 8, -6, 2);
    std::vector<int> perm(static_cast<std::size_t>(p.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    PlumbingTree q;
    q.weights.resize(p.weights.size());
    for (int v = 0; v < p.size(); ++v) q.weights[perm[v]] = p.weights[v];
    for (const auto& e : p.edges) q.edges.push_back({perm[e.v], perm[e.u]});
    ASSERT_EQ(canonical_form(p), canonical_form(q));
  }
}

TEST(Decide, Examples) {
  const PlumbedDecision a = decide_plumbed(chain({-4, -2, -5, -2}));
  EXPECT_EQ(a.verdict, Decision::No);
  EXPECT_EQ(a.det, 55);
  EXPECT_EQ(a.odd_vertices, std::vector<int>{2});

  const PlumbedDecision b = decide_plumbed(chain({-2, -2}));
  EXPECT_EQ(b.verdict, Decision::Yes);
  EXPECT_EQ(b.det, 3);

  EXPECT_EQ(code_of([] { decide_plumbed(star(-2, {-3, -3, -3})); }), ErrorCode::NotExcessive);
  const PlumbedDecision c = decide_plumbed(chain({-3, -3}));
  EXPECT_EQ(c.verdict, Decision::HypothesesNotMet);
  EXPECT_NE(c.reason.find("EvenDeterminant"), std::string::npos);
}

// YES exactly when every weight is even, which is exactly when the white
// graph rebuilt from the tree is special.
TEST(Decide, ParityPredicateOnRandomTrees) {
  Rng rng(555);
  int checked = 0;
  while (checked < 300) {
    const PlumbingTree t = random_excessive_tree(rng, 8);
    const PlumbedDecision d = decide_plumbed(t);
    if (d.verdict == Decision::HypothesesNotMet) continue;
    bool even = true;
    for (auto w : t.weights) even = even && w % 2 == 0;
    ASSERT_EQ(d.verdict == Decision::Yes, even);
    const MarkedGraph w = close_with_hub(t.graph(), t.weights);
    bool special = true;
    for (int v = 0; v < w.graph.vertex_count(); ++v) special = special && w.graph.degree(v) % 2 == 0;
    ASSERT_EQ(d.verdict == Decision::Yes, special);
    ++checked;
  }
}

// A node with two -2 leaves (plus a -3 leaf, so the shape is never one of
// the exceptional components) forces an even number of characteristic
// subgraphs.
TEST(Decide, TwinLeavesGiveEvenCount) {
  Rng rng(808);
  for (int t = 0; t < 200; ++t) {
    PlumbingTree p = random_tree(rng, 6, -5, -2);
    const int node = static_cast<int>(rng() % static_cast<unsigned>(p.size()));
    for (std::int64_t w : {-2, -2, -3}) {
      p.edges.push_back({node, p.size()});
      p.weights.push_back(w);
    }
    const auto ind = characteristic_indicators(p.intersection_form());
    ASSERT_EQ(ind.size() % 2, 0U);
    ASSERT_FALSE(check_normal_form(p).n3_ok);
  }
}

TEST(NegCf, Examples) {
  EXPECT_EQ(neg_cf(16, 9), (std::vector<std::int64_t>{2, 5, 2}));
  EXPECT_EQ(neg_cf(3, 1), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(neg_cf(5, 2), (std::vector<std::int64_t>{3, 2}));
  EXPECT_EQ(code_of([] { neg_cf(4, 2); }), ErrorCode::InvalidFraction);
  EXPECT_EQ(code_of([] { neg_cf(2, 3); }), ErrorCode::InvalidFraction);
  EXPECT_EQ(code_of([] { neg_cf(5, 0); }), ErrorCode::InvalidFraction);
}

TEST(NegCf, DeterminantIsP) {
  for (std::int64_t p = 2; p < 60; ++p)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto a = neg_cf(p, q);
      std::vector<long long> w;
      for (auto x : a) {
        ASSERT_GE(x, 2);
        w.push_back(-x);
      }
      ASSERT_EQ(abs(continuant(w)), p);
      ASSERT_EQ(abs_det(linear_plumbing(std::vector<std::int64_t>(w.begin(), w.end()))), p);
    }
}

TEST(Berge, Examples) {
  const BergePair a = berge_ipm(3, 5);
  EXPECT_EQ(a.plus.p, 16);
  EXPECT_EQ(a.plus.q, 7);
  ASSERT_TRUE(a.minus);
  EXPECT_EQ(a.minus->p, 14);
  EXPECT_EQ(a.minus->q, ((-25 % 14) + 14) % 14);
  const BergePair b = berge_ipm(1, 1);
  EXPECT_EQ(b.plus.p, 2);
  EXPECT_EQ(b.plus.q, 1);
  EXPECT_FALSE(b.minus);
  EXPECT_EQ(code_of([] { berge_ipm(2, 4); }), ErrorCode::NotCoprime);
  EXPECT_EQ(code_of([] { berge_ipm(0, 4); }), ErrorCode::InvalidFraction);
  // L(16,9) and L(16,7) are the same lens space up to orientation: 7*9 = 63 = -1 mod 16
  EXPECT_EQ((a.plus.q * 9) % 16, 15);
}

TEST(Witness, Examples) {
  const std::vector<std::int64_t> tri_w{-3, -3, -3};
  const AccessibleWitness a = accessible_witness(cycle_graph(3), tri_w);
  EXPECT_EQ(a.hub_multiplicity, (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(a.form.matrix, (IntMatrix{{-3, 1, 1}, {1, -3, 1}, {1, 1, -3}}));
  EXPECT_TRUE(a.white.satisfies_euler());

  const std::vector<std::int64_t> pw{-4, -2, -5, -2};
  const AccessibleWitness b = accessible_witness(path_graph(4), pw);
  EXPECT_EQ(b.hub_multiplicity, (std::vector<std::int64_t>{3, 0, 3, 1}));
  EXPECT_EQ(b.form.matrix, chain(pw).intersection_form());

  const std::vector<std::int64_t> bad{-1, -3, -3};
  EXPECT_EQ(code_of([&] { accessible_witness(cycle_graph(3), bad); }), ErrorCode::NotAccessibleByConstruction);
  // two triangles sharing an edge are not a cactus
  PlaneGraph k4m(4);
  k4m.add_edge(0, 1);
  k4m.add_edge(1, 2);
  k4m.add_edge(2, 0);
  k4m.add_edge(1, 3);
  k4m.add_edge(3, 2);
  k4m.set_rotation(0, {0, 5});
  k4m.set_rotation(3, {7, 8});
  std::vector<int> r1{1, 2, 6}, r2{3, 4, 9};
  do {
    k4m.set_rotation(1, r1);
    k4m.set_rotation(2, r2);
  } while (!k4m.satisfies_euler() && std::next_permutation(r2.begin(), r2.end()));
  ASSERT_TRUE(k4m.satisfies_euler());
  const std::vector<std::int64_t> w4{-4, -4, -4, -4};
  EXPECT_EQ(code_of([&] { accessible_witness(k4m, w4); }), ErrorCode::NotAccessibleByConstruction);
}

TEST(Witness, RandomExcessiveTrees) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const PlumbingTree p = random_excessive_tree(rng, 8);
    PlaneGraph g(p.size());
    for (const auto& e : p.edges) g.add_edge(e.u, e.v);  // every rotation of a tree is planar
    const AccessibleWitness w = accessible_witness(g, p.weights);
    ASSERT_EQ(w.form.matrix, p.intersection_form());
    ASSERT_TRUE(w.white.satisfies_euler());
    ASSERT_EQ(abs(determinant(w.form.matrix)), spanning_tree_count(w.white.abstract()));
  }
}
