#pragma once

// Weighted plumbing trees and the tree instances of Neumann's moves.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bdc/exact.hpp"
#include "bdc/goeritz.hpp"
#include "bdc/graph.hpp"

namespace bdc {

struct PlumbingTree {
  std::vector<std::int64_t> weights;
  std::vector<Edge> edges;
  std::vector<int> signs;            // +1/-1 per edge; empty means all +
  std::vector<std::string> labels;   // optional vertex names for reports

  int size() const noexcept { return static_cast<int>(weights.size()); }
  std::string label(int v) const;
  Multigraph graph() const;
  /// Weighted adjacency (edge signs applied) with the weights on the diagonal.
  IntMatrix intersection_form() const;
  /// Connected and acyclic; the empty tree counts.
  bool is_tree() const;
  /// Throws NotATree.
  void require_tree() const;
  /// Acyclic, possibly disconnected. Throws NotATree.
  void require_forest() const;
};

/// Path a_1 - a_2 - ... - a_n.
PlumbingTree linear_plumbing(std::span<const std::int64_t> weights);

/// w(v) <= min(-2, -deg(v)) at every vertex.
bool is_excessive(const PlumbingTree& t);

struct NormalFormReport {
  bool n1_ok = true;
  bool n2_ok = true;
  bool n3_ok = true;
  std::vector<std::string> n1_violations;
  std::vector<std::string> n2_violations;
  std::vector<std::string> n3_violations;

  bool ok() const noexcept { return n1_ok && n2_ok && n3_ok; }
};

/// Accepts forests; conditions are checked component by component.
NormalFormReport check_normal_form(const PlumbingTree& t);

enum class MoveKind { R0, R1a, R1b, ZeroChain, ZeroLeaf, PositiveChain };
std::string_view to_string(MoveKind k) noexcept;

struct Move {
  MoveKind kind = MoveKind::R0;
  std::string vertex;   // label of the vertex the move acts on
  std::string detail;
};

struct Reduction {
  PlumbingTree tree;
  std::vector<Move> log;
};

/// Applies moves until none applies. The result may be a forest: the
/// zero-leaf move splits a tree into its remaining branches. Without a seed the first applicable
/// move in a fixed order is taken; with a seed the choice is random.
Reduction reduce_normal_form(const PlumbingTree& t, std::optional<std::uint64_t> seed = std::nullopt);

/// Isomorphism invariant of a weighted forest (edge signs ignored).
std::string canonical_form(const PlumbingTree& t);

enum class Decision { Yes, No, HypothesesNotMet };
std::string_view to_string(Decision d) noexcept;

struct PlumbedDecision {
  Decision verdict = Decision::HypothesesNotMet;
  BigInt det;
  std::string reason;
  std::vector<int> odd_vertices;  // vertices with odd weight
};

/// Decides whether the boundary of an excessive tree with odd determinant
/// bounds a simply connected negative definite spin plumbing. Throws
/// NotExcessive; an even determinant yields HypothesesNotMet.
PlumbedDecision decide_plumbed(const PlumbingTree& t);

/// p/q = a_1 - 1/(a_2 - 1/(...)) with every a_i >= 2. Requires p > q >= 1
/// coprime; throws InvalidFraction.
std::vector<std::int64_t> neg_cf(std::int64_t p, std::int64_t q);

struct LensParameters {
  std::int64_t p = 0;
  std::int64_t q = 0;
};

struct BergePair {
  LensParameters plus;                  // p = ik + 1
  std::optional<LensParameters> minus;  // p = ik - 1, absent when p = 0
};

/// Throws NotCoprime when gcd(i,k) != 1, InvalidFraction when i or k < 1.
BergePair berge_ipm(std::int64_t i, std::int64_t k);

struct AccessibleWitness {
  PlaneGraph white;   // D plus the hub, with rotations
  int hub = 0;
  std::vector<std::int64_t> hub_multiplicity;
  GoeritzForm form;   // Goeritz form of the result, diagonal == weights
};

/// Adds a hub in the outer face joined |w(v)| - deg(v) times to each v.
/// Throws NotAccessibleByConstruction if D is not connected, has a loop,
/// is not a cactus, has no face containing every vertex, or is not
/// negative excessive.
AccessibleWitness accessible_witness(const PlaneGraph& d, std::span<const std::int64_t> weights);

}  // namespace bdc
