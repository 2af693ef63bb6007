#pragma once

// Spin^c structures of the branched double cover as orbits of
// characteristic covectors under 2 im(G), their d-invariants, the
// characteristic subgraphs and the obstruction verdicts built from them.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bdc/diagram.hpp"
#include "bdc/exact.hpp"
#include "bdc/goeritz.hpp"
#include "bdc/lattice.hpp"
#include "bdc/plumbing.hpp"

namespace bdc {

/// v_i == G_ii (mod 2) for all i.
bool is_characteristic(const IntMatrix& g, const IntVector& v);

/// Reduced representative of the orbit v + 2 G Z^m. Equal keys iff same orbit.
IntVector canonical_key(const IntMatrix& g, const IntVector& v);

/// Orbit test: G^{-1}(v - w)/2 integral.
bool same_spinc_class(const IntMatrix& g, const IntVector& v, const IntVector& w);

struct SpinCClass {
  IntVector representative;            // a maximizer of q in the orbit
  IntVector canonical_key;
  Rational q;                          // max q over the orbit
  Rational d;                          // (q + m) / 4
  std::optional<IntVector> c1_class;   // class of v in coker(G), odd det only
  std::optional<int> state_index;      // originating Kauffman state
  bool spin = false;                   // c1 class zero (odd det only)
};

/// All |det G| classes ordered by canonical key. Throws Singular and
/// CertificationFailure (form not negative definite).
std::vector<SpinCClass> enumerate_spinc(const GoeritzForm& g, unsigned threads = 1);

/// Max of (q(v) + m)/4 over the orbit of v.
Rational d_invariant(const IntMatrix& g, const IntVector& v);

/// Attaches each Kauffman state of d to its class and checks that the
/// state covector attains the orbit maximum. Throws CertificationFailure
/// if the map is not a bijection or the maximum is missed.
void attach_states(std::vector<SpinCClass>& classes, const KnotDiagram& d, const Coloring& c,
                   const TaitGraph& white, const GoeritzForm& g);

struct CharSubgraph {
  std::vector<int> vertices;   // vertices of W (never the marked one)
  std::int64_t cut = 0;        // edges of W leaving the subset
};

/// Solutions of G y == diag(G) (mod 2), smallest first. Each one is
/// re-checked against the parity condition on the graph itself.
std::vector<CharSubgraph> characteristic_subgraphs(const MarkedGraph& w);

/// Parity condition e_W(v, C) == deg_W(v) (mod 2) at every unmarked v.
bool satisfies_parity_condition(const MarkedGraph& w, std::span<const int> subset);

/// (sigma(Q) - w_C^T Q w_C) / 8 for a plumbing tree and a characteristic
/// subset of its vertices. Throws NotATree, NotCharacteristic.
Rational mu_bar(const PlumbingTree& t, std::span<const int> subset);

enum class Verdict { Obstructed, Inconclusive, NotApplicable };
std::string_view to_string(Verdict v) noexcept;

struct CutBound {
  Verdict verdict = Verdict::NotApplicable;
  std::string reason;
  std::int64_t f = 0;          // min cut over characteristic subgraphs
  std::int64_t threshold = 0;  // m
};

struct CapEntry {
  std::vector<int> vertices;
  std::int64_t f = 0;
  Verdict verdict = Verdict::Inconclusive;
};

struct CapBound {
  Verdict verdict = Verdict::NotApplicable;
  std::string reason;
  std::int64_t threshold = 0;  // 9m
  std::int64_t min_f = 0;
  std::vector<CapEntry> entries;
};

struct MuBarEntry {
  std::vector<int> vertices;
  Rational value;
  Rational ue_lower;   // -8 mu / 9
  Rational ue_upper;   // -8 mu
};

struct ObstructionReport {
  std::size_t m = 0;
  BigInt det;
  bool special = false;
  std::size_t tait_b2_bound = 0;       // b2 <= m, sharp iff special
  std::optional<BigInt> spin_b2_bound;  // q(v_spin) + m, odd det only
  std::vector<CharSubgraph> characteristic;
  CutBound cutbound;
  CapBound capbound;
  std::optional<std::vector<MuBarEntry>> mu_bar;  // reduced graph a tree
  std::string mu_bar_reason;
};

ObstructionReport obstruction_report(const MarkedGraph& w);

}  // namespace bdc
