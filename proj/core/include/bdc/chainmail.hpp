#pragma once

// Chainmail links: one unknot per vertex of a plane multigraph, one clasp
// per edge. The simulator works on the graph and the linking matrix only.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bdc/diagram.hpp"
#include "bdc/exact.hpp"
#include "bdc/graph.hpp"

namespace bdc {

struct ChainmailLink {
  PlaneGraph diagram;
  std::vector<std::int64_t> weights;  // framings
  std::vector<int> signs;             // clasp sign per edge, +1 or -1

  int size() const noexcept { return diagram.vertex_count(); }
  /// Framings on the diagonal, signed clasp counts off it.
  IntMatrix linking_matrix() const;
};

/// Throws InvalidEmbedding (Euler check), Disconnected, NotReduced (loop),
/// DimensionMismatch.
ChainmailLink build_chainmail(PlaneGraph d, std::vector<std::int64_t> weights, std::vector<int> signs = {});

/// The reduced white graph with framings -deg_W and positive clasps.
/// `vertex_order` receives the W vertex of each component.
ChainmailLink chainmail_from_white(const PlaneGraph& white, int marked, std::vector<int>* vertex_order = nullptr);

struct Slide {
  int moving = 0;   // component slid (it persists, now L_moving + L_onto)
  int onto = 0;
  bool merge = false;  // joins two components of C rather than contracting a pair
  std::vector<BigInt> framings;  // all framings after the slide
};

struct SlideLog {
  std::vector<Slide> slides;
  int survivor = -1;          // component carrying the whole characteristic sublink
  BigInt final_framing;
  IntMatrix final_linking;
};

/// MK1 on the sublink C (vertex indices of L). Throws
/// EmptyCharacteristicSet, Disconnected, MalformedInput.
SlideLog mk1_run(const ChainmailLink& l, std::span<const int> c);

struct FillingStats {
  std::int64_t b2 = 0;
  std::int64_t sigma = 0;
  bool even_form = false;
  std::int64_t f = 0;
  std::int64_t blow_ups = 0;
  IntMatrix form;
};

/// Blow up meridians of the MK1 survivor until its framing is +-1, then
/// blow it down. Throws NotCharacteristic.
FillingStats kaplan_filling(const ChainmailLink& l, std::span<const int> c);

struct FurutaVerdict {
  bool obstructed = false;             // f >= 9m
  std::optional<bool> inequality_holds;  // 9m >= f + b2 + 16 for the given b2
};

FurutaVerdict furuta_check(std::int64_t m, std::int64_t f, std::optional<std::int64_t> b2 = std::nullopt);

/// b2 >= (10/8)|sigma| + 2, i.e. 8 b2 >= 10 |sigma| + 16.
bool furuta_inequality(std::int64_t b2, std::int64_t sigma);

}  // namespace bdc
