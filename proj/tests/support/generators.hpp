#pragma once

#include <random>
#include <string>
#include <vector>

#include "bdc/diagram.hpp"
#include "bdc/graph.hpp"
#include "bdc/plumbing.hpp"

namespace bdc::testing {

using Rng = std::mt19937_64;

/// Connected, loopless, bridgeless plane multigraph with exactly `edges`
/// edges (>= 2), grown by chords and ears inside random faces.
PlaneGraph random_plane_graph(Rng& rng, int edges);

/// Connected loopless multigraph (no embedding).
Multigraph random_multigraph(Rng& rng, int max_vertices, int max_edges);

/// Two vertices joined by k parallel edges.
PlaneGraph bundle_graph(int k);

/// n-cycle with vertices 0..n-1.
PlaneGraph cycle_graph(int n);

/// Path 0 - 1 - ... - n-1.
PlaneGraph path_graph(int n);

/// White graph of the special knot with Goeritz form [[-4,1],[1,-4]]:
/// hub 0 joined three times to each of 1 and 2, plus one edge 1-2.
PlaneGraph twin_bundle_white();

struct NamedDiagram {
  std::string name;
  PdCode pd;
};

std::vector<NamedDiagram> named_diagrams();

/// Named diagrams, their mirrors, and medians of random plane graphs with
/// 2..max_crossings edges (plus mirrors), all distinct as PD codes.
std::vector<NamedDiagram> diagram_corpus(std::uint64_t seed, int random_count, int max_crossings);

PlumbingTree random_tree(Rng& rng, int max_vertices, std::int64_t wmin, std::int64_t wmax);

/// Random tree with w(v) <= min(-2, -deg(v)).
PlumbingTree random_excessive_tree(Rng& rng, int max_vertices);

}  // namespace bdc::testing
