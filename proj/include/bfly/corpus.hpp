#pragma once

#include <bfly/butterfly.hpp>

#include <random>
#include <string>
#include <vector>

// Seeded corpus of small crossed modules and butterflies between them.
namespace bfly::corpus {

struct Named {
  std::string name;
  CrossedModule x;
};

// [Z/4 -2-> Z/4] with odd elements acting by inversion.
CrossedModule inversion_xmod();
// Fixed list of desk-scale crossed modules, |G1|, |G2| <= 6.
std::vector<Named> desk_xmods();

// Every strict morphism h -> g.
std::vector<StrictMorphism> strict_morphisms(const CrossedModule& h, const CrossedModule& g);

struct Edge {
  int from = 0, to = 0;  // node indices
  std::string origin;    // "strict", "cocycle", "group" or "flip"
  Butterfly b;
};

struct Corpus {
  std::vector<Named> nodes;
  std::vector<Edge> edges;
  std::vector<int> leaving(int node) const;
};

// Per ordered pair of nodes: up to per_pair sampled strict morphisms and up to per_pair
// sampled weak cocycles (when the cocycle search is small), every butterfly class out of
// the [1 -> gamma] nodes, and the flip of each equivalence. Only |E| <= max_e is kept.
Corpus generate(std::uint32_t seed, int per_pair = 1, int max_e = 64);

// Random composable chains of the given length (edge indices in order of application).
std::vector<std::vector<int>> chains(const Corpus& c, int length, int count, std::mt19937& rng);

}  // namespace bfly::corpus
