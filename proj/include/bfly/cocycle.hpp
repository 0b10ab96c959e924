#pragma once

#include <bfly/butterfly.hpp>

#include <vector>

namespace bfly {

// Weak-morphism data H -> G: pointed maps p1: H1 -> G1, p2: H2 -> G2 and
// eps: H1 x H1 -> G2 (flat, eps[h * |H1| + h']) normalized on the identity.
struct WeakCocycle {
  std::vector<Elem> p1, p2, eps;
  Elem e(Elem h, Elem h2) const { return eps[static_cast<size_t>(h) * p1.size() + h2]; }
  bool operator==(const WeakCocycle&) const = default;
};

// E = H1 x G2 with (h,g)(h',g') = (hh', eps(h,h')^-1 g^{p1(h')} g').
// Throws NotAGroup when that product is not a group, ButterflyAxiomFails otherwise.
Butterfly butterfly_from_cocycle(const CrossedModule& h, const CrossedModule& g, const WeakCocycle& c);

// s: H1 -> E is a set section of sigma with s(1) = 1. Throws NotASection.
WeakCocycle cocycle_from_butterfly(const Butterfly& p, const std::vector<Elem>& s);

struct CocycleRoundTrip {
  WeakCocycle cocycle;
  Butterfly rebuilt;
  ButterflyIso iso;  // (h, g) -> s(h) iota(g)
};
CocycleRoundTrip cocycle_round_trip(const Butterfly& p, const std::vector<Elem>& s);

// theta(h) = iota^-1(s(h)^-1 s'(h)), checked against the two extracted cocycles.
std::vector<Elem> section_difference(const Butterfly& p, const std::vector<Elem>& s, const std::vector<Elem>& s2);

// theta relates c to c2: p1' = p1 d(theta), p2'(b) = p2(b) theta(d b) and
// theta(hh') eps'(h,h')^-1 = eps(h,h')^-1 theta(h)^{p1(h')} theta(h').
// Throws NotCrossedHom, T1Fails or T2Fails.
void validate_section_difference(const CrossedModule& h, const CrossedModule& g, const WeakCocycle& c,
                                 const WeakCocycle& c2, const std::vector<Elem>& theta);
bool related_by(const CrossedModule& h, const CrossedModule& g, const WeakCocycle& c, const WeakCocycle& c2,
                const std::vector<Elem>& theta);

// Every set section of sigma with s(1) = 1, in lexicographic order; at most `limit`.
std::vector<std::vector<Elem>> sections_of(const Butterfly& p, std::size_t limit);

// Brute force over all normalized triples. Desk scale only.
std::vector<WeakCocycle> enumerate_cocycles(const CrossedModule& h, const CrossedModule& g);

}  // namespace bfly
