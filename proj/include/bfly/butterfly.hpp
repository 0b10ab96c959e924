#pragma once

#include <bfly/xmod.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bfly {

//   H2        G2
//     kappa  iota
//         E
//     sigma  rho
//   H1        G1
struct Butterfly {
  CrossedModule h, g;  // source, target
  Group e;
  Hom iota, kappa, sigma, rho;

  // Validates every butterfly axiom. Throws ButterflyAxiomFails, NotComplex, NESWNotExact or EquivarianceFails.
  static Butterfly make(const CrossedModule& h, const CrossedModule& g, const Hom& iota, const Hom& kappa,
                        const Hom& sigma, const Hom& rho);
};

struct ButterflyIso {
  Hom f;  // P.e -> P'.e
};

bool is_butterfly_iso(const Butterfly& p, const Butterfly& q, const Hom& f);
std::optional<ButterflyIso> find_isomorphism(const Butterfly& p, const Butterfly& q);
bool isomorphic(const Butterfly& p, const Butterfly& q);

// E = H1 ⋉ G2 with index x * |G2| + alpha.
Butterfly of_strict(const StrictMorphism& p);
Butterfly identity_butterfly(const CrossedModule& x);
Butterfly trivial_butterfly(const CrossedModule& h, const CrossedModule& g);

struct StrictSplitting {
  StrictMorphism morphism;
  ButterflyIso iso;  // of_strict(morphism) -> P
};
// s: H1 -> E a homomorphic section of sigma. Throws NotASection.
StrictSplitting splitting_to_strict(const Butterfly& p, const Hom& s);
// The section h -> (h, 1) of of_strict(q).
Hom canonical_splitting(const Butterfly& strict_butterfly);

struct Span {
  CrossedModule mid;  // [H2 x G2 -> E]
  StrictMorphism to_h, to_g;
};
Span span_of(const Butterfly& p);

Hom pi1_map(const Butterfly& p);
// beta -> the alpha with iota(alpha) = kappa(beta)^-1
Hom pi2_map(const Butterfly& p);

// q: K -> H, p: H -> G
Butterfly compose(const Butterfly& q, const Butterfly& p);
Butterfly compose_special_strict_first(const StrictMorphism& q, const Butterfly& p);
Butterfly compose_special_strict_second(const Butterfly& q, const StrictMorphism& p);

bool is_equivalence(const Butterfly& p);
Butterfly flip(const Butterfly& p);

struct Kernel {
  CrossedModule xmod;    // [H2 -> Ker rho]
  Subgroup ker_rho;      // inside E
  StrictMorphism incl;   // (id, sigma) to H
};
Kernel kernel(const Butterfly& p);

struct Cokernel {
  Quotient coker_kappa;  // E / kappa(H2)
  Hom rho_bar;           // Coker kappa -> G1
  Subgroup pi2;          // Ker rho_bar
  Cosets pi1;            // G1 / image of rho_bar, pointed at the class of 1
};
Cokernel cokernel(const Butterfly& p);

struct FiberHomology {
  Cosets h0;            // left cosets g rho(E)
  Subgroup ker_rho;
  Quotient h1;          // Ker rho / kappa(H2)
  Subgroup h2;          // Ker kappa
};
FiberHomology fiber_homology(const Butterfly& p);

// A sequence of pointed maps T0 -> T1 -> ... ; maps[i] sends terms[i] to terms[i+1], basepoints are 0.
struct SequenceCheck {
  std::vector<std::string> terms;
  std::vector<int> sizes;
  std::vector<std::vector<int>> maps;
  std::vector<char> exact;  // exactness at each interior term
  bool ok() const;
  int first_failure() const;  // -1 when exact
};
SequenceCheck check_sequence(std::vector<std::string> terms, std::vector<int> sizes,
                             std::vector<std::vector<int>> maps);
SequenceCheck les_fiber(const Butterfly& p);
SequenceCheck les_kernel(const Butterfly& p);
// pi1 Ker P -> pi2 Coker P induced by Ker rho -> E / kappa(H2) is an isomorphism.
bool kernel_cokernel_match(const Butterfly& p);
bool kernel_and_cokernel_trivial(const Butterfly& p);

// delta: F -> E with sigma δ = rho', δ iota' = kappa, δ kappa' = 1, rho δ = 1
std::optional<Hom> triviality_witness(const Butterfly& q, const Butterfly& p);

struct ExactnessReport {
  bool exact = false;       // cokernel of K -> Ker P is trivial
  bool four_term = false;   // 1 -> K2 -> F -> E -> G1 exact at F and E
  Hom delta;
  Butterfly to_kernel;      // K -> Ker P
};
// Exactness for one trivialization delta. Throws PrecondFails if delta is not a witness.
ExactnessReport exactness_for(const Butterfly& q, const Butterfly& p, const Hom& delta);
// Tries every trivialization and reports an exact one if any exists.
// Throws PrecondFails when P∘Q is not trivial.
ExactnessReport is_exact_at(const Butterfly& q, const Butterfly& p);

// Braidings as flat |G1| x |G1| tables into G2, {x, y} at x * |G1| + y.
using Braiding = std::vector<Elem>;
void validate_braiding(const CrossedModule& x, const Braiding& b);
// Throws NotBraided with the first failing pair.
void check_braided(const Butterfly& p, const Braiding& bh, const Braiding& bg);
bool is_braided_butterfly(const Butterfly& p, const Braiding& bh, const Braiding& bg);
// [E / kappa(H2) -> G1] with x^g = x iota({rho(x)^-1, g^-1}).
CrossedModule braided_cokernel(const Butterfly& p, const Braiding& bg);

}  // namespace bfly
