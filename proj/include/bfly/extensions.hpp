#pragma once

#include <bfly/butterfly.hpp>
#include <bfly/cohomology.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace bfly {

// Out(N) = Aut(N) / Inn(N), Aut(N) as in aut_xmod.
struct OutGroup {
  AutXmod aut;
  Quotient out;
  const Group& group() const { return out.group; }
  Elem aut_index(const std::vector<Elem>& images) const;  // -1 if not an automorphism
  Elem out_class(const std::vector<Elem>& images) const { return out.proj(aut_index(images)); }
};
OutGroup out_group(const Group& n);

// Isomorphism E -> E' inducing the identity on N and on gamma.
std::optional<Hom> extension_iso(const Extension& a, const Extension& b);
bool equivalent(const Extension& a, const Extension& b);

// M -> E -> gamma with M normal, incl injective, proj onto, and Ker proj generated by M and C_K(M).
struct SemiExact {
  Group m, e, gamma;
  Hom incl, proj;
  static SemiExact make(const Hom& incl, const Hom& proj);  // throws NotSemiExact
  static SemiExact of(const Extension& ext) { return make(ext.incl, ext.proj); }
};
// gamma -> Out(M) through conjugation by any lift.
Hom outer_action(const SemiExact& s, const OutGroup& out);
Hom outer_action(const Extension& ext, const OutGroup& out);

// L/I for L = {(x,y) : same image in gamma, same conjugation on M}, I = {(a,a)}.
struct BaerProduct {
  Group group;
  Hom to_gamma;
  Enumerated pairs;    // L, codes x * width + y
  int width = 1;       // |E|
  Quotient quotient;   // L -> L/I
  bool four_term = false;  // 1 -> Z(M) -> C_K0(M) x C_K(M) -> L/I -> gamma -> 1 exact
  Elem cls(Elem x, Elem y) const;  // -1 when (x,y) is not in L
};
BaerProduct baer_product(const SemiExact& s0, const SemiExact& s);  // throws PsiMismatch

// 1 -> Z(N) -> E0 x^N E -> gamma -> 1 with a -> (a, 1).
Extension difference_ext(const Extension& e0, const Extension& e);
// E0 x^C H for H an extension of gamma by C = Z(N), with N -> (a, 1).
Extension act_ext(const Extension& e0, const Extension& h);
// Baer sum of two extensions with the same abelian kernel and action.
Extension baer_sum(const Extension& a, const Extension& b);

// Split extension of a module: (x, a), index x * |A| + a.
Extension split_extension(const GammaModule& m);

struct ExtensionEnumeration {
  Group gamma, n;
  OutGroup out;
  std::vector<Extension> classes;
  std::vector<Hom> psi;         // per class
  long long factor_sets = 0;    // normalized Schreier data found
};
// Classes of extensions of gamma by n, grouped by psi, in deterministic order.
ExtensionEnumeration enumerate_extensions(const Group& gamma, const Group& n,
                                          const std::optional<Hom>& psi = std::nullopt);
ExtensionEnumeration enumerate_extensions_if(const Group& gamma, const Group& n,
                                             const std::function<bool(const Hom&)>& keep_psi);

// For each psi: the differences D(E0, E) against the first class hit every class of
// H^2(gamma, Z(N)) exactly once, and E0 acted on by D(E0, E) is E again.
struct ExtensionTorsorCheck {
  int psi_count = 0;
  bool free = true, transitive = true, recovers = true;
  bool ok() const { return free && transitive && recovers; }
};
ExtensionTorsorCheck check_extension_torsor(const ExtensionEnumeration& en);

// (E, rho) with E an extension of gamma by G2.
struct GroupButterfly {
  Extension ext;
  Hom rho;  // E -> G1
  static GroupButterfly make(const CrossedModule& g, const Extension& ext, const Hom& rho);
};
// Butterfly from [1 -> gamma] to g.
Butterfly to_butterfly(const GroupButterfly& p, const CrossedModule& g);
bool isomorphic(const GroupButterfly& p, const GroupButterfly& q, const CrossedModule& g);
// chi: gamma -> pi1 G
Hom chi_of(const GroupButterfly& p, const HomotopyGroups& hg);

struct ButterflyEnumeration {
  Group gamma;
  CrossedModule g;
  HomotopyGroups hg;
  std::vector<GroupButterfly> classes;
  std::vector<Hom> chi;  // per class
  std::vector<Hom> distinct_chi() const;
  std::vector<int> fiber(const Hom& chi) const;
  // Index of the class isomorphic to p, -1 if none.
  int classify(const GroupButterfly& p) const;
};
ButterflyEnumeration enumerate_butterflies(const Group& gamma, const CrossedModule& g);

// E0 x^{pi2} K with rho(x, a) = rho0(x). Throws ActionMismatch.
GroupButterfly act_h2(const GroupButterfly& p0, const Extension& k, const CrossedModule& g);
// L = {(x,y) : same image in gamma, rho0 x = rho y} modulo {(b,b)}; pi2 -> (a, 1). Throws ChiMismatch.
Extension difference_butterflies(const GroupButterfly& p0, const GroupButterfly& p, const CrossedModule& g);
// K x^{pi2} G2 with rho(k, a) = chi_tilde(k) d(a). Throws NotALift.
GroupButterfly lift_via_section(const Hom& chi_tilde, const Extension& k, const CrossedModule& g);

// pi2 G as a gamma-module through chi.
GammaModule pi2_module(const HomotopyGroups& hg, const Hom& chi);

struct TorsorCheck {
  int fibers = 0;
  bool free = true, transitive = true, inverse = true;
  bool ok() const { return free && transitive && inverse; }
};
// Exhaustive over every chi fiber, every base point and every H^2 class.
TorsorCheck check_torsor(const ButterflyEnumeration& en);

}  // namespace bfly
