#pragma once

#include <bfly/extension.hpp>
#include <bfly/linalg.hpp>
#include <bfly/xmod.hpp>

#include <random>
#include <vector>

namespace bfly {

// A finite abelian group a with a right action of gamma.
struct GammaModule {
  Group gamma, a;
  RightAction action;

  static GammaModule make(const RightAction& action);  // throws NotAbelian
  static GammaModule trivial(const Group& gamma, const Group& a);
  Elem act(Elem x, Elem g) const { return action.apply(x, g); }
};

// n-cochains are flat arrays over gamma^n, (g1..gn) at ((g1 * |G| + g2) * |G| + ...).
using Cochain = std::vector<Elem>;

// (df)(g1..g{n+1}) = f(g2..) + sum_i (-1)^i f(..g_i g_{i+1}..) + (-1)^{n+1} f(g1..gn)^{g{n+1}}
Cochain coboundary(const GammaModule& m, const Cochain& f, int n);
bool is_normalized(const GammaModule& m, const Cochain& f, int n);
bool is_cocycle(const GammaModule& m, const Cochain& f, int n);

// H^n of the normalized bar complex, n in 0..3.
struct Cohomology {
  GammaModule module;
  int degree = 0;
  std::vector<linalg::Int> orders;  // H^n = sum of Z/orders[i]
  std::vector<Cochain> generators;  // cocycle for each cyclic factor

  long long order() const;
  std::vector<linalg::Int> invariants() const;
  // Class coordinates of a normalized cocycle. Throws NotACocycle.
  std::vector<linalg::Int> coordinates(const Cochain& z) const;
  bool is_zero(const Cochain& z) const;
  bool same_class(const Cochain& z, const Cochain& w) const;
  Cochain representative(const std::vector<linalg::Int>& coords) const;

  // internal
  std::vector<linalg::Int> cmod;  // modulus of each cochain coordinate
  linalg::Int expo = 1;
  linalg::Matrix dn;              // scaled coboundary C^n -> C^{n+1}
  linalg::Matrix v, vinv;         // kernel coordinates
  std::vector<linalg::Int> k, ell;
  linalg::Matrix v2;              // quotient coordinates
  std::vector<int> kept;          // which quotient coordinates are nontrivial
};
Cohomology h_n(const GammaModule& m, int n);

// Twisted product on gamma x A: (x,a)(y,b) = (xy, f(x,y) a^y b), index x * |A| + a.
Extension extension_from_2cocycle(const GammaModule& m, const Cochain& z);
// Module structure on an abelian kernel through the conjugation action.
GammaModule module_of_extension(const Extension& e);
// f(x,y) = s(xy)^-1 s(x) s(y), pulled back to the kernel. Throws NotASection.
Cochain two_cocycle_from_extension(const Extension& e, const std::vector<Elem>& s);

struct PostnikovChoice {
  std::vector<Elem> s;  // pi1 -> G1, s(1) = 1
  std::vector<Elem> f;  // pi1 x pi1 -> G2 with s(x)s(y) = s(xy) d f(x,y)
};
struct Postnikov {
  HomotopyGroups hg;
  GammaModule module;  // pi1 acting on pi2
  PostnikovChoice choice;
  Cochain k;           // normalized 3-cocycle with values in pi2 (indices of hg.pi2.group)
};
// Minimal representatives and minimal corrections when rng is null, random choices otherwise.
Postnikov postnikov_class(const CrossedModule& g, std::mt19937* rng = nullptr);

// chi^*(k) over gamma.
struct Obstruction {
  GammaModule module;
  Cochain k;
  bool vanishes = false;
};
Obstruction obstruction(const Hom& chi, const CrossedModule& g);

}  // namespace bfly
