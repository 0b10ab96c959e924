#pragma once

#include <bfly/butterfly.hpp>
#include <bfly/linalg.hpp>

#include <optional>
#include <vector>

namespace bfly {

// X^-1 -> X^0, both abelian.
struct Complex2 {
  Group xm1, x0;
  Hom d;
  static Complex2 make(const Hom& d);  // throws NotAbelian
  // the same complex as a crossed module with trivial action
  CrossedModule xmod() const;
};

// A butterfly between complexes with E abelian.
struct AbButterfly {
  Complex2 x, y;
  Butterfly b;
  static AbButterfly make(const Complex2& x, const Complex2& y, const Hom& iota, const Hom& kappa,
                          const Hom& sigma, const Hom& rho);
  static AbButterfly of(const Complex2& x, const Complex2& y, const Butterfly& b);
};

AbButterfly ab_zero(const Complex2& x, const Complex2& y);
AbButterfly ab_identity(const Complex2& x);
// E x_{X0} E' modulo {(iota y, -iota' y)}. Throws TypeMismatch.
AbButterfly ab_add(const AbButterfly& p, const AbButterfly& q);
AbButterfly ab_neg(const AbButterfly& p);
bool isomorphic(const AbButterfly& p, const AbButterfly& q);

// Homology of X^-1 -> E -> Y^0 in degrees -2, -1, 0.
struct ConeHomology {
  Subgroup h_m2;   // Ker kappa
  Quotient h_m1;   // Ker rho / Im kappa
  Quotient h0;     // Y0 / Im rho
  Subgroup ker_rho;
  SequenceCheck les;  // 0 -> H-2 -> H-1 X -> H-1 Y -> H-1 -> H0 X -> H0 Y -> H0 -> 0
  bool acyclic() const { return h_m2.group.order() == 1 && h_m1.group.order() == 1 && h0.group.order() == 1; }
};
ConeHomology mapping_cone_check(const AbButterfly& p);  // throws ExactnessFails

// A homomorphic section of sigma, if any.
std::optional<Hom> ne_sw_splitting(const AbButterfly& p);

struct AbHomClasses {
  Complex2 x, y;
  std::vector<Extension> ext_classes;     // abelian extensions of X0 by Y-1
  std::vector<AbButterfly> classes;
  std::vector<int> ext_of;                // class -> index into ext_classes
  std::vector<char> split;                // the NE-SW sequence splits
  std::vector<char> strict;               // isomorphic to a chain map
  int classify(const AbButterfly& p) const;  // -1 if none
};
AbHomClasses ab_hom_classes(const Complex2& x, const Complex2& y);

// Ext^1(a, b) for finite abelian groups: sum of Z/gcd over invariant factors.
std::vector<linalg::Int> ext1_invariants(const Group& a, const Group& b);

// Strict chain maps X -> Y.
std::vector<StrictMorphism> chain_maps(const Complex2& x, const Complex2& y);

}  // namespace bfly
