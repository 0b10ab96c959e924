#pragma once

#include <bfly/extension.hpp>
#include <bfly/group.hpp>

#include <vector>

namespace bfly {

// [G2 -> G1] with a right action of G1 on G2.
struct CrossedModule {
  Group g2, g1;
  Hom boundary;
  RightAction action;

  static CrossedModule make(const Hom& boundary, const RightAction& action);
  Elem act(Elem a, Elem g) const { return action.apply(a, g); }

  bool operator==(const CrossedModule& o) const {
    return boundary == o.boundary && action == o.action;
  }
  bool operator!=(const CrossedModule& o) const { return !(*this == o); }
};

// [1 -> G]
CrossedModule group_as_xmod(const Group& g);
// [A -> 1], A abelian
CrossedModule abelian_as_xmod(const Group& a);
// [G -> G] with conjugation
CrossedModule identity_xmod(const Group& g);
// [K -> Aut K]. Aut K is listed by sorted image arrays; its product applies the left factor first.
struct AutXmod {
  CrossedModule xmod;
  std::vector<std::vector<Elem>> autos;  // element of Aut K -> image array
};
AutXmod aut_xmod(const Group& k);

struct HomotopyGroups {
  Quotient pi1;          // G1 / Im d
  Subgroup pi2;          // Ker d
  RightAction action;    // pi1 on pi2
};
HomotopyGroups homotopy_groups(const CrossedModule& x);

struct StrictMorphism {
  CrossedModule source, target;
  Hom p2, p1;

  static StrictMorphism make(const CrossedModule& source, const CrossedModule& target, const Hom& p2, const Hom& p1);
  static StrictMorphism identity(const CrossedModule& x);
  static StrictMorphism trivial(const CrossedModule& source, const CrossedModule& target);
};
// outer ∘ inner
StrictMorphism compose(const StrictMorphism& outer, const StrictMorphism& inner);

struct InducedMaps {
  Hom pi1, pi2;
};
InducedMaps induced_maps(const StrictMorphism& p);

struct EquivalenceReport {
  bool equivalent = false;
  InducedMaps maps;
};
EquivalenceReport is_equivalence_strict(const StrictMorphism& p);

// T: Q => P is (a, theta) with a in G1 and theta: H1 -> G2.
struct Transformation {
  Elem a = 0;
  std::vector<Elem> theta;
};
// Throws NotCrossedHom, T1Fails or T2Fails.
void validate_transformation(const Transformation& t, const StrictMorphism& q, const StrictMorphism& p);
bool is_transformation(const Transformation& t, const StrictMorphism& q, const StrictMorphism& p);
// s: R => Q and t: Q => P give R => P.
Transformation compose_transformations(const Transformation& s, const Transformation& t, const CrossedModule& target);
Transformation invert_transformation(const Transformation& t, const CrossedModule& target);
// Q^a: conjugation by a in the target.
StrictMorphism conjugate(const StrictMorphism& q, Elem a);

struct PushoutCheck {
  bool pi1_iso = false;
  bool pi2_onto = false;
  bool pi2_kernel = false;          // kernel of pi2 map is {b : d b = 1, p b = 1}
  bool equivalence_if_injective = false;
  bool ok() const { return pi1_iso && pi2_onto && pi2_kernel && equivalence_if_injective; }
};

struct Pushout {
  CrossedModule xmod;      // [G2 -> H1 ⋊^{H2} G2]
  StrictMorphism p_diamond;
  SemidirectResult product;
  PushoutCheck check;
};
// p: H2 -> G2 and an action of H1 on G2. Throws HypothesesFail.
Pushout pushout_xmod(const CrossedModule& h, const Hom& p, const RightAction& act);
PushoutCheck check_pushout(const CrossedModule& h, const Hom& p, const Pushout& po);

// Zigzag G <- G' -> [pi2 -> pi1] from an extension E of pi1 by G2 with rho: E -> G1.
struct SplitModel {
  CrossedModule model;         // [G2 x pi2 -> E]
  CrossedModule split;         // [pi2 -> pi1], trivial boundary
  StrictMorphism to_g;         // (sigma, rho)
  StrictMorphism to_split;     // (pr2, f)
};
SplitModel split_model(const CrossedModule& g, const Extension& e, const Hom& rho);

}  // namespace bfly
