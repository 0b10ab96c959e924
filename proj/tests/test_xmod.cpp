#include <doctest.h>

#include <bfly/catalog.hpp>
#include <bfly/xmod.hpp>

using namespace bfly;
using namespace bfly::catalog;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::PostconditionFailed;
}

}  // namespace

TEST_CASE("basic crossed modules and homotopy groups") {
  CrossedModule x = group_as_xmod(cyclic(4));
  HomotopyGroups hg = homotopy_groups(x);
  CHECK(hg.pi1.group.order() == 4);
  CHECK(hg.pi2.group.order() == 1);

  HomotopyGroups ha = homotopy_groups(abelian_as_xmod(klein4()));
  CHECK(ha.pi1.group.order() == 1);
  CHECK(ha.pi2.group.order() == 4);
  CHECK(code_of([] { abelian_as_xmod(symmetric(3)); }) == Errc::CM1Fails);

  HomotopyGroups hi = homotopy_groups(identity_xmod(cyclic(2)));
  CHECK(hi.pi1.group.order() == 1);
  CHECK(hi.pi2.group.order() == 1);
}

TEST_CASE("AUT of Z/3") {
  AutXmod a = aut_xmod(cyclic(3));
  CHECK(a.xmod.g1.order() == 2);
  HomotopyGroups hg = homotopy_groups(a.xmod);
  CHECK(hg.pi1.group.order() == 2);
  CHECK(hg.pi2.group.order() == 3);
  // the nontrivial class inverts pi2
  for (Elem i = 0; i < 3; ++i) CHECK(hg.action.apply(i, 1) == hg.pi2.group.inv(i));

  AutXmod s3 = aut_xmod(symmetric(3));
  HomotopyGroups h3 = homotopy_groups(s3.xmod);
  CHECK(s3.xmod.g1.order() == 6);
  CHECK(h3.pi1.group.order() == 1);
  CHECK(h3.pi2.group.order() == 1);

  HomotopyGroups hq = homotopy_groups(aut_xmod(quaternion8()).xmod);
  CHECK(hq.pi1.group.order() == 6);  // Out(Q8) = S3
  CHECK(hq.pi2.group.order() == 2);
}

TEST_CASE("CM1 and CM2 violations are reported") {
  // Z/3 onto the rotations of S3 with the trivial action: CM2 fails at a reflection
  Group s3 = symmetric(3), z3 = cyclic(3);
  Elem r = 0;
  while (s3.element_order(r) != 3) ++r;
  Hom rot = Hom::make(z3, s3, {0, r, s3.mul(r, r)});
  CHECK(code_of([&] { CrossedModule::make(rot, RightAction::trivial(s3, z3)); }) == Errc::CM2Fails);
  // Z/4 -> Z/4 by doubling, odd elements inverting: valid
  Group z4 = cyclic(4);
  std::vector<Elem> inv_flat;
  for (Elem a = 0; a < 4; ++a)
    for (Elem g = 0; g < 4; ++g) inv_flat.push_back(g % 2 ? z4.inv(a) : a);
  CrossedModule dbl = CrossedModule::make(cyclic_map(4, 4, 2), RightAction::from_flat(z4, z4, inv_flat));
  CHECK(homotopy_groups(dbl).pi1.group.order() == 2);
  // identity boundary with trivial action on S3 fails CM1
  CHECK(code_of([&] { CrossedModule::make(Hom::identity(s3), RightAction::trivial(s3, s3)); }) == Errc::CM1Fails);
}

TEST_CASE("strict morphisms, equivalences and transformations") {
  CrossedModule g = identity_xmod(cyclic(2));
  CrossedModule one = group_as_xmod(Group());
  StrictMorphism to_one = StrictMorphism::trivial(g, one);
  CHECK(is_equivalence_strict(to_one).equivalent);
  CHECK(is_equivalence_strict(StrictMorphism::identity(g)).equivalent);
  CHECK_FALSE(is_equivalence_strict(StrictMorphism::trivial(group_as_xmod(cyclic(2)), one)).equivalent);

  // transformations on identity of AUT(Z/3)
  CrossedModule a = aut_xmod(cyclic(3)).xmod;
  StrictMorphism id = StrictMorphism::identity(a);
  Transformation t0{0, std::vector<Elem>(2, 0)};
  CHECK(is_transformation(t0, id, id));
  for (Elem c = 0; c < 2; ++c) {
    StrictMorphism qc = conjugate(id, c);
    Transformation tc{c, std::vector<Elem>(2, 0)};
    CHECK(is_transformation(tc, id, qc));
    Transformation back = invert_transformation(tc, a);
    CHECK(is_transformation(back, qc, id));
    Transformation loop = compose_transformations(tc, back, a);
    CHECK(loop.a == 0);
    CHECK(loop.theta == std::vector<Elem>(2, 0));
  }
  // every theta into pi2 = Z/3 is a pointed self-transformation, and induced maps agree
  for (Elem t1 = 0; t1 < 3; ++t1) CHECK(is_transformation(Transformation{0, {0, t1}}, id, id));
  CHECK(code_of([&] { validate_transformation(Transformation{1, {0, 0}}, id, id); }) == Errc::T2Fails);
  CrossedModule i3 = identity_xmod(cyclic(3));
  StrictMorphism id3 = StrictMorphism::identity(i3);
  CHECK(code_of([&] { validate_transformation(Transformation{0, {0, 1, 2}}, id3, id3); }) == Errc::T1Fails);
  CHECK(code_of([&] { validate_transformation(Transformation{0, {0, 1, 0}}, id3, id3); }) == Errc::NotCrossedHom);
}

TEST_CASE("pushout examples") {
  // p = id
  CrossedModule h = aut_xmod(cyclic(3)).xmod;
  Pushout po = pushout_xmod(h, Hom::identity(h.g2), h.action);
  CHECK(po.check.ok());
  CHECK(is_equivalence_strict(po.p_diamond).equivalent);

  // [Z/2 -> 1] pushed along 0 to the trivial group
  CrossedModule a = abelian_as_xmod(cyclic(2));
  Group one;
  Pushout p0 = pushout_xmod(a, Hom::trivial(cyclic(2), one), RightAction::trivial(one, one));
  CHECK(p0.xmod.g1.order() == 1);
  CHECK(p0.xmod.g2.order() == 1);

  // [Z/4 -> Z/2] along reduction mod 2
  Group z4 = cyclic(4), z2 = cyclic(2);
  CrossedModule r = CrossedModule::make(cyclic_map(4, 2, 1), RightAction::trivial(z2, z4));
  Pushout pr = pushout_xmod(r, cyclic_map(4, 2, 1), RightAction::trivial(z2, z2));
  HomotopyGroups hp = homotopy_groups(pr.xmod);
  CHECK(hp.pi1.group.order() == 1);
  CHECK(hp.pi2.group.order() == 1);
  InducedMaps m = induced_maps(pr.p_diamond);
  CHECK(m.pi2.kernel().size() == 2);
  CHECK_FALSE(is_equivalence_strict(pr.p_diamond).equivalent);

  // hypotheses
  CHECK(code_of([&] { pushout_xmod(r, cyclic_map(4, 2, 1), RightAction::trivial(z2, z4)); }) == Errc::HypothesesFail);
}

TEST_CASE("split model") {
  // [A -> 1]
  Group v = klein4();
  CrossedModule a = abelian_as_xmod(v);
  HomotopyGroups ha = homotopy_groups(a);
  Extension ea = Extension::make(Hom::identity(v), Hom::trivial(v, ha.pi1.group));
  SplitModel sa = split_model(a, ea, Hom::trivial(v, a.g1));
  CHECK(is_equivalence_strict(sa.to_g).equivalent);
  CHECK(is_equivalence_strict(sa.to_split).equivalent);

  // [Z/2 -> Z/4] with E = Z/4, rho = id
  Group z2 = cyclic(2), z4 = cyclic(4);
  CrossedModule g = CrossedModule::make(cyclic_map(2, 4, 2), RightAction::trivial(z4, z2));
  HomotopyGroups hg = homotopy_groups(g);
  Extension e = Extension::make(cyclic_map(2, 4, 2), compose(hg.pi1.proj, Hom::identity(z4)));
  SplitModel s = split_model(g, e, Hom::identity(z4));
  CHECK(is_equivalence_strict(s.to_g).equivalent);
  CHECK(is_equivalence_strict(s.to_split).equivalent);

  // rho failing to restrict to the boundary
  CHECK(code_of([&] { split_model(g, e, Hom::trivial(z4, z4)); }) == Errc::SectionInvalid);
}
