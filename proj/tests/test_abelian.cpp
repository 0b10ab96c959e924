#include <doctest.h>

#include <bfly/abelian.hpp>
#include <bfly/catalog.hpp>

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

Complex2 degree0(const Group& a) { return Complex2::make(Hom::trivial(Group(), a)); }
Complex2 degree_m1(const Group& b) { return Complex2::make(Hom::trivial(b, Group())); }

// [0 -> Z/2] to [Z/2 -> 0] through Z/4 or Z/2 x Z/2
AbButterfly ext_butterfly(bool cyclic_e) {
  Complex2 x = degree0(cyclic(2)), y = degree_m1(cyclic(2));
  Group e = cyclic_e ? cyclic(4) : direct_product(cyclic(2), cyclic(2));
  Hom io = cyclic_e ? cyclic_map(2, 4, 2) : Hom::make(cyclic(2), e, {0, 1});
  Hom si = cyclic_e ? cyclic_map(4, 2, 1) : Hom::make(e, cyclic(2), {0, 0, 1, 1});
  return AbButterfly::make(x, y, io, Hom::trivial(Group(), e), si, Hom::trivial(e, Group()));
}

// classes under ab_add as a group
Group class_group(const AbHomClasses& r) {
  int n = static_cast<int>(r.classes.size());
  std::vector<Elem> flat(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = r.classify(ab_add(r.classes[i], r.classes[j]));
  return Group::from_flat(n, flat);
}

}  // namespace

TEST_CASE("abelian butterflies and their sums") {
  Complex2 c = Complex2::make(Hom::identity(cyclic(2)));
  AbButterfly id = ab_identity(c);
  CHECK(mapping_cone_check(id).acyclic());

  AbButterfly z4 = ext_butterfly(true), v4 = ext_butterfly(false);
  AbButterfly zero = ab_zero(z4.x, z4.y);
  CHECK(isomorphic(zero, v4));
  CHECK_FALSE(isomorphic(z4, v4));
  CHECK(isomorphic(ab_add(z4, zero), z4));
  CHECK(isomorphic(ab_add(z4, z4), v4));
  CHECK(isomorphic(ab_add(z4, ab_neg(z4)), zero));
  CHECK(isomorphic(ab_add(v4, z4), ab_add(z4, v4)));

  // Z/4 -> Z/4 twisted pieces: commutativity and associativity
  Complex2 x = degree0(cyclic(4)), y = degree_m1(cyclic(4));
  AbHomClasses r = ab_hom_classes(x, y);
  REQUIRE(r.classes.size() == 4);
  for (const auto& a : r.classes)
    for (const auto& b : r.classes) {
      CHECK(isomorphic(ab_add(a, b), ab_add(b, a)));
      for (const auto& d : r.classes) CHECK(isomorphic(ab_add(ab_add(a, b), d), ab_add(a, ab_add(b, d))));
    }

  CHECK(code_of([&] { ab_add(z4, id); }) == Errc::TypeMismatch);
  CHECK(code_of([&] { Complex2::make(Hom::trivial(symmetric(3), Group())); }) == Errc::NotAbelian);
  // E = S3 between [0 -> Z/2] and [Z/3 -> 0]
  Group s = symmetric(3);
  std::vector<Elem> rot;
  for (Elem g = 0; g < 6; ++g)
    if (s.element_order(g) == 3) rot.push_back(g);
  std::vector<Elem> io{0, rot[0], s.mul(rot[0], rot[0])}, si(6);
  for (Elem g = 0; g < 6; ++g) si[g] = s.element_order(g) == 2 ? 1 : 0;
  CHECK(code_of([&] {
          AbButterfly::make(degree0(cyclic(2)), degree_m1(cyclic(3)), Hom::make(cyclic(3), s, io),
                            Hom::trivial(Group(), s), Hom::make(s, cyclic(2), si), Hom::trivial(s, Group()));
        }) == Errc::NotAbelian);
}

TEST_CASE("mapping cones") {
  AbButterfly z4 = ext_butterfly(true);
  ConeHomology h = mapping_cone_check(z4);
  CHECK(h.h_m2.group.order() == 1);
  CHECK(h.h_m1.group.order() == 4);
  CHECK(h.h0.group.order() == 1);
  CHECK(h.les.ok());

  // zero map: H-2 = H-1 X, H-1 = H0 X + H-1 Y, H0 = H0 Y
  Complex2 x = Complex2::make(cyclic_map(2, 4, 2)), y = Complex2::make(cyclic_map(4, 2, 1));
  ConeHomology z = mapping_cone_check(ab_zero(x, y));
  CHECK(z.h_m2.group.order() == 1);
  CHECK(z.h_m1.group.order() == 2 * 2);
  CHECK(z.h0.group.order() == 1);
  Complex2 x2 = Complex2::make(Hom::trivial(cyclic(2), cyclic(3)));
  ConeHomology z2 = mapping_cone_check(ab_zero(x2, y));
  CHECK(z2.h_m2.group.order() == 2);
  CHECK(z2.h_m1.group.order() == 3 * 2);
  CHECK(z2.h0.group.order() == 1);
}

TEST_CASE("homs in the derived category") {
  AbHomClasses r = ab_hom_classes(degree0(cyclic(2)), degree_m1(cyclic(2)));
  REQUIRE(r.classes.size() == 2);
  int strict = 0;
  for (size_t i = 0; i < r.classes.size(); ++i) {
    strict += r.strict[i];
    CHECK(r.strict[i] == r.split[i]);
  }
  CHECK(strict == 1);

  Complex2 c = Complex2::make(Hom::identity(cyclic(2)));
  CHECK(ab_hom_classes(c, c).classes.size() == 1);

  std::vector<Group> small{cyclic(2), cyclic(4), klein4()};
  for (const Group& a : small)
    for (const Group& b : small) {
      AbHomClasses h = ab_hom_classes(degree0(a), degree_m1(b));
      std::vector<linalg::Int> ext = ext1_invariants(a, b);
      long long n = 1;
      for (auto e : ext) n *= e;
      CHECK(static_cast<long long>(h.classes.size()) == n);
      std::vector<long long> inv = abelian_invariants(class_group(h));
      CHECK(std::vector<linalg::Int>(inv.begin(), inv.end()) == ext);
      for (size_t i = 0; i < h.classes.size(); ++i) CHECK(h.strict[i] == h.split[i]);
    }

  // chain maps of a nonzero complex pair
  Complex2 x = Complex2::make(cyclic_map(2, 4, 2)), y = Complex2::make(cyclic_map(4, 2, 1));
  AbHomClasses g = ab_hom_classes(x, y);
  CHECK(!g.classes.empty());
  for (size_t i = 0; i < g.classes.size(); ++i) CHECK(g.strict[i] == g.split[i]);
}
