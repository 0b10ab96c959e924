#include <bfly/abelian.hpp>
#include <bfly/extensions.hpp>

#include "pair_quotient.hpp"

#include <string>

namespace bfly {

namespace {

std::string str(long long x) { return std::to_string(x); }

Hom negate(const Hom& f) {
  std::vector<Elem> im(f.domain().order());
  for (Elem x = 0; x < f.domain().order(); ++x) im[x] = f.codomain().inv(f(x));
  return Hom::make(f.domain(), f.codomain(), im);
}

void same_ends(const AbButterfly& p, const AbButterfly& q) {
  if (p.x.d != q.x.d || p.y.d != q.y.d) fail(Errc::TypeMismatch, "abelian butterflies have different ends");
}

}  // namespace

Complex2 Complex2::make(const Hom& d) {
  if (!d.domain().is_abelian() || !d.codomain().is_abelian()) fail(Errc::NotAbelian, "complex terms must be abelian");
  return {d.domain(), d.codomain(), d};
}

CrossedModule Complex2::xmod() const { return CrossedModule::make(d, RightAction::trivial(x0, xm1)); }

AbButterfly AbButterfly::make(const Complex2& x, const Complex2& y, const Hom& iota, const Hom& kappa,
                              const Hom& sigma, const Hom& rho) {
  if (!iota.codomain().is_abelian()) fail(Errc::NotAbelian, "E must be abelian");
  return {x, y, Butterfly::make(x.xmod(), y.xmod(), iota, kappa, sigma, rho)};
}

AbButterfly AbButterfly::of(const Complex2& x, const Complex2& y, const Butterfly& b) {
  if (b.h != x.xmod() || b.g != y.xmod()) fail(Errc::TypeMismatch, "butterfly ends are not the given complexes");
  if (!b.e.is_abelian()) fail(Errc::NotAbelian, "E must be abelian");
  return {x, y, b};
}

AbButterfly ab_zero(const Complex2& x, const Complex2& y) {
  return AbButterfly::of(x, y, trivial_butterfly(x.xmod(), y.xmod()));
}

AbButterfly ab_identity(const Complex2& x) { return AbButterfly::of(x, x, identity_butterfly(x.xmod())); }

AbButterfly ab_add(const AbButterfly& p, const AbButterfly& q) {
  same_ends(p, q);
  const Butterfly &a = p.b, &b = q.b;
  const Group& ym1 = p.y.xm1;
  std::vector<std::pair<Elem, Elem>> anti;
  for (Elem y = 0; y < ym1.order(); ++y) anti.emplace_back(a.iota(y), b.iota(ym1.inv(y)));
  detail::PairQuotient pq =
      detail::pair_quotient(a.e, b.e, [&](Elem u, Elem v) { return a.sigma(u) == b.sigma(v); }, anti);
  const Group& e = pq.q.group;
  std::vector<Elem> io(ym1.order()), ka(p.x.xm1.order());
  for (Elem y = 0; y < ym1.order(); ++y) io[y] = pq.cls(a.iota(y), 0);
  for (Elem v = 0; v < p.x.xm1.order(); ++v) ka[v] = pq.cls(a.kappa(v), b.kappa(v));
  Hom si = detail::hom_from_classes(pq, p.x.x0, [&](Elem u, Elem) { return a.sigma(u); });
  Hom rh = detail::hom_from_classes(pq, p.y.x0, [&](Elem u, Elem v) { return p.y.x0.mul(a.rho(u), b.rho(v)); });
  return AbButterfly::make(p.x, p.y, Hom::make(ym1, e, io), Hom::make(p.x.xm1, e, ka), si, rh);
}

AbButterfly ab_neg(const AbButterfly& p) {
  return AbButterfly::make(p.x, p.y, negate(p.b.iota), p.b.kappa, p.b.sigma, negate(p.b.rho));
}

bool isomorphic(const AbButterfly& p, const AbButterfly& q) { return isomorphic(p.b, q.b); }

ConeHomology mapping_cone_check(const AbButterfly& p) {
  FiberHomology fh = fiber_homology(p.b);
  ConeHomology c;
  c.h_m2 = fh.h2;
  c.h_m1 = fh.h1;
  c.ker_rho = fh.ker_rho;
  c.h0 = quotient_by_normal(p.y.x0, p.b.rho.image());
  if (c.h0.group.order() != fh.h0.count()) fail(Errc::ExactnessFails, "H0 of the cone disagrees with the fiber");
  c.les = les_fiber(p.b);
  if (!c.les.ok()) fail(Errc::ExactnessFails, "long exact sequence fails at term " + str(c.les.first_failure()));
  return c;
}

std::optional<Hom> ne_sw_splitting(const AbButterfly& p) {
  HomSearch s{p.x.x0, p.b.e, {}, nullptr, false};
  s.allowed = [&](Elem x, Elem y) { return p.b.sigma(y) == x; };
  return find_hom(s);
}

std::vector<StrictMorphism> chain_maps(const Complex2& x, const Complex2& y) {
  CrossedModule h = x.xmod(), g = y.xmod();
  std::vector<StrictMorphism> out;
  for (const Hom& f1 : all_homs(x.x0, y.x0))
    for (const Hom& f2 : all_homs(x.xm1, y.xm1))
      if (compose(y.d, f2) == compose(f1, x.d)) out.push_back(StrictMorphism::make(h, g, f2, f1));
  return out;
}

int AbHomClasses::classify(const AbButterfly& p) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (isomorphic(classes[i], p)) return static_cast<int>(i);
  return -1;
}

AbHomClasses ab_hom_classes(const Complex2& x, const Complex2& y) {
  AbHomClasses r;
  r.x = x;
  r.y = y;
  Hom triv = Hom::trivial(x.x0, out_group(y.xm1).group());
  ExtensionEnumeration en = enumerate_extensions(x.x0, y.xm1, triv);
  for (const Extension& e : en.classes)
    if (e.e.is_abelian()) r.ext_classes.push_back(e);

  std::vector<Butterfly> strict;
  for (const StrictMorphism& m : chain_maps(x, y)) strict.push_back(of_strict(m));

  for (size_t ei = 0; ei < r.ext_classes.size(); ++ei) {
    const Extension& ext = r.ext_classes[ei];
    const Group& e = ext.e;
    HomSearch ks{x.xm1, e, {}, nullptr, false};
    ks.allowed = [&](Elem v, Elem u) { return ext.proj(u) == x.d(v); };
    std::vector<Butterfly> local;
    enumerate_homs(ks, [&](const std::vector<Elem>& kimg) {
      Hom kappa = Hom::make(x.xm1, e, kimg);
      // rho is pinned on Im iota and Im kappa
      std::vector<Elem> need(e.order(), -1);
      bool consistent = true;
      auto pin = [&](Elem u, Elem v) {
        if (need[u] >= 0 && need[u] != v) consistent = false;
        need[u] = v;
      };
      for (Elem a = 0; a < y.xm1.order(); ++a) pin(ext.incl(a), y.d(a));
      for (Elem b = 0; b < x.xm1.order(); ++b) pin(kappa(b), 0);
      if (!consistent) return true;
      HomSearch rs{e, y.x0, {}, nullptr, false};
      rs.allowed = [&](Elem u, Elem v) { return need[u] < 0 || need[u] == v; };
      enumerate_homs(rs, [&](const std::vector<Elem>& rimg) {
        AbButterfly p = AbButterfly::make(x, y, ext.incl, kappa, ext.proj, Hom::make(e, y.x0, rimg));
        for (const Butterfly& q : local)
          if (isomorphic(q, p.b)) return true;
        local.push_back(p.b);
        r.ext_of.push_back(static_cast<int>(ei));
        r.split.push_back(ne_sw_splitting(p).has_value());
        bool reach = false;
        for (const Butterfly& s : strict)
          if (isomorphic(s, p.b)) {
            reach = true;
            break;
          }
        r.strict.push_back(reach);
        r.classes.push_back(std::move(p));
        return true;
      });
      return true;
    });
  }
  return r;
}

std::vector<linalg::Int> ext1_invariants(const Group& a, const Group& b) {
  std::vector<linalg::Int> cyc;
  for (long long i : decompose_abelian(a).orders)
    for (long long j : decompose_abelian(b).orders) cyc.push_back(linalg::gcd(i, j));
  return linalg::invariant_factors(cyc);
}

}  // namespace bfly
