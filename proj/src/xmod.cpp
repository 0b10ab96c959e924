#include <bfly/xmod.hpp>

#include <algorithm>
#include <map>
#include <string>

namespace bfly {

namespace {

std::string str(long long x) { return std::to_string(x); }

// element of G2 -> index in pi2, -1 outside
std::vector<Elem> pi2_index(const HomotopyGroups& hg, int n2) {
  std::vector<Elem> idx(n2, -1);
  for (Elem i = 0; i < hg.pi2.group.order(); ++i) idx[hg.pi2.incl(i)] = i;
  return idx;
}

}  // namespace

CrossedModule CrossedModule::make(const Hom& boundary, const RightAction& action) {
  const Group& g2 = boundary.domain();
  const Group& g1 = boundary.codomain();
  if (action.group() != g1 || action.space() != g2)
    fail(Errc::TypeMismatch, "action must be of G1 on G2");
  for (Elem a = 0; a < g2.order(); ++a)
    for (Elem b = 0; b < g2.order(); ++b)
      if (action.apply(b, boundary(a)) != g2.conj(b, a))
        fail(Errc::CM1Fails, "(alpha=" + str(a) + ", beta=" + str(b) + ")");
  for (Elem b = 0; b < g2.order(); ++b)
    for (Elem x = 0; x < g1.order(); ++x)
      if (boundary(action.apply(b, x)) != g1.conj(boundary(b), x))
        fail(Errc::CM2Fails, "(beta=" + str(b) + ", a=" + str(x) + ")");
  std::vector<Elem> ker = boundary.kernel();
  for (Elem k : ker)
    for (Elem b = 0; b < g2.order(); ++b)
      if (g2.mul(k, b) != g2.mul(b, k)) fail(Errc::PostconditionFailed, "kernel of the boundary is not central");
  if (!is_normal(g1, boundary.image())) fail(Errc::PostconditionFailed, "image of the boundary is not normal");
  return {g2, g1, boundary, action};
}

CrossedModule group_as_xmod(const Group& g) {
  Group one;
  return CrossedModule::make(Hom::trivial(one, g), RightAction::trivial(g, one));
}

CrossedModule abelian_as_xmod(const Group& a) {
  if (!a.is_abelian()) fail(Errc::CM1Fails, "[A -> 1] needs A abelian");
  Group one;
  return CrossedModule::make(Hom::trivial(a, one), RightAction::trivial(one, a));
}

CrossedModule identity_xmod(const Group& g) {
  return CrossedModule::make(Hom::identity(g), RightAction::conjugation(g));
}

AutXmod aut_xmod(const Group& k) {
  std::vector<std::vector<Elem>> autos;
  for (const Hom& f : automorphisms(k)) autos.push_back(f.images());
  std::sort(autos.begin(), autos.end());
  check_size(static_cast<long long>(autos.size()), "automorphism group");
  std::map<std::vector<Elem>, Elem> index;
  for (size_t i = 0; i < autos.size(); ++i) index.emplace(autos[i], static_cast<Elem>(i));
  int m = static_cast<int>(autos.size()), n = k.order();
  std::vector<Elem> flat(static_cast<size_t>(m) * m);
  std::vector<Elem> tmp(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (Elem x = 0; x < n; ++x) tmp[x] = autos[b][autos[a][x]];
      flat[static_cast<size_t>(a) * m + b] = index.at(tmp);
    }
  Group aut = Group::from_flat(m, std::move(flat));
  std::vector<Elem> bd(n);
  for (Elem g = 0; g < n; ++g) {
    for (Elem x = 0; x < n; ++x) tmp[x] = k.conj(x, g);
    bd[g] = index.at(tmp);
  }
  std::vector<Elem> act(static_cast<size_t>(n) * m);
  for (Elem x = 0; x < n; ++x)
    for (int a = 0; a < m; ++a) act[static_cast<size_t>(x) * m + a] = autos[a][x];
  AutXmod out;
  out.xmod = CrossedModule::make(Hom::make(k, aut, bd), RightAction::from_flat(aut, k, std::move(act)));
  out.autos = std::move(autos);
  return out;
}

HomotopyGroups homotopy_groups(const CrossedModule& x) {
  HomotopyGroups hg;
  hg.pi1 = quotient_by_normal(x.g1, x.boundary.image());
  hg.pi2 = make_subgroup(x.g2, x.boundary.kernel());
  if (!hg.pi2.group.is_abelian()) fail(Errc::PostconditionFailed, "pi2 is not abelian");
  std::vector<Elem> idx = pi2_index(hg, x.g2.order());
  int n1 = hg.pi1.group.order(), n2 = hg.pi2.group.order();
  std::vector<Elem> flat(static_cast<size_t>(n2) * n1);
  for (Elem i = 0; i < n2; ++i)
    for (Elem c = 0; c < n1; ++c) flat[static_cast<size_t>(i) * n1 + c] = idx[x.act(hg.pi2.incl(i), hg.pi1.rep[c])];
  for (Elem i = 0; i < n2; ++i)
    for (Elem g = 0; g < x.g1.order(); ++g)
      if (idx[x.act(hg.pi2.incl(i), g)] != flat[static_cast<size_t>(i) * n1 + hg.pi1.proj(g)])
        fail(Errc::PostconditionFailed, "pi1 action on pi2 depends on the representative");
  hg.action = RightAction::from_flat(hg.pi1.group, hg.pi2.group, std::move(flat));
  return hg;
}

// ---------------------------------------------------------------------------

StrictMorphism StrictMorphism::make(const CrossedModule& s, const CrossedModule& t, const Hom& p2, const Hom& p1) {
  if (p2.domain() != s.g2 || p2.codomain() != t.g2) fail(Errc::TypeMismatch, "p2 must map H2 to G2");
  if (p1.domain() != s.g1 || p1.codomain() != t.g1) fail(Errc::TypeMismatch, "p1 must map H1 to G1");
  for (Elem b = 0; b < s.g2.order(); ++b)
    if (p1(s.boundary(b)) != t.boundary(p2(b))) fail(Errc::NotAMorphism, "square fails at beta=" + str(b));
  for (Elem b = 0; b < s.g2.order(); ++b)
    for (Elem h = 0; h < s.g1.order(); ++h)
      if (p2(s.act(b, h)) != t.act(p2(b), p1(h)))
        fail(Errc::NotAMorphism, "p2 not equivariant at beta=" + str(b) + " h=" + str(h));
  return {s, t, p2, p1};
}

StrictMorphism StrictMorphism::identity(const CrossedModule& x) {
  return {x, x, Hom::identity(x.g2), Hom::identity(x.g1)};
}

StrictMorphism StrictMorphism::trivial(const CrossedModule& s, const CrossedModule& t) {
  return {s, t, Hom::trivial(s.g2, t.g2), Hom::trivial(s.g1, t.g1)};
}

StrictMorphism compose(const StrictMorphism& outer, const StrictMorphism& inner) {
  if (inner.target != outer.source) fail(Errc::TypeMismatch, "strict morphisms do not compose");
  return {inner.source, outer.target, compose(outer.p2, inner.p2), compose(outer.p1, inner.p1)};
}

InducedMaps induced_maps(const StrictMorphism& p) {
  HomotopyGroups hs = homotopy_groups(p.source), ht = homotopy_groups(p.target);
  std::vector<Elem> m1(hs.pi1.group.order()), m2(hs.pi2.group.order());
  for (Elem c = 0; c < hs.pi1.group.order(); ++c) m1[c] = ht.pi1.proj(p.p1(hs.pi1.rep[c]));
  std::vector<Elem> idx = pi2_index(ht, p.target.g2.order());
  for (Elem i = 0; i < hs.pi2.group.order(); ++i) {
    Elem y = idx[p.p2(hs.pi2.incl(i))];
    if (y < 0) fail(Errc::PostconditionFailed, "pi2 does not map into pi2");
    m2[i] = y;
  }
  return {Hom::make(hs.pi1.group, ht.pi1.group, m1), Hom::make(hs.pi2.group, ht.pi2.group, m2)};
}

EquivalenceReport is_equivalence_strict(const StrictMorphism& p) {
  EquivalenceReport r;
  r.maps = induced_maps(p);
  r.equivalent = r.maps.pi1.bijective() && r.maps.pi2.bijective();
  return r;
}

// ---------------------------------------------------------------------------

void validate_transformation(const Transformation& t, const StrictMorphism& q, const StrictMorphism& p) {
  if (q.source != p.source || q.target != p.target) fail(Errc::TypeMismatch, "Q and P must share source and target");
  const CrossedModule& h = p.source;
  const CrossedModule& g = p.target;
  if (t.a < 0 || t.a >= g.g1.order()) fail(Errc::InvalidArgument, "a out of range");
  if (static_cast<int>(t.theta.size()) != h.g1.order()) fail(Errc::InvalidArgument, "theta has wrong length");
  for (Elem y : t.theta)
    if (y < 0 || y >= g.g2.order()) fail(Errc::InvalidArgument, "theta value out of range");
  for (Elem x = 0; x < h.g1.order(); ++x)
    for (Elem y = 0; y < h.g1.order(); ++y)
      if (t.theta[h.g1.mul(x, y)] != g.g2.mul(g.act(t.theta[x], p.p1(y)), t.theta[y]))
        fail(Errc::NotCrossedHom, "(" + str(x) + "," + str(y) + ")");
  for (Elem x = 0; x < h.g1.order(); ++x)
    if (g.g1.conj(q.p1(x), t.a) != g.g1.mul(p.p1(x), g.boundary(t.theta[x]))) fail(Errc::T1Fails, "h=" + str(x));
  for (Elem b = 0; b < h.g2.order(); ++b)
    if (g.act(q.p2(b), t.a) != g.g2.mul(p.p2(b), t.theta[h.boundary(b)])) fail(Errc::T2Fails, "beta=" + str(b));
}

bool is_transformation(const Transformation& t, const StrictMorphism& q, const StrictMorphism& p) {
  try {
    validate_transformation(t, q, p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Transformation compose_transformations(const Transformation& s, const Transformation& t, const CrossedModule& g) {
  if (s.theta.size() != t.theta.size()) fail(Errc::TypeMismatch, "transformations over different sources");
  Transformation r;
  r.a = g.g1.mul(s.a, t.a);
  r.theta.resize(t.theta.size());
  for (size_t x = 0; x < t.theta.size(); ++x) r.theta[x] = g.g2.mul(t.theta[x], g.act(s.theta[x], t.a));
  return r;
}

Transformation invert_transformation(const Transformation& t, const CrossedModule& g) {
  Transformation r;
  r.a = g.g1.inv(t.a);
  r.theta.resize(t.theta.size());
  for (size_t x = 0; x < t.theta.size(); ++x) r.theta[x] = g.g2.inv(g.act(t.theta[x], r.a));
  return r;
}

StrictMorphism conjugate(const StrictMorphism& q, Elem a) {
  const CrossedModule& g = q.target;
  std::vector<Elem> m2(q.source.g2.order()), m1(q.source.g1.order());
  for (Elem b = 0; b < q.source.g2.order(); ++b) m2[b] = g.act(q.p2(b), a);
  for (Elem x = 0; x < q.source.g1.order(); ++x) m1[x] = g.g1.conj(q.p1(x), a);
  return StrictMorphism::make(q.source, g, Hom::make(q.source.g2, g.g2, m2), Hom::make(q.source.g1, g.g1, m1));
}

// ---------------------------------------------------------------------------

Pushout pushout_xmod(const CrossedModule& h, const Hom& p, const RightAction& act) {
  const Group& g2 = p.codomain();
  if (p.domain() != h.g2) fail(Errc::HypothesesFail, "p must be defined on H2");
  if (act.group() != h.g1 || act.space() != g2) fail(Errc::HypothesesFail, "action must be of H1 on the target of p");
  for (Elem b = 0; b < h.g2.order(); ++b)
    for (Elem x = 0; x < h.g1.order(); ++x)
      if (p(h.act(b, x)) != act.apply(p(b), x))
        fail(Errc::HypothesesFail, "p not H1-equivariant at beta=" + str(b) + " h=" + str(x));
  for (Elem b = 0; b < h.g2.order(); ++b)
    for (Elem a = 0; a < g2.order(); ++a)
      if (act.apply(a, h.boundary(b)) != g2.conj(a, p(b)))
        fail(Errc::HypothesesFail, "alpha^(d beta) != alpha^(p beta) at alpha=" + str(a) + " beta=" + str(b));
  SemidirectData data{h.g1, g2, h.g2, h.boundary, p, h.action, act};
  Pushout po;
  po.product = generalized_semidirect(data);
  po.xmod = CrossedModule::make(po.product.d_prime, po.product.act);
  po.p_diamond = StrictMorphism::make(h, po.xmod, p, po.product.p_prime);
  po.check = check_pushout(h, p, po);
  if (!po.check.ok()) fail(Errc::PostconditionFailed, "pushout fails its homotopy checks");
  return po;
}

PushoutCheck check_pushout(const CrossedModule& h, const Hom& p, const Pushout& po) {
  PushoutCheck c;
  InducedMaps m = induced_maps(po.p_diamond);
  c.pi1_iso = m.pi1.bijective();
  c.pi2_onto = m.pi2.surjective();
  HomotopyGroups hh = homotopy_groups(h);
  std::vector<Elem> got, want;
  for (Elem i : m.pi2.kernel()) got.push_back(hh.pi2.incl(i));
  std::sort(got.begin(), got.end());
  for (Elem b = 0; b < h.g2.order(); ++b)
    if (h.boundary(b) == 0 && p(b) == 0) want.push_back(b);
  c.pi2_kernel = got == want;
  c.equivalence_if_injective = !p.injective() || (m.pi1.bijective() && m.pi2.bijective());
  return c;
}

// ---------------------------------------------------------------------------

SplitModel split_model(const CrossedModule& g, const Extension& e, const Hom& rho) {
  HomotopyGroups hg = homotopy_groups(g);
  if (e.n != g.g2) fail(Errc::SectionInvalid, "extension kernel must be G2");
  if (e.gamma != hg.pi1.group) fail(Errc::SectionInvalid, "extension quotient must be pi1");
  if (rho.domain() != e.e || rho.codomain() != g.g1) fail(Errc::SectionInvalid, "rho must map E to G1");
  for (Elem a = 0; a < g.g2.order(); ++a)
    if (rho(e.incl(a)) != g.boundary(a)) fail(Errc::SectionInvalid, "rho does not restrict to the boundary at " + str(a));
  for (Elem x = 0; x < e.e.order(); ++x) {
    for (Elem a = 0; a < g.g2.order(); ++a)
      if (e.incl(g.act(a, rho(x))) != e.e.conj(e.incl(a), x))
        fail(Errc::SectionInvalid, "equivariance fails at x=" + str(x) + " alpha=" + str(a));
    if (hg.pi1.proj(rho(x)) != e.proj(x)) fail(Errc::SectionInvalid, "rho does not induce the identity on pi1 at " + str(x));
  }

  const Group& p2 = hg.pi2.group;
  int n2 = g.g2.order(), np = p2.order(), ne = e.e.order();
  std::vector<Elem> idx = pi2_index(hg, n2);
  Group prod = direct_product(g.g2, p2);
  std::vector<Elem> bd(prod.order()), flat(static_cast<size_t>(prod.order()) * ne), sig(prod.order()), pr2(prod.order());
  for (Elem a = 0; a < n2; ++a)
    for (Elem c = 0; c < np; ++c) {
      Elem v = a * np + c;
      bd[v] = e.incl(a);
      sig[v] = g.g2.mul(a, hg.pi2.incl(c));
      pr2[v] = c;
      for (Elem x = 0; x < ne; ++x)
        flat[static_cast<size_t>(v) * ne + x] = g.act(a, rho(x)) * np + idx[g.act(hg.pi2.incl(c), rho(x))];
    }
  SplitModel out;
  out.model = CrossedModule::make(Hom::make(prod, e.e, bd), RightAction::from_flat(e.e, prod, std::move(flat)));
  out.split = CrossedModule::make(Hom::trivial(p2, hg.pi1.group), hg.action);
  out.to_g = StrictMorphism::make(out.model, g, Hom::make(prod, g.g2, sig), rho);
  out.to_split = StrictMorphism::make(out.model, out.split, Hom::make(prod, p2, pr2), e.proj);
  if (!is_equivalence_strict(out.to_g).equivalent || !is_equivalence_strict(out.to_split).equivalent)
    fail(Errc::PostconditionFailed, "split model legs are not equivalences");
  return out;
}

}  // namespace bfly
