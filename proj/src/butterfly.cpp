#include <bfly/butterfly.hpp>

#include <algorithm>
#include <string>

namespace bfly {

namespace {

std::string str(long long x) { return std::to_string(x); }

// y -> x with f(x) = y, -1 off the image
std::vector<Elem> preimage_table(const Hom& f) {
  std::vector<Elem> t(f.codomain().order(), -1);
  for (Elem x = f.domain().order() - 1; x >= 0; --x) t[f(x)] = x;
  return t;
}

std::vector<Elem> subgroup_index(const Subgroup& s, int n) {
  std::vector<Elem> idx(n, -1);
  for (Elem i = 0; i < s.group.order(); ++i) idx[s.incl(i)] = i;
  return idx;
}

}  // namespace

Butterfly Butterfly::make(const CrossedModule& h, const CrossedModule& g, const Hom& iota, const Hom& kappa,
                          const Hom& sigma, const Hom& rho) {
  const Group& e = iota.codomain();
  if (iota.domain() != g.g2) fail(Errc::TypeMismatch, "iota must start at G2");
  if (kappa.domain() != h.g2 || kappa.codomain() != e) fail(Errc::TypeMismatch, "kappa must map H2 to E");
  if (sigma.domain() != e || sigma.codomain() != h.g1) fail(Errc::TypeMismatch, "sigma must map E to H1");
  if (rho.domain() != e || rho.codomain() != g.g1) fail(Errc::TypeMismatch, "rho must map E to G1");

  for (Elem b = 0; b < h.g2.order(); ++b)
    if (sigma(kappa(b)) != h.boundary(b)) fail(Errc::ButterflyAxiomFails, "sigma kappa != d at beta=" + str(b));
  for (Elem a = 0; a < g.g2.order(); ++a)
    if (rho(iota(a)) != g.boundary(a)) fail(Errc::ButterflyAxiomFails, "rho iota != d at alpha=" + str(a));
  for (Elem b = 0; b < h.g2.order(); ++b)
    if (rho(kappa(b)) != 0) fail(Errc::NotComplex, "rho kappa(" + str(b) + ") != 1");
  if (!iota.injective()) fail(Errc::NESWNotExact, "iota is not injective");
  if (!sigma.surjective()) fail(Errc::NESWNotExact, "sigma is not surjective");
  if (iota.image() != sigma.kernel()) fail(Errc::NESWNotExact, "Ker sigma != Im iota");

  for (Elem x = 0; x < e.order(); ++x) {
    for (Elem a = 0; a < g.g2.order(); ++a)
      if (iota(g.act(a, rho(x))) != e.conj(iota(a), x))
        fail(Errc::EquivarianceFails, "(x=" + str(x) + ", alpha=" + str(a) + ")");
    for (Elem b = 0; b < h.g2.order(); ++b)
      if (kappa(h.act(b, sigma(x))) != e.conj(kappa(b), x))
        fail(Errc::EquivarianceFails, "(x=" + str(x) + ", beta=" + str(b) + ")");
  }
  // consequences that must hold automatically
  for (Elem y : rho.kernel())
    for (Elem a = 0; a < g.g2.order(); ++a)
      if (e.mul(y, iota(a)) != e.mul(iota(a), y)) fail(Errc::PostconditionFailed, "Im iota does not commute with Ker rho");
  for (Elem y : sigma.kernel())
    for (Elem b = 0; b < h.g2.order(); ++b)
      if (e.mul(y, kappa(b)) != e.mul(kappa(b), y))
        fail(Errc::PostconditionFailed, "Im kappa does not commute with Ker sigma");
  return {h, g, e, iota, kappa, sigma, rho};
}

// ---------------------------------------------------------------------------

bool is_butterfly_iso(const Butterfly& p, const Butterfly& q, const Hom& f) {
  if (f.domain() != p.e || f.codomain() != q.e || !f.bijective()) return false;
  for (Elem a = 0; a < p.g.g2.order(); ++a)
    if (f(p.iota(a)) != q.iota(a)) return false;
  for (Elem b = 0; b < p.h.g2.order(); ++b)
    if (f(p.kappa(b)) != q.kappa(b)) return false;
  for (Elem x = 0; x < p.e.order(); ++x)
    if (q.sigma(f(x)) != p.sigma(x) || q.rho(f(x)) != p.rho(x)) return false;
  return true;
}

std::optional<ButterflyIso> find_isomorphism(const Butterfly& p, const Butterfly& q) {
  if (p.h != q.h || p.g != q.g) fail(Errc::TypeMismatch, "butterflies have different source or target");
  if (p.e.order() != q.e.order() || p.e.order_profile() != q.e.order_profile()) return std::nullopt;
  HomSearch s;
  s.domain = p.e;
  s.codomain = q.e;
  for (Elem a = 0; a < p.g.g2.order(); ++a) s.fixed.emplace_back(p.iota(a), q.iota(a));
  for (Elem b = 0; b < p.h.g2.order(); ++b) s.fixed.emplace_back(p.kappa(b), q.kappa(b));
  s.allowed = [&](Elem x, Elem y) { return q.sigma(y) == p.sigma(x) && q.rho(y) == p.rho(x); };
  s.injective = true;
  std::optional<Hom> f = find_hom(s);
  if (!f) return std::nullopt;
  if (!is_butterfly_iso(p, q, *f)) fail(Errc::PostconditionFailed, "search returned a non-isomorphism");
  return ButterflyIso{*f};
}

bool isomorphic(const Butterfly& p, const Butterfly& q) { return find_isomorphism(p, q).has_value(); }

// ---------------------------------------------------------------------------

Butterfly of_strict(const StrictMorphism& p) {
  const CrossedModule& h = p.source;
  const CrossedModule& g = p.target;
  Group e = semidirect_product(RightAction::pullback(g.action, p.p1));
  int n2 = g.g2.order();
  std::vector<Elem> io(n2), ka(h.g2.order()), si(e.order()), rh(e.order());
  for (Elem a = 0; a < n2; ++a) io[a] = a;
  for (Elem b = 0; b < h.g2.order(); ++b) ka[b] = h.boundary(b) * n2 + g.g2.inv(p.p2(b));
  for (Elem v = 0; v < e.order(); ++v) {
    si[v] = v / n2;
    rh[v] = g.g1.mul(p.p1(v / n2), g.boundary(v % n2));
  }
  return Butterfly::make(h, g, Hom::make(g.g2, e, io), Hom::make(h.g2, e, ka), Hom::make(e, h.g1, si),
                         Hom::make(e, g.g1, rh));
}

Butterfly identity_butterfly(const CrossedModule& x) { return of_strict(StrictMorphism::identity(x)); }

Butterfly trivial_butterfly(const CrossedModule& h, const CrossedModule& g) {
  return of_strict(StrictMorphism::trivial(h, g));
}

Hom canonical_splitting(const Butterfly& b) {
  int n2 = b.g.g2.order();
  if (b.e.order() != b.h.g1.order() * n2) fail(Errc::InvalidArgument, "not a butterfly of a strict morphism");
  std::vector<Elem> s(b.h.g1.order());
  for (Elem x = 0; x < b.h.g1.order(); ++x) s[x] = x * n2;
  Hom out = Hom::make(b.h.g1, b.e, s);
  for (Elem x = 0; x < b.h.g1.order(); ++x)
    if (b.sigma(out(x)) != x) fail(Errc::NotASection, "canonical splitting is not a section");
  return out;
}

StrictSplitting splitting_to_strict(const Butterfly& p, const Hom& s) {
  if (s.domain() != p.h.g1 || s.codomain() != p.e) fail(Errc::NotASection, "s must map H1 to E");
  for (Elem x = 0; x < p.h.g1.order(); ++x)
    if (p.sigma(s(x)) != x) fail(Errc::NotASection, "sigma s != id at " + str(x));
  std::vector<Elem> back = preimage_table(p.iota);
  std::vector<Elem> m2(p.h.g2.order());
  for (Elem b = 0; b < p.h.g2.order(); ++b) {
    Elem y = back[p.e.mul(p.e.inv(p.kappa(b)), s(p.h.boundary(b)))];
    if (y < 0) fail(Errc::PostconditionFailed, "kappa(b)^-1 s(d b) outside Im iota");
    m2[b] = y;
  }
  StrictSplitting out;
  out.morphism = StrictMorphism::make(p.h, p.g, Hom::make(p.h.g2, p.g.g2, m2), compose(p.rho, s));
  Butterfly b = of_strict(out.morphism);
  int n2 = p.g.g2.order();
  std::vector<Elem> f(b.e.order());
  for (Elem v = 0; v < b.e.order(); ++v) f[v] = p.e.mul(s(v / n2), p.iota(v % n2));
  Hom fh = Hom::make(b.e, p.e, f);
  if (!is_butterfly_iso(b, p, fh)) fail(Errc::PostconditionFailed, "(h,g) -> s(h) iota(g) is not a butterfly isomorphism");
  out.iso = {fh};
  return out;
}

Span span_of(const Butterfly& p) {
  Group prod = direct_product(p.h.g2, p.g.g2);
  int n2 = p.g.g2.order(), ne = p.e.order();
  std::vector<Elem> mu(prod.order()), pr1(prod.order()), pr2(prod.order());
  std::vector<Elem> flat(static_cast<size_t>(prod.order()) * ne);
  for (Elem v = 0; v < prod.order(); ++v) {
    Elem b = v / n2, a = v % n2;
    mu[v] = p.e.mul(p.kappa(b), p.iota(a));
    pr1[v] = b;
    pr2[v] = a;
    for (Elem x = 0; x < ne; ++x)
      flat[static_cast<size_t>(v) * ne + x] = p.h.act(b, p.sigma(x)) * n2 + p.g.act(a, p.rho(x));
  }
  Span s;
  s.mid = CrossedModule::make(Hom::make(prod, p.e, mu), RightAction::from_flat(p.e, prod, std::move(flat)));
  s.to_h = StrictMorphism::make(s.mid, p.h, Hom::make(prod, p.h.g2, pr1), p.sigma);
  s.to_g = StrictMorphism::make(s.mid, p.g, Hom::make(prod, p.g.g2, pr2), p.rho);
  if (!is_equivalence_strict(s.to_h).equivalent) fail(Errc::PostconditionFailed, "left leg of the span is not an equivalence");
  return s;
}

Hom pi1_map(const Butterfly& p) {
  HomotopyGroups hh = homotopy_groups(p.h), hg = homotopy_groups(p.g);
  std::vector<Elem> sec = preimage_table(p.sigma);
  std::vector<Elem> m(hh.pi1.group.order());
  for (Elem c = 0; c < hh.pi1.group.order(); ++c) m[c] = hg.pi1.proj(p.rho(sec[hh.pi1.rep[c]]));
  for (Elem x = 0; x < p.e.order(); ++x)
    if (hg.pi1.proj(p.rho(x)) != m[hh.pi1.proj(p.sigma(x))])
      fail(Errc::PostconditionFailed, "pi1 map not well defined");
  return Hom::make(hh.pi1.group, hg.pi1.group, m);
}

Hom pi2_map(const Butterfly& p) {
  HomotopyGroups hh = homotopy_groups(p.h), hg = homotopy_groups(p.g);
  std::vector<Elem> back = preimage_table(p.iota);
  std::vector<Elem> idx = subgroup_index(hg.pi2, p.g.g2.order());
  std::vector<Elem> m(hh.pi2.group.order());
  for (Elem i = 0; i < hh.pi2.group.order(); ++i) {
    Elem a = back[p.e.inv(p.kappa(hh.pi2.incl(i)))];
    if (a < 0 || idx[a] < 0) fail(Errc::PostconditionFailed, "kappa(pi2) does not land in iota(pi2)");
    m[i] = idx[a];
  }
  return Hom::make(hh.pi2.group, hg.pi2.group, m);
}

// ---------------------------------------------------------------------------

Butterfly compose(const Butterfly& q, const Butterfly& p) {
  if (q.g != p.h) fail(Errc::TypeMismatch, "target of the first butterfly is not the source of the second");
  const Group& f = q.e;
  const Group& e = p.e;
  const std::uint64_t ne = static_cast<std::uint64_t>(e.order());
  std::vector<std::uint64_t> codes;
  for (Elem y = 0; y < f.order(); ++y)
    for (Elem x = 0; x < e.order(); ++x)
      if (q.rho(y) == p.sigma(x)) codes.push_back(y * ne + x);
  Enumerated l = enumerate_group(codes, [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(f.mul(static_cast<Elem>(a / ne), static_cast<Elem>(b / ne))) * ne +
           static_cast<std::uint64_t>(e.mul(static_cast<Elem>(a % ne), static_cast<Elem>(b % ne)));
  });
  std::vector<Elem> ideal;
  for (Elem b = 0; b < p.h.g2.order(); ++b) ideal.push_back(l.at(q.iota(b) * ne + p.kappa(b)));
  Quotient quo = quotient_by_normal(l.group, ideal);
  const Group& r = quo.group;
  std::vector<Elem> ka(q.h.g2.order()), io(p.g.g2.order()), si(r.order()), rh(r.order());
  for (Elem c = 0; c < q.h.g2.order(); ++c) ka[c] = quo.proj(l.at(q.kappa(c) * ne));
  for (Elem a = 0; a < p.g.g2.order(); ++a) io[a] = quo.proj(l.at(p.iota(a)));
  for (Elem c = 0; c < r.order(); ++c) {
    std::uint64_t code = l.codes[quo.rep[c]];
    si[c] = q.sigma(static_cast<Elem>(code / ne));
    rh[c] = p.rho(static_cast<Elem>(code % ne));
  }
  return Butterfly::make(q.h, p.g, Hom::make(p.g.g2, r, io), Hom::make(q.h.g2, r, ka), Hom::make(r, q.h.g1, si),
                         Hom::make(r, p.g.g1, rh));
}

Butterfly compose_special_strict_first(const StrictMorphism& q, const Butterfly& p) {
  if (q.target != p.h) fail(Errc::TypeMismatch, "target of the strict morphism is not the source of the butterfly");
  const Group& k1 = q.source.g1;
  const Group& e = p.e;
  const std::uint64_t ne = static_cast<std::uint64_t>(e.order());
  std::vector<std::uint64_t> codes;
  for (Elem k = 0; k < k1.order(); ++k)
    for (Elem x = 0; x < e.order(); ++x)
      if (q.p1(k) == p.sigma(x)) codes.push_back(k * ne + x);
  Enumerated l = enumerate_group(codes, [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(k1.mul(static_cast<Elem>(a / ne), static_cast<Elem>(b / ne))) * ne +
           static_cast<std::uint64_t>(e.mul(static_cast<Elem>(a % ne), static_cast<Elem>(b % ne)));
  });
  const Group& r = l.group;
  std::vector<Elem> ka(q.source.g2.order()), io(p.g.g2.order()), si(r.order()), rh(r.order());
  for (Elem c = 0; c < q.source.g2.order(); ++c)
    ka[c] = l.at(q.source.boundary(c) * ne + p.kappa(q.p2(c)));
  for (Elem a = 0; a < p.g.g2.order(); ++a) io[a] = l.at(p.iota(a));
  for (Elem v = 0; v < r.order(); ++v) {
    si[v] = static_cast<Elem>(l.codes[v] / ne);
    rh[v] = p.rho(static_cast<Elem>(l.codes[v] % ne));
  }
  return Butterfly::make(q.source, p.g, Hom::make(p.g.g2, r, io), Hom::make(q.source.g2, r, ka),
                         Hom::make(r, k1, si), Hom::make(r, p.g.g1, rh));
}

Butterfly compose_special_strict_second(const Butterfly& q, const StrictMorphism& p) {
  if (q.g != p.source) fail(Errc::TypeMismatch, "target of the butterfly is not the source of the strict morphism");
  const CrossedModule& hm = p.source;
  const CrossedModule& gm = p.target;
  SemidirectData data{q.e,
                      gm.g2,
                      hm.g2,
                      q.iota,
                      p.p2,
                      RightAction::pullback(hm.action, q.rho),
                      RightAction::pullback(gm.action, compose(p.p1, q.rho))};
  SemidirectResult sd = generalized_semidirect(data);
  const Group& r = sd.group;
  std::vector<Elem> si(r.order()), rh(r.order());
  for (Elem c = 0; c < r.order(); ++c) {
    auto [y, a] = sd.rep[c];
    si[c] = q.sigma(y);
    rh[c] = gm.g1.mul(p.p1(q.rho(y)), gm.boundary(a));
  }
  return Butterfly::make(q.h, gm, sd.d_prime, compose(sd.p_prime, q.kappa), Hom::make(r, q.h.g1, si),
                         Hom::make(r, gm.g1, rh));
}

// ---------------------------------------------------------------------------

bool is_equivalence(const Butterfly& p) {
  return p.kappa.injective() && p.rho.surjective() && p.kappa.image() == p.rho.kernel();
}

Butterfly flip(const Butterfly& p) {
  if (!is_equivalence(p)) fail(Errc::NotAnEquivalence, "NW-SE sequence is not short exact");
  return Butterfly::make(p.g, p.h, p.kappa, p.iota, p.rho, p.sigma);
}

Kernel kernel(const Butterfly& p) {
  Kernel k;
  k.ker_rho = make_subgroup(p.e, p.rho.kernel());
  const Group& s = k.ker_rho.group;
  std::vector<Elem> idx = subgroup_index(k.ker_rho, p.e.order());
  std::vector<Elem> bd(p.h.g2.order());
  for (Elem b = 0; b < p.h.g2.order(); ++b) bd[b] = idx[p.kappa(b)];
  int nh = p.h.g2.order();
  std::vector<Elem> flat(static_cast<size_t>(nh) * s.order());
  for (Elem b = 0; b < nh; ++b)
    for (Elem y = 0; y < s.order(); ++y)
      flat[static_cast<size_t>(b) * s.order() + y] = p.h.act(b, p.sigma(k.ker_rho.incl(y)));
  k.xmod = CrossedModule::make(Hom::make(p.h.g2, s, bd), RightAction::from_flat(s, p.h.g2, std::move(flat)));
  k.incl = StrictMorphism::make(k.xmod, p.h, Hom::identity(p.h.g2), compose(p.sigma, k.ker_rho.incl));
  return k;
}

Cokernel cokernel(const Butterfly& p) {
  Cokernel c;
  c.coker_kappa = quotient_by_normal(p.e, p.kappa.image());
  const Group& q = c.coker_kappa.group;
  std::vector<Elem> rb(q.order());
  for (Elem v = 0; v < q.order(); ++v) rb[v] = p.rho(c.coker_kappa.rep[v]);
  c.rho_bar = Hom::make(q, p.g.g1, rb);
  c.pi2 = make_subgroup(q, c.rho_bar.kernel());
  c.pi1 = left_cosets(p.g.g1, c.rho_bar.image());
  return c;
}

FiberHomology fiber_homology(const Butterfly& p) {
  FiberHomology fh;
  fh.h0 = left_cosets(p.g.g1, p.rho.image());
  fh.ker_rho = make_subgroup(p.e, p.rho.kernel());
  std::vector<Elem> idx = subgroup_index(fh.ker_rho, p.e.order());
  std::vector<Elem> ka;
  for (Elem y : p.kappa.image()) ka.push_back(idx[y]);
  fh.h1 = quotient_by_normal(fh.ker_rho.group, ka);
  fh.h2 = make_subgroup(p.h.g2, p.kappa.kernel());
  return fh;
}

// ---------------------------------------------------------------------------

bool SequenceCheck::ok() const { return first_failure() < 0; }

int SequenceCheck::first_failure() const {
  for (size_t i = 0; i < exact.size(); ++i)
    if (!exact[i]) return static_cast<int>(i);
  return -1;
}

SequenceCheck check_sequence(std::vector<std::string> terms, std::vector<int> sizes, std::vector<std::vector<int>> maps) {
  if (terms.size() != sizes.size() || maps.size() + 1 != sizes.size())
    fail(Errc::InvalidArgument, "sequence needs one map between consecutive terms");
  for (size_t i = 0; i < maps.size(); ++i) {
    if (static_cast<int>(maps[i].size()) != sizes[i]) fail(Errc::InvalidArgument, "map " + str(i) + " has wrong length");
    for (int y : maps[i])
      if (y < 0 || y >= sizes[i + 1]) fail(Errc::InvalidArgument, "map " + str(i) + " leaves its target");
    if (maps[i][0] != 0) fail(Errc::InvalidArgument, "map " + str(i) + " is not pointed");
  }
  SequenceCheck c;
  c.terms = std::move(terms);
  c.sizes = std::move(sizes);
  c.maps = std::move(maps);
  c.exact.assign(c.sizes.size(), 1);
  for (size_t i = 1; i + 1 < c.sizes.size(); ++i) {
    std::vector<char> img(c.sizes[i], 0), ker(c.sizes[i], 0);
    for (int y : c.maps[i - 1]) img[y] = 1;
    for (int b = 0; b < c.sizes[i]; ++b) ker[b] = c.maps[i][b] == 0;
    c.exact[i] = img == ker;
  }
  return c;
}

SequenceCheck les_fiber(const Butterfly& p) {
  FiberHomology fh = fiber_homology(p);
  HomotopyGroups hh = homotopy_groups(p.h), hg = homotopy_groups(p.g);
  std::vector<Elem> pi2h = subgroup_index(hh.pi2, p.h.g2.order());
  std::vector<Elem> kr = subgroup_index(fh.ker_rho, p.e.order());
  int n_h2 = fh.h2.group.order(), n_h1 = fh.h1.group.order();

  std::vector<int> m1(n_h2), m3(hg.pi2.group.order()), m4(n_h1), m6(hg.pi1.group.order());
  for (Elem i = 0; i < n_h2; ++i) m1[i] = pi2h[fh.h2.incl(i)];
  for (Elem j = 0; j < hg.pi2.group.order(); ++j) m3[j] = fh.h1.proj(kr[p.iota(hg.pi2.incl(j))]);
  for (Elem c = 0; c < n_h1; ++c) m4[c] = hh.pi1.proj(p.sigma(fh.ker_rho.incl(fh.h1.rep[c])));
  for (Elem r = 0; r < fh.ker_rho.group.order(); ++r)
    if (hh.pi1.proj(p.sigma(fh.ker_rho.incl(r))) != m4[fh.h1.proj(r)])
      fail(Errc::ExactnessFails, "H1(C) -> pi1 H not well defined");
  for (Elem c = 0; c < hg.pi1.group.order(); ++c) m6[c] = fh.h0.of[hg.pi1.rep[c]];
  for (Elem g = 0; g < p.g.g1.order(); ++g)
    if (fh.h0.of[g] != m6[hg.pi1.proj(g)]) fail(Errc::ExactnessFails, "pi1 G -> H0(C) not well defined");

  return check_sequence({"1", "H2(C)", "pi2 H", "pi2 G", "H1(C)", "pi1 H", "pi1 G", "H0(C)", "1"},
                        {1, n_h2, hh.pi2.group.order(), hg.pi2.group.order(), n_h1, hh.pi1.group.order(),
                         hg.pi1.group.order(), fh.h0.count(), 1},
                        {{0}, m1, pi2_map(p).images(), m3, m4, pi1_map(p).images(), m6,
                         std::vector<int>(fh.h0.count(), 0)});
}

SequenceCheck les_kernel(const Butterfly& p) {
  Kernel k = kernel(p);
  Cokernel ck = cokernel(p);
  HomotopyGroups hk = homotopy_groups(k.xmod), hh = homotopy_groups(p.h), hg = homotopy_groups(p.g);
  InducedMaps im = induced_maps(k.incl);
  std::vector<Elem> kr = subgroup_index(k.ker_rho, p.e.order());
  std::vector<int> m3(hg.pi2.group.order()), m6(hg.pi1.group.order());
  for (Elem j = 0; j < hg.pi2.group.order(); ++j) m3[j] = hk.pi1.proj(kr[p.iota(hg.pi2.incl(j))]);
  for (Elem c = 0; c < hg.pi1.group.order(); ++c) m6[c] = ck.pi1.of[hg.pi1.rep[c]];
  for (Elem g = 0; g < p.g.g1.order(); ++g)
    if (ck.pi1.of[g] != m6[hg.pi1.proj(g)]) fail(Errc::ExactnessFails, "pi1 G -> pi1 Coker not well defined");
  return check_sequence({"1", "pi2 Ker", "pi2 H", "pi2 G", "pi1 Ker", "pi1 H", "pi1 G", "pi1 Coker", "1"},
                        {1, hk.pi2.group.order(), hh.pi2.group.order(), hg.pi2.group.order(), hk.pi1.group.order(),
                         hh.pi1.group.order(), hg.pi1.group.order(), ck.pi1.count(), 1},
                        {{0}, im.pi2.images(), pi2_map(p).images(), m3, im.pi1.images(), pi1_map(p).images(), m6,
                         std::vector<int>(ck.pi1.count(), 0)});
}

bool kernel_cokernel_match(const Butterfly& p) {
  Kernel k = kernel(p);
  Cokernel ck = cokernel(p);
  HomotopyGroups hk = homotopy_groups(k.xmod);
  std::vector<Elem> idx = subgroup_index(ck.pi2, ck.coker_kappa.group.order());
  std::vector<Elem> m(hk.pi1.group.order(), -1);
  for (Elem r = 0; r < k.ker_rho.group.order(); ++r) {
    Elem y = idx[ck.coker_kappa.proj(k.ker_rho.incl(r))];
    if (y < 0) return false;
    Elem& slot = m[hk.pi1.proj(r)];
    if (slot >= 0 && slot != y) return false;
    slot = y;
  }
  try {
    return Hom::make(hk.pi1.group, ck.pi2.group, m).bijective();
  } catch (const Error&) {
    return false;
  }
}

bool kernel_and_cokernel_trivial(const Butterfly& p) {
  Kernel k = kernel(p);
  Cokernel ck = cokernel(p);
  HomotopyGroups hk = homotopy_groups(k.xmod);
  return hk.pi1.group.order() == 1 && hk.pi2.group.order() == 1 && ck.pi1.count() == 1 && ck.pi2.group.order() == 1;
}

// ---------------------------------------------------------------------------

namespace {

HomSearch witness_search(const Butterfly& q, const Butterfly& p) {
  if (q.g != p.h) fail(Errc::TypeMismatch, "butterflies are not composable");
  HomSearch s;
  s.domain = q.e;
  s.codomain = p.e;
  for (Elem b = 0; b < p.h.g2.order(); ++b) s.fixed.emplace_back(q.iota(b), p.kappa(b));
  for (Elem c = 0; c < q.h.g2.order(); ++c) s.fixed.emplace_back(q.kappa(c), 0);
  s.allowed = [&q, &p](Elem x, Elem y) { return p.sigma(y) == q.rho(x) && p.rho(y) == 0; };
  return s;
}

}  // namespace

std::optional<Hom> triviality_witness(const Butterfly& q, const Butterfly& p) { return find_hom(witness_search(q, p)); }

ExactnessReport exactness_for(const Butterfly& q, const Butterfly& p, const Hom& delta) {
  HomSearch s = witness_search(q, p);
  if (delta.domain() != q.e || delta.codomain() != p.e) fail(Errc::PrecondFails, "delta must map F to E");
  for (auto [x, y] : s.fixed)
    if (delta(x) != y) fail(Errc::PrecondFails, "delta misses a fixed value at " + str(x));
  for (Elem x = 0; x < q.e.order(); ++x)
    if (!s.allowed(x, delta(x))) fail(Errc::PrecondFails, "delta incompatible with the legs at " + str(x));
  Kernel k = kernel(p);
  std::vector<Elem> idx = subgroup_index(k.ker_rho, p.e.order());
  std::vector<Elem> dk(q.e.order());
  for (Elem x = 0; x < q.e.order(); ++x) dk[x] = idx[delta(x)];
  ExactnessReport r;
  r.delta = delta;
  r.to_kernel = Butterfly::make(q.h, k.xmod, q.iota, q.kappa, q.sigma, Hom::make(q.e, k.ker_rho.group, dk));
  Cokernel ck = cokernel(r.to_kernel);
  r.exact = ck.pi1.count() == 1 && ck.pi2.group.order() == 1;
  r.four_term = delta.kernel() == q.kappa.image() && p.rho.kernel() == delta.image();
  return r;
}

ExactnessReport is_exact_at(const Butterfly& q, const Butterfly& p) {
  HomSearch s = witness_search(q, p);
  std::optional<ExactnessReport> first;
  std::optional<ExactnessReport> hit;
  enumerate_homs(s, [&](const std::vector<Elem>& img) {
    ExactnessReport r = exactness_for(q, p, Hom::make(q.e, p.e, img));
    if (r.exact != r.four_term) fail(Errc::PostconditionFailed, "cokernel test and four-term test disagree");
    if (!first) first = r;
    if (r.exact) hit = r;
    return !hit;
  });
  if (!first) fail(Errc::PrecondFails, "the composite is not trivial");
  return hit ? *hit : *first;
}

// ---------------------------------------------------------------------------

void validate_braiding(const CrossedModule& x, const Braiding& b) {
  int n = x.g1.order();
  if (b.size() != static_cast<size_t>(n) * n) fail(Errc::InvalidArgument, "braiding table has wrong size");
  for (Elem v : b)
    if (v < 0 || v >= x.g2.order()) fail(Errc::InvalidArgument, "braiding value out of range");
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v)
      if (x.boundary(b[static_cast<size_t>(u) * n + v]) != x.g1.commutator(u, v))
        fail(Errc::BraidingConventionFails, "d{x,y} != x y x^-1 y^-1 at (" + str(u) + "," + str(v) + ")");
}

void check_braided(const Butterfly& p, const Braiding& bh, const Braiding& bg) {
  validate_braiding(p.h, bh);
  validate_braiding(p.g, bg);
  int nh = p.h.g1.order(), ng = p.g.g1.order();
  const Group& e = p.e;
  for (Elem x = 0; x < e.order(); ++x)
    for (Elem y = 0; y < e.order(); ++y) {
      Elem lhs = p.kappa(bh[static_cast<size_t>(p.sigma(x)) * nh + p.sigma(y)]);
      Elem br = p.iota(bg[static_cast<size_t>(p.rho(x)) * ng + p.rho(e.inv(y))]);
      Elem rhs = e.mul(e.mul(e.mul(e.mul(x, y), e.inv(x)), br), e.inv(y));
      if (lhs != rhs) fail(Errc::NotBraided, "(" + str(x) + "," + str(y) + ")");
    }
}

bool is_braided_butterfly(const Butterfly& p, const Braiding& bh, const Braiding& bg) {
  try {
    check_braided(p, bh, bg);
    return true;
  } catch (const Error& err) {
    if (err.code() == Errc::NotBraided) return false;
    throw;
  }
}

CrossedModule braided_cokernel(const Butterfly& p, const Braiding& bg) {
  validate_braiding(p.g, bg);
  Cokernel ck = cokernel(p);
  const Group& q = ck.coker_kappa.group;
  const Group& g1 = p.g.g1;
  int n1 = g1.order();
  std::vector<Elem> flat(static_cast<size_t>(q.order()) * n1, -1);
  for (Elem x = 0; x < p.e.order(); ++x) {
    Elem c = ck.coker_kappa.proj(x);
    for (Elem g = 0; g < n1; ++g) {
      Elem br = bg[static_cast<size_t>(g1.inv(p.rho(x))) * n1 + g1.inv(g)];
      Elem y = ck.coker_kappa.proj(p.e.mul(x, p.iota(br)));
      Elem& slot = flat[static_cast<size_t>(c) * n1 + g];
      if (slot >= 0 && slot != y) fail(Errc::NotBraided, "action on Coker kappa not well defined");
      slot = y;
    }
  }
  return CrossedModule::make(ck.rho_bar, RightAction::from_flat(g1, q, std::move(flat)));
}

}  // namespace bfly
