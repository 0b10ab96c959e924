#include <bfly/extensions.hpp>

#include "pair_quotient.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>

namespace bfly {

using detail::hom_from_classes;
using detail::pair_quotient;
using detail::PairQuotient;

namespace {

std::string str(long long x) { return std::to_string(x); }

std::vector<Elem> conj_images(const Hom& incl, const std::vector<Elem>& back, Elem x) {
  const Group& e = incl.codomain();
  std::vector<Elem> im(incl.domain().order());
  for (Elem a = 0; a < incl.domain().order(); ++a) im[a] = back[e.conj(incl(a), x)];
  return im;
}

std::vector<Elem> inverse_table(const Hom& incl) {
  std::vector<Elem> back(incl.codomain().order(), -1);
  for (Elem a = 0; a < incl.domain().order(); ++a) back[incl(a)] = a;
  return back;
}

void same_base(const Extension& a, const Extension& b) {
  if (a.n != b.n || a.gamma != b.gamma) fail(Errc::TypeMismatch, "extensions have different kernels or quotients");
}

}  // namespace

Elem OutGroup::aut_index(const std::vector<Elem>& images) const {
  auto it = std::lower_bound(aut.autos.begin(), aut.autos.end(), images);
  if (it == aut.autos.end() || *it != images) return -1;
  return static_cast<Elem>(it - aut.autos.begin());
}

OutGroup out_group(const Group& n) {
  OutGroup o;
  o.aut = aut_xmod(n);
  o.out = quotient_by_normal(o.aut.xmod.g1, o.aut.xmod.boundary.image());
  return o;
}

std::optional<Hom> extension_iso(const Extension& a, const Extension& b) {
  if (a.n != b.n || a.gamma != b.gamma || a.e.order() != b.e.order()) return std::nullopt;
  if (a.e.order_profile() != b.e.order_profile()) return std::nullopt;
  HomSearch s{a.e, b.e, {}, nullptr, true};
  for (Elem g : a.n.generators()) s.fixed.emplace_back(a.incl(g), b.incl(g));
  s.allowed = [&](Elem x, Elem y) { return b.proj(y) == a.proj(x); };
  return find_hom(s);
}

bool equivalent(const Extension& a, const Extension& b) { return extension_iso(a, b).has_value(); }

SemiExact SemiExact::make(const Hom& incl, const Hom& proj) {
  auto bad = [](const std::string& w) { fail(Errc::NotSemiExact, w); };
  if (incl.codomain() != proj.domain()) bad("incl and proj do not meet in one group");
  if (!incl.injective()) bad("incl is not injective");
  if (!proj.surjective()) bad("proj is not surjective");
  const Group& e = proj.domain();
  std::vector<Elem> m = incl.image();
  for (Elem a : m)
    if (proj(a) != 0) bad("proj o incl is not trivial");
  if (!is_normal(e, m)) bad("M is not normal in E");
  std::vector<Elem> k = proj.kernel(), gens = m;
  for (Elem x : k) {
    bool central = true;
    for (Elem a : m)
      if (e.mul(x, a) != e.mul(a, x)) {
        central = false;
        break;
      }
    if (central) gens.push_back(x);
  }
  if (closure(e, gens).size() != k.size()) bad("Ker proj is not generated by M and its centralizer");
  return {incl.domain(), e, proj.codomain(), incl, proj};
}

Hom outer_action(const SemiExact& s, const OutGroup& out) {
  std::vector<Elem> back = inverse_table(s.incl);
  std::vector<Elem> psi(s.gamma.order(), -1);
  for (Elem x = 0; x < s.e.order(); ++x) {
    Elem c = out.out_class(conj_images(s.incl, back, x));
    Elem& slot = psi[s.proj(x)];
    if (slot < 0) slot = c;
    else if (slot != c) fail(Errc::NotSemiExact, "outer action depends on the lift of " + str(s.proj(x)));
  }
  return Hom::make(s.gamma, out.group(), psi);
}

Hom outer_action(const Extension& ext, const OutGroup& out) { return outer_action(SemiExact::of(ext), out); }

Elem BaerProduct::cls(Elem x, Elem y) const {
  auto it = pairs.index.find(static_cast<std::uint64_t>(x) * width + y);
  return it == pairs.index.end() ? -1 : quotient.proj(it->second);
}

namespace {

std::vector<Elem> centralizer_in_kernel(const SemiExact& s) {
  std::vector<Elem> out, m = s.incl.image();
  for (Elem x : s.proj.kernel()) {
    bool central = true;
    for (Elem a : m)
      if (s.e.mul(x, a) != s.e.mul(a, x)) {
        central = false;
        break;
      }
    if (central) out.push_back(x);
  }
  return out;
}

bool check_four_term(const SemiExact& s0, const SemiExact& s, const BaerProduct& bp) {
  if (!bp.to_gamma.surjective()) return false;
  Subgroup c0 = make_subgroup(s0.e, centralizer_in_kernel(s0));
  Subgroup c1 = make_subgroup(s.e, centralizer_in_kernel(s));
  Group prod = direct_product(c0.group, c1.group);
  int w = c1.group.order();
  std::vector<Elem> im(prod.order());
  for (Elem u = 0; u < prod.order(); ++u) {
    im[u] = bp.cls(c0.incl(u / w), c1.incl(u % w));
    if (im[u] < 0) return false;
  }
  Hom j;
  try {
    j = Hom::make(prod, bp.group, im);
  } catch (const Error&) {
    return false;
  }
  // kernel of j is Z(M) mapped diagonally
  std::vector<Elem> back0(s0.e.order(), -1), back1(s.e.order(), -1);
  for (Elem i = 0; i < c0.group.order(); ++i) back0[c0.incl(i)] = i;
  for (Elem i = 0; i < c1.group.order(); ++i) back1[c1.incl(i)] = i;
  std::vector<Elem> diag;
  for (Elem a : s0.m.center()) {
    Elem u = back0[s0.incl(a)], v = back1[s.incl(a)];
    if (u < 0 || v < 0) return false;
    diag.push_back(u * w + v);
  }
  std::sort(diag.begin(), diag.end());
  if (j.kernel() != diag) return false;
  return j.image() == bp.to_gamma.kernel();
}

}  // namespace

BaerProduct baer_product(const SemiExact& s0, const SemiExact& s) {
  if (s0.m != s.m || s0.gamma != s.gamma) fail(Errc::TypeMismatch, "sequences have different M or gamma");
  OutGroup out = out_group(s0.m);
  Hom psi0 = outer_action(s0, out), psi = outer_action(s, out);
  if (psi0 != psi) fail(Errc::PsiMismatch, "the two sequences induce different maps to Out(M)");
  std::vector<Elem> back0 = inverse_table(s0.incl), back = inverse_table(s.incl);
  std::vector<Elem> a0(s0.e.order()), a1(s.e.order());
  for (Elem x = 0; x < s0.e.order(); ++x) a0[x] = out.aut_index(conj_images(s0.incl, back0, x));
  for (Elem y = 0; y < s.e.order(); ++y) a1[y] = out.aut_index(conj_images(s.incl, back, y));
  std::vector<std::pair<Elem, Elem>> diag;
  for (Elem a = 0; a < s0.m.order(); ++a) diag.emplace_back(s0.incl(a), s.incl(a));
  PairQuotient pq = pair_quotient(
      s0.e, s.e, [&](Elem x, Elem y) { return s0.proj(x) == s.proj(y) && a0[x] == a1[y]; }, diag);
  BaerProduct bp;
  bp.group = pq.q.group;
  bp.to_gamma = hom_from_classes(pq, s0.gamma, [&](Elem x, Elem) { return s0.proj(x); });
  bp.pairs = std::move(pq.l);
  bp.width = pq.ne;
  bp.quotient = std::move(pq.q);
  bp.four_term = check_four_term(s0, s, bp);
  return bp;
}

Extension difference_ext(const Extension& e0, const Extension& e) {
  same_base(e0, e);
  BaerProduct bp = baer_product(SemiExact::of(e0), SemiExact::of(e));
  Subgroup c = make_subgroup(e0.n, e0.n.center());
  std::vector<Elem> im(c.group.order());
  for (Elem i = 0; i < c.group.order(); ++i) im[i] = bp.cls(e0.incl(c.incl(i)), 0);
  try {
    return Extension::make(Hom::make(c.group, bp.group, im), bp.to_gamma);
  } catch (const Error& err) {
    fail(Errc::PostconditionFailed, std::string("difference is not an extension: ") + err.what());
  }
}

Extension act_ext(const Extension& e0, const Extension& h) {
  Subgroup c = make_subgroup(e0.n, e0.n.center());
  if (h.n != c.group || h.gamma != e0.gamma) fail(Errc::TypeMismatch, "H must extend gamma by the center of N");
  BaerProduct bp = baer_product(SemiExact::make(compose(e0.incl, c.incl), e0.proj), SemiExact::of(h));
  std::vector<Elem> im(e0.n.order());
  for (Elem a = 0; a < e0.n.order(); ++a) im[a] = bp.cls(e0.incl(a), 0);
  try {
    return Extension::make(Hom::make(e0.n, bp.group, im), bp.to_gamma);
  } catch (const Error& err) {
    fail(Errc::PostconditionFailed, std::string("action result is not an extension: ") + err.what());
  }
}

Extension baer_sum(const Extension& a, const Extension& b) {
  same_base(a, b);
  if (!a.n.is_abelian()) fail(Errc::NotAbelian, "Baer sum needs an abelian kernel");
  if (module_of_extension(a).action != module_of_extension(b).action)
    fail(Errc::ActionMismatch, "extensions induce different module structures");
  std::vector<std::pair<Elem, Elem>> anti;
  for (Elem x = 0; x < a.n.order(); ++x) anti.emplace_back(a.incl(x), b.incl(a.n.inv(x)));
  PairQuotient pq = pair_quotient(a.e, b.e, [&](Elem x, Elem y) { return a.proj(x) == b.proj(y); }, anti);
  std::vector<Elem> im(a.n.order());
  for (Elem x = 0; x < a.n.order(); ++x) im[x] = pq.cls(a.incl(x), 0);
  Hom to_gamma = hom_from_classes(pq, a.gamma, [&](Elem x, Elem) { return a.proj(x); });
  return Extension::make(Hom::make(a.n, pq.q.group, im), to_gamma);
}

Extension split_extension(const GammaModule& m) {
  return extension_from_2cocycle(m, Cochain(static_cast<size_t>(m.gamma.order()) * m.gamma.order(), 0));
}

// ---------------------------------------------------------------------------
// Schreier search

namespace {

// (x,a)(y,b) = (xy, f(x,y) phi_y(a) b)
struct FactorSetSearch {
  const Group& gamma;
  const Group& n;
  std::vector<const std::vector<Elem>*> phi;  // per gamma element
  int q, m, nv;
  std::vector<std::vector<Elem>> domain;      // per variable (y,z)
  std::vector<std::vector<std::array<int, 3>>> checks;  // triples (x,y,z) closed by a variable
  std::vector<Elem> val;

  int var(Elem y, Elem z) const { return (y - 1) * (q - 1) + (z - 1); }
  Elem f(Elem y, Elem z) const { return (y == 0 || z == 0) ? 0 : val[var(y, z)]; }

  FactorSetSearch(const Group& g, const Group& nn, std::vector<const std::vector<Elem>*> ph)
      : gamma(g), n(nn), phi(std::move(ph)), q(g.order()), m(nn.order()), nv((q - 1) * (q - 1)) {
    domain.resize(nv);
    checks.resize(nv);
    val.assign(nv, 0);
    for (Elem y = 1; y < q; ++y)
      for (Elem z = 1; z < q; ++z) {
        const std::vector<Elem>& pyz = *phi[gamma.mul(y, z)];
        const std::vector<Elem>& py = *phi[y];
        const std::vector<Elem>& pz = *phi[z];
        for (Elem u = 0; u < m; ++u) {
          bool ok = true;
          for (Elem a = 0; a < m && ok; ++a) ok = n.conj(pyz[a], u) == pz[py[a]];
          if (ok) domain[var(y, z)].push_back(u);
        }
      }
    for (Elem x = 1; x < q; ++x)
      for (Elem y = 1; y < q; ++y)
        for (Elem z = 1; z < q; ++z) {
          int last = std::max(var(x, y), var(y, z));
          Elem xy = gamma.mul(x, y), yz = gamma.mul(y, z);
          if (xy != 0) last = std::max(last, var(xy, z));
          if (yz != 0) last = std::max(last, var(x, yz));
          checks[last].push_back({x, y, z});
        }
  }

  bool holds(const std::array<int, 3>& t) const {
    auto [x, y, z] = t;
    Elem lhs = n.mul(f(gamma.mul(x, y), z), (*phi[z])[f(x, y)]);
    Elem rhs = n.mul(f(x, gamma.mul(y, z)), f(y, z));
    return lhs == rhs;
  }

  void run(const std::function<void(const std::vector<Elem>&)>& visit) {
    if (q == 1) {
      visit(val);
      return;
    }
    for (const auto& d : domain)
      if (d.empty()) return;
    std::vector<size_t> pos(nv, 0);
    int i = 0;
    val[0] = domain[0][0];
    while (i >= 0) {
      bool ok = true;
      for (const auto& t : checks[i])
        if (!holds(t)) {
          ok = false;
          break;
        }
      if (ok && i == nv - 1) visit(val);
      if (ok && i < nv - 1) {
        ++i;
        pos[i] = 0;
        val[i] = domain[i][0];
        continue;
      }
      while (i >= 0 && ++pos[i] == domain[i].size()) --i;
      if (i >= 0) val[i] = domain[i][pos[i]];
    }
  }
};

Extension extension_of_factor_set(const Group& gamma, const Group& n,
                                  const std::vector<const std::vector<Elem>*>& phi, const FactorSetSearch& fs) {
  int q = gamma.order(), m = n.order(), t = q * m;
  std::vector<Elem> flat(static_cast<size_t>(t) * t);
  for (Elem u = 0; u < t; ++u)
    for (Elem v = 0; v < t; ++v) {
      Elem x = u / m, a = u % m, y = v / m, b = v % m;
      flat[static_cast<size_t>(u) * t + v] = gamma.mul(x, y) * m + n.mul(n.mul(fs.f(x, y), (*phi[y])[a]), b);
    }
  Group e = Group::from_flat(t, std::move(flat));
  std::vector<Elem> inc(m), pr(t);
  for (Elem a = 0; a < m; ++a) inc[a] = a;
  for (Elem u = 0; u < t; ++u) pr[u] = u / m;
  return Extension::make(Hom::make(n, e, inc), Hom::make(e, gamma, pr));
}

constexpr long long kFactorSetLimit = 200000;

}  // namespace

ExtensionEnumeration enumerate_extensions_if(const Group& gamma, const Group& n,
                                             const std::function<bool(const Hom&)>& keep_psi) {
  check_size(static_cast<long long>(gamma.order()) * n.order(), "extension");
  ExtensionEnumeration en;
  en.gamma = gamma;
  en.n = n;
  en.out = out_group(n);
  const OutGroup& out = en.out;
  for (const Hom& psi : all_homs(gamma, out.group())) {
    if (keep_psi && !keep_psi(psi)) continue;
    // a fixed lift of psi; other lifts only move the section by elements of N
    std::vector<const std::vector<Elem>*> phi(gamma.order());
    for (Elem x = 0; x < gamma.order(); ++x) phi[x] = &out.aut.autos[out.out.rep[psi(x)]];
    FactorSetSearch fs(gamma, n, phi);
    std::vector<Extension> reps;
    std::vector<std::vector<int>> profiles;
    fs.run([&](const std::vector<Elem>&) {
      if (++en.factor_sets > kFactorSetLimit) fail(Errc::SizeLimit, "too many factor sets");
      Extension ext = extension_of_factor_set(gamma, n, phi, fs);
      std::vector<int> prof = ext.e.order_profile();
      for (size_t i = 0; i < reps.size(); ++i)
        if (profiles[i] == prof && equivalent(reps[i], ext)) return;
      reps.push_back(std::move(ext));
      profiles.push_back(std::move(prof));
    });
    for (Extension& e : reps) {
      if (outer_action(e, out) != psi) fail(Errc::PostconditionFailed, "constructed extension has the wrong psi");
      en.classes.push_back(std::move(e));
      en.psi.push_back(psi);
    }
  }
  return en;
}

ExtensionEnumeration enumerate_extensions(const Group& gamma, const Group& n, const std::optional<Hom>& psi) {
  if (!psi) return enumerate_extensions_if(gamma, n, nullptr);
  Hom want = *psi;
  return enumerate_extensions_if(gamma, n, [&](const Hom& h) { return h.images() == want.images(); });
}

ExtensionTorsorCheck check_extension_torsor(const ExtensionEnumeration& en) {
  ExtensionTorsorCheck r;
  std::vector<bool> done(en.classes.size(), false);
  for (size_t i = 0; i < en.classes.size(); ++i) {
    if (done[i]) continue;
    ++r.psi_count;
    const Extension& e0 = en.classes[i];
    Extension d0 = difference_ext(e0, e0);
    Cohomology h2 = h_n(module_of_extension(d0), 2);
    std::set<std::vector<linalg::Int>> seen;
    for (size_t j = i; j < en.classes.size(); ++j) {
      if (en.psi[j] != en.psi[i]) continue;
      done[j] = true;
      Extension d = difference_ext(e0, en.classes[j]);
      if (module_of_extension(d).action != h2.module.action)
        fail(Errc::PostconditionFailed, "differences carry different module structures");
      if (!seen.insert(h2.coordinates(two_cocycle_from_extension(d, d.min_section()))).second) r.free = false;
      if (!equivalent(act_ext(e0, d), en.classes[j])) r.recovers = false;
    }
    if (static_cast<long long>(seen.size()) != h2.order()) r.transitive = false;
  }
  return r;
}

// ---------------------------------------------------------------------------
// butterflies from a group

GroupButterfly GroupButterfly::make(const CrossedModule& g, const Extension& ext, const Hom& rho) {
  if (ext.n != g.g2) fail(Errc::TypeMismatch, "extension kernel is not G2");
  if (rho.domain() != ext.e || rho.codomain() != g.g1) fail(Errc::TypeMismatch, "rho must map E to G1");
  for (Elem a = 0; a < g.g2.order(); ++a)
    if (rho(ext.incl(a)) != g.boundary(a)) fail(Errc::ButterflyAxiomFails, "rho o incl != d at " + str(a));
  std::vector<Elem> back = ext.incl_inverse();
  for (Elem x = 0; x < ext.e.order(); ++x)
    for (Elem a = 0; a < g.g2.order(); ++a)
      if (g.act(a, rho(x)) != back[ext.e.conj(ext.incl(a), x)])
        fail(Errc::EquivarianceFails, "x=" + str(x) + " alpha=" + str(a));
  return {ext, rho};
}

Butterfly to_butterfly(const GroupButterfly& p, const CrossedModule& g) {
  CrossedModule h = group_as_xmod(p.ext.gamma);
  return Butterfly::make(h, g, p.ext.incl, Hom::trivial(h.g2, p.ext.e), p.ext.proj, p.rho);
}

bool isomorphic(const GroupButterfly& p, const GroupButterfly& q, const CrossedModule& g) {
  if (p.ext.gamma != q.ext.gamma || p.ext.e.order() != q.ext.e.order()) return false;
  if (p.ext.e.order_profile() != q.ext.e.order_profile()) return false;
  return isomorphic(to_butterfly(p, g), to_butterfly(q, g));
}

Hom chi_of(const GroupButterfly& p, const HomotopyGroups& hg) {
  std::vector<Elem> s = p.ext.min_section(), im(s.size());
  for (size_t x = 0; x < s.size(); ++x) im[x] = hg.pi1.proj(p.rho(s[x]));
  return Hom::make(p.ext.gamma, hg.pi1.group, im);
}

std::vector<Hom> ButterflyEnumeration::distinct_chi() const {
  std::vector<Hom> out;
  for (const Hom& c : chi)
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  return out;
}

std::vector<int> ButterflyEnumeration::fiber(const Hom& c) const {
  std::vector<int> out;
  for (size_t i = 0; i < chi.size(); ++i)
    if (chi[i] == c) out.push_back(static_cast<int>(i));
  return out;
}

int ButterflyEnumeration::classify(const GroupButterfly& p) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (isomorphic(classes[i], p, g)) return static_cast<int>(i);
  return -1;
}

ButterflyEnumeration enumerate_butterflies(const Group& gamma, const CrossedModule& g) {
  ButterflyEnumeration en;
  en.gamma = gamma;
  en.g = g;
  en.hg = homotopy_groups(g);
  OutGroup out = out_group(g.g2);
  // conjugation on G2 inside E must come from G1
  std::set<Elem> reachable;
  for (Elem h = 0; h < g.g1.order(); ++h) {
    std::vector<Elem> im(g.g2.order());
    for (Elem a = 0; a < g.g2.order(); ++a) im[a] = g.act(a, h);
    reachable.insert(out.out_class(im));
  }
  ExtensionEnumeration ext = enumerate_extensions_if(gamma, g.g2, [&](const Hom& psi) {
    for (Elem x = 0; x < gamma.order(); ++x)
      if (!reachable.count(psi(x))) return false;
    return true;
  });
  for (const Extension& e : ext.classes) {
    std::vector<Elem> back = e.incl_inverse();
    int ne = e.e.order(), n1 = g.g1.order();
    std::vector<char> compat(static_cast<size_t>(ne) * n1, 1);
    for (Elem x = 0; x < ne; ++x)
      for (Elem y = 0; y < n1; ++y)
        for (Elem a = 0; a < g.g2.order(); ++a)
          if (g.act(a, y) != back[e.e.conj(e.incl(a), x)]) {
            compat[static_cast<size_t>(x) * n1 + y] = 0;
            break;
          }
    HomSearch s{e.e, g.g1, {}, nullptr, false};
    for (Elem a = 0; a < g.g2.order(); ++a) s.fixed.emplace_back(e.incl(a), g.boundary(a));
    s.allowed = [&](Elem x, Elem y) { return compat[static_cast<size_t>(x) * n1 + y] != 0; };
    std::vector<Butterfly> local;
    enumerate_homs(s, [&](const std::vector<Elem>& img) {
      GroupButterfly p = GroupButterfly::make(g, e, Hom::make(e.e, g.g1, img));
      Butterfly b = to_butterfly(p, g);
      for (const Butterfly& r : local)
        if (isomorphic(r, b)) return true;
      local.push_back(b);
      en.chi.push_back(chi_of(p, en.hg));
      en.classes.push_back(std::move(p));
      return true;
    });
  }
  return en;
}

namespace {

SemiExact pi2_sequence(const GroupButterfly& p, const HomotopyGroups& hg) {
  return SemiExact::make(compose(p.ext.incl, hg.pi2.incl), p.ext.proj);
}

}  // namespace

GroupButterfly act_h2(const GroupButterfly& p0, const Extension& k, const CrossedModule& g) {
  HomotopyGroups hg = homotopy_groups(g);
  if (k.n != hg.pi2.group || k.gamma != p0.ext.gamma) fail(Errc::TypeMismatch, "K must extend gamma by pi2");
  BaerProduct bp;
  try {
    bp = baer_product(pi2_sequence(p0, hg), SemiExact::of(k));
  } catch (const Error& err) {
    if (err.code() == Errc::PsiMismatch) fail(Errc::ActionMismatch, "K does not induce the action of chi on pi2");
    throw;
  }
  const Extension& e0 = p0.ext;
  std::vector<Elem> inc(g.g2.order()), rh(bp.group.order());
  for (Elem b = 0; b < g.g2.order(); ++b) inc[b] = bp.cls(e0.incl(b), 0);
  for (Elem c = 0; c < bp.group.order(); ++c)
    rh[c] = p0.rho(static_cast<Elem>(bp.pairs.codes[bp.quotient.rep[c]] / bp.width));
  Extension ext = Extension::make(Hom::make(g.g2, bp.group, inc), bp.to_gamma);
  return GroupButterfly::make(g, ext, Hom::make(bp.group, g.g1, rh));
}

Extension difference_butterflies(const GroupButterfly& p0, const GroupButterfly& p, const CrossedModule& g) {
  HomotopyGroups hg = homotopy_groups(g);
  if (p0.ext.gamma != p.ext.gamma) fail(Errc::TypeMismatch, "butterflies start at different groups");
  if (chi_of(p0, hg) != chi_of(p, hg)) fail(Errc::ChiMismatch, "butterflies induce different maps to pi1");
  const Extension &a = p0.ext, &b = p.ext;
  std::vector<std::pair<Elem, Elem>> diag;
  for (Elem x = 0; x < g.g2.order(); ++x) diag.emplace_back(a.incl(x), b.incl(x));
  PairQuotient pq = pair_quotient(
      a.e, b.e, [&](Elem x, Elem y) { return a.proj(x) == b.proj(y) && p0.rho(x) == p.rho(y); }, diag);
  std::vector<Elem> inc(hg.pi2.group.order());
  for (Elem i = 0; i < hg.pi2.group.order(); ++i) inc[i] = pq.cls(a.incl(hg.pi2.incl(i)), 0);
  Hom to_gamma = hom_from_classes(pq, a.gamma, [&](Elem x, Elem) { return a.proj(x); });
  try {
    return Extension::make(Hom::make(hg.pi2.group, pq.q.group, inc), to_gamma);
  } catch (const Error& err) {
    fail(Errc::PostconditionFailed, std::string("difference is not an extension: ") + err.what());
  }
}

GroupButterfly lift_via_section(const Hom& chi_tilde, const Extension& k, const CrossedModule& g) {
  HomotopyGroups hg = homotopy_groups(g);
  if (chi_tilde.domain() != k.gamma || chi_tilde.codomain() != g.g1)
    fail(Errc::TypeMismatch, "chi_tilde must map gamma to G1");
  if (k.n != hg.pi2.group) fail(Errc::TypeMismatch, "K must extend gamma by pi2");
  RightAction on_pi2 = conjugation_on_kernel(k);
  std::vector<Elem> back = inverse_table(hg.pi2.incl);
  for (Elem x = 0; x < k.e.order(); ++x)
    for (Elem a = 0; a < k.n.order(); ++a)
      if (back[g.act(hg.pi2.incl(a), chi_tilde(k.proj(x)))] != on_pi2.apply(a, x))
        fail(Errc::NotALift, "conjugation in K differs from chi_tilde at x=" + str(x) + " a=" + str(a));
  SemidirectData data{k.e,    g.g2, hg.pi2.group, k.incl, hg.pi2.incl, on_pi2,
                      RightAction::pullback(g.action, compose(chi_tilde, k.proj))};
  SemidirectResult res = generalized_semidirect(data);
  int n = res.group.order();
  std::vector<Elem> pr(n), rh(n);
  for (Elem c = 0; c < n; ++c) {
    auto [kk, a] = res.rep[c];
    pr[c] = k.proj(kk);
    rh[c] = g.g1.mul(chi_tilde(k.proj(kk)), g.boundary(a));
  }
  Extension ext = Extension::make(res.d_prime, Hom::make(res.group, k.gamma, pr));
  return GroupButterfly::make(g, ext, Hom::make(res.group, g.g1, rh));
}

GammaModule pi2_module(const HomotopyGroups& hg, const Hom& chi) {
  return GammaModule::make(RightAction::pullback(hg.action, chi));
}

namespace {

std::vector<std::vector<linalg::Int>> all_coordinates(const Cohomology& h) {
  std::vector<std::vector<linalg::Int>> out{{}};
  for (linalg::Int o : h.orders) {
    std::vector<std::vector<linalg::Int>> next;
    for (const auto& c : out)
      for (linalg::Int i = 0; i < o; ++i) {
        next.push_back(c);
        next.back().push_back(i);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TorsorCheck check_torsor(const ButterflyEnumeration& en) {
  TorsorCheck r;
  for (const Hom& chi : en.distinct_chi()) {
    ++r.fibers;
    std::vector<int> fib = en.fiber(chi);
    GammaModule m = pi2_module(en.hg, chi);
    Cohomology h2 = h_n(m, 2);
    std::vector<Extension> ks;
    for (const auto& c : all_coordinates(h2)) ks.push_back(extension_from_2cocycle(m, h2.representative(c)));
    for (int base : fib) {
      const GroupButterfly& p0 = en.classes[base];
      std::vector<int> hits(en.classes.size(), 0);
      for (const Extension& k : ks) {
        GroupButterfly q = act_h2(p0, k, en.g);
        int idx = en.classify(q);
        if (idx < 0 || en.chi[idx] != chi) {
          r.transitive = false;
          continue;
        }
        if (++hits[idx] > 1) r.free = false;
        if (!equivalent(difference_butterflies(p0, q, en.g), k)) r.inverse = false;
      }
      for (int i : fib) {
        if (hits[i] == 0) r.transitive = false;
        Extension d = difference_butterflies(p0, en.classes[i], en.g);
        if (!isomorphic(act_h2(p0, d, en.g), en.classes[i], en.g)) r.inverse = false;
      }
    }
  }
  return r;
}

}  // namespace bfly
