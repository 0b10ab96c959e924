#include <bfly/cocycle.hpp>

#include <string>

namespace bfly {

namespace {

std::string str(long long x) { return std::to_string(x); }

void check_shape(const CrossedModule& h, const CrossedModule& g, const WeakCocycle& c) {
  int n1 = h.g1.order();
  if (static_cast<int>(c.p1.size()) != n1 || static_cast<int>(c.p2.size()) != h.g2.order() ||
      c.eps.size() != static_cast<size_t>(n1) * n1)
    fail(Errc::InvalidArgument, "cocycle arrays have the wrong length");
  for (Elem x : c.p1)
    if (x < 0 || x >= g.g1.order()) fail(Errc::InvalidArgument, "p1 value out of range");
  for (Elem x : c.p2)
    if (x < 0 || x >= g.g2.order()) fail(Errc::InvalidArgument, "p2 value out of range");
  for (Elem x : c.eps)
    if (x < 0 || x >= g.g2.order()) fail(Errc::InvalidArgument, "eps value out of range");
  if (c.p1[0] != 0 || c.p2[0] != 0) fail(Errc::InvalidArgument, "p1 and p2 must be pointed");
  for (Elem x = 0; x < n1; ++x)
    if (c.e(0, x) != 0 || c.e(x, 0) != 0) fail(Errc::InvalidArgument, "eps is not normalized at " + str(x));
}

std::vector<Elem> iota_inverse(const Butterfly& p) {
  std::vector<Elem> back(p.e.order(), -1);
  for (Elem a = 0; a < p.g.g2.order(); ++a) back[p.iota(a)] = a;
  return back;
}

void check_section(const Butterfly& p, const std::vector<Elem>& s) {
  if (static_cast<int>(s.size()) != p.h.g1.order()) fail(Errc::NotASection, "section has the wrong length");
  for (Elem x = 0; x < p.h.g1.order(); ++x)
    if (s[x] < 0 || s[x] >= p.e.order() || p.sigma(s[x]) != x) fail(Errc::NotASection, "sigma s != id at " + str(x));
  if (s[0] != 0) fail(Errc::NotASection, "s(1) != 1");
}

}  // namespace

Butterfly butterfly_from_cocycle(const CrossedModule& h, const CrossedModule& g, const WeakCocycle& c) {
  check_shape(h, g, c);
  const Group& g2 = g.g2;
  int n1 = h.g1.order(), n2 = g2.order();
  check_size(static_cast<long long>(n1) * n2, "cocycle group");
  int n = n1 * n2;
  std::vector<Elem> flat(static_cast<size_t>(n) * n);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      Elem x = u / n2, a = u % n2, y = v / n2, b = v % n2;
      Elem z = g2.mul(g2.mul(g2.inv(c.e(x, y)), g.act(a, c.p1[y])), b);
      flat[static_cast<size_t>(u) * n + v] = h.g1.mul(x, y) * n2 + z;
    }
  Group e;
  try {
    e = Group::from_flat(n, std::move(flat));
  } catch (const Error& err) {
    fail(Errc::NotAGroup, err.what());
  }
  std::vector<Elem> io(n2), ka(h.g2.order()), si(n), rh(n);
  for (Elem a = 0; a < n2; ++a) io[a] = a;
  for (Elem b = 0; b < h.g2.order(); ++b) ka[b] = h.boundary(b) * n2 + g2.inv(c.p2[b]);
  for (Elem v = 0; v < n; ++v) {
    si[v] = v / n2;
    rh[v] = g.g1.mul(c.p1[v / n2], g.boundary(v % n2));
  }
  try {
    return Butterfly::make(h, g, Hom::make(g2, e, io), Hom::make(h.g2, e, ka), Hom::make(e, h.g1, si),
                           Hom::make(e, g.g1, rh));
  } catch (const Error& err) {
    fail(Errc::ButterflyAxiomFails, err.what());
  }
}

WeakCocycle cocycle_from_butterfly(const Butterfly& p, const std::vector<Elem>& s) {
  check_section(p, s);
  std::vector<Elem> back = iota_inverse(p);
  const Group& e = p.e;
  int n1 = p.h.g1.order();
  WeakCocycle c;
  c.p1.resize(n1);
  c.p2.resize(p.h.g2.order());
  c.eps.resize(static_cast<size_t>(n1) * n1);
  for (Elem x = 0; x < n1; ++x) c.p1[x] = p.rho(s[x]);
  for (Elem b = 0; b < p.h.g2.order(); ++b) {
    Elem a = back[e.mul(e.inv(p.kappa(b)), s[p.h.boundary(b)])];
    if (a < 0) fail(Errc::PostconditionFailed, "kappa(b)^-1 s(d b) outside Im iota");
    c.p2[b] = a;
  }
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n1; ++y) {
      Elem a = back[e.mul(e.mul(e.inv(s[y]), e.inv(s[x])), s[p.h.g1.mul(x, y)])];
      if (a < 0) fail(Errc::PostconditionFailed, "section defect outside Im iota");
      c.eps[static_cast<size_t>(x) * n1 + y] = a;
    }
  return c;
}

CocycleRoundTrip cocycle_round_trip(const Butterfly& p, const std::vector<Elem>& s) {
  CocycleRoundTrip r;
  r.cocycle = cocycle_from_butterfly(p, s);
  r.rebuilt = butterfly_from_cocycle(p.h, p.g, r.cocycle);
  int n2 = p.g.g2.order();
  std::vector<Elem> f(r.rebuilt.e.order());
  for (Elem v = 0; v < r.rebuilt.e.order(); ++v) f[v] = p.e.mul(s[v / n2], p.iota(v % n2));
  Hom fh = Hom::make(r.rebuilt.e, p.e, f);
  if (!is_butterfly_iso(r.rebuilt, p, fh)) fail(Errc::PostconditionFailed, "(h,g) -> s(h) iota(g) is not an isomorphism");
  r.iso = {fh};
  return r;
}

void validate_section_difference(const CrossedModule& h, const CrossedModule& g, const WeakCocycle& c,
                                 const WeakCocycle& c2, const std::vector<Elem>& theta) {
  const Group& g2 = g.g2;
  int n1 = h.g1.order();
  if (static_cast<int>(theta.size()) != n1) fail(Errc::InvalidArgument, "theta has the wrong length");
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n1; ++y) {
      Elem lhs = g2.mul(theta[h.g1.mul(x, y)], g2.inv(c2.e(x, y)));
      Elem rhs = g2.mul(g2.mul(g2.inv(c.e(x, y)), g.act(theta[x], c.p1[y])), theta[y]);
      if (lhs != rhs) fail(Errc::NotCrossedHom, "(" + str(x) + "," + str(y) + ")");
    }
  for (Elem x = 0; x < n1; ++x)
    if (c2.p1[x] != g.g1.mul(c.p1[x], g.boundary(theta[x]))) fail(Errc::T1Fails, "h=" + str(x));
  for (Elem b = 0; b < h.g2.order(); ++b)
    if (c2.p2[b] != g2.mul(c.p2[b], theta[h.boundary(b)])) fail(Errc::T2Fails, "beta=" + str(b));
}

bool related_by(const CrossedModule& h, const CrossedModule& g, const WeakCocycle& c, const WeakCocycle& c2,
                const std::vector<Elem>& theta) {
  try {
    validate_section_difference(h, g, c, c2, theta);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::NotCrossedHom || e.code() == Errc::T1Fails || e.code() == Errc::T2Fails) return false;
    throw;
  }
}

std::vector<Elem> section_difference(const Butterfly& p, const std::vector<Elem>& s, const std::vector<Elem>& s2) {
  check_section(p, s);
  check_section(p, s2);
  std::vector<Elem> back = iota_inverse(p);
  std::vector<Elem> theta(p.h.g1.order());
  for (Elem x = 0; x < p.h.g1.order(); ++x) theta[x] = back[p.e.mul(p.e.inv(s[x]), s2[x])];
  validate_section_difference(p.h, p.g, cocycle_from_butterfly(p, s), cocycle_from_butterfly(p, s2), theta);
  return theta;
}

std::vector<std::vector<Elem>> sections_of(const Butterfly& p, std::size_t limit) {
  int n1 = p.h.g1.order();
  std::vector<std::vector<Elem>> fibers(n1);
  for (Elem x = 0; x < p.e.order(); ++x) fibers[p.sigma(x)].push_back(x);
  fibers[0] = {0};
  std::vector<std::vector<Elem>> out;
  std::vector<size_t> pos(n1, 0);
  while (out.size() < limit) {
    std::vector<Elem> s(n1);
    for (Elem x = 0; x < n1; ++x) s[x] = fibers[x][pos[x]];
    out.push_back(std::move(s));
    int i = n1 - 1;
    while (i >= 0 && ++pos[i] == fibers[i].size()) pos[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<WeakCocycle> enumerate_cocycles(const CrossedModule& h, const CrossedModule& g) {
  int n1 = h.g1.order(), m1 = g.g1.order(), n2 = h.g2.order(), m2 = g.g2.order();
  // free slots: p1 on H1 \ 1, p2 on H2 \ 1, eps on (H1 \ 1)^2
  std::vector<int> radix;
  for (int i = 1; i < n1; ++i) radix.push_back(m1);
  for (int i = 1; i < n2; ++i) radix.push_back(m2);
  for (int i = 0; i < (n1 - 1) * (n1 - 1); ++i) radix.push_back(m2);
  double total = 1;
  for (int r : radix) total *= r;
  if (total > 2e6) fail(Errc::SizeLimit, "too many candidate cocycles");

  std::vector<WeakCocycle> out;
  std::vector<int> digit(radix.size(), 0);
  while (true) {
    WeakCocycle c;
    c.p1.assign(n1, 0);
    c.p2.assign(n2, 0);
    c.eps.assign(static_cast<size_t>(n1) * n1, 0);
    size_t k = 0;
    for (int i = 1; i < n1; ++i) c.p1[i] = digit[k++];
    for (int i = 1; i < n2; ++i) c.p2[i] = digit[k++];
    for (int x = 1; x < n1; ++x)
      for (int y = 1; y < n1; ++y) c.eps[static_cast<size_t>(x) * n1 + y] = digit[k++];
    try {
      butterfly_from_cocycle(h, g, c);
      out.push_back(std::move(c));
    } catch (const Error& e) {
      if (e.code() != Errc::NotAGroup && e.code() != Errc::ButterflyAxiomFails) throw;
    }
    int i = static_cast<int>(digit.size()) - 1;
    while (i >= 0 && ++digit[i] == radix[i]) digit[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace bfly
