#include <bfly/cohomology.hpp>

#include <string>

namespace bfly {

using linalg::Int;
using linalg::Matrix;

namespace {

std::string str(long long x) { return std::to_string(x); }

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Coordinates of A and the action as integer matrices on them.
struct Coords {
  AbelianDecomposition dec;
  int r = 0;
  Int expo = 1;
  std::vector<Matrix> act;  // act[g][i][j] = coordinate i of gen_j^g
};

Coords coords_of(const GammaModule& m) {
  Coords c;
  c.dec = decompose_abelian(m.a);
  c.r = static_cast<int>(c.dec.orders.size());
  for (long long o : c.dec.orders) c.expo = linalg::lcm(c.expo, o);
  c.act.assign(m.gamma.order(), Matrix(c.r, std::vector<Int>(c.r, 0)));
  for (Elem g = 0; g < m.gamma.order(); ++g)
    for (int j = 0; j < c.r; ++j) {
      const auto& co = c.dec.coords[m.act(c.dec.gens[j], g)];
      for (int i = 0; i < c.r; ++i) c.act[g][i][j] = co[i];
    }
  return c;
}

// Normalized n-tuples of non-identity elements, in base (|G| - 1).
struct Tuples {
  int q, n;
  long long count;
  Tuples(int order, int n_) : q(order - 1), n(n_), count(ipow(order - 1, n_)) {}
  std::vector<Elem> at(long long t) const {
    std::vector<Elem> g(n);
    for (int i = n - 1; i >= 0; --i) {
      g[i] = static_cast<Elem>(t % q) + 1;
      t /= q;
    }
    return g;
  }
  long long index(const std::vector<Elem>& g) const {
    long long t = 0;
    for (Elem x : g) t = t * q + (x - 1);
    return t;
  }
};

// Unscaled coboundary matrix C^n -> C^{n+1}, entries reduced by the row modulus.
Matrix coboundary_matrix(const GammaModule& m, const Coords& c, int n) {
  const Group& g = m.gamma;
  Tuples src(g.order(), n), dst(g.order(), n + 1);
  int r = c.r;
  Matrix d(static_cast<size_t>(dst.count * r), std::vector<Int>(static_cast<size_t>(src.count * r), 0));
  auto add_block = [&](long long row_t, long long col_t, const Matrix* a, Int sign) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Int v = a ? (*a)[i][j] : (i == j ? 1 : 0);
        if (v == 0) continue;
        Int& cell = d[row_t * r + i][col_t * r + j];
        cell = linalg::mod(cell + sign * v, c.dec.orders[i]);
      }
  };
  for (long long t = 0; t < dst.count; ++t) {
    std::vector<Elem> tu = dst.at(t);
    std::vector<Elem> tail(tu.begin() + 1, tu.end());
    add_block(t, src.index(tail), nullptr, 1);
    for (int i = 0; i < n; ++i) {
      Elem p = g.mul(tu[i], tu[i + 1]);
      if (p == 0) continue;
      std::vector<Elem> mid;
      for (int j = 0; j < n + 1; ++j) {
        if (j == i) {
          mid.push_back(p);
          ++j;
        } else {
          mid.push_back(tu[j]);
        }
      }
      add_block(t, src.index(mid), nullptr, (i + 1) % 2 ? -1 : 1);
    }
    std::vector<Elem> head(tu.begin(), tu.end() - 1);
    add_block(t, src.index(head), &c.act[tu[n]], (n + 1) % 2 ? -1 : 1);
  }
  return d;
}

std::vector<Int> cochain_coords(const GammaModule& m, const Coords& c, const Cochain& f, int n) {
  Tuples tu(m.gamma.order(), n);
  std::vector<Int> x(static_cast<size_t>(tu.count * c.r));
  long long full = m.gamma.order();
  for (long long t = 0; t < tu.count; ++t) {
    std::vector<Elem> g = tu.at(t);
    long long flat = 0;
    for (Elem e : g) flat = flat * full + e;
    const auto& co = c.dec.coords[f[flat]];
    for (int i = 0; i < c.r; ++i) x[t * c.r + i] = co[i];
  }
  return x;
}

Cochain cochain_from_coords(const GammaModule& m, const Coords& c, const std::vector<Int>& x, int n) {
  long long full = ipow(m.gamma.order(), n);
  Cochain f(full, 0);
  Tuples tu(m.gamma.order(), n);
  for (long long t = 0; t < tu.count; ++t) {
    std::vector<Elem> g = tu.at(t);
    long long flat = 0;
    for (Elem e : g) flat = flat * m.gamma.order() + e;
    std::vector<long long> co(c.r);
    for (int i = 0; i < c.r; ++i) co[i] = linalg::mod(x[t * c.r + i], c.dec.orders[i]);
    f[flat] = c.dec.element(co);
  }
  return f;
}

std::vector<Int> mat_vec(const Matrix& a, const std::vector<Int>& x, Int m) {
  std::vector<Int> y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    __int128 s = 0;
    for (size_t j = 0; j < x.size(); ++j) s += static_cast<__int128>(a[i][j]) * x[j];
    y[i] = linalg::mod(static_cast<Int>(s % m), m);
  }
  return y;
}

}  // namespace

GammaModule GammaModule::make(const RightAction& action) {
  if (!action.space().is_abelian()) fail(Errc::NotAbelian, "module must be abelian");
  return {action.group(), action.space(), action};
}

GammaModule GammaModule::trivial(const Group& gamma, const Group& a) { return make(RightAction::trivial(gamma, a)); }

Cochain coboundary(const GammaModule& m, const Cochain& f, int n) {
  const Group& g = m.gamma;
  const Group& a = m.a;
  long long N = g.order();
  if (static_cast<long long>(f.size()) != ipow(N, n)) fail(Errc::InvalidArgument, "cochain has the wrong length");
  long long out_len = ipow(N, n + 1);
  Cochain out(out_len, 0);
  std::vector<Elem> tu(n + 1);
  for (long long t = 0; t < out_len; ++t) {
    long long u = t;
    for (int i = n; i >= 0; --i) {
      tu[i] = static_cast<Elem>(u % N);
      u /= N;
    }
    long long tail = 0, head = 0;
    for (int j = 1; j <= n; ++j) tail = tail * N + tu[j];
    for (int j = 0; j < n; ++j) head = head * N + tu[j];
    Elem acc = f[tail];
    for (int i = 0; i < n; ++i) {
      long long mid = 0;
      for (int j = 0; j <= n; ++j) {
        if (j == i) {
          mid = mid * N + g.mul(tu[i], tu[i + 1]);
          ++j;
        } else {
          mid = mid * N + tu[j];
        }
      }
      Elem v = f[mid];
      acc = a.mul(acc, (i + 1) % 2 ? a.inv(v) : v);
    }
    Elem last = m.act(f[head], tu[n]);
    acc = a.mul(acc, (n + 1) % 2 ? a.inv(last) : last);
    out[t] = acc;
  }
  return out;
}

bool is_normalized(const GammaModule& m, const Cochain& f, int n) {
  long long N = m.gamma.order();
  if (static_cast<long long>(f.size()) != ipow(N, n)) return false;
  for (long long t = 0; t < static_cast<long long>(f.size()); ++t) {
    long long u = t;
    bool has_one = false;
    for (int i = 0; i < n; ++i) {
      has_one = has_one || u % N == 0;
      u /= N;
    }
    if (has_one && f[t] != 0) return false;
  }
  return true;
}

bool is_cocycle(const GammaModule& m, const Cochain& f, int n) {
  Cochain d = coboundary(m, f, n);
  for (Elem x : d)
    if (x != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

Cohomology h_n(const GammaModule& m, int n) {
  if (n < 0 || n > 3) fail(Errc::InvalidArgument, "degree must be 0..3");
  Cohomology h;
  h.module = m;
  h.degree = n;
  Coords c = coords_of(m);
  check_size(ipow(m.gamma.order(), n) * std::max(c.r, 1), "cochain space");
  if (c.r == 0) return h;
  Int e = c.expo;
  h.expo = e;

  Tuples here(m.gamma.order(), n);
  int cols = static_cast<int>(here.count * c.r);
  h.cmod.resize(cols);
  for (int j = 0; j < cols; ++j) h.cmod[j] = c.dec.orders[j % c.r];

  // cocycles: x with (d x)_i = 0 mod c_i, i.e. (e / c_i)(d x)_i = 0 mod e
  Matrix d = coboundary_matrix(m, c, n);
  for (size_t i = 0; i < d.size(); ++i)
    for (auto& v : d[i]) v = linalg::mod(v * (e / c.dec.orders[i % c.r]), e);
  h.dn = d;
  linalg::Diagonalization dz = linalg::diagonalize(d, e, cols, true);
  h.v = dz.v;
  h.vinv = dz.vinv;
  h.k.assign(cols, 1);
  h.ell.assign(cols, e);
  for (int i = 0; i < cols; ++i) {
    Int delta = i < static_cast<int>(dz.diag.size()) ? dz.diag[i] : 0;
    Int gg = linalg::gcd(delta, e);
    if (gg == 0) gg = e;
    h.ell[i] = gg;
    h.k[i] = e / gg;
  }

  // relations in kernel coordinates u: coboundaries, c_j e_j and ell_i e_i
  auto to_u = [&](const std::vector<Int>& x) {
    std::vector<Int> y = mat_vec(h.vinv, x, e);
    for (int i = 0; i < cols; ++i) {
      if (y[i] % h.k[i] != 0) fail(Errc::PostconditionFailed, "vector outside the cocycle lattice");
      y[i] = linalg::mod(y[i] / h.k[i], h.ell[i]);
    }
    return y;
  };
  Matrix rel;
  if (n > 0) {
    Matrix prev = coboundary_matrix(m, c, n - 1);
    int pc = prev.empty() ? 0 : static_cast<int>(prev[0].size());
    for (int j = 0; j < pc; ++j) {
      std::vector<Int> x(cols);
      for (int i = 0; i < cols; ++i) x[i] = prev[i][j];
      rel.push_back(to_u(x));
    }
  }
  for (int j = 0; j < cols; ++j) {
    std::vector<Int> x(cols, 0);
    x[j] = h.cmod[j];
    rel.push_back(to_u(x));
  }
  for (int i = 0; i < cols; ++i) {
    std::vector<Int> u(cols, 0);
    u[i] = h.ell[i];
    rel.push_back(u);
  }
  linalg::Diagonalization qz = linalg::diagonalize(rel, e, cols, true);
  h.v2 = qz.v;
  for (int i = 0; i < cols; ++i) {
    Int t = i < static_cast<int>(qz.diag.size()) ? qz.diag[i] : 0;
    Int o = linalg::gcd(t, e);
    if (o == 0) o = e;
    if (o == 1) continue;
    h.kept.push_back(i);
    h.orders.push_back(o);
    std::vector<Int> y(cols);
    for (int j = 0; j < cols; ++j) y[j] = linalg::mod(h.k[j] * qz.vinv[i][j], e);
    std::vector<Int> x = mat_vec(h.v, y, e);
    Cochain z = cochain_from_coords(m, c, x, n);
    if (!is_cocycle(m, z, n)) fail(Errc::PostconditionFailed, "cohomology generator is not a cocycle");
    h.generators.push_back(std::move(z));
  }
  return h;
}

long long Cohomology::order() const {
  long long o = 1;
  for (Int x : orders) o *= x;
  return o;
}

std::vector<Int> Cohomology::invariants() const { return linalg::invariant_factors(orders); }

std::vector<Int> Cohomology::coordinates(const Cochain& z) const {
  if (!is_normalized(module, z, degree)) fail(Errc::NotACocycle, "cochain is not normalized");
  if (!is_cocycle(module, z, degree)) fail(Errc::NotACocycle, "cochain is not a cocycle");
  if (orders.empty()) return {};
  Coords c = coords_of(module);
  std::vector<Int> x = cochain_coords(module, c, z, degree);
  int cols = static_cast<int>(x.size());
  std::vector<Int> y = mat_vec(vinv, x, expo);
  for (int i = 0; i < cols; ++i) {
    if (y[i] % k[i] != 0) fail(Errc::PostconditionFailed, "cocycle outside the cocycle lattice");
    y[i] = linalg::mod(y[i] / k[i], ell[i]);
  }
  std::vector<Int> out;
  for (size_t t = 0; t < kept.size(); ++t) {
    int i = kept[t];
    __int128 s = 0;
    for (int j = 0; j < cols; ++j) s += static_cast<__int128>(v2[j][i]) * y[j];
    out.push_back(linalg::mod(static_cast<Int>(s % expo), orders[t]));
  }
  return out;
}

bool Cohomology::is_zero(const Cochain& z) const {
  for (Int x : coordinates(z))
    if (x != 0) return false;
  return true;
}

bool Cohomology::same_class(const Cochain& z, const Cochain& w) const {
  return coordinates(z) == coordinates(w);
}

Cochain Cohomology::representative(const std::vector<Int>& coords) const {
  if (coords.size() != orders.size()) fail(Errc::InvalidArgument, "wrong number of coordinates");
  const Group& a = module.a;
  Cochain z(ipow(module.gamma.order(), degree), 0);
  for (size_t i = 0; i < coords.size(); ++i)
    for (Int t = 0; t < linalg::mod(coords[i], orders[i]); ++t)
      for (size_t j = 0; j < z.size(); ++j) z[j] = a.mul(z[j], generators[i][j]);
  return z;
}

// ---------------------------------------------------------------------------

Extension extension_from_2cocycle(const GammaModule& m, const Cochain& z) {
  if (!is_normalized(m, z, 2) || !is_cocycle(m, z, 2)) fail(Errc::NotACocycle, "need a normalized 2-cocycle");
  const Group& g = m.gamma;
  const Group& a = m.a;
  int ng = g.order(), na = a.order(), n = ng * na;
  std::vector<Elem> flat(static_cast<size_t>(n) * n);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      Elem x = u / na, p = u % na, y = v / na, q = v % na;
      Elem w = a.mul(a.mul(z[static_cast<size_t>(x) * ng + y], m.act(p, y)), q);
      flat[static_cast<size_t>(u) * n + v] = g.mul(x, y) * na + w;
    }
  Group e = Group::from_flat(n, std::move(flat));
  std::vector<Elem> in(na), pr(n);
  for (Elem p = 0; p < na; ++p) in[p] = p;
  for (Elem u = 0; u < n; ++u) pr[u] = u / na;
  return Extension::make(Hom::make(a, e, in), Hom::make(e, g, pr));
}

GammaModule module_of_extension(const Extension& ext) {
  if (!ext.n.is_abelian()) fail(Errc::NotAbelian, "kernel is not abelian");
  std::vector<Elem> s = ext.min_section();
  std::vector<Elem> back = ext.incl_inverse();
  int ng = ext.gamma.order(), nn = ext.n.order();
  std::vector<Elem> flat(static_cast<size_t>(nn) * ng);
  for (Elem p = 0; p < nn; ++p)
    for (Elem x = 0; x < ng; ++x) flat[static_cast<size_t>(p) * ng + x] = back[ext.e.conj(ext.incl(p), s[x])];
  return GammaModule::make(RightAction::from_flat(ext.gamma, ext.n, std::move(flat)));
}

Cochain two_cocycle_from_extension(const Extension& ext, const std::vector<Elem>& s) {
  int ng = ext.gamma.order();
  if (static_cast<int>(s.size()) != ng || s[0] != 0) fail(Errc::NotASection, "need s(1) = 1");
  for (Elem x = 0; x < ng; ++x)
    if (s[x] < 0 || s[x] >= ext.e.order() || ext.proj(s[x]) != x) fail(Errc::NotASection, "proj s != id at " + str(x));
  std::vector<Elem> back = ext.incl_inverse();
  const Group& e = ext.e;
  Cochain f(static_cast<size_t>(ng) * ng);
  for (Elem x = 0; x < ng; ++x)
    for (Elem y = 0; y < ng; ++y)
      f[static_cast<size_t>(x) * ng + y] = back[e.mul(e.inv(s[ext.gamma.mul(x, y)]), e.mul(s[x], s[y]))];
  return f;
}

// ---------------------------------------------------------------------------

Postnikov postnikov_class(const CrossedModule& g, std::mt19937* rng) {
  Postnikov out;
  out.hg = homotopy_groups(g);
  out.module = GammaModule::make(out.hg.action);
  const Group& p1 = out.hg.pi1.group;
  const Group& g1 = g.g1;
  const Group& g2 = g.g2;
  int q = p1.order();
  check_size(ipow(q, 3), "Postnikov cochain");

  std::vector<std::vector<Elem>> coset(q), fiber(g1.order());
  for (Elem x = 0; x < g1.order(); ++x) coset[out.hg.pi1.proj(x)].push_back(x);
  for (Elem b = 0; b < g2.order(); ++b) fiber[g.boundary(b)].push_back(b);
  auto pick = [&](const std::vector<Elem>& v) {
    if (!rng) return v.front();
    return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(*rng)];
  };

  std::vector<Elem>& s = out.choice.s;
  s.assign(q, 0);
  for (Elem c = 1; c < q; ++c) s[c] = pick(coset[c]);
  std::vector<Elem>& f = out.choice.f;
  f.assign(static_cast<size_t>(q) * q, 0);
  for (Elem x = 1; x < q; ++x)
    for (Elem y = 1; y < q; ++y) {
      Elem defect = g1.mul(g1.inv(s[p1.mul(x, y)]), g1.mul(s[x], s[y]));
      if (fiber[defect].empty()) fail(Errc::PostconditionFailed, "section defect outside Im d");
      f[static_cast<size_t>(x) * q + y] = pick(fiber[defect]);
    }

  std::vector<Elem> idx(g2.order(), -1);
  for (Elem i = 0; i < out.hg.pi2.group.order(); ++i) idx[out.hg.pi2.incl(i)] = i;
  auto F = [&](Elem x, Elem y) { return f[static_cast<size_t>(x) * q + y]; };
  out.k.assign(static_cast<size_t>(q) * q * q, 0);
  for (Elem x = 0; x < q; ++x)
    for (Elem y = 0; y < q; ++y)
      for (Elem z = 0; z < q; ++z) {
        Elem lhs = g2.mul(F(p1.mul(x, y), z), g.act(F(x, y), s[z]));
        Elem rhs = g2.mul(F(x, p1.mul(y, z)), F(y, z));
        Elem v = idx[g2.mul(g2.inv(rhs), lhs)];
        if (v < 0) fail(Errc::PostconditionFailed, "associator outside Ker d");
        out.k[(static_cast<size_t>(x) * q + y) * q + z] = v;
      }
  if (!is_cocycle(out.module, out.k, 3)) fail(Errc::PostconditionFailed, "Postnikov cochain is not a cocycle");
  return out;
}

Obstruction obstruction(const Hom& chi, const CrossedModule& g) {
  Postnikov p = postnikov_class(g);
  if (chi.codomain() != p.hg.pi1.group) fail(Errc::TypeMismatch, "chi must land in pi1");
  Obstruction o;
  o.module = GammaModule::make(RightAction::pullback(p.module.action, chi));
  int n = chi.domain().order(), q = p.hg.pi1.group.order();
  o.k.assign(static_cast<size_t>(n) * n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        o.k[(static_cast<size_t>(x) * n + y) * n + z] = p.k[(static_cast<size_t>(chi(x)) * q + chi(y)) * q + chi(z)];
  o.vanishes = h_n(o.module, 3).is_zero(o.k);
  return o;
}

}  // namespace bfly
