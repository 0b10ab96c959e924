#pragma once

// Brute-force references shared by unit and acceptance tests.

#include <bfly/cohomology.hpp>
#include <bfly/extensions.hpp>

#include <set>
#include <stdexcept>

namespace oracle {

using bfly::Cochain;
using bfly::Elem;
using bfly::GammaModule;

// Every normalized n-cochain, as flat arrays over gamma^n.
inline std::vector<Cochain> normalized_cochains(const GammaModule& m, int n) {
  long long N = m.gamma.order(), len = 1;
  for (int i = 0; i < n; ++i) len *= N;
  std::vector<long long> free;
  for (long long t = 0; t < len; ++t) {
    long long u = t;
    bool one = false;
    for (int i = 0; i < n; ++i) {
      one = one || u % N == 0;
      u /= N;
    }
    if (!one) free.push_back(t);
  }
  double total = 1;
  for (size_t i = 0; i < free.size(); ++i) total *= m.a.order();
  if (total > (1 << 20)) throw std::runtime_error("oracle too large");
  std::vector<Cochain> out;
  std::vector<int> digit(free.size(), 0);
  while (true) {
    Cochain f(len, 0);
    for (size_t i = 0; i < free.size(); ++i) f[free[i]] = digit[i];
    out.push_back(std::move(f));
    int i = static_cast<int>(digit.size()) - 1;
    while (i >= 0 && ++digit[i] == m.a.order()) digit[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// |Z^n| / |B^n| by enumeration.
inline long long h_order(const GammaModule& m, int n) {
  long long z = 0;
  for (const Cochain& f : normalized_cochains(m, n))
    if (bfly::is_cocycle(m, f, n)) ++z;
  std::set<Cochain> b;
  for (const Cochain& f : normalized_cochains(m, n - 1)) b.insert(bfly::coboundary(m, f, n - 1));
  return z / static_cast<long long>(b.size());
}

// Is z a coboundary, by enumeration.
inline bool is_coboundary(const GammaModule& m, const Cochain& z, int n) {
  for (const Cochain& f : normalized_cochains(m, n - 1))
    if (bfly::coboundary(m, f, n - 1) == z) return true;
  return false;
}

// Extension classes of gamma by n from every normalized (phi, f), phi ranging over all
// set maps into Aut(n), kept when the twisted table is a group.
inline std::vector<bfly::Extension> brute_extensions(const bfly::Group& gamma, const bfly::Group& n) {
  using namespace bfly;
  std::vector<Hom> autos = automorphisms(n);
  int q = gamma.order(), m = n.order(), t = q * m;
  std::vector<int> radix;
  for (int i = 1; i < q; ++i) radix.push_back(static_cast<int>(autos.size()));
  for (int i = 0; i < (q - 1) * (q - 1); ++i) radix.push_back(m);
  double total = 1;
  for (int r : radix) total *= r;
  if (total > (1 << 20)) throw std::runtime_error("oracle too large");
  std::vector<Extension> reps;
  std::vector<int> digit(radix.size(), 0);
  while (true) {
    std::vector<int> phi(q, -1);
    std::vector<Elem> f(static_cast<size_t>(q) * q, 0);
    size_t k = 0;
    for (int x = 1; x < q; ++x) phi[x] = digit[k++];
    for (int x = 1; x < q; ++x)
      for (int y = 1; y < q; ++y) f[static_cast<size_t>(x) * q + y] = digit[k++];
    auto ph = [&](Elem y, Elem a) { return y == 0 ? a : autos[phi[y]](a); };
    std::vector<Elem> flat(static_cast<size_t>(t) * t);
    for (Elem u = 0; u < t; ++u)
      for (Elem v = 0; v < t; ++v) {
        Elem x = u / m, a = u % m, y = v / m, b = v % m;
        flat[static_cast<size_t>(u) * t + v] =
            gamma.mul(x, y) * m + n.mul(n.mul(f[static_cast<size_t>(x) * q + y], ph(y, a)), b);
      }
    bool assoc = true;
    for (Elem u = 0; u < t && assoc; ++u)
      for (Elem v = 0; v < t && assoc; ++v)
        for (Elem w = 0; w < t && assoc; ++w)
          assoc = flat[static_cast<size_t>(flat[static_cast<size_t>(u) * t + v]) * t + w] ==
                  flat[static_cast<size_t>(u) * t + flat[static_cast<size_t>(v) * t + w]];
    if (assoc) {
      Group e = Group::from_flat(t, flat);
      std::vector<Elem> inc(m), pr(t);
      for (Elem a = 0; a < m; ++a) inc[a] = a;
      for (Elem u = 0; u < t; ++u) pr[u] = u / m;
      Extension ext = Extension::make(Hom::make(n, e, inc), Hom::make(e, gamma, pr));
      bool seen = false;
      for (const Extension& r : reps)
        if (equivalent(r, ext)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(ext);
    }
    int i = static_cast<int>(digit.size()) - 1;
    while (i >= 0 && ++digit[i] == radix[i]) digit[i--] = 0;
    if (i < 0) break;
  }
  return reps;
}

}  // namespace oracle
