#include <bfly/catalog.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace bfly::catalog {

namespace {

using Perm = std::vector<int>;

Perm perm_mul(const Perm& a, const Perm& b) {  // apply a then b
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Group from_perms(std::vector<Perm> elems) {
  std::sort(elems.begin(), elems.end());
  std::map<Perm, int> idx;
  for (size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
  int n = static_cast<int>(elems.size());
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * n + j] = idx.at(perm_mul(elems[i], elems[j]));
  return Group::from_flat(n, std::move(t));
}

std::vector<Perm> generate(const std::vector<Perm>& gens, int points) {
  Perm id(points);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> all{id};
  for (size_t i = 0; i < all.size(); ++i)
    for (const Perm& g : gens) {
      Perm p = perm_mul(all[i], g);
      if (std::find(all.begin(), all.end(), p) == all.end()) all.push_back(p);
    }
  return all;
}

}  // namespace

Group cyclic(int n) {
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return Group::from_flat(n, std::move(t));
}

Group klein4() { return direct_product(cyclic(2), cyclic(2)); }

Group symmetric(int n) {
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> all;
  do all.push_back(id);
  while (std::next_permutation(id.begin(), id.end()));
  return from_perms(all);
}

Group dihedral(int n) {
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return from_perms(generate({r, s}, n));
}

Group quaternion8() {
  // elements ±1, ±i, ±j, ±k encoded as sign * unit, unit in {1,i,j,k}
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Elem> t(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a % 4, ub = b % 4;
      int s = (a < 4 ? 1 : -1) * (b < 4 ? 1 : -1) * sign[ua][ub];
      t[a * 8 + b] = unit[ua][ub] + (s < 0 ? 4 : 0);
    }
  return Group::from_flat(8, std::move(t));
}

Group product(const Group& a, const Group& b) { return direct_product(a, b); }

Hom cyclic_map(int n, int m, int k) {
  std::vector<Elem> im(n);
  for (int i = 0; i < n; ++i) im[i] = static_cast<int>((static_cast<long long>(i) * k) % m);
  return Hom::make(cyclic(n), cyclic(m), im);
}

std::string describe(const Group& g) {
  int n = g.order();
  if (n == 1) return "1";
  if (g.is_abelian()) {
    std::string out;
    for (long long k : abelian_invariants(g)) out += (out.empty() ? "Z" : " x Z") + std::to_string(k);
    return out;
  }
  std::vector<std::pair<std::string, Group>> named;
  if (n == 6 || n == 24) named.emplace_back("S" + std::to_string(n == 6 ? 3 : 4), symmetric(n == 6 ? 3 : 4));
  if (n == 8) named.emplace_back("Q8", quaternion8());
  if (n == 12) {
    std::vector<Perm> even;
    for (const Perm& p : generate({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4)) even.push_back(p);
    named.emplace_back("A4", from_perms(even));
  }
  if (n % 2 == 0 && n >= 6) named.emplace_back("D" + std::to_string(n / 2), dihedral(n / 2));
  for (const auto& [name, h] : named)
    if (h.order_profile() == g.order_profile() && isomorphism_search(h, g)) return name;
  return "order " + std::to_string(n);
}

}  // namespace bfly::catalog
