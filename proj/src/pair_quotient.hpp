#pragma once

#include <bfly/group.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace bfly::detail {

// L/I for a subgroup L of e0 x e cut out by keep(x, y).
struct PairQuotient {
  Enumerated l;
  Quotient q;
  int ne = 1;
  Elem cls(Elem x, Elem y) const {
    auto it = l.index.find(static_cast<std::uint64_t>(x) * ne + y);
    return it == l.index.end() ? -1 : q.proj(it->second);
  }
  // first coordinate of the minimal representative of a class
  Elem first(Elem c) const { return static_cast<Elem>(l.codes[q.rep[c]] / ne); }
  Elem second(Elem c) const { return static_cast<Elem>(l.codes[q.rep[c]] % ne); }
};

inline PairQuotient pair_quotient(const Group& e0, const Group& e, const std::function<bool(Elem, Elem)>& keep,
                           const std::vector<std::pair<Elem, Elem>>& normal) {
  check_size(static_cast<long long>(e0.order()) * e.order(), "pair group");
  PairQuotient pq;
  pq.ne = e.order();
  std::vector<std::uint64_t> codes;
  for (Elem x = 0; x < e0.order(); ++x)
    for (Elem y = 0; y < e.order(); ++y)
      if (keep(x, y)) codes.push_back(static_cast<std::uint64_t>(x) * pq.ne + y);
  std::uint64_t ne = pq.ne;
  pq.l = enumerate_group(std::move(codes), [&](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(e0.mul(a / ne, b / ne)) * ne + e.mul(a % ne, b % ne);
  });
  std::vector<Elem> sub;
  for (auto [x, y] : normal) sub.push_back(pq.l.at(static_cast<std::uint64_t>(x) * ne + y));
  pq.q = quotient_by_normal(pq.l.group, sub);
  return pq;
}

inline Hom hom_from_classes(const PairQuotient& pq, const Group& target, const std::function<Elem(Elem, Elem)>& f) {
  int n = pq.q.group.order();
  std::vector<Elem> im(n);
  for (Elem c = 0; c < n; ++c) im[c] = f(pq.first(c), pq.second(c));
  return Hom::make(pq.q.group, target, im);
}

}  // namespace bfly::detail
