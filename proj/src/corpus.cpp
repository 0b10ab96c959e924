#include <bfly/catalog.hpp>
#include <bfly/cocycle.hpp>
#include <bfly/corpus.hpp>
#include <bfly/extensions.hpp>

#include <algorithm>
#include <cmath>

namespace bfly::corpus {

using namespace catalog;

CrossedModule inversion_xmod() {
  Group z4 = cyclic(4);
  std::vector<Elem> flat;
  for (Elem a = 0; a < 4; ++a)
    for (Elem g = 0; g < 4; ++g) flat.push_back(g % 2 ? z4.inv(a) : a);
  return CrossedModule::make(cyclic_map(4, 4, 2), RightAction::from_flat(z4, z4, flat));
}

std::vector<Named> desk_xmods() {
  Group z2 = cyclic(2), z3 = cyclic(3);
  std::vector<Elem> inv;
  for (Elem a = 0; a < 3; ++a)
    for (Elem g = 0; g < 2; ++g) inv.push_back(g ? z3.inv(a) : a);
  return {
      {"1->Z2", group_as_xmod(z2)},
      {"1->Z3", group_as_xmod(z3)},
      {"1->V4", group_as_xmod(klein4())},
      {"1->S3", group_as_xmod(symmetric(3))},
      {"Z2->1", abelian_as_xmod(z2)},
      {"Z3->1", abelian_as_xmod(z3)},
      {"Z4->1", abelian_as_xmod(cyclic(4))},
      {"Z2=Z2", identity_xmod(z2)},
      {"Z3->Aut", aut_xmod(z3).xmod},
      {"V4->Aut", aut_xmod(klein4()).xmod},
      {"S3->Aut", aut_xmod(symmetric(3)).xmod},
      {"Z2->Z4", CrossedModule::make(cyclic_map(2, 4, 2), RightAction::trivial(cyclic(4), z2))},
      {"Z4->Z2", CrossedModule::make(cyclic_map(4, 2, 1), RightAction::trivial(z2, cyclic(4)))},
      {"Z2-0->Z2", CrossedModule::make(Hom::trivial(z2, z2), RightAction::trivial(z2, z2))},
      {"Z3-0->Z2", CrossedModule::make(Hom::trivial(z3, z2), RightAction::from_flat(z2, z3, inv))},
      {"Z4-2->Z4", inversion_xmod()},
  };
}

std::vector<StrictMorphism> strict_morphisms(const CrossedModule& h, const CrossedModule& g) {
  std::vector<StrictMorphism> out;
  std::vector<Hom> p2s = all_homs(h.g2, g.g2);
  for (const Hom& p1 : all_homs(h.g1, g.g1))
    for (const Hom& p2 : p2s) {
      bool ok = compose(g.boundary, p2) == compose(p1, h.boundary);
      for (Elem a = 0; ok && a < h.g2.order(); ++a)
        for (Elem x = 0; ok && x < h.g1.order(); ++x) ok = p2(h.act(a, x)) == g.act(p2(a), p1(x));
      if (ok) out.push_back(StrictMorphism::make(h, g, p2, p1));
    }
  return out;
}

std::vector<int> Corpus::leaving(int node) const {
  std::vector<int> out;
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].from == node) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

template <class T>
std::vector<T> sample(std::vector<T> v, int k, std::mt19937& rng) {
  std::shuffle(v.begin(), v.end(), rng);
  if (static_cast<int>(v.size()) > k) v.resize(k);
  return v;
}

double cocycle_candidates(const CrossedModule& h, const CrossedModule& g) {
  double n1 = h.g1.order(), n2 = h.g2.order();
  return std::pow(g.g1.order(), n1 - 1) * std::pow(g.g2.order(), n2 - 1 + (n1 - 1) * (n1 - 1));
}

}  // namespace

Corpus generate(std::uint32_t seed, int per_pair, int max_e) {
  std::mt19937 rng(seed);
  Corpus c;
  c.nodes = desk_xmods();
  int n = static_cast<int>(c.nodes.size());
  auto add = [&](int i, int j, const char* origin, Butterfly b) {
    if (b.e.order() <= max_e) c.edges.push_back({i, j, origin, std::move(b)});
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CrossedModule &h = c.nodes[i].x, &g = c.nodes[j].x;
      for (const StrictMorphism& m : sample(strict_morphisms(h, g), per_pair, rng)) add(i, j, "strict", of_strict(m));
      if (cocycle_candidates(h, g) <= 1024)
        for (const WeakCocycle& w : sample(enumerate_cocycles(h, g), per_pair, rng))
          add(i, j, "cocycle", butterfly_from_cocycle(h, g, w));
      if (h.g2.order() == 1) {
        ButterflyEnumeration en = enumerate_butterflies(h.g1, g);
        for (const GroupButterfly& p : en.classes) add(i, j, "group", to_butterfly(p, g));
      }
    }
  size_t base = c.edges.size();
  for (size_t k = 0; k < base; ++k)
    if (is_equivalence(c.edges[k].b)) add(c.edges[k].to, c.edges[k].from, "flip", flip(c.edges[k].b));
  return c;
}

std::vector<std::vector<int>> chains(const Corpus& c, int length, int count, std::mt19937& rng) {
  std::vector<std::vector<int>> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts++ < 100 * count) {
    std::vector<int> path{std::uniform_int_distribution<int>(0, static_cast<int>(c.edges.size()) - 1)(rng)};
    while (static_cast<int>(path.size()) < length) {
      std::vector<int> next = c.leaving(c.edges[path.back()].to);
      if (next.empty()) break;
      path.push_back(next[std::uniform_int_distribution<size_t>(0, next.size() - 1)(rng)]);
    }
    if (static_cast<int>(path.size()) == length) out.push_back(std::move(path));
  }
  return out;
}

}  // namespace bfly::corpus
