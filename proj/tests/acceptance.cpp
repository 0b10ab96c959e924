// One line per acceptance criterion. Usage: acceptance [path/to/bfly data_dir]
#include <bfly/abelian.hpp>
#include <bfly/catalog.hpp>
#include <bfly/cocycle.hpp>
#include <bfly/corpus.hpp>
#include <bfly/extensions.hpp>
#include <bfly/json_io.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>

using namespace bfly;
using namespace bfly::catalog;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& check) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("threw ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %-36s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string cli_path, data_dir;

std::string run_cli(const std::string& args) {
  std::string cmd = cli_path + " " + args;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  char buf[4096];
  while (size_t n = std::fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, n);
  return out;
}

std::vector<Group> upto4() { return {Group(), cyclic(2), cyclic(3), cyclic(4), klein4()}; }

const corpus::Corpus& the_corpus() {
  static const corpus::Corpus c = corpus::generate(20240917);
  return c;
}

Outcome classify_group_into_aut_z3() {
  auto t0 = std::chrono::steady_clock::now();
  Group z2 = cyclic(2), z3 = cyclic(3);
  AutXmod aut = aut_xmod(z3);
  ButterflyEnumeration en = enumerate_butterflies(z2, aut.xmod);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::multiset<std::string> names;
  for (const GroupButterfly& p : en.classes) names.insert(describe(p.ext.e));
  bool ok = en.classes.size() == 2 && names == std::multiset<std::string>{"S3", "Z6"} && secs < 5.0;

  // independent: every Schreier pair (phi, f), deduplicated; each extension carries one rho
  std::vector<Extension> brute = oracle::brute_extensions(z2, z3);
  std::multiset<std::string> brute_names;
  for (const Extension& e : brute) brute_names.insert(describe(e.e));
  ok = ok && brute_names == names;
  for (const Extension& e : brute) {
    std::vector<GroupButterfly> found;
    for (const Hom& rho : all_homs(e.e, aut.xmod.g1)) {
      try {
        found.push_back(GroupButterfly::make(aut.xmod, e, rho));
      } catch (const Error&) {
      }
    }
    ok = ok && found.size() == 1 && en.classify(found[0]) >= 0;
  }
  std::string detail = std::to_string(en.classes.size()) + " classes {Z6, S3}, oracle " + std::to_string(brute.size());
  if (!cli_path.empty()) {
    io::Json j = io::Json::parse(run_cli("enum-butterflies --format json --input " + data_dir + "/z2.json --input " +
                                         data_dir + "/aut_z3.json"));
    std::multiset<std::string> cli;
    for (const auto& c : j.at("classes")) cli.insert(c.at("e").at("name").get<std::string>());
    ok = ok && cli == names;
    detail += ", cli agrees";
  }
  return {ok, detail + ", " + std::to_string(static_cast<int>(secs * 1000)) + " ms"};
}

Outcome central_extensions_match_h2() {
  int pairs = 0, bad = 0;
  for (const Group& gamma : upto4())
    for (const Group& a : upto4()) {
      GammaModule m = GammaModule::trivial(gamma, a);
      long long h2 = h_n(m, 2).order();
      long long brute = oracle::h_order(m, 2);
      long long classes = static_cast<long long>(enumerate_butterflies(gamma, abelian_as_xmod(a)).classes.size());
      ++pairs;
      if (h2 != brute || classes != h2) ++bad;
    }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome bicategory_laws() {
  const corpus::Corpus& c = the_corpus();
  std::mt19937 rng(7);
  int pairs = 0, triples = 0, bad = 0;
  auto small = [](const Butterfly& b) { return b.e.order() <= 64; };
  for (const auto& ch : corpus::chains(c, 2, 400, rng)) {
    if (pairs >= 80) break;
    const Butterfly &q = c.edges[ch[0]].b, &p = c.edges[ch[1]].b;
    Butterfly qp = compose(q, p);
    if (!small(qp)) continue;
    ++pairs;
    bool ok = isomorphic(compose(identity_butterfly(q.h), q), q) && isomorphic(compose(q, identity_butterfly(q.g)), q);
    ok = ok && pi1_map(qp) == compose(pi1_map(p), pi1_map(q)) && pi2_map(qp) == compose(pi2_map(p), pi2_map(q));
    if (!ok) ++bad;
  }
  for (const auto& ch : corpus::chains(c, 3, 400, rng)) {
    if (triples >= 60) break;
    const Butterfly &q = c.edges[ch[0]].b, &p = c.edges[ch[1]].b, &r = c.edges[ch[2]].b;
    Butterfly qp = compose(q, p), pr = compose(p, r);
    if (!small(qp) || !small(pr)) continue;
    Butterfly left = compose(qp, r), right = compose(q, pr);
    if (!small(left) || !small(right)) continue;
    ++triples;
    if (!isomorphic(left, right)) ++bad;
  }
  return {bad == 0 && pairs >= 50 && triples >= 50,
          std::to_string(pairs) + " pairs, " + std::to_string(triples) + " triples, " + std::to_string(bad) +
              " violations"};
}

Outcome flip_laws() {
  int n = 0, bad = 0;
  for (const corpus::Edge& e : the_corpus().edges) {
    if (!is_equivalence(e.b)) continue;
    ++n;
    Butterfly f = flip(e.b);
    bool ok = isomorphic(compose(e.b, f), identity_butterfly(e.b.h)) &&
              isomorphic(compose(f, e.b), identity_butterfly(e.b.g)) && isomorphic(flip(f), e.b);
    if (!ok) ++bad;
  }
  return {bad == 0 && n > 0, std::to_string(n) + " equivalences, " + std::to_string(bad) + " violations"};
}

Outcome long_exact_sequences() {
  int n = 0, bad = 0, equivalences = 0;
  for (const corpus::Edge& e : the_corpus().edges) {
    const Butterfly& p = e.b;
    ++n;
    bool nwse = p.kappa.injective() && p.rho.surjective() && p.kappa.image() == p.rho.kernel();
    bool pis = pi1_map(p).bijective() && pi2_map(p).bijective();
    equivalences += nwse;
    bool ok = les_fiber(p).ok() && les_kernel(p).ok() && kernel_cokernel_match(p) && nwse == pis &&
              nwse == kernel_and_cokernel_trivial(p) && nwse == is_equivalence(p);
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(n) + " butterflies (" + std::to_string(equivalences) + " equivalences), " +
                        std::to_string(bad) + " failures"};
}

Outcome cocycle_round_trip_all() {
  int n = 0, bad = 0, three = 0, diffs = 0;
  std::mt19937 rng(3);
  for (const corpus::Edge& e : the_corpus().edges) {
    const Butterfly& p = e.b;
    std::vector<std::vector<Elem>> all = sections_of(p, 4096);
    std::shuffle(all.begin() + 1, all.end(), rng);
    if (all.size() > 3) all.resize(3);
    ++n;
    three += all.size() >= 3;
    std::vector<WeakCocycle> cs;
    for (const auto& s : all) {
      CocycleRoundTrip rt = cocycle_round_trip(p, s);
      if (!is_butterfly_iso(rt.rebuilt, p, rt.iso.f)) ++bad;
      cs.push_back(rt.cocycle);
    }
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = 0; j < all.size(); ++j) {
        if (i == j) continue;
        ++diffs;
        if (!related_by(p.h, p.g, cs[i], cs[j], section_difference(p, all[i], all[j]))) ++bad;
      }
  }
  return {bad == 0 && three >= 50, std::to_string(n) + " butterflies, " + std::to_string(three) +
                                       " with 3 sections, " + std::to_string(diffs) + " differences, " +
                                       std::to_string(bad) + " failures"};
}

Outcome torsor_action() {
  std::vector<std::pair<Group, CrossedModule>> cases{{cyclic(2), abelian_as_xmod(cyclic(2))},
                                                     {cyclic(2), aut_xmod(cyclic(3)).xmod},
                                                     {cyclic(3), abelian_as_xmod(cyclic(3))}};
  bool ok = true;
  std::string detail;
  for (const auto& [gamma, g] : cases) {
    ButterflyEnumeration en = enumerate_butterflies(gamma, g);
    TorsorCheck t = check_torsor(en);
    ok = ok && t.ok() && t.fibers > 0;
    detail += (detail.empty() ? "" : ", ") + std::to_string(t.fibers) + " fiber(s)/" + std::to_string(en.classes.size()) +
              " classes";
  }
  return {ok, detail};
}

Outcome obstruction_matches_fibers() {
  std::vector<Group> gammas{cyclic(2), cyclic(3), cyclic(4), klein4()};
  int xmods = 0, chis = 0, bad = 0, nonzero = 0, resampled = 0;
  std::mt19937 rng(5);
  for (const corpus::Named& x : corpus::desk_xmods()) {
    ++xmods;
    Postnikov base = postnikov_class(x.x);
    Cohomology h3 = h_n(base.module, 3);
    nonzero += !h3.is_zero(base.k);
    for (int t = 0; t < 5; ++t) {
      ++resampled;
      if (!h3.same_class(base.k, postnikov_class(x.x, &rng).k)) ++bad;
    }
    for (const Group& gamma : gammas) {
      ButterflyEnumeration en = enumerate_butterflies(gamma, x.x);
      for (const Hom& chi : all_homs(gamma, en.hg.pi1.group)) {
        ++chis;
        Obstruction o = obstruction(chi, x.x);
        bool nonempty = !en.fiber(chi).empty();
        if (o.vanishes != nonempty || o.vanishes != oracle::is_coboundary(o.module, o.k, 3)) ++bad;
      }
    }
  }
  return {bad == 0 && xmods >= 10 && nonzero >= 1,
          std::to_string(xmods) + " crossed modules (" + std::to_string(nonzero) + " nonzero class), " +
              std::to_string(chis) + " chi, " + std::to_string(resampled) + " resamples, " + std::to_string(bad) +
              " mismatches"};
}

Complex2 degree0(const Group& a) { return Complex2::make(Hom::trivial(Group(), a)); }
Complex2 degree_m1(const Group& b) { return Complex2::make(Hom::trivial(b, Group())); }

Outcome derived_category_classes() {
  AbHomClasses base = ab_hom_classes(degree0(cyclic(2)), degree_m1(cyclic(2)));
  int strict = 0;
  for (char s : base.strict) strict += s;
  bool ok = base.classes.size() == 2 && strict == 1;
  int pairs = 0, classes = 0, bad = 0;
  auto split_agrees = [&](const AbHomClasses& h) {
    for (size_t i = 0; i < h.classes.size(); ++i, ++classes)
      if (h.split[i] != h.strict[i]) ++bad;
  };
  split_agrees(base);
  for (const Group& a : upto4())
    for (const Group& b : upto4()) {
      ++pairs;
      AbHomClasses h = ab_hom_classes(degree0(a), degree_m1(b));
      int n = static_cast<int>(h.classes.size());
      std::vector<Elem> flat(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int k = h.classify(ab_add(h.classes[i], h.classes[j]));
          if (k < 0) throw std::runtime_error("sum left the class list");
          flat[static_cast<size_t>(i) * n + j] = k;
        }
      std::vector<long long> law = abelian_invariants(Group::from_flat(n, flat));
      std::vector<linalg::Int> ext = ext1_invariants(a, b);
      if (std::vector<linalg::Int>(law.begin(), law.end()) != ext) ++bad;
      split_agrees(h);
    }
  // complexes with nonzero differentials
  std::vector<Complex2> cx{Complex2::make(cyclic_map(2, 4, 2)), Complex2::make(cyclic_map(4, 2, 1)),
                           Complex2::make(Hom::identity(cyclic(2))), degree0(cyclic(2)), degree_m1(cyclic(2))};
  for (const Complex2& x : cx)
    for (const Complex2& y : cx) split_agrees(ab_hom_classes(x, y));
  return {ok && bad == 0, "2 classes, 1 strict; " + std::to_string(pairs) + " Ext pairs, " + std::to_string(classes) +
                              " split/strict comparisons, " + std::to_string(bad) + " mismatches"};
}

Outcome semidirect_pushout_postconditions() {
  std::mt19937 rng(99);
  std::vector<corpus::Named> xs = corpus::desk_xmods();
  std::vector<Group> targets{Group(), cyclic(2), cyclic(3), cyclic(4), klein4(), symmetric(3)};
  int semi = 0, push = 0, twist = 0, nontrivial = 0, bad = 0, attempts = 0;
  auto run = [&](const CrossedModule& h, const Hom& p, const RightAction& act) {
    SemidirectData data{h.g1, p.codomain(), h.g2, h.boundary, p, h.action, act};
    if (!check_semidirect(data, generalized_semidirect(data)).ok()) ++bad;
    ++semi;

    // a random crossed homomorphism theta, as a section of K x| G -> K
    const Group &k = data.k, &g = data.g;
    std::vector<std::vector<Elem>> thetas;
    HomSearch sections{k, semidirect_product(act), {}, nullptr, false};
    sections.allowed = [&](Elem x, Elem y) { return y / g.order() == x; };
    enumerate_homs(sections, [&](const std::vector<Elem>& img) {
      std::vector<Elem> t(img.size());
      for (size_t i = 0; i < img.size(); ++i) t[i] = img[i] % g.order();
      thetas.push_back(std::move(t));
      return thetas.size() < 256;
    });
    const std::vector<Elem>& theta = thetas[std::uniform_int_distribution<size_t>(0, thetas.size() - 1)(rng)];
    std::vector<Elem> q(data.h.order()), twisted;
    for (Elem x = 0; x < data.h.order(); ++x) q[x] = g.mul(p(x), theta[data.d(x)]);
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem a = 0; a < k.order(); ++a) twisted.push_back(g.conj(act.apply(x, a), theta[a]));
    SemidirectData dq{k, g, data.h, data.d, Hom::make(data.h, g, q), data.act_k_on_h,
                      RightAction::from_flat(k, g, twisted)};
    try {
      if (!check_semidirect(dq, generalized_semidirect(dq)).ok()) ++bad;
      if (!theta_pushforward(theta, data, dq).bijective()) ++bad;
    } catch (const Error&) {
      ++bad;
    }
    ++twist;
    nontrivial += std::any_of(theta.begin(), theta.end(), [](Elem x) { return x != 0; });
    try {
      Pushout po = pushout_xmod(h, p, act);
      if (!check_pushout(h, p, po).ok()) ++bad;
    } catch (const Error& e) {
      if (e.code() != Errc::PostconditionFailed) throw;
      ++bad;
    }
    ++push;
  };
  // strict morphisms always give valid data
  while (semi < 80) {
    const CrossedModule& h = xs[std::uniform_int_distribution<size_t>(0, xs.size() - 1)(rng)].x;
    const CrossedModule& g = xs[std::uniform_int_distribution<size_t>(0, xs.size() - 1)(rng)].x;
    std::vector<StrictMorphism> ms = corpus::strict_morphisms(h, g);
    const StrictMorphism& m = ms[std::uniform_int_distribution<size_t>(0, ms.size() - 1)(rng)];
    run(h, m.p2, RightAction::pullback(g.action, m.p1));
  }
  // random homs and actions, kept when the hypotheses hold
  while (semi < 140 && attempts < 20000) {
    ++attempts;
    const CrossedModule& h = xs[std::uniform_int_distribution<size_t>(0, xs.size() - 1)(rng)].x;
    const Group& t = targets[std::uniform_int_distribution<size_t>(0, targets.size() - 1)(rng)];
    std::vector<Hom> ps = all_homs(h.g2, t);
    AutXmod aut = aut_xmod(t);
    std::vector<Hom> phis = all_homs(h.g1, aut.xmod.g1);
    const Hom& p = ps[std::uniform_int_distribution<size_t>(0, ps.size() - 1)(rng)];
    const Hom& phi = phis[std::uniform_int_distribution<size_t>(0, phis.size() - 1)(rng)];
    RightAction act = RightAction::pullback(aut.xmod.action, phi);
    bool valid = true;
    for (Elem b = 0; valid && b < h.g2.order(); ++b) {
      for (Elem x = 0; valid && x < h.g1.order(); ++x) valid = p(h.act(b, x)) == act.apply(p(b), x);
      for (Elem a = 0; valid && a < t.order(); ++a) valid = act.apply(a, h.boundary(b)) == t.conj(a, p(b));
    }
    if (valid) run(h, p, act);
  }
  return {bad == 0 && semi >= 100 && push >= 100 && twist >= 100,
          std::to_string(semi) + " semidirect, " + std::to_string(twist) + " twisted (" + std::to_string(nontrivial) + " nontrivial theta), " + std::to_string(push) +
              " pushout checks, " + std::to_string(bad) + " violations"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 3) {
    cli_path = argv[1];
    data_dir = argv[2];
  }
  report("classify_group_into_aut_z3", classify_group_into_aut_z3);
  report("central_extensions_match_h2", central_extensions_match_h2);
  report("bicategory_laws", bicategory_laws);
  report("flip_laws", flip_laws);
  report("long_exact_sequences", long_exact_sequences);
  report("cocycle_round_trip", cocycle_round_trip_all);
  report("torsor_action", torsor_action);
  report("obstruction_matches_fibers", obstruction_matches_fibers);
  report("derived_category_classes", derived_category_classes);
  report("semidirect_pushout_postconditions", semidirect_pushout_postconditions);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
