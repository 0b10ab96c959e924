#include <bfly/catalog.hpp>
#include <bfly/json_io.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace bfly;
using bfly::io::Json;
using bfly::io::SchemaError;

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::string format = "text";
  int size_limit = 0;
  std::uint64_t seed = 0;
  bool seeded = false;
};

struct Report {
  Json json = Json::object();
  std::vector<std::string> text;
  void line(std::string s) { text.push_back(std::move(s)); }
};

using Handler = std::function<Report(const std::vector<Json>&, const Options&)>;

struct Command {
  const char* name;
  const char* help;
  const char* inputs;  // expected --input documents, in order
  Handler run;
};

const char* kSchemas =
    "document schemas (all integers decimal, arrays row-major, element 0 is the identity):\n"
    "  group        {\"order\": n, \"table\": [[...]]} or {\"name\": \"1\"|\"Z<n>\"|\"S<n>\"|\"D<n>\"|\"V4\"|\"Q8\"}\n"
    "  hom          {\"image\": [...]}\n"
    "  action       {\"table\": [[...]]}, row a, column g holds a^g\n"
    "  xmod         {\"g2\": group, \"g1\": group, \"boundary\": hom, \"action\": action} or {\"aut\": group}\n"
    "  strict       {\"source\": xmod, \"target\": xmod, \"p2\": hom, \"p1\": hom}\n"
    "  butterfly    {\"source\": xmod, \"target\": xmod, \"e\": group, \"iota\", \"kappa\", \"sigma\", \"rho\": hom}\n"
    "  cocycle      {\"p1\": [...], \"p2\": [...], \"eps\": [[...]]} with optional \"source\", \"target\"\n"
    "  complex      {\"xm1\": group, \"x0\": group, \"d\": hom}\n"
    "  ab-butterfly butterfly whose source and target are complexes\n"
    "  module       {\"gamma\": group, \"a\": group, \"action\": action}\n"
    "  extension    {\"n\": group, \"e\": group, \"gamma\": group, \"incl\": hom, \"proj\": hom}\n"
    "  group-bfly   {\"ext\": extension, \"rho\": hom}\n"
    "  braiding     {\"table\": [[...]]} over G1 x G1\n"
    "  section      {\"section\": [...]}\n"
    "any object {\"$ref\": \"path\"} is replaced by the document in that file.\n";

// ---- loading ----

Json load(const std::filesystem::path& path, std::set<std::string>& open);

Json resolve(Json j, const std::filesystem::path& base, std::set<std::string>& open) {
  if (j.is_object() && j.size() == 1 && j.contains("$ref")) {
    if (!j.at("$ref").is_string()) throw SchemaError("\"$ref\" must be a string");
    return load(base / j.at("$ref").get<std::string>(), open);
  }
  if (j.is_object() || j.is_array())
    for (auto& v : j) v = resolve(std::move(v), base, open);
  return j;
}

Json load(const std::filesystem::path& path, std::set<std::string>& open) {
  std::error_code ec;
  std::string key = std::filesystem::weakly_canonical(path, ec).string();
  if (ec) key = path.string();
  if (open.count(key)) throw SchemaError("reference cycle through " + path.string());
  std::ifstream in(path);
  if (!in) throw Usage("cannot read " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
  open.insert(key);
  j = resolve(std::move(j), path.parent_path(), open);
  open.erase(key);
  return j;
}

// ---- helpers ----

void arity(const std::vector<Json>& in, size_t lo, size_t hi) {
  if (in.size() < lo || in.size() > hi)
    throw Usage("expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi)) +
                " input document(s), got " + std::to_string(in.size()));
}

std::string kind(const Json& j) { return io::kind_of(j); }

void expect(const Json& j, const std::string& k, size_t pos) {
  if (kind(j) != k) {
    std::string got = kind(j).empty() ? "an unknown document" : "a " + kind(j);
    throw SchemaError("input " + std::to_string(pos + 1) + " must be a " + k + ", got " + got);
  }
}

Butterfly as_butterfly(const Json& j, size_t pos) {
  if (kind(j) == "strict") return of_strict(io::strict_from(j));
  if (kind(j) == "ab-butterfly") return io::ab_butterfly_from(j).b;
  expect(j, "butterfly", pos);
  return io::butterfly_from(j);
}

CrossedModule as_xmod(const Json& j, size_t pos) {
  if (kind(j) == "group") return group_as_xmod(io::group_from(j));
  expect(j, "xmod", pos);
  return io::xmod_from(j);
}

std::string list(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string cyclic_sum(const std::vector<linalg::Int>& orders) {
  if (orders.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < orders.size(); ++i) s += (i ? " x Z" : "Z") + std::to_string(orders[i]);
  return s;
}

Json group_summary(const Group& g) { return {{"order", g.order()}, {"name", catalog::describe(g)}}; }

std::string brief(const Group& g) { return catalog::describe(g) + " (order " + std::to_string(g.order()) + ")"; }

std::string xmod_brief(const CrossedModule& x) {
  return "[" + catalog::describe(x.g2) + " -> " + catalog::describe(x.g1) + "]";
}

void sequence_lines(Report& r, const std::string& title, const SequenceCheck& s) {
  std::string line = title + ":";
  for (size_t i = 0; i < s.terms.size(); ++i) line += (i ? " -> " : " ") + s.terms[i] + "(" + std::to_string(s.sizes[i]) + ")";
  r.line(line);
  r.line("  exact: " + yes(s.ok()) + (s.ok() ? "" : ", first failure at term " + std::to_string(s.first_failure())));
}

// ---- commands ----

Report cmd_validate(const std::vector<Json>& in, const Options&) {
  arity(in, 1, 64);
  Report r;
  r.json["results"] = Json::array();
  for (size_t i = 0; i < in.size(); ++i) {
    const Json& j = in[i];
    std::string k = kind(j);
    Json res{{"kind", k}, {"valid", true}};
    if (k == "group") {
      Group g;
      bool relabeled = false;
      if (j.contains("table")) {
        std::vector<std::vector<int>> t;
        try {
          t = j.at("table").get<std::vector<std::vector<int>>>();
        } catch (const Json::exception&) {
          throw SchemaError("table must be an array of integer arrays");
        }
        if (j.contains("order") && j.at("order") != static_cast<long long>(t.size()))
          throw SchemaError("\"order\" does not match the table");
        g = Group::make(t);
        relabeled = !t.empty() && t[0][0] != 0;
        for (size_t x = 0; x < t.size() && !relabeled; ++x) relabeled = t[0][x] != static_cast<int>(x);
      } else {
        g = io::group_from(j);
      }
      res["order"] = g.order();
      res["name"] = catalog::describe(g);
      res["relabeled"] = relabeled;
      r.line("valid group of order " + std::to_string(g.order()) + (relabeled ? " (identity relabeled to 0)" : ""));
    } else if (k == "xmod") {
      CrossedModule x = io::xmod_from(j);
      res["g2"] = group_summary(x.g2);
      res["g1"] = group_summary(x.g1);
      r.line("valid crossed module " + xmod_brief(x));
    } else if (k == "strict") {
      StrictMorphism m = io::strict_from(j);
      r.line("valid strict morphism " + xmod_brief(m.source) + " -> " + xmod_brief(m.target));
    } else if (k == "butterfly" || k == "ab-butterfly") {
      Butterfly b = k == "butterfly" ? io::butterfly_from(j) : io::ab_butterfly_from(j).b;
      res["e"] = group_summary(b.e);
      r.line("valid " + k + " with E = " + brief(b.e));
    } else if (k == "cocycle") {
      if (!j.contains("source") || !j.contains("target"))
        throw SchemaError("a standalone cocycle needs \"source\" and \"target\"");
      Butterfly b = butterfly_from_cocycle(io::xmod_from(j.at("source")), io::xmod_from(j.at("target")), io::cocycle_from(j));
      res["e"] = group_summary(b.e);
      r.line("valid cocycle with E = " + brief(b.e));
    } else if (k == "complex") {
      Complex2 c = io::complex_from(j);
      r.line("valid complex " + catalog::describe(c.xm1) + " -> " + catalog::describe(c.x0));
    } else if (k == "module") {
      GammaModule m = io::module_from(j);
      r.line("valid module " + catalog::describe(m.a) + " over " + catalog::describe(m.gamma));
    } else if (k == "extension") {
      Extension e = io::extension_from(j);
      res["e"] = group_summary(e.e);
      r.line("valid extension of " + catalog::describe(e.gamma) + " by " + catalog::describe(e.n) + " with E = " +
             brief(e.e));
    } else {
      throw SchemaError("input " + std::to_string(i + 1) + " cannot be validated on its own");
    }
    r.json["results"].push_back(res);
  }
  return r;
}

Report cmd_pi(const std::vector<Json>& in, const Options&) {
  arity(in, 1, 1);
  Report r;
  if (kind(in[0]) == "xmod" || kind(in[0]) == "group") {
    CrossedModule x = as_xmod(in[0], 0);
    HomotopyGroups hg = homotopy_groups(x);
    r.json["pi1"] = io::to_json(hg.pi1.group);
    r.json["pi2"] = io::to_json(hg.pi2.group);
    r.json["action"] = io::to_json(hg.action);
    r.line("pi1 = " + brief(hg.pi1.group));
    r.line("pi2 = " + brief(hg.pi2.group));
    r.line(std::string("pi1 acts ") + (hg.action.is_trivial() ? "trivially" : "nontrivially") + " on pi2");
    return r;
  }
  Butterfly b = as_butterfly(in[0], 0);
  HomotopyGroups hs = homotopy_groups(b.h), ht = homotopy_groups(b.g);
  Hom f1 = pi1_map(b), f2 = pi2_map(b);
  r.json["pi1"] = {{"source", io::to_json(hs.pi1.group)}, {"target", io::to_json(ht.pi1.group)}, {"map", io::to_json(f1)}};
  r.json["pi2"] = {{"source", io::to_json(hs.pi2.group)}, {"target", io::to_json(ht.pi2.group)}, {"map", io::to_json(f2)}};
  r.json["equivalence"] = f1.bijective() && f2.bijective();
  r.line("pi1: " + catalog::describe(hs.pi1.group) + " -> " + catalog::describe(ht.pi1.group) + " " + list(f1.images()));
  r.line("pi2: " + catalog::describe(hs.pi2.group) + " -> " + catalog::describe(ht.pi2.group) + " " + list(f2.images()));
  r.line("equivalence: " + yes(f1.bijective() && f2.bijective()));
  return r;
}

Report cmd_butterfly_check(const std::vector<Json>& in, const Options&) {
  arity(in, 1, 2);
  Report r;
  Butterfly p = as_butterfly(in[0], 0);
  HomSearch s{p.h.g1, p.e, {}, nullptr, false};
  s.allowed = [&](Elem x, Elem y) { return p.sigma(y) == x; };
  bool strict = find_hom(s).has_value();
  r.json["e"] = group_summary(p.e);
  r.json["equivalence"] = is_equivalence(p);
  r.json["strict"] = strict;
  r.line("valid butterfly " + xmod_brief(p.h) + " -> " + xmod_brief(p.g) + " with E = " + brief(p.e));
  r.line("equivalence: " + yes(is_equivalence(p)));
  r.line("comes from a strict morphism: " + yes(strict));
  if (in.size() == 2) {
    Butterfly q = as_butterfly(in[1], 1);
    std::optional<ButterflyIso> iso = find_isomorphism(p, q);
    r.json["isomorphic"] = iso.has_value();
    if (iso) r.json["iso"] = io::to_json(iso->f);
    r.line("isomorphic to input 2: " + yes(iso.has_value()) + (iso ? " via " + list(iso->f.images()) : ""));
  }
  return r;
}

Report butterfly_result(const Butterfly& b, const std::string& what) {
  Report r;
  r.json["butterfly"] = io::to_json(b);
  r.line(what + " " + xmod_brief(b.h) + " -> " + xmod_brief(b.g) + " with E = " + brief(b.e));
  r.line("pi1 map " + list(pi1_map(b).images()) + ", pi2 map " + list(pi2_map(b).images()));
  return r;
}

Report cmd_compose(const std::vector<Json>& in, const Options&) {
  arity(in, 2, 2);
  return butterfly_result(compose(as_butterfly(in[0], 0), as_butterfly(in[1], 1)), "composite");
}

Report cmd_flip(const std::vector<Json>& in, const Options&) {
  arity(in, 1, 1);
  return butterfly_result(flip(as_butterfly(in[0], 0)), "flipped butterfly");
}

Report cmd_kernel(const std::vector<Json>& in, const Options&) {
  arity(in, 1, 1);
  Kernel k = kernel(as_butterfly(in[0], 0));
  HomotopyGroups hg = homotopy_groups(k.xmod);
  Report r;
  r.json["xmod"] = io::to_json(k.xmod);
  r.json["incl"] = io::to_json(k.incl);
  r.json["pi1"] = group_summary(hg.pi1.group);
  r.json["pi2"] = group_summary(hg.pi2.group);
  r.line("kernel " + xmod_brief(k.xmod));
  r.line("pi1 = " + brief(hg.pi1.group) + ", pi2 = " + brief(hg.pi2.group));
  return r;
}

Report cmd_cokernel(const std::vector<Json>& in, const Options&) {
  arity(in, 1, 1);
  Cokernel c = cokernel(as_butterfly(in[0], 0));
  Report r;
  r.json["coker_kappa"] = io::to_json(c.coker_kappa.group);
  r.json["rho_bar"] = io::to_json(c.rho_bar);
  r.json["pi2"] = io::to_json(c.pi2.group);
  r.json["pi1_cosets"] = c.pi1.rep;
  r.line("E / kappa(H2) = " + brief(c.coker_kappa.group));
  r.line("pi2 = " + brief(c.pi2.group));
  r.line("pi1 = " + std::to_string(c.pi1.count()) + " coset(s), representatives " + list(c.pi1.rep));
  return r;
}

Report cmd_les(const std::vector<Json>& in, const Options&) {
  arity(in, 1, 1);
  Butterfly p = as_butterfly(in[0], 0);
  SequenceCheck f = les_fiber(p), k = les_kernel(p);
  bool match = kernel_cokernel_match(p);
  Report r;
  r.json["fiber"] = io::to_json(f);
  r.json["kernel"] = io::to_json(k);
  r.json["kernel_cokernel_match"] = match;
  sequence_lines(r, "fiber sequence", f);
  sequence_lines(r, "kernel sequence", k);
  r.line("pi1 Ker = pi2 Coker: " + yes(match));
  if (!f.ok()) fail(Errc::ExactnessFails, "fiber sequence fails at term " + std::to_string(f.first_failure()));
  if (!k.ok()) fail(Errc::ExactnessFails, "kernel sequence fails at term " + std::to_string(k.first_failure()));
  if (!match) fail(Errc::ExactnessFails, "pi1 of the kernel is not pi2 of the cokernel");
  return r;
}

Report cmd_exactness(const std::vector<Json>& in, const Options&) {
  arity(in, 2, 2);
  ExactnessReport e = is_exact_at(as_butterfly(in[0], 0), as_butterfly(in[1], 1));
  Report r;
  r.json["exact"] = e.exact;
  r.json["four_term"] = e.four_term;
  r.json["delta"] = io::to_json(e.delta);
  r.line("exact: " + yes(e.exact));
  r.line("four-term sequence exact: " + yes(e.four_term));
  r.line("witness delta " + list(e.delta.images()));
  return r;
}

Report cmd_braided_check(const std::vector<Json>& in, const Options&) {
  arity(in, 3, 3);
  Butterfly p = as_butterfly(in[0], 0);
  Braiding bh = io::braiding_from(in[1], p.h), bg = io::braiding_from(in[2], p.g);
  check_braided(p, bh, bg);
  CrossedModule c = braided_cokernel(p, bg);
  Report r;
  r.json["braided"] = true;
  r.json["cokernel"] = io::to_json(c);
  r.line("braided: yes");
  r.line("braided cokernel " + xmod_brief(c));
  return r;
}

Report cmd_cocycle_to_butterfly(const std::vector<Json>& in, const Options&) {
  arity(in, 1, 3);
  CrossedModule h, g;
  Json c;
  if (in.size() == 1) {
    expect(in[0], "cocycle", 0);
    if (!in[0].contains("source") || !in[0].contains("target"))
      throw SchemaError("cocycle needs \"source\" and \"target\", or pass them as inputs 1 and 2");
    h = io::xmod_from(in[0].at("source"));
    g = io::xmod_from(in[0].at("target"));
    c = in[0];
  } else {
    arity(in, 3, 3);
    h = as_xmod(in[0], 0);
    g = as_xmod(in[1], 1);
    expect(in[2], "cocycle", 2);
    c = in[2];
  }
  return butterfly_result(butterfly_from_cocycle(h, g, io::cocycle_from(c)), "butterfly");
}

Report cmd_butterfly_to_cocycle(const std::vector<Json>& in, const Options& opt) {
  arity(in, 1, 2);
  Butterfly p = as_butterfly(in[0], 0);
  std::vector<Elem> s;
  if (in.size() == 2) {
    if (!in[1].is_object() || !in[1].contains("section")) throw SchemaError("input 2 must be {\"section\": [...]}");
    try {
      s = in[1].at("section").get<std::vector<Elem>>();
    } catch (const Json::exception&) {
      throw SchemaError("section must be an array of integers");
    }
  } else {
    std::vector<std::vector<Elem>> all = sections_of(p, opt.seeded ? 4096 : 1);
    std::mt19937_64 rng(opt.seed);
    s = opt.seeded ? all[std::uniform_int_distribution<size_t>(0, all.size() - 1)(rng)] : all[0];
  }
  WeakCocycle c = cocycle_from_butterfly(p, s);
  Report r;
  Json cj = io::to_json(c);
  cj["source"] = io::to_json(p.h);
  cj["target"] = io::to_json(p.g);
  r.json["cocycle"] = cj;
  r.json["section"] = s;
  r.line("section " + list(s));
  r.line("p1 " + list(c.p1));
  r.line("p2 " + list(c.p2));
  size_t n = c.p1.size();
  for (size_t x = 0; x < n; ++x)
    r.line((x ? "    " : "eps ") +
           list(std::vector<int>(c.eps.begin() + static_cast<long>(x * n), c.eps.begin() + static_cast<long>((x + 1) * n))));
  return r;
}

Report cmd_ab_add(const std::vector<Json>& in, const Options&) {
  arity(in, 2, 2);
  expect(in[0], "ab-butterfly", 0);
  expect(in[1], "ab-butterfly", 1);
  AbButterfly s = ab_add(io::ab_butterfly_from(in[0]), io::ab_butterfly_from(in[1]));
  Report r;
  r.json["butterfly"] = io::to_json(s);
  bool split = ne_sw_splitting(s).has_value();
  r.json["split"] = split;
  r.line("sum with E = " + brief(s.b.e));
  r.line("NE-SW sequence splits: " + yes(split));
  return r;
}

Report cmd_ab_classes(const std::vector<Json>& in, const Options&) {
  arity(in, 2, 2);
  expect(in[0], "complex", 0);
  expect(in[1], "complex", 1);
  AbHomClasses h = ab_hom_classes(io::complex_from(in[0]), io::complex_from(in[1]));
  Report r;
  Json cls = Json::array();
  int strict = 0;
  for (size_t i = 0; i < h.classes.size(); ++i) {
    strict += h.strict[i];
    cls.push_back({{"butterfly", io::to_json(h.classes[i])},
                   {"e", group_summary(h.classes[i].b.e)},
                   {"split", static_cast<bool>(h.split[i])},
                   {"strict", static_cast<bool>(h.strict[i])}});
  }
  r.json["classes"] = cls;
  r.json["strict_count"] = strict;
  r.line(std::to_string(h.classes.size()) + " classes, " + std::to_string(strict) + " reachable by chain maps");
  for (size_t i = 0; i < h.classes.size(); ++i)
    r.line("class " + std::to_string(i) + ": E = " + catalog::describe(h.classes[i].b.e) +
           ", split: " + yes(h.split[i]) + ", strict: " + yes(h.strict[i]));
  return r;
}

Report cmd_h(const std::vector<Json>& in, int n) {
  arity(in, 1, 1);
  expect(in[0], "module", 0);
  Cohomology c = h_n(io::module_from(in[0]), n);
  Report r;
  r.json["degree"] = n;
  r.json["orders"] = c.orders;
  r.json["order"] = c.order();
  r.json["generators"] = c.generators;
  r.line("H^" + std::to_string(n) + " = " + cyclic_sum(c.orders) + " (order " + std::to_string(c.order()) + ")");
  return r;
}

Report cmd_postnikov(const std::vector<Json>& in, const Options& opt) {
  arity(in, 1, 1);
  CrossedModule g = as_xmod(in[0], 0);
  std::mt19937 rng(static_cast<std::mt19937::result_type>(opt.seed));
  Postnikov p = postnikov_class(g, opt.seeded ? &rng : nullptr);
  Cohomology h3 = h_n(p.module, 3);
  std::vector<linalg::Int> coords = h3.coordinates(p.k);
  bool zero = h3.is_zero(p.k);
  Report r;
  r.json["pi1"] = io::to_json(p.hg.pi1.group);
  r.json["pi2"] = io::to_json(p.hg.pi2.group);
  r.json["section"] = p.choice.s;
  r.json["correction"] = p.choice.f;
  r.json["k"] = p.k;
  r.json["h3_orders"] = h3.orders;
  r.json["coordinates"] = coords;
  r.json["zero"] = zero;
  r.line("H^3(pi1, pi2) = " + cyclic_sum(h3.orders));
  r.line(std::string("Postnikov class: ") + (zero ? "zero" : "nonzero") + ", coordinates " +
         list(std::vector<int>(coords.begin(), coords.end())));
  return r;
}

Report cmd_obstruction(const std::vector<Json>& in, const Options&) {
  arity(in, 2, 3);
  expect(in[0], "group", 0);
  Group gamma = io::group_from(in[0]);
  CrossedModule g = as_xmod(in[1], 1);
  HomotopyGroups hg = homotopy_groups(g);
  std::vector<Hom> chis;
  if (in.size() == 3) {
    expect(in[2], "hom", 2);
    chis.push_back(io::hom_from(in[2], gamma, hg.pi1.group));
  } else {
    chis = all_homs(gamma, hg.pi1.group);
  }
  Report r;
  r.json["chi"] = Json::array();
  for (const Hom& chi : chis) {
    Obstruction o = obstruction(chi, g);
    r.json["chi"].push_back({{"image", chi.images()}, {"vanishes", o.vanishes}});
    r.line("chi " + list(chi.images()) + ": " + (o.vanishes ? "obstruction vanishes" : "obstruction does not vanish"));
  }
  return r;
}

Report cmd_enum_ext(const std::vector<Json>& in, const Options&) {
  arity(in, 2, 2);
  expect(in[0], "group", 0);
  expect(in[1], "group", 1);
  ExtensionEnumeration en = enumerate_extensions(io::group_from(in[0]), io::group_from(in[1]));
  Report r;
  Json cls = Json::array();
  for (size_t i = 0; i < en.classes.size(); ++i)
    cls.push_back({{"extension", io::to_json(en.classes[i])},
                   {"e", group_summary(en.classes[i].e)},
                   {"psi", en.psi[i].images()}});
  r.json["classes"] = cls;
  r.json["factor_sets"] = en.factor_sets;
  r.line(std::to_string(en.classes.size()) + " classes from " + std::to_string(en.factor_sets) + " factor sets");
  for (size_t i = 0; i < en.classes.size(); ++i)
    r.line("class " + std::to_string(i) + ": E = " + brief(en.classes[i].e) + ", psi " + list(en.psi[i].images()));
  return r;
}

Report cmd_enum_butterflies(const std::vector<Json>& in, const Options&) {
  arity(in, 2, 2);
  expect(in[0], "group", 0);
  ButterflyEnumeration en = enumerate_butterflies(io::group_from(in[0]), as_xmod(in[1], 1));
  Report r;
  Json cls = Json::array();
  for (size_t i = 0; i < en.classes.size(); ++i)
    cls.push_back({{"butterfly", io::to_json(en.classes[i])},
                   {"e", group_summary(en.classes[i].ext.e)},
                   {"chi", en.chi[i].images()}});
  r.json["classes"] = cls;
  r.line(std::to_string(en.classes.size()) + " classes");
  for (size_t i = 0; i < en.classes.size(); ++i)
    r.line("class " + std::to_string(i) + ": E = " + brief(en.classes[i].ext.e) + ", chi " + list(en.chi[i].images()));
  return r;
}

Report cmd_baer(const std::vector<Json>& in, const Options&) {
  arity(in, 2, 2);
  expect(in[0], "extension", 0);
  expect(in[1], "extension", 1);
  Extension a = io::extension_from(in[0]), b = io::extension_from(in[1]);
  BaerProduct bp = baer_product(SemiExact::of(a), SemiExact::of(b));
  Report r;
  r.json["product"] = io::to_json(bp.group);
  r.json["to_gamma"] = io::to_json(bp.to_gamma);
  r.json["four_term"] = bp.four_term;
  r.line("L/I = " + brief(bp.group));
  r.line("four-term sequence exact: " + yes(bp.four_term));
  if (a.n.is_abelian()) {
    Extension s = baer_sum(a, b);
    r.json["sum"] = io::to_json(s);
    r.line("Baer sum E = " + brief(s.e));
  }
  return r;
}

Report cmd_diff(const std::vector<Json>& in, const Options&) {
  arity(in, 2, 3);
  Extension d;
  if (in.size() == 2) {
    expect(in[0], "extension", 0);
    expect(in[1], "extension", 1);
    d = difference_ext(io::extension_from(in[0]), io::extension_from(in[1]));
  } else {
    CrossedModule g = as_xmod(in[0], 0);
    expect(in[1], "group-butterfly", 1);
    expect(in[2], "group-butterfly", 2);
    d = difference_butterflies(io::group_butterfly_from(in[1], g), io::group_butterfly_from(in[2], g), g);
  }
  Report r;
  r.json["difference"] = io::to_json(d);
  r.line("difference: extension of " + catalog::describe(d.gamma) + " by " + catalog::describe(d.n) + " with E = " +
         brief(d.e));
  if (d.n.is_abelian()) {
    GammaModule m = module_of_extension(d);
    Cohomology h2 = h_n(m, 2);
    std::vector<linalg::Int> coords = h2.coordinates(two_cocycle_from_extension(d, d.min_section()));
    r.json["h2_orders"] = h2.orders;
    r.json["coordinates"] = coords;
    r.line("class in H^2 = " + cyclic_sum(h2.orders) + ": " + list(std::vector<int>(coords.begin(), coords.end())));
  }
  return r;
}

const std::vector<Command>& commands() {
  static const std::vector<Command> all{
      {"validate", "validate documents", "any documents", cmd_validate},
      {"pi", "homotopy groups of a crossed module or the maps a butterfly induces", "xmod | butterfly", cmd_pi},
      {"butterfly-check", "validate a butterfly, optionally test isomorphism with a second",
       "butterfly [butterfly]", cmd_butterfly_check},
      {"compose", "compose Q: K -> H with P: H -> G", "butterfly Q, butterfly P", cmd_compose},
      {"flip", "inverse of an equivalence butterfly", "butterfly", cmd_flip},
      {"kernel", "kernel crossed module", "butterfly", cmd_kernel},
      {"cokernel", "cokernel data", "butterfly", cmd_cokernel},
      {"les", "long exact sequences of the fiber and the kernel", "butterfly", cmd_les},
      {"exactness", "exactness of K -> H -> G at H", "butterfly Q, butterfly P", cmd_exactness},
      {"braided-check", "check a butterfly against braidings", "butterfly, braiding (source), braiding (target)",
       cmd_braided_check},
      {"cocycle-to-butterfly", "butterfly of a weak cocycle", "cocycle with source/target | xmod H, xmod G, cocycle",
       cmd_cocycle_to_butterfly},
      {"butterfly-to-cocycle", "weak cocycle of a butterfly through a section", "butterfly [section]",
       cmd_butterfly_to_cocycle},
      {"ab-add", "sum of abelian butterflies", "ab-butterfly, ab-butterfly", cmd_ab_add},
      {"ab-classes", "butterfly classes between two complexes", "complex X, complex Y", cmd_ab_classes},
      {"h2", "second cohomology", "module", [](const std::vector<Json>& in, const Options&) { return cmd_h(in, 2); }},
      {"h3", "third cohomology", "module", [](const std::vector<Json>& in, const Options&) { return cmd_h(in, 3); }},
      {"postnikov", "Postnikov class of a crossed module", "xmod", cmd_postnikov},
      {"obstruction", "lifting obstructions for maps into pi1", "group gamma, xmod G [hom chi]", cmd_obstruction},
      {"enum-ext", "extension classes", "group gamma, group N", cmd_enum_ext},
      {"enum-butterflies", "butterfly classes from a group into a crossed module", "group gamma, xmod G",
       cmd_enum_butterflies},
      {"baer", "Baer product of two extensions", "extension, extension", cmd_baer},
      {"diff", "difference of two extensions or two butterflies",
       "extension, extension | xmod G, group-bfly, group-bfly", cmd_diff},
  };
  return all;
}

std::string render(const Report& r, const std::string& cmd, const Options& opt) {
  if (opt.format == "json") {
    Json out = r.json;
    out["command"] = cmd;
    return out.dump(2) + "\n";
  }
  std::string s;
  for (const std::string& l : r.text) s += l + "\n";
  return s;
}

void emit(const std::string& text, const Options& opt) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw Usage("cannot write " + opt.output);
  out << text;
}

std::string witness(const Error& e) {
  std::string w = e.what();
  std::string prefix = std::string(errc_name(e.code())) + ": ";
  return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"butterflies between finite crossed modules"};
  app.require_subcommand(1);
  Options opt;
  std::map<CLI::App*, const Command*> by_app;
  for (const Command& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--input", opt.inputs, std::string("input document; expects: ") + c.inputs);
    sub->add_option("--output", opt.output, "write the report here instead of stdout");
    sub->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--size-limit", opt.size_limit, "largest group order allowed")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "seed for sampled choices");
    by_app[sub] = &c;
  }

  const Command* cmd = nullptr;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << kSchemas;
    return 2;
  }
  for (auto& [sub, c] : by_app)
    if (sub->parsed()) {
      cmd = c;
      opt.seeded = sub->count("--seed") > 0;
    }

  try {
    if (opt.size_limit > 0) set_size_limit(opt.size_limit);
    std::vector<Json> docs;
    for (const std::string& path : opt.inputs) {
      std::set<std::string> open;
      docs.push_back(load(path, open));
    }
    emit(render(cmd->run(docs, opt), cmd->name, opt), opt);
    return 0;
  } catch (const Error& e) {
    std::string code = errc_name(e.code());
    if (opt.format == "json") {
      Json out{{"command", cmd->name}, {"error", {{"code", code}, {"witness", witness(e)}}}};
      try {
        emit(out.dump(2) + "\n", opt);
      } catch (const Usage&) {
      }
    }
    std::cerr << "error: " << code << ": " << witness(e) << "\n";
    return 1;
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n"
              << "bfly " << cmd->name << " expects --input documents: " << cmd->inputs << "\n"
              << kSchemas;
    return 2;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n"
              << "bfly " << cmd->name << " expects --input documents: " << cmd->inputs << "\n"
              << kSchemas;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
