#include <bfly/catalog.hpp>
#include <bfly/json_io.hpp>

namespace bfly::io {

namespace {

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<int> ints(const Json& j, const char* what) {
  try {
    return j.get<std::vector<int>>();
  } catch (const Json::exception&) {
    throw SchemaError(std::string(what) + " must be an array of integers");
  }
}

std::vector<std::vector<int>> table(const Json& j, const char* what) {
  try {
    return j.get<std::vector<std::vector<int>>>();
  } catch (const Json::exception&) {
    throw SchemaError(std::string(what) + " must be an array of integer arrays");
  }
}

Group named(const std::string& s) {
  if (s == "1") return Group();
  if (s == "V4") return catalog::klein4();
  if (s == "Q8") return catalog::quaternion8();
  if (s.size() >= 2 && (s[0] == 'Z' || s[0] == 'S' || s[0] == 'D')) {
    int n = 0;
    try {
      n = std::stoi(s.substr(1));
    } catch (const std::exception&) {
      throw SchemaError("unknown group name \"" + s + "\"");
    }
    if (n < 1) throw SchemaError("unknown group name \"" + s + "\"");
    if (s[0] == 'Z') return catalog::cyclic(n);
    if (s[0] == 'S') return catalog::symmetric(n);
    return catalog::dihedral(n);
  }
  throw SchemaError("unknown group name \"" + s + "\"");
}

}  // namespace

Json to_json(const Group& g) { return {{"order", g.order()}, {"table", g.rows()}}; }

Group group_from(const Json& j) {
  if (j.is_object() && j.contains("name")) {
    if (!j.at("name").is_string()) throw SchemaError("\"name\" must be a string");
    return named(j.at("name").get<std::string>());
  }
  std::vector<std::vector<int>> t = table(need(j, "table"), "table");
  if (j.contains("order") && (!j.at("order").is_number_integer() || j.at("order").get<long long>() != (long long)t.size()))
    throw SchemaError("\"order\" does not match the table");
  Group g = Group::make(t);
  // other fields refer to elements by index, so no relabeling here
  for (size_t x = 0; x < t.size(); ++x)
    if (t[0][x] != static_cast<int>(x) || t[x][0] != static_cast<int>(x))
      throw SchemaError("element 0 must be the identity");
  return g;
}

Json to_json(const Hom& f) { return {{"image", f.images()}}; }

Hom hom_from(const Json& j, const Group& domain, const Group& codomain) {
  return Hom::make(domain, codomain, ints(need(j, "image"), "image"));
}

Json to_json(const RightAction& a) { return {{"table", a.rows()}}; }

RightAction action_from(const Json& j, const Group& acting, const Group& space) {
  return RightAction::make(acting, space, table(need(j, "table"), "action table"));
}

Json to_json(const CrossedModule& x) {
  return {{"g2", to_json(x.g2)}, {"g1", to_json(x.g1)}, {"boundary", to_json(x.boundary)}, {"action", to_json(x.action)}};
}

CrossedModule xmod_from(const Json& j) {
  if (j.is_object() && j.contains("aut")) return aut_xmod(group_from(j.at("aut"))).xmod;
  Group g2 = group_from(need(j, "g2")), g1 = group_from(need(j, "g1"));
  Hom d = hom_from(need(j, "boundary"), g2, g1);
  RightAction act = j.contains("action") ? action_from(j.at("action"), g1, g2) : RightAction::trivial(g1, g2);
  return CrossedModule::make(d, act);
}

Json to_json(const StrictMorphism& m) {
  return {{"source", to_json(m.source)}, {"target", to_json(m.target)}, {"p2", to_json(m.p2)}, {"p1", to_json(m.p1)}};
}

StrictMorphism strict_from(const Json& j) {
  CrossedModule h = xmod_from(need(j, "source")), g = xmod_from(need(j, "target"));
  return StrictMorphism::make(h, g, hom_from(need(j, "p2"), h.g2, g.g2), hom_from(need(j, "p1"), h.g1, g.g1));
}

Json to_json(const Butterfly& b) {
  return {{"source", to_json(b.h)},     {"target", to_json(b.g)},   {"e", to_json(b.e)},
          {"iota", to_json(b.iota)},    {"kappa", to_json(b.kappa)}, {"sigma", to_json(b.sigma)},
          {"rho", to_json(b.rho)}};
}

Butterfly butterfly_from(const Json& j) {
  CrossedModule h = xmod_from(need(j, "source")), g = xmod_from(need(j, "target"));
  Group e = group_from(need(j, "e"));
  return Butterfly::make(h, g, hom_from(need(j, "iota"), g.g2, e), hom_from(need(j, "kappa"), h.g2, e),
                         hom_from(need(j, "sigma"), e, h.g1), hom_from(need(j, "rho"), e, g.g1));
}

Json to_json(const WeakCocycle& c) {
  size_t n = c.p1.size();
  std::vector<std::vector<int>> eps(n, std::vector<int>(n));
  for (size_t x = 0; x < n; ++x)
    for (size_t y = 0; y < n; ++y) eps[x][y] = c.eps[x * n + y];
  return {{"p1", c.p1}, {"p2", c.p2}, {"eps", eps}};
}

WeakCocycle cocycle_from(const Json& j) {
  WeakCocycle c;
  c.p1 = ints(need(j, "p1"), "p1");
  c.p2 = ints(need(j, "p2"), "p2");
  for (const auto& row : table(need(j, "eps"), "eps")) {
    if (row.size() != c.p1.size()) throw SchemaError("eps must be |H1| x |H1|");
    c.eps.insert(c.eps.end(), row.begin(), row.end());
  }
  if (c.eps.size() != c.p1.size() * c.p1.size()) throw SchemaError("eps must be |H1| x |H1|");
  return c;
}

Json to_json(const Complex2& c) { return {{"xm1", to_json(c.xm1)}, {"x0", to_json(c.x0)}, {"d", to_json(c.d)}}; }

Complex2 complex_from(const Json& j) {
  Group a = group_from(need(j, "xm1")), b = group_from(need(j, "x0"));
  return Complex2::make(hom_from(need(j, "d"), a, b));
}

Json to_json(const AbButterfly& b) {
  Json out = to_json(b.b);
  out["source"] = to_json(b.x);
  out["target"] = to_json(b.y);
  return out;
}

AbButterfly ab_butterfly_from(const Json& j) {
  Complex2 x = complex_from(need(j, "source")), y = complex_from(need(j, "target"));
  Group e = group_from(need(j, "e"));
  return AbButterfly::make(x, y, hom_from(need(j, "iota"), y.xm1, e), hom_from(need(j, "kappa"), x.xm1, e),
                           hom_from(need(j, "sigma"), e, x.x0), hom_from(need(j, "rho"), e, y.x0));
}

Json to_json(const GammaModule& m) {
  return {{"gamma", to_json(m.gamma)}, {"a", to_json(m.a)}, {"action", to_json(m.action)}};
}

GammaModule module_from(const Json& j) {
  Group gamma = group_from(need(j, "gamma")), a = group_from(need(j, "a"));
  if (!j.contains("action")) return GammaModule::trivial(gamma, a);
  return GammaModule::make(action_from(j.at("action"), gamma, a));
}

Json to_json(const Extension& e) {
  return {{"n", to_json(e.n)},
          {"e", to_json(e.e)},
          {"gamma", to_json(e.gamma)},
          {"incl", to_json(e.incl)},
          {"proj", to_json(e.proj)}};
}

Extension extension_from(const Json& j) {
  Group n = group_from(need(j, "n")), e = group_from(need(j, "e")), gamma = group_from(need(j, "gamma"));
  return Extension::make(hom_from(need(j, "incl"), n, e), hom_from(need(j, "proj"), e, gamma));
}

Json to_json(const GroupButterfly& p) { return {{"ext", to_json(p.ext)}, {"rho", to_json(p.rho)}}; }

GroupButterfly group_butterfly_from(const Json& j, const CrossedModule& g) {
  Extension ext = extension_from(need(j, "ext"));
  return GroupButterfly::make(g, ext, hom_from(need(j, "rho"), ext.e, g.g1));
}

Braiding braiding_from(const Json& j, const CrossedModule& x) {
  Braiding b;
  for (const auto& row : table(need(j, "table"), "braiding table")) {
    if (static_cast<int>(row.size()) != x.g1.order()) throw SchemaError("braiding must be |G1| x |G1|");
    b.insert(b.end(), row.begin(), row.end());
  }
  validate_braiding(x, b);
  return b;
}

Json to_json(const SequenceCheck& s) {
  Json terms = Json::array();
  for (size_t i = 0; i < s.terms.size(); ++i) terms.push_back({{"name", s.terms[i]}, {"size", s.sizes[i]}});
  std::vector<bool> exact(s.exact.begin(), s.exact.end());
  return {{"terms", terms}, {"exact", exact}, {"ok", s.ok()}};
}

std::string kind_of(const Json& j) {
  if (!j.is_object()) return "";
  if (j.contains("iota")) {
    const Json& src = j.value("source", Json());
    return src.is_object() && src.contains("xm1") ? "ab-butterfly" : "butterfly";
  }
  if (j.contains("eps")) return "cocycle";
  if (j.contains("p1") && j.contains("p2")) return "strict";
  if (j.contains("g2") || j.contains("aut")) return "xmod";
  if (j.contains("xm1")) return "complex";
  if (j.contains("ext") && j.contains("rho")) return "group-butterfly";
  if (j.contains("incl") && j.contains("proj")) return "extension";
  if (j.contains("gamma") && j.contains("a")) return "module";
  if (j.contains("name") || (j.contains("table") && j.contains("order"))) return "group";
  if (j.contains("table")) return "braiding";
  if (j.contains("image")) return "hom";
  return "";
}

}  // namespace bfly::io
