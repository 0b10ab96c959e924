#pragma once

#include <bfly/abelian.hpp>
#include <bfly/cocycle.hpp>
#include <bfly/cohomology.hpp>
#include <bfly/extensions.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

// JSON documents for every library type. Readers validate through the library
// constructors, so a malformed table surfaces as a bfly::Error; shape problems
// (missing keys, wrong JSON types) raise SchemaError.
namespace bfly::io {

using Json = nlohmann::json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// group: {"order": n, "table": [[...]]} or {"name": "Z4" | "V4" | "S3" | "D4" | "Q8" | "1"}
Json to_json(const Group& g);
Group group_from(const Json& j);

// hom: {"image": [...]}, domain and codomain come from context
Json to_json(const Hom& f);
Hom hom_from(const Json& j, const Group& domain, const Group& codomain);

// action: {"table": [[...]]}, row a, column g holds a^g
Json to_json(const RightAction& a);
RightAction action_from(const Json& j, const Group& acting, const Group& space);

// {"g2", "g1", "boundary", "action"}, or {"aut": group} for [K -> Aut K]
Json to_json(const CrossedModule& x);
CrossedModule xmod_from(const Json& j);

// {"source", "target", "p2", "p1"}
Json to_json(const StrictMorphism& m);
StrictMorphism strict_from(const Json& j);

// {"source", "target", "e", "iota", "kappa", "sigma", "rho"}
Json to_json(const Butterfly& b);
Butterfly butterfly_from(const Json& j);

// {"p1": [...], "p2": [...], "eps": [[...]]}
Json to_json(const WeakCocycle& c);
WeakCocycle cocycle_from(const Json& j);

// {"xm1", "x0", "d"}
Json to_json(const Complex2& c);
Complex2 complex_from(const Json& j);
// butterfly whose source and target are complexes
Json to_json(const AbButterfly& b);
AbButterfly ab_butterfly_from(const Json& j);

// {"gamma", "a", "action"}
Json to_json(const GammaModule& m);
GammaModule module_from(const Json& j);

// {"n", "e", "gamma", "incl", "proj"}
Json to_json(const Extension& e);
Extension extension_from(const Json& j);

// {"ext": extension, "rho": hom}
Json to_json(const GroupButterfly& p);
GroupButterfly group_butterfly_from(const Json& j, const CrossedModule& g);

// {"table": [[...]]} over G1 x G1
Braiding braiding_from(const Json& j, const CrossedModule& x);

Json to_json(const SequenceCheck& s);

// What a document looks like: "group", "xmod", "butterfly", "ab-butterfly", "strict",
// "cocycle", "complex", "module", "extension", "group-butterfly", "braiding", "hom" or "".
std::string kind_of(const Json& j);

}  // namespace bfly::io
