#pragma once

#include <bfly/error.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bfly {

// Elements are dense indices 0..n-1 and 0 is always the identity.
using Elem = int;

// Largest order any constructed group may have (default 4096).
int size_limit();
void set_size_limit(int n);
void check_size(long long n, const char* what);

class Group {
 public:
  Group();  // trivial group

  // Validates a full multiplication table. The identity is relabeled to 0 if needed.
  static Group make(const std::vector<std::vector<int>>& table);
  static Group from_flat(int order, std::vector<Elem> flat);

  int order() const { return d_->n; }
  Elem mul(Elem a, Elem b) const { return d_->table[static_cast<size_t>(a) * d_->n + b]; }
  Elem inv(Elem a) const { return d_->inverse[a]; }
  Elem conj(Elem x, Elem g) const { return mul(inv(g), mul(x, g)); }  // g^-1 x g
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  Elem pow(Elem a, long long k) const;
  int element_order(Elem a) const { return d_->orders[a]; }
  bool is_abelian() const { return d_->abelian; }
  const std::vector<Elem>& generators() const { return d_->gens; }
  const std::vector<Elem>& flat() const { return d_->table; }

  std::vector<std::vector<int>> rows() const;
  std::vector<Elem> center() const;
  std::vector<int> order_profile() const;

  bool operator==(const Group& o) const;
  bool operator!=(const Group& o) const { return !(*this == o); }

 private:
  struct Data {
    int n = 1;
    std::vector<Elem> table{0};
    std::vector<Elem> inverse{0};
    std::vector<int> orders{1};
    std::vector<Elem> gens;
    bool abelian = true;
  };
  explicit Group(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class Hom {
 public:
  Hom() = default;  // trivial group to trivial group
  static Hom make(const Group& domain, const Group& codomain, std::vector<Elem> image);
  static Hom identity(const Group& g);
  static Hom trivial(const Group& domain, const Group& codomain);

  Elem operator()(Elem g) const { return image_[g]; }
  const Group& domain() const { return dom_; }
  const Group& codomain() const { return cod_; }
  const std::vector<Elem>& images() const { return image_; }

  std::vector<Elem> kernel() const;
  std::vector<Elem> image() const;
  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }
  bool is_trivial() const;
  Hom inverse() const;

  bool operator==(const Hom& o) const { return image_ == o.image_ && dom_ == o.dom_ && cod_ == o.cod_; }
  bool operator!=(const Hom& o) const { return !(*this == o); }

 private:
  Group dom_, cod_;
  std::vector<Elem> image_{0};
};

// outer ∘ inner
Hom compose(const Hom& outer, const Hom& inner);

// Right action of group() on space(): apply(a, g) = a^g.
class RightAction {
 public:
  RightAction() = default;
  static RightAction make(const Group& acting, const Group& space, const std::vector<std::vector<int>>& table);
  static RightAction from_flat(const Group& acting, const Group& space, std::vector<Elem> flat);
  static RightAction trivial(const Group& acting, const Group& space);
  static RightAction conjugation(const Group& g);
  // Action of f's domain through f: a^k := a^{f(k)}.
  static RightAction pullback(const RightAction& act, const Hom& f);

  Elem apply(Elem a, Elem g) const { return table_[static_cast<size_t>(a) * grp_.order() + g]; }
  const Group& group() const { return grp_; }
  const Group& space() const { return space_; }
  std::vector<std::vector<int>> rows() const;
  bool is_trivial() const;

  bool operator==(const RightAction& o) const {
    return table_ == o.table_ && grp_ == o.grp_ && space_ == o.space_;
  }

 private:
  Group grp_, space_;
  std::vector<Elem> table_{0};
};

// Subgroup generated by gens, sorted.
std::vector<Elem> closure(const Group& g, const std::vector<Elem>& gens);
bool is_subgroup(const Group& g, const std::vector<Elem>& elems);
bool is_normal(const Group& g, const std::vector<Elem>& sub);

struct Subgroup {
  Group group;
  Hom incl;  // index i of group maps to the i-th smallest element
};
Subgroup make_subgroup(const Group& g, std::vector<Elem> elems);

struct Quotient {
  Group group;
  Hom proj;
  std::vector<Elem> rep;  // minimal element of each coset
};
Quotient quotient_by_normal(const Group& g, std::vector<Elem> normal);

// Left cosets x·S of a subgroup, labeled by their minimal elements.
struct Cosets {
  std::vector<int> of;    // element -> coset index
  std::vector<Elem> rep;  // coset index -> minimal element
  int count() const { return static_cast<int>(rep.size()); }
};
Cosets left_cosets(const Group& g, const std::vector<Elem>& sub);

// (a, b) has index a * |B| + b.
Group direct_product(const Group& a, const Group& b);
// act: K on G. (k, g) has index k * |G| + g and (k,g)(k',g') = (kk', g^{k'} g').
Group semidirect_product(const RightAction& act);

// A group on arbitrary 64-bit codes; codes[0] must be the identity.
struct Enumerated {
  Group group;
  std::vector<std::uint64_t> codes;
  std::unordered_map<std::uint64_t, Elem> index;
  Elem at(std::uint64_t code) const;
};
Enumerated enumerate_group(std::vector<std::uint64_t> codes,
                           const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& mul);

// Generalized semidirect product K ⋊^H G.
struct SemidirectData {
  Group k, g, h;
  Hom d;  // H -> K
  Hom p;  // H -> G
  RightAction act_k_on_h;
  RightAction act_k_on_g;
};

struct SemidirectResult {
  Group group;
  Hom p_prime;      // K -> result
  Hom d_prime;      // G -> result
  RightAction act;  // result on G
  std::vector<std::pair<Elem, Elem>> rep;  // minimal (k, g) of each class
  Elem cls(Elem k, Elem g) const { return group.mul(p_prime(k), d_prime(g)); }
};

SemidirectResult generalized_semidirect(const SemidirectData& data);

struct SemidirectCheck {
  bool square = false;         // p'∘d = d'∘p
  bool coker_iso = false;      // Coker d -> Coker d' bijective
  bool ker_onto = false;       // Ker d -> Ker d' surjective
  bool ker_kernel = false;     // with kernel Ker p ∩ Ker d
  bool ok() const { return square && coker_iso && ker_onto && ker_kernel; }
};
SemidirectCheck check_semidirect(const SemidirectData& data, const SemidirectResult& res);

// theta: K -> G crossed homomorphism. Returns (k,g) ↦ (k, θ(k)g) from the q-product to the p-product.
Hom theta_pushforward(const std::vector<Elem>& theta, const SemidirectData& data_p, const SemidirectData& data_q);

struct HomSearch {
  Group domain, codomain;
  std::vector<std::pair<Elem, Elem>> fixed;
  std::function<bool(Elem, Elem)> allowed;  // optional filter on every (x, f(x))
  bool injective = false;
};

// Visits homomorphisms in deterministic order; stop by returning false.
void enumerate_homs(const HomSearch& s, const std::function<bool(const std::vector<Elem>&)>& visit);
std::optional<Hom> find_hom(const HomSearch& s);
std::vector<Hom> all_homs(const Group& a, const Group& b);
std::optional<Hom> isomorphism_search(const Group& g, const Group& h,
                                      const std::vector<std::pair<Elem, Elem>>& constraints = {});
std::vector<Hom> automorphisms(const Group& g);

// Cyclic decomposition of a finite abelian group.
struct AbelianDecomposition {
  std::vector<long long> orders;              // cyclic factor orders, each > 1
  std::vector<Elem> gens;                     // generator of each factor
  std::vector<std::vector<long long>> coords; // element -> coordinates
  Elem element(const std::vector<long long>& c) const;
  Group group;
};
AbelianDecomposition decompose_abelian(const Group& a);
std::vector<long long> abelian_invariants(const Group& a);

}  // namespace bfly
