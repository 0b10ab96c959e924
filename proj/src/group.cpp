#include <bfly/group.hpp>
#include <bfly/linalg.hpp>

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <string>

namespace bfly {

namespace {

std::atomic<int> g_size_limit{4096};

std::string str(long long x) { return std::to_string(x); }

// Greedy generating set: smallest element outside the current closure.
// Closure is by right multiplication, which suffices for Light's test too.
std::vector<Elem> greedy_generators(int n, const std::vector<Elem>& t) {
  std::vector<Elem> gens;
  std::vector<char> in(n, 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (Elem g = 1; g < n; ++g) {
    if (in[g]) continue;
    gens.push_back(g);
    for (size_t i = 0; i < members.size(); ++i) {
      Elem x = members[i];
      for (Elem s : gens) {
        Elem y = t[static_cast<size_t>(x) * n + s];
        if (!in[y]) {
          in[y] = 1;
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

}  // namespace

int size_limit() { return g_size_limit.load(); }
void set_size_limit(int n) { g_size_limit.store(n); }

void check_size(long long n, const char* what) {
  if (n > size_limit())
    fail(Errc::SizeLimit, std::string(what) + " of order " + str(n) + " exceeds limit " + str(size_limit()));
}

Group::Group() {
  static const std::shared_ptr<const Data> trivial = std::make_shared<const Data>();
  d_ = trivial;
}

Group Group::make(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) fail(Errc::MalformedTable, "empty table");
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(Errc::MalformedTable, "row " + str(i) + " has length " + str(table[i].size()));
    for (int x : table[i]) flat.push_back(x);
  }
  return from_flat(n, std::move(flat));
}

Group Group::from_flat(int n, std::vector<Elem> t) {
  if (n <= 0) fail(Errc::MalformedTable, "order must be positive");
  check_size(n, "group");
  if (t.size() != static_cast<size_t>(n) * n) fail(Errc::MalformedTable, "table is not square");
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i] < 0 || t[i] >= n)
      fail(Errc::MalformedTable, "entry (" + str(i / n) + "," + str(i % n) + ") out of range");
  auto at = [&](Elem a, Elem b) { return t[static_cast<size_t>(a) * n + b]; };

  Elem e = -1;
  for (Elem c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) fail(Errc::NoIdentity, "no two-sided identity");
  if (e != 0) {
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[e]);
    std::vector<Elem> r(t.size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) r[static_cast<size_t>(perm[a]) * n + perm[b]] = perm[at(a, b)];
    t = std::move(r);
  }

  auto d = std::make_shared<Data>();
  d->n = n;
  d->inverse.assign(n, -1);
  for (Elem g = 0; g < n; ++g) {
    for (Elem h = 0; h < n; ++h)
      if (t[static_cast<size_t>(g) * n + h] == 0) {
        d->inverse[g] = h;
        break;
      }
    Elem h = d->inverse[g];
    if (h < 0 || t[static_cast<size_t>(h) * n + g] != 0) fail(Errc::NoInverse, "element " + str(g));
  }

  d->gens = greedy_generators(n, t);
  auto mul = [&](Elem a, Elem b) { return t[static_cast<size_t>(a) * n + b]; };
  if (n <= 32) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (mul(mul(x, y), z) != mul(x, mul(y, z)))
            fail(Errc::NotAssociative, "(" + str(x) + "," + str(y) + "," + str(z) + ")");
  } else {
    // Light's test: elements g with (xg)y = x(gy) for all x, y form a closed set.
    for (Elem g : d->gens)
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (mul(mul(x, g), y) != mul(x, mul(g, y)))
            fail(Errc::NotAssociative, "(" + str(x) + "," + str(g) + "," + str(y) + ")");
  }

  d->orders.assign(n, 0);
  for (Elem g = 0; g < n; ++g) {
    int k = 1;
    for (Elem x = g; x != 0; x = mul(x, g)) ++k;
    d->orders[g] = g == 0 ? 1 : k;
  }
  d->abelian = true;
  for (Elem a : d->gens)
    for (Elem b : d->gens)
      if (mul(a, b) != mul(b, a)) d->abelian = false;
  d->table = std::move(t);
  return Group(std::move(d));
}

Elem Group::pow(Elem a, long long k) const {
  int o = element_order(a);
  k %= o;
  if (k < 0) k += o;
  Elem r = 0;
  for (long long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::vector<std::vector<int>> Group::rows() const {
  int n = order();
  std::vector<std::vector<int>> r(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r[a][b] = mul(a, b);
  return r;
}

std::vector<Elem> Group::center() const {
  std::vector<Elem> c;
  for (Elem z = 0; z < order(); ++z) {
    bool ok = true;
    for (Elem g : generators()) ok = ok && mul(z, g) == mul(g, z);
    if (ok) c.push_back(z);
  }
  return c;
}

std::vector<int> Group::order_profile() const {
  std::vector<int> p = d_->orders;
  std::sort(p.begin(), p.end());
  return p;
}

bool Group::operator==(const Group& o) const {
  return d_ == o.d_ || (d_->n == o.d_->n && d_->table == o.d_->table);
}

// ---------------------------------------------------------------------------

Hom Hom::make(const Group& domain, const Group& codomain, std::vector<Elem> image) {
  if (static_cast<int>(image.size()) != domain.order())
    fail(Errc::InvalidArgument, "image has length " + str(image.size()) + ", domain order " + str(domain.order()));
  for (Elem y : image)
    if (y < 0 || y >= codomain.order()) fail(Errc::InvalidArgument, "image entry " + str(y) + " out of range");
  if (image[0] != 0) fail(Errc::NotHomomorphism, "(0,0): identity not preserved");
  for (Elem x = 0; x < domain.order(); ++x)
    for (Elem g : domain.generators())
      if (image[domain.mul(x, g)] != codomain.mul(image[x], image[g]))
        fail(Errc::NotHomomorphism, "(" + str(x) + "," + str(g) + ")");
  Hom h;
  h.dom_ = domain;
  h.cod_ = codomain;
  h.image_ = std::move(image);
  return h;
}

Hom Hom::identity(const Group& g) {
  std::vector<Elem> im(g.order());
  std::iota(im.begin(), im.end(), 0);
  Hom h;
  h.dom_ = h.cod_ = g;
  h.image_ = std::move(im);
  return h;
}

Hom Hom::trivial(const Group& domain, const Group& codomain) {
  Hom h;
  h.dom_ = domain;
  h.cod_ = codomain;
  h.image_.assign(domain.order(), 0);
  return h;
}

std::vector<Elem> Hom::kernel() const {
  std::vector<Elem> k;
  for (Elem x = 0; x < dom_.order(); ++x)
    if (image_[x] == 0) k.push_back(x);
  return k;
}

std::vector<Elem> Hom::image() const {
  std::vector<char> seen(cod_.order(), 0);
  for (Elem y : image_) seen[y] = 1;
  std::vector<Elem> r;
  for (Elem y = 0; y < cod_.order(); ++y)
    if (seen[y]) r.push_back(y);
  return r;
}

bool Hom::injective() const { return kernel().size() == 1; }
bool Hom::surjective() const { return static_cast<int>(image().size()) == cod_.order(); }

bool Hom::is_trivial() const {
  return std::all_of(image_.begin(), image_.end(), [](Elem y) { return y == 0; });
}

Hom Hom::inverse() const {
  if (!bijective()) fail(Errc::InvalidArgument, "inverse of a non-bijective homomorphism");
  std::vector<Elem> inv(cod_.order());
  for (Elem x = 0; x < dom_.order(); ++x) inv[image_[x]] = x;
  Hom h;
  h.dom_ = cod_;
  h.cod_ = dom_;
  h.image_ = std::move(inv);
  return h;
}

Hom compose(const Hom& outer, const Hom& inner) {
  if (inner.codomain() != outer.domain()) fail(Errc::TypeMismatch, "composition of incompatible homomorphisms");
  std::vector<Elem> im(inner.domain().order());
  for (Elem x = 0; x < inner.domain().order(); ++x) im[x] = outer(inner(x));
  return Hom::make(inner.domain(), outer.codomain(), std::move(im));
}

// ---------------------------------------------------------------------------

RightAction RightAction::make(const Group& acting, const Group& space, const std::vector<std::vector<int>>& table) {
  if (static_cast<int>(table.size()) != space.order())
    fail(Errc::BadAction, "table needs one row per element of the acted-on group");
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(space.order()) * acting.order());
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != acting.order())
      fail(Errc::BadAction, "table rows need one entry per element of the acting group");
    for (int x : row) flat.push_back(x);
  }
  return from_flat(acting, space, std::move(flat));
}

RightAction RightAction::from_flat(const Group& acting, const Group& space, std::vector<Elem> flat) {
  int m = acting.order(), n = space.order();
  if (flat.size() != static_cast<size_t>(n) * m) fail(Errc::BadAction, "table has wrong size");
  for (Elem y : flat)
    if (y < 0 || y >= n) fail(Errc::BadAction, "entry out of range");
  auto at = [&](Elem a, Elem g) { return flat[static_cast<size_t>(a) * m + g]; };
  for (Elem a = 0; a < n; ++a)
    if (at(a, 0) != a) fail(Errc::BadAction, "identity acts nontrivially on " + str(a));
  for (Elem g = 0; g < m; ++g) {
    std::vector<char> seen(n, 0);
    for (Elem a = 0; a < n; ++a) seen[at(a, g)] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n)
      fail(Errc::BadAction, "element " + str(g) + " does not act bijectively");
    for (Elem a = 0; a < n; ++a)
      for (Elem b : space.generators())
        if (at(space.mul(a, b), g) != space.mul(at(a, g), at(b, g)))
          fail(Errc::BadAction, "element " + str(g) + " does not act by a homomorphism");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < m; ++x)
      for (Elem s : acting.generators())
        if (at(at(a, x), s) != at(a, acting.mul(x, s)))
          fail(Errc::BadAction, "(a^x)^y != a^(xy) at a=" + str(a) + " x=" + str(x) + " y=" + str(s));
  RightAction r;
  r.grp_ = acting;
  r.space_ = space;
  r.table_ = std::move(flat);
  return r;
}

RightAction RightAction::trivial(const Group& acting, const Group& space) {
  RightAction r;
  r.grp_ = acting;
  r.space_ = space;
  r.table_.resize(static_cast<size_t>(space.order()) * acting.order());
  for (Elem a = 0; a < space.order(); ++a)
    for (Elem g = 0; g < acting.order(); ++g) r.table_[static_cast<size_t>(a) * acting.order() + g] = a;
  return r;
}

RightAction RightAction::conjugation(const Group& g) {
  RightAction r;
  r.grp_ = r.space_ = g;
  int n = g.order();
  r.table_.resize(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x) r.table_[static_cast<size_t>(a) * n + x] = g.conj(a, x);
  return r;
}

RightAction RightAction::pullback(const RightAction& act, const Hom& f) {
  if (f.codomain() != act.group()) fail(Errc::TypeMismatch, "pullback of an action along an incompatible map");
  RightAction r;
  r.grp_ = f.domain();
  r.space_ = act.space();
  int m = f.domain().order();
  r.table_.resize(static_cast<size_t>(act.space().order()) * m);
  for (Elem a = 0; a < act.space().order(); ++a)
    for (Elem k = 0; k < m; ++k) r.table_[static_cast<size_t>(a) * m + k] = act.apply(a, f(k));
  return r;
}

std::vector<std::vector<int>> RightAction::rows() const {
  std::vector<std::vector<int>> r(space_.order(), std::vector<int>(grp_.order()));
  for (Elem a = 0; a < space_.order(); ++a)
    for (Elem g = 0; g < grp_.order(); ++g) r[a][g] = apply(a, g);
  return r;
}

bool RightAction::is_trivial() const {
  for (Elem a = 0; a < space_.order(); ++a)
    for (Elem g = 0; g < grp_.order(); ++g)
      if (apply(a, g) != a) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<Elem> closure(const Group& g, const std::vector<Elem>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{0};
  in[0] = 1;
  for (size_t i = 0; i < members.size(); ++i)
    for (Elem s : gens) {
      Elem y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const Group& g, const std::vector<Elem>& elems) {
  std::vector<Elem> s = elems;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty() || s[0] != 0) return false;
  for (Elem x : s)
    if (x < 0 || x >= g.order()) return false;
  return closure(g, s) == s;
}

bool is_normal(const Group& g, const std::vector<Elem>& sub) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : sub) in[x] = 1;
  for (Elem x : sub)
    for (Elem s : g.generators())
      if (!in[g.conj(x, s)]) return false;
  return true;
}

Subgroup make_subgroup(const Group& g, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!is_subgroup(g, elems)) fail(Errc::NotSubgroup, "subset of size " + str(elems.size()));
  int k = static_cast<int>(elems.size());
  std::vector<int> idx(g.order(), -1);
  for (int i = 0; i < k; ++i) idx[elems[i]] = i;
  std::vector<Elem> t(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[static_cast<size_t>(i) * k + j] = idx[g.mul(elems[i], elems[j])];
  Group sub = Group::from_flat(k, std::move(t));
  return {sub, Hom::make(sub, g, elems)};
}

Quotient quotient_by_normal(const Group& g, std::vector<Elem> normal) {
  std::sort(normal.begin(), normal.end());
  normal.erase(std::unique(normal.begin(), normal.end()), normal.end());
  if (!is_subgroup(g, normal)) fail(Errc::NotSubgroup, "subset of size " + str(normal.size()));
  if (!is_normal(g, normal)) fail(Errc::NotNormal, "subgroup of order " + str(normal.size()));
  Cosets c = left_cosets(g, normal);
  int q = c.count();
  std::vector<Elem> t(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) t[static_cast<size_t>(a) * q + b] = c.of[g.mul(c.rep[a], c.rep[b])];
  Group quot = Group::from_flat(q, std::move(t));
  return {quot, Hom::make(g, quot, c.of), c.rep};
}

Cosets left_cosets(const Group& g, const std::vector<Elem>& sub) {
  Cosets c;
  c.of.assign(g.order(), -1);
  for (Elem x = 0; x < g.order(); ++x) {
    if (c.of[x] >= 0) continue;
    int id = c.count();
    c.rep.push_back(x);
    for (Elem s : sub) c.of[g.mul(x, s)] = id;
  }
  return c;
}

Group direct_product(const Group& a, const Group& b) {
  long long n = static_cast<long long>(a.order()) * b.order();
  check_size(n, "direct product");
  int nb = b.order();
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<size_t>(x) * n + y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return Group::from_flat(static_cast<int>(n), std::move(t));
}

Group semidirect_product(const RightAction& act) {
  const Group& k = act.group();
  const Group& g = act.space();
  long long n = static_cast<long long>(k.order()) * g.order();
  check_size(n, "semidirect product");
  int ng = g.order();
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Elem k1 = x / ng, g1 = x % ng, k2 = y / ng, g2 = y % ng;
      t[static_cast<size_t>(x) * n + y] = k.mul(k1, k2) * ng + g.mul(act.apply(g1, k2), g2);
    }
  return Group::from_flat(static_cast<int>(n), std::move(t));
}

Elem Enumerated::at(std::uint64_t code) const {
  auto it = index.find(code);
  if (it == index.end()) fail(Errc::PostconditionFailed, "code outside enumerated group");
  return it->second;
}

Enumerated enumerate_group(std::vector<std::uint64_t> codes,
                           const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& mul) {
  check_size(static_cast<long long>(codes.size()), "constructed group");
  Enumerated out;
  int n = static_cast<int>(codes.size());
  for (int i = 0; i < n; ++i) out.index.emplace(codes[i], i);
  std::vector<Elem> t(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = out.index.find(mul(codes[i], codes[j]));
      if (it == out.index.end()) fail(Errc::NotSubgroup, "subset not closed under multiplication");
      t[static_cast<size_t>(i) * n + j] = it->second;
    }
  out.group = Group::from_flat(n, std::move(t));
  out.codes = std::move(codes);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void validate_semidirect(const SemidirectData& s) {
  auto bad = [](const std::string& what) { fail(Errc::IncompatibleData, what); };
  if (s.d.domain() != s.h || s.d.codomain() != s.k) bad("d must map H to K");
  if (s.p.domain() != s.h || s.p.codomain() != s.g) bad("p must map H to G");
  if (s.act_k_on_h.group() != s.k || s.act_k_on_h.space() != s.h) bad("action of K on H has wrong groups");
  if (s.act_k_on_g.group() != s.k || s.act_k_on_g.space() != s.g) bad("action of K on G has wrong groups");
  for (Elem h = 0; h < s.h.order(); ++h)
    for (Elem k = 0; k < s.k.order(); ++k) {
      Elem hk = s.act_k_on_h.apply(h, k);
      if (s.d(hk) != s.k.conj(s.d(h), k))
        bad("d not K-equivariant at h=" + str(h) + " k=" + str(k));
      if (s.p(hk) != s.act_k_on_g.apply(s.p(h), k))
        bad("p not K-equivariant at h=" + str(h) + " k=" + str(k));
    }
  for (Elem h = 0; h < s.h.order(); ++h)
    for (Elem x = 0; x < s.g.order(); ++x)
      if (s.act_k_on_g.apply(x, s.d(h)) != s.g.conj(x, s.p(h)))
        bad("compatibility g^d(h) = p(h)^-1 g p(h) fails at h=" + str(h) + " g=" + str(x));
}

}  // namespace

SemidirectResult generalized_semidirect(const SemidirectData& s) {
  validate_semidirect(s);
  Group big = semidirect_product(s.act_k_on_g);
  int ng = s.g.order();
  std::vector<Elem> n;
  for (Elem h = 0; h < s.h.order(); ++h) n.push_back(s.k.inv(s.d(h)) * ng + s.p(h));
  Quotient q = quotient_by_normal(big, n);

  SemidirectResult r;
  r.group = q.group;
  std::vector<Elem> pk(s.k.order()), dg(ng);
  for (Elem k = 0; k < s.k.order(); ++k) pk[k] = q.proj(k * ng);
  for (Elem g = 0; g < ng; ++g) dg[g] = q.proj(g);
  r.p_prime = Hom::make(s.k, r.group, pk);
  r.d_prime = Hom::make(s.g, r.group, dg);
  for (Elem c : q.rep) r.rep.emplace_back(c / ng, c % ng);

  // (k,g) acts on x by g^-1 x^k g; must be constant on classes.
  int nr = r.group.order();
  std::vector<Elem> flat(static_cast<size_t>(ng) * nr, -1);
  for (Elem c = 0; c < big.order(); ++c) {
    Elem k = c / ng, g = c % ng, cls = q.proj(c);
    for (Elem x = 0; x < ng; ++x) {
      Elem y = s.g.conj(s.act_k_on_g.apply(x, k), g);
      Elem& slot = flat[static_cast<size_t>(x) * nr + cls];
      if (slot < 0) slot = y;
      else if (slot != y) fail(Errc::PostconditionFailed, "induced action not well defined");
    }
  }
  r.act = RightAction::from_flat(r.group, s.g, std::move(flat));
  return r;
}

SemidirectCheck check_semidirect(const SemidirectData& s, const SemidirectResult& r) {
  SemidirectCheck c;
  c.square = compose(r.p_prime, s.d) == compose(r.d_prime, s.p);

  Quotient ck = quotient_by_normal(s.k, s.d.image());
  Quotient cr = quotient_by_normal(r.group, r.d_prime.image());
  std::vector<Elem> map(ck.group.order(), -1);
  bool well = true;
  for (Elem k = 0; k < s.k.order(); ++k) {
    Elem y = cr.proj(r.p_prime(k));
    Elem& slot = map[ck.proj(k)];
    if (slot < 0) slot = y;
    else if (slot != y) well = false;
  }
  if (well) {
    try {
      c.coker_iso = Hom::make(ck.group, cr.group, map).bijective();
    } catch (const Error&) {
      c.coker_iso = false;
    }
  }

  std::vector<Elem> kd = s.d.kernel(), kdp = r.d_prime.kernel();
  std::vector<char> hit(s.g.order(), 0);
  bool lands = true;
  std::vector<Elem> ker_of_map;
  for (Elem h : kd) {
    Elem y = s.p(h);
    if (r.d_prime(y) != 0) lands = false;
    hit[y] = 1;
    if (y == 0) ker_of_map.push_back(h);
  }
  c.ker_onto = lands && std::all_of(kdp.begin(), kdp.end(), [&](Elem y) { return hit[y] != 0; });
  std::vector<Elem> expect;
  for (Elem h = 0; h < s.h.order(); ++h)
    if (s.p(h) == 0 && s.d(h) == 0) expect.push_back(h);
  c.ker_kernel = ker_of_map == expect;
  return c;
}

Hom theta_pushforward(const std::vector<Elem>& theta, const SemidirectData& dp, const SemidirectData& dq) {
  const Group& k = dp.k;
  const Group& g = dp.g;
  if (dq.k != k || dq.g != g || dq.h != dp.h || dq.d != dp.d || !(dq.act_k_on_h == dp.act_k_on_h))
    fail(Errc::IncompatibleData, "the two data must share K, G, H, d and the action on H");
  if (static_cast<int>(theta.size()) != k.order()) fail(Errc::InvalidArgument, "theta has wrong length");
  for (Elem x : theta)
    if (x < 0 || x >= g.order()) fail(Errc::InvalidArgument, "theta value out of range");
  const RightAction& act = dp.act_k_on_g;
  for (Elem a = 0; a < k.order(); ++a)
    for (Elem b = 0; b < k.order(); ++b)
      if (theta[k.mul(a, b)] != g.mul(act.apply(theta[a], b), theta[b]))
        fail(Errc::NotCrossedHom, "(" + str(a) + "," + str(b) + ")");
  for (Elem h = 0; h < dp.h.order(); ++h)
    if (dq.p(h) != g.mul(dp.p(h), theta[dp.d(h)]))
      fail(Errc::IncompatibleData, "q(h) != p(h)·theta(d(h)) at h=" + str(h));
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem a = 0; a < k.order(); ++a)
      if (dq.act_k_on_g.apply(x, a) != g.conj(act.apply(x, a), theta[a]))
        fail(Errc::IncompatibleData, "action in the q-data is not the theta-twisted action");

  SemidirectResult rp = generalized_semidirect(dp);
  SemidirectResult rq = generalized_semidirect(dq);
  std::vector<Elem> img(rq.group.order(), -1);
  for (Elem a = 0; a < k.order(); ++a)
    for (Elem x = 0; x < g.order(); ++x) {
      Elem src = rq.cls(a, x), dst = rp.cls(a, g.mul(theta[a], x));
      if (img[src] < 0) img[src] = dst;
      else if (img[src] != dst) fail(Errc::PostconditionFailed, "theta_* not well defined");
    }
  Hom f = Hom::make(rq.group, rp.group, img);
  if (!f.bijective()) fail(Errc::PostconditionFailed, "theta_* not bijective");
  if (compose(f, rq.d_prime) != rp.d_prime) fail(Errc::TriangleFails, "d' legs");
  std::vector<Elem> imd = rp.d_prime.image();
  std::vector<char> in(rp.group.order(), 0);
  for (Elem y : imd) in[y] = 1;
  for (Elem a = 0; a < k.order(); ++a) {
    Elem u = rp.group.mul(rp.group.inv(rp.p_prime(a)), f(rq.p_prime(a)));
    if (!in[u]) fail(Errc::TriangleFails, "cokernel triangle at k=" + str(a));
  }
  return f;
}

// ---------------------------------------------------------------------------

namespace {

class HomSearcher {
 public:
  HomSearcher(const HomSearch& s, const std::function<bool(const std::vector<Elem>&)>& visit)
      : s_(s), visit_(visit), n_(s.domain.order()), m_(s.codomain.order()) {
    img_.assign(n_, -1);
    forced_.assign(n_, -1);
    used_.assign(m_, 0);
    for (auto [x, y] : s.fixed) {
      if (x < 0 || x >= n_ || y < 0 || y >= m_) fail(Errc::InvalidArgument, "constraint out of range");
      if (forced_[x] >= 0 && forced_[x] != y) conflict_ = true;
      forced_[x] = y;
      order_hint_.push_back(x);
    }
  }

  void run() {
    if (conflict_) return;
    if (!assign(0, 0)) return;
    recurse();
  }

 private:
  bool assign(Elem x, Elem y) {
    if (forced_[x] >= 0 && forced_[x] != y) return false;
    if (s_.injective && used_[y]) return false;
    if (s_.allowed && !s_.allowed(x, y)) return false;
    img_[x] = y;
    used_[y] = 1;
    trail_.push_back(x);
    return true;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      Elem x = trail_.back();
      trail_.pop_back();
      used_[img_[x]] = 0;
      img_[x] = -1;
    }
  }

  bool extend(Elem g, Elem y) {
    size_t old = trail_.size();
    gens_.push_back(g);
    gimg_.push_back(y);
    const Group& a = s_.domain;
    const Group& b = s_.codomain;
    size_t j = gens_.size() - 1;
    for (size_t i = 0; i < old; ++i) {
      Elem x = trail_[i];
      if (!put(a.mul(x, g), b.mul(img_[x], y))) return false;
    }
    for (size_t i = old; i < trail_.size(); ++i) {
      Elem x = trail_[i];
      for (size_t t = 0; t <= j; ++t)
        if (!put(a.mul(x, gens_[t]), b.mul(img_[x], gimg_[t]))) return false;
    }
    return true;
  }

  bool put(Elem z, Elem w) {
    if (img_[z] >= 0) return img_[z] == w;
    return assign(z, w);
  }

  Elem next_generator() const {
    for (Elem x : order_hint_)
      if (img_[x] < 0) return x;
    for (Elem x = 0; x < n_; ++x)
      if (img_[x] < 0) return x;
    return -1;
  }

  bool recurse() {
    Elem g = next_generator();
    if (g < 0) return visit_(img_);
    int og = s_.domain.element_order(g);
    auto candidates = [&](auto&& body) {
      if (forced_[g] >= 0) return body(forced_[g]);
      for (Elem y = 0; y < m_; ++y) {
        int oy = s_.codomain.element_order(y);
        if (s_.injective ? oy != og : og % oy != 0) continue;
        if (!body(y)) return false;
      }
      return true;
    };
    return candidates([&](Elem y) {
      size_t mark = trail_.size();
      bool go = true;
      if (extend(g, y)) go = recurse();
      undo(mark);
      gens_.pop_back();
      gimg_.pop_back();
      return go;
    });
  }

  const HomSearch& s_;
  const std::function<bool(const std::vector<Elem>&)>& visit_;
  int n_, m_;
  std::vector<Elem> img_, forced_, trail_, gens_, gimg_, order_hint_;
  std::vector<char> used_;
  bool conflict_ = false;
};

}  // namespace

void enumerate_homs(const HomSearch& s, const std::function<bool(const std::vector<Elem>&)>& visit) {
  HomSearcher(s, visit).run();
}

std::optional<Hom> find_hom(const HomSearch& s) {
  std::optional<Hom> out;
  enumerate_homs(s, [&](const std::vector<Elem>& img) {
    out = Hom::make(s.domain, s.codomain, img);
    return false;
  });
  return out;
}

std::vector<Hom> all_homs(const Group& a, const Group& b) {
  std::vector<Hom> out;
  HomSearch s{a, b, {}, nullptr, false};
  enumerate_homs(s, [&](const std::vector<Elem>& img) {
    out.push_back(Hom::make(a, b, img));
    return true;
  });
  return out;
}

std::optional<Hom> isomorphism_search(const Group& g, const Group& h,
                                      const std::vector<std::pair<Elem, Elem>>& constraints) {
  if (g.order() != h.order() || g.is_abelian() != h.is_abelian()) return std::nullopt;
  if (g.order_profile() != h.order_profile()) return std::nullopt;
  if (g.center().size() != h.center().size()) return std::nullopt;
  HomSearch s{g, h, constraints, nullptr, true};
  return find_hom(s);
}

std::vector<Hom> automorphisms(const Group& g) {
  std::vector<Hom> out;
  HomSearch s{g, g, {}, nullptr, true};
  enumerate_homs(s, [&](const std::vector<Elem>& img) {
    out.push_back(Hom::make(g, g, img));
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

Elem AbelianDecomposition::element(const std::vector<long long>& c) const {
  Elem x = 0;
  for (size_t j = 0; j < gens.size(); ++j) x = group.mul(x, group.pow(gens[j], c[j]));
  return x;
}

AbelianDecomposition decompose_abelian(const Group& a) {
  if (!a.is_abelian()) fail(Errc::NotAbelian, "cyclic decomposition needs an abelian group");
  const std::vector<Elem>& gens = a.generators();
  int k = static_cast<int>(gens.size());
  int n = a.order();
  std::vector<std::vector<long long>> co(n);
  std::vector<char> in(n, 0);
  std::vector<Elem> members{0};
  co[0].assign(k, 0);
  in[0] = 1;
  linalg::Matrix rel;
  long long expo = 1;
  for (int j = 0; j < k; ++j) {
    Elem g = gens[j];
    expo = linalg::lcm(expo, a.element_order(g));
    Elem p = g;
    long long t = 1;
    while (!in[p]) {
      p = a.mul(p, g);
      ++t;
    }
    std::vector<linalg::Int> row(k, 0);
    for (int i = 0; i < k; ++i) row[i] = -co[p][i];
    row[j] += t;
    rel.push_back(row);
    size_t base = members.size();
    for (size_t i = 0; i < base; ++i) {
      Elem x = members[i];
      Elem y = x;
      for (long long u = 1; u < t; ++u) {
        y = a.mul(y, g);
        co[y] = co[x];
        co[y][j] = u;
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  AbelianDecomposition out;
  out.group = a;
  if (k == 0) {
    out.coords.assign(1, {});
    return out;
  }
  auto dz = linalg::diagonalize(rel, expo, k, true);
  for (int i = 0; i < k; ++i) {
    long long o = linalg::gcd(dz.diag[i], expo);
    if (o == 0) o = expo;
    if (o == 1) continue;
    Elem h = 0;
    for (int j = 0; j < k; ++j) h = a.mul(h, a.pow(gens[j], dz.vinv[i][j]));
    out.orders.push_back(o);
    out.gens.push_back(h);
  }
  out.coords.assign(n, {});
  std::vector<long long> c(out.orders.size(), 0);
  std::vector<char> got(n, 0);
  int filled = 0;
  for (;;) {
    Elem x = out.element(c);
    if (!got[x]) {
      got[x] = 1;
      out.coords[x] = c;
      ++filled;
    }
    size_t i = 0;
    while (i < c.size() && ++c[i] == out.orders[i]) c[i++] = 0;
    if (i == c.size()) break;
  }
  if (filled != n) fail(Errc::PostconditionFailed, "cyclic decomposition does not cover the group");
  return out;
}

std::vector<long long> abelian_invariants(const Group& a) {
  AbelianDecomposition d = decompose_abelian(a);
  std::vector<linalg::Int> o(d.orders.begin(), d.orders.end());
  auto f = linalg::invariant_factors(o);
  return {f.begin(), f.end()};
}

}  // namespace bfly
