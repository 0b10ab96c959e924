#include <bfly/extension.hpp>

#include <string>

namespace bfly {

Extension Extension::make(const Hom& incl, const Hom& proj) {
  if (incl.codomain() != proj.domain()) fail(Errc::NotAnExtension, "incl and proj do not meet in one group");
  if (!incl.injective()) fail(Errc::NotAnExtension, "incl is not injective");
  if (!proj.surjective()) fail(Errc::NotAnExtension, "proj is not surjective");
  if (incl.image() != proj.kernel()) fail(Errc::NotAnExtension, "Ker proj != Im incl");
  return {incl.domain(), incl.codomain(), proj.codomain(), incl, proj};
}

std::vector<Elem> Extension::incl_inverse() const {
  std::vector<Elem> inv(e.order(), -1);
  for (Elem a = 0; a < n.order(); ++a) inv[incl(a)] = a;
  return inv;
}

std::vector<Elem> Extension::min_section() const {
  std::vector<Elem> s(gamma.order(), -1);
  for (Elem x = 0; x < e.order(); ++x)
    if (s[proj(x)] < 0) s[proj(x)] = x;
  return s;
}

RightAction conjugation_on_kernel(const Extension& ext) {
  std::vector<Elem> back = ext.incl_inverse();
  int ne = ext.e.order(), nn = ext.n.order();
  std::vector<Elem> flat(static_cast<size_t>(nn) * ne);
  for (Elem a = 0; a < nn; ++a)
    for (Elem x = 0; x < ne; ++x) {
      Elem y = back[ext.e.conj(ext.incl(a), x)];
      if (y < 0) fail(Errc::NotNormal, "image of incl is not normal");
      flat[static_cast<size_t>(a) * ne + x] = y;
    }
  return RightAction::from_flat(ext.e, ext.n, std::move(flat));
}

}  // namespace bfly
