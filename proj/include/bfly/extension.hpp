#pragma once

#include <bfly/group.hpp>

namespace bfly {

// 1 -> N -> E -> gamma -> 1
struct Extension {
  Group n, e, gamma;
  Hom incl;  // N -> E
  Hom proj;  // E -> gamma

  static Extension make(const Hom& incl, const Hom& proj);
  // Inverse of incl on its image, -1 elsewhere.
  std::vector<Elem> incl_inverse() const;
  // Minimal element of each fiber of proj.
  std::vector<Elem> min_section() const;
};

// Conjugation action of E on N through incl: a^x = incl^-1(x^-1 incl(a) x).
// Requires incl(N) normal in E.
RightAction conjugation_on_kernel(const Extension& ext);

}  // namespace bfly
