#pragma once

#include <bfly/group.hpp>

#include <string>

// Small named groups used by tests, examples and the CLI.
namespace bfly::catalog {

Group cyclic(int n);
Group klein4();
Group symmetric(int n);  // S_n on n points, n <= 5
Group dihedral(int n);   // order 2n
Group quaternion8();
Group product(const Group& a, const Group& b);

// Homomorphism Z/n -> Z/m sending 1 to k.
Hom cyclic_map(int n, int m, int k);

// "1", "Z6", "Z2 x Z4", "S3", "D4", "Q8", "A4", or "order n" when nothing matches.
std::string describe(const Group& g);

}  // namespace bfly::catalog
