#pragma once

#include <cstdint>
#include <vector>

// Integer linear algebra over Z or Z/m: diagonalization by unimodular row and
// column operations, tracking the column transform and its inverse.
namespace bfly::linalg {

using Int = std::int64_t;
using Matrix = std::vector<std::vector<Int>>;

struct Diagonalization {
  // U * A * V = D for some invertible U (not tracked).
  std::vector<Int> diag;  // length min(rows, cols); entries reduced mod m when m > 0
  Matrix v;               // cols x cols
  Matrix vinv;            // inverse of v
};

// modulus == 0 works over Z. When track is false, v and vinv stay empty.
Diagonalization diagonalize(Matrix a, Int modulus, int cols, bool track = true);

Int mod(Int x, Int m);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

// Invariant factors d1 | d2 | ... (all > 1) of the direct sum of Z/c over the given c.
std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders);

}  // namespace bfly::linalg
