#ifndef ZSUM_FAMILIES_HPP_
#define ZSUM_FAMILIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "zsum/ring.hpp"
#include "zsum/semigroup.hpp"

namespace zsum {

// S1(n, r): r*n elements m*x_i (m in [1,n], i in [1,r]) with
//   m*x_i + l*x_j = l*x_j        for i < j,
//   m*x_i + l*x_i = |m+l|_n*x_i  (wrapped to [1,n]).
// No identity when r >= 2; S1(n, 1) is Z_n. Throws OddN for odd n.
Semigroup build_s1(int n, int r);
ElementId s1_element(int n, int r, int m, int i);

// S2(m): 2m+1 elements k*x0 (k in [1,m]), x_1..x_m, and an absorbing inf:
//   k*x0 + l*x0 = |k+l|_m*x0,  k*x0 + x_j = x_{|j+k|_m},  x_i + x_j = inf.
// m*x0 is the identity. The defining relation list writes the x_i + x_j
// rule with an undefined range bound r; we read it as m, matching the
// generator set x_1..x_m. Throws MTooSmall for m <= 2.
Semigroup build_s2(int m);
ElementId s2_x(int m, int j);      // x_j
ElementId s2_x0_pow(int m, int k); // k*x0
ElementId s2_inf(int m);

// The additive group Z_n.
Semigroup build_zn(int n);

// F2[u,v]/(u,v)^2: the smallest non-principal-ideal commutative unitary
// ring (8 elements; the ideal (u,v) is not principal).
FiniteRing f2uv();

struct CorpusEntry {
  std::string name;
  Semigroup semigroup;
  std::string provenance;
  // (element, expected exact D_a) pairs with known values
  std::vector<std::pair<ElementId, int>> expected_da;
  std::optional<FiniteRing> ring;  // set for multiplicative-semigroup entries
};

// Deterministic verification corpus: cyclic groups, S1/S2 instances,
// multiplicative semigroups of small rings, and small abelian groups.
std::vector<CorpusEntry> corpus();

struct FamilySpec {
  Semigroup semigroup;
  std::optional<FiniteRing> ring;
};

// Parses CLI family specs: "s1:n=4,r=2", "s2:m=3", "zn:n=6", "zmod:12",
// "zmodprod:2,4".
FamilySpec parse_family_spec(const std::string& spec);

}  // namespace zsum

#endif  // ZSUM_FAMILIES_HPP_
