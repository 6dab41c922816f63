#ifndef ZSUM_RING_HPP_
#define ZSUM_RING_HPP_

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "zsum/abelian.hpp"
#include "zsum/semigroup.hpp"

namespace zsum {

// A finite commutative unitary ring as dense addition and multiplication
// tables. Validation checks the additive group, the multiplicative
// commutative monoid, and distributivity.
class FiniteRing {
 public:
  static FiniteRing from_tables(const std::vector<std::vector<int>>& add,
                                const std::vector<std::vector<int>>& mul,
                                std::vector<std::string> labels = {});
  // Z/n1 x ... x Z/nr with little-endian mixed-radix element encoding.
  static FiniteRing zmod_product(const std::vector<int>& moduli);

  static FiniteRing from_json(const nlohmann::json& j);

  int size() const { return n_; }
  ElementId add(ElementId i, ElementId j) const { return add_[i * n_ + j]; }
  ElementId mul(ElementId i, ElementId j) const { return mul_[i * n_ + j]; }
  ElementId neg(ElementId i) const { return neg_[i]; }
  ElementId zero() const { return zero_; }
  ElementId one() const { return one_; }
  const std::string& label(ElementId i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool is_unit(ElementId a) const;

 private:
  FiniteRing() = default;
  int n_ = 0;
  std::vector<int> add_, mul_, neg_;
  int zero_ = 0, one_ = 0;
  std::vector<std::string> labels_;
};

struct Ideal {
  ElemSet elements;
};

// The multiplication table of R as a commutative monoid with zero.
Semigroup mult_semigroup(const FiniteRing& r);

// Smallest ideal containing gens: additive closure of R*gens.
Ideal ideal_generated(const FiniteRing& r, const std::vector<ElementId>& gens);
Ideal principal_ring_ideal(const FiniteRing& r, ElementId a);
Ideal annihilator(const FiniteRing& r, ElementId a);
bool is_ideal(const FiniteRing& r, const Ideal& k);

struct QuotientRing {
  FiniteRing ring;
  std::vector<int> projection;  // element of R -> element of R/I
};

// R/I with coset representatives ordered by smallest member. Throws
// NotAnIdeal.
QuotientRing quotient_ring(const FiniteRing& r, const Ideal& i);

AbelianGroup unit_group(const FiniteRing& r);

// Every ideal principal; decided by the pair-generation criterion, which
// suffices in a finite ring by induction on generating sets.
bool is_pir(const FiniteRing& r);

// Least n with K^n = K^{n+1}, K^0 = R.
int ideal_index(const FiniteRing& r, const Ideal& k);
// Largest t in [0, ideal_index(K)] with c in K^t.
int zeta(const FiniteRing& r, const Ideal& k, ElementId c);

// Generators of the distinct maximal proper principal ideals, one per
// ideal, smallest element index first.
std::vector<ElementId> maximal_principal_generators(const FiniteRing& r);

struct PirFactorization {
  std::vector<ElementId> generators;  // a_1..a_r
  std::vector<int> exponents;         // m_i = zeta(a_i : b)
  ElementId unit;                     // b = prod a_i^{m_i} * unit
};

// Factorization over the maximal principal ideals of a finite PIR.
// Throws NotPIR.
PirFactorization factorize_pir(const FiniteRing& r, ElementId b);

// Longest strict chain of principal ring ideals above (a).
int psi_ring(const FiniteRing& r, ElementId a);

// Psi(a) + D(U(R/Ann(a))) - 1 for a non-unit of a finite PIR.
// Throws NotPIR / UnitElement.
int theorem_1_3_value(const FiniteRing& r, ElementId a);

// Sum of Omega(gcd(a_i, n_i)) + D(U(prod Z/(n_i/t_i))) - 1 over a product
// of residue class rings. Throws UnitElement.
int theorem_e_value(const std::vector<int>& moduli,
                    const std::vector<int>& components);

// Invariant factors of Gamma(H_a) equal those of U(R/Ann(a)); for a PIR
// additionally checks that every Schutzenberger permutation has a unit
// preimage under rho_a.
bool gamma_unit_iso_check(const FiniteRing& r, ElementId a);

// The extremal irreducible sequence of length Psi(a) + D(U(R_a)) - 1 with
// product a, for a non-unit of a finite PIR.
SequenceMS extremal_sequence_pir(const FiniteRing& r, ElementId a);

int omega(int t);  // prime factors with multiplicity

}  // namespace zsum

#endif  // ZSUM_RING_HPP_
