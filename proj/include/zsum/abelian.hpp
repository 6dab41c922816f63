#ifndef ZSUM_ABELIAN_HPP_
#define ZSUM_ABELIAN_HPP_

#include <optional>
#include <vector>

#include "zsum/semigroup.hpp"

namespace zsum {

// A finite abelian group: its operation table together with the canonical
// invariant-factor list d1 | d2 | ... | dk (empty for the trivial group).
struct AbelianGroup {
  Semigroup table;
  std::vector<int> inv_factors;

  int order() const { return table.size(); }
  ElementId identity() const { return *table.identity(); }
  ElementId inverse(ElementId a) const;
  int element_order(ElementId a) const;
};

// Wraps a semigroup table as an abelian group, computing invariant factors.
// Throws NotAGroup if some element has no inverse or there is no identity.
AbelianGroup group_from_table(const Semigroup& table);

// Invariant factors by element-order census: for each prime p the p-group
// type is read off the counts of solutions of p^k * x = 0.
std::vector<int> invariant_factors(const Semigroup& table);

struct DavenportResult {
  int value = 0;
  SequenceMS witness;  // zero-sum-free of length value-1 (Davenport), or an
                       // irreducible sequence of length value (relative)
};

// Exhaustive D(G): 1 + the longest zero-sum-free multiset. Witness is the
// lexicographically smallest longest zero-sum-free multiset.
DavenportResult davenport_bruteforce(const AbelianGroup& g,
                                     long long node_cap = 200000000);

struct FormulaValue {
  int value = 0;
  bool exact = false;  // rank >= 3 values are lower bounds only
};

// Classical closed forms: exact for rank <= 2, 1+sum(di-1) as a lower
// bound otherwise.
FormulaValue davenport_formula(const std::vector<int>& inv_factors);

// Largest length of an irreducible multiset with sum g; 0 when g is the
// identity. In a group, irreducible with nonzero sum == zero-sum free.
DavenportResult relative_davenport_group(const AbelianGroup& g, ElementId target,
                                         long long node_cap = 200000000);

// All minimal zero-sum multisets of the maximal length D(G), sorted.
std::vector<SequenceMS> max_minimal_zero_sum(const AbelianGroup& g,
                                             long long node_cap = 200000000);

// Irreducible multiset with sum g and length >= ceil(D(G)/2), built from a
// minimal zero-sum sequence of length D(G): either the sub-multiset summing
// to g, or the elementwise negation of its complement.
SequenceMS skalba_construction(const AbelianGroup& g, ElementId target);

// Every zero-sum-free multiset of length >= min_length, in canonical order.
std::vector<SequenceMS> enumerate_zero_sum_free(const AbelianGroup& g,
                                                int min_length = 1,
                                                long long node_cap = 200000000);

// For a zero-sum-free T over Z_n with |T| > n/2, finds b coprime to n with
// sum of least positive residues of b*c below n. Returns nullopt when no
// witness exists. Throws PreconditionViolated on bad input.
std::optional<int> savchev_chen_witness(int n, const SequenceMS& t);

}  // namespace zsum

#endif  // ZSUM_ABELIAN_HPP_
