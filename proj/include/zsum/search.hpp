#ifndef ZSUM_SEARCH_HPP_
#define ZSUM_SEARCH_HPP_

#include <utility>
#include <vector>

#include "zsum/green.hpp"
#include "zsum/semigroup.hpp"

namespace zsum {

// Incrementally maintained sub-multiset sums of a multiset T:
//   nonempty: sums of all nonempty sub-multisets (including T itself)
//   proper:   sums of all proper sub-multisets; once T is nonempty this
//             contains the identity in a monoid (the empty sub-multiset).
struct ReachableSums {
  ElemSet nonempty;
  ElemSet proper;
};

ReachableSums initial_sums(const Semigroup& s);
ReachableSums extend_sums(const Semigroup& s, const ReachableSums& r,
                          ElementId x);

// True iff no proper sub-multiset of t has the same sum. In a monoid the
// empty sequence counts as a proper sub-multiset. Throws EmptySequence.
bool is_irreducible(const Semigroup& s, const SequenceMS& t);

struct SearchOptions {
  long long node_cap = 200000000;
  // Re-checks every maximal proper sub-multiset of each enumerated
  // irreducible multiset against the irreducibility oracle.
  bool audit_hereditary = false;
  int jobs = 1;
};

struct ElementReport {
  ElementId element = 0;
  int h_class_size = 0;
  int psi = 0;
  std::vector<int> gamma_factors;
  bool eps_half = false;  // (a+a) H a
  int lower = 0;
  int upper = 0;
  int exact = 0;
  SequenceMS witness;
};

struct DavenportReport {
  std::vector<ElementReport> rows;  // one per element of S, ordered by index
  int global_d = 0;
  SequenceMS global_witness;
  int small_d = 0;
};

// Full per-element analysis: H-class data, the length bounds, and exact
// relative Davenport constants from a single exhaustive enumeration of
// irreducible multisets. The proven upper bound doubles as a termination
// assertion; exceeding it raises BoundViolation.
DavenportReport analyze(const Semigroup& s, const SearchOptions& opts = {});

// Exact D_a(S) with a lexicographically smallest longest witness; (0, empty)
// when a is the identity.
std::pair<int, SequenceMS> relative_davenport(const Semigroup& s, ElementId a,
                                              const SearchOptions& opts = {});

// D(S) = max_a D_a(S) + 1, with a longest irreducible multiset as witness.
std::pair<int, SequenceMS> global_davenport(const Semigroup& s,
                                            const SearchOptions& opts = {});

// d(S) = D(S) - 1.
int small_davenport(const Semigroup& s, const SearchOptions& opts = {});

// Smallest size of a sub-multiset of t (empty allowed in a monoid) with the
// same sum as t; independent shrink oracle for d(S).
int shortest_equal_sum_subsequence(const Semigroup& s, const SequenceMS& t);

}  // namespace zsum

#endif  // ZSUM_SEARCH_HPP_
