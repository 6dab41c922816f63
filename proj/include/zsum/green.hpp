#ifndef ZSUM_GREEN_HPP_
#define ZSUM_GREEN_HPP_

#include <vector>

#include "zsum/abelian.hpp"
#include "zsum/semigroup.hpp"

namespace zsum {

// Partition of S^0 into Green's H-classes (equal principal ideals) with the
// strict-containment order on the distinct ideals.
struct HClassDecomposition {
  std::vector<int> class_of;               // element of S^0 -> class id
  std::vector<std::vector<int>> classes;   // class id -> sorted members
  std::vector<ElemSet> class_ideal;        // class id -> shared ideal
  // above[u] lists every class whose ideal strictly contains u's.
  std::vector<std::vector<int>> above;
};

// (a) = {a+c : c in S^0}, as a subset of S^0. For a in the base semigroup
// the result never contains an adjoined identity.
ElemSet principal_ideal(const AdjoinedSemigroup& s0, ElementId a);
ElemSet principal_ideal(const Semigroup& s, ElementId a);

HClassDecomposition h_classes(const AdjoinedSemigroup& s0);
// Decomposition restricted to the base elements of S (the class of an
// adjoined identity is dropped; it is always a singleton).
HClassDecomposition h_classes(const Semigroup& s);

// Longest strictly ascending chain of principal ideals of S^0 above (a).
int psi(const AdjoinedSemigroup& s0, ElementId a);
int psi(const Semigroup& s, ElementId a);

// St(A) = {c in S^0 : c + x in A for all x in A}. Computed in S^0, so it
// always contains the identity. Throws EmptySet.
std::vector<ElementId> stabilizer(const AdjoinedSemigroup& s0,
                                  const std::vector<ElementId>& a);
std::vector<ElementId> stabilizer(const Semigroup& s,
                                  const std::vector<ElementId>& a);

// The Schutzenberger group of H_a: the distinct translations x -> c+x of
// H_a for c in St(H_a), acting simply transitively on H_a.
struct SchutzGroup {
  std::vector<ElementId> h_class;          // sorted members of H_a
  std::vector<std::vector<int>> perms;     // perm p: h_class[i] -> h_class[p[i]]
  AbelianGroup group;                      // structure on perm indices
  std::vector<int> rho;                    // element of S^0 -> perm index, or -1
                                           // outside St(H_a)
};

// Builds gamma_c for each stabilizer element, deduplicates, and checks the
// group axioms, commutativity, simple transitivity and the homomorphism law.
// Throws InternalInvariantViolation if any check fails.
SchutzGroup schutzenberger(const AdjoinedSemigroup& s0, ElementId a);
SchutzGroup schutzenberger(const Semigroup& s, ElementId a);

// True iff (a+a) and a generate the same principal ideal.
bool is_h_idempotent(const Semigroup& s, ElementId a);

}  // namespace zsum

#endif  // ZSUM_GREEN_HPP_
