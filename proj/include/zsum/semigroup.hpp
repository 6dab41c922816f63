#ifndef ZSUM_SEMIGROUP_HPP_
#define ZSUM_SEMIGROUP_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "zsum/elemset.hpp"
#include "zsum/errors.hpp"

namespace zsum {

using ElementId = int;

// Hard cap on table size; the O(n^3) associativity scan and the bitset
// sum-set machinery are meant for desk-scale inputs.
inline constexpr int kMaxSemigroupSize = 4096;

// A finite commutative semigroup as a dense row-major operation table.
// Immutable after validation; identity/zero are auto-detected and never
// set by callers.
class Semigroup {
 public:
  // Validates closure, commutativity and associativity; detects identity
  // and zero. Throws NotClosed / NotCommutative / NotAssociative.
  static Semigroup validate(const std::vector<std::vector<int>>& table,
                            std::vector<std::string> labels = {});

  int size() const { return n_; }
  ElementId op(ElementId i, ElementId j) const { return table_[i * n_ + j]; }

  const std::string& label(ElementId i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElementId> element_by_label(const std::string& s) const;

  std::optional<ElementId> identity() const { return identity_; }
  std::optional<ElementId> zero() const { return zero_; }
  bool is_monoid() const { return identity_.has_value(); }

  // Group of units U(S). Throws NotAMonoid.
  std::vector<ElementId> units() const;

  nlohmann::json to_json() const;
  static Semigroup from_json(const nlohmann::json& j);

 private:
  Semigroup(int n, std::vector<int> table, std::vector<std::string> labels);

  int n_;
  std::vector<int> table_;  // row-major n*n
  std::vector<std::string> labels_;
  std::optional<ElementId> identity_;
  std::optional<ElementId> zero_;
};

// A finite multiset of semigroup elements, an unordered "sequence".
// Canonical representation: entries strictly increasing by element index,
// multiplicities positive. Structural equality is multiset equality.
class SequenceMS {
 public:
  SequenceMS() = default;
  static SequenceMS from_terms(std::vector<ElementId> terms);

  void add(ElementId e, int mult = 1);
  void remove_one(ElementId e);

  int length() const { return length_; }
  bool empty() const { return length_ == 0; }
  int multiplicity(ElementId e) const;

  const std::vector<std::pair<ElementId, int>>& entries() const {
    return entries_;
  }
  std::vector<ElementId> expand() const;

  bool operator==(const SequenceMS& o) const { return entries_ == o.entries_; }
  bool operator!=(const SequenceMS& o) const { return !(*this == o); }
  // Lexicographic order on the sorted expansion; used for deterministic
  // tie-breaking among equal-length witnesses.
  bool operator<(const SequenceMS& o) const;

  std::string to_string(const Semigroup& s) const;

 private:
  std::vector<std::pair<ElementId, int>> entries_;
  int length_ = 0;
};

// S^0: the semigroup with an identity adjoined only when necessary.
// Base elements keep their indices; a fresh identity, if any, is last.
class AdjoinedSemigroup {
 public:
  explicit AdjoinedSemigroup(const Semigroup& base);

  const Semigroup& monoid() const { return monoid_; }
  bool adjoined() const { return adjoined_; }
  ElementId identity() const { return identity_; }
  int base_size() const { return base_size_; }

 private:
  Semigroup monoid_;
  bool adjoined_;
  ElementId identity_;
  int base_size_;
};

inline AdjoinedSemigroup adjoin_identity(const Semigroup& s) {
  return AdjoinedSemigroup(s);
}

// Sum of all terms of T; sigma(empty) is the identity when S is a monoid,
// otherwise EmptyInNonMonoid.
ElementId sigma(const Semigroup& s, const SequenceMS& t);

}  // namespace zsum

#endif  // ZSUM_SEMIGROUP_HPP_
