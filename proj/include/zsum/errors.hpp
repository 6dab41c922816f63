#ifndef ZSUM_ERRORS_HPP_
#define ZSUM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace zsum {

struct ZsumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Table validation failures. Witness indices identify the offending entry.
struct NotClosed : ZsumError {
  NotClosed(int i, int j, int value)
      : ZsumError("table entry op(" + std::to_string(i) + "," +
                  std::to_string(j) + ")=" + std::to_string(value) +
                  " is out of range"),
        i(i), j(j), value(value) {}
  int i, j, value;
};

struct NotCommutative : ZsumError {
  NotCommutative(int i, int j)
      : ZsumError("op(" + std::to_string(i) + "," + std::to_string(j) +
                  ") != op(" + std::to_string(j) + "," + std::to_string(i) +
                  ")"),
        i(i), j(j) {}
  int i, j;
};

struct NotAssociative : ZsumError {
  NotAssociative(int i, int j, int k)
      : ZsumError("associativity fails at (" + std::to_string(i) + "," +
                  std::to_string(j) + "," + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  int i, j, k;
};

struct NotAMonoid : ZsumError {
  NotAMonoid() : ZsumError("semigroup has no identity element") {}
};

struct EmptyInNonMonoid : ZsumError {
  EmptyInNonMonoid()
      : ZsumError("empty sequence has no sum in a semigroup without identity") {
  }
};

struct EmptySet : ZsumError {
  EmptySet() : ZsumError("set argument must be nonempty") {}
};

struct EmptySequence : ZsumError {
  EmptySequence() : ZsumError("sequence argument must be nonempty") {}
};

struct NotAGroup : ZsumError {
  explicit NotAGroup(const std::string& why)
      : ZsumError("table is not a group: " + why) {}
};

struct PreconditionViolated : ZsumError {
  explicit PreconditionViolated(const std::string& why) : ZsumError(why) {}
};

struct CapExceeded : ZsumError {
  explicit CapExceeded(const std::string& why) : ZsumError(why) {}
};

// Raised when an exhaustive search runs past its node budget. Carries the
// best lower bound found so far so partial results remain usable.
struct SearchCapExceeded : ZsumError {
  explicit SearchCapExceeded(long long best_lower)
      : ZsumError("search node cap exceeded (best lower bound " +
                  std::to_string(best_lower) + ")"),
        best_lower(best_lower) {}
  long long best_lower;
};

// An enumerated irreducible sequence exceeded its proven length bound.
// This signals an implementation bug, never a user error.
struct BoundViolation : ZsumError {
  explicit BoundViolation(const std::string& why) : ZsumError(why) {}
};

// A structural fact guaranteed by theory failed to hold on concrete data.
struct InternalInvariantViolation : ZsumError {
  explicit InternalInvariantViolation(const std::string& why)
      : ZsumError(why) {}
};

struct NotAnIdeal : ZsumError {
  explicit NotAnIdeal(const std::string& why) : ZsumError(why) {}
};

struct NotPIR : ZsumError {
  NotPIR() : ZsumError("ring is not a principal ideal ring") {}
};

struct UnitElement : ZsumError {
  UnitElement() : ZsumError("element is a unit; formula does not apply") {}
};

struct OddN : ZsumError {
  OddN() : ZsumError("family S1 requires an even n") {}
};

struct MTooSmall : ZsumError {
  MTooSmall() : ZsumError("family S2 requires m > 2") {}
};

}  // namespace zsum

#endif  // ZSUM_ERRORS_HPP_
