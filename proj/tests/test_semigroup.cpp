#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "zsum/families.hpp"
#include "zsum/ring.hpp"
#include "zsum/semigroup.hpp"

using namespace zsum;

namespace {

Semigroup zmod_mult(int n) {
  return mult_semigroup(FiniteRing::zmod_product({n}));
}

}  // namespace

TEST_CASE("one-element table is a monoid with zero") {
  Semigroup s = Semigroup::validate({{0}});
  REQUIRE(s.size() == 1);
  CHECK(s.identity() == 0);
  CHECK(s.zero() == 0);
}

TEST_CASE("Z3 addition has identity and no zero") {
  Semigroup s = build_zn(3);
  CHECK(s.identity() == 0);
  CHECK_FALSE(s.zero().has_value());
}

TEST_CASE("validation rejects bad tables") {
  CHECK_THROWS_AS(Semigroup::validate({{0, 0}, {1, 1}}), NotCommutative);
  CHECK_THROWS_AS(Semigroup::validate({{2, 0}, {0, 0}}), NotClosed);
  // op(i,j) = j on two elements is associative but not commutative; force a
  // commutative non-associative table instead: midpoint-like operation.
  CHECK_THROWS_AS(Semigroup::validate({{0, 0, 1}, {0, 1, 2}, {1, 2, 2}}),
                  NotAssociative);
  CHECK_THROWS_AS(Semigroup::validate({}), PreconditionViolated);
}

TEST_CASE("associativity and commutativity hold on validated tables") {
  for (const Semigroup& s : {zmod_mult(8), build_s2(3), build_s1(4, 2)}) {
    for (int i = 0; i < s.size(); ++i) {
      for (int j = 0; j < s.size(); ++j) {
        CHECK(s.op(i, j) == s.op(j, i));
        for (int k = 0; k < s.size(); ++k)
          CHECK(s.op(s.op(i, j), k) == s.op(i, s.op(j, k)));
      }
    }
  }
}

TEST_CASE("adjoin_identity leaves monoids alone") {
  Semigroup s = zmod_mult(4);
  AdjoinedSemigroup s0(s);
  CHECK_FALSE(s0.adjoined());
  CHECK(s0.monoid().size() == 4);
  CHECK(s0.identity() == 1);
}

TEST_CASE("adjoin_identity grows identity-free semigroups by one") {
  // constant semigroup: op(x, y) = 1 for all x, y; has no identity
  Semigroup s = Semigroup::validate({{1, 1}, {1, 1}});
  CHECK_FALSE(s.identity().has_value());
  AdjoinedSemigroup s0(s);
  CHECK(s0.adjoined());
  CHECK(s0.monoid().size() == s.size() + 1);
  CHECK(s0.identity() == s.size());
  for (int x = 0; x < s0.monoid().size(); ++x)
    CHECK(s0.monoid().op(s0.identity(), x) == x);
  // base elements keep their indices and products
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.size(); ++j) CHECK(s0.monoid().op(i, j) == s.op(i, j));
}

TEST_CASE("adjoin_identity on a self-identity singleton is a no-op") {
  Semigroup s = Semigroup::validate({{0}});
  AdjoinedSemigroup s0(s);
  CHECK_FALSE(s0.adjoined());
  CHECK(s0.monoid().size() == 1);
}

TEST_CASE("adjoin_identity is idempotent") {
  Semigroup s = Semigroup::validate({{1, 1}, {1, 1}});
  AdjoinedSemigroup once(s);
  AdjoinedSemigroup twice(once.monoid());
  CHECK_FALSE(twice.adjoined());
  CHECK(twice.monoid().size() == once.monoid().size());
  for (int i = 0; i < once.monoid().size(); ++i)
    for (int j = 0; j < once.monoid().size(); ++j)
      CHECK(twice.monoid().op(i, j) == once.monoid().op(i, j));
}

TEST_CASE("sigma folds the operation over the multiset") {
  Semigroup z6 = build_zn(6);
  SequenceMS t = SequenceMS::from_terms({1, 1, 1});
  CHECK(sigma(z6, t) == 3);

  Semigroup s8 = zmod_mult(8);
  CHECK(sigma(s8, SequenceMS::from_terms({2, 2})) == 4);
}

TEST_CASE("sigma of the empty sequence") {
  Semigroup z6 = build_zn(6);
  CHECK(sigma(z6, SequenceMS{}) == 0);
  Semigroup c = Semigroup::validate({{1, 1}, {1, 1}});
  CHECK_THROWS_AS(sigma(c, SequenceMS{}), EmptyInNonMonoid);
}

TEST_CASE("sigma is invariant under term order") {
  std::mt19937 rng(7);
  Semigroup s = zmod_mult(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ElementId> terms;
    const int len = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i)
      terms.push_back(static_cast<int>(rng() % s.size()));
    SequenceMS t = SequenceMS::from_terms(terms);
    ElementId expected = sigma(s, t);
    std::shuffle(terms.begin(), terms.end(), rng);
    ElementId acc = terms[0];
    for (std::size_t i = 1; i < terms.size(); ++i) acc = s.op(acc, terms[i]);
    CHECK(acc == expected);
  }
}

TEST_CASE("units of multiplicative semigroups") {
  CHECK(zmod_mult(8).units() == std::vector<ElementId>{1, 3, 5, 7});
  CHECK(zmod_mult(6).units() == std::vector<ElementId>{1, 5});
  Semigroup z5 = build_zn(5);
  CHECK(z5.units().size() == 5);
  CHECK_THROWS_AS(Semigroup::validate({{1, 1}, {1, 1}}).units(), NotAMonoid);
}

TEST_CASE("units are closed under op and inverse") {
  for (int n : {6, 8, 12}) {
    Semigroup s = zmod_mult(n);
    const auto units = s.units();
    ElemSet in(s.size());
    for (ElementId u : units) in.set(u);
    for (ElementId u : units) {
      bool has_inverse = false;
      for (ElementId v : units) {
        CHECK(in.test(s.op(u, v)));
        if (s.op(u, v) == *s.identity()) has_inverse = true;
      }
      CHECK(has_inverse);
    }
  }
}

TEST_CASE("SequenceMS canonical form and ordering") {
  SequenceMS a = SequenceMS::from_terms({3, 1, 1});
  CHECK(a.length() == 3);
  CHECK(a.multiplicity(1) == 2);
  CHECK(a.entries() ==
        std::vector<std::pair<ElementId, int>>{{1, 2}, {3, 1}});
  SequenceMS b;
  b.add(1);
  b.add(3);
  b.add(1);
  CHECK(a == b);
  b.remove_one(3);
  CHECK(a != b);
  CHECK(b < a);  // [1,1] < [1,1,3]
  CHECK(SequenceMS::from_terms({1, 2}) < SequenceMS::from_terms({1, 3}));
  CHECK_THROWS_AS(b.remove_one(5), PreconditionViolated);
}

TEST_CASE("JSON round trip preserves table and labels") {
  Semigroup s = build_s2(3);
  nlohmann::json j = s.to_json();
  CHECK(j["n"] == 7);
  Semigroup back = Semigroup::from_json(j);
  REQUIRE(back.size() == s.size());
  for (int i = 0; i < s.size(); ++i) {
    CHECK(back.label(i) == s.label(i));
    for (int k = 0; k < s.size(); ++k) CHECK(back.op(i, k) == s.op(i, k));
  }
  CHECK(back.identity() == s.identity());
}

TEST_CASE("JSON load tolerates missing labels and extra meta") {
  nlohmann::json j = {
      {"n", 2},
      {"table", {{0, 1}, {1, 0}}},
      {"meta", {{"note", "Z2"}}},
  };
  Semigroup s = Semigroup::from_json(j);
  CHECK(s.label(1) == "1");
  CHECK(s.identity() == 0);
  j["n"] = 3;
  CHECK_THROWS_AS(Semigroup::from_json(j), PreconditionViolated);
}

TEST_CASE("element lookup by label") {
  Semigroup s = build_s2(3);
  CHECK(s.element_by_label("inf") == s2_inf(3));
  CHECK(s.element_by_label("x2") == s2_x(3, 2));
  CHECK_FALSE(s.element_by_label("nope").has_value());
}
