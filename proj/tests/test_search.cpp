#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "zsum/abelian.hpp"
#include "zsum/families.hpp"
#include "zsum/ring.hpp"
#include "zsum/search.hpp"

using namespace zsum;

namespace {

Semigroup zmod_mult(int n) {
  return mult_semigroup(FiniteRing::zmod_product({n}));
}

// From-scratch DP oracle for the reachable-sum bitsets.
ReachableSums naive_sums(const Semigroup& s, const SequenceMS& t) {
  // enumerate every sub-multiset by multiplicity vectors
  const auto& ent = t.entries();
  ReachableSums out{ElemSet(s.size()), ElemSet(s.size())};
  std::vector<int> take(ent.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ent.size()) {
      SequenceMS sub;
      int len = 0;
      for (std::size_t k = 0; k < ent.size(); ++k) {
        if (take[k] > 0) sub.add(ent[k].first, take[k]);
        len += take[k];
      }
      if (len == 0) {
        if (auto id = s.identity()) {
          if (t.length() > 0) out.proper.set(*id);
        }
        return;
      }
      const ElementId sum = sigma(s, sub);
      out.nonempty.set(sum);
      if (len < t.length()) out.proper.set(sum);
      return;
    }
    for (int c = 0; c <= ent[i].second; ++c) {
      take[i] = c;
      rec(i + 1);
    }
    take[i] = 0;
  };
  rec(0);
  return out;
}

// Naive irreducibility oracle: scan all proper sub-multisets.
bool naive_irreducible(const Semigroup& s, const SequenceMS& t) {
  ReachableSums r = naive_sums(s, t);
  return !r.proper.test(sigma(s, t));
}

ReachableSums incremental_sums(const Semigroup& s, const SequenceMS& t) {
  ReachableSums r = initial_sums(s);
  for (ElementId x : t.expand()) r = extend_sums(s, r, x);
  return r;
}

void check_all_multisets(const Semigroup& s, int max_len) {
  std::vector<ElementId> stack;
  std::function<void(int)> rec = [&](int lo) {
    if (!stack.empty()) {
      SequenceMS t = SequenceMS::from_terms(stack);
      CHECK(is_irreducible(s, t) == naive_irreducible(s, t));
    }
    if (static_cast<int>(stack.size()) == max_len) return;
    for (int x = lo; x < s.size(); ++x) {
      stack.push_back(x);
      rec(x);
      stack.pop_back();
    }
  };
  rec(0);
}

}  // namespace

TEST_CASE("extend_sums base cases") {
  Semigroup z4 = build_zn(4);
  ReachableSums r = initial_sums(z4);
  CHECK_FALSE(r.nonempty.any());
  CHECK_FALSE(r.proper.any());
  r = extend_sums(z4, r, 1);  // T = 1
  CHECK(r.nonempty.to_vector() == std::vector<ElementId>{1});
  CHECK(r.proper.to_vector() == std::vector<ElementId>{0});
  r = extend_sums(z4, r, 1);  // T = 1*1
  CHECK(r.nonempty.to_vector() == std::vector<ElementId>{1, 2});
  CHECK(r.proper.to_vector() == std::vector<ElementId>{0, 1});

  Semigroup s8 = zmod_mult(8);
  ReachableSums q = extend_sums(s8, extend_sums(s8, initial_sums(s8), 2), 2);
  CHECK(q.nonempty.to_vector() == std::vector<ElementId>{2, 4});
  CHECK(q.proper.to_vector() == std::vector<ElementId>{1, 2});
}

TEST_CASE("extend_sums matches the from-scratch oracle on random multisets") {
  std::mt19937 rng(99);
  for (const Semigroup& s : {zmod_mult(8), build_s2(3), build_s1(4, 2)}) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<ElementId> terms;
      const int len = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < len; ++i)
        terms.push_back(static_cast<int>(rng() % s.size()));
      SequenceMS t = SequenceMS::from_terms(terms);
      ReachableSums inc = incremental_sums(s, t);
      ReachableSums naive = naive_sums(s, t);
      CHECK(inc.nonempty == naive.nonempty);
      CHECK(inc.proper == naive.proper);
    }
  }
}

TEST_CASE("irreducibility basics") {
  Semigroup s8 = zmod_mult(8);
  CHECK(is_irreducible(s8, SequenceMS::from_terms({2, 2})));
  CHECK_FALSE(is_irreducible(s8, SequenceMS::from_terms({2, 5})));
  // product 1 (the identity) is always reducible in a monoid via the empty
  // subsequence
  CHECK_FALSE(is_irreducible(s8, SequenceMS::from_terms({3, 3})));
  CHECK_FALSE(is_irreducible(s8, SequenceMS::from_terms({1})));
  CHECK_THROWS_AS(is_irreducible(s8, SequenceMS{}), EmptySequence);
  // in a non-monoid a singleton is always irreducible
  Semigroup c = Semigroup::validate({{1, 1}, {1, 1}});
  for (int a = 0; a < c.size(); ++a)
    CHECK(is_irreducible(c, SequenceMS::from_terms({a})));
  // in a monoid exactly the identity singleton is reducible
  Semigroup s1 = build_s1(4, 2);
  REQUIRE(s1.identity().has_value());
  for (int a = 0; a < s1.size(); ++a)
    CHECK(is_irreducible(s1, SequenceMS::from_terms({a})) ==
          (a != *s1.identity()));
}

TEST_CASE("incremental engine equals naive oracle exhaustively to length 4") {
  check_all_multisets(zmod_mult(8), 4);
  check_all_multisets(build_s2(3), 4);
  check_all_multisets(build_s1(4, 2), 4);
}

TEST_CASE("incremental engine equals naive oracle on random longer multisets") {
  std::mt19937 rng(2024);
  const Semigroup semis[] = {zmod_mult(8), build_s2(3), build_s1(4, 2)};
  for (int trial = 0; trial < 10000; ++trial) {
    const Semigroup& s = semis[trial % 3];
    std::vector<ElementId> terms;
    const int len = 5 + static_cast<int>(rng() % 4);
    for (int i = 0; i < len; ++i)
      terms.push_back(static_cast<int>(rng() % s.size()));
    SequenceMS t = SequenceMS::from_terms(terms);
    CHECK(is_irreducible(s, t) == naive_irreducible(s, t));
  }
}

TEST_CASE("hereditary property exhaustively on short multisets") {
  for (const Semigroup& s : {zmod_mult(8), build_s2(3), build_s1(4, 2)}) {
    std::vector<ElementId> stack;
    std::function<void(int)> rec = [&](int lo) {
      if (stack.size() >= 2) {
        SequenceMS t = SequenceMS::from_terms(stack);
        if (is_irreducible(s, t)) {
          for (const auto& [e, mult] : t.entries()) {
            SequenceMS sub = t;
            sub.remove_one(e);
            CHECK(is_irreducible(s, sub));
          }
        }
      }
      if (stack.size() == 4) return;
      for (int x = lo; x < s.size(); ++x) {
        stack.push_back(x);
        rec(x);
        stack.pop_back();
      }
    };
    rec(0);
  }
}

TEST_CASE("analyze on Z/8 multiplicative") {
  DavenportReport rep = analyze(zmod_mult(8));
  const ElementReport& r4 = rep.rows[4];
  CHECK(r4.psi == 2);
  CHECK(r4.gamma_factors.empty());
  CHECK(r4.lower == 1);
  CHECK(r4.upper == 2);
  CHECK(r4.exact == 2);
  CHECK(r4.witness == SequenceMS::from_terms({2, 2}));
}

TEST_CASE("analyze flags epsilon=1/2 on S1 and epsilon=1 on S2") {
  DavenportReport s1 = analyze(build_s1(4, 2));
  const ElementReport& row = s1.rows[s1_element(4, 2, 2, 1)];
  CHECK(row.eps_half);
  CHECK(row.exact == 2);

  const int m = 3;
  DavenportReport s2 = analyze(build_s2(m));
  const ElementReport& xm = s2.rows[s2_x(m, m)];
  CHECK_FALSE(xm.eps_half);
  CHECK(xm.exact == m);
  CHECK(xm.gamma_factors == std::vector<int>{m});
}

TEST_CASE("relative/global/small davenport wrappers") {
  Semigroup s12 = zmod_mult(12);
  auto [v, w] = relative_davenport(s12, 2);
  CHECK(v == 2);
  CHECK(sigma(s12, w) == 2);
  CHECK(is_irreducible(s12, w));
  CHECK(relative_davenport(s12, 1).first == 0);  // identity convention

  Semigroup s4 = zmod_mult(4);
  auto [d, dw] = global_davenport(s4);
  CHECK(d == 3);
  CHECK(dw == SequenceMS::from_terms({2, 2}));
  CHECK(small_davenport(s4) == 2);

  Semigroup one = Semigroup::validate({{0}});
  CHECK(global_davenport(one).first == 1);
  CHECK(small_davenport(one) == 0);
}

TEST_CASE("relative davenport on groups agrees with the group oracle") {
  for (int n : {4, 5, 6, 7, 8}) {
    Semigroup zn = build_zn(n);
    AbelianGroup g = group_from_table(zn);
    DavenportReport rep = analyze(zn);
    for (int a = 1; a < n; ++a)
      CHECK(rep.rows[a].exact == relative_davenport_group(g, a).value);
  }
}

TEST_CASE("witness validity in analyze reports") {
  for (const Semigroup& s : {zmod_mult(12), build_s2(4), build_s1(6, 2)}) {
    DavenportReport rep = analyze(s);
    for (const ElementReport& row : rep.rows) {
      if (row.exact == 0) continue;
      CHECK(sigma(s, row.witness) == row.element);
      CHECK(row.witness.length() == row.exact);
      CHECK(is_irreducible(s, row.witness));
    }
    CHECK(rep.global_d == rep.small_d + 1);
  }
}

TEST_CASE("--jobs parallelism does not change any result") {
  for (const Semigroup& s : {zmod_mult(12), build_s2(4), build_s1(6, 2)}) {
    SearchOptions serial;
    SearchOptions parallel;
    parallel.jobs = 4;
    DavenportReport a = analyze(s, serial);
    DavenportReport b = analyze(s, parallel);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      CHECK(a.rows[i].exact == b.rows[i].exact);
      CHECK(a.rows[i].witness == b.rows[i].witness);
    }
    CHECK(a.global_d == b.global_d);
    CHECK(a.global_witness == b.global_witness);
  }
}

TEST_CASE("node cap raises SearchCapExceeded") {
  SearchOptions opts;
  opts.node_cap = 3;
  CHECK_THROWS_AS(analyze(zmod_mult(12), opts), SearchCapExceeded);
  SearchOptions par = opts;
  par.jobs = 3;
  CHECK_THROWS_AS(analyze(zmod_mult(12), par), SearchCapExceeded);
}

TEST_CASE("shortest_equal_sum_subsequence oracle") {
  Semigroup s8 = zmod_mult(8);
  // 3*3 has product 1; the empty sub-multiset achieves 1 in a monoid
  CHECK(shortest_equal_sum_subsequence(s8, SequenceMS::from_terms({3, 3})) == 0);
  CHECK(shortest_equal_sum_subsequence(s8, SequenceMS::from_terms({2, 5})) == 1);
  CHECK(shortest_equal_sum_subsequence(s8, SequenceMS::from_terms({2, 2})) == 2);
  // every multiset shrinks to length <= d(S)
  std::mt19937 rng(5);
  const int d = small_davenport(s8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ElementId> terms;
    const int len = d + 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < len; ++i)
      terms.push_back(static_cast<int>(rng() % 8));
    CHECK(shortest_equal_sum_subsequence(s8, SequenceMS::from_terms(terms)) <= d);
  }
}
