#include "zsum/abelian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace zsum {

namespace {

// Sums of all nonempty sub-multisets of t.
ElemSet nonempty_subset_sums(const Semigroup& tab, const SequenceMS& t) {
  ElemSet sums(tab.size());
  for (ElementId x : t.expand()) {
    ElemSet next = sums;
    next.set(x);
    for (int s = 0; s < tab.size(); ++s) {
      if (sums.test(s)) next.set(tab.op(x, s));
    }
    sums = next;
  }
  return sums;
}

bool zero_sum_free(const AbelianGroup& g, const SequenceMS& t) {
  return !nonempty_subset_sums(g.table, t).test(g.identity());
}

// Canonical DFS over zero-sum-free multisets in non-decreasing element
// order; calls visit(t, sum) for every nonempty zero-sum-free multiset.
// sum is the identity exactly never (a zero-sum-free multiset has nonzero
// sum, else it would contain itself as a zero-sum sub-multiset).
void walk_zero_sum_free(
    const AbelianGroup& g, long long node_cap, long long best_for_cap,
    const std::function<void(const SequenceMS&, ElementId)>& visit) {
  const Semigroup& tab = g.table;
  const int n = tab.size();
  long long nodes = 0;
  SequenceMS t;
  std::function<void(int, const ElemSet&, ElementId)> rec =
      [&](int first, const ElemSet& sums, ElementId sum) {
        for (int x = first; x < n; ++x) {
          if (++nodes > node_cap) throw SearchCapExceeded(best_for_cap);
          ElemSet next = sums;
          next.set(x);
          for (int s = 0; s < n; ++s) {
            if (sums.test(s)) next.set(tab.op(x, s));
          }
          if (next.test(g.identity())) continue;  // downward-closed prune
          t.add(x);
          const ElementId nsum = t.length() == 1 ? x : tab.op(sum, x);
          visit(t, nsum);
          rec(x, next, nsum);
          t.remove_one(x);
        }
      };
  rec(0, ElemSet(n), g.identity());
}

}  // namespace

ElementId AbelianGroup::inverse(ElementId a) const {
  for (int b = 0; b < table.size(); ++b) {
    if (table.op(a, b) == identity()) return b;
  }
  throw NotAGroup("element " + std::to_string(a) + " has no inverse");
}

int AbelianGroup::element_order(ElementId a) const {
  int ord = 1;
  ElementId x = a;
  while (x != identity()) {
    x = table.op(x, a);
    ++ord;
  }
  return ord;
}

std::vector<int> invariant_factors(const Semigroup& table) {
  if (!table.identity()) throw NotAGroup("no identity element");
  const int n = table.size();
  AbelianGroup g{table, {}};
  for (int a = 0; a < n; ++a) g.inverse(a);  // throws if not a group

  std::vector<int> orders(n);
  for (int a = 0; a < n; ++a) orders[a] = g.element_order(a);

  // Primes dividing |G|.
  std::vector<int> primes;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(m);

  // For each prime, the p-group type (exponent partition, descending).
  std::map<int, std::vector<int>> partitions;
  for (int p : primes) {
    std::vector<long long> counts{1};  // counts[k] = #{x : ord(x) | p^k}
    for (long long pk = p;; pk *= p) {
      long long c = 0;
      for (int a = 0; a < n; ++a) {
        if (pk % orders[a] == 0) ++c;
      }
      if (c == counts.back()) break;
      counts.push_back(c);
    }
    // m_k = log_p(counts[k]/counts[k-1]) counts exponents >= k; conjugate
    // back to the partition itself.
    std::vector<int> conj;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      long long ratio = counts[k] / counts[k - 1];
      int e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      conj.push_back(e);
    }
    const int parts = conj.empty() ? 0 : conj[0];
    std::vector<int> part;
    for (int j = 1; j <= parts; ++j) {
      int e = 0;
      for (int c : conj) {
        if (c >= j) ++e;
      }
      part.push_back(e);
    }
    partitions[p] = part;
  }

  std::size_t rank = 0;
  for (const auto& [p, part] : partitions) rank = std::max(rank, part.size());
  std::vector<int> factors;  // built largest-first
  for (std::size_t j = 0; j < rank; ++j) {
    long long d = 1;
    for (const auto& [p, part] : partitions) {
      if (j < part.size()) {
        for (int e = 0; e < part[j]; ++e) d *= p;
      }
    }
    factors.push_back(static_cast<int>(d));
  }
  std::reverse(factors.begin(), factors.end());
  long long prod = 1;
  for (int d : factors) prod *= d;
  if (prod != n)
    throw InternalInvariantViolation("invariant factor product mismatch");
  return factors;
}

AbelianGroup group_from_table(const Semigroup& table) {
  return AbelianGroup{table, invariant_factors(table)};
}

DavenportResult davenport_bruteforce(const AbelianGroup& g,
                                     long long node_cap) {
  DavenportResult best{0, {}};  // best.value tracks longest zero-sum-free
  try {
    walk_zero_sum_free(g, node_cap, 1,
                       [&](const SequenceMS& t, ElementId) {
                         if (t.length() > best.value) {
                           best.value = t.length();
                           best.witness = t;
                         }
                       });
  } catch (SearchCapExceeded&) {
    throw SearchCapExceeded(best.value + 1);
  }
  best.value += 1;
  return best;
}

FormulaValue davenport_formula(const std::vector<int>& inv_factors) {
  if (inv_factors.empty()) return {1, true};
  if (inv_factors.size() == 1) return {inv_factors[0], true};
  if (inv_factors.size() == 2)
    return {inv_factors[0] + inv_factors[1] - 1, true};
  int v = 1;
  for (int d : inv_factors) v += d - 1;
  return {v, false};
}

DavenportResult relative_davenport_group(const AbelianGroup& g,
                                         ElementId target,
                                         long long node_cap) {
  if (target == g.identity()) return {0, {}};
  DavenportResult best{0, {}};
  try {
    walk_zero_sum_free(g, node_cap, 0,
                       [&](const SequenceMS& t, ElementId sum) {
                         if (sum == target && t.length() > best.value) {
                           best.value = t.length();
                           best.witness = t;
                         }
                       });
  } catch (SearchCapExceeded&) {
    throw SearchCapExceeded(best.value);
  }
  return best;
}

std::vector<SequenceMS> max_minimal_zero_sum(const AbelianGroup& g,
                                             long long node_cap) {
  const int d = davenport_bruteforce(g, node_cap).value;
  std::set<SequenceMS> out;
  auto consider = [&](const SequenceMS& zsf) {
    SequenceMS t = zsf;
    t.add(g.inverse(sigma(g.table, zsf)));
    // minimal zero-sum iff dropping any one element leaves it zero-sum free
    for (const auto& [e, mult] : t.entries()) {
      SequenceMS sub = t;
      sub.remove_one(e);
      if (!zero_sum_free(g, sub)) return;
    }
    out.insert(std::move(t));
  };
  if (d == 1) {
    consider(SequenceMS{});
  } else {
    walk_zero_sum_free(g, node_cap, d, [&](const SequenceMS& t, ElementId) {
      if (t.length() == d - 1) consider(t);
    });
  }
  return {out.begin(), out.end()};
}

SequenceMS skalba_construction(const AbelianGroup& g, ElementId target) {
  if (target == g.identity())
    throw PreconditionViolated("target must not be the identity");
  auto minimal = max_minimal_zero_sum(g);
  const SequenceMS& l = minimal.front();
  const int d = l.length();
  const std::vector<ElementId> terms = l.expand();

  // Find a nonempty sub-multiset V of L with sum(V) = target; exists since
  // the subset sums of a maximal minimal zero-sum sequence cover the group.
  std::optional<SequenceMS> found;
  const std::vector<std::pair<ElementId, int>>& ent = l.entries();
  std::vector<int> take(ent.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == ent.size()) {
      SequenceMS v;
      for (std::size_t k = 0; k < ent.size(); ++k) {
        if (take[k] > 0) v.add(ent[k].first, take[k]);
      }
      if (!v.empty() && sigma(g.table, v) == target) found = v;
      return;
    }
    for (int c = 0; c <= ent[i].second && !found; ++c) {
      take[i] = c;
      rec(i + 1);
    }
    take[i] = 0;
  };
  rec(0);
  if (!found)
    throw InternalInvariantViolation(
        "no sub-multiset of a maximal minimal zero-sum sequence hits target");

  if (2 * found->length() >= d) return *found;
  // Negate the complement L V^{-1}; its sum is -(sum(L)-target) = target.
  SequenceMS complement = l;
  for (ElementId e : found->expand()) complement.remove_one(e);
  SequenceMS negated;
  for (ElementId e : complement.expand()) negated.add(g.inverse(e));
  return negated;
}

std::vector<SequenceMS> enumerate_zero_sum_free(const AbelianGroup& g,
                                                int min_length,
                                                long long node_cap) {
  std::vector<SequenceMS> out;
  walk_zero_sum_free(g, node_cap, 0, [&](const SequenceMS& t, ElementId) {
    if (t.length() >= min_length) out.push_back(t);
  });
  return out;
}

std::optional<int> savchev_chen_witness(int n, const SequenceMS& t) {
  if (n <= 1) throw PreconditionViolated("modulus must exceed 1");
  if (2 * t.length() <= n)
    throw PreconditionViolated("sequence length must exceed n/2");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  AbelianGroup zn = group_from_table(Semigroup::validate(table));
  if (!zero_sum_free(zn, t))
    throw PreconditionViolated("sequence has a zero-sum sub-multiset");
  for (int b = 1; b < n; ++b) {
    if (std::gcd(b, n) != 1) continue;
    long long total = 0;
    for (ElementId c : t.expand()) total += (static_cast<long long>(b) * c) % n;
    if (total < n) return b;
  }
  return std::nullopt;
}

}  // namespace zsum
