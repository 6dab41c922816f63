#include "zsum/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "zsum/abelian.hpp"

namespace zsum {

ReachableSums initial_sums(const Semigroup& s) {
  // T = empty: no nonempty sub-multisets, and no proper ones either (the
  // empty multiset is not a proper sub-multiset of itself).
  return ReachableSums{ElemSet(s.size()), ElemSet(s.size())};
}

ReachableSums extend_sums(const Semigroup& s, const ReachableSums& r,
                          ElementId x) {
  const int n = s.size();
  ReachableSums out{ElemSet(n), ElemSet(n)};
  // proper subs of T*x are: all subs of T (the empty one contributing the
  // identity in a monoid), plus V*x for V a proper sub of T, plus x alone
  // when T is nonempty.
  out.nonempty = r.nonempty;
  out.nonempty.set(x);
  out.proper = r.nonempty;
  if (r.nonempty.any()) out.proper.set(x);
  for (int v = 0; v < n; ++v) {
    if (r.nonempty.test(v)) out.nonempty.set(s.op(x, v));
    if (r.proper.test(v)) out.proper.set(s.op(x, v));
  }
  if (auto id = s.identity()) out.proper.set(*id);
  return out;
}

bool is_irreducible(const Semigroup& s, const SequenceMS& t) {
  if (t.empty()) throw EmptySequence();
  ReachableSums r = initial_sums(s);
  for (ElementId x : t.expand()) r = extend_sums(s, r, x);
  return !r.proper.test(sigma(s, t));
}

namespace {

struct BranchResult {
  std::vector<int> exact;
  std::vector<SequenceMS> witness;
};

void audit_maximal_subs(const Semigroup& s, const SequenceMS& t) {
  if (t.length() < 2) return;
  for (const auto& [e, mult] : t.entries()) {
    SequenceMS sub = t;
    sub.remove_one(e);
    if (!is_irreducible(s, sub))
      throw InternalInvariantViolation(
          "hereditary property violated: maximal proper sub-multiset of an "
          "irreducible multiset is reducible");
  }
}

}  // namespace

DavenportReport analyze(const Semigroup& s, const SearchOptions& opts) {
  const int n = s.size();
  const AdjoinedSemigroup s0(s);
  const HClassDecomposition dec = h_classes(s0);

  DavenportReport rep;
  rep.rows.resize(n);
  std::vector<int> upper_cap(n, 0);
  int global_cap = 0;
  const auto identity = s.identity();
  for (int a = 0; a < n; ++a) {
    ElementReport& row = rep.rows[a];
    row.element = a;
    const int cls = dec.class_of[a];
    row.h_class_size = static_cast<int>(dec.classes[cls].size());
    {
      // psi over the S^0 ideal DAG, memo-free per element (DAG is tiny)
      std::function<int(int)> up = [&](int u) {
        int best = 0;
        for (int v : dec.above[u]) best = std::max(best, 1 + up(v));
        return best;
      };
      row.psi = up(cls);
    }
    const SchutzGroup sg = schutzenberger(s0, a);
    row.gamma_factors = sg.group.inv_factors;
    const int d_gamma = davenport_bruteforce(sg.group).value;
    row.eps_half = dec.class_of[s.op(a, a)] == cls;
    if (identity && a == *identity) {
      row.lower = row.upper = row.exact = 0;
    } else {
      row.lower = row.eps_half ? (d_gamma + 1) / 2 : d_gamma;
      row.upper = row.psi + d_gamma - 1;
      upper_cap[a] = row.upper;
      global_cap = std::max(global_cap, row.upper);
    }
  }

  // Exhaustive enumeration of irreducible multisets in canonical
  // non-decreasing order, pruned by heredity of irreducibility and
  // partitioned across workers by first element.
  std::atomic<long long> nodes{0};
  const long long node_cap = opts.node_cap;
  auto run_branch = [&](int first, BranchResult& res) {
    res.exact.assign(n, 0);
    res.witness.assign(n, SequenceMS{});
    SequenceMS t;
    std::function<void(int, const ReachableSums&, ElementId)> rec =
        [&](int lo, const ReachableSums& sums, ElementId sum) {
          for (int x = lo; x < n; ++x) {
            if (nodes.fetch_add(1, std::memory_order_relaxed) >= node_cap)
              throw SearchCapExceeded(0);
            ReachableSums next = extend_sums(s, sums, x);
            const ElementId nsum = t.empty() ? x : s.op(sum, x);
            if (next.proper.test(nsum)) continue;  // reducible; prune subtree
            t.add(x);
            if (t.length() > global_cap || t.length() > upper_cap[nsum])
              throw BoundViolation(
                  "irreducible multiset longer than the proven upper bound "
                  "at element " + s.label(nsum));
            if (opts.audit_hereditary) audit_maximal_subs(s, t);
            if (t.length() > res.exact[nsum]) {
              res.exact[nsum] = t.length();
              res.witness[nsum] = t;
            }
            rec(x, next, nsum);
            t.remove_one(x);
          }
        };
    // branch root: the single-element multiset {first}
    ReachableSums root = initial_sums(s);
    ReachableSums next = extend_sums(s, root, first);
    if (next.proper.test(first)) return;  // singleton already reducible
    t.add(first);
    if (upper_cap[first] < 1)
      throw BoundViolation("irreducible singleton at element with zero cap " +
                           s.label(first));
    if (1 > res.exact[first]) {
      res.exact[first] = 1;
      res.witness[first] = t;
    }
    rec(first, next, first);
    t.remove_one(first);
  };

  std::vector<BranchResult> branches(n);
  auto best_so_far = [&] {
    long long best = 0;
    for (const BranchResult& b : branches) {
      for (int v : b.exact) best = std::max<long long>(best, v);
    }
    return best;
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    try {
      for (int x = 0; x < n; ++x) run_branch(x, branches[x]);
    } catch (SearchCapExceeded&) {
      throw SearchCapExceeded(best_so_far());
    }
  } else {
    std::atomic<int> next_branch{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&] {
      try {
        for (;;) {
          const int x = next_branch.fetch_add(1);
          if (x >= n) return;
          run_branch(x, branches[x]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < std::min(jobs, n); ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) {
      try {
        std::rethrow_exception(error);
      } catch (SearchCapExceeded&) {
        throw SearchCapExceeded(best_so_far());
      }
    }
  }

  // Deterministic merge: longest wins, ties to the lexicographically
  // smallest witness, independent of scheduling.
  for (int a = 0; a < n; ++a) {
    ElementReport& row = rep.rows[a];
    for (const BranchResult& b : branches) {
      if (b.exact.empty()) continue;
      if (b.exact[a] > row.exact ||
          (b.exact[a] == row.exact && b.exact[a] > 0 &&
           b.witness[a] < row.witness)) {
        row.exact = b.exact[a];
        row.witness = b.witness[a];
      }
    }
  }

  rep.global_d = 1;
  for (int a = 0; a < n; ++a) {
    const ElementReport& row = rep.rows[a];
    if (row.exact + 1 > rep.global_d ||
        (row.exact + 1 == rep.global_d && row.exact > 0 &&
         row.witness < rep.global_witness)) {
      rep.global_d = row.exact + 1;
      rep.global_witness = row.witness;
    }
  }
  rep.small_d = rep.global_d - 1;

  for (const ElementReport& row : rep.rows) {
    if ((identity && row.element == *identity)) continue;
    if (!(row.lower <= row.exact && row.exact <= row.upper))
      throw BoundViolation("bounds violated at element " +
                           s.label(row.element));
  }
  return rep;
}

std::pair<int, SequenceMS> relative_davenport(const Semigroup& s, ElementId a,
                                              const SearchOptions& opts) {
  if (s.identity() && a == *s.identity()) return {0, {}};
  DavenportReport rep = analyze(s, opts);
  return {rep.rows[a].exact, rep.rows[a].witness};
}

std::pair<int, SequenceMS> global_davenport(const Semigroup& s,
                                            const SearchOptions& opts) {
  DavenportReport rep = analyze(s, opts);
  return {rep.global_d, rep.global_witness};
}

int small_davenport(const Semigroup& s, const SearchOptions& opts) {
  return analyze(s, opts).small_d;
}

int shortest_equal_sum_subsequence(const Semigroup& s, const SequenceMS& t) {
  const ElementId target = sigma(s, t);
  const auto& ent = t.entries();
  int best = t.length();
  std::vector<int> take(ent.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == ent.size()) {
      int len = 0;
      for (int c : take) len += c;
      if (len >= best) return;
      SequenceMS sub;
      for (std::size_t k = 0; k < ent.size(); ++k) {
        if (take[k] > 0) sub.add(ent[k].first, take[k]);
      }
      if (sub.empty()) {
        if (s.identity() && target == *s.identity()) best = 0;
        return;
      }
      if (sigma(s, sub) == target) best = len;
      return;
    }
    for (int c = 0; c <= ent[i].second; ++c) {
      take[i] = c;
      rec(i + 1);
    }
    take[i] = 0;
  };
  rec(0);
  return best;
}

}  // namespace zsum
