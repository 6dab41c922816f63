#include "zsum/verify.hpp"

#include <algorithm>
#include <random>

#include "zsum/abelian.hpp"
#include "zsum/families.hpp"

namespace zsum {

namespace {

void line(SuiteResult& r, bool pass, const std::string& entry,
          const std::string& element, const std::string& detail) {
  r.lines.push_back({pass, entry, element, detail});
}

bool is_group(const Semigroup& s) {
  return s.is_monoid() && static_cast<int>(s.units().size()) == s.size();
}

bool skipped(const std::string& filter, const std::string& name) {
  return !filter.empty() && name != filter;
}

SuiteResult suite_theorem_1_2(const SearchOptions& opts,
                              const std::string& filter) {
  SuiteResult r{"theorem-1.2", {}};
  for (const CorpusEntry& e : corpus()) {
    if (skipped(filter, e.name)) continue;
    try {
      DavenportReport rep = analyze(e.semigroup, opts);
      const auto id = e.semigroup.identity();
      for (const ElementReport& row : rep.rows) {
        if (id && row.element == *id) continue;
        const bool ok = row.lower <= row.exact && row.exact <= row.upper;
        line(r, ok, e.name, e.semigroup.label(row.element),
             "bounds " + std::to_string(row.lower) + " <= " +
                 std::to_string(row.exact) + " <= " +
                 std::to_string(row.upper));
      }
      for (const auto& [a, expected] : e.expected_da) {
        line(r, rep.rows[a].exact == expected, e.name, e.semigroup.label(a),
             "expected D_a = " + std::to_string(expected) + ", got " +
                 std::to_string(rep.rows[a].exact));
      }
    } catch (const ZsumError& err) {
      line(r, false, e.name, "-", err.what());
    }
  }
  return r;
}

SuiteResult suite_theorem_1_3(const SearchOptions& opts,
                              const std::string& filter) {
  SuiteResult r{"theorem-1.3", {}};
  for (const CorpusEntry& e : corpus()) {
    if (skipped(filter, e.name) || !e.ring) continue;
    const FiniteRing& ring = *e.ring;
    try {
      for (int a = 0; a < ring.size(); ++a) {
        line(r, gamma_unit_iso_check(ring, a), e.name, ring.label(a),
             "Gamma(H_a) ~ U(R_a) invariant factors");
      }
      if (!is_pir(ring)) continue;
      DavenportReport rep = analyze(e.semigroup, opts);
      for (int a = 0; a < ring.size(); ++a) {
        if (ring.is_unit(a)) continue;
        const int v = theorem_1_3_value(ring, a);
        line(r, rep.rows[a].exact == v, e.name, ring.label(a),
             "Psi+D(U(R_a))-1 = " + std::to_string(v) + ", brute force " +
                 std::to_string(rep.rows[a].exact));
        SequenceMS t = extremal_sequence_pir(ring, a);
        line(r, t.length() == v && is_irreducible(e.semigroup, t), e.name,
             ring.label(a),
             "extremal witness [" + t.to_string(e.semigroup) + "] length " +
                 std::to_string(t.length()));
      }
    } catch (const ZsumError& err) {
      line(r, false, e.name, "-", err.what());
    }
  }
  return r;
}

SuiteResult suite_theorem_e(const SearchOptions& opts,
                            const std::string& filter) {
  SuiteResult r{"theorem-e", {}};
  const std::vector<std::pair<std::string, std::vector<int>>> cases = {
      {"Zmod6", {6}}, {"Zmod12", {12}}, {"Zmod2x4", {2, 4}},
      {"Zmod3x3", {3, 3}}};
  for (const auto& [name, moduli] : cases) {
    if (skipped(filter, name)) continue;
    try {
      FiniteRing ring = FiniteRing::zmod_product(moduli);
      Semigroup ms = mult_semigroup(ring);
      DavenportReport rep = analyze(ms, opts);
      for (int a = 0; a < ring.size(); ++a) {
        if (ring.is_unit(a)) continue;
        std::vector<int> comps(moduli.size());
        int x = a;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
          comps[i] = x % moduli[i];
          x /= moduli[i];
        }
        const int te = theorem_e_value(moduli, comps);
        const int t13 = theorem_1_3_value(ring, a);
        const int brute = rep.rows[a].exact;
        line(r, te == t13 && t13 == brute, name, ring.label(a),
             "theorem-E " + std::to_string(te) + " = theorem-1.3 " +
                 std::to_string(t13) + " = brute " + std::to_string(brute));
      }
    } catch (const ZsumError& err) {
      line(r, false, name, "-", err.what());
    }
  }
  return r;
}

SuiteResult suite_prop_1_1(const SearchOptions& opts,
                           const std::string& filter) {
  SuiteResult r{"prop-1.1", {}};
  for (const CorpusEntry& e : corpus()) {
    if (skipped(filter, e.name)) continue;
    try {
      DavenportReport rep = analyze(e.semigroup, opts);
      int max_da = 0;
      for (const ElementReport& row : rep.rows) max_da = std::max(max_da, row.exact);
      line(r, rep.global_d == max_da + 1, e.name, "-",
           "D(S) = " + std::to_string(rep.global_d) + ", max D_a + 1 = " +
               std::to_string(max_da + 1));
      if (!e.semigroup.is_monoid()) continue;
      // D_a(S) = D_a(U(S)) for units a
      const auto units = e.semigroup.units();
      std::vector<int> pos(e.semigroup.size(), -1);
      for (std::size_t i = 0; i < units.size(); ++i)
        pos[units[i]] = static_cast<int>(i);
      std::vector<std::vector<int>> table(units.size(),
                                          std::vector<int>(units.size()));
      for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = 0; j < units.size(); ++j)
          table[i][j] = pos[e.semigroup.op(units[i], units[j])];
      AbelianGroup u = group_from_table(Semigroup::validate(table));
      for (ElementId a : units) {
        if (a == *e.semigroup.identity()) continue;
        const int in_units = relative_davenport_group(u, pos[a]).value;
        line(r, rep.rows[a].exact == in_units, e.name, e.semigroup.label(a),
             "D_a(S) = " + std::to_string(rep.rows[a].exact) +
                 ", D_a(U(S)) = " + std::to_string(in_units));
      }
    } catch (const ZsumError& err) {
      line(r, false, e.name, "-", err.what());
    }
  }
  return r;
}

SuiteResult suite_prop_3_1(const SearchOptions& opts,
                           const std::string& filter, unsigned seed) {
  SuiteResult r{"prop-3.1", {}};
  std::mt19937 rng(seed);
  for (const CorpusEntry& e : corpus()) {
    if (skipped(filter, e.name)) continue;
    try {
      DavenportReport rep = analyze(e.semigroup, opts);
      bool ok = rep.global_d == rep.small_d + 1;
      // the longest irreducible multiset itself cannot shrink below d
      if (rep.small_d > 0)
        ok = ok && shortest_equal_sum_subsequence(
                       e.semigroup, rep.global_witness) == rep.small_d;
      // random sequences must shrink to size <= d
      std::uniform_int_distribution<int> pick(0, e.semigroup.size() - 1);
      for (int trial = 0; trial < 20 && ok; ++trial) {
        SequenceMS t;
        const int len = rep.small_d + 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < len; ++i) t.add(pick(rng));
        ok = shortest_equal_sum_subsequence(e.semigroup, t) <= rep.small_d;
      }
      line(r, ok, e.name, "-",
           "D(S) = " + std::to_string(rep.global_d) + " = d(S) + 1 = " +
               std::to_string(rep.small_d + 1) + " (shrink-checked)");
    } catch (const ZsumError& err) {
      line(r, false, e.name, "-", err.what());
    }
  }
  return r;
}

SuiteResult suite_lemma_2_1(const SearchOptions&,
                            const std::string& filter) {
  SuiteResult r{"lemma-2.1", {}};
  std::vector<std::pair<std::string, Semigroup>> groups;
  for (int n = 2; n <= 8; ++n)
    groups.emplace_back("Z" + std::to_string(n), build_zn(n));
  for (const auto& [name, moduli] :
       std::vector<std::pair<std::string, std::vector<int>>>{
           {"Z2xZ2", {2, 2}}, {"Z2xZ4", {2, 4}}}) {
    FiniteRing ring = FiniteRing::zmod_product(moduli);
    const int n = ring.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) table[i][j] = ring.add(i, j);
    groups.emplace_back(name, Semigroup::validate(table, ring.labels()));
  }
  for (const auto& [name, sg] : groups) {
    if (skipped(filter, name)) continue;
    try {
      AbelianGroup g = group_from_table(sg);
      const int d = davenport_bruteforce(g).value;
      const auto witnesses = max_minimal_zero_sum(g);
      bool ok = !witnesses.empty();
      for (const SequenceMS& t : witnesses) {
        ReachableSums sums = initial_sums(sg);
        for (ElementId x : t.expand()) sums = extend_sums(sg, sums, x);
        ok = ok && t.length() == d && sums.nonempty.count() == g.order();
      }
      line(r, ok, name, "-",
           std::to_string(witnesses.size()) +
               " maximal minimal zero-sum sequences, all with Sigma(T) = G");
    } catch (const ZsumError& err) {
      line(r, false, name, "-", err.what());
    }
  }
  return r;
}

SuiteResult suite_lemma_2_4(const SearchOptions&,
                            const std::string& filter) {
  SuiteResult r{"lemma-2.4", {}};
  for (int n = 3; n <= 10; ++n) {
    if (skipped(filter, "Z" + std::to_string(n))) continue;
    try {
      AbelianGroup g = group_from_table(build_zn(n));
      int checked = 0;
      bool ok = true;
      for (const SequenceMS& t :
           enumerate_zero_sum_free(g, n / 2 + 1)) {
        if (2 * t.length() <= n) continue;
        ++checked;
        if (!savchev_chen_witness(n, t)) {
          ok = false;
          break;
        }
      }
      line(r, ok && checked > 0, "Z" + std::to_string(n), "-",
           std::to_string(checked) +
               " zero-sum-free sequences of length > n/2 all have a witness");
    } catch (const ZsumError& err) {
      line(r, false, "Z" + std::to_string(n), "-", err.what());
    }
  }
  return r;
}

SuiteResult suite_theorem_a(const SearchOptions&,
                            const std::string& filter) {
  SuiteResult r{"theorem-a", {}};
  for (const CorpusEntry& e : corpus()) {
    if (skipped(filter, e.name)) continue;
    if (!is_group(e.semigroup) || e.semigroup.size() < 2) continue;
    try {
      AbelianGroup g = group_from_table(e.semigroup);
      const int d = davenport_bruteforce(g).value;
      for (int x = 0; x < g.order(); ++x) {
        if (x == g.identity()) continue;
        const int dg = relative_davenport_group(g, x).value;
        line(r, (d + 1) / 2 <= dg && dg <= d - 1, e.name,
             e.semigroup.label(x),
             "ceil(D/2) = " + std::to_string((d + 1) / 2) +
                 " <= D_g = " + std::to_string(dg) +
                 " <= D-1 = " + std::to_string(d - 1));
      }
    } catch (const ZsumError& err) {
      line(r, false, e.name, "-", err.what());
    }
  }
  return r;
}

}  // namespace

std::vector<std::string> available_suites() {
  return {"theorem-1.2", "theorem-1.3", "theorem-e", "prop-1.1",
          "prop-3.1",    "lemma-2.1",   "lemma-2.4", "theorem-a"};
}

std::vector<SuiteResult> run_suites(const std::string& which,
                                    const SearchOptions& opts,
                                    const std::string& entry_filter,
                                    unsigned seed) {
  std::vector<SuiteResult> out;
  auto want = [&](const std::string& name) {
    return which == "all" || which == name;
  };
  if (want("theorem-1.2")) out.push_back(suite_theorem_1_2(opts, entry_filter));
  if (want("theorem-1.3")) out.push_back(suite_theorem_1_3(opts, entry_filter));
  if (want("theorem-e")) out.push_back(suite_theorem_e(opts, entry_filter));
  if (want("prop-1.1")) out.push_back(suite_prop_1_1(opts, entry_filter));
  if (want("prop-3.1"))
    out.push_back(suite_prop_3_1(opts, entry_filter, seed));
  if (want("lemma-2.1")) out.push_back(suite_lemma_2_1(opts, entry_filter));
  if (want("lemma-2.4")) out.push_back(suite_lemma_2_4(opts, entry_filter));
  if (want("theorem-a")) out.push_back(suite_theorem_a(opts, entry_filter));
  if (out.empty())
    throw PreconditionViolated("unknown suite \"" + which + "\"");
  return out;
}

}  // namespace zsum
