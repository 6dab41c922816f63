#include "zsum/green.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace zsum {

ElemSet principal_ideal(const AdjoinedSemigroup& s0, ElementId a) {
  const Semigroup& m = s0.monoid();
  ElemSet out(m.size());
  for (int c = 0; c < m.size(); ++c) out.set(m.op(a, c));
  return out;
}

ElemSet principal_ideal(const Semigroup& s, ElementId a) {
  AdjoinedSemigroup s0(s);
  ElemSet full = principal_ideal(s0, a);
  ElemSet out(s.size());
  for (int x = 0; x < s.size(); ++x) {
    if (full.test(x)) out.set(x);
  }
  return out;
}

HClassDecomposition h_classes(const AdjoinedSemigroup& s0) {
  const Semigroup& m = s0.monoid();
  const int n = m.size();
  HClassDecomposition d;
  d.class_of.assign(n, -1);
  std::map<ElemSet, int> by_ideal;
  for (int a = 0; a < n; ++a) {
    ElemSet ideal = principal_ideal(s0, a);
    auto [it, fresh] = by_ideal.try_emplace(ideal, -1);
    if (fresh) {
      it->second = static_cast<int>(d.classes.size());
      d.classes.emplace_back();
      d.class_ideal.push_back(ideal);
    }
    d.class_of[a] = it->second;
    d.classes[it->second].push_back(a);
  }
  const int k = static_cast<int>(d.classes.size());
  d.above.assign(k, {});
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) {
      if (u != v && d.class_ideal[u].is_subset_of(d.class_ideal[v]))
        d.above[u].push_back(v);
    }
  }
  return d;
}

HClassDecomposition h_classes(const Semigroup& s) {
  AdjoinedSemigroup s0(s);
  HClassDecomposition full = h_classes(s0);
  if (!s0.adjoined()) return full;

  // Drop the adjoined identity's singleton class and renumber.
  const int drop = full.class_of[s0.identity()];
  HClassDecomposition d;
  std::vector<int> remap(full.classes.size(), -1);
  for (int u = 0; u < static_cast<int>(full.classes.size()); ++u) {
    if (u == drop) continue;
    remap[u] = static_cast<int>(d.classes.size());
    d.classes.push_back(full.classes[u]);
    ElemSet ideal(s.size());
    for (int x = 0; x < s.size(); ++x) {
      if (full.class_ideal[u].test(x)) ideal.set(x);
    }
    d.class_ideal.push_back(ideal);
  }
  d.class_of.assign(s.size(), -1);
  for (int a = 0; a < s.size(); ++a) d.class_of[a] = remap[full.class_of[a]];
  d.above.assign(d.classes.size(), {});
  for (int u = 0; u < static_cast<int>(full.classes.size()); ++u) {
    if (u == drop) continue;
    for (int v : full.above[u]) {
      if (v != drop) d.above[remap[u]].push_back(remap[v]);
    }
  }
  return d;
}

namespace {

int longest_path_up(const HClassDecomposition& d, int cls) {
  std::vector<int> memo(d.classes.size(), -1);
  std::function<int(int)> rec = [&](int u) {
    if (memo[u] >= 0) return memo[u];
    int best = 0;
    for (int v : d.above[u]) best = std::max(best, 1 + rec(v));
    return memo[u] = best;
  };
  return rec(cls);
}

}  // namespace

int psi(const AdjoinedSemigroup& s0, ElementId a) {
  HClassDecomposition d = h_classes(s0);
  return longest_path_up(d, d.class_of[a]);
}

int psi(const Semigroup& s, ElementId a) { return psi(AdjoinedSemigroup(s), a); }

std::vector<ElementId> stabilizer(const AdjoinedSemigroup& s0,
                                  const std::vector<ElementId>& a) {
  if (a.empty()) throw EmptySet();
  const Semigroup& m = s0.monoid();
  ElemSet in_a(m.size());
  for (ElementId x : a) in_a.set(x);
  std::vector<ElementId> out;
  for (int c = 0; c < m.size(); ++c) {
    bool ok = true;
    for (ElementId x : a) {
      if (!in_a.test(m.op(c, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(c);
  }
  return out;
}

std::vector<ElementId> stabilizer(const Semigroup& s,
                                  const std::vector<ElementId>& a) {
  return stabilizer(AdjoinedSemigroup(s), a);
}

SchutzGroup schutzenberger(const AdjoinedSemigroup& s0, ElementId a) {
  const Semigroup& m = s0.monoid();
  HClassDecomposition d = h_classes(s0);
  std::vector<ElementId> h_class = d.classes[d.class_of[a]];
  const int h = static_cast<int>(h_class.size());
  std::vector<int> pos_in_h(m.size(), -1);
  for (int i = 0; i < h; ++i) pos_in_h[h_class[i]] = i;

  const std::vector<ElementId> st = stabilizer(s0, h_class);
  std::vector<int> rho(m.size(), -1);
  std::vector<std::vector<int>> perms;
  std::map<std::vector<int>, int> perm_index;
  for (ElementId c : st) {
    std::vector<int> perm(h);
    for (int i = 0; i < h; ++i) {
      const int image = pos_in_h[m.op(c, h_class[i])];
      if (image < 0)
        throw InternalInvariantViolation("stabilizer element leaves H-class");
      perm[i] = image;
    }
    std::vector<bool> seen(h, false);
    for (int i : perm) {
      if (seen[i])
        throw InternalInvariantViolation("translation is not a bijection");
      seen[i] = true;
    }
    auto [it, fresh] = perm_index.try_emplace(perm, -1);
    if (fresh) {
      it->second = static_cast<int>(perms.size());
      perms.push_back(perm);
    }
    rho[c] = it->second;
  }

  // Simple transitivity: |perms| = |H_a| and the orbit map at every point
  // is a bijection of perms onto H_a.
  if (static_cast<int>(perms.size()) != h)
    throw InternalInvariantViolation("perm count differs from |H_a|");
  for (int i = 0; i < h; ++i) {
    std::vector<bool> hit(h, false);
    for (const auto& p : perms) {
      if (hit[p[i]])
        throw InternalInvariantViolation("action is not simply transitive");
      hit[p[i]] = true;
    }
  }

  const int k = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int p = 0; p < k; ++p) {
    for (int q = 0; q < k; ++q) {
      std::vector<int> comp(h);
      for (int i = 0; i < h; ++i) comp[i] = perms[p][perms[q][i]];
      auto it = perm_index.find(comp);
      if (it == perm_index.end())
        throw InternalInvariantViolation("perms not closed under composition");
      table[p][q] = it->second;
    }
  }
  std::optional<AbelianGroup> group;
  try {
    group = group_from_table(Semigroup::validate(table));
  } catch (const ZsumError& e) {
    throw InternalInvariantViolation(std::string("perm table is not an "
                                                 "abelian group: ") +
                                     e.what());
  }

  // Homomorphism law rho(c+d) = rho(c) o rho(d) over the whole stabilizer.
  for (ElementId c : st) {
    for (ElementId e : st) {
      const int composed = table[rho[c]][rho[e]];
      if (rho[m.op(c, e)] != composed)
        throw InternalInvariantViolation("rho is not a homomorphism");
    }
  }
  return SchutzGroup{std::move(h_class), std::move(perms), std::move(*group),
                     std::move(rho)};
}

SchutzGroup schutzenberger(const Semigroup& s, ElementId a) {
  return schutzenberger(AdjoinedSemigroup(s), a);
}

bool is_h_idempotent(const Semigroup& s, ElementId a) {
  AdjoinedSemigroup s0(s);
  return principal_ideal(s0, a) == principal_ideal(s0, s.op(a, a));
}

}  // namespace zsum
