#include "zsum/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "zsum/green.hpp"
#include "zsum/search.hpp"

namespace zsum {

int omega(int t) {
  int count = 0;
  for (int p = 2; p * p <= t; ++p) {
    while (t % p == 0) {
      t /= p;
      ++count;
    }
  }
  if (t > 1) ++count;
  return count;
}

bool FiniteRing::is_unit(ElementId a) const {
  for (int b = 0; b < n_; ++b) {
    if (mul(a, b) == one_) return true;
  }
  return false;
}

FiniteRing FiniteRing::from_tables(const std::vector<std::vector<int>>& add,
                                   const std::vector<std::vector<int>>& mul,
                                   std::vector<std::string> labels) {
  Semigroup add_sg = Semigroup::validate(add, labels);
  Semigroup mul_sg = Semigroup::validate(mul, labels);
  if (!add_sg.identity()) throw NotAGroup("no additive identity");
  if (!mul_sg.identity())
    throw PreconditionViolated("no multiplicative identity");
  const int n = add_sg.size();
  if (mul_sg.size() != n)
    throw PreconditionViolated("table sizes differ");

  FiniteRing r;
  r.n_ = n;
  r.zero_ = *add_sg.identity();
  r.one_ = *mul_sg.identity();
  if (n > 1 && r.zero_ == r.one_)
    throw PreconditionViolated("0 = 1 in a ring with more than one element");
  r.add_.resize(static_cast<std::size_t>(n) * n);
  r.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      r.add_[i * n + j] = add_sg.op(i, j);
      r.mul_[i * n + j] = mul_sg.op(i, j);
    }
  }
  r.neg_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (r.add(a, b) == r.zero_) {
        r.neg_[a] = b;
        break;
      }
    }
    if (r.neg_[a] < 0)
      throw NotAGroup("element " + std::to_string(a) + " has no negative");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (r.mul(i, r.add(j, k)) != r.add(r.mul(i, j), r.mul(i, k)))
          throw PreconditionViolated("distributivity fails at (" +
                                     std::to_string(i) + "," +
                                     std::to_string(j) + "," +
                                     std::to_string(k) + ")");
      }
    }
  }
  r.labels_ = add_sg.labels();
  return r;
}

FiniteRing FiniteRing::zmod_product(const std::vector<int>& moduli) {
  if (moduli.empty()) throw PreconditionViolated("moduli list is empty");
  long long total = 1;
  for (int m : moduli) {
    if (m < 1) throw PreconditionViolated("moduli must be >= 1");
    total *= m;
    if (total > kMaxSemigroupSize)
      throw CapExceeded("product ring size exceeds cap");
  }
  const int n = static_cast<int>(total);
  const int rk = static_cast<int>(moduli.size());
  auto decode = [&](int x) {
    std::vector<int> c(rk);
    for (int i = 0; i < rk; ++i) {
      c[i] = x % moduli[i];
      x /= moduli[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int x = 0;
    for (int i = rk - 1; i >= 0; --i) x = x * moduli[i] + c[i];
    return x;
  };
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const auto cx = decode(x);
    for (int y = 0; y < n; ++y) {
      const auto cy = decode(y);
      std::vector<int> cs(rk), cp(rk);
      for (int i = 0; i < rk; ++i) {
        cs[i] = (cx[i] + cy[i]) % moduli[i];
        cp[i] = (cx[i] * cy[i]) % moduli[i];
      }
      add[x][y] = encode(cs);
      mul[x][y] = encode(cp);
    }
  }
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    const auto c = decode(x);
    if (rk == 1) {
      labels[x] = std::to_string(c[0]);
    } else {
      std::string s = "(";
      for (int i = 0; i < rk; ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
      }
      labels[x] = s + ")";
    }
  }
  return from_tables(add, mul, std::move(labels));
}

FiniteRing FiniteRing::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zmod_product")
    return zmod_product(j.at("moduli").get<std::vector<int>>());
  if (kind == "tables") {
    auto add = j.at("add").get<std::vector<std::vector<int>>>();
    auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("labels"))
      labels = j["labels"].get<std::vector<std::string>>();
    return from_tables(add, mul, std::move(labels));
  }
  throw PreconditionViolated("unknown ring kind \"" + kind + "\"");
}

Semigroup mult_semigroup(const FiniteRing& r) {
  const int n = r.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = r.mul(i, j);
  return Semigroup::validate(table, r.labels());
}

Ideal ideal_generated(const FiniteRing& r, const std::vector<ElementId>& gens) {
  const int n = r.size();
  ElemSet in(n);
  std::vector<ElementId> members{r.zero()};
  in.set(r.zero());
  for (ElementId g : gens) {
    for (int c = 0; c < n; ++c) {
      const ElementId x = r.mul(c, g);
      if (!in.test(x)) {
        in.set(x);
        members.push_back(x);
      }
    }
  }
  // additive closure; a finite subset containing 0 and closed under + is a
  // subgroup
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const ElementId x = r.add(members[i], members[j]);
      if (!in.test(x)) {
        in.set(x);
        members.push_back(x);
      }
    }
  }
  return Ideal{in};
}

Ideal principal_ring_ideal(const FiniteRing& r, ElementId a) {
  ElemSet in(r.size());
  for (int c = 0; c < r.size(); ++c) in.set(r.mul(c, a));
  return Ideal{in};
}

Ideal annihilator(const FiniteRing& r, ElementId a) {
  ElemSet in(r.size());
  for (int x = 0; x < r.size(); ++x) {
    if (r.mul(x, a) == r.zero()) in.set(x);
  }
  return Ideal{in};
}

bool is_ideal(const FiniteRing& r, const Ideal& k) {
  if (!k.elements.test(r.zero())) return false;
  const auto members = k.elements.to_vector();
  for (ElementId x : members) {
    for (ElementId y : members) {
      if (!k.elements.test(r.add(x, y))) return false;
    }
    for (int c = 0; c < r.size(); ++c) {
      if (!k.elements.test(r.mul(c, x))) return false;
    }
  }
  return true;
}

QuotientRing quotient_ring(const FiniteRing& r, const Ideal& i) {
  if (!is_ideal(r, i)) throw NotAnIdeal("quotient by a non-ideal");
  const int n = r.size();
  std::vector<int> rep(n, -1);  // element -> smallest member of its coset
  for (int x = 0; x < n; ++x) {
    int m = x;
    for (ElementId k : i.elements.to_vector()) m = std::min(m, r.add(x, k));
    rep[x] = m;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (rep[x] == x) reps.push_back(x);
  }
  std::vector<int> index_of(n, -1);
  for (std::size_t c = 0; c < reps.size(); ++c) index_of[reps[c]] = static_cast<int>(c);

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> add(q, std::vector<int>(q));
  std::vector<std::vector<int>> mul(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      add[a][b] = index_of[rep[r.add(reps[a], reps[b])]];
      mul[a][b] = index_of[rep[r.mul(reps[a], reps[b])]];
    }
  }
  std::vector<std::string> labels(q);
  for (int c = 0; c < q; ++c) labels[c] = r.label(reps[c]);
  QuotientRing out{FiniteRing::from_tables(add, mul, std::move(labels)), {}};
  out.projection.resize(n);
  for (int x = 0; x < n; ++x) out.projection[x] = index_of[rep[x]];
  return out;
}

AbelianGroup unit_group(const FiniteRing& r) {
  std::vector<ElementId> units;
  for (int a = 0; a < r.size(); ++a) {
    if (r.is_unit(a)) units.push_back(a);
  }
  std::vector<int> pos(r.size(), -1);
  for (std::size_t i = 0; i < units.size(); ++i) pos[units[i]] = static_cast<int>(i);
  const int u = static_cast<int>(units.size());
  std::vector<std::vector<int>> table(u, std::vector<int>(u));
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) table[i][j] = pos[r.mul(units[i], units[j])];
  std::vector<std::string> labels(u);
  for (int i = 0; i < u; ++i) labels[i] = r.label(units[i]);
  return group_from_table(Semigroup::validate(table, std::move(labels)));
}

namespace {

std::vector<ElemSet> distinct_principal_ideals(const FiniteRing& r) {
  std::set<ElemSet> seen;
  std::vector<ElemSet> out;
  for (int a = 0; a < r.size(); ++a) {
    ElemSet k = principal_ring_ideal(r, a).elements;
    if (seen.insert(k).second) out.push_back(k);
  }
  return out;
}

}  // namespace

bool is_pir(const FiniteRing& r) {
  std::set<ElemSet> principal;
  for (int a = 0; a < r.size(); ++a)
    principal.insert(principal_ring_ideal(r, a).elements);
  for (int a = 0; a < r.size(); ++a) {
    for (int b = a + 1; b < r.size(); ++b) {
      Ideal two = ideal_generated(r, {a, b});
      if (!principal.count(two.elements)) return false;
    }
  }
  return true;
}

int ideal_index(const FiniteRing& r, const Ideal& k) {
  ElemSet full(r.size());
  for (int x = 0; x < r.size(); ++x) full.set(x);
  ElemSet prev = full;  // K^0 = R
  for (int i = 0;; ++i) {
    // K^{i+1}: ideal generated by the pairwise products K^i * K
    std::vector<ElementId> prods;
    for (ElementId x : prev.to_vector()) {
      for (ElementId y : k.elements.to_vector()) prods.push_back(r.mul(x, y));
    }
    ElemSet next = ideal_generated(r, prods).elements;
    if (next == prev) return i;
    prev = next;
  }
}

int zeta(const FiniteRing& r, const Ideal& k, ElementId c) {
  const int ind = ideal_index(r, k);
  ElemSet full(r.size());
  for (int x = 0; x < r.size(); ++x) full.set(x);
  ElemSet power = full;
  int best = 0;  // c is always in K^0 = R
  for (int t = 1; t <= ind; ++t) {
    std::vector<ElementId> prods;
    for (ElementId x : power.to_vector()) {
      for (ElementId y : k.elements.to_vector()) prods.push_back(r.mul(x, y));
    }
    power = ideal_generated(r, prods).elements;
    if (power.test(c)) best = t;
  }
  return best;
}

std::vector<ElementId> maximal_principal_generators(const FiniteRing& r) {
  // distinct proper principal ideals with their smallest generator
  std::map<ElemSet, ElementId> gen_of;
  for (int a = 0; a < r.size(); ++a) {
    ElemSet k = principal_ring_ideal(r, a).elements;
    if (k.count() == r.size()) continue;  // (a) = R, a is a unit
    gen_of.try_emplace(k, a);
  }
  std::vector<ElementId> out;
  for (const auto& [k, g] : gen_of) {
    bool maximal = true;
    for (const auto& [k2, g2] : gen_of) {
      if (k != k2 && k.is_subset_of(k2)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PirFactorization factorize_pir(const FiniteRing& r, ElementId b) {
  if (!is_pir(r)) throw NotPIR();
  PirFactorization f;
  f.generators = maximal_principal_generators(r);
  ElementId x = r.one();
  for (ElementId a : f.generators) {
    const int m = zeta(r, principal_ring_ideal(r, a), b);
    f.exponents.push_back(m);
    for (int e = 0; e < m; ++e) x = r.mul(x, a);
  }
  for (int u = 0; u < r.size(); ++u) {
    if (r.is_unit(u) && r.mul(x, u) == b) {
      f.unit = u;
      return f;
    }
  }
  throw InternalInvariantViolation("no unit completes the factorization");
}

int psi_ring(const FiniteRing& r, ElementId a) {
  const std::vector<ElemSet> ideals = distinct_principal_ideals(r);
  const ElemSet mine = principal_ring_ideal(r, a).elements;
  // longest strict chain upward by memoized DFS over the containment DAG
  std::vector<int> memo(ideals.size(), -1);
  std::function<int(std::size_t)> rec = [&](std::size_t u) -> int {
    if (memo[u] >= 0) return memo[u];
    int best = 0;
    for (std::size_t v = 0; v < ideals.size(); ++v) {
      if (v != u && ideals[u].is_subset_of(ideals[v]))
        best = std::max(best, 1 + rec(v));
    }
    return memo[u] = best;
  };
  for (std::size_t u = 0; u < ideals.size(); ++u) {
    if (ideals[u] == mine) return rec(u);
  }
  throw InternalInvariantViolation("principal ideal not found");
}

int theorem_1_3_value(const FiniteRing& r, ElementId a) {
  if (r.is_unit(a)) throw UnitElement();
  if (!is_pir(r)) throw NotPIR();
  QuotientRing ra = quotient_ring(r, annihilator(r, a));
  const int d = davenport_bruteforce(unit_group(ra.ring)).value;
  return psi_ring(r, a) + d - 1;
}

int theorem_e_value(const std::vector<int>& moduli,
                    const std::vector<int>& components) {
  if (moduli.size() != components.size())
    throw PreconditionViolated("component count does not match moduli");
  int omega_sum = 0;
  std::vector<int> reduced;
  bool unit = true;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const int t = std::gcd(components[i] % moduli[i], moduli[i]);
    const int ti = t == 0 ? moduli[i] : t;
    if (ti != 1) unit = false;
    omega_sum += omega(ti);
    reduced.push_back(moduli[i] / ti);
  }
  if (unit) throw UnitElement();
  FiniteRing rprime = FiniteRing::zmod_product(reduced);
  const int d = davenport_bruteforce(unit_group(rprime)).value;
  return omega_sum + d - 1;
}

bool gamma_unit_iso_check(const FiniteRing& r, ElementId a) {
  Semigroup ms = mult_semigroup(r);
  SchutzGroup sg = schutzenberger(ms, a);
  QuotientRing ra = quotient_ring(r, annihilator(r, a));
  AbelianGroup ua = unit_group(ra.ring);
  if (sg.group.inv_factors != ua.inv_factors) return false;
  if (is_pir(r)) {
    // every gamma must have a unit preimage under rho_a
    std::vector<bool> covered(sg.perms.size(), false);
    for (int u = 0; u < r.size(); ++u) {
      if (r.is_unit(u) && sg.rho[u] >= 0) covered[sg.rho[u]] = true;
    }
    for (bool c : covered) {
      if (!c) return false;
    }
  }
  return true;
}

SequenceMS extremal_sequence_pir(const FiniteRing& r, ElementId a) {
  if (r.is_unit(a)) throw UnitElement();
  if (!is_pir(r)) throw NotPIR();
  Semigroup ms = mult_semigroup(r);
  SchutzGroup sg = schutzenberger(ms, a);
  DavenportResult dav = davenport_bruteforce(sg.group);
  const int d_gamma = dav.value;

  // Lift a longest zero-sum-free sequence of Gamma(H_a) to units of R.
  SequenceMS v;
  for (int gamma : dav.witness.expand()) {
    ElementId lift = -1;
    for (int u = 0; u < r.size() && lift < 0; ++u) {
      if (r.is_unit(u) && sg.rho[u] == gamma) lift = u;
    }
    if (lift < 0)
      throw InternalInvariantViolation("gamma has no unit preimage");
    v.add(lift);
  }

  ElementId prod_v = r.one();
  for (ElementId u : v.expand()) prod_v = r.mul(prod_v, u);
  // b in H_a with gamma_{prod(V)} applied to b giving a
  const std::vector<int>& perm = sg.perms[sg.rho[prod_v]];
  int pos_a = -1;
  for (std::size_t i = 0; i < sg.h_class.size(); ++i) {
    if (sg.h_class[i] == a) pos_a = static_cast<int>(i);
  }
  ElementId b = -1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] == pos_a) b = sg.h_class[i];
  }
  if (b < 0) throw InternalInvariantViolation("no preimage of a in H_a");

  PirFactorization f = factorize_pir(r, b);
  int lead = -1;
  for (std::size_t i = 0; i < f.exponents.size(); ++i) {
    if (f.exponents[i] > 0) {
      lead = static_cast<int>(i);
      break;
    }
  }
  if (lead < 0)
    throw InternalInvariantViolation("non-unit with all-zero exponents");

  SequenceMS t = v;
  t.add(r.mul(f.generators[lead], f.unit));
  if (f.exponents[lead] > 1) t.add(f.generators[lead], f.exponents[lead] - 1);
  for (std::size_t i = 0; i < f.generators.size(); ++i) {
    if (static_cast<int>(i) != lead && f.exponents[i] > 0)
      t.add(f.generators[i], f.exponents[i]);
  }

  ElementId prod = r.one();
  for (ElementId x : t.expand()) prod = r.mul(prod, x);
  const int expected = psi_ring(r, a) + d_gamma - 1;
  if (prod != a || t.length() != expected || !is_irreducible(ms, t))
    throw InternalInvariantViolation("extremal sequence construction failed");
  return t;
}

}  // namespace zsum
