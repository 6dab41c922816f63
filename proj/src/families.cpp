#include "zsum/families.hpp"

#include <array>
#include <stdexcept>

namespace zsum {

namespace {

int wrap(int v, int n) { return (v - 1) % n + 1; }  // to [1, n]

}  // namespace

ElementId s1_element(int n, int r, int m, int i) {
  if (m < 1 || m > n || i < 1 || i > r)
    throw PreconditionViolated("S1 element out of range");
  return (i - 1) * n + (m - 1);
}

Semigroup build_s1(int n, int r) {
  if (n < 2 || n % 2 != 0) throw OddN();
  if (r < 1) throw PreconditionViolated("S1 requires r >= 1");
  const int size = n * r;
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  std::vector<std::string> labels(size);
  for (int i = 1; i <= r; ++i) {
    for (int m = 1; m <= n; ++m) {
      labels[s1_element(n, r, m, i)] =
          std::to_string(m) + "*x" + std::to_string(i);
    }
  }
  for (int i = 1; i <= r; ++i) {
    for (int m = 1; m <= n; ++m) {
      for (int j = 1; j <= r; ++j) {
        for (int l = 1; l <= n; ++l) {
          int result;
          if (i < j) {
            result = s1_element(n, r, l, j);
          } else if (i > j) {
            result = s1_element(n, r, m, i);
          } else {
            result = s1_element(n, r, wrap(m + l, n), i);
          }
          table[s1_element(n, r, m, i)][s1_element(n, r, l, j)] = result;
        }
      }
    }
  }
  return Semigroup::validate(table, std::move(labels));
}

ElementId s2_x0_pow(int m, int k) {
  if (k < 1 || k > m) throw PreconditionViolated("S2 power out of range");
  return k - 1;
}

ElementId s2_x(int m, int j) {
  if (j < 1 || j > m) throw PreconditionViolated("S2 generator out of range");
  return m + (j - 1);
}

ElementId s2_inf(int m) { return 2 * m; }

Semigroup build_s2(int m) {
  if (m <= 2) throw MTooSmall();
  const int size = 2 * m + 1;
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  std::vector<std::string> labels(size);
  for (int k = 1; k <= m; ++k)
    labels[s2_x0_pow(m, k)] = std::to_string(k) + "*x0";
  for (int j = 1; j <= m; ++j) labels[s2_x(m, j)] = "x" + std::to_string(j);
  labels[s2_inf(m)] = "inf";

  const int inf = s2_inf(m);
  for (int a = 0; a < size; ++a) {
    table[inf][a] = inf;
    table[a][inf] = inf;
  }
  for (int k = 1; k <= m; ++k) {
    for (int l = 1; l <= m; ++l)
      table[s2_x0_pow(m, k)][s2_x0_pow(m, l)] = s2_x0_pow(m, wrap(k + l, m));
    for (int j = 1; j <= m; ++j) {
      table[s2_x0_pow(m, k)][s2_x(m, j)] = s2_x(m, wrap(j + k, m));
      table[s2_x(m, j)][s2_x0_pow(m, k)] = s2_x(m, wrap(j + k, m));
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) table[s2_x(m, i)][s2_x(m, j)] = inf;
  }
  return Semigroup::validate(table, std::move(labels));
}

Semigroup build_zn(int n) {
  if (n < 1) throw PreconditionViolated("Z_n requires n >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return Semigroup::validate(table);
}

FiniteRing f2uv() {
  // elements a + b u + c v, index a + 2b + 4c
  const int n = 8;
  auto bits = [](int x) { return std::array<int, 3>{x & 1, (x >> 1) & 1, (x >> 2) & 1}; };
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    const auto [a1, b1, c1] = bits(x);
    for (int y = 0; y < n; ++y) {
      const auto [a2, b2, c2] = bits(y);
      add[x][y] = x ^ y;
      // u^2 = uv = v^2 = 0
      const int a = a1 & a2;
      const int b = (a1 & b2) ^ (b1 & a2);
      const int c = (a1 & c2) ^ (c1 & a2);
      mul[x][y] = a + 2 * b + 4 * c;
    }
  }
  std::vector<std::string> labels = {"0",  "1",   "u",   "1+u",
                                     "v",  "1+v", "u+v", "1+u+v"};
  return FiniteRing::from_tables(add, mul, std::move(labels));
}

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;

  for (int n = 1; n <= 10; ++n) {
    CorpusEntry e{"Z" + std::to_string(n) + "_add", build_zn(n),
                  "additive cyclic group", {}, std::nullopt};
    if (n >= 2 && n % 2 == 0) e.expected_da.push_back({n / 2, n / 2});
    out.push_back(std::move(e));
  }

  for (int n : {2, 4, 6}) {
    for (int r : {1, 2}) {
      CorpusEntry e{"S1_" + std::to_string(n) + "_" + std::to_string(r),
                    build_s1(n, r), "sharpness family S1", {}, std::nullopt};
      for (int k = 1; k <= r; ++k)
        e.expected_da.push_back({s1_element(n, r, n / 2, k), n / 2});
      out.push_back(std::move(e));
    }
  }

  for (int m : {3, 4, 5}) {
    CorpusEntry e{"S2_" + std::to_string(m), build_s2(m),
                  "sharpness family S2", {}, std::nullopt};
    e.expected_da.push_back({s2_x(m, m), m});
    out.push_back(std::move(e));
  }

  for (int n = 4; n <= 12; ++n) {
    FiniteRing r = FiniteRing::zmod_product({n});
    CorpusEntry e{"Zmod" + std::to_string(n) + "_mult", mult_semigroup(r),
                  "multiplicative semigroup of Z/n", {}, r};
    if (n == 12) e.expected_da.push_back({2, 2});
    out.push_back(std::move(e));
  }

  for (const auto& [name, moduli] :
       std::vector<std::pair<std::string, std::vector<int>>>{
           {"Zmod2x2_mult", {2, 2}},
           {"Zmod2x4_mult", {2, 4}},
           {"Zmod3x3_mult", {3, 3}}}) {
    FiniteRing r = FiniteRing::zmod_product(moduli);
    out.push_back(CorpusEntry{name, mult_semigroup(r),
                              "multiplicative semigroup of a product ring",
                              {}, r});
  }

  {
    FiniteRing r = f2uv();
    out.push_back(CorpusEntry{"F2uv_mult", mult_semigroup(r),
                              "non-PIR example F2[u,v]/(u,v)^2", {}, r});
  }

  for (const auto& [name, moduli] :
       std::vector<std::pair<std::string, std::vector<int>>>{
           {"Z2xZ2_add", {2, 2}},
           {"Z2xZ4_add", {2, 4}},
           {"Z3xZ3_add", {3, 3}}}) {
    FiniteRing r = FiniteRing::zmod_product(moduli);
    const int n = r.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) table[i][j] = r.add(i, j);
    out.push_back(CorpusEntry{name,
                              Semigroup::validate(table, r.labels()),
                              "small abelian group", {}, std::nullopt});
  }

  return out;
}

FamilySpec parse_family_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw PreconditionViolated("bad family spec \"" + spec + "\"");
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);

  auto parse_kv = [&](const std::string& s) {
    std::vector<std::pair<std::string, int>> kv;
    std::size_t pos = 0;
    while (pos < s.size()) {
      auto comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      const std::string piece = s.substr(pos, comma - pos);
      const auto eq = piece.find('=');
      if (eq == std::string::npos)
        throw PreconditionViolated("bad family spec argument \"" + piece +
                                   "\"");
      kv.emplace_back(piece.substr(0, eq), std::stoi(piece.substr(eq + 1)));
      pos = comma + 1;
    }
    return kv;
  };
  auto get = [](const std::vector<std::pair<std::string, int>>& kv,
                const std::string& key) {
    for (const auto& [k, v] : kv) {
      if (k == key) return v;
    }
    throw PreconditionViolated("missing family spec key \"" + key + "\"");
  };

  if (kind == "s1") {
    auto kv = parse_kv(args);
    return {build_s1(get(kv, "n"), get(kv, "r")), std::nullopt};
  }
  if (kind == "s2") {
    auto kv = parse_kv(args);
    return {build_s2(get(kv, "m")), std::nullopt};
  }
  if (kind == "zn") {
    if (args.find('=') == std::string::npos)
      return {build_zn(std::stoi(args)), std::nullopt};
    auto kv = parse_kv(args);
    return {build_zn(get(kv, "n")), std::nullopt};
  }
  if (kind == "zmod") {
    FiniteRing r = FiniteRing::zmod_product({std::stoi(args)});
    return {mult_semigroup(r), r};
  }
  if (kind == "zmodprod") {
    std::vector<int> moduli;
    std::size_t pos = 0;
    while (pos < args.size()) {
      auto comma = args.find(',', pos);
      if (comma == std::string::npos) comma = args.size();
      moduli.push_back(std::stoi(args.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    FiniteRing r = FiniteRing::zmod_product(moduli);
    return {mult_semigroup(r), r};
  }
  throw PreconditionViolated("unknown family kind \"" + kind + "\"");
}

}  // namespace zsum
