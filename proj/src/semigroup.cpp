#include "zsum/semigroup.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace zsum {

Semigroup::Semigroup(int n, std::vector<int> table,
                     std::vector<std::string> labels)
    : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
  for (int e = 0; e < n_; ++e) {
    bool ident = true;
    for (int x = 0; x < n_ && ident; ++x) ident = op(e, x) == x;
    if (ident) {
      identity_ = e;
      break;  // at most one identity can exist
    }
  }
  for (int e = 0; e < n_; ++e) {
    bool zero = true;
    for (int x = 0; x < n_ && zero; ++x) zero = op(e, x) == e;
    if (zero) {
      zero_ = e;
      break;
    }
  }
}

Semigroup Semigroup::validate(const std::vector<std::vector<int>>& table,
                              std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw PreconditionViolated("table must have at least one element");
  if (n > kMaxSemigroupSize)
    throw CapExceeded("table size " + std::to_string(n) + " exceeds cap");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw PreconditionViolated("table is not square");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n) throw NotClosed(i, j, v);
      flat[i * n + j] = v;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (flat[i * n + j] != flat[j * n + i]) throw NotCommutative(i, j);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int ij = flat[i * n + j];
      for (int k = 0; k < n; ++k) {
        if (flat[ij * n + k] != flat[i * n + flat[j * n + k]])
          throw NotAssociative(i, j, k);
      }
    }
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (static_cast<int>(labels.size()) != n) {
    throw PreconditionViolated("label count does not match table size");
  }
  return Semigroup(n, std::move(flat), std::move(labels));
}

std::optional<ElementId> Semigroup::element_by_label(
    const std::string& s) const {
  for (int i = 0; i < n_; ++i) {
    if (labels_[i] == s) return i;
  }
  return std::nullopt;
}

std::vector<ElementId> Semigroup::units() const {
  if (!identity_) throw NotAMonoid();
  std::vector<ElementId> out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (op(a, b) == *identity_) {
        out.push_back(a);
        break;
      }
    }
  }
  return out;
}

nlohmann::json Semigroup::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < n_; ++k) row.push_back(op(i, k));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  j["labels"] = labels_;
  return j;
}

Semigroup Semigroup::from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(table.size()) != n)
    throw PreconditionViolated("\"n\" does not match table row count");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  return validate(table, std::move(labels));
}

SequenceMS SequenceMS::from_terms(std::vector<ElementId> terms) {
  std::sort(terms.begin(), terms.end());
  SequenceMS t;
  for (ElementId e : terms) t.add(e);
  return t;
}

void SequenceMS::add(ElementId e, int mult) {
  if (mult <= 0) throw PreconditionViolated("multiplicity must be positive");
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), e,
      [](const auto& p, ElementId x) { return p.first < x; });
  if (it != entries_.end() && it->first == e) {
    it->second += mult;
  } else {
    entries_.insert(it, {e, mult});
  }
  length_ += mult;
}

void SequenceMS::remove_one(ElementId e) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), e,
      [](const auto& p, ElementId x) { return p.first < x; });
  if (it == entries_.end() || it->first != e)
    throw PreconditionViolated("element not present in multiset");
  if (--it->second == 0) entries_.erase(it);
  --length_;
}

int SequenceMS::multiplicity(ElementId e) const {
  for (const auto& [el, m] : entries_) {
    if (el == e) return m;
  }
  return 0;
}

std::vector<ElementId> SequenceMS::expand() const {
  std::vector<ElementId> out;
  out.reserve(length_);
  for (const auto& [e, m] : entries_) out.insert(out.end(), m, e);
  return out;
}

bool SequenceMS::operator<(const SequenceMS& o) const {
  return expand() < o.expand();
}

std::string SequenceMS::to_string(const Semigroup& s) const {
  std::string out;
  for (ElementId e : expand()) {
    if (!out.empty()) out += ' ';
    out += s.label(e);
  }
  return out;
}

AdjoinedSemigroup::AdjoinedSemigroup(const Semigroup& base)
    : monoid_(base),
      adjoined_(false),
      identity_(0),
      base_size_(base.size()) {
  if (base.identity()) {
    identity_ = *base.identity();
    return;
  }
  const int n = base.size();
  std::vector<std::vector<int>> table(n + 1, std::vector<int>(n + 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = base.op(i, j);
  for (int i = 0; i <= n; ++i) {
    table[n][i] = i;
    table[i][n] = i;
  }
  std::vector<std::string> labels = base.labels();
  labels.push_back("e");
  monoid_ = Semigroup::validate(table, std::move(labels));
  adjoined_ = true;
  identity_ = n;
}

ElementId sigma(const Semigroup& s, const SequenceMS& t) {
  if (t.empty()) {
    if (auto id = s.identity()) return *id;
    throw EmptyInNonMonoid();
  }
  std::optional<ElementId> acc;
  for (const auto& [e, m] : t.entries()) {
    for (int k = 0; k < m; ++k) acc = acc ? s.op(*acc, e) : e;
  }
  return *acc;
}

}  // namespace zsum
