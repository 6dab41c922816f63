#ifndef ZSUM_ELEMSET_HPP_
#define ZSUM_ELEMSET_HPP_

#include <cstdint>
#include <vector>

namespace zsum {

// Fixed-capacity bitset over element indices [0, n). Sized at construction;
// all binary operations require equal capacity.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int capacity() const { return n_; }

  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }

  bool operator==(const ElemSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const ElemSet& o) const { return !(*this == o); }

  bool is_subset_of(const ElemSet& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] & ~o.words_[w]) return false;
    }
    return true;
  }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
      if (test(i)) out.push_back(i);
    }
    return out;
  }

  // Strict weak order so ElemSet can key ordered containers.
  bool operator<(const ElemSet& o) const { return words_ < o.words_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace zsum

#endif  // ZSUM_ELEMSET_HPP_
