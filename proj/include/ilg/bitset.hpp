#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ilg {

// Fixed-width dynamic bitset sized at construction; just enough surface for
// the exact solvers.
class BitSet {
 public:
  BitSet() = default;
  explicit BitSet(int n) : n_(n), w_((n + 63) / 64), v_(w_, 0) {}

  int size() const { return n_; }
  void set(int i) { v_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { v_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (v_[i >> 6] >> (i & 63)) & 1; }
  void clear() { std::fill(v_.begin(), v_.end(), 0); }

  int count() const {
    int c = 0;
    for (uint64_t x : v_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (uint64_t x : v_)
      if (x) return true;
    return false;
  }
  bool intersects(const BitSet& o) const {
    for (size_t i = 0; i < v_.size(); ++i)
      if (v_[i] & o.v_[i]) return true;
    return false;
  }
  BitSet& operator&=(const BitSet& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] &= o.v_[i];
    return *this;
  }
  BitSet& operator|=(const BitSet& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] |= o.v_[i];
    return *this;
  }
  BitSet& and_not(const BitSet& o) {
    for (size_t i = 0; i < v_.size(); ++i) v_[i] &= ~o.v_[i];
    return *this;
  }

  // First set bit at position >= from; -1 when none.
  int next(int from = 0) const {
    if (from >= n_) return -1;
    size_t word = from >> 6;
    uint64_t cur = v_[word] & (~uint64_t{0} << (from & 63));
    while (true) {
      if (cur) {
        int bit = static_cast<int>(word * 64 + std::countr_zero(cur));
        return bit < n_ ? bit : -1;
      }
      if (++word >= v_.size()) return -1;
      cur = v_[word];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t w = 0; w < v_.size(); ++w) {
      uint64_t cur = v_[w];
      while (cur) {
        f(static_cast<int>(w * 64 + std::countr_zero(cur)));
        cur &= cur - 1;
      }
    }
  }

  friend bool operator==(const BitSet& a, const BitSet& b) { return a.v_ == b.v_; }

 private:
  int n_ = 0;
  size_t w_ = 0;
  std::vector<uint64_t> v_;
};

}  // namespace ilg
