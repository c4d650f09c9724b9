#pragma once

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "kac/linalg.hpp"

namespace kac {

// Sparse order-3 tensor T[i][j][k], stored sorted by (i, j, k) with a pointer per (i, j) pair.
template <class F>
class SparseTensor3 {
 public:
  struct Entry {
    uint32_t i, j, k;
    F v;
  };

  SparseTensor3() = default;
  SparseTensor3(int d1, int d2, int d3) : d1_(d1), d2_(d2), d3_(d3) {}

  int d1() const { return d1_; }
  int d2() const { return d2_; }
  int d3() const { return d3_; }

  void add(uint32_t i, uint32_t j, uint32_t k, const F& v) {
    if (i >= static_cast<uint32_t>(d1_) || j >= static_cast<uint32_t>(d2_) || k >= static_cast<uint32_t>(d3_))
      throw std::out_of_range("tensor index out of range");
    pending_.push_back({i, j, k, v});
  }

  // Merges duplicates, drops zeros and rebuilds the (i, j) index.
  void finalize() {
    auto& e = pending_;
    for (auto& x : entries_) e.push_back(std::move(x));
    std::sort(e.begin(), e.end(), [](const Entry& a, const Entry& b) {
      return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    std::vector<Entry> out;
    for (auto& x : e) {
      if (!out.empty() && out.back().i == x.i && out.back().j == x.j && out.back().k == x.k)
        out.back().v += x.v;
      else
        out.push_back(std::move(x));
    }
    entries_.clear();
    for (auto& x : out)
      if (!Scalar<F>::zero(x.v)) entries_.push_back(std::move(x));
    pending_.clear();
    ptr_.assign(static_cast<size_t>(d1_) * d2_ + 1, 0);
    for (const auto& x : entries_) ptr_[static_cast<size_t>(x.i) * d2_ + x.j + 1]++;
    for (size_t p = 1; p < ptr_.size(); ++p) ptr_[p] += ptr_[p - 1];
  }

  const std::vector<Entry>& entries() const { return entries_; }

  // Entries with first index i.
  std::pair<const Entry*, const Entry*> row(uint32_t i) const {
    size_t a = ptr_[static_cast<size_t>(i) * d2_], b = ptr_[static_cast<size_t>(i + 1) * d2_];
    return {entries_.data() + a, entries_.data() + b};
  }
  // Entries with first two indices (i, j).
  std::pair<const Entry*, const Entry*> pair(uint32_t i, uint32_t j) const {
    size_t p = static_cast<size_t>(i) * d2_ + j;
    return {entries_.data() + ptr_[p], entries_.data() + ptr_[p + 1]};
  }

  F at(uint32_t i, uint32_t j, uint32_t k) const {
    auto [b, e] = pair(i, j);
    for (auto* x = b; x != e; ++x)
      if (x->k == k) return x->v;
    return F(0);
  }

  bool operator==(const SparseTensor3& o) const {
    if (d1_ != o.d1_ || d2_ != o.d2_ || d3_ != o.d3_ || entries_.size() != o.entries_.size()) return false;
    for (size_t t = 0; t < entries_.size(); ++t) {
      const auto &a = entries_[t], &b = o.entries_[t];
      if (a.i != b.i || a.j != b.j || a.k != b.k || !(a.v == b.v)) return false;
    }
    return true;
  }

  template <class G, class Conv>
  SparseTensor3<G> convert(Conv conv) const {
    SparseTensor3<G> t(d1_, d2_, d3_);
    for (const auto& x : entries_) t.add(x.i, x.j, x.k, conv(x.v));
    t.finalize();
    return t;
  }

 private:
  int d1_ = 0, d2_ = 0, d3_ = 0;
  std::vector<Entry> entries_;
  std::vector<Entry> pending_;
  std::vector<size_t> ptr_;
};

}  // namespace kac
