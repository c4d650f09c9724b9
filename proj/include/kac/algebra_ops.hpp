#pragma once

#include <vector>

#include "kac/linalg.hpp"
#include "kac/tensor.hpp"

namespace kac {

// Product of a and b through the multiplication tensor T.
template <class F>
SVec<F> tmul(const SparseTensor3<F>& T, const SVec<F>& a, const SVec<F>& b) {
  SVec<F> acc;
  for (const auto& x : a)
    for (const auto& y : b) {
      auto [p, q] = T.pair(x.first, y.first);
      if (p == q) continue;
      F w = x.second * y.second;
      for (auto* e = p; e != q; ++e) acc.emplace_back(e->k, w * e->v);
    }
  return compress(std::move(acc));
}

// Coproduct of a, indexed j * d3 + k.
template <class F>
SVec<F> tcomul(const SparseTensor3<F>& T, const SVec<F>& a) {
  SVec<F> acc;
  uint32_t d3 = static_cast<uint32_t>(T.d3());
  for (const auto& x : a) {
    auto [p, q] = T.row(x.first);
    for (auto* e = p; e != q; ++e) acc.emplace_back(e->j * d3 + e->k, x.second * e->v);
  }
  return compress(std::move(acc));
}

// Product in A (x) A with both legs multiplied by T; X, Y indexed i * n + j.
template <class F>
SVec<F> tensor2_mul(const SparseTensor3<F>& T, const SVec<F>& X, const SVec<F>& Y) {
  uint32_t n = static_cast<uint32_t>(T.d1());
  SVec<F> acc;
  for (const auto& x : X)
    for (const auto& y : Y) {
      uint32_t a = x.first / n, b = x.first % n, c = y.first / n, d = y.first % n;
      auto [p1, q1] = T.pair(a, c);
      if (p1 == q1) continue;
      auto [p2, q2] = T.pair(b, d);
      if (p2 == q2) continue;
      F w = x.second * y.second;
      for (auto* e1 = p1; e1 != q1; ++e1)
        for (auto* e2 = p2; e2 != q2; ++e2) acc.emplace_back(e1->k * n + e2->k, w * e1->v * e2->v);
    }
  return compress(std::move(acc));
}

template <class F>
SVec<F> mat_apply(const Mat<F>& M, const SVec<F>& x) {
  SVec<F> acc;
  for (const auto& e : x)
    for (int i = 0; i < M.rows; ++i)
      if (!Scalar<F>::zero(M(i, e.first))) acc.emplace_back(i, M(i, e.first) * e.second);
  return compress(std::move(acc));
}

template <class F>
SVec<F> conj_vec(SVec<F> x) {
  for (auto& e : x) e.second = Scalar<F>::conj(e.second);
  return x;
}

// Conjugate-linear map x -> M conj(x).
template <class F>
SVec<F> star_apply(const Mat<F>& M, const SVec<F>& x) {
  return mat_apply(M, conj_vec(x));
}

template <class F>
F eval(const std::vector<F>& f, const SVec<F>& x) {
  F s(0);
  for (const auto& e : x)
    if (!Scalar<F>::zero(f[e.first])) s += f[e.first] * e.second;
  return s;
}

// Apply linear maps A and B to the two legs of X (indexed i * n + j).
template <class F>
SVec<F> tensor2_apply(const Mat<F>& A, const Mat<F>& B, const SVec<F>& X, uint32_t n) {
  SVec<F> acc;
  for (const auto& x : X) {
    uint32_t a = x.first / n, b = x.first % n;
    for (int i = 0; i < A.rows; ++i) {
      if (Scalar<F>::zero(A(i, a))) continue;
      for (int j = 0; j < B.rows; ++j)
        if (!Scalar<F>::zero(B(j, b))) acc.emplace_back(i * B.rows + j, x.second * A(i, a) * B(j, b));
    }
  }
  return compress(std::move(acc));
}

template <class F>
SVec<F> unit_vec(uint32_t i) {
  return {{i, F(1)}};
}

}  // namespace kac
