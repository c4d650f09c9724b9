#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "kac/chain.hpp"

namespace kac::internal {

template <class F>
using Terms = std::vector<std::pair<std::vector<int>, F>>;

// Sweedler legs of x split into k factors, first leg first.
template <class F>
Terms<F> legs(const KacAlgebra<F>& K, const Vec<F>& x, int k) {
  auto d = sweedler_delta_k(K, x, k - 1);
  Terms<F> out;
  for (size_t I = 0; I < d.size(); ++I) {
    if (Scalar<F>::zero(d[I])) continue;
    std::vector<int> v(k);
    size_t r = I;
    for (int t = k - 1; t >= 0; --t) {
      v[t] = static_cast<int>(r % K.n);
      r /= K.n;
    }
    out.emplace_back(std::move(v), d[I]);
  }
  return out;
}

template <class F>
std::vector<Terms<F>> basis_legs(const KacAlgebra<F>& K, int k) {
  std::vector<Terms<F>> out(K.n);
  for (int i = 0; i < K.n; ++i) out[i] = legs(K, K.e(i), k);
  return out;
}

template <class F>
SVec<F> kron(const SVec<F>& a, const SVec<F>& b, uint32_t nb) {
  SVec<F> out;
  for (const auto& x : a)
    for (const auto& y : b) out.emplace_back(x.first * nb + y.first, x.second * y.second);
  return out;
}

template <class F>
void push(SVec<F>& acc, const F& w, const SVec<F>& v) {
  for (const auto& e : v) acc.emplace_back(e.first, w * e.second);
}

template <class F>
void add_row(SparseTensor3<F>& T, uint32_t i, uint32_t j, const SVec<F>& v) {
  for (const auto& e : v) T.add(i, j, e.first, e.second);
}

template <class F>
void add_split(SparseTensor3<F>& T, uint32_t i, const SVec<F>& two_legs, uint32_t n2) {
  for (const auto& e : two_legs) T.add(i, e.first / n2, e.first % n2, e.second);
}

template <class F>
Mat<F> from_columns(const std::vector<SVec<F>>& cols, int rows) {
  Mat<F> M(rows, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& e : cols[j]) M(e.first, static_cast<int>(j)) = e.second;
  return M;
}

template <class F>
Mat<F> conj_mat(Mat<F> M) {
  for (auto& x : M.a) x = Scalar<F>::conj(x);
  return M;
}

template <class F>
std::vector<SVec<F>> columns_of(const Mat<F>& M) {
  std::vector<SVec<F>> out(M.cols);
  for (int j = 0; j < M.cols; ++j) out[j] = to_sparse(M.col(j));
  return out;
}

// Coordinates with respect to independent vectors, by elimination on v_i (+) e_i.
template <class F>
class Coords {
 public:
  Coords(const std::vector<SVec<F>>& vecs, size_t dim) : dim_(dim), R_(dim + vecs.size(), dim) {
    for (size_t i = 0; i < vecs.size(); ++i) {
      SVec<F> v = vecs[i];
      v.emplace_back(static_cast<uint32_t>(dim + i), F(1));
      R_.insert(v);
    }
    if (R_.rank() != vecs.size()) throw AxiomViolation("parametrized elements are linearly dependent");
  }
  // Coordinates of x, and the part of x outside the span in off.
  SVec<F> operator()(const SVec<F>& x, Defect<F>& off) const {
    SVec<F> r = R_.reduce(x), c;
    ++off.count;
    for (const auto& e : r) {
      if (e.first < dim_)
        off.note(e.second);
      else
        c.emplace_back(static_cast<uint32_t>(e.first - dim_), F(-1) * e.second);
    }
    return c;
  }

 private:
  size_t dim_;
  SparseRREF<F> R_;
};

template <class F>
Defect<F> tensor_defect(const SparseTensor3<F>& A, const SparseTensor3<F>& B) {
  Defect<F> d;
  d.count = 1;
  if (A.d1() != B.d1() || A.d2() != B.d2() || A.d3() != B.d3()) {
    d.ok = false;
    d.worst = 1;
    return d;
  }
  std::map<std::tuple<uint32_t, uint32_t, uint32_t>, F> m;
  for (const auto& e : A.entries()) m[{e.i, e.j, e.k}] += e.v;
  for (const auto& e : B.entries()) m[{e.i, e.j, e.k}] -= e.v;
  for (const auto& kv : m) d.note(kv.second);
  return d;
}

template <class F>
Defect<F> vec_defect(const Vec<F>& a, const Vec<F>& b) {
  Defect<F> d;
  if (a.size() != b.size()) {
    d.ok = false;
    d.worst = 1;
    return d;
  }
  d.vec(a, b);
  return d;
}

}  // namespace kac::internal
