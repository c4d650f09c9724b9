#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kac/scalar.hpp"

namespace kac {

// Sparse vector: entries sorted by index, no stored zeros.
template <class F>
using SVec = std::vector<std::pair<uint32_t, F>>;

// Sort, merge duplicate indices, drop zeros.
template <class F>
SVec<F> compress(SVec<F> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SVec<F> out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
  }
  SVec<F> res;
  res.reserve(out.size());
  for (auto& e : out)
    if (!Scalar<F>::zero(e.second)) res.push_back(std::move(e));
  return res;
}

template <class F>
SVec<F> axpy(const SVec<F>& x, const F& a, const SVec<F>& y) {
  // x + a*y
  SVec<F> out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      F v = a * y[j].second;
      if (!Scalar<F>::zero(v)) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      F v = x[i].second + a * y[j].second;
      if (!Scalar<F>::zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
SVec<F> scaled(SVec<F> v, const F& a) {
  if (Scalar<F>::zero(a)) return {};
  for (auto& e : v) e.second *= a;
  return v;
}

template <class F>
F sget(const SVec<F>& v, uint32_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, uint32_t k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return F(0);
}

template <class F>
SVec<F> to_sparse(const std::vector<F>& d) {
  SVec<F> v;
  for (uint32_t i = 0; i < d.size(); ++i)
    if (!Scalar<F>::zero(d[i])) v.emplace_back(i, d[i]);
  return v;
}

template <class F>
std::vector<F> to_dense(const SVec<F>& v, size_t n) {
  std::vector<F> d(n, F(0));
  for (const auto& e : v) d[e.first] = e.second;
  return d;
}

template <class F>
double max_abs(const SVec<F>& v) {
  double m = 0;
  for (const auto& e : v) m = std::max(m, Scalar<F>::mag(e.second));
  return m;
}

// Residual test used by all verifiers: exact zero, or max entry <= eps on the float backend.
template <class F>
bool is_null(const SVec<F>& v) {
  if constexpr (Scalar<F>::exact)
    return v.empty();
  else
    return max_abs(v) <= float_tolerance().eps;
}

template <class F>
bool is_null_scalar(const F& v) {
  if constexpr (Scalar<F>::exact)
    return Scalar<F>::zero(v);
  else
    return std::abs(v) <= float_tolerance().eps;
}

template <class F>
SVec<F> sdiff(const SVec<F>& a, const SVec<F>& b) {
  return axpy(a, F(-1), b);
}

// Dense row-major matrix.
template <class F>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<F> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, F(0)) {}
  F& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const F& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  std::vector<F> col(int j) const {
    std::vector<F> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const std::vector<F>& v) {
    for (int i = 0; i < rows; ++i) (*this)(i, j) = v[i];
  }
};

template <class F>
Mat<F> operator*(const Mat<F>& A, const Mat<F>& B) {
  if (A.cols != B.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat<F> C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const F& x = A(i, k);
      if (Scalar<F>::zero(x)) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) += x * B(k, j);
    }
  return C;
}

template <class F>
std::vector<F> operator*(const Mat<F>& A, const std::vector<F>& x) {
  std::vector<F> y(A.rows, F(0));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (!Scalar<F>::zero(x[j])) y[i] += A(i, j) * x[j];
  return y;
}

template <class F>
Mat<F> transpose(const Mat<F>& A) {
  Mat<F> T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T(j, i) = A(i, j);
  return T;
}

template <class F>
bool mat_equal(const Mat<F>& A, const Mat<F>& B) {
  if (A.rows != B.rows || A.cols != B.cols) return false;
  for (size_t i = 0; i < A.a.size(); ++i)
    if (!is_null_scalar<F>(A.a[i] - B.a[i])) return false;
  return true;
}

// Incrementally maintained reduced row echelon form over sparse rows. Every stored row has
// a pivot entry equal to 1 and zeros at all other pivot columns, so membership and
// coordinates are read off the pivot entries. Exact backend pivots on the lowest index;
// the float backend pivots on the largest magnitude entry.
template <class F>
class SparseRREF {
 public:
  // Pivots are taken only among indices below pivot_limit; a reduced vector supported entirely at
  // or above the limit is an inconsistency and is not inserted.
  explicit SparseRREF(size_t dim = 0, size_t pivot_limit = SIZE_MAX) : dim_(dim), limit_(std::min(dim, pivot_limit)) {}

  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }
  const std::vector<SVec<F>>& rows() const { return rows_; }
  const std::vector<uint32_t>& pivots() const { return piv_; }

  SVec<F> reduce(const SVec<F>& v) const {
    SVec<F> r = v;
    for (const auto& e : v) {
      auto it = where_.find(e.first);
      if (it == where_.end()) continue;
      r = axpy(r, F(-1) * e.second, rows_[it->second]);
    }
    if constexpr (!Scalar<F>::exact) {
      double s = std::max(1.0, max_abs(v));
      SVec<F> c;
      for (auto& e : r)
        if (Scalar<F>::mag(e.second) > float_tolerance().eps * s) c.push_back(e);
      return c;
    }
    return r;
  }

  bool contains(const SVec<F>& v) const { return reduce(v).empty(); }

  // Coordinates of v with respect to rows(); requires v in the span.
  std::vector<F> coords(const SVec<F>& v) const {
    std::vector<F> c(rows_.size(), F(0));
    for (const auto& e : v) {
      auto it = where_.find(e.first);
      if (it != where_.end()) c[it->second] = e.second;
    }
    return c;
  }

  // Returns true if v was independent and got added.
  bool insert(const SVec<F>& v) {
    SVec<F> r = reduce(v);
    if (r.empty()) return false;
    if (r[0].first >= limit_) {
      ++inconsistent_;
      return false;
    }
    size_t pk = 0;
    if constexpr (!Scalar<F>::exact) {
      double best = -1;
      for (size_t k = 0; k < r.size() && r[k].first < limit_; ++k) {
        double m = Scalar<F>::mag(r[k].second);
        if (m > best) {
          best = m;
          pk = k;
        }
      }
    }
    uint32_t p = r[pk].first;
    F inv = Scalar<F>::inv(r[pk].second);
    r = scaled(r, inv);
    for (auto& e : r)
      if (e.first == p) e.second = F(1);
    for (auto& row : rows_) {
      F c = sget(row, p);
      if (Scalar<F>::zero(c)) continue;
      row = axpy(row, F(-1) * c, r);
      row.erase(std::remove_if(row.begin(), row.end(), [p](const auto& e) { return e.first == p; }), row.end());
    }
    where_[p] = static_cast<uint32_t>(rows_.size());
    piv_.push_back(p);
    rows_.push_back(std::move(r));
    return true;
  }

  // Basis of {x : <row, x> = 0 for all rows}, i.e. the null space when rows are equations.
  // Number of rejected inserts whose reduction lived only at or above the pivot limit.
  size_t inconsistent() const { return inconsistent_; }

  std::vector<SVec<F>> kernel() const {
    std::vector<char> is_piv(dim_, 0);
    for (auto p : piv_) is_piv[p] = 1;
    std::unordered_map<uint32_t, SVec<F>> acc;
    std::vector<uint32_t> free_cols;
    for (uint32_t c = 0; c < dim_; ++c)
      if (!is_piv[c]) free_cols.push_back(c);
    for (size_t r = 0; r < rows_.size(); ++r)
      for (const auto& e : rows_[r])
        if (e.first != piv_[r]) acc[e.first].emplace_back(piv_[r], F(-1) * e.second);
    std::vector<SVec<F>> out;
    out.reserve(free_cols.size());
    for (auto c : free_cols) {
      SVec<F> v = std::move(acc[c]);
      v.emplace_back(c, F(1));
      out.push_back(compress(std::move(v)));
    }
    return out;
  }

 private:
  size_t dim_, limit_;
  size_t inconsistent_ = 0;
  std::vector<SVec<F>> rows_;
  std::vector<uint32_t> piv_;
  std::unordered_map<uint32_t, uint32_t> where_;
};

template <class F>
std::vector<SVec<F>> null_space_rows(const std::vector<SVec<F>>& rows, size_t dim) {
  SparseRREF<F> R(dim);
  for (const auto& r : rows) R.insert(r);
  return R.kernel();
}

template <class F>
size_t sparse_rank(const std::vector<SVec<F>>& vecs, size_t dim) {
  SparseRREF<F> R(dim);
  for (const auto& v : vecs) R.insert(v);
  return R.rank();
}

template <class F>
std::vector<SVec<F>> mat_rows(const Mat<F>& A) {
  std::vector<SVec<F>> rows(A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (!Scalar<F>::zero(A(i, j))) rows[i].emplace_back(j, A(i, j));
  return rows;
}

// Null space of a dense matrix via elimination; exact on the exact backend.
template <class F>
std::vector<std::vector<F>> null_space(const Mat<F>& A) {
  auto ker = null_space_rows(mat_rows(A), A.cols);
  std::vector<std::vector<F>> out;
  for (auto& v : ker) out.push_back(to_dense(v, A.cols));
  return out;
}

template <class F>
size_t rank(const Mat<F>& A) {
  return sparse_rank(mat_rows(A), A.cols);
}

template <class F>
Mat<F> inverse(const Mat<F>& A) {
  int n = A.rows;
  if (A.cols != n) throw std::invalid_argument("inverse of non-square matrix");
  Mat<F> M = A, I = Mat<F>::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    double best = -1;
    for (int r = c; r < n; ++r) {
      if (Scalar<F>::zero(M(r, c))) continue;
      double m = Scalar<F>::mag(M(r, c));
      if constexpr (Scalar<F>::exact) {
        p = r;
        break;
      }
      if (m > best) {
        best = m;
        p = r;
      }
    }
    if (p < 0) throw std::domain_error("singular matrix");
    for (int k = 0; k < n; ++k) {
      std::swap(M(p, k), M(c, k));
      std::swap(I(p, k), I(c, k));
    }
    F inv = Scalar<F>::inv(M(c, c));
    for (int k = 0; k < n; ++k) {
      M(c, k) *= inv;
      I(c, k) *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || Scalar<F>::zero(M(r, c))) continue;
      F s = M(r, c);
      for (int k = 0; k < n; ++k) {
        if (!Scalar<F>::zero(M(c, k))) M(r, k) -= s * M(c, k);
        if (!Scalar<F>::zero(I(c, k))) I(r, k) -= s * I(c, k);
      }
    }
  }
  return I;
}

// Solve A x = b for square invertible A.
template <class F>
std::vector<F> solve(const Mat<F>& A, const std::vector<F>& b) {
  return inverse(A) * b;
}


// Tracks the largest defect of an identity check.
template <class F>
struct Defect {
  double worst = 0;
  bool ok = true;
  long count = 0;
  void note(const F& d) {
    if constexpr (Scalar<F>::exact) {
      if (Scalar<F>::zero(d)) return;
    }
    double m = Scalar<F>::mag(d);
    if (m == 0) return;
    worst = std::max(worst, m);
    if (Scalar<F>::exact || m > float_tolerance().eps) ok = false;
  }
  void vec(const std::vector<F>& a, const std::vector<F>& b) {
    ++count;
    for (size_t i = 0; i < a.size(); ++i) note(a[i] - b[i]);
  }
  void svec(const SVec<F>& a, const SVec<F>& b) {
    ++count;
    for (const auto& e : sdiff(a, b)) note(e.second);
  }
  void scalar(const F& a, const F& b) {
    ++count;
    note(a - b);
  }
  void merge(const Defect& o) {
    worst = std::max(worst, o.worst);
    ok = ok && o.ok;
    count += o.count;
  }
};

// Unique solution of the affine system rows . x = rhs, or empty when none or not unique.
template <class F>
std::vector<F> solve_unique(const std::vector<SVec<F>>& rows, const std::vector<F>& rhs, size_t dim) {
  SparseRREF<F> R(dim + 1);
  for (size_t r = 0; r < rows.size(); ++r) {
    SVec<F> v = rows[r];
    if (!Scalar<F>::zero(rhs[r])) v.emplace_back(static_cast<uint32_t>(dim), F(-1) * rhs[r]);
    R.insert(v);
  }
  auto ker = R.kernel();
  if (ker.size() != 1) return {};
  F last = sget(ker[0], static_cast<uint32_t>(dim));
  if (Scalar<F>::zero(last)) return {};
  F inv = Scalar<F>::inv(last);
  std::vector<F> x(dim, F(0));
  for (const auto& e : ker[0])
    if (e.first < dim) x[e.first] = e.second * inv;
  return x;
}

}  // namespace kac
