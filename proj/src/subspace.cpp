#include "kac/subspace.hpp"

#include <map>

#include <omp.h>

namespace kac {

template <class F>
Subspace<F> span_of(const std::vector<SVec<F>>& vecs, size_t dim) {
  SparseRREF<F> R(dim);
  Subspace<F> s{dim, {}};
  for (const auto& v : vecs)
    if (R.insert(v)) s.basis.push_back(v);
  return s;
}

template <class F>
bool contains_all(const Subspace<F>& big, const std::vector<SVec<F>>& vecs) {
  SparseRREF<F> R(big.dim);
  for (const auto& v : big.basis) R.insert(v);
  for (const auto& v : vecs)
    if (!R.contains(v)) return false;
  return true;
}

template <class F>
bool same_span(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.dim != b.dim) return false;
  if (sparse_rank(a.basis, a.dim) != sparse_rank(b.basis, b.dim)) return false;
  return contains_all(a, b.basis);
}

template <class F>
std::vector<SVec<F>> commutant_coefficients(const FiniteAlgebra<F>& amb, const std::vector<SVec<F>>& constraints,
                                            const std::vector<SVec<F>>& within, Exec exec) {
  const size_t dim = amb.dim();
  const size_t nw = within.empty() ? dim : within.size();
  std::vector<SVec<F>> cols(nw);
  auto column = [&](size_t i) {
    SVec<F> w = within.empty() ? unit_vec<F>(static_cast<uint32_t>(i)) : within[i];
    SVec<F> col;
    for (size_t c = 0; c < constraints.size(); ++c) {
      auto d = sdiff(amb.mul(w, constraints[c]), amb.mul(constraints[c], w));
      for (auto& e : d) col.emplace_back(static_cast<uint32_t>(c * dim + e.first), e.second);
    }
    cols[i] = std::move(col);
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < static_cast<long>(nw); ++i) column(static_cast<size_t>(i));
  } else {
    for (size_t i = 0; i < nw; ++i) column(i);
  }
  std::map<uint32_t, SVec<F>> rows;
  for (size_t i = 0; i < nw; ++i)
    for (const auto& e : cols[i]) rows[e.first].emplace_back(static_cast<uint32_t>(i), e.second);
  SparseRREF<F> R(nw);
  for (auto& [k, r] : rows) R.insert(r);
  return R.kernel();
}

template <class F>
Subspace<F> commutant_basis(const FiniteAlgebra<F>& amb, const std::vector<SVec<F>>& constraints,
                            const std::vector<SVec<F>>& within, Exec exec) {
  auto coeffs = commutant_coefficients(amb, constraints, within, exec);
  Subspace<F> s{amb.dim(), {}};
  if (within.empty()) {
    s.basis = std::move(coeffs);
    return s;
  }
  for (const auto& c : coeffs) {
    SVec<F> v;
    for (const auto& e : c) v = axpy(v, e.second, within[e.first]);
    s.basis.push_back(std::move(v));
  }
  return s;
}

template <class F>
Defect<F> commutation_residual(const FiniteAlgebra<F>& amb, const std::vector<SVec<F>>& xs,
                               const std::vector<SVec<F>>& constraints) {
  Defect<F> d;
  for (const auto& x : xs)
    for (const auto& c : constraints) d.svec(amb.mul(x, c), amb.mul(c, x));
  return d;
}

namespace {

template <class F, class Mul>
Subspace<F> closure(size_t dim, const SVec<F>& one, const std::vector<SVec<F>>& gens, Mul mul) {
  SparseRREF<F> R(dim);
  std::vector<SVec<F>> basis;
  auto add = [&](const SVec<F>& v) {
    if (R.insert(v)) basis.push_back(v);
  };
  add(one);
  for (const auto& g : gens) add(g);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (const auto& g : gens) {
      if (R.rank() == dim) break;
      add(mul(basis[i], g));
    }
  }
  return {dim, std::move(basis)};
}

}  // namespace

template <class F>
Subspace<F> generated_subalgebra(const FiniteAlgebra<F>& A, const std::vector<SVec<F>>& gens) {
  return closure<F>(A.dim(), A.unit(), gens, [&](const SVec<F>& a, const SVec<F>& b) { return A.mul(a, b); });
}

template <class F>
std::vector<int> generating_set(const KacAlgebra<F>& H) {
  auto mul = [&](const SVec<F>& a, const SVec<F>& b) { return tmul(H.mult, a, b); };
  std::vector<int> chosen;
  std::vector<SVec<F>> gens;
  size_t have = closure<F>(H.n, to_sparse(H.unit), gens, mul).size();
  for (int i = 0; i < H.n && have < static_cast<size_t>(H.n); ++i) {
    gens.push_back(unit_vec<F>(i));
    size_t now = closure<F>(H.n, to_sparse(H.unit), gens, mul).size();
    if (now > have) {
      chosen.push_back(i);
      have = now;
    } else {
      gens.pop_back();
    }
  }
  return chosen;
}

template <class F>
TraceExpectation<F>::TraceExpectation(const FiniteAlgebra<F>& amb, std::vector<SVec<F>> basis)
    : amb_(amb), basis_(std::move(basis)) {
  int k = static_cast<int>(basis_.size());
  for (const auto& a : basis_) adj_.push_back(amb_.star(a));
  Mat<F> G(k, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) G(j, i) = amb_.trace(amb_.mul(adj_[j], basis_[i]));
  try {
    ginv_ = inverse(G);
  } catch (const std::domain_error&) {
    throw DegenerateTrace("trace form is degenerate on the subspace");
  }
}

template <class F>
std::vector<F> TraceExpectation<F>::coords(const SVec<F>& x) const {
  std::vector<F> b(adj_.size());
  for (size_t j = 0; j < adj_.size(); ++j) b[j] = amb_.trace(amb_.mul(adj_[j], x));
  return ginv_ * b;
}

template <class F>
SVec<F> TraceExpectation<F>::operator()(const SVec<F>& x) const {
  auto c = coords(x);
  SVec<F> v;
  for (size_t i = 0; i < c.size(); ++i)
    if (!Scalar<F>::zero(c[i])) v = axpy(v, c[i], basis_[i]);
  return v;
}

#define KAC_SUBSPACE_INSTANTIATE(F)                                                                           \
  template Subspace<F> span_of(const std::vector<SVec<F>>&, size_t);                                          \
  template bool same_span(const Subspace<F>&, const Subspace<F>&);                                            \
  template bool contains_all(const Subspace<F>&, const std::vector<SVec<F>>&);                                \
  template std::vector<SVec<F>> commutant_coefficients(const FiniteAlgebra<F>&, const std::vector<SVec<F>>&,  \
                                                       const std::vector<SVec<F>>&, Exec);                    \
  template Subspace<F> commutant_basis(const FiniteAlgebra<F>&, const std::vector<SVec<F>>&,                  \
                                       const std::vector<SVec<F>>&, Exec);                                    \
  template Defect<F> commutation_residual(const FiniteAlgebra<F>&, const std::vector<SVec<F>>&,               \
                                          const std::vector<SVec<F>>&);                                       \
  template std::vector<int> generating_set(const KacAlgebra<F>&);                                             \
  template Subspace<F> generated_subalgebra(const FiniteAlgebra<F>&, const std::vector<SVec<F>>&);            \
  template class TraceExpectation<F>;

KAC_SUBSPACE_INSTANTIATE(Cyclo)
KAC_SUBSPACE_INSTANTIATE(cplx)

}  // namespace kac
