#pragma once

#include <functional>
#include <vector>

#include "kac/chain.hpp"

namespace kac {

// Linearly independent spanning set of a subspace of an ambient space of dimension dim.
template <class F>
struct Subspace {
  size_t dim = 0;
  std::vector<SVec<F>> basis;

  size_t size() const { return basis.size(); }
};

template <class F>
Subspace<F> span_of(const std::vector<SVec<F>>& vecs, size_t dim);

template <class F>
bool same_span(const Subspace<F>& a, const Subspace<F>& b);

template <class F>
bool contains_all(const Subspace<F>& big, const std::vector<SVec<F>>& vecs);

// Basis of {sum_i c_i w_i : [sum_i c_i w_i, c] = 0 for every constraint c}, returned as coefficient
// vectors c over within (the ambient basis when within is empty).
template <class F>
std::vector<SVec<F>> commutant_coefficients(const FiniteAlgebra<F>& amb, const std::vector<SVec<F>>& constraints,
                                            const std::vector<SVec<F>>& within, Exec exec = Exec::Parallel);

// Commutant of the constraints inside amb (or inside span(within)), as ambient vectors.
template <class F>
Subspace<F> commutant_basis(const FiniteAlgebra<F>& amb, const std::vector<SVec<F>>& constraints,
                            const std::vector<SVec<F>>& within = {}, Exec exec = Exec::Parallel);

// Largest defect of [x, c] over the given elements and constraints.
template <class F>
Defect<F> commutation_residual(const FiniteAlgebra<F>& amb, const std::vector<SVec<F>>& xs,
                               const std::vector<SVec<F>>& constraints);

// Basis indices of H generating it as an algebra, chosen greedily in index order.
template <class F>
std::vector<int> generating_set(const KacAlgebra<F>& H);

// Span closure of the generators and the unit under multiplication.
template <class F>
Subspace<F> generated_subalgebra(const FiniteAlgebra<F>& A, const std::vector<SVec<F>>& gens);

// Trace-orthogonal projection of amb onto span(basis), a unital *-subalgebra.
template <class F>
class TraceExpectation {
 public:
  TraceExpectation(const FiniteAlgebra<F>& amb, std::vector<SVec<F>> basis);
  // Coordinates of E(x) with respect to the basis.
  std::vector<F> coords(const SVec<F>& x) const;
  SVec<F> operator()(const SVec<F>& x) const;
  const std::vector<SVec<F>>& basis() const { return basis_; }

 private:
  const FiniteAlgebra<F>& amb_;
  std::vector<SVec<F>> basis_, adj_;
  Mat<F> ginv_;
};

struct DegenerateTrace : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kac
