#pragma once

#include <memory>
#include <vector>

#include "kac/subspace.hpp"

namespace kac {

// Where a relative commutant lives: X in H_[x_lo,x_hi] commuting with Delta_{k-1}(x) placed on slots,
// computed inside the ambient chain H_[amb_lo,amb_hi] that contains both.
struct QGeometry {
  int m = 0, level = 0, k = 0;
  int x_lo = 0, x_hi = -1;
  int amb_lo = 0, amb_hi = -1;
  std::vector<int> slots;

  int x_length() const { return x_hi - x_lo + 1; }
  int amb_length() const { return amb_hi - amb_lo + 1; }
};

// Q^m_n, the n-th relative commutant of the tower.
QGeometry q_geometry(int m, int level);
// The flipped tower Q~^m_n.
QGeometry qtilde_geometry(int m, int level);
// Commutant of x on slot m (m odd) or m-1 (m even) inside the right half.
QGeometry q12_geometry(int m);
// Commutant of eps x| x x| eps inside H* x| H x| H*.
QGeometry s_geometry();

template <class F>
struct QSpace {
  QGeometry geo;
  std::shared_ptr<const Chain<F>> X, amb;
  Subspace<F> space;  // in X coordinates
  Defect<F> residual;  // full-basis commutation check

  size_t dim() const { return space.size(); }
};

// Ambient dimension n^(amb length); callers compare this against their budget.
size_t ambient_dim(const QGeometry& g, int n);

template <class F>
QSpace<F> solve_qspace(std::shared_ptr<const HopfPair<F>> hp, const QGeometry& g, Exec exec = Exec::Parallel);

// Delta_{k-1}(x) for every basis element x, placed on the geometry slots of the ambient chain.
template <class F>
std::vector<SVec<F>> slot_constraints(const Chain<F>& amb, const QGeometry& g, const std::vector<int>& which);

// Projection X -> Delta(h_1) X Delta(S h_2), contracted back onto X when the slots leave X.
template <class F>
class AdjointIntegral {
 public:
  AdjointIntegral(std::shared_ptr<const HopfPair<F>> hp, const QGeometry& g);
  SVec<F> operator()(const SVec<F>& X) const;
  const Chain<F>& x_chain() const { return *X_; }
  const Chain<F>& amb_chain() const { return *amb_; }

 private:
  QGeometry g_;
  std::shared_ptr<const Chain<F>> X_, amb_;
  std::vector<std::pair<SVec<F>, SVec<F>>> terms_;
  bool contract_;
};

// Image of AdjointIntegral, i.e. its fixed space, spanned by images of the X basis.
template <class F>
Subspace<F> adjoint_integral_image(const AdjointIntegral<F>& P, Exec exec = Exec::Parallel);

// Embedding Q~_k -> Q~_{k+1}: units on the padding slots, shift by 2m when k is odd.
template <class F>
SVec<F> embed_qtilde(const Chain<F>& from, const Chain<F>& to, int m, int k, const SVec<F>& X);

// nu(g (x) f) = f_1 S g_3 S f_3 x| F^-1(f_2 g_2) x| S g_1 in H_[0,2], column g * n + f.
template <class F>
std::vector<SVec<F>> nu_elements(const HopfPair<F>& hp);

// Q^m_2 from free slots around nu on the three slots centred at the constraint slot.
template <class F>
std::vector<SVec<F>> q2_parametrized(const HopfPair<F>& hp, int m);

// Generators of H_[a,b] inside chain c: generating sets of each slot algebra on their slot.
template <class F>
std::vector<SVec<F>> chain_generators(const Chain<F>& c, int a, int b);

// The subalgebra H_[a,b] placed inside chain c.
template <class F>
Subspace<F> subchain_span(const Chain<F>& c, int a, int b);

}  // namespace kac
