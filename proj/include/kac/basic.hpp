#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "kac/bratteli.hpp"
#include "kac/qspace.hpp"

namespace kac {

struct DimensionBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
CMat to_cmat(const Mat<F>& M);

// Left ideal c * p with p the slot-integral idempotent on the longest even-length prefix
// (units on the remaining slot); a faithful representation of small dimension.
template <class F>
class IdealRep {
 public:
  explicit IdealRep(const Chain<F>& c, Exec exec = Exec::Parallel);
  size_t dim() const { return N_; }
  CMat operator()(const SVec<F>& X) const;

 private:
  size_t N_ = 0;
  std::vector<SVec<F>> rho_;  // rho(e_I) flattened row * N + col
};

// Square matrices over F as a FiniteAlgebra with the matrix trace; index row * d + col.
template <class F>
class MatAlgebra : public FiniteAlgebra<F> {
 public:
  explicit MatAlgebra(int d) : d_(d) {}
  size_t dim() const override { return static_cast<size_t>(d_) * d_; }
  SVec<F> mul(const SVec<F>& a, const SVec<F>& b) const override;
  SVec<F> unit() const override;
  SVec<F> star(const SVec<F>& a) const override;
  F trace(const SVec<F>& a) const override;

 private:
  int d_;
};

template <class F>
SVec<F> flatten(const Mat<F>& M);

// Basic construction of A in B, both given as bases of subalgebras of amb, realized on L^2(B, tr).
template <class F>
class GnsBasic {
 public:
  GnsBasic(const FiniteAlgebra<F>& amb, const std::vector<SVec<F>>& A, const std::vector<SVec<F>>& B);

  size_t dim_a() const { return a_coords_.size(); }
  size_t dim_b() const { return b_.size(); }
  // Dimension of span(B e B), which is the algebra generated by B and e.
  size_t dim() const { return rref_.rank(); }
  const std::vector<Mat<F>>& lambda() const { return lambda_; }
  const Mat<F>& jones() const { return e_; }
  // Independent elements x e y spanning the basic construction.
  const std::vector<Mat<F>>& algebra_basis() const { return basis_; }

  // e^2 = e, [e, A] = 0, e x e = E(x) e, E(1) = 1, tr E = tr, E(a x a') = a E(x) a'.
  AxiomReport relations() const;
  // lambda(B) lies in span(B e B) and the functional x e y -> tr(y x) is well defined.
  bool contains_b() const { return contains_b_; }
  bool well_defined() const { return rref_.inconsistent() == 0; }
  // t0(lambda(b)) / tr(b) for the functional t0(x e y) = tr(y x); the Markov modulus.
  F measured_modulus() const { return modulus_; }
  // tr(x e) = modulus^-1 tr(x) for the normalized extension, on every basis element x of B.
  Defect<F> markov(const F& modulus) const;
  // Span closure of lambda(generators of B) and e under products; for small cases.
  size_t generated_dim() const;

 private:
  std::vector<F> coords_b(const SVec<F>& x) const;

  const FiniteAlgebra<F>& amb_;
  std::vector<SVec<F>> b_;
  SparseRREF<F> b_rref_;
  std::vector<std::vector<F>> a_coords_;
  std::vector<F> tr_b_;
  std::vector<Mat<F>> lambda_, basis_;
  Mat<F> e_;
  SparseRREF<F> rref_;
  std::vector<F> t0_b_;
  bool contains_b_ = false;
  F modulus_{0};
};

// Generic check that C is the basic construction of A in B with Jones projection f, everything
// inside amb: f projection, f commutes with A, f x f = E_A(x) f for x in B, x -> x f injective on A,
// and span(B f B) = C.
template <class F>
AxiomReport verify_basic_construction(const FiniteAlgebra<F>& amb, const std::vector<SVec<F>>& A,
                                      const std::vector<SVec<F>>& B, const std::vector<SVec<F>>& C,
                                      const SVec<F>& f);

// Slot-integral candidates for the Jones projection of psi(H_[-1,1]) in H_[-1,-1] (x) H_[1,3] in
// H_[-1,3]; returns the passing slots (the candidate is delta^2-free integral in that slot).
struct JonesSearch {
  std::vector<int> passing_slots;
  std::vector<std::pair<int, std::string>> failures;
};
template <class F>
JonesSearch psi_triple_jones_search(std::shared_ptr<const HopfPair<F>> hp);

struct DepthTwoReport {
  size_t dim_q1 = 0, dim_q2 = 0, dim_q3 = 0, dim_c = 0;
  size_t ambient_q3 = 0;
  bool relations_ok = false, depth_one_ruled_out = false, dims_match = false;
  bool bratteli_ok = false, sizes_match = false, inclusion_match = false;
  bool markov_ok = false;
  std::string modulus;
  std::vector<int> c_sizes, q3_sizes;
  std::vector<std::vector<int>> incl_c, incl_q3;
  double residual = 0;
  std::string note;
  bool ok() const {
    return relations_ok && depth_one_ruled_out && dims_match && bratteli_ok && sizes_match && inclusion_match &&
           markov_ok;
  }
};

template <class F>
DepthTwoReport depth_two_check(std::shared_ptr<const HopfPair<F>> hp, int m, size_t max_dim, uint64_t seed,
                               Exec exec = Exec::Parallel);

}  // namespace kac
