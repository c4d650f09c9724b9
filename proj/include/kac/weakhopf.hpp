#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "kac/double.hpp"
#include "kac/qspace.hpp"

namespace kac {

// Symmetric separability element sum_i b_i (x) b^i, {b^i} dual to {b_i} under (x, y) -> tr_L(xy).
template <class F>
struct Separability {
  std::vector<std::pair<SVec<F>, SVec<F>>> terms;
  AxiomReport checks;  // m(e) = 1, (a (x) 1) e = e (1 (x) a), flip(e) = e
};

template <class F>
Separability<F> separability_element(const FiniteAlgebra<F>& A);

// z_R, omega_R, omega_L, omega as elements of the Q^m_2 chain; scale is the scalar of z_R.
template <class F>
struct OmegaData {
  SVec<F> z_r, omega_r, omega_l, omega;
  F scale{0};
  AxiomReport checks;
};

template <class F>
OmegaData<F> omega_elements(std::shared_ptr<const HopfPair<F>> hp, int m);

struct CounitNotUnique : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CounitInconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite weak Hopf *-algebra given by its structure maps on basis elements.
template <class F>
class WeakHopfAlgebra {
 public:
  virtual ~WeakHopfAlgebra() = default;
  virtual size_t dim() const = 0;
  virtual const SVec<F>& mulb(uint32_t i, uint32_t j) const = 0;
  // Delta(e_i) indexed p * dim + q.
  virtual const SVec<F>& comulb(uint32_t i) const = 0;
  virtual const SVec<F>& antipodeb(uint32_t i) const = 0;
  virtual const SVec<F>& starb(uint32_t i) const = 0;
  virtual const SVec<F>& unit() const = 0;
  virtual const Vec<F>& counit() const = 0;
  // Faithful positive trace used for the positivity check; empty when not available.
  virtual Vec<F> trace_functional() const { return {}; }

  SVec<F> mul(const SVec<F>& a, const SVec<F>& b) const;
  SVec<F> comul(const SVec<F>& a) const;
  SVec<F> antipode(const SVec<F>& a) const;
  SVec<F> star(const SVec<F>& a) const;
  F eps(const SVec<F>& a) const { return eval(counit(), a); }
};

// A Kac algebra seen as a weak Hopf algebra.
template <class F>
class KacAsWeak : public WeakHopfAlgebra<F> {
 public:
  explicit KacAsWeak(KacAlgebra<F> K);
  size_t dim() const override { return K_.n; }
  const SVec<F>& mulb(uint32_t i, uint32_t j) const override { return mul_[i * K_.n + j]; }
  const SVec<F>& comulb(uint32_t i) const override { return comul_[i]; }
  const SVec<F>& antipodeb(uint32_t i) const override { return S_[i]; }
  const SVec<F>& starb(uint32_t i) const override { return st_[i]; }
  const SVec<F>& unit() const override { return unit_; }
  const Vec<F>& counit() const override { return K_.counit; }
  Vec<F> trace_functional() const override { return K_.phi; }

 private:
  KacAlgebra<F> K_;
  std::vector<SVec<F>> mul_, comul_, S_, st_;
  SVec<F> unit_;
};

struct CounitSolution {
  bool unique = false;
  size_t equations = 0;
  size_t rank = 0;
};

// Solves (eps (x) id) Delta = id = (id (x) eps) Delta for eps. Throws CounitInconsistent when the
// system has no solution and CounitNotUnique when it has more than one.
template <class F>
Vec<F> counit_solve(const WeakHopfAlgebra<F>& W, CounitSolution* info = nullptr);

// K_m = A (x) D (x) B with A, B the chain windows left and right of the nu block of Q^m_2 and
// D = D(H)*op on the coordinates of double_dual_hstar_basis. Multiplication, comultiplication and
// antipode follow the closed formulas; the star is transported from the chain through psi and the
// counit is solved.
template <class F>
class WeakKac : public WeakHopfAlgebra<F> {
 public:
  WeakKac(std::shared_ptr<const HopfPair<F>> hp, int m, Exec exec = Exec::Parallel);

  int m() const { return m_; }
  size_t dim() const override { return dim_; }
  const SVec<F>& mulb(uint32_t i, uint32_t j) const override;
  const SVec<F>& comulb(uint32_t i) const override { return comul_[i]; }
  const SVec<F>& antipodeb(uint32_t i) const override { return S_[i]; }
  const SVec<F>& starb(uint32_t i) const override { return st_[i]; }
  const SVec<F>& unit() const override { return unit_; }
  const Vec<F>& counit() const override { return counit_; }
  Vec<F> trace_functional() const override;
  const CounitSolution& counit_info() const { return counit_info_; }

  const HopfPair<F>& pair() const { return *hp_; }
  std::shared_ptr<const HopfPair<F>> pair_ptr() const { return hp_; }
  const Chain<F>& ambient() const { return *amb_; }
  const Chain<F>& left() const { return *A_; }
  const Chain<F>& right() const { return *B_; }
  const KacAlgebra<F>& middle() const { return dr_; }
  const Separability<F>& separability() const { return sep_; }
  size_t dim_a() const { return na_; }

  uint32_t index(uint32_t a, uint32_t d, uint32_t b) const { return static_cast<uint32_t>((a * nd_ + d) * na_ + b); }
  // a (x) d (x) b for vectors on the three factors.
  SVec<F> tensor(const SVec<F>& a, const SVec<F>& d, const SVec<F>& b) const;
  SVec<F> psi(const SVec<F>& x) const;
  // Inverse of psi; the part of y outside the image is recorded in off.
  SVec<F> psi_inv(const SVec<F>& y, Defect<F>& off) const;

 private:
  void build_comult(uint32_t x);
  SVec<F> act_last(const SVec<F>& k, const SVec<F>& a) const;
  SVec<F> rho_first(uint32_t k, const SVec<F>& b) const;

  std::shared_ptr<const HopfPair<F>> hp_;
  int m_;
  size_t na_, nd_, dim_;
  std::shared_ptr<Chain<F>> amb_, A_, B_, sepc_;
  KacAlgebra<F> dr_;
  Separability<F> sep_;
  std::vector<SVec<F>> nus_, vprime_, comul_, S_, st_;
  SVec<F> unit_;
  Vec<F> counit_;
  CounitSolution counit_info_;
  mutable std::mutex mu_;
  mutable std::unordered_map<uint64_t, SVec<F>> mul_;
  std::unique_ptr<SparseRREF<F>> nu_rref_;
};

struct WeakCheckOptions {
  size_t exhaustive_limit = 256;  // exhaustive pairs and triples up to this dimension
  size_t samples = 500;           // seeded samples per axiom above it
  uint64_t seed = 1;
};

template <class F>
AxiomReport verify_weak_hopf_axioms(const WeakHopfAlgebra<F>& W, const WeakCheckOptions& opt = {});

template <class F>
bool antipode_involutive(const WeakHopfAlgebra<F>& W);

// psi is a linear bijection onto Q^m_2, unital, multiplicative for the opposite chain product,
// a *-map, and carries S to the reversal of slots with S in each.
template <class F>
AxiomReport psi_iso_check(const WeakKac<F>& K, const WeakCheckOptions& opt = {});

// Delta(1) = u (x) Sv; padded nu elements; the factored form Delta(1)(X_nu1 X_1 (x) X_3 X_nu2);
// the Sweedler expansion of Delta in the chain.
template <class F>
AxiomReport special_comult_check(const WeakKac<F>& K, const WeakCheckOptions& opt = {});

// The solved counit on 1 (x) (g (x) f) (x) 1 is proportional to f(h) for every g.
template <class F>
bool counit_factor_check(const WeakKac<F>& K);

}  // namespace kac
