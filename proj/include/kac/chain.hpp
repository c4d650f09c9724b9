#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "kac/algebra_ops.hpp"
#include "kac/hopf.hpp"

namespace kac {

enum class Exec { Serial, Parallel };

// H together with its dual and the Fourier transform, shared by everything built on H.
template <class F>
struct HopfPair {
  KacAlgebra<F> H, D;
  Mat<F> fourier, fourier_inv;  // H -> H*
  // Slot p carries H when p is odd and H* when p is even, for negative p as well.
  const KacAlgebra<F>& slot(int p) const { return (p % 2 != 0) ? H : D; }
  // Trace functional of a slot: phi on H slots, evaluation at h on H* slots.
  const Vec<F>& slot_trace(int p) const { return (p % 2 != 0) ? H.phi : H.h; }
};

template <class F>
std::shared_ptr<const HopfPair<F>> make_pair(const KacAlgebra<F>& H);

// Finite-dimensional *-algebra with a trace, on a fixed basis.
template <class F>
class FiniteAlgebra {
 public:
  virtual ~FiniteAlgebra() = default;
  virtual size_t dim() const = 0;
  virtual SVec<F> mul(const SVec<F>& a, const SVec<F>& b) const = 0;
  virtual SVec<F> unit() const = 0;
  virtual SVec<F> star(const SVec<F>& a) const = 0;
  virtual F trace(const SVec<F>& a) const = 0;
};

// Iterated crossed product H_[lo,hi]; basis = pure tensors, first slot most significant.
// (A x| x)(B x| y) = A (x_1 . B) x| x_2 y where x acts on the last slot of B by f . x = f(x_2) x_1.
template <class F>
class Chain : public FiniteAlgebra<F> {
 public:
  Chain(std::shared_ptr<const HopfPair<F>> hp, int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int length() const { return L_; }
  int n() const { return n_; }
  const HopfPair<F>& pair() const { return *hp_; }
  std::shared_ptr<const HopfPair<F>> pair_ptr() const { return hp_; }
  const KacAlgebra<F>& slot(int p) const { return hp_->slot(p); }

  size_t dim() const override { return dims_[L_]; }
  SVec<F> mul(const SVec<F>& a, const SVec<F>& b) const override;
  SVec<F> unit() const override;
  SVec<F> star(const SVec<F>& a) const override;
  F trace(const SVec<F>& a) const override;

  // Product of two basis elements; memoized, safe for concurrent callers.
  const SVec<F>& mulb(uint32_t I, uint32_t J) const { return mul_level(L_ - 1, I, J); }

  std::vector<int> digits(uint32_t I) const;
  uint32_t index(const std::vector<int>& d) const;
  // Tensor of slot vectors, one per slot lo..hi.
  SVec<F> pure(const std::vector<Vec<F>>& parts) const;
  // Y given on the slots listed (each entry of Y indexed by its own mixed radix over those slots,
  // first listed slot most significant); units elsewhere.
  SVec<F> slot_embed(const SVec<F>& Y, const std::vector<int>& slots) const;
  // Element of a sub-chain [a,b] placed in this chain with units elsewhere.
  SVec<F> embed_from(const Chain& sub, const SVec<F>& X) const;
  // Contract slots outside [a,b] with the slot traces (trace-preserving expectation when [a,b] is
  // a prefix or suffix, since the trace is a product).
  SVec<F> contract_to(const Chain& sub, const SVec<F>& X) const;

 private:
  const SVec<F>& mul_level(int t, uint32_t I, uint32_t J) const;
  SVec<F> compute_level(int t, uint32_t I, uint32_t J) const;
  const SVec<F>& star_basis(uint32_t I) const;

  std::shared_ptr<const HopfPair<F>> hp_;
  int lo_, hi_, L_, n_;
  std::vector<size_t> dims_;  // dims_[t] = n^t
  struct Memo {
    mutable std::shared_mutex mu;
    std::unordered_map<uint64_t, SVec<F>> map;
  };
  std::unique_ptr<Memo[]> memo_;
  mutable Memo star_memo_;
  mutable std::once_flag prefix_once_;
  mutable std::unique_ptr<Chain> prefix_;
};

// Algebra A (x) B with componentwise product, star and product trace; basis i * dim B + j.
template <class F>
class TensorAlgebra : public FiniteAlgebra<F> {
 public:
  TensorAlgebra(std::shared_ptr<const FiniteAlgebra<F>> a, std::shared_ptr<const FiniteAlgebra<F>> b)
      : a_(std::move(a)), b_(std::move(b)) {}
  size_t dim() const override { return a_->dim() * b_->dim(); }
  SVec<F> mul(const SVec<F>& x, const SVec<F>& y) const override;
  SVec<F> unit() const override;
  SVec<F> star(const SVec<F>& x) const override;
  F trace(const SVec<F>& x) const override;
  const FiniteAlgebra<F>& left() const { return *a_; }
  const FiniteAlgebra<F>& right() const { return *b_; }
  SVec<F> kron(const SVec<F>& x, const SVec<F>& y) const;

 private:
  std::shared_ptr<const FiniteAlgebra<F>> a_, b_;
};

// Action of H on an algebra A: act(i,j,k) = coefficient of e_k in e_i . e_j.
template <class F>
struct HopfAction {
  SparseTensor3<F> act;
};

// Finite algebra given by structure constants.
template <class F>
struct StructAlgebra {
  SparseTensor3<F> mult;
  Vec<F> unit;
};

// f . x = f(x_2) x_1, the action of H* on H.
template <class F>
HopfAction<F> dual_action(const KacAlgebra<F>& H);

template <class F>
AxiomReport verify_module_algebra(const KacAlgebra<F>& K, const StructAlgebra<F>& A, const HopfAction<F>& act);

// A x| K with (a x| x)(b x| y) = a (x_1 . b) x| x_2 y; basis a * dim K + x.
template <class F>
StructAlgebra<F> smash_product(const StructAlgebra<F>& A, const KacAlgebra<F>& K, const HopfAction<F>& act);

template <class F>
StructAlgebra<F> as_struct(const KacAlgebra<F>& H) {
  return {H.mult, H.unit};
}

// Trace of left multiplication by X.
template <class F>
F regular_trace(const FiniteAlgebra<F>& A, const SVec<F>& X);

// Reverse the slots of X in src and apply S in each; dst must have the same length and
// dst.lo must have the parity of src.hi.
template <class F>
SVec<F> flip_prime(const Chain<F>& src, const Chain<F>& dst, const SVec<F>& X);

struct ParityMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Embedding H_[-l,p+s] -> H_[-l,-1] (x) H_[p,3p+s].
template <class F>
class PsiEmbedding {
 public:
  PsiEmbedding(std::shared_ptr<const HopfPair<F>> hp, int l, int s, int p);
  const Chain<F>& source() const { return *src_; }
  const TensorAlgebra<F>& target() const { return *tgt_; }
  std::shared_ptr<const TensorAlgebra<F>> target_ptr() const { return tgt_; }
  SVec<F> operator()(const SVec<F>& X) const;
  // The closed-form conditional expectation onto the image, returned in source coordinates.
  SVec<F> closed_form_expectation(const SVec<F>& Z) const;

 private:
  std::shared_ptr<const HopfPair<F>> hp_;
  int l_, s_, p_;
  std::shared_ptr<const Chain<F>> src_, left_, right_;
  std::shared_ptr<const TensorAlgebra<F>> tgt_;
};

}  // namespace kac
