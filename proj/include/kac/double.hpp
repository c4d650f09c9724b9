#pragma once

#include <memory>
#include <vector>

#include "kac/chain.hpp"

namespace kac {

// D(H) on H* (x) H, basis f * n + x:
// (f x x)(g x y) = g_1(x_1) g_3(Sx_3) (f g_2 x y x_2), Delta(f x x) = (f_2 x x_2) (x) (f_1 x x_1),
// S(f x x) = f_1(Sx_1) f_3(x_3) (S^-1 f_2 x Sx_2), (f x x)* = (eps x x*)(f* x 1).
template <class F>
KacAlgebra<F> drinfeld_double(const HopfPair<F>& hp);

// D(H)* on H* (x) H, basis f * n + x, paired with D(H) by <f x x, g x y> = f(y) g(x); the star is
// the dual star a*(u) = conj(a(S(u)*)).
template <class F>
KacAlgebra<F> double_dual(const HopfPair<F>& hp);

// The four closed formulas on H* (x) H*, basis g * n + f; unit solved, star transported from
// double_dual through Id (x) F^-1.
template <class F>
KacAlgebra<F> double_dual_hstar_basis(const HopfPair<F>& hp);

// Id (x) F^-1 : H* (x) H* -> H* (x) H.
template <class F>
Mat<F> id_tensor_fourier_inv(const HopfPair<F>& hp);

// Structure maps of K pulled back along the invertible T: x -> T^-1 K(T x).
template <class F>
KacAlgebra<F> transport(const KacAlgebra<F>& K, const Mat<F>& T);

template <class F>
KacAlgebra<F> opposite(const KacAlgebra<F>& K);

// Entrywise comparison of multiplication, unit, comultiplication, counit, antipode, star and both
// integrals.
template <class F>
AxiomReport compare_structures(const KacAlgebra<F>& A, const KacAlgebra<F>& B);

// Pairing identities between D(H) and D(H)*: each structure map is the transpose of the dual one.
template <class F>
AxiomReport pairing_check(const KacAlgebra<F>& dbl, const KacAlgebra<F>& dual_dbl);

// The commutant S of the middle H in H*_0 x| H_1 x| H*_2, with the opposite multiplication, on the
// coordinates k * n + f of X(f, k) = f_1 Sk_3 Sf_3 x| F^-1(f_2 k_2) x| Sk_1.
template <class F>
struct StarQ2 {
  KacAlgebra<F> K;
  // Embedding checks: products, antipode images and stars of X(f, k) computed in the ambient chain
  // land on the parametrized span and agree with the coordinate formulas.
  AxiomReport embedding;
  // Whether the involution formula without S on the third f leg agrees with the chain star.
  bool literal_involution_matches = false;
};

template <class F>
StarQ2<F> star_q2_structure(std::shared_ptr<const HopfPair<F>> hp);

// nu(g x f) = X(f, g) intertwines double_dual_hstar_basis with opposite multiplication and star_q2.
template <class F>
AxiomReport nu_iso_check(std::shared_ptr<const HopfPair<F>> hp);

// Center dimension of K through its left regular representation.
int regular_center_dim(const KacAlgebra<cplx>& K, uint64_t seed);

}  // namespace kac
