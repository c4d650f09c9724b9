#pragma once

#include <string>
#include <vector>

#include "kac/linalg.hpp"
#include "kac/report.hpp"
#include "kac/tensor.hpp"

namespace kac {

template <class F>
using Vec = std::vector<F>;

// Finite-dimensional Kac algebra given by structure constants.
// mult(i,j,k): coefficient of e_k in e_i e_j.  comult(i,j,k): coefficient of e_j (x) e_k in Delta(e_i).
// S: column j holds S(e_j).  star: conjugate-linear, x* = star * conj(x).
template <class F>
struct KacAlgebra {
  std::string name;
  int n = 0;
  std::vector<std::string> labels;
  SparseTensor3<F> mult;
  Vec<F> unit;
  SparseTensor3<F> comult;
  Vec<F> counit;
  Mat<F> S;
  Mat<F> star;
  Vec<F> h;    // idempotent two-sided integral
  Vec<F> phi;  // idempotent integral of the dual, as a functional on H
  F delta;     // positive square root of n

  Vec<F> e(int i) const {
    Vec<F> v(n, F(0));
    v[i] = F(1);
    return v;
  }
  Vec<F> mul(const Vec<F>& a, const Vec<F>& b) const;
  // Delta(a) as a dense n*n vector indexed j*n + k.
  Vec<F> comul(const Vec<F>& a) const;
  Vec<F> antipode(const Vec<F>& a) const { return S * a; }
  Vec<F> adjoint(const Vec<F>& a) const;
  F eps(const Vec<F>& a) const;
};

// Thrown by loaders and builders when an input fails its structural checks.
struct AxiomViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidGroupTable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IntegralNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
AxiomReport verify_kac_axioms(const KacAlgebra<F>& H);

// Solves for the integrals and delta; used by every builder.
template <class F>
void find_integrals(KacAlgebra<F>& H);

template <class F>
KacAlgebra<F> dual(const KacAlgebra<F>& H);

// Fourier transform H -> H* as a matrix: F(a) = delta phi_1(a) phi_2.
template <class F>
Mat<F> fourier_matrix(const KacAlgebra<F>& H);

// Delta_k(x) in the (k+1)-fold tensor power, first leg most significant.
template <class F>
Vec<F> sweedler_delta_k(const KacAlgebra<F>& H, const Vec<F>& x, int k);

// Builds a Kac algebra from raw tensors, solving for the unit when it is empty.
template <class F>
KacAlgebra<F> make_kac(std::string name, SparseTensor3<F> mult, Vec<F> unit, SparseTensor3<F> comult, Vec<F> counit,
                       Mat<F> S, Mat<F> star);

template <class F>
KacAlgebra<F> group_algebra(const std::vector<std::vector<int>>& table, const std::string& name = "group");
template <class F>
KacAlgebra<F> function_algebra(const std::vector<std::vector<int>>& table, const std::string& name = "fn");

KacAlgebra<cplx> to_float(const KacAlgebra<Cyclo>& H);

std::vector<std::vector<int>> cyclic_group_table(int n);
std::vector<std::vector<int>> klein_group_table();
std::vector<std::vector<int>> symmetric3_table();
void validate_group_table(const std::vector<std::vector<int>>& table);

// Names: group:Z2 group:Z3 group:Z4 group:Z2xZ2 group:S3 and fn:<same>.
KacAlgebra<Cyclo> builtin_algebra(const std::string& spec);
std::vector<std::string> builtin_names();

// Text structure-constant format; see README for the grammar.
KacAlgebra<Cyclo> load_algebra(const std::string& path);
KacAlgebra<Cyclo> parse_algebra(const std::string& text);
std::string write_algebra(const KacAlgebra<Cyclo>& H);

}  // namespace kac
