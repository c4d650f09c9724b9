#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace kac {

using cplx = std::complex<double>;

// Element of Q(zeta_M) in the power basis 1, z, ..., z^(phi(M)-1) reduced modulo the
// M-th cyclotomic polynomial. Elements with all non-constant coefficients zero are
// stored with conductor 1 so that rational arithmetic takes a fast path.
class Cyclo {
 public:
  Cyclo() = default;
  Cyclo(long v) : q_(v) {}
  Cyclo(const mpq_class& v) : q_(v) { q_.canonicalize(); }
  Cyclo(long num, long den) : q_(num, den) { q_.canonicalize(); }

  static Cyclo zeta(int M, long e);
  static Cyclo parse(const std::string& text, int conductor);

  int conductor() const { return M_; }
  bool is_rational() const { return M_ == 1; }
  bool is_zero() const { return M_ == 1 && q_ == 0; }
  const mpq_class& rational() const { return q_; }
  // Coefficients in the power basis of Q(zeta_M); length phi(M).
  std::vector<mpq_class> coeffs() const;
  // Representation lifted to conductor L (M must divide L).
  std::vector<mpq_class> coeffs_at(int L) const;

  Cyclo conj() const;
  Cyclo inverse() const;
  cplx to_complex() const;
  std::string str() const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }
  Cyclo operator-() const;

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

 private:
  static Cyclo from_coeffs(int M, std::vector<mpq_class> c);
  void normalize();

  int M_ = 1;
  mpq_class q_;
  std::vector<mpq_class> c_;
};

int euler_phi(int M);
// Integer coefficients of the M-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int M);
// Positive square root of n inside a cyclotomic field, built from quadratic Gauss sums.
Cyclo sqrt_integer_in_cyclotomic(long n);

}  // namespace kac
