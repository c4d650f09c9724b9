#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "kac/cyclo.hpp"

namespace kac {

enum class Backend { Exact, Float };

struct FloatTolerance {
  double eps = 1e-9;    // equality threshold for verification residuals
  double drop = 1e-12;  // entries below this are dropped from sparse data
};

FloatTolerance& float_tolerance();

template <class F>
struct Scalar;

template <>
struct Scalar<Cyclo> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static bool zero(const Cyclo& x) { return x.is_zero(); }
  static bool negligible(const Cyclo& x) { return x.is_zero(); }
  static Cyclo conj(const Cyclo& x) { return x.conj(); }
  static cplx to_c(const Cyclo& x) { return x.to_complex(); }
  static double mag(const Cyclo& x) { return std::abs(x.to_complex()); }
  static Cyclo from(const Cyclo& x) { return x; }
  static Cyclo inv(const Cyclo& x) { return x.inverse(); }
  // Pivot preference for elimination: any nonzero entry; rational entries are cheaper.
  static double pivot_score(const Cyclo& x) { return x.is_rational() ? 2.0 : 1.0; }
};

template <>
struct Scalar<cplx> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static bool zero(const cplx& x) { return std::abs(x) <= float_tolerance().drop; }
  static bool negligible(const cplx& x) { return std::abs(x) <= float_tolerance().eps; }
  static cplx conj(const cplx& x) { return std::conj(x); }
  static cplx to_c(const cplx& x) { return x; }
  static double mag(const cplx& x) { return std::abs(x); }
  static cplx from(const Cyclo& x) { return x.to_complex(); }
  static cplx inv(const cplx& x) { return 1.0 / x; }
  static double pivot_score(const cplx& x) { return std::abs(x); }
};

template <class F>
F scalar_from(const Cyclo& x) {
  return Scalar<F>::from(x);
}

template <class F>
F scalar_from_int(long v) {
  return Scalar<F>::from(Cyclo(v));
}

}  // namespace kac
