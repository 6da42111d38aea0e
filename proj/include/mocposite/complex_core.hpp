#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "mocposite/errors.hpp"

namespace mocposite {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* where) {
  if (!is_finite(z)) throw DomainError(std::string(where) + ": non-finite argument");
}

// Collapses a signed-zero imaginary part to +0.0 so that points on the
// negative real axis always take the upper-edge value of a cut.
inline Complex upper_edge(Complex z) {
  if (z.imag() == 0.0) return Complex(z.real(), 0.0);
  return z;
}

// Principal argument in (-pi, pi]; the negative real axis maps to +pi.
inline double principal_arg(Complex z) {
  require_finite(z, "principal_arg");
  if (z == Complex(0.0, 0.0)) throw DomainError("principal_arg: zero argument");
  if (z.imag() == 0.0) return z.real() > 0.0 ? 0.0 : kPi;
  return std::atan2(z.imag(), z.real());
}

// Principal square root: Re >= 0, and Im > 0 on the branch cut edge
// (so sqrt(-4) = 2i, never -2i).  sqrt(0) = 0.
inline Complex principal_sqrt(Complex z) {
  require_finite(z, "principal_sqrt");
  return std::sqrt(upper_edge(z));
}

// Principal logarithm log|z| + i*principal_arg(z); imaginary part in (-pi, pi].
inline Complex principal_log(Complex z) {
  require_finite(z, "principal_log");
  if (z == Complex(0.0, 0.0)) throw DomainError("principal_log: zero argument");
  return Complex(std::log(std::abs(z)), principal_arg(z));
}

// Comparison idiom used everywhere: |a - b| <= atol + rtol*|b|.
struct Tolerance {
  double atol = 1e-12;
  double rtol = 1e-12;
};

inline bool approx_equal(Complex a, Complex b, Tolerance tol = {}) {
  return std::abs(a - b) <= tol.atol + tol.rtol * std::abs(b);
}

inline bool approx_equal(double a, double b, Tolerance tol = {}) {
  return std::abs(a - b) <= tol.atol + tol.rtol * std::abs(b);
}

}  // namespace mocposite
