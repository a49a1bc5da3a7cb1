#pragma once

// Extended-precision scalars used wherever matrix entries or algebra
// residuals are computed. Entries are rounded to double once, on output.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>

namespace qosc {

using Precise = boost::multiprecision::cpp_bin_float_quad;
using PreciseComplex = boost::multiprecision::cpp_complex_quad;

inline PreciseComplex make_complex(const Precise& re, const Precise& im = 0) { return PreciseComplex(re, im); }

inline std::complex<double> to_double(const PreciseComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline double to_double(const Precise& x) { return static_cast<double>(x); }

inline bool is_exact_zero(const PreciseComplex& z) { return z.real() == 0 && z.imag() == 0; }
inline bool is_exact_zero(const std::complex<double>& z) { return z.real() == 0.0 && z.imag() == 0.0; }

/// sin(pi * num / den) with the angle reduced exactly over the integers
/// before any floating-point work. Angles that are equal as rationals, or
/// that differ by a symmetry of |sin|, give bitwise-identical magnitudes.
Precise sin_pi(long long num, long long den);

/// cos(pi * num / den), same reduction policy as sin_pi.
Precise cos_pi(long long num, long long den);

/// exp(i * pi * num / den).
inline PreciseComplex exp_i_pi(long long num, long long den) { return make_complex(cos_pi(num, den), sin_pi(num, den)); }

}  // namespace qosc
