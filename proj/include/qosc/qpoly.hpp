#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qosc {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficient k multiplies q^k. Trailing zero coefficients are always
/// trimmed, so the zero polynomial has no stored coefficients and two
/// polynomials are equal iff their coefficient sequences are equal.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);
  QPoly(std::initializer_list<long long> coeffs);

  static QPoly constant(const BigInt& c);
  /// The monomial c*q^k.
  static QPoly monomial(std::size_t k, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^k; zero beyond the degree.
  BigInt coefficient(std::size_t k) const;
  const BigInt& leading() const { return coeffs_.back(); }

  /// Value at q = 1, i.e. the sum of the coefficients.
  BigInt value_at_one() const;
  /// Multiplication by q^k.
  QPoly shifted(std::size_t k) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(QPoly a);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Human-readable form, e.g. "1 + q + 2q^2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);

/// Quotient of an exact division over the integers.
///
/// Throws NotDivisible when the remainder is nonzero or a quotient
/// coefficient is not integral, and std::invalid_argument when den is zero.
QPoly qpoly_divide_exact(const QPoly& num, const QPoly& den);

}  // namespace qosc
