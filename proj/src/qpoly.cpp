#include "qosc/qpoly.hpp"

#include "qosc/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qosc {

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(std::size_t k, const BigInt& c) {
  std::vector<BigInt> coeffs(k + 1);
  coeffs[k] = c;
  return QPoly(std::move(coeffs));
}

BigInt QPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt QPoly::value_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> coeffs(k, BigInt(0));
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(coeffs));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& other) {
  *this = *this * other;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] += a.coeffs_[i] * b.coeffs_[k];
  }
  return QPoly(std::move(out));
}

QPoly operator-(QPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) out << mag;
    if (k >= 1) out << "q";
    if (k >= 2) out << "^" << k;
    first = false;
  }
  return out.str();
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) { return a + b; }

QPoly qpoly_mul(const QPoly& a, const QPoly& b) { return a * b; }

QPoly qpoly_divide_exact(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("qpoly_divide_exact: division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree()) throw NotDivisible("qpoly_divide_exact: numerator degree below denominator degree");

  std::vector<BigInt> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dn = d.size();
  std::vector<BigInt> quot(rem.size() - dn + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt& top = rem[i + dn - 1];
    if (top == 0) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(top, d.back(), q, r);
    if (r != 0) throw NotDivisible("qpoly_divide_exact: non-integral quotient coefficient");
    quot[i] = q;
    for (std::size_t k = 0; k < dn; ++k) rem[i + k] -= q * d[k];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
    throw NotDivisible("qpoly_divide_exact: nonzero remainder");
  return QPoly(std::move(quot));
}

}  // namespace qosc
