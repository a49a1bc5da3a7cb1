#include "qosc/roots.hpp"

#include "qosc/errors.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <numeric>
#include <sstream>

namespace qosc {

Precise sin_pi(long long num, long long den) {
  if (den <= 0) throw std::invalid_argument("sin_pi: denominator must be positive");
  const long long period = 2 * den;
  long long a = ((num % period) + period) % period;
  int sign = 1;
  if (a >= den) {
    a -= den;
    sign = -1;
  }
  if (a == 0) return Precise(0);
  if (2 * a > den) a = den - a;
  const long long g = std::gcd(a, den);
  a /= g;
  const long long d = den / g;
  if (2 * a == d) return Precise(sign);
  Precise value = sin(boost::math::constants::pi<Precise>() * a / d);
  return sign < 0 ? Precise(-value) : value;
}

Precise cos_pi(long long num, long long den) { return sin_pi(2 * num + den, 2 * den); }

RootOfUnity::RootOfUnity(int order, int index) : order_(order), index_(index) {
  if (order < 2 || index < 1 || index > order - 1) {
    std::ostringstream msg;
    msg << "root of unity requires 1 <= j <= m-1, got m=" << order << " j=" << index;
    throw InvalidParameter(msg.str());
  }
}

ReducedRoot canonical_reduce(const RootOfUnity& root) {
  const int r = std::gcd(root.index(), root.order());
  return {root.order() / r, root.index() / r};
}

bool is_primitive(const RootOfUnity& root) { return std::gcd(root.index(), root.order()) == 1; }

RootOfUnity inverse(const RootOfUnity& root) { return RootOfUnity(root.order(), root.order() - root.index()); }

HalfRoot::HalfRoot(int order, int numerator) : order_(order), numerator_(numerator) {
  if (order < 1) throw InvalidParameter("half-root order must be positive");
}

std::complex<double> HalfRoot::squared() const { return to_double(exp_i_pi(2LL * numerator_, order_)); }

std::complex<double> HalfRoot::value() const { return to_double(exp_i_pi(numerator_, order_)); }

RealQ::RealQ(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    std::ostringstream msg;
    msg << "real deformation parameter must be finite and > 0, got " << value;
    throw InvalidParameter(msg.str());
  }
}

bool is_fundamental_root(const DeformParam& p) {
  const auto* root = std::get_if<RootOfUnity>(&p);
  return root != nullptr && root->index() == 1;
}

std::string describe(const DeformParam& p) {
  std::ostringstream out;
  if (const auto* real = std::get_if<RealQ>(&p)) {
    out.precision(17);
    out << "real q=" << real->value();
  } else {
    const auto& root = std::get<RootOfUnity>(p);
    out << "root m=" << root.order() << " j=" << root.index();
  }
  return out.str();
}

std::complex<double> eval_at_root(const QPoly& p, const RootOfUnity& root) {
  const long long m = root.order();
  const long long j = root.index();
  std::vector<BigInt> buckets(static_cast<std::size_t>(m));
  const auto& coeffs = p.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) buckets[(j * static_cast<long long>(k)) % m] += coeffs[k];

  std::complex<double> sum = 0.0;
  for (long long r = 0; r < m; ++r) {
    if (buckets[r] == 0) continue;
    const double weight = static_cast<double>(buckets[r]);
    sum += weight * std::complex<double>(to_double(cos_pi(2 * r, m)), to_double(sin_pi(2 * r, m)));
  }
  return sum;
}

bool q_number_is_zero(long n, const RootOfUnity& root) {
  if (n < 0) throw std::invalid_argument("q_number_is_zero: n must be nonnegative");
  return n > 0 && (static_cast<long long>(root.index()) * n) % root.order() == 0;
}

Precise q_bracket_precise(long x, const HalfRoot& h) {
  if (h.numerator() % h.order() == 0) throw DegenerateRoot("q-bracket denominator vanishes: angle is a multiple of pi");
  return sin_pi(static_cast<long long>(x) * h.numerator(), h.order()) / sin_pi(h.numerator(), h.order());
}

double q_bracket(long x, const HalfRoot& h) { return to_double(q_bracket_precise(x, h)); }

PreciseComplex deformation_value(const DeformParam& p) {
  if (const auto* real = std::get_if<RealQ>(&p)) return make_complex(Precise(real->value()));
  const auto& root = std::get<RootOfUnity>(p);
  return exp_i_pi(2LL * root.index(), root.order());
}

PreciseComplex q_number_value(const DeformParam& p, long n) {
  if (n < 0) throw std::invalid_argument("q_number_value: n must be nonnegative");
  if (n == 0) return make_complex(0);
  if (const auto* real = std::get_if<RealQ>(&p)) {
    const Precise q = real->value();
    Precise sum = 0;
    Precise power = 1;
    for (long k = 0; k < n; ++k) {
      sum += power;
      power *= q;
    }
    return make_complex(sum);
  }
  const auto& root = std::get<RootOfUnity>(p);
  if (q_number_is_zero(n, root)) return make_complex(0);
  const long long m = root.order();
  const long long j = root.index();
  // {n}_q = q^{(n-1)/2} [n]_{q^{1/2}}
  const Precise bracket = sin_pi(j * n, m) / sin_pi(j, m);
  return exp_i_pi(j * (n - 1), m) * bracket;
}

Precise q_number_modulus(const DeformParam& p, long n) {
  if (n < 0) throw std::invalid_argument("q_number_modulus: n must be nonnegative");
  if (std::holds_alternative<RealQ>(p)) return q_number_value(p, n).real();
  const auto& root = std::get<RootOfUnity>(p);
  return abs(sin_pi(static_cast<long long>(root.index()) * n, root.order())) / abs(sin_pi(root.index(), root.order()));
}

bool BracketReport::passed() const {
  for (const auto& rel : relations)
    if (!(rel.max_residual <= tolerance)) return false;
  return true;
}

BracketReport verify_bracket_relations(int m_max, double tolerance) {
  if (m_max < 2) throw std::invalid_argument("verify_bracket_relations: m_max must be at least 2");
  BracketRelationResidual complement{"complement", 0.0, 0};
  BracketRelationResidual fundamental{"complement_fundamental", 0.0, 0};
  BracketRelationResidual inv{"inverse", 0.0, 0};
  BracketRelationResidual inv_complement{"inverse_complement", 0.0, 0};

  auto sign = [](long e) { return (e % 2 == 0) ? 1.0 : -1.0; };
  auto track = [](BracketRelationResidual& rel, double residual) {
    rel.max_residual = std::max(rel.max_residual, std::abs(residual));
    ++rel.checked;
  };

  for (int m = 2; m <= m_max; ++m) {
    for (int j = 1; j <= m - 1; ++j) {
      const HalfRoot h(RootOfUnity(m, j));
      const HalfRoot h_inv(inverse(RootOfUnity(m, j)));
      for (long k = 0; k <= m; ++k) {
        const double bk = q_bracket(k, h);
        const double bmk = q_bracket(m - k, h);
        track(complement, bmk - sign(j - 1) * bk);
        if (j == 1) track(fundamental, bmk - bk);
        // (-1)^{k-1} with k = 0 is -1; parity is all that matters.
        track(inv, q_bracket(k, h_inv) - sign(k + 1) * bk);
        track(inv_complement, q_bracket(m - k, h_inv) - sign(m - k + 1) * bmk);
      }
    }
  }
  return {m_max, tolerance, {complement, fundamental, inv, inv_complement}};
}

}  // namespace qosc
