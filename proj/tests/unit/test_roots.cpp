#include "qosc/errors.hpp"
#include "qosc/gauss.hpp"
#include "qosc/roots.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <numeric>

using namespace qosc;

namespace {

// Direct evaluation of (q^{x/2} - q^{-x/2}) / (q^{1/2} - q^{-1/2}) at q^{1/2} = exp(i theta).
double bracket_oracle(long x, double theta) {
  const std::complex<double> i(0.0, 1.0);
  const auto num = std::exp(i * theta * static_cast<double>(x)) - std::exp(-i * theta * static_cast<double>(x));
  const auto den = std::exp(i * theta) - std::exp(-i * theta);
  return (num / den).real();
}

std::complex<double> root_value(int m, int j) { return std::polar(1.0, 2.0 * std::numbers::pi * j / m); }

}  // namespace

TEST_CASE("RootOfUnity and RealQ validation") {
  CHECK_THROWS_AS(RootOfUnity(6, 0), InvalidParameter);
  CHECK_THROWS_AS(RootOfUnity(6, 6), InvalidParameter);
  CHECK_THROWS_AS(RootOfUnity(1, 1), InvalidParameter);
  CHECK_NOTHROW(RootOfUnity(2, 1));
  CHECK_THROWS_AS(RealQ(0.0), InvalidParameter);
  CHECK_THROWS_AS(RealQ(-0.5), InvalidParameter);
  CHECK_THROWS_AS(RealQ(std::nan("")), InvalidParameter);
  CHECK_THROWS_AS(RealQ(std::numeric_limits<double>::infinity()), InvalidParameter);
  CHECK(RealQ(0.5).value() == 0.5);
}

TEST_CASE("canonical_reduce") {
  CHECK(canonical_reduce(RootOfUnity(6, 2)) == ReducedRoot{3, 1});
  CHECK(canonical_reduce(RootOfUnity(5, 2)) == ReducedRoot{5, 2});
  CHECK(canonical_reduce(RootOfUnity(6, 3)) == ReducedRoot{2, 1});
  for (int m = 2; m <= 40; ++m) {
    for (int j = 1; j < m; ++j) {
      const ReducedRoot r = canonical_reduce(RootOfUnity(m, j));
      CHECK(std::gcd(r.order, r.index) == 1);
      CHECK(r.order * j == r.index * m);
      CHECK(canonical_reduce(RootOfUnity(r.order, r.index)) == r);
      CHECK(std::abs(root_value(m, j) - root_value(r.order, r.index)) < 1e-12);
    }
  }
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive(RootOfUnity(6, 1)));
  CHECK_FALSE(is_primitive(RootOfUnity(6, 4)));
  CHECK(is_primitive(RootOfUnity(7, 3)));
  for (int m : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
    for (int j = 1; j < m; ++j) CHECK(is_primitive(RootOfUnity(m, j)));
  // Against the definition: q^n != 1 for 0 < n < m.
  for (int m = 2; m <= 30; ++m) {
    for (int j = 1; j < m; ++j) {
      bool primitive = true;
      for (int n = 1; n < m; ++n)
        if ((j * n) % m == 0) primitive = false;
      CHECK(is_primitive(RootOfUnity(m, j)) == primitive);
    }
  }
}

TEST_CASE("eval_at_root") {
  for (int m = 2; m <= 12; ++m)
    for (int j = 1; j < m; ++j) {
      const RootOfUnity root(m, j);
      CHECK(std::abs(eval_at_root(q_number(static_cast<std::uint32_t>(m)), root)) < 1e-12);
      CHECK(q_number_is_zero(m, root));
      CHECK(std::abs(eval_at_root(QPoly{1}, root) - 1.0) < 1e-15);
    }
  CHECK(std::abs(eval_at_root(q_number(3), RootOfUnity(3, 1))) < 1e-12);
  // Horner evaluation as an oracle on a polynomial with mixed signs.
  const QPoly p{3, -1, 4, 1, -5, 9, 2, -6};
  const RootOfUnity root(5, 2);
  std::complex<double> horner = 0.0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) horner = horner * root_value(5, 2) + static_cast<double>(p.coeffs()[k]);
  CHECK(std::abs(eval_at_root(p, root) - horner) < 1e-12);
}

TEST_CASE("q_number_is_zero") {
  CHECK(q_number_is_zero(3, RootOfUnity(6, 2)));
  CHECK_FALSE(q_number_is_zero(1, RootOfUnity(6, 2)));
  CHECK(q_number_is_zero(6, RootOfUnity(6, 1)));
  CHECK_FALSE(q_number_is_zero(0, RootOfUnity(6, 1)));
  for (int m = 2; m <= 40; ++m)
    for (int j = 1; j < m; ++j) {
      const RootOfUnity root(m, j);
      // n = 0 is excluded by definition even though the empty sum is 0.
      CHECK_FALSE(q_number_is_zero(0, root));
      for (int n = 1; n <= 2 * m; ++n) {
        INFO("m=" << m << " j=" << j << " n=" << n);
        const double numeric = std::abs(eval_at_root(q_number(static_cast<std::uint32_t>(n)), root));
        CHECK(q_number_is_zero(n, root) == (numeric < 1e-9));
      }
    }
}

TEST_CASE("q_bracket") {
  const HalfRoot h61(RootOfUnity(6, 1));
  CHECK(std::abs(q_bracket(2, h61) - std::sqrt(3.0)) < 1e-15);
  CHECK(q_bracket(1, h61) == 1.0);
  CHECK(q_bracket(1, HalfRoot(RootOfUnity(7, 3))) == 1.0);
  CHECK(q_bracket(3, HalfRoot(RootOfUnity(6, 2))) == 0.0);
  CHECK_THROWS_AS(q_bracket(2, HalfRoot(6, 6)), DegenerateRoot);
  CHECK_THROWS_AS(q_bracket(2, HalfRoot(6, 0)), DegenerateRoot);
  for (int m = 2; m <= 24; ++m)
    for (int j = 1; j < m; ++j)
      for (long x = 0; x <= 2 * m; ++x)
        CHECK(std::abs(q_bracket(x, HalfRoot(RootOfUnity(m, j))) - bracket_oracle(x, std::numbers::pi * j / m)) < 1e-10);
}

TEST_CASE("HalfRoot squares to its base root") {
  for (int m = 2; m <= 20; ++m)
    for (int j = 1; j < m; ++j) {
      const HalfRoot h(RootOfUnity(m, j));
      CHECK(std::abs(h.squared() - root_value(m, j)) < 1e-14);
      CHECK(std::abs(h.value() * h.value() - root_value(m, j)) < 1e-14);
    }
}

TEST_CASE("|{n}| equals |[n]| and fundamental brackets are nonnegative") {
  for (int m = 2; m <= 40; ++m)
    for (int j = 1; j < m; ++j) {
      const RootOfUnity root(m, j);
      const HalfRoot h(root);
      for (int n = 0; n <= m; ++n) {
        const double via_poly = std::abs(eval_at_root(q_number(static_cast<std::uint32_t>(n)), root));
        CHECK(std::abs(via_poly - std::abs(q_bracket(n, h))) < 1e-10);
        CHECK(std::abs(to_double(q_number_modulus(root, n)) - via_poly) < 1e-10);
        if (j == 1) CHECK(q_bracket(n, h) >= 0.0);
      }
    }
}

TEST_CASE("q_number_value matches polynomial evaluation") {
  for (int m = 2; m <= 16; ++m)
    for (int j = 1; j < m; ++j)
      for (int n = 0; n <= 2 * m + 1; ++n) {
        const auto z = to_double(q_number_value(RootOfUnity(m, j), n));
        CHECK(std::abs(z - eval_at_root(q_number(static_cast<std::uint32_t>(n)), RootOfUnity(m, j))) < 1e-12);
      }
  CHECK(to_double(q_number_value(RealQ(2.0), 10)) == std::complex<double>(1023.0, 0.0));
  CHECK(to_double(q_number_value(RealQ(1.0), 7)) == std::complex<double>(7.0, 0.0));
  CHECK(std::abs(to_double(q_number_value(RealQ(0.5), 2)) - 1.5) == 0.0);
}

TEST_CASE("verify_bracket_relations") {
  const BracketReport report = verify_bracket_relations(6);
  CHECK(report.passed());
  REQUIRE(report.relations.size() == 4);
  for (const auto& rel : report.relations) {
    INFO(rel.name);
    CHECK(rel.max_residual < 1e-12);
    CHECK(rel.checked > 0);
  }
  // Spot values.
  const HalfRoot h21(RootOfUnity(2, 1));
  CHECK(q_bracket(1, h21) == q_bracket(2 - 1, h21));
  CHECK(std::abs(q_bracket(5, HalfRoot(RootOfUnity(6, 2))) + 1.0) < 1e-15);
  CHECK_THROWS_AS(verify_bracket_relations(1), std::invalid_argument);
  CHECK(verify_bracket_relations(50).passed());
}

TEST_CASE("exact angle reduction") {
  CHECK(sin_pi(0, 5) == 0);
  CHECK(sin_pi(7, 7) == 0);
  CHECK(sin_pi(1, 2) == 1);
  CHECK(sin_pi(3, 2) == -1);
  CHECK(cos_pi(0, 3) == 1);
  CHECK(cos_pi(1, 1) == -1);
  // Equal rationals give identical values.
  CHECK(sin_pi(2, 6) == sin_pi(1, 3));
  CHECK(sin_pi(-5, 12) == -sin_pi(5, 12));
  CHECK(abs(sin_pi(7, 12)) == abs(sin_pi(5, 12)));
  CHECK(std::abs(to_double(sin_pi(1, 6)) - 0.5) < 1e-16);
}
