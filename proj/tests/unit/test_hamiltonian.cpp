#include "qosc/errors.hpp"
#include "qosc/hamiltonian.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

using namespace qosc;

namespace {

// sin(pi j n / m) / sin(pi j / m) in long double.
double sin_ratio(int m, int j, int n) {
  const long double pi = std::numbers::pi_v<long double>;
  return static_cast<double>(std::fabs(std::sin(pi * j * n / m) / std::sin(pi * j / m)));
}

std::vector<double> diag_of(const FockMatrix& h) {
  std::vector<double> d;
  for (std::size_t n = 0; n < h.dim(); ++n) d.push_back(h(n, n).real());
  return d;
}

}  // namespace

TEST_CASE("closed-form spectra at small roots") {
  CHECK(diag_of(build_hamiltonian(RootOfUnity(2, 1), 2)) == std::vector<double>{0.5, 0.5});
  CHECK(diag_of(build_hamiltonian(RootOfUnity(3, 1), 3)) == std::vector<double>{0.5, 1.0, 0.5});

  const double s3 = std::sqrt(3.0);
  const std::vector<double> want61 = {0.5, (1 + s3) / 2, (2 + s3) / 2, (2 + s3) / 2, (1 + s3) / 2, 0.5};
  const auto d61 = diag_of(build_hamiltonian(RootOfUnity(6, 1), 6));
  for (std::size_t n = 0; n < 6; ++n) CHECK(std::abs(d61[n] - want61[n]) < 1e-12);
  for (std::size_t n = 0; n < 6; ++n) CHECK(d61[n] == d61[5 - n]);

  const std::vector<double> want62 = {0.5, 1.0, 0.5, 0.5, 1.0, 0.5};
  const auto d62 = diag_of(build_hamiltonian(RootOfUnity(6, 2), 6));
  const auto d64 = diag_of(build_hamiltonian(RootOfUnity(6, 4), 6));
  for (std::size_t n = 0; n < 6; ++n) CHECK(std::abs(d62[n] - want62[n]) < 1e-12);
  CHECK(d62 == d64);

  for (double e : diag_of(build_hamiltonian(RootOfUnity(6, 3), 6))) CHECK(std::abs(e - 0.5) < 1e-12);
}

TEST_CASE("hamiltonian is diagonal and Hermitian") {
  const auto h = build_hamiltonian(RootOfUnity(7, 3), 7);
  for (std::size_t r = 0; r < 7; ++r)
    for (std::size_t c = 0; c < 7; ++c) {
      if (r != c) CHECK(h(r, c) == Complex(0.0));
      CHECK(h(r, c) == std::conj(h(c, r)));
    }
  CHECK_THROWS_AS(build_hamiltonian(RealQ(0.5), 0), DimensionTooSmall);
}

TEST_CASE("diagonal equals the sine-ratio formula") {
  for (int m = 2; m <= 40; ++m)
    for (int j = 1; j < m; ++j) {
      const auto d = diag_of(build_hamiltonian(RootOfUnity(m, j), static_cast<std::size_t>(m)));
      for (int n = 0; n < m; ++n) {
        INFO("m=" << m << " j=" << j << " n=" << n);
        const double want = 0.5 * (sin_ratio(m, j, n + 1) + (n == 0 ? 0.0 : sin_ratio(m, j, n)));
        CHECK(std::abs(d[static_cast<std::size_t>(n)] - want) < 1e-12);
      }
    }
}

TEST_CASE("fundamental-root form via q-brackets") {
  for (int m = 2; m <= 30; ++m) {
    const HalfRoot h(RootOfUnity(m, 1));
    const auto d = diag_of(build_hamiltonian(RootOfUnity(m, 1), static_cast<std::size_t>(m)));
    for (int n = 0; n < m; ++n) CHECK(std::abs(d[static_cast<std::size_t>(n)] - 0.5 * (q_bracket(n + 1, h) + q_bracket(n, h))) < 1e-12);
  }
}

TEST_CASE("palindrome, positivity, block repetition for m <= 60") {
  for (int m = 2; m <= 60; ++m) {
    for (int j = 1; j < m; ++j) {
      INFO("m=" << m << " j=" << j);
      const RootOfUnity root(m, j);
      const auto report = spectrum_report(root, static_cast<std::size_t>(m));
      const auto& d = report.diagonal;
      for (std::size_t n = 0; n < d.size(); ++n) {
        CHECK(d[n] == d[d.size() - 1 - n]);
        CHECK(d[n] > 0.0);
      }
      REQUIRE(report.blocks.has_value());
      CHECK(report.block_pattern_verified);
      const int l = m / std::gcd(j, m);
      for (std::size_t n = 0; n < d.size(); ++n) CHECK(d[n] == d[n % static_cast<std::size_t>(l)]);
      CHECK(report.blocks->block_dim == l);
      CHECK(inverse_root_check(root));
      CHECK(report.eigensolver_discrepancy <= 1e-12 * std::max(1.0, *std::max_element(d.begin(), d.end())));
    }
  }
}

TEST_CASE("undeformed limit gives n + 1/2") {
  for (std::size_t dim = 1; dim <= 50; ++dim) {
    const auto d = diag_of(build_hamiltonian(RealQ(1.0), dim));
    for (std::size_t n = 0; n < dim; ++n) CHECK(d[n] == static_cast<double>(n) + 0.5);
  }
}

TEST_CASE("three constructions of H agree") {
  for (int m = 2; m <= 20; ++m)
    for (int j = 1; j < m; ++j) CHECK(hamiltonian_equivalence_check(RootOfUnity(m, j), static_cast<std::size_t>(m)) < 1e-12);
  for (double q : {0.3, 0.9, 1.0, 2.5}) {
    INFO("q=" << q);
    CHECK(hamiltonian_equivalence_check(RealQ(q), 50) < 1e-12);
  }
}

TEST_CASE("spectrum_report") {
  const auto real = spectrum_report(RealQ(0.5), 4);
  CHECK_FALSE(real.blocks.has_value());
  CHECK_FALSE(real.block_pattern_verified);
  CHECK(real.energy_unit == "hbar_omega");
  CHECK(real.dim == 4);
  // 0.5 * ({n+1} + {n}) at q = 1/2.
  CHECK(real.diagonal == std::vector<double>{0.5, 1.25, 1.625, 1.8125});

  const auto off = spectrum_report(RootOfUnity(6, 2), 9);
  CHECK_FALSE(off.blocks.has_value());

  const auto r63 = spectrum_report(RootOfUnity(6, 3), 6);
  REQUIRE(r63.blocks.has_value());
  CHECK(r63.blocks->block_count == 3);
  CHECK(r63.blocks->block_dim == 2);
  CHECK(r63.block_pattern_verified);

  CHECK(natural_dim(RootOfUnity(9, 2)) == std::optional<std::size_t>(9));
  CHECK_FALSE(natural_dim(RealQ(2.0)).has_value());
}

TEST_CASE("inverse_root_check examples") {
  CHECK(inverse_root_check(RootOfUnity(6, 1)));
  CHECK(inverse_root_check(RootOfUnity(6, 2)));
  CHECK(inverse_root_check(RootOfUnity(7, 3)));
}

TEST_CASE("dense eigensolver on a non-diagonal Hermitian matrix") {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  FockMatrix m{"probe", ComplexMatrix(2)};
  m.entries(0, 0) = 2.0;
  m.entries(1, 1) = 2.0;
  m.entries(0, 1) = Complex(0.0, 1.0);
  m.entries(1, 0) = Complex(0.0, -1.0);
  const auto ev = hermitian_eigenvalues(m);
  REQUIRE(ev.size() == 2);
  CHECK(std::abs(ev[0] - 1.0) < 1e-14);
  CHECK(std::abs(ev[1] - 3.0) < 1e-14);
}
