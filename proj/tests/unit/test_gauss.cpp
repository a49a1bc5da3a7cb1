#include "qosc/errors.hpp"
#include "qosc/gauss.hpp"

#include <doctest.h>

#include <vector>

using namespace qosc;

namespace {

// Pascal's triangle, independent of the library's binomial().
std::vector<std::vector<BigInt>> pascal(std::uint32_t rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (std::uint32_t n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, BigInt(1));
    for (std::uint32_t k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

}  // namespace

TEST_CASE("qpoly_add") {
  CHECK(qpoly_add(QPoly{1, 1}, QPoly{0, 1}) == QPoly{1, 2});
  const QPoly p{3, 0, -2, 7};
  CHECK(qpoly_add(p, QPoly{}) == p);
  const QPoly zero = qpoly_add(QPoly{1, 1}, QPoly{-1, -1});
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.coeffs().empty());
}

TEST_CASE("qpoly_mul") {
  CHECK(qpoly_mul(QPoly{1, 1}, QPoly{1, 1}) == QPoly{1, 2, 1});
  const QPoly p{2, -1, 0, 5};
  CHECK(qpoly_mul(p, QPoly{1}) == p);
  CHECK(qpoly_mul(QPoly{1, 0, 1}, QPoly{1, 1, 1}) == QPoly{1, 1, 2, 1, 1});
  CHECK(qpoly_mul(p, QPoly{}).is_zero());
}

TEST_CASE("qpoly_divide_exact") {
  CHECK(qpoly_divide_exact(QPoly{1, 0, -1}, QPoly{1, -1}) == QPoly{1, 1});

  const QPoly num = QPoly{1, 0, 0, 0, -1} * QPoly{1, 0, 0, -1};
  const QPoly den = QPoly{1, -1} * QPoly{1, 0, -1};
  CHECK(qpoly_divide_exact(num, den) == QPoly{1, 1, 2, 1, 1});

  CHECK_THROWS_AS(qpoly_divide_exact(QPoly{1, 1}, QPoly{1, -1}), NotDivisible);
  CHECK_THROWS_AS(qpoly_divide_exact(QPoly{1}, QPoly{1, 1}), NotDivisible);
  CHECK_THROWS_AS(qpoly_divide_exact(QPoly{1, 2}, QPoly{0, 2}), NotDivisible);
  CHECK_THROWS_AS(qpoly_divide_exact(QPoly{1, 1}, QPoly{}), std::invalid_argument);
  CHECK(qpoly_divide_exact(QPoly{}, QPoly{1, 1}).is_zero());
}

TEST_CASE("divide_exact inverts multiplication") {
  const std::vector<QPoly> polys = {QPoly{1}, QPoly{-1, 1}, QPoly{2, 0, 3}, QPoly{1, -4, 6, -4, 1}, QPoly{5, 1, 0, 0, -2}};
  for (const auto& a : polys)
    for (const auto& b : polys) CHECK(qpoly_divide_exact(a * b, b) == a);
}

TEST_CASE("QPoly helpers") {
  CHECK(QPoly{1, 1, 2}.to_string() == "1 + q + 2q^2");
  CHECK(QPoly{0, -1, 0, 3}.to_string() == "-q + 3q^3");
  CHECK(QPoly{}.to_string() == "0");
  CHECK(QPoly{1, 2}.shifted(2) == QPoly{0, 0, 1, 2});
  CHECK(QPoly{1, 2, 3}.value_at_one() == 6);
  CHECK(QPoly{1, 2, 0, 0}.degree() == 1);
}

TEST_CASE("gauss_generating") {
  CHECK(gauss_generating(2, 2) == QPoly{1, 1, 2, 1, 1});
  for (std::uint32_t k = 0; k < 6; ++k) {
    CHECK(gauss_generating(k, 0) == QPoly{1});
    CHECK(gauss_generating(0, k) == QPoly{1});
  }
  // G(2,2) against the enumeration oracle.
  const QPoly g = gauss_generating(2, 2);
  for (std::uint32_t N = 0; N <= 4; ++N) CHECK(g.coefficient(N) == partition_count({N, 2, 2}));
}

TEST_CASE("gauss_binomial") {
  CHECK(gauss_binomial(4, 2) == gauss_generating(2, 2));
  for (std::uint32_t n = 0; n <= 10; ++n) {
    CHECK(gauss_binomial(n, 0) == QPoly{1});
    CHECK(gauss_binomial(n, n) == QPoly{1});
  }
  CHECK(gauss_binomial(3, 5).is_zero());
  CHECK(gauss_binomial(3, -1).is_zero());
}

TEST_CASE("q_number") {
  CHECK(q_number(3) == QPoly{1, 1, 1});
  CHECK(q_number(0).is_zero());
  CHECK(q_number(5).value_at_one() == 5);
  CHECK(q_number(1) == QPoly{1});
}

TEST_CASE("partition_count") {
  CHECK(partition_count({2, 2, 2}) == 2);
  CHECK(partition_count({0, 3, 4}) == 1);
  CHECK(partition_count({0, 0, 0}) == 1);
  CHECK(partition_count({5, 2, 2}) == 0);
  CHECK(partition_count({3, 0, 5}) == 0);
  // Unrestricted p(10) = 42.
  CHECK(partition_count({10, 10, 10}) == 42);
}

TEST_CASE("coefficients count restricted partitions") {
  for (std::uint32_t n = 0; n <= 12; ++n) {
    for (std::uint32_t m = 0; m <= n; ++m) {
      const QPoly g = gauss_binomial(n, m);
      const std::uint32_t deg = m * (n - m);
      for (std::uint32_t N = 0; N <= deg; ++N) {
        INFO("n=" << n << " m=" << m << " N=" << N);
        CHECK(g.coefficient(N) == partition_count({N, m, n - m}));
      }
    }
  }
}

TEST_CASE("symmetry, recurrences, limit, degree") {
  const auto binom = pascal(20);
  for (std::uint32_t n = 0; n <= 20; ++n) {
    for (std::uint32_t m = 0; m <= n; ++m) {
      INFO("n=" << n << " m=" << m);
      const QPoly g = gauss_binomial(n, m);
      CHECK(g == gauss_binomial(n, n - m));
      CHECK(g.value_at_one() == binom[n][m]);
      CHECK(binomial(n, m) == binom[n][m]);
      CHECK(g.degree() == static_cast<long>(m * (n - m)));
      for (const auto& c : g.coeffs()) CHECK(c > 0);
      if (m >= 1 && m <= n - 1) {
        CHECK(g == gauss_binomial(n - 1, m) + gauss_binomial(n - 1, m - 1).shifted(n - m));
        CHECK(g == gauss_binomial(n - 1, m - 1) + gauss_binomial(n - 1, m).shifted(m));
      }
    }
  }
}

TEST_CASE("q_number recurrence") {
  for (std::uint32_t n = 0; n <= 50; ++n) {
    CHECK(q_number(n + 1) == QPoly{1} + q_number(n).shifted(1));
    CHECK(q_number(n) == gauss_binomial(n, 1));
  }
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  const QPoly g = gauss_binomial(80, 40);
  BigInt c = 1;
  for (int k = 1; k <= 40; ++k) c = c * (40 + k) / k;
  CHECK(g.value_at_one() == c);
  BigInt largest = 0;
  for (const auto& x : g.coeffs()) largest = x > largest ? x : largest;
  CHECK(largest > BigInt(std::numeric_limits<std::int64_t>::max()));
  CHECK(g == gauss_binomial(80, 40).shifted(0));
}
