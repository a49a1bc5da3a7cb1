#include "qosc/gauss.hpp"

namespace qosc {

namespace {

// 1 - q^k
QPoly one_minus_power(std::size_t k) { return QPoly{1} - QPoly::monomial(k); }

// Counts partitions of `remaining` into at most `parts_left` parts, each
// no larger than `largest`. Parts are chosen in non-increasing order.
std::uint64_t count_partitions(std::uint32_t remaining, std::uint32_t parts_left, std::uint32_t largest) {
  if (remaining == 0) return 1;
  if (parts_left == 0 || largest == 0) return 0;
  std::uint64_t total = 0;
  const std::uint32_t top = std::min(largest, remaining);
  for (std::uint32_t part = top; part >= 1; --part) total += count_partitions(remaining - part, parts_left - 1, part);
  return total;
}

}  // namespace

QPoly gauss_generating(std::uint32_t n, std::uint32_t m) {
  QPoly num{1};
  QPoly den{1};
  for (std::uint32_t k = 1; k <= n; ++k) {
    num *= one_minus_power(m + k);
    den *= one_minus_power(k);
  }
  return qpoly_divide_exact(num, den);
}

QPoly gauss_binomial(std::uint32_t n, long m) {
  if (m < 0 || m > static_cast<long>(n)) return {};
  const auto mm = static_cast<std::uint32_t>(m);
  return gauss_generating(n - mm, mm);
}

QPoly q_number(std::uint32_t n) {
  std::vector<BigInt> ones(n, BigInt(1));
  return QPoly(std::move(ones));
}

std::uint64_t partition_count(const PartitionSpec& spec) {
  return count_partitions(spec.target, spec.max_parts, spec.max_part_size);
}

BigInt binomial(std::uint32_t n, long m) {
  if (m < 0 || m > static_cast<long>(n)) return 0;
  BigInt result = 1;
  for (long k = 1; k <= m; ++k) {
    result *= n - m + k;
    result /= k;
  }
  return result;
}

}  // namespace qosc
