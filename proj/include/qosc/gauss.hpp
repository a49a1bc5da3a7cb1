#pragma once

#include "qosc/qpoly.hpp"

#include <cstdint>

namespace qosc {

/// Restricted-partition query: partitions of `target` into at most
/// `max_parts` parts, each part at most `max_part_size`.
struct PartitionSpec {
  std::uint32_t target = 0;
  std::uint32_t max_parts = 0;
  std::uint32_t max_part_size = 0;
};

/// Generating function G(n, m; q) of partitions into at most m parts, each <= n.
///
/// Computed as the exact quotient of prod_{k=1..n}(1 - q^{m+k}) by
/// prod_{k=1..n}(1 - q^k). Returns 1 when n or m is zero.
QPoly gauss_generating(std::uint32_t n, std::uint32_t m);

/// Gauss polynomial [n over m] = G(n - m, m; q) for 0 <= m <= n, zero otherwise.
QPoly gauss_binomial(std::uint32_t n, long m);

/// Q-number {n}_q = 1 + q + ... + q^{n-1}; the zero polynomial for n = 0.
QPoly q_number(std::uint32_t n);

/// Brute-force count by enumerating partitions with non-increasing parts.
/// Intended as an oracle for small targets (up to roughly 60).
std::uint64_t partition_count(const PartitionSpec& spec);

/// Ordinary binomial coefficient C(n, m), zero outside 0 <= m <= n.
BigInt binomial(std::uint32_t n, long m);

}  // namespace qosc
