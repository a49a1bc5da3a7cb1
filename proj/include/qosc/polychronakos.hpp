#pragma once

#include "qosc/fock.hpp"

#include <vector>

namespace qosc {

// Deformed ladder operators written as the undeformed ones dressed by
// diagonal functions of the undeformed number operator:
//   a- = U-(q, N) a,   a+ = U+(q, N) a^dag
// with U-(q, N - 1) = sqrt({N}_q / N) and U+(q, N) = sqrt({N}_q / N).

enum class ScalingKind { UPlus, UMinus };

/// U(q, n) sampled at n = 0..dim-1.
///
/// UPlus:  U+(q, n) = sqrt({n}_q / n), with the 0/0 point U+(q, 0) stored as 1.
/// UMinus: U-(q, n) = sqrt({n+1}_q / (n+1)). The singular U-(q, -1) never
///         reaches a nonzero matrix element; value(-1) returns 1.
struct ScalingFunction {
  DeformParam param;
  ScalingKind kind;
  std::vector<Complex> values;

  Complex value(long n) const;
};

ScalingFunction scaling_function(const DeformParam& param, ScalingKind kind, std::size_t dim);

struct RealizedPair {
  FockMatrix a_minus;
  FockMatrix a_plus;
};

RealizedPair realize_deformed(const DeformParam& param, std::size_t dim);
std::pair<PreciseMatrix, PreciseMatrix> realize_deformed_precise(const DeformParam& param, std::size_t dim);

/// Max discrepancy between the realization and build_ladder: entrywise for
/// real q, in modulus for roots of unity.
double realization_discrepancy(const DeformParam& param, std::size_t dim);

/// Residual of a- a+ - q a+ a- = 1 for the realized pair, on the
/// truncation-safe subspace.
double realized_aq_residual(const DeformParam& param, std::size_t dim);

struct FRecurrenceReport {
  std::vector<Complex> values;        // F(q, n) for n = 0..n_max
  double max_recurrence_residual = 0;  // |F(n+1) - q F(n) - 1|, n < n_max
  double max_qnumber_residual = 0;     // |F(n) - {n}_q|
  bool passed(double tolerance = 1e-12) const {
    return max_recurrence_residual <= tolerance && max_qnumber_residual <= tolerance;
  }
};

/// F(q, n) = U+(q, n) U-(q, n-1) n, evaluated in extended precision.
FRecurrenceReport verify_F_recurrence(const DeformParam& param, std::size_t n_max);

/// True iff a+ equals the conjugate transpose of a- within 1e-12.
bool unitarity_check(const DeformParam& param, std::size_t dim);

}  // namespace qosc
