#include "qosc/polychronakos.hpp"

#include "qosc/errors.hpp"

#include <algorithm>

namespace qosc {

namespace {

// sqrt({n}_q / n); 1 at n = 0.
PreciseComplex scaling_at(const DeformParam& param, long n) {
  if (n == 0) return make_complex(1);
  const PreciseComplex ratio = q_number_value(param, n) / Precise(n);
  return is_exact_zero(ratio) ? ratio : sqrt(ratio);
}

PreciseComplex scaling_precise(const DeformParam& param, ScalingKind kind, long n) {
  if (kind == ScalingKind::UPlus) return scaling_at(param, n);
  if (n < 0) return make_complex(1);
  return scaling_at(param, n + 1);
}

ComplexMatrix round_matrix(const PreciseMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

}  // namespace

Complex ScalingFunction::value(long n) const {
  if (kind == ScalingKind::UMinus && n == -1) return 1.0;
  if (n < 0 || static_cast<std::size_t>(n) >= values.size()) throw std::out_of_range("ScalingFunction::value: argument outside the sampled range");
  return values[static_cast<std::size_t>(n)];
}

ScalingFunction scaling_function(const DeformParam& param, ScalingKind kind, std::size_t dim) {
  ScalingFunction out{param, kind, {}};
  out.values.reserve(dim);
  for (std::size_t n = 0; n < dim; ++n) out.values.push_back(to_double(scaling_precise(param, kind, static_cast<long>(n))));
  return out;
}

std::pair<PreciseMatrix, PreciseMatrix> realize_deformed_precise(const DeformParam& param, std::size_t dim) {
  if (dim < 2) throw DimensionTooSmall("realize_deformed needs dim >= 2");
  PreciseMatrix a(dim);
  PreciseMatrix u_minus(dim);
  PreciseMatrix u_plus(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    if (n + 1 < dim) a(n, n + 1) = make_complex(sqrt(Precise(n + 1)));
    u_minus(n, n) = scaling_precise(param, ScalingKind::UMinus, static_cast<long>(n));
    u_plus(n, n) = scaling_precise(param, ScalingKind::UPlus, static_cast<long>(n));
  }
  PreciseMatrix a_minus = u_minus * a;
  PreciseMatrix a_plus = u_plus * a.adjoint();
  return {std::move(a_minus), std::move(a_plus)};
}

RealizedPair realize_deformed(const DeformParam& param, std::size_t dim) {
  const auto [a_minus, a_plus] = realize_deformed_precise(param, dim);
  return {{"a_minus", round_matrix(a_minus)}, {"a_plus", round_matrix(a_plus)}};
}

double realization_discrepancy(const DeformParam& param, std::size_t dim) {
  const RealizedPair realized = realize_deformed(param, dim);
  const LadderPair direct = build_ladder(param, dim);
  const bool modulus_only = is_root(param);
  double worst = 0.0;
  auto compare = [&](const FockMatrix& x, const FockMatrix& y) {
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const double d = modulus_only ? std::abs(std::abs(x(i, j)) - std::abs(y(i, j))) : std::abs(x(i, j) - y(i, j));
        worst = std::max(worst, d);
      }
  };
  compare(realized.a_minus, direct.a_minus);
  compare(realized.a_plus, direct.a_plus);
  return worst;
}

double realized_aq_residual(const DeformParam& param, std::size_t dim) {
  const auto [a_minus, a_plus] = realize_deformed_precise(param, dim);
  const PreciseComplex q = deformation_value(param);
  const PreciseMatrix residual = a_minus * a_plus - q * (a_plus * a_minus) - PreciseMatrix::identity(dim);
  return max_abs_residual(residual, truncation_safe_subspace(param, dim).end);
}

FRecurrenceReport verify_F_recurrence(const DeformParam& param, std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("verify_F_recurrence needs n_max >= 1");
  const PreciseComplex q = deformation_value(param);
  std::vector<PreciseComplex> f(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto nn = static_cast<long>(n);
    f[n] = scaling_precise(param, ScalingKind::UPlus, nn) * scaling_precise(param, ScalingKind::UMinus, nn - 1) * Precise(nn);
  }

  FRecurrenceReport report;
  Precise rec = 0;
  Precise ident = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    report.values.push_back(to_double(f[n]));
    const Precise dq = abs(f[n] - q_number_value(param, static_cast<long>(n)));
    if (dq > ident) ident = dq;
    if (n < n_max) {
      const Precise dr = abs(f[n + 1] - q * f[n] - Precise(1));
      if (dr > rec) rec = dr;
    }
  }
  report.max_recurrence_residual = to_double(rec);
  report.max_qnumber_residual = to_double(ident);
  return report;
}

bool unitarity_check(const DeformParam& param, std::size_t dim) {
  const RealizedPair realized = realize_deformed(param, dim);
  const ComplexMatrix dag = realized.a_minus.entries.adjoint();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (!(std::abs(realized.a_plus(i, j) - dag(i, j)) <= 1e-12)) return false;
  return true;
}

}  // namespace qosc
