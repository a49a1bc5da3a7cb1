#include "qosc/fock.hpp"

#include "qosc/errors.hpp"

#include <variant>

namespace qosc {

namespace {

ComplexMatrix round_matrix(const PreciseMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = to_double(m(i, j));
  return out;
}

PreciseMatrix diagonal(const std::vector<PreciseComplex>& values) {
  PreciseMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

PreciseMatrix abs_qnumber_diag_precise(const DeformParam& param, std::size_t dim, int shift) {
  std::vector<PreciseComplex> values(dim);
  for (std::size_t n = 0; n < dim; ++n) values[n] = make_complex(q_number_modulus(param, static_cast<long>(n) + shift));
  return diagonal(values);
}

PreciseMatrix number_operator_precise(std::size_t dim) {
  std::vector<PreciseComplex> values(dim);
  for (std::size_t n = 0; n < dim; ++n) values[n] = make_complex(Precise(n));
  return diagonal(values);
}

}  // namespace

std::vector<PreciseComplex> ladder_amplitudes(const DeformParam& param, std::size_t count) {
  std::vector<PreciseComplex> out(count);
  for (std::size_t n = 0; n < count; ++n) {
    const PreciseComplex qn = q_number_value(param, static_cast<long>(n));
    out[n] = is_exact_zero(qn) ? qn : sqrt(qn);
  }
  return out;
}

std::pair<PreciseMatrix, PreciseMatrix> build_ladder_precise(const DeformParam& param, std::size_t dim) {
  if (dim < 1) throw DimensionTooSmall("ladder matrices need dim >= 1");
  const auto amp = ladder_amplitudes(param, dim + 1);
  PreciseMatrix a_plus(dim);
  PreciseMatrix a_minus(dim);
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    a_plus(n + 1, n) = amp[n + 1];
    a_minus(n, n + 1) = amp[n + 1];
  }
  return {std::move(a_plus), std::move(a_minus)};
}

LadderPair build_ladder(const DeformParam& param, std::size_t dim) {
  auto [plus, minus] = build_ladder_precise(param, dim);
  return {{"a_plus", round_matrix(plus)}, {"a_minus", round_matrix(minus)}};
}

AdjointLadderPair build_adjoint_ladder(const DeformParam& param, std::size_t dim) {
  auto [plus, minus] = build_ladder(param, dim);
  return {{"a_plus_dag", plus.entries.adjoint()}, {"a_minus_dag", minus.entries.adjoint()}};
}

FockMatrix number_operator(std::size_t dim) { return {"number", round_matrix(number_operator_precise(dim))}; }

FockMatrix abs_qnumber_diag(const DeformParam& param, std::size_t dim, int shift) {
  if (shift != 0 && shift != 1) throw std::invalid_argument("abs_qnumber_diag: shift must be 0 or 1");
  return {shift == 0 ? "abs_qnumber_N" : "abs_qnumber_N_plus_1", round_matrix(abs_qnumber_diag_precise(param, dim, shift))};
}

std::string to_string(RelationId id) {
  switch (id) {
    case RelationId::Aq: return "Aq";
    case RelationId::AqBar: return "AqBar";
    case RelationId::Bob1: return "Bob1";
    case RelationId::Bob2: return "Bob2";
    case RelationId::Bob3: return "Bob3";
    case RelationId::Bob3plus: return "Bob3plus";
    case RelationId::Bob5: return "Bob5";
    case RelationId::Bob5b: return "Bob5b";
    case RelationId::NCommPlus: return "NCommPlus";
    case RelationId::NCommMinus: return "NCommMinus";
  }
  return "unknown";
}

IndexRange truncation_safe_subspace(const DeformParam& param, std::size_t dim) {
  if (const auto* root = std::get_if<RootOfUnity>(&param)) {
    if (q_number_is_zero(static_cast<long>(dim), *root)) return {0, dim};
  }
  return {0, dim == 0 ? 0 : dim - 1};
}

double max_abs_residual(const PreciseMatrix& residual, std::size_t limit) {
  return to_double(residual.max_abs(limit, [](const PreciseComplex& z) { return Precise(abs(z)); }));
}

std::vector<RelationResidual> verify_relations(const DeformParam& param, std::size_t dim) {
  if (dim < 2) throw DimensionTooSmall("verify_relations needs dim >= 2");
  const auto [a_plus, a_minus] = build_ladder_precise(param, dim);
  const PreciseMatrix a_plus_dag = a_plus.adjoint();
  const PreciseMatrix a_minus_dag = a_minus.adjoint();
  const PreciseMatrix id = PreciseMatrix::identity(dim);
  const PreciseMatrix number = number_operator_precise(dim);
  const PreciseComplex q = deformation_value(param);
  const IndexRange safe = truncation_safe_subspace(param, dim);

  std::vector<RelationResidual> out;
  auto record = [&](RelationId rel, const PreciseMatrix& residual) {
    out.push_back({rel, max_abs_residual(residual, safe.end), safe});
  };

  record(RelationId::Aq, a_minus * a_plus - q * (a_plus * a_minus) - id);
  record(RelationId::AqBar, a_plus_dag * a_minus_dag - conj(q) * (a_minus_dag * a_plus_dag) - id);
  record(RelationId::Bob1, a_plus_dag * a_plus - abs_qnumber_diag_precise(param, dim, 1));
  record(RelationId::Bob2, a_plus * a_plus_dag - abs_qnumber_diag_precise(param, dim, 0));
  if (!is_root(param)) {
    record(RelationId::Bob3, a_minus * a_minus_dag - q * (a_minus_dag * a_minus) - id);
    record(RelationId::Bob3plus, a_plus_dag * a_plus - q * (a_plus * a_plus_dag) - id);
  }
  if (is_fundamental_root(param)) {
    const auto& root = std::get<RootOfUnity>(param);
    const PreciseComplex half = exp_i_pi(root.index(), root.order());
    std::vector<PreciseComplex> phases(dim);
    for (std::size_t n = 0; n < dim; ++n) phases[n] = exp_i_pi(-static_cast<long long>(root.index()) * static_cast<long long>(n), root.order());
    const PreciseMatrix q_pow = diagonal(phases);  // q^{-N/2}
    record(RelationId::Bob5, a_minus * a_minus_dag - half * (a_minus_dag * a_minus) - q_pow);
    record(RelationId::Bob5b, a_plus_dag * a_plus - half * (a_plus * a_plus_dag) - q_pow);
  }
  record(RelationId::NCommPlus, commutator(number, a_plus) - a_plus);
  record(RelationId::NCommMinus, commutator(number, a_minus) + a_minus);
  return out;
}

}  // namespace qosc
