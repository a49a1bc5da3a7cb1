#include "qosc/hamiltonian.hpp"

#include "qosc/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace qosc {

namespace {

constexpr double kBlockTolerance = 1e-12;

PreciseMatrix hamiltonian_precise(const DeformParam& param, std::size_t dim) {
  PreciseMatrix h(dim);
  Precise lower = q_number_modulus(param, 0);
  for (std::size_t n = 0; n < dim; ++n) {
    const Precise upper = q_number_modulus(param, static_cast<long>(n) + 1);
    h(n, n) = make_complex((upper + lower) / 2);
    lower = upper;
  }
  return h;
}

}  // namespace

std::optional<std::size_t> natural_dim(const DeformParam& param) {
  if (const auto* root = std::get_if<RootOfUnity>(&param)) return static_cast<std::size_t>(root->order());
  return std::nullopt;
}

FockMatrix build_hamiltonian(const DeformParam& param, std::size_t dim) {
  if (dim < 1) throw DimensionTooSmall("hamiltonian needs dim >= 1");
  const PreciseMatrix h = hamiltonian_precise(param, dim);
  ComplexMatrix out(dim);
  for (std::size_t n = 0; n < dim; ++n) out(n, n) = to_double(h(n, n));
  return {"hamiltonian", std::move(out)};
}

double hamiltonian_equivalence_check(const DeformParam& param, std::size_t dim) {
  if (dim < 2) throw DimensionTooSmall("hamiltonian_equivalence_check needs dim >= 2");
  const auto [a_plus, a_minus] = build_ladder_precise(param, dim);
  const PreciseComplex half = make_complex(Precise(0.5));
  const PreciseMatrix from_minus = half * (a_minus * a_minus.adjoint() + a_minus.adjoint() * a_minus);
  const PreciseMatrix from_plus = half * (a_plus * a_plus.adjoint() + a_plus.adjoint() * a_plus);
  const PreciseMatrix direct = hamiltonian_precise(param, dim);
  const std::size_t limit = truncation_safe_subspace(param, dim).end;
  return std::max({max_abs_residual(from_minus - from_plus, limit), max_abs_residual(from_minus - direct, limit),
                   max_abs_residual(from_plus - direct, limit)});
}

std::vector<double> hermitian_eigenvalues(const FockMatrix& h) {
  const auto d = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXcd dense(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) dense(i, j) = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian eigensolver did not converge");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

SpectrumReport spectrum_report(const DeformParam& param, std::size_t dim) {
  const FockMatrix h = build_hamiltonian(param, dim);
  SpectrumReport report{param, dim, kEnergyUnit, {}, std::nullopt, false, 0.0};
  report.diagonal.reserve(dim);
  for (std::size_t n = 0; n < dim; ++n) report.diagonal.push_back(h(n, n).real());

  std::vector<double> sorted = report.diagonal;
  std::sort(sorted.begin(), sorted.end());
  const std::vector<double> eigen = hermitian_eigenvalues(h);
  for (std::size_t n = 0; n < dim; ++n)
    report.eigensolver_discrepancy = std::max(report.eigensolver_discrepancy, std::abs(sorted[n] - eigen[n]));

  const auto* root = std::get_if<RootOfUnity>(&param);
  if (root == nullptr || dim != static_cast<std::size_t>(root->order())) return report;

  IrrepDecomposition blocks = decompose(*root);
  const std::size_t l = static_cast<std::size_t>(blocks.block_dim);
  bool repeated = true;
  for (std::size_t n = l; n < dim; ++n)
    if (!(std::abs(report.diagonal[n] - report.diagonal[n % l]) <= kBlockTolerance)) repeated = false;
  report.block_pattern_verified = repeated;
  report.blocks = std::move(blocks);
  return report;
}

bool inverse_root_check(const RootOfUnity& root) {
  const auto dim = static_cast<std::size_t>(root.order());
  const FockMatrix h = build_hamiltonian(root, dim);
  const FockMatrix h_inv = build_hamiltonian(inverse(root), dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (!(std::abs(h(i, j) - h_inv(i, j)) <= 1e-12)) return false;
  return true;
}

}  // namespace qosc
