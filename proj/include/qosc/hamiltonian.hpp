#pragma once

#include "qosc/fock.hpp"
#include "qosc/reducibility.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qosc {

/// All energies are reported in units of hbar*omega.
inline constexpr const char* kEnergyUnit = "hbar_omega";

/// Default working dimension: m for a root of unity, none for real q.
std::optional<std::size_t> natural_dim(const DeformParam& param);

/// H = (1/2)(|{N+1}_q| + |{N}_q|), diagonal in the Fock basis.
FockMatrix build_hamiltonian(const DeformParam& param, std::size_t dim);

/// Max pairwise discrepancy between H built from a- products, from a+
/// products and directly from the moduli, on the truncation-safe subspace.
double hamiltonian_equivalence_check(const DeformParam& param, std::size_t dim);

/// Eigenvalues of a Hermitian matrix, ascending (general dense solver).
std::vector<double> hermitian_eigenvalues(const FockMatrix& h);

struct SpectrumReport {
  DeformParam param;
  std::size_t dim = 0;
  std::string energy_unit = kEnergyUnit;
  std::vector<double> diagonal;
  std::optional<IrrepDecomposition> blocks;
  bool block_pattern_verified = false;
  /// Max |sorted eigenvalue - sorted diagonal entry| from the dense eigensolver.
  double eigensolver_discrepancy = 0.0;
};

/// Diagonal of H, plus the block decomposition when param is a root and
/// dim equals its order. The block pattern is verified when the diagonal is
/// the first block's values repeated r times (tolerance 1e-12).
SpectrumReport spectrum_report(const DeformParam& param, std::size_t dim);

/// True iff H at q_j and at q_{m-j} agree entrywise within 1e-12.
bool inverse_root_check(const RootOfUnity& root);

}  // namespace qosc
