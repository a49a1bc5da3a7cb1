#pragma once

#include "qosc/dense_matrix.hpp"
#include "qosc/precise.hpp"
#include "qosc/roots.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace qosc {

using Complex = std::complex<double>;
using ComplexMatrix = DenseMatrix<Complex>;
using PreciseMatrix = DenseMatrix<PreciseComplex>;

/// Operator on a (possibly truncated) Fock space with basis |0>, ..., |dim-1>.
struct FockMatrix {
  std::string label;
  ComplexMatrix entries;

  std::size_t dim() const { return entries.dim(); }
  const Complex& operator()(std::size_t row, std::size_t col) const { return entries(row, col); }
};

struct LadderPair {
  FockMatrix a_plus;   // a+ |n> = sqrt({n+1}_q) |n+1>
  FockMatrix a_minus;  // a- |n> = sqrt({n}_q) |n-1>
};

struct AdjointLadderPair {
  FockMatrix a_plus_dag;
  FockMatrix a_minus_dag;
};

/// Principal square root of {n}_q for n = 0..count-1, in extended precision.
std::vector<PreciseComplex> ladder_amplitudes(const DeformParam& param, std::size_t count);

/// Ladder matrices; entries are evaluated in extended precision and rounded once.
LadderPair build_ladder(const DeformParam& param, std::size_t dim);
AdjointLadderPair build_adjoint_ladder(const DeformParam& param, std::size_t dim);
/// diag(0, 1, ..., dim-1).
FockMatrix number_operator(std::size_t dim);
/// diag(|{n + shift}_q|), shift in {0, 1}.
FockMatrix abs_qnumber_diag(const DeformParam& param, std::size_t dim, int shift);

/// Extended-precision ladder matrices, used by the verifiers.
std::pair<PreciseMatrix, PreciseMatrix> build_ladder_precise(const DeformParam& param, std::size_t dim);

enum class RelationId {
  Aq,          // a- a+ - q a+ a- = 1
  AqBar,       // a+^dag a-^dag - q^* a-^dag a+^dag = 1
  Bob1,        // a+^dag a+ = |{N+1}_q|
  Bob2,        // a+ a+^dag = |{N}_q|
  Bob3,        // a- a-^dag - q a-^dag a- = 1              (real q)
  Bob3plus,    // a+^dag a+ - q a+ a+^dag = 1              (real q)
  Bob5,        // a- a-^dag - q^{1/2} a-^dag a- = q^{-N/2} (fundamental root)
  Bob5b,       // a+^dag a+ - q^{1/2} a+ a+^dag = q^{-N/2} (fundamental root)
  NCommPlus,   // [N, a+] = a+
  NCommMinus,  // [N, a-] = -a-
};

std::string to_string(RelationId id);

/// Half-open index range [begin, end) of basis states.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct RelationResidual {
  RelationId relation_id;
  double max_abs_residual = 0.0;
  IndexRange checked_subspace;
};

/// States on which the truncated matrices reproduce the infinite algebra.
///
/// The full space when the top transition closes ({dim}_q = 0 at a root),
/// otherwise every state except the top one.
IndexRange truncation_safe_subspace(const DeformParam& param, std::size_t dim);

/// Residuals of every applicable algebra relation, as the largest
/// |entry| of (lhs - rhs) on the truncation-safe subspace. Evaluated in
/// extended precision. Throws DimensionTooSmall if dim < 2.
std::vector<RelationResidual> verify_relations(const DeformParam& param, std::size_t dim);

/// Max |entry| of a residual matrix restricted to [0, limit).
double max_abs_residual(const PreciseMatrix& residual, std::size_t limit);

}  // namespace qosc
