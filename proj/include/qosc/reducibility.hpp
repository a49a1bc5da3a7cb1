#pragma once

#include "qosc/fock.hpp"
#include "qosc/roots.hpp"

#include <string>
#include <variant>
#include <vector>

namespace qosc {

/// Splitting of the m-dimensional Fock module at q_j into r = gcd(j, m)
/// invariant blocks of dimension l = m / r, in ascending order.
struct IrrepDecomposition {
  int ambient_dim = 0;
  int block_count = 0;
  int block_dim = 0;
  std::vector<IndexRange> blocks;
};

struct IrreducibleInfinite {};
struct IrreducibleFinite {
  int dim = 0;
};
struct Reducible {
  IrrepDecomposition decomposition;
};

using RepClass = std::variant<IrreducibleInfinite, IrreducibleFinite, Reducible>;

RepClass classify(const DeformParam& param);
IrrepDecomposition decompose(const RootOfUnity& root);

/// Smallest n > 0 with {n}_{q_j} = 0, found by scanning the exact predicate.
int smallest_vanishing_index(const RootOfUnity& root);

struct InvariantSubspaceReport {
  std::vector<std::size_t> top_states;     // a+ maps these to zero
  std::vector<std::size_t> bottom_states;  // a- maps these to zero
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks, on the dim-m ladder matrices, that every block of the
/// decomposition is invariant under a+, a- and N, and that no smaller
/// invariant subspace sits inside a block (interior ladder entries nonzero).
InvariantSubspaceReport verify_invariant_subspaces(const RootOfUnity& root, const IrrepDecomposition& decomposition);

}  // namespace qosc
