#include "qosc/reducibility.hpp"

#include <numeric>
#include <sstream>

namespace qosc {

RepClass classify(const DeformParam& param) {
  if (!is_root(param)) return IrreducibleInfinite{};
  const auto& root = std::get<RootOfUnity>(param);
  if (is_primitive(root)) return IrreducibleFinite{root.order()};
  return Reducible{decompose(root)};
}

IrrepDecomposition decompose(const RootOfUnity& root) {
  const int m = root.order();
  const int r = std::gcd(root.index(), m);
  const int l = m / r;
  IrrepDecomposition out{m, r, l, {}};
  out.blocks.reserve(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k)
    out.blocks.push_back({static_cast<std::size_t>(k * l), static_cast<std::size_t>((k + 1) * l)});
  return out;
}

int smallest_vanishing_index(const RootOfUnity& root) {
  for (int n = 1; n <= root.order(); ++n)
    if (q_number_is_zero(n, root)) return n;
  return root.order();  // unreachable: {m}_{q_j} always vanishes
}

InvariantSubspaceReport verify_invariant_subspaces(const RootOfUnity& root, const IrrepDecomposition& decomposition) {
  InvariantSubspaceReport report;
  auto fail = [&](const std::string& what) { report.violations.push_back(what); };

  const std::size_t m = static_cast<std::size_t>(root.order());
  if (decomposition.ambient_dim != root.order()) fail("ambient dimension differs from the root order");
  std::size_t covered = 0;
  for (const auto& block : decomposition.blocks) {
    if (block.begin != covered || block.size() == 0) fail("blocks do not tile the space in ascending order");
    covered = block.end;
  }
  if (covered != m) fail("blocks do not cover the full space");
  if (!report.passed()) return report;

  std::vector<std::size_t> block_of(m);
  for (std::size_t b = 0; b < decomposition.blocks.size(); ++b)
    for (std::size_t n = decomposition.blocks[b].begin; n < decomposition.blocks[b].end; ++n) block_of[n] = b;

  const auto [a_plus, a_minus] = build_ladder(DeformParam(root), m);

  for (const auto& block : decomposition.blocks) {
    const std::size_t top = block.end - 1;
    const std::size_t bottom = block.begin;
    std::ostringstream where;
    where << "block [" << block.begin << ", " << block.end << ")";

    if (!q_number_is_zero(static_cast<long>(top) + 1, root)) fail(where.str() + ": {top+1}_q does not vanish");
    if (top + 1 < m && !is_exact_zero(a_plus(top + 1, top))) fail(where.str() + ": a+ does not annihilate the top state");
    report.top_states.push_back(top);

    if (bottom > 0 && !q_number_is_zero(static_cast<long>(bottom), root)) fail(where.str() + ": {bottom}_q does not vanish");
    if (bottom > 0 && !is_exact_zero(a_minus(bottom - 1, bottom))) fail(where.str() + ": a- does not annihilate the bottom state");
    report.bottom_states.push_back(bottom);

    for (std::size_t n = bottom; n < top; ++n) {
      if (q_number_is_zero(static_cast<long>(n) + 1, root) || is_exact_zero(a_plus(n + 1, n)) || is_exact_zero(a_minus(n, n + 1))) {
        std::ostringstream msg;
        msg << where.str() << ": ladder entry between states " << n << " and " << n + 1 << " vanishes inside the block";
        fail(msg.str());
      }
    }
  }

  // No matrix element may connect two different blocks.
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t col = 0; col < m; ++col) {
      if (block_of[row] == block_of[col]) continue;
      if (!is_exact_zero(a_plus(row, col)) || !is_exact_zero(a_minus(row, col))) {
        std::ostringstream msg;
        msg << "matrix element (" << row << ", " << col << ") couples different blocks";
        fail(msg.str());
      }
    }
  }
  return report;
}

}  // namespace qosc
