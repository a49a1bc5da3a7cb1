#pragma once

#include "qosc/precise.hpp"
#include "qosc/qpoly.hpp"

#include <complex>
#include <string>
#include <variant>

namespace qosc {

/// q_j = exp(2 pi i j / m) with m >= 2 and 1 <= j <= m - 1.
class RootOfUnity {
 public:
  /// Throws InvalidParameter outside 1 <= index <= order - 1.
  RootOfUnity(int order, int index);

  int order() const { return order_; }
  int index() const { return index_; }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

 private:
  int order_;
  int index_;
};

/// Reduced form exp(2 pi i s / l) of a root, with gcd(s, l) = 1.
struct ReducedRoot {
  int order;  // l = m / gcd(j, m)
  int index;  // s = j / gcd(j, m)
  friend bool operator==(const ReducedRoot&, const ReducedRoot&) = default;
};

ReducedRoot canonical_reduce(const RootOfUnity& root);
bool is_primitive(const RootOfUnity& root);
/// q_j^{-1} = q_{m-j}.
RootOfUnity inverse(const RootOfUnity& root);

/// A square root of a root of unity, stored as the exact angle pi * numerator / order.
///
/// Built from a RootOfUnity it takes the branch exp(i pi j / m); this is the
/// only branch used for q^{1/2} anywhere in the library.
class HalfRoot {
 public:
  explicit HalfRoot(const RootOfUnity& base) : order_(base.order()), numerator_(base.index()) {}
  /// Raw angle pi * numerator / order; may be degenerate.
  HalfRoot(int order, int numerator);

  int order() const { return order_; }
  int numerator() const { return numerator_; }
  /// Square of this half-root as exp(2 pi i numerator / order).
  std::complex<double> squared() const;
  std::complex<double> value() const;

 private:
  int order_;
  int numerator_;
};

/// Real deformation parameter q > 0.
class RealQ {
 public:
  /// Throws InvalidParameter unless value is finite and positive.
  explicit RealQ(double value);
  double value() const { return value_; }
  friend bool operator==(const RealQ&, const RealQ&) = default;

 private:
  double value_;
};

using DeformParam = std::variant<RealQ, RootOfUnity>;

inline bool is_root(const DeformParam& p) { return std::holds_alternative<RootOfUnity>(p); }
/// True for the fundamental root exp(2 pi i / m).
bool is_fundamental_root(const DeformParam& p);
std::string describe(const DeformParam& p);

/// Value of p at q_j, after folding exponents into residues mod m.
std::complex<double> eval_at_root(const QPoly& p, const RootOfUnity& root);

/// Exact test for {n}_{q_j} = 0: true iff n > 0 and m divides j * n.
bool q_number_is_zero(long n, const RootOfUnity& root);

/// [x] at the half-root h = exp(i theta): sin(x theta) / sin(theta).
/// Throws DegenerateRoot when theta is a multiple of pi.
double q_bracket(long x, const HalfRoot& h);
Precise q_bracket_precise(long x, const HalfRoot& h);

/// q itself.
PreciseComplex deformation_value(const DeformParam& p);
/// {n}_q as a complex number.
PreciseComplex q_number_value(const DeformParam& p, long n);
/// |{n}_q|. For roots this is |sin(pi j n / m) / sin(pi j / m)|.
Precise q_number_modulus(const DeformParam& p, long n);

struct BracketRelationResidual {
  std::string name;
  double max_residual = 0.0;
  long checked = 0;  // number of (m, j, k) points evaluated
};

struct BracketReport {
  int m_max = 0;
  double tolerance = 0.0;
  std::vector<BracketRelationResidual> relations;
  bool passed() const;
};

/// Sweeps 2 <= m <= m_max, 1 <= j <= m - 1, 0 <= k <= m over the
/// complementarity and inversion identities of the q-bracket:
///   complement:             [m-k]_j = (-1)^{j-1} [k]_j
///   complement_fundamental: [m-k]_1 = [k]_1
///   inverse:                [k]_{m-j} = (-1)^{k-1} [k]_j
///   inverse_complement:     [m-k]_{m-j} = (-1)^{m-k-1} [m-k]_j
/// where [x]_j is the bracket at exp(i pi j / m). The inverse half-root of
/// q_j is taken on the fixed branch of q_{m-j} = q_j^{-1}.
BracketReport verify_bracket_relations(int m_max, double tolerance = 1e-10);

}  // namespace qosc
