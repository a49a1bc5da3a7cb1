#pragma once

#include "qosc/hamiltonian.hpp"
#include "qosc/qpoly.hpp"
#include "qosc/reducibility.hpp"
#include "qosc/roots.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qosc {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed = false;
  double max_residual = 0.0;
};

inline constexpr const char* kVersion = QOSC_VERSION;

/// Report envelope with fixed field order:
/// command, version, energy_unit, inputs, results, checks.
Json make_envelope(const std::string& command, Json inputs, Json results, const std::vector<Check>& checks);

/// Deterministic JSON text: two-space indentation, insertion-ordered keys,
/// floating-point values with 17 significant digits (always containing a
/// '.' or exponent so they parse back as floats). Non-finite values become null.
std::string serialize_json(const Json& value);

/// Plain-text rendering of an envelope for terminals.
std::string render_table(const Json& envelope);

std::string format_double(double value);

Json to_json(const BigInt& n);
Json to_json(const QPoly& p);
Json to_json(const std::complex<double>& z);
Json to_json(const DeformParam& p);
Json to_json(const IrrepDecomposition& d);
Json to_json(const SpectrumReport& r);

}  // namespace qosc
