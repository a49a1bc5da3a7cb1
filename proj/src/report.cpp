#include "qosc/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qosc {

std::string format_double(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  std::string out(buf);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

namespace {

void write(std::ostringstream& out, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close_pad(static_cast<std::size_t>(depth) * 2, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << Json(key).dump() << ": ";
        write(out, item, depth + 1);
      }
      out << "\n" << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out << ",\n";
        first = false;
        out << pad;
        write(out, item, depth + 1);
      }
      out << "\n" << close_pad << "]";
      return;
    }
    case Json::value_t::number_float:
      out << format_double(v.get<double>());
      return;
    default:
      out << v.dump();
      return;
  }
}

std::string scalar_text(const Json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im"))
    return scalar_text(v["re"]) + (v["im"].get<double>() < 0 ? " - " : " + ") + scalar_text(Json(std::abs(v["im"].get<double>()))) + "i";
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + scalar_text(v[k]);
    return s + "]";
  }
  if (v.is_object()) {
    std::string s = "{";
    bool first = true;
    for (const auto& [key, item] : v.items()) {
      s += (first ? "" : ", ") + key + ": " + scalar_text(item);
      first = false;
    }
    return s + "}";
  }
  return v.dump();
}

}  // namespace

std::string serialize_json(const Json& value) {
  std::ostringstream out;
  write(out, value, 0);
  out << "\n";
  return out.str();
}

Json make_envelope(const std::string& command, Json inputs, Json results, const std::vector<Check>& checks) {
  Json env = Json::object();
  env["command"] = command;
  env["version"] = kVersion;
  env["energy_unit"] = kEnergyUnit;
  env["inputs"] = std::move(inputs);
  env["results"] = std::move(results);
  Json list = Json::array();
  for (const auto& c : checks) {
    Json item = Json::object();
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["max_residual"] = c.max_residual;
    list.push_back(std::move(item));
  }
  env["checks"] = std::move(list);
  return env;
}

std::string render_table(const Json& envelope) {
  std::ostringstream out;
  out << envelope.value("command", "") << "  (qosc " << envelope.value("version", "") << ", energies in "
      << envelope.value("energy_unit", "") << ")\n";
  auto section = [&](const char* title, const Json& obj) {
    if (!obj.is_object() || obj.empty()) return;
    out << title << ":\n";
    std::size_t width = 0;
    for (const auto& [key, item] : obj.items()) width = std::max(width, key.size());
    for (const auto& [key, item] : obj.items()) {
      out << "  " << key << std::string(width - key.size(), ' ') << "  " << scalar_text(item) << "\n";
    }
  };
  section("inputs", envelope.value("inputs", Json::object()));
  section("results", envelope.value("results", Json::object()));
  const Json checks = envelope.value("checks", Json::array());
  if (!checks.empty()) {
    out << "checks:\n";
    std::size_t width = 0;
    for (const auto& c : checks) width = std::max(width, c["name"].get<std::string>().size());
    for (const auto& c : checks) {
      const std::string name = c["name"].get<std::string>();
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.3e", c["max_residual"].get<double>());
      out << "  " << name << std::string(width - name.size(), ' ') << "  " << (c["passed"].get<bool>() ? "PASS" : "FAIL")
          << "  max_residual=" << buf << "\n";
    }
  }
  return out.str();
}

Json to_json(const BigInt& n) {
  // Values beyond 64 bits are emitted as decimal strings.
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(n));
  return Json(n.str());
}

Json to_json(const QPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const std::complex<double>& z) {
  Json j = Json::object();
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

Json to_json(const DeformParam& p) {
  Json j = Json::object();
  if (const auto* real = std::get_if<RealQ>(&p)) {
    j["kind"] = "real";
    j["q"] = real->value();
  } else {
    const auto& root = std::get<RootOfUnity>(p);
    j["kind"] = "root";
    j["m"] = root.order();
    j["j"] = root.index();
  }
  return j;
}

Json to_json(const IrrepDecomposition& d) {
  Json j = Json::object();
  j["ambient_dim"] = d.ambient_dim;
  j["block_count"] = d.block_count;
  j["block_dim"] = d.block_dim;
  Json blocks = Json::array();
  for (const auto& b : d.blocks) blocks.push_back(Json::array({b.begin, b.end - 1}));
  j["blocks"] = std::move(blocks);
  return j;
}

Json to_json(const SpectrumReport& r) {
  Json j = Json::object();
  j["param"] = to_json(r.param);
  j["dim"] = r.dim;
  j["energy_unit"] = r.energy_unit;
  j["diagonal"] = r.diagonal;
  j["blocks"] = r.blocks ? to_json(*r.blocks) : Json(nullptr);
  j["block_pattern_verified"] = r.block_pattern_verified;
  j["eigensolver_discrepancy"] = r.eigensolver_discrepancy;
  return j;
}

}  // namespace qosc
