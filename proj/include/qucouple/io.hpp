#pragma once

// JSON configuration documents and tabular output.
//
// Circuit document (flat keys; coupling capacitances and flux biases default
// to 0, unknown keys are rejected):
//   c_1, c_2, c_c, c_1c, c_2c, c_12,
//   e_c_1, e_c_2, e_c_c,
//   e_j_left_1, e_j_right_1, flux_bias_1, (same for _2 and _c)
//
// Spin-chain document: omega_1, omega_2, omega_c, g_1, g_2, g_12.
//
// Sweep document:
//   {"name": "...", "axis_x": {"parameter": "g", "min": 0, "max": 10, "points": 201},
//    "axis_y": {...} | null, "fixed": {"T": 0.2, ...}, "symmetric_omega": false}

#include <cstdio>
#include <ostream>
#include <set>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qucouple/circuit.hpp"
#include "qucouple/effective_model.hpp"
#include "qucouple/errors.hpp"
#include "qucouple/sweep_engine.hpp"
#include "qucouple/thermal_state.hpp"
#include "qucouple/version.hpp"

namespace qucouple::io {

using nlohmann::json;

/// 12 significant digits.
inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace detail {

inline void reject_unknown(const json& j, const std::set<std::string>& allowed, std::string_view what) {
  if (!j.is_object())
    throw DomainError(std::string(what) + " document must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!allowed.contains(key))
      throw DomainError("unknown key '" + key + "' in " + std::string(what) + " document");
}

inline double number(const json& j, const std::string& key) {
  if (!j.contains(key))
    throw DomainError("missing key '" + key + "'");
  if (!j.at(key).is_number())
    throw DomainError("key '" + key + "' must be a number");
  return j.at(key).get<double>();
}

inline double number_or(const json& j, const std::string& key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

} // namespace detail

inline json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

inline circuit::CircuitParams circuit_from_json(const json& j) {
  std::set<std::string> allowed{"c_1", "c_2", "c_c", "c_1c", "c_2c", "c_12"};
  for (const char* m : {"1", "2", "c"})
    for (const char* k : {"e_c_", "e_j_left_", "e_j_right_", "flux_bias_"})
      allowed.insert(std::string(k) + m);
  detail::reject_unknown(j, allowed, "circuit");

  circuit::CircuitParams p;
  p.topology = {detail::number(j, "c_1"),           detail::number(j, "c_2"),
                detail::number(j, "c_c"),           detail::number_or(j, "c_1c", 0.0),
                detail::number_or(j, "c_2c", 0.0), detail::number_or(j, "c_12", 0.0)};
  const char* modes[3] = {"1", "2", "c"};
  for (std::size_t k = 0; k < 3; ++k) {
    const std::string m = modes[k];
    p.e_c[k] = detail::number(j, "e_c_" + m);
    p.junctions[k] = {detail::number(j, "e_j_left_" + m), detail::number(j, "e_j_right_" + m),
                      detail::number_or(j, "flux_bias_" + m, 0.0)};
  }
  return p;
}

inline ThreeModeSpins spins_from_json(const json& j) {
  detail::reject_unknown(j, {"omega_1", "omega_2", "omega_c", "g_1", "g_2", "g_12"}, "spin-chain");
  return {detail::number(j, "omega_1"), detail::number(j, "omega_2"), detail::number(j, "omega_c"),
          detail::number_or(j, "g_1", 0.0), detail::number_or(j, "g_2", 0.0),
          detail::number_or(j, "g_12", 0.0)};
}

inline json to_json(const SweepAxis& a) {
  return {{"parameter", std::string(to_string(a.parameter))},
          {"min", a.min},
          {"max", a.max},
          {"points", a.points}};
}

inline SweepAxis axis_from_json(const json& j) {
  detail::reject_unknown(j, {"parameter", "min", "max", "points"}, "sweep axis");
  SweepAxis a;
  if (!j.contains("parameter") || !j.at("parameter").is_string())
    throw DomainError("sweep axis needs a string 'parameter'");
  a.parameter = parse_sweep_parameter(j.at("parameter").get<std::string>());
  a.min = detail::number(j, "min");
  a.max = detail::number(j, "max");
  if (j.contains("points")) {
    if (!j.at("points").is_number_unsigned())
      throw DomainError("'points' must be a positive integer");
    a.points = j.at("points").get<std::size_t>();
  }
  return a;
}

inline json to_json(const SweepSpec& s) {
  json fixed = json::object();
  for (const auto& [p, v] : s.fixed)
    fixed[std::string(to_string(p))] = v;
  return {{"name", s.name},
          {"axis_x", to_json(s.axis_x)},
          {"axis_y", s.axis_y ? to_json(*s.axis_y) : json(nullptr)},
          {"fixed", fixed},
          {"symmetric_omega", s.symmetric_omega}};
}

inline SweepSpec sweep_from_json(const json& j) {
  detail::reject_unknown(j, {"name", "axis_x", "axis_y", "fixed", "symmetric_omega"}, "sweep");
  SweepSpec s;
  if (j.contains("name"))
    s.name = j.at("name").get<std::string>();
  if (!j.contains("axis_x"))
    throw DomainError("sweep document needs 'axis_x'");
  s.axis_x = axis_from_json(j.at("axis_x"));
  if (j.contains("axis_y") && !j.at("axis_y").is_null())
    s.axis_y = axis_from_json(j.at("axis_y"));
  if (j.contains("fixed")) {
    if (!j.at("fixed").is_object())
      throw DomainError("'fixed' must be an object");
    for (const auto& [key, value] : j.at("fixed").items()) {
      if (!value.is_number())
        throw DomainError("fixed value '" + key + "' must be a number");
      s.fixed[parse_sweep_parameter(key)] = value.get<double>();
    }
  }
  if (j.contains("symmetric_omega"))
    s.symmetric_omega = j.at("symmetric_omega").get<bool>();
  s.validate();
  return s;
}

namespace detail {

inline void write_header(std::ostream& out, const SweepGrid& g) {
  const SweepSpec& s = g.spec;
  out << "# qucouple sweep\n";
  out << "# version " << g.version << '\n';
  out << "# preset " << s.name << '\n';
  auto axis = [&](const char* label, const SweepAxis& a) {
    out << "# " << label << ' ' << to_string(a.parameter) << " [" << format_number(a.min) << ", "
        << format_number(a.max) << "] " << a.points << '\n';
  };
  axis("x", s.axis_x);
  if (s.axis_y)
    axis("y", *s.axis_y);
  for (const auto& [p, v] : s.fixed)
    out << "# fixed " << to_string(p) << '=' << format_number(v) << '\n';
  if (s.symmetric_omega)
    out << "# omega parametrisation w1 = (alpha + w)/2, w2 = (alpha - w)/2\n";
  out << "# spec " << to_json(s).dump() << '\n';
  if (g.poisoned > 0)
    out << "# poisoned_cells " << g.poisoned << '\n';
}

} // namespace detail

/// `x,y,concurrence` rows (or `x,concurrence` for 1-D), row-major over y.
inline void write_csv(std::ostream& out, const SweepGrid& g) {
  detail::write_header(out, g);
  const bool two_d = !g.y_values.empty();
  out << (two_d ? "x,y,concurrence\n" : "x,concurrence\n");
  for (std::size_t iy = 0; iy < g.rows(); ++iy)
    for (std::size_t ix = 0; ix < g.cols(); ++ix) {
      out << format_number(g.x_values[ix]) << ',';
      if (two_d)
        out << format_number(g.y_values[iy]) << ',';
      out << format_number(g.at(ix, iy)) << '\n';
    }
}

/// Heatmap layout: first row holds x values, first column y values.
inline void write_matrix(std::ostream& out, const SweepGrid& g) {
  detail::write_header(out, g);
  out << "y\\x";
  for (double x : g.x_values)
    out << ',' << format_number(x);
  out << '\n';
  for (std::size_t iy = 0; iy < g.rows(); ++iy) {
    out << (g.y_values.empty() ? std::string("-") : format_number(g.y_values[iy]));
    for (std::size_t ix = 0; ix < g.cols(); ++ix)
      out << ',' << format_number(g.at(ix, iy));
    out << '\n';
  }
}

inline json to_json(const SweepGrid& g) {
  json rows = json::array();
  for (std::size_t iy = 0; iy < g.rows(); ++iy) {
    json row = json::array();
    for (std::size_t ix = 0; ix < g.cols(); ++ix)
      row.push_back(g.at(ix, iy));
    rows.push_back(row);
  }
  return {{"generator", "qucouple sweep"},
          {"version", g.version},
          {"spec", to_json(g.spec)},
          {"x", g.x_values},
          {"y", g.y_values},
          {"concurrence", rows},
          {"poisoned_cells", g.poisoned}};
}

/// Row-major [re, im] pairs.
template <std::size_t N>
json to_json(const DensityMatrix<N>& rho) {
  json entries = json::array();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      entries.push_back({rho(i, j).real(), rho(i, j).imag()});
  json out = {{"version", std::string(kVersion)}, {"dim", N}, {"entries", entries}};
  if (auto z = rho.partition_function())
    out["partition_function"] = *z;
  return out;
}

template <std::size_t N>
DensityMatrix<N> density_from_json(const json& j) {
  if (!j.contains("dim") || j.at("dim").get<std::size_t>() != N)
    throw DomainError("density matrix dimension mismatch");
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != N * N)
    throw DomainError("density matrix needs dim*dim entries");
  Matrix<N> m;
  for (std::size_t k = 0; k < N * N; ++k)
    m(k / N, k % N) = Complex(entries[k].at(0).get<double>(), entries[k].at(1).get<double>());
  return DensityMatrix<N>::from_matrix(m);
}

} // namespace qucouple::io
