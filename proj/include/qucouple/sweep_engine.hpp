#pragma once

// 1-D and 2-D concurrence sweeps over the effective-model parameters
// {T, g, w1, w2} or, with symmetric_omega, {T, g, w, alpha} where
// w1 = (alpha + w)/2 and w2 = (alpha - w)/2.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qucouple/effective_model.hpp"
#include "qucouple/entanglement.hpp"
#include "qucouple/errors.hpp"
#include "qucouple/version.hpp"

namespace qucouple {

enum class SweepParameter { temperature, coupling, omega_1, omega_2, detuning, alpha };

inline std::string_view to_string(SweepParameter p) {
  switch (p) {
  case SweepParameter::temperature: return "T";
  case SweepParameter::coupling: return "g";
  case SweepParameter::omega_1: return "w1";
  case SweepParameter::omega_2: return "w2";
  case SweepParameter::detuning: return "w";
  case SweepParameter::alpha: return "alpha";
  }
  return "?";
}

inline SweepParameter parse_sweep_parameter(std::string_view s) {
  for (auto p : {SweepParameter::temperature, SweepParameter::coupling, SweepParameter::omega_1,
                 SweepParameter::omega_2, SweepParameter::detuning, SweepParameter::alpha})
    if (to_string(p) == s)
      return p;
  throw DomainError("unknown sweep parameter: " + std::string(s));
}

/// Lower bound applied to temperature grid values.
inline constexpr double kMinSweepTemperature = 1e-4;
inline constexpr std::size_t kDefaultResolution = 201;
/// Value recorded for cells whose evaluation failed.
inline constexpr double kPoisonedCell = -1.0;

/// Evenly spaced including both ends. Written so that a range symmetric about
/// zero produces exactly mirrored values.
inline std::vector<double> linspace(double min, double max, std::size_t points) {
  std::vector<double> v(points);
  const double steps = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double k = static_cast<double>(i);
    v[i] = (min * (steps - k) + max * k) / steps;
  }
  v.front() = min;
  v.back() = max;
  return v;
}

struct SweepAxis {
  SweepParameter parameter = SweepParameter::coupling;
  double min = 0.0;
  double max = 1.0;
  std::size_t points = kDefaultResolution;

  std::vector<double> values() const {
    auto v = linspace(min, max, points);
    if (parameter == SweepParameter::temperature)
      for (auto& t : v)
        t = std::max(t, kMinSweepTemperature);
    return v;
  }

  friend bool operator==(const SweepAxis&, const SweepAxis&) = default;
};

struct SweepSpec {
  std::string name = "custom";
  SweepAxis axis_x;
  std::optional<SweepAxis> axis_y;
  std::map<SweepParameter, double> fixed;
  bool symmetric_omega = false;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;

  std::vector<SweepParameter> free_parameters() const {
    if (symmetric_omega)
      return {SweepParameter::temperature, SweepParameter::coupling, SweepParameter::detuning,
              SweepParameter::alpha};
    return {SweepParameter::temperature, SweepParameter::coupling, SweepParameter::omega_1,
            SweepParameter::omega_2};
  }

  void validate() const {
    const auto free = free_parameters();
    auto is_free = [&](SweepParameter p) {
      return std::find(free.begin(), free.end(), p) != free.end();
    };
    std::vector<SweepParameter> axes{axis_x.parameter};
    if (axis_y)
      axes.push_back(axis_y->parameter);
    for (const SweepAxis* a : {&axis_x, axis_y ? &*axis_y : nullptr}) {
      if (a == nullptr)
        continue;
      const std::string label(to_string(a->parameter));
      if (!is_free(a->parameter))
        throw DomainError("axis parameter " + label + " not valid in this omega parametrisation");
      if (!std::isfinite(a->min) || !std::isfinite(a->max) || !(a->min < a->max))
        throw DomainError("axis " + label + " needs finite min < max");
      if (a->points < 2)
        throw DomainError("axis " + label + " needs at least 2 points");
      if (a->parameter == SweepParameter::temperature &&
          (a->min < 0.0 || a->max <= kMinSweepTemperature))
        throw DomainError("temperature axis must lie in [0, inf) and extend past 1e-4");
    }
    if (axis_y && axis_y->parameter == axis_x.parameter)
      throw DomainError("sweep axes must be distinct");
    for (const auto& [p, value] : fixed) {
      const std::string label(to_string(p));
      if (!is_free(p))
        throw DomainError("fixed parameter " + label + " not valid in this omega parametrisation");
      if (std::find(axes.begin(), axes.end(), p) != axes.end())
        throw DomainError("parameter " + label + " is both swept and fixed");
      if (p == SweepParameter::temperature && !(value > 0.0))
        throw DomainError("fixed temperature must be positive");
    }
    for (auto p : free) {
      const bool on_axis = std::find(axes.begin(), axes.end(), p) != axes.end();
      // alpha defaults to 0 in the symmetric parametrisation.
      if (!on_axis && !fixed.contains(p) && p != SweepParameter::alpha)
        throw DomainError("parameter " + std::string(to_string(p)) + " is neither swept nor fixed");
    }
  }

  /// Effective model and temperature at one grid point.
  std::pair<EffectiveTwoQubit, double> point(double x, std::optional<double> y) const {
    auto value = [&](SweepParameter p) {
      if (axis_x.parameter == p)
        return x;
      if (axis_y && axis_y->parameter == p)
        return *y;
      if (auto it = fixed.find(p); it != fixed.end())
        return it->second;
      return 0.0;
    };
    EffectiveTwoQubit e;
    e.coupling = value(SweepParameter::coupling);
    if (symmetric_omega) {
      const double a = value(SweepParameter::alpha);
      const double w = value(SweepParameter::detuning);
      e.omega_1 = 0.5 * (a + w);
      e.omega_2 = 0.5 * (a - w);
    } else {
      e.omega_1 = value(SweepParameter::omega_1);
      e.omega_2 = value(SweepParameter::omega_2);
    }
    return {e, value(SweepParameter::temperature)};
  }
};

struct SweepGrid {
  SweepSpec spec;
  std::string version{kVersion};
  std::vector<double> x_values;
  std::vector<double> y_values;   // empty for 1-D sweeps
  /// Row-major, one row per y value.
  std::vector<double> concurrence;
  std::vector<std::string> warnings;
  std::size_t poisoned = 0;

  std::size_t rows() const { return y_values.empty() ? 1 : y_values.size(); }
  std::size_t cols() const { return x_values.size(); }
  double at(std::size_t ix, std::size_t iy = 0) const { return concurrence[iy * cols() + ix]; }
};

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0)
    return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates `evaluate(EffectiveTwoQubit, T)` on every grid cell. Cells are
/// independent and written by index, so the result does not depend on the
/// worker count. A throwing cell is recorded as -1 with a warning.
template <class Evaluator>
SweepGrid run_sweep_with(const SweepSpec& spec, Evaluator evaluate, unsigned workers = 1) {
  spec.validate();
  SweepGrid grid;
  grid.spec = spec;
  grid.x_values = spec.axis_x.values();
  if (spec.axis_y)
    grid.y_values = spec.axis_y->values();
  const std::size_t nx = grid.cols();
  const std::size_t total = nx * grid.rows();
  grid.concurrence.assign(total, 0.0);

  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), total));
  std::vector<std::vector<std::pair<std::size_t, std::string>>> failures(n_workers);

  auto work = [&](unsigned w) {
    for (std::size_t k = w; k < total; k += n_workers) {
      const double x = grid.x_values[k % nx];
      const std::optional<double> y =
          spec.axis_y ? std::optional<double>(grid.y_values[k / nx]) : std::nullopt;
      try {
        const auto [e, t] = spec.point(x, y);
        grid.concurrence[k] = evaluate(e, t);
      } catch (const std::exception& ex) {
        grid.concurrence[k] = kPoisonedCell;
        failures[w].emplace_back(k, ex.what());
      }
    }
  };
  if (n_workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w)
      pool.emplace_back(work, w);
  }

  std::vector<std::pair<std::size_t, std::string>> all;
  for (auto& f : failures)
    all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  grid.poisoned = all.size();
  for (const auto& [k, what] : all)
    grid.warnings.push_back("cell " + std::to_string(k) + ": " + what);
  return grid;
}

inline SweepGrid run_sweep(const SweepSpec& spec, unsigned workers = 1) {
  return run_sweep_with(
      spec, [](const EffectiveTwoQubit& e, double t) { return concurrence_thermal(e, t); },
      workers);
}

inline std::vector<SweepSpec> case_presets() {
  using P = SweepParameter;
  const SweepAxis coupling_0_10{P::coupling, 0.0, 10.0, kDefaultResolution};
  const SweepAxis temperature_0_5{P::temperature, 0.0, 5.0, kDefaultResolution};
  const SweepAxis w1{P::omega_1, -5.0, 5.0, kDefaultResolution};
  const SweepAxis w2{P::omega_2, -5.0, 5.0, kDefaultResolution};
  const SweepAxis coupling_0_5{P::coupling, 0.0, 5.0, kDefaultResolution};
  const SweepAxis detuning{P::detuning, -10.0, 10.0, kDefaultResolution};

  return {
      {"case1-equal", coupling_0_10, temperature_0_5, {{P::omega_1, 1.0}, {P::omega_2, 1.0}}, false},
      {"case1-unequal", coupling_0_10, temperature_0_5, {{P::omega_1, 5.0}, {P::omega_2, 1.0}}, false},
      {"case2-a", w1, w2, {{P::temperature, 0.4}, {P::coupling, 0.4}}, false},
      {"case2-b", w1, w2, {{P::temperature, 0.2}, {P::coupling, 0.2}}, false},
      {"case2-c", w1, w2, {{P::temperature, 0.4}, {P::coupling, 0.2}}, false},
      {"case3-cold", coupling_0_5, detuning, {{P::temperature, 0.1}, {P::alpha, 0.0}}, true},
      {"case3-hot", coupling_0_5, detuning, {{P::temperature, 2.0}, {P::alpha, 0.0}}, true},
  };
}

inline SweepSpec find_preset(std::string_view name) {
  for (auto& s : case_presets())
    if (s.name == name)
      return s;
  throw DomainError("unknown preset: " + std::string(name));
}

} // namespace qucouple
