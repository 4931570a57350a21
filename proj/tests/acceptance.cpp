// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "qucouple/qucouple.hpp"

using namespace qucouple;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> w(-5.0, 5.0);
  std::uniform_real_distribution<double> t(0.05, 5.0);
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    double g = 0.0;
    while (g == 0.0)
      g = w(rng);
    const EffectiveTwoQubit e{w(rng), w(rng), g};
    const double temp = t(rng);
    const double closed = concurrence_thermal(e, temp);
    const double numeric = concurrence_wootters(gibbs_state(effective_hamiltonian(e), temp)).value;
    worst = std::max(worst, std::abs(closed - numeric));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << "max |diff| = " << worst << ", " << secs << " s";
  return {worst <= 1e-10 && secs < 5.0, d.str()};
}

Outcome strong_coupling_curve() {
  const EffectiveTwoQubit e{1.0, 1.0, 5.0};
  const double tc = *critical_temperature(e);
  const double cold = concurrence_thermal(e, 0.01);
  bool decreasing = true;
  bool zero_tail = true;
  const auto temps = linspace(0.5, 10.0, 2001);
  double prev = concurrence_thermal(e, temps[0]);
  for (std::size_t i = 1; i < temps.size(); ++i) {
    const double c = concurrence_thermal(e, temps[i]);
    if (temps[i] < tc)
      decreasing = decreasing && c < prev;
    else
      zero_tail = zero_tail && c == 0.0;
    prev = c;
  }
  const double at6 = concurrence_thermal(e, 6.0);
  std::ostringstream d;
  d << "C(0.01) = " << cold << ", T_c = " << tc << ", C(6) = " << at6;
  return {cold >= 0.999 && decreasing && zero_tail && at6 == 0.0 &&
              std::abs(tc - 5.0 / std::asinh(1.0)) <= 1e-8 * tc,
          d.str()};
}

double grid_max(double w1, double w2) {
  double best = 0.0;
  for (double g : linspace(0.0, 10.0, 201))
    for (double t : linspace(0.1, 5.0, 201))
      best = std::max(best, concurrence_thermal({w1, w2, g}, t));
  return best;
}

Outcome detuned_weaker() {
  const double equal = grid_max(1.0, 1.0);
  const double unequal = grid_max(5.0, 1.0);
  std::ostringstream d;
  d << "max C equal = " << equal << ", unequal = " << unequal;
  return {unequal < equal, d.str()};
}

Outcome coupling_evenness() {
  const auto g = linspace(-10.0, 10.0, 201);
  std::size_t bad = 0;
  for (double w1 : {1.0, 5.0, -2.5})
    for (double t : {0.1, 0.7, 3.0})
      for (std::size_t i = 0; i < g.size(); ++i)
        if (concurrence_thermal({w1, 1.0, g[i]}, t) != concurrence_thermal({w1, 1.0, g[200 - i]}, t))
          ++bad;
  return {bad == 0, std::to_string(bad) + " mismatches"};
}

Outcome spectrum_check() {
  std::mt19937_64 rng(555);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  double worst_value = 0.0;
  double worst_residual = 0.0;
  for (int i = 0; i < 500; ++i) {
    const EffectiveTwoQubit e{u(rng), u(rng), u(rng)};
    const auto h = effective_hamiltonian(e);
    auto analytic = analytic_eigensystem(e).energies;
    std::sort(analytic.begin(), analytic.end());
    const auto numeric = numeric_eigensystem(h);
    for (std::size_t k = 0; k < 4; ++k)
      worst_value = std::max(worst_value, std::abs(analytic[k] - numeric.values[k]));
    worst_residual = std::max(worst_residual, max_residual(h, numeric));
  }
  std::ostringstream d;
  d << "max eigenvalue diff = " << worst_value << ", max residual = " << worst_residual;
  return {worst_value <= 1e-10 && worst_residual <= 1e-11, d.str()};
}

Outcome thermal_suite() {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> t(0.05, 5.0);
  double trace = 0.0, neg = 0.0, comm = 0.0, z = 0.0;
  for (int i = 0; i < 500; ++i) {
    const EffectiveTwoQubit e{u(rng), u(rng), u(rng)};
    const double temp = t(rng);
    const auto h = effective_hamiltonian(e);
    const auto rho = gibbs_state(h, temp);
    trace = std::max(trace, std::abs(rho.matrix().trace() - Complex(1.0)));
    neg = std::max(neg, -rho.min_eigenvalue());
    comm = std::max(comm, commutator(rho.matrix(), h).norm());
    const double zc = partition_function(e, temp);
    z = std::max(z, std::abs(*rho.partition_function() - zc) / zc);
  }
  std::ostringstream d;
  d << "trace " << trace << ", -min eig " << neg << ", [rho,H] " << comm << ", Z rel " << z;
  return {trace <= 1e-10 && neg <= 1e-10 && comm <= 1e-10 && z <= 1e-10, d.str()};
}

Outcome critical_temperatures() {
  bool ok = true;
  std::ostringstream d;
  for (double g : {0.5, 1.0, 2.0, 5.0}) {
    const EffectiveTwoQubit e{0.5, 0.5, g};
    const double tc = *critical_temperature(e);
    const double ref = g / std::log(1.0 + std::sqrt(2.0));
    const double rel = std::abs(tc - ref) / ref;
    ok = ok && rel <= 1e-8 && concurrence_thermal(e, 0.99 * tc) > 0.0 &&
         concurrence_thermal(e, 1.01 * tc) == 0.0;
    d << "g=" << g << " rel " << rel << "; ";
  }
  return {ok, d.str()};
}

Outcome swt_convergence() {
  const std::vector<double> gs{0.4, 0.2, 0.1, 0.05};
  std::vector<double> err;
  std::ostringstream d;
  for (double g : gs) {
    err.push_back(swt_error({4.0, 4.0, 6.0, g, g, 0.0}, 0.5, Reduction::trace));
    d << "g=" << g << " err " << err.back() << "; ";
  }
  bool ok = err[3] < err[0] / 4.0;
  for (std::size_t i = 1; i < err.size(); ++i)
    ok = ok && err[i] < err[i - 1];
  return {ok, d.str()};
}

Outcome pure_states() {
  std::mt19937_64 rng(4242);
  std::normal_distribution<double> n(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    Vector<4> v{};
    double s = 0.0;
    for (auto& x : v) {
      x = Complex(n(rng), n(rng));
      s += std::norm(x);
    }
    for (auto& x : v)
      x /= std::sqrt(s);
    const double c = concurrence_pure({v[0], v[1], v[2], v[3]});
    worst = std::max(worst, std::abs(c - concurrence_wootters(DensityMatrix<4>::pure(v)).value));
  }
  const double r = 1.0 / std::sqrt(2.0);
  bool bell = true;
  for (const PureState4& b : {PureState4{r, 0.0, 0.0, r}, PureState4{r, 0.0, 0.0, -r},
                              PureState4{0.0, r, r, 0.0}, PureState4{0.0, r, -r, 0.0}})
    bell = bell && concurrence_pure(b) == 1.0;
  bool product = true;
  for (const PureState4& p : {PureState4{1.0, 0.0, 0.0, 0.0}, PureState4{0.5, 0.5, 0.5, 0.5},
                              PureState4{0.0, 0.0, 0.6, Complex(0.0, 0.8)}}) {
    product = product && concurrence_pure(p) == 0.0 &&
              concurrence_wootters(DensityMatrix<4>::pure(p.vector())).value == 0.0;
  }
  std::ostringstream d;
  d << "max |pure - Wootters| = " << worst << ", Bell exact " << bell << ", product exact " << product;
  return {worst <= 1e-10 && bell && product, d.str()};
}

Outcome determinism() {
  const auto a = cli::run("sweep --preset case2-b --workers 1");
  const auto b = cli::run("sweep --preset case2-b --workers 4");
  const bool meta = a.out.find("# fixed g=0.2") != std::string::npos &&
                    a.out.find("# fixed T=0.2") != std::string::npos;
  std::ostringstream d;
  d << a.out.size() << " bytes, identical " << (a.out == b.out) << ", metadata " << meta;
  return {a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out && meta, d.str()};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"closed-form concurrence equals Wootters on Gibbs state", oracle_equivalence},
      {"strong coupling: near-maximal when cold, vanishes past T_c", strong_coupling_curve},
      {"detuned qubits entangle more weakly", detuned_weaker},
      {"concurrence is even in coupling", coupling_evenness},
      {"analytic spectrum matches Jacobi", spectrum_check},
      {"Gibbs state invariants and partition function", thermal_suite},
      {"critical temperature at zero detuning", critical_temperatures},
      {"Schrieffer-Wolff error shrinks with coupling", swt_convergence},
      {"pure-state concurrence", pure_states},
      {"sweep output deterministic with metadata", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
