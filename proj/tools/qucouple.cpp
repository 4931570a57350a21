// qucouple command-line front end.
//
// Exit codes: 0 success, 1 domain error, 2 usage error. Results go to stdout
// (or --out) only when the command succeeds; diagnostics go to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qucouple/qucouple.hpp"

namespace {

using namespace qucouple;
using io::format_number;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw UsageError("cannot write " + out_path);
  out << text;
}

unsigned workers_from(int flag) {
  if (flag > 0)
    return static_cast<unsigned>(flag);
  if (const char* env = std::getenv("QUCOUPLE_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0)
        return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 0;
}

struct Options {
  bool quiet = false;
  int workers = 0;

  // transmon
  double ec = 0.0;
  std::optional<double> ej, ej_left, ej_right;
  double flux = 0.0;

  // couple / effective
  std::string config;
  std::optional<double> c1, c2, cc, c1c, c2c, c12;
  std::optional<double> w1, w2, wc, g1, g2, g12;

  // concurrence / critical-temp
  double g = 0.0;
  double temp = 0.0;
  std::string dump_rho;

  // sweep
  std::string preset;
  std::string format = "csv";
  std::string out;
  std::size_t points = 0;
  bool list_presets = false;

  // validate-swt
  std::vector<double> g_list{0.4, 0.2, 0.1, 0.05};
  std::vector<double> temp_list{0.5};
  std::string mode = "both";

  // si-temp
  double freq_ghz = 4.0;
};

void warn(const Options& o, const std::string& msg) {
  if (!o.quiet)
    std::cerr << "warning: " << msg << '\n';
}

void line(std::ostream& out, const std::string& key, double value) {
  out << key << " = " << format_number(value) << '\n';
}

std::string run_transmon(const Options& o) {
  double e_j;
  if (o.ej) {
    e_j = *o.ej;
  } else if (o.ej_left && o.ej_right) {
    e_j = circuit::tunable_josephson_energy({*o.ej_left, *o.ej_right, o.flux});
  } else {
    throw UsageError("transmon needs --ej or both --ej-left and --ej-right");
  }
  const auto s = circuit::transmon_frequency({o.ec, e_j});
  std::ostringstream out;
  line(out, "e_j", e_j);
  line(out, "frequency", s.frequency);
  line(out, "anharmonicity", s.anharmonicity);
  return out.str();
}

void override_topology(circuit::CircuitTopology& t, const Options& o) {
  if (o.c1) t.c_1 = *o.c1;
  if (o.c2) t.c_2 = *o.c2;
  if (o.cc) t.c_c = *o.cc;
  if (o.c1c) t.c_1c = *o.c1c;
  if (o.c2c) t.c_2c = *o.c2c;
  if (o.c12) t.c_12 = *o.c12;
}

std::string run_couple(const Options& o) {
  circuit::CircuitTopology topology;
  std::array<double, 3> omega{};
  bool have_omega = false;
  if (!o.config.empty()) {
    const auto params = io::circuit_from_json(io::parse_document(read_file(o.config)));
    topology = params.topology;
    const auto modes = circuit::analyse(params);
    omega = {modes.omega_1(), modes.omega_2(), modes.omega_c()};
    have_omega = true;
  }
  override_topology(topology, o);
  if (o.w1) omega[0] = *o.w1;
  if (o.w2) omega[1] = *o.w2;
  if (o.wc) omega[2] = *o.wc;
  if (!have_omega && !(o.w1 && o.w2 && o.wc))
    throw UsageError("couple needs --config or all of --w1 --w2 --wc");

  const auto g = circuit::coupling_strengths(topology, omega[0], omega[1], omega[2]);
  for (const auto& w : circuit::check_hierarchy(topology))
    warn(o, w.message());
  std::ostringstream out;
  line(out, "omega_1", omega[0]);
  line(out, "omega_2", omega[1]);
  line(out, "omega_c", omega[2]);
  line(out, "g_1", g.g_1);
  line(out, "g_2", g.g_2);
  line(out, "g_12", g.g_12);
  if (g.eta)
    line(out, "eta", *g.eta);
  else
    out << "eta = absent\n";
  return out.str();
}

ThreeModeSpins spins_from(const Options& o) {
  ThreeModeSpins s;
  if (!o.config.empty()) {
    const auto doc = io::parse_document(read_file(o.config));
    if (doc.contains("omega_1")) {
      s = io::spins_from_json(doc);
    } else {
      const auto modes = circuit::analyse(io::circuit_from_json(doc));
      s = {modes.omega_1(), modes.omega_2(), modes.omega_c(),
           modes.couplings.g_1, modes.couplings.g_2, modes.couplings.g_12};
    }
  } else if (!(o.w1 && o.w2 && o.wc)) {
    throw UsageError("effective needs --config or all of --w1 --w2 --wc");
  }
  if (o.w1) s.omega_1 = *o.w1;
  if (o.w2) s.omega_2 = *o.w2;
  if (o.wc) s.omega_c = *o.wc;
  if (o.g1) s.g_1 = *o.g1;
  if (o.g2) s.g_2 = *o.g2;
  if (o.g12) s.g_12 = *o.g12;
  return s;
}

std::string run_effective(const Options& o) {
  const ThreeModeSpins s = spins_from(o);
  const EffectiveTwoQubit e = swt_reduce(s);
  for (const auto& w : dispersive_warnings(s))
    warn(o, w);
  const auto eig = analytic_eigensystem(e);
  std::ostringstream out;
  line(out, "omega_1_eff", e.omega_1);
  line(out, "omega_2_eff", e.omega_2);
  line(out, "coupling_eff", e.coupling);
  line(out, "alpha", e.alpha());
  line(out, "gamma", e.gamma());
  out << "spectrum =";
  for (double x : eig.energies)
    out << ' ' << format_number(x);
  out << '\n';
  return out.str();
}

std::string run_concurrence(const Options& o) {
  const EffectiveTwoQubit e{*o.w1, *o.w2, o.g};
  const double c = concurrence_thermal(e, o.temp);
  if (!o.dump_rho.empty()) {
    const auto rho = gibbs_state(effective_hamiltonian(e), o.temp);
    emit(io::to_json(rho).dump(2) + "\n", o.dump_rho);
  }
  return format_number(c) + "\n";
}

std::string run_critical_temp(const Options& o) {
  const auto t = critical_temperature({*o.w1, *o.w2, o.g});
  if (!t)
    throw DomainError("no critical temperature found");
  return format_number(*t) + "\n";
}

std::string run_sweep_command(const Options& o) {
  if (o.list_presets) {
    std::ostringstream out;
    for (const auto& p : case_presets())
      out << p.name << '\n';
    return out.str();
  }
  if (o.preset.empty() == o.config.empty())
    throw UsageError("sweep needs exactly one of --preset or --config");
  SweepSpec spec = o.preset.empty() ? io::sweep_from_json(io::parse_document(read_file(o.config)))
                                    : find_preset(o.preset);
  if (o.points != 0) {
    spec.axis_x.points = o.points;
    if (spec.axis_y)
      spec.axis_y->points = o.points;
  }
  const SweepGrid grid = run_sweep(spec, workers_from(o.workers));
  for (const auto& w : grid.warnings)
    warn(o, w);
  std::ostringstream out;
  if (o.format == "csv")
    io::write_csv(out, grid);
  else if (o.format == "matrix")
    io::write_matrix(out, grid);
  else
    out << io::to_json(grid).dump() << '\n';
  return out.str();
}

std::string run_validate_swt(const Options& o) {
  const ThreeModeSpins base{o.w1.value_or(4.0), o.w2.value_or(4.0), o.wc.value_or(6.0),
                            0.0, 0.0, o.g12.value_or(0.0)};
  std::vector<Reduction> modes;
  if (o.mode == "both")
    modes = {Reduction::trace, Reduction::project};
  else
    modes = {parse_reduction(o.mode)};

  std::ostringstream out;
  out << "# qucouple validate-swt\n# version " << kVersion << '\n';
  out << "# omega_1=" << format_number(base.omega_1) << " omega_2=" << format_number(base.omega_2)
      << " omega_c=" << format_number(base.omega_c) << " g_12=" << format_number(base.g_12)
      << " (g_1 = g_2 = g)\n";
  out << "g,T,mode,C_exact,C_eff,error\n";
  for (double g : o.g_list)
    for (double t : o.temp_list)
      for (Reduction m : modes) {
        ThreeModeSpins s = base;
        s.g_1 = s.g_2 = g;
        for (const auto& w : dispersive_warnings(s))
          warn(o, w);
        const auto cmp = compare_swt(s, t, m);
        out << format_number(g) << ',' << format_number(t) << ',' << to_string(m) << ','
            << format_number(cmp.exact) << ',' << format_number(cmp.effective) << ','
            << format_number(cmp.error()) << '\n';
      }
  return out.str();
}

std::string run_si_temp(const Options& o) {
  std::ostringstream out;
  line(out, "temperature_mK", units::to_physical_temperature(o.temp, o.freq_ghz));
  out << "note = " << units::kTemperatureCaveat << '\n';
  return out.str();
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"qucouple: thermal entanglement of two transmons with a tunable coupler"};
  app.set_version_flag("--version", std::string(qucouple::kVersion));
  app.require_subcommand(1);
  app.add_flag("-q,--quiet", o.quiet, "Suppress warnings");

  auto* transmon = app.add_subcommand("transmon", "Frequency and anharmonicity of one transmon");
  transmon->add_option("--ec", o.ec, "Charging energy")->required();
  transmon->add_option("--ej", o.ej, "Josephson energy");
  transmon->add_option("--ej-left", o.ej_left, "Left junction energy");
  transmon->add_option("--ej-right", o.ej_right, "Right junction energy");
  transmon->add_option("--flux", o.flux, "Flux bias in flux quanta");

  auto add_topology = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "Circuit (or spin-chain) JSON document");
    sub->add_option("--c1", o.c1);
    sub->add_option("--c2", o.c2);
    sub->add_option("--cc", o.cc);
    sub->add_option("--c1c", o.c1c);
    sub->add_option("--c2c", o.c2c);
    sub->add_option("--c12", o.c12);
  };
  auto* couple = app.add_subcommand("couple", "Coupling strengths from capacitances");
  add_topology(couple);
  couple->add_option("--w1", o.w1);
  couple->add_option("--w2", o.w2);
  couple->add_option("--wc", o.wc);

  auto* effective = app.add_subcommand("effective", "Schrieffer-Wolff effective two-qubit model");
  effective->add_option("--config", o.config, "Circuit or spin-chain JSON document");
  effective->add_option("--w1", o.w1);
  effective->add_option("--w2", o.w2);
  effective->add_option("--wc", o.wc);
  effective->add_option("--g1", o.g1);
  effective->add_option("--g2", o.g2);
  effective->add_option("--g12", o.g12);

  auto* conc = app.add_subcommand("concurrence", "Thermal concurrence at one point");
  conc->add_option("--w1", o.w1, "Effective frequency of qubit 1")->required();
  conc->add_option("--w2", o.w2, "Effective frequency of qubit 2")->required();
  conc->add_option("--g", o.g, "Effective coupling")->required();
  conc->add_option("--temp", o.temp, "Temperature (k_B = 1)")->required();
  conc->add_option("--dump-rho", o.dump_rho, "Write the Gibbs density matrix as JSON");

  auto* tc = app.add_subcommand("critical-temp", "Temperature where concurrence vanishes");
  tc->add_option("--w1", o.w1)->required();
  tc->add_option("--w2", o.w2)->required();
  tc->add_option("--g", o.g)->required();

  auto* sweep = app.add_subcommand("sweep", "Concurrence over a 1-D or 2-D grid");
  sweep->add_option("--preset", o.preset, "Named preset (see --list-presets)");
  sweep->add_option("--config", o.config, "Sweep JSON document");
  sweep->add_option("--format", o.format)->check(CLI::IsMember({"csv", "matrix", "json"}));
  sweep->add_option("--out", o.out, "Output file (default stdout)");
  sweep->add_option("--workers", o.workers, "Worker threads (0 = QUCOUPLE_WORKERS or auto)");
  sweep->add_option("--points", o.points, "Override resolution of every axis")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
  sweep->add_flag("--list-presets", o.list_presets);

  auto* swt = app.add_subcommand("validate-swt", "Exact 8x8 benchmark of the effective model");
  swt->add_option("--w1", o.w1, "default 4");
  swt->add_option("--w2", o.w2, "default 4");
  swt->add_option("--wc", o.wc, "default 6");
  swt->add_option("--g12", o.g12, "default 0");
  swt->add_option("--g", o.g_list, "Qubit-coupler couplings (g_1 = g_2)")->delimiter(',');
  swt->add_option("--temp", o.temp_list, "Temperatures")->delimiter(',');
  swt->add_option("--mode", o.mode)->check(CLI::IsMember({"trace", "project", "both"}));
  swt->add_option("--out", o.out, "Output file (default stdout)");

  auto* si = app.add_subcommand("si-temp", "Convert a dimensionless temperature to mK");
  si->add_option("--temp", o.temp)->required();
  si->add_option("--freq-ghz", o.freq_ghz, "Reference frequency in GHz (default 4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    std::string result;
    std::string out_path;
    if (*transmon) {
      result = run_transmon(o);
    } else if (*couple) {
      result = run_couple(o);
    } else if (*effective) {
      result = run_effective(o);
    } else if (*conc) {
      result = run_concurrence(o);
    } else if (*tc) {
      result = run_critical_temp(o);
    } else if (*sweep) {
      result = run_sweep_command(o);
      out_path = o.out;
    } else if (*swt) {
      result = run_validate_swt(o);
      out_path = o.out;
    } else if (*si) {
      result = run_si_temp(o);
    }
    emit(result, out_path);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qucouple::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
