// Command-line front end: parameter sweeps to CSV, critical-point location,
// and the oracle cross-check suite.
//
// Exit codes: 0 success, 2 argument error, 3 numerical failure during a
// sweep, 4 no transition in the requested bracket, 5 validation failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xyzchain/csv.hpp"
#include "xyzchain/model.hpp"
#include "xyzchain/sweep.hpp"
#include "xyzchain/validate.hpp"

namespace {

using namespace xyzchain;

constexpr int kExitOk = 0;
constexpr int kExitArgs = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitNoTransition = 4;
constexpr int kExitValidation = 5;

struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// model flags shared by the subcommands

struct ModelFlags {
  long n = 2;
  double j = 1.0, gamma = 0.0, jx = 0.0, jy = 0.0, jz = 0.0, b = 0.0;
  double t = 1.0;
  std::string pair = "0:1";
  std::string boundary;  // empty = open for n=2, periodic otherwise

  bool given_j = false, given_gamma = false, given_jx = false, given_jy = false;

  CLI::Option *o_n = nullptr, *o_j = nullptr, *o_gamma = nullptr,
              *o_jx = nullptr, *o_jy = nullptr, *o_jz = nullptr,
              *o_b = nullptr, *o_t = nullptr, *o_pair = nullptr,
              *o_boundary = nullptr;
};

void add_model_flags(CLI::App* cmd, ModelFlags& m) {
  m.o_n = cmd->add_option("--n", m.n, "number of sites (2-12)");
  m.o_j = cmd->add_option("--j", m.j, "mean in-plane coupling J");
  m.o_gamma = cmd->add_option("--gamma", m.gamma, "in-plane anisotropy gamma");
  m.o_jx = cmd->add_option("--jx", m.jx, "x coupling (alternative to --j/--gamma)");
  m.o_jy = cmd->add_option("--jy", m.jy, "y coupling (alternative to --j/--gamma)");
  m.o_jz = cmd->add_option("--jz", m.jz, "z coupling");
  m.o_b = cmd->add_option("--b", m.b, "magnetic field");
  m.o_t = cmd->add_option("--t", m.t, "temperature (used when T is not swept)");
  m.o_pair = cmd->add_option("--pair", m.pair, "qubit pair as a:b (default 0:1)");
  m.o_boundary = cmd->add_option("--boundary", m.boundary,
                                 "open or periodic (default: open for n=2, "
                                 "periodic for n>=3)");
}

std::pair<int, int> parse_pair(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos)
    throw ArgError("pair must be given as a:b, got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ArgError("cannot parse pair '" + s + "'");
  }
}

Boundary parse_boundary(const std::string& s, long n) {
  if (s.empty()) return n == 2 ? Boundary::open : Boundary::periodic;
  if (s == "open") return Boundary::open;
  if (s == "periodic") return Boundary::periodic;
  throw ArgError("boundary must be 'open' or 'periodic', got '" + s + "'");
}

ChainParams make_params(const ModelFlags& m) {
  const bool xy_form = m.given_jx || m.given_jy;
  const bool jg_form = m.given_j || m.given_gamma;
  if (xy_form && jg_form)
    throw ArgError("give either --j/--gamma or --jx/--jy, not both");
  const Boundary bc = parse_boundary(m.boundary, m.n);
  try {
    if (xy_form)
      return ChainParams::from_xy(int(m.n), m.jx, m.jy, m.jz, m.b, bc);
    return ChainParams::from_j_gamma(int(m.n), m.j, m.gamma, m.jz, m.b, bc);
  } catch (const std::invalid_argument& e) {
    throw ArgError(e.what());
  }
}

// ---------------------------------------------------------------------------
// axis and config parsing

SweepAxis parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 4)
    throw ArgError("axis must be NAME:min:max:steps, got '" + spec + "'");

  std::string name = parts[0];
  for (char& ch : name) ch = char(std::toupper(static_cast<unsigned char>(ch)));
  SweepAxis ax;
  if (name == "B")
    ax.param = SweepParameter::b_field;
  else if (name == "T")
    ax.param = SweepParameter::temperature;
  else if (name == "JZ")
    ax.param = SweepParameter::j_z;
  else if (name == "GAMMA")
    ax.param = SweepParameter::gamma;
  else if (name == "J")
    ax.param = SweepParameter::j_mean;
  else
    throw ArgError("unknown axis parameter '" + parts[0] +
                   "' (expected B, T, JZ, GAMMA or J)");
  try {
    ax.min = std::stod(parts[1]);
    ax.max = std::stod(parts[2]);
    ax.steps = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw ArgError("cannot parse axis '" + spec + "'");
  }
  if (ax.steps < 2) throw ArgError("axis steps must be >= 2");
  if (!(ax.min < ax.max)) throw ArgError("axis needs min < max");
  return ax;
}

// Flat key=value file, '#' starts a comment; command-line flags override.
std::map<std::string, std::string> parse_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ArgError("config line " + std::to_string(lineno) + " is not key=value");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key.empty()) throw ArgError("config line " + std::to_string(lineno) + ": empty key");
    out[key] = value;
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ArgError("config value for '" + key + "' is not a number: '" + v + "'");
  }
}

long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long x = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ArgError("config value for '" + key + "' is not an integer: '" + v + "'");
  }
}

// ---------------------------------------------------------------------------
// sweep

struct SweepFlags {
  ModelFlags model;
  std::vector<std::string> axes;
  std::string out;
  std::string engine = "auto";
  long threads = 0;
  std::string config;

  CLI::Option *o_axes = nullptr, *o_out = nullptr, *o_engine = nullptr,
              *o_threads = nullptr;
};

Engine parse_engine(const std::string& s) {
  if (s == "auto") return Engine::automatic;
  if (s == "closed") return Engine::closed_form;
  if (s == "generic") return Engine::generic;
  throw ArgError("engine must be auto, closed or generic, got '" + s + "'");
}

void merge_config_into_flags(const std::map<std::string, std::string>& cfg,
                             SweepFlags& f) {
  std::map<std::string, std::string> rest = cfg;
  const auto take = [&rest](const char* key) -> std::optional<std::string> {
    const auto it = rest.find(key);
    if (it == rest.end()) return std::nullopt;
    std::string v = it->second;
    rest.erase(it);
    return v;
  };

  ModelFlags& m = f.model;
  if (auto v = take("n"); v && !m.o_n->count()) m.n = to_long("n", *v);
  if (auto v = take("j"); v) {
    if (!m.o_j->count()) m.j = to_double("j", *v);
    m.given_j = true;
  }
  if (auto v = take("gamma"); v) {
    if (!m.o_gamma->count()) m.gamma = to_double("gamma", *v);
    m.given_gamma = true;
  }
  if (auto v = take("jx"); v) {
    if (!m.o_jx->count()) m.jx = to_double("jx", *v);
    m.given_jx = true;
  }
  if (auto v = take("jy"); v) {
    if (!m.o_jy->count()) m.jy = to_double("jy", *v);
    m.given_jy = true;
  }
  if (auto v = take("jz"); v && !m.o_jz->count()) m.jz = to_double("jz", *v);
  if (auto v = take("b"); v && !m.o_b->count()) m.b = to_double("b", *v);
  if (auto v = take("t"); v && !m.o_t->count()) m.t = to_double("t", *v);
  if (auto v = take("pair"); v && !m.o_pair->count()) m.pair = *v;
  if (auto v = take("boundary"); v && !m.o_boundary->count()) m.boundary = *v;

  const auto ax1 = take("axis1");
  const auto ax2 = take("axis2");
  if (!f.o_axes->count()) {
    if (ax1) f.axes.push_back(*ax1);
    if (ax2) {
      if (!ax1) throw ArgError("config gives axis2 without axis1");
      f.axes.push_back(*ax2);
    }
  }
  if (auto v = take("out"); v && !f.o_out->count()) f.out = *v;
  if (auto v = take("engine"); v && !f.o_engine->count()) f.engine = *v;
  if (auto v = take("threads"); v && !f.o_threads->count())
    f.threads = to_long("threads", *v);

  if (!rest.empty())
    throw ArgError("unknown config key '" + rest.begin()->first + "'");
}

int run_sweep_command(SweepFlags& f) {
  if (!f.config.empty()) merge_config_into_flags(parse_config(f.config), f);
  f.model.given_j |= f.model.o_j->count() > 0;
  f.model.given_gamma |= f.model.o_gamma->count() > 0;
  f.model.given_jx |= f.model.o_jx->count() > 0;
  f.model.given_jy |= f.model.o_jy->count() > 0;

  if (f.out.empty()) throw ArgError("--out is required for sweep");
  if (f.axes.size() > 2) throw ArgError("at most two --axis options");

  SweepSpec spec;
  spec.base = make_params(f.model);
  spec.temperature = f.model.t;
  spec.pair = parse_pair(f.model.pair);
  spec.engine = parse_engine(f.engine);
  if (f.threads < 0) throw ArgError("--threads must be >= 0");
  spec.thread_hint = int(f.threads);
  if (!f.axes.empty()) spec.axis1 = parse_axis(f.axes[0]);
  if (f.axes.size() > 1) spec.axis2 = parse_axis(f.axes[1]);

  const auto start = std::chrono::steady_clock::now();
  SweepResult result;
  try {
    result = run_sweep(spec);
  } catch (const sweep_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    throw ArgError(e.what());
  }
  write_sweep_csv(result, f.out);
  const auto stop = std::chrono::steady_clock::now();
  const double secs = std::chrono::duration<double>(stop - start).count();

  double cmin = result.records.empty() ? 0.0 : result.records.front().concurrence;
  double cmax = cmin;
  for (const auto& r : result.records) {
    cmin = std::min(cmin, r.concurrence);
    cmax = std::max(cmax, r.concurrence);
  }
  std::cout << "grid " << result.steps1 << "x" << result.steps2 << " = "
            << result.records.size() << " points, concurrence in ["
            << format_double(cmin) << ", " << format_double(cmax) << "], wall "
            << std::fixed << std::setprecision(2) << secs << " s, wrote "
            << f.out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// critical

struct CriticalFlags {
  ModelFlags model;
  std::string kind;
  std::string bracket;
  double tol = 1e-6;
  std::string which = "first_above";
  long scan = 200;
  double eps_zero = 1e-6;
  std::string scan_out;
};

int run_critical_command(CriticalFlags& f) {
  f.model.given_j = f.model.o_j->count() > 0;
  f.model.given_gamma = f.model.o_gamma->count() > 0;
  f.model.given_jx = f.model.o_jx->count() > 0;
  f.model.given_jy = f.model.o_jy->count() > 0;

  const auto colon = f.bracket.find(':');
  if (f.bracket.empty() || colon == std::string::npos)
    throw ArgError("--bracket must be lo:hi");
  double lo = 0, hi = 0;
  try {
    lo = std::stod(f.bracket.substr(0, colon));
    hi = std::stod(f.bracket.substr(colon + 1));
  } catch (const std::exception&) {
    throw ArgError("cannot parse bracket '" + f.bracket + "'");
  }

  const ChainParams base = make_params(f.model);
  const std::pair<int, int> pair = parse_pair(f.model.pair);

  CriticalPoint cp;
  try {
    if (f.kind == "bc") {
      cp = find_critical_field_zero_t(base, lo, hi, f.tol);
    } else if (f.kind == "tc") {
      CrossingSelect which;
      if (f.which == "first_above")
        which = CrossingSelect::first_above;
      else if (f.which == "last_below")
        which = CrossingSelect::last_below;
      else
        throw ArgError("--which must be first_above or last_below");
      cp = find_critical_temperature(base, lo, hi, f.tol, which, pair,
                                     int(f.scan), f.eps_zero);
    } else {
      throw ArgError("--kind must be bc or tc");
    }
  } catch (const no_transition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoTransition;
  } catch (const std::invalid_argument& e) {
    throw ArgError(e.what());
  }

  if (!f.scan_out.empty()) {
    std::vector<std::pair<double, double>> rows;
    rows.reserve(f.scan);
    for (long i = 0; i < f.scan; ++i) {
      const double x = lo + (hi - lo) * (double(i) / double(f.scan - 1));
      ChainParams p = base;
      double c;
      if (f.kind == "bc") {
        p.b_field = x;
        c = zero_t_concurrence(p);
      } else {
        c = pairwise_concurrence(p, x, pair).c;
      }
      rows.emplace_back(x, c);
    }
    write_scan_csv(f.kind == "bc" ? "b" : "t", rows, f.scan_out);
  }

  const char* kind_name =
      cp.kind == CriticalKind::field_at_zero_t ? "field_at_zero_t" : "temperature";
  std::cout << kind_name << "," << format_double(cp.location) << ","
            << format_double(cp.bracket_width) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validate

struct ValidateFlags {
  std::uint64_t seed = 12345;
  long draws = 1000;
  bool self_test = false;
  std::string json_out;
};

int run_validate_command(const ValidateFlags& f) {
  ValidationOptions opts;
  opts.seed = f.seed;
  opts.draws = int(f.draws);
  opts.self_test = f.self_test;
  if (opts.draws < 1) throw ArgError("--draws must be >= 1");
  if (f.self_test)
    std::cout << "self-test: fault injected into the thermal closed-form "
                 "route; oracle-triangle must FAIL\n";

  const ValidationReport report = run_validation(opts);
  std::cout << format_report(report);
  if (!f.json_out.empty()) {
    std::ofstream jf(f.json_out, std::ios::binary);
    if (!jf) throw ArgError("cannot open '" + f.json_out + "' for writing");
    jf << report_to_json(report);
  }
  std::cout << "validation: " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  return report.all_pass() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal pairwise entanglement in anisotropic XYZ spin chains"};
  app.require_subcommand(1);

  SweepFlags sweep_flags;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "evaluate concurrence over a parameter grid and write CSV");
  add_model_flags(sweep_cmd, sweep_flags.model);
  sweep_flags.o_axes = sweep_cmd->add_option(
      "--axis", sweep_flags.axes, "axis as NAME:min:max:steps (up to two)");
  sweep_flags.o_out = sweep_cmd->add_option("--out", sweep_flags.out, "output CSV path");
  sweep_flags.o_engine = sweep_cmd->add_option(
      "--engine", sweep_flags.engine, "auto, closed or generic (default auto)");
  sweep_flags.o_threads = sweep_cmd->add_option(
      "--threads", sweep_flags.threads,
      "worker threads (hint only; never changes output bytes)");
  sweep_cmd->add_option("--config", sweep_flags.config,
                        "key=value config file; flags override file values");

  CriticalFlags critical_flags;
  CLI::App* critical_cmd = app.add_subcommand(
      "critical", "locate the critical field (T=0) or critical temperature");
  add_model_flags(critical_cmd, critical_flags.model);
  critical_cmd->add_option("--kind", critical_flags.kind, "bc or tc")->required();
  critical_cmd->add_option("--bracket", critical_flags.bracket, "search bracket lo:hi")
      ->required();
  critical_cmd->add_option("--tol", critical_flags.tol, "bisection tolerance");
  critical_cmd->add_option("--which", critical_flags.which,
                           "first_above or last_below (tc only)");
  critical_cmd->add_option("--scan", critical_flags.scan,
                           "scan resolution for bracketing (tc)");
  critical_cmd->add_option("--eps-zero", critical_flags.eps_zero,
                           "entanglement threshold for crossings");
  critical_cmd->add_option("--scan-out", critical_flags.scan_out,
                           "optional CSV of the scan");

  ValidateFlags validate_flags;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "run every oracle cross-check suite");
  validate_cmd->add_option("--seed", validate_flags.seed, "RNG seed");
  validate_cmd->add_option("--draws", validate_flags.draws, "random draws");
  validate_cmd->add_flag("--self-test", validate_flags.self_test,
                         "inject a fault; the suite must then fail");
  validate_cmd->add_option("--json", validate_flags.json_out,
                           "write the full report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitArgs;
  }

  try {
    if (sweep_cmd->parsed()) return run_sweep_command(sweep_flags);
    if (critical_cmd->parsed()) return run_critical_command(critical_flags);
    if (validate_cmd->parsed()) return run_validate_command(validate_flags);
  } catch (const ArgError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitArgs;
}
