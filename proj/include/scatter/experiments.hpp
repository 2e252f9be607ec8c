#pragma once

// Experiment drivers behind the command-line tool.  Each command turns a
// key=value configuration into one CSV table (fixed schema per command) plus
// a JSON summary.  Output depends only on the resolved configuration, so a
// fixed config and seed reproduce the files byte for byte.

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scatter/arith.hpp"
#include "scatter/errors.hpp"
#include "scatter/lattice.hpp"
#include "scatter/measures.hpp"
#include "scatter/momentum.hpp"
#include "scatter/sectors.hpp"
#include "scatter/spectral.hpp"

namespace scatter::exp {

using arith::i64;
using arith::u64;
using lattice::RepTable;

// ---------------------------------------------------------------------------
// configuration

inline const std::set<std::string>& known_commands() {
  static const std::set<std::string> c{"spectrum", "scar", "measure", "diagnostics", "sector-count", "hypothesis"};
  return c;
}

inline const std::set<std::string>& known_keys() {
  static const std::set<std::string> k{
      "command", "x",       "coupling", "tol",       "epsilon",   "q0",      "q1",    "m0",         "m1",
      "out",     "seed",    "workers",  "T",         "H",         "a0",      "a1",    "r_band_lo",  "r_band_hi",
      "g_band_lo", "g_band_hi", "g_angle_tol", "floor", "p2_ceiling", "y",   "level", "momentum_tol", "window",
      "B",       "samples", "q",        "a",         "theta",     "L"};
  return k;
}

/// Plain key=value settings.  Every value read (including defaults) is
/// recorded, and the recorded set is what gets hashed and echoed.
class Config {
 public:
  void set(const std::string& key, const std::string& value) {
    if (!known_keys().count(key)) throw ConfigError("unknown config key '" + key + "'");
    values_[key] = value;
  }

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      const auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string{};
        return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
      };
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
      set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string str(const std::string& key, const std::string& def) const {
    auto it = values_.find(key);
    const std::string v = it == values_.end() ? def : it->second;
    resolved_[key] = v;
    return v;
  }

  double real(const std::string& key, double def) const {
    auto it = values_.find(key);
    double v = def;
    if (it != values_.end()) v = parse_real(key, it->second);
    resolved_[key] = format(v);
    return v;
  }

  u64 integer(const std::string& key, u64 def) const {
    auto it = values_.find(key);
    u64 v = def;
    if (it != values_.end()) {
      const double d = parse_real(key, it->second);
      if (!(d >= 0) || d != std::floor(d) || d > 1.8e19) throw ConfigError(key + " must be a non-negative integer");
      v = static_cast<u64>(d);
    }
    resolved_[key] = std::to_string(v);
    return v;
  }

  std::optional<u64> optional_integer(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return integer(key, 0);
  }

  spectral::CouplingMode coupling(const std::string& def) const {
    const std::string s = str("coupling", def);
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ConfigError("coupling must be weak:<phi> or strong:<alpha>");
    const std::string kind = s.substr(0, colon);
    const double v = parse_real("coupling", s.substr(colon + 1));
    try {
      if (kind == "weak") return spectral::CouplingMode::weak(v);
      if (kind == "strong") return spectral::CouplingMode::strong(v);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
    throw ConfigError("coupling must be weak:<phi> or strong:<alpha>");
  }

  const std::map<std::string, std::string>& resolved() const { return resolved_; }

  static std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

 private:
  static double parse_real(const std::string& key, const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw ConfigError(key + ": cannot parse '" + s + "' as a number");
    }
    if (pos != s.size() || !std::isfinite(v)) throw ConfigError(key + ": cannot parse '" + s + "' as a number");
    return v;
  }

  std::map<std::string, std::string> values_;
  mutable std::map<std::string, std::string> resolved_;
};

/// FNV-1a over the sorted resolved key=value lines.
inline std::string config_hash(const std::map<std::string, std::string>& resolved) {
  std::uint64_t h = 14695981039346656037ull;
  for (const auto& [k, v] : resolved) {
    if (k == "out") continue;  // where results go does not change them
    for (char c : k + "=" + v + "\n") {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

// ---------------------------------------------------------------------------
// tables

inline std::string cell(double v) {
  if (!std::isfinite(v)) throw SolverFailure("non-finite value in report");
  return Config::format(v);
}
inline std::string cell(long double v) { return cell(double(v)); }
inline std::string cell(u64 v) { return std::to_string(v); }
inline std::string cell(i64 v) { return std::to_string(v); }
inline std::string cell(int v) { return std::to_string(v); }
inline std::string cell(unsigned v) { return std::to_string(v); }
inline std::string cell(bool v) { return v ? "true" : "false"; }
inline std::string cell(const char* v) { return v; }
inline std::string cell(const std::string& v) { return v; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  template <class... Ts>
  void add(const Ts&... vs) {
    std::vector<std::string> r{cell(vs)...};
    if (r.size() != columns.size()) throw std::logic_error("row does not match schema");
    rows.push_back(std::move(r));
  }

  std::string csv() const {
    std::string s;
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) s += ',';
        s += r[i];
      }
      s += '\n';
    };
    line(columns);
    for (const auto& r : rows) line(r);
    return s;
  }
};

/// CSV column schema of each command.
inline std::vector<std::string> schema(const std::string& command) {
  if (command == "spectrum") return {"n", "n_plus", "lambda", "delta", "residual"};
  if (command == "scar")
    return {"m", "r_m", "r_mplus", "lambda", "delta", "c_lambda", "expectation_cos4", "predicted_cos4", "top2_mass"};
  if (command == "measure") return {"kind", "n", "mu4", "mu8", "lower", "upper", "attainable_ok"};
  if (command == "diagnostics") return {"table", "index", "quantity", "value"};
  if (command == "sector-count")
    return {"q", "a", "theta", "epsilon", "x", "count", "main_A", "main_B", "rel_dev_A", "rel_dev_B"};
  if (command == "hypothesis") return {"x", "Q0", "Q1", "epsilon", "y", "count", "density_proxy"};
  throw ConfigError("unknown command '" + command + "'");
}

struct Report {
  std::string command;
  Table table;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::map<std::string, std::string> config;
  std::string config_hash;
  int exit_code = 0;  // 4 when some rows failed to solve

  nlohmann::ordered_json sidecar() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["config_hash"] = config_hash;
    j["config"] = nlohmann::ordered_json(config);
    j["columns"] = table.columns;
    j["rows"] = table.rows.size();
    j["summary"] = summary;
    return j;
  }
};

inline Report make_report(const std::string& command, const std::string& schema_of) {
  Report r;
  r.command = command;
  r.table.columns = schema(schema_of);
  return r;
}

// ---------------------------------------------------------------------------
// helpers

namespace detail {

inline double median(std::vector<double> v) {
  if (v.empty()) return NAN;
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : (v[k - 1] + v[k]) / 2;
}

inline double quantile(std::vector<double> v, double q) {
  if (v.empty()) return NAN;
  std::sort(v.begin(), v.end());
  const double pos = q * double(v.size() - 1);
  const std::size_t i = static_cast<std::size_t>(std::floor(pos));
  const double f = pos - double(i);
  return i + 1 < v.size() ? v[i] * (1 - f) + v[i + 1] * f : v[i];
}

inline nlohmann::ordered_json json_number(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

// uniform [0, 1) from the top 53 bits, identical on every platform
inline double unit(std::mt19937_64& g) { return double(g() >> 11) * 0x1.0p-53; }

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

inline void budget(bool ok, const std::string& msg) {
  if (!ok) throw BudgetError(msg);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// spectrum

inline Report cmd_spectrum(const Config& cfg) {
  Report rep = make_report("spectrum", "spectrum");
  const u64 x = cfg.integer("x", 100);
  const auto mode = cfg.coupling("weak:0");
  const double tol = cfg.real("tol", 1e-10);
  const unsigned workers = unsigned(cfg.integer("workers", 1));
  detail::require(x >= 1, "x must be >= 1");
  detail::require(tol > 0, "tol must be positive");
  detail::budget(x <= spectral::kSpectrumMaxRange, "spectrum: x exceeds 10^7");
  spectral::SpectralSumPolicy policy;
  if (cfg.has("window")) policy.window = cfg.real("window", 0);
  const u64 limit = mode.is_weak() ? std::max<u64>(policy.cutoff_for(double(x) + 2 * std::sqrt(double(x)) + 8), x + 1)
                                   : x + 2 * arith::isqrt(x) + 64;
  detail::budget(limit <= lattice::kMaxDenseLimit, "spectrum: cutoff exceeds the dense table budget");
  const RepTable table(limit);
  const auto res = spectral::spectrum_tolerant(table, x, mode, policy, tol, workers);
  double max_res = 0;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& g : res) {
    if (g.eigenvalue) {
      const auto& e = *g.eigenvalue;
      rep.table.add(e.n, e.n_plus, e.lambda, e.delta, e.residual);
      max_res = std::max(max_res, std::fabs(e.residual));
    } else {
      rep.table.rows.push_back({cell(g.n), cell(lattice::successor(g.n, &table)), "", "", ""});
      failures.push_back({{"n", g.n}, {"error", g.error}});
    }
  }
  rep.summary["gaps"] = res.size();
  rep.summary["max_abs_residual"] = max_res;
  rep.summary["failures"] = failures;
  rep.summary["coupling"] = mode.describe();
  if (!failures.empty()) rep.exit_code = 4;
  return rep;
}

// ---------------------------------------------------------------------------
// scar pipeline

struct ScarSettings {
  u64 x;
  u64 Q0, Q1;
  sieve::SearchSpec search;
  int level;
  spectral::CouplingMode mode;
  double tol;
  double momentum_tol;
};

struct ScarRow {
  sieve::ScarCandidate cand;
  spectral::NewEigenvalue eig;
  double c;
  double expectation_cos4;
  double predicted_cos4;
  double top2;
  double ratio() const { return double(cand.r_mplus) / double(cand.r_m); }
};

inline sieve::ModuliParams moduli_params(const Config& cfg) {
  sieve::ModuliParams p;
  p.T = unsigned(cfg.integer("T", 1));
  p.H = unsigned(cfg.integer("H", 1));
  p.a0 = unsigned(cfg.integer("a0", 0));
  p.a1 = unsigned(cfg.integer("a1", 0));
  p.r_band = {cfg.integer("r_band_lo", 5), cfg.integer("r_band_hi", 1000)};
  p.g_band = {cfg.integer("g_band_lo", 20), cfg.integer("g_band_hi", 100000)};
  p.g_angle_tol = cfg.real("g_angle_tol", 0.05);
  p.bound = std::uint64_t(1) << 40;
  return p;
}

inline ScarSettings scar_settings(const Config& cfg, nlohmann::ordered_json& summary) {
  ScarSettings s{cfg.integer("x", 1'000'000), 0, 0, {}, 1, spectral::CouplingMode::strong(1), 1e-10, 1e-6};
  detail::budget(s.x <= 10'000'000, "scar: x exceeds 10^7");
  if (cfg.has("q0") || cfg.has("q1")) {
    detail::require(cfg.has("q0") && cfg.has("q1"), "q0 and q1 must be given together");
    s.Q0 = cfg.integer("q0", 0);
    s.Q1 = cfg.integer("q1", 0);
    detail::require(s.Q0 > 0 && s.Q1 > 0 && std::gcd(s.Q0, s.Q1) == 1, "q0, q1 must be positive and coprime");
  } else {
    const u64 m0 = cfg.integer("m0", 5), m1 = cfg.integer("m1", 13);
    sieve::Moduli M;
    try {
      M = sieve::build_moduli(m0, m1, moduli_params(cfg));
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
    s.Q0 = M.Q0;
    s.Q1 = M.Q1;
    summary["moduli"] = {{"m0", m0},         {"m1", m1},           {"Q0_prime", M.Q0_prime}, {"Q1_prime", M.Q1_prime},
                         {"r0", M.r0},       {"r1", M.r1},         {"g_prime", M.g_prime}};
  }
  s.search.sector.epsilon = cfg.real("epsilon", 0.5);
  s.search.sector.floor = cfg.real("floor", 5);
  if (cfg.has("p2_ceiling")) s.search.p2_ceiling = cfg.real("p2_ceiling", 0);
  if (cfg.has("y")) s.search.y = cfg.real("y", 0);
  try {
    s.search.sector.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  s.level = int(cfg.integer("level", 1));
  detail::require(s.level >= 1 && s.level <= 3, "level must be 1, 2 or 3");
  s.mode = cfg.coupling("strong:1");
  s.tol = cfg.real("tol", 1e-10);
  s.momentum_tol = cfg.real("momentum_tol", 1e-6);
  detail::require(s.tol > 0 && s.momentum_tol > 0, "tolerances must be positive");
  return s;
}

/// build_moduli -> candidate search -> solve each accepted gap (m, m + 4) ->
/// momentum expectation of cos 4t against the two-circle prediction.
inline std::vector<ScarRow> scar_rows(const ScarSettings& s, std::vector<std::string>* failures = nullptr) {
  const auto cands = sieve::search_scar_candidates(s.x, s.Q0, s.Q1, s.search, s.level);
  std::unique_ptr<RepTable> table;
  const spectral::SpectralSumPolicy policy;
  if (s.mode.is_weak()) {
    u64 top = 0;
    for (const auto& c : cands) top = std::max(top, c.m + 4);
    const u64 limit = policy.cutoff_for(double(top));
    detail::budget(limit <= lattice::kMaxDenseLimit, "scar: weak coupling cutoff exceeds the dense table budget");
    table = std::make_unique<RepTable>(limit);
  }
  const auto f = momentum::MomentumObservable::cos_k(4);
  std::vector<ScarRow> out;
  for (const auto& c : cands) {
    if (!c.accepted()) continue;
    try {
      const spectral::GapObjective obj(table.get(), c.m, c.m + 4, s.mode, policy);
      const auto eig = spectral::solve_gap(obj, s.mode, s.tol);
      const momentum::Energy e = momentum::Energy::from_gap(c.m, eig.delta);
      ScarRow row{c, eig, momentum::c_lambda(c.r_m, c.r_mplus), 0, 0, 0};
      row.expectation_cos4 = momentum::expectation(e, f, s.momentum_tol).value;
      row.predicted_cos4 = momentum::predicted_limit(c.m, c.m + 4, f);
      row.top2 = momentum::mass_decomposition(e, 8, s.momentum_tol).top_two();
      out.push_back(row);
    } catch (const SolverFailure& err) {
      if (!failures) throw;
      failures->push_back("m=" + std::to_string(c.m) + ": " + err.what());
    }
  }
  return out;
}

struct RatioBand {
  double lo, hi;  // [lo, hi)
  std::size_t count;
  double median_abs_error;
  double median_top2;
};

inline std::vector<RatioBand> ratio_bands(const std::vector<ScarRow>& rows, const std::vector<double>& edges) {
  std::vector<RatioBand> out;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    std::vector<double> err, top;
    for (const auto& r : rows)
      if (r.ratio() >= edges[i] && r.ratio() < edges[i + 1]) {
        err.push_back(std::fabs(r.expectation_cos4 - r.predicted_cos4));
        top.push_back(r.top2);
      }
    out.push_back({edges[i], edges[i + 1], err.size(), detail::median(err), detail::median(top)});
  }
  return out;
}

inline Report cmd_scar(const Config& cfg) {
  Report rep = make_report("scar", "scar");
  const auto s = scar_settings(cfg, rep.summary);
  std::vector<std::string> failures;
  const auto rows = scar_rows(s, &failures);
  std::vector<double> err, top;
  for (const auto& r : rows) {
    rep.table.add(r.cand.m, r.cand.r_m, r.cand.r_mplus, r.eig.lambda, r.eig.delta, r.c, r.expectation_cos4,
                  r.predicted_cos4, r.top2);
    err.push_back(std::fabs(r.expectation_cos4 - r.predicted_cos4));
    top.push_back(r.top2);
  }
  rep.summary["Q0"] = s.Q0;
  rep.summary["Q1"] = s.Q1;
  rep.summary["accepted"] = rows.size();
  rep.summary["median_top2_mass"] = detail::json_number(detail::median(top));
  rep.summary["abs_error_quartiles"] = {detail::json_number(detail::quantile(err, 0.25)),
                                        detail::json_number(detail::median(err)),
                                        detail::json_number(detail::quantile(err, 0.75))};
  auto bands = nlohmann::ordered_json::array();
  for (const auto& b : ratio_bands(rows, {1, 2, 4, 8, 16, INFINITY}))
    bands.push_back({{"ratio_lo", b.lo},
                     {"ratio_hi", detail::json_number(b.hi)},
                     {"count", b.count},
                     {"median_abs_error", detail::json_number(b.median_abs_error)},
                     {"median_top2_mass", detail::json_number(b.median_top2)}});
  rep.summary["ratio_bands"] = bands;
  rep.summary["failures"] = failures;
  if (!failures.empty()) rep.exit_code = 4;
  return rep;
}

// ---------------------------------------------------------------------------
// measures

inline Report cmd_measure(const Config& cfg) {
  Report rep = make_report("measure", "measure");
  const u64 x = cfg.integer("x", 10'000);
  detail::require(x >= 1, "x must be >= 1");
  detail::budget(x <= 200'000, "measure: x exceeds 2*10^5");
  std::size_t violations = 0, rows = 0;
  for (const auto& t : lattice::rep_terms_in_range(1, x)) {
    const auto mu = measures::mu_from_integer(t.m);
    const auto r = measures::attainable_bounds(mu.fourier(4).real(), mu.fourier(8).real());
    rep.table.add("mu_n", t.m, r.mu4, r.mu8, r.lower, r.upper, r.satisfied);
    violations += !r.satisfied;
    ++rows;
  }
  // c * uniform + (1 - c) * mu_1: mu^(4) = mu^(8) = 1 - c
  for (double c : {0.1, 0.25, 0.5}) {
    const measures::MeasureMixture mix(c, {{1 - c, measures::mu_from_integer(1)}});
    const auto r = measures::attainable_bounds(mix.fourier(4).real(), mix.fourier(8).real());
    char label[64];
    std::snprintf(label, sizeof label, "probe:%g*uniform+%g*mu_1", c, 1 - c);
    rep.table.add(label, u64(0), r.mu4,
                  r.mu8, r.lower, r.upper, r.satisfied);
  }
  rep.summary["measures"] = rows;
  rep.summary["violations"] = violations;
  return rep;
}

// ---------------------------------------------------------------------------
// diagnostics

struct TailSample {
  double u, v, t;
};

/// Admissible (u, v, t): v log-uniform in [v_lo, v_hi], u uniform in
/// [v^(9/10), 2v], |u - t| <= v^(1/3), t not a representable integer.
inline std::vector<TailSample> tail_samples(std::mt19937_64& g, std::size_t count, double v_lo, double v_hi) {
  std::vector<TailSample> out;
  while (out.size() < count) {
    const double v = v_lo * std::pow(v_hi / v_lo, detail::unit(g));
    const double u = std::pow(v, 0.9) + (2 * v - std::pow(v, 0.9)) * detail::unit(g);
    const double t = u + std::cbrt(v) * (2 * detail::unit(g) - 1) * 0.999;
    if (t == std::floor(t) && arith::is_sum_two_squares(u64(t))) continue;
    out.push_back({u, v, t});
  }
  return out;
}

/// (r(m)/(m - lambda) + r(m+)/(m+ - lambda)) against its predicted value
/// (pi log lambda weak, 0 strong), with the (log log x)^5 band.
struct TwoTerm {
  double two_term;
  double target;
  double band;
  bool within() const { return std::fabs(two_term - target) <= band; }
};

inline TwoTerm two_term_check(const ScarRow& r, const spectral::CouplingMode& mode, u64 x) {
  const long double d = r.eig.delta;
  const long double g = static_cast<long double>(r.eig.n_plus - r.eig.n);
  const long double tt = (long double)r.cand.r_m / (-d) + (long double)r.cand.r_mplus / (g - d);
  const double target = mode.is_weak() ? double(spectral::kPi * std::log((long double)r.eig.n + d)) : 0.0;
  const double band = std::pow(std::log(std::log(double(x))), 5);
  return {double(tt), target, band};
}

inline Report cmd_diagnostics(const Config& cfg) {
  Report rep = make_report("diagnostics", "diagnostics");
  auto& T = rep.table;
  const u64 x = cfg.integer("x", 100'000);
  const double B = cfg.real("B", 10);
  const u64 samples = cfg.integer("samples", 50);
  const u64 seed = cfg.integer("seed", 1);
  const auto mode = cfg.coupling("weak:0");
  const double tol = cfg.real("tol", 1e-10);
  detail::require(x >= 1000, "diagnostics: x must be >= 1000");
  detail::budget(x <= 1'000'000, "diagnostics: x exceeds 10^6");
  detail::budget(samples <= 10'000, "diagnostics: samples exceeds 10^4");
  std::mt19937_64 gen(seed);

  // truncation defect at the weak eigenvalue of random gaps n <= x
  const spectral::SpectralSumPolicy policy;
  const auto weak = mode.is_weak() ? mode : spectral::CouplingMode::weak(0);
  const u64 cutoff = policy.cutoff_for(double(x) + 1000);
  detail::budget(cutoff <= lattice::kMaxDenseLimit, "diagnostics: cutoff exceeds the dense table budget");
  const RepTable table(std::max<u64>(cutoff, 8'200'000));
  const auto reps = table.terms(1, x);
  std::vector<double> defects;
  for (u64 i = 0; i < samples; ++i) {
    const u64 n = reps[std::size_t(detail::unit(gen) * double(reps.size()))].m;
    const auto e = spectral::solve_gap(&table, n, weak, policy, tol);
    const auto comp = spectral::truncation_complement(table, n, e.lambda, B, double(x), policy);
    const double huge = spectral::truncation_defect(table, n, e.lambda, 1e3, double(x), policy);
    defects.push_back(std::fabs(double(comp)));
    T.add("truncation", i, "n", n);
    T.add("truncation", i, "lambda", e.lambda);
    T.add("truncation", i, "defect", std::fabs(double(comp)));
    T.add("truncation", i, "centered", double(comp + spectral::kPi * std::log((long double)e.lambda)));
    T.add("truncation", i, "defect_B_huge", huge);
  }
  rep.summary["truncation_median_defect"] = detail::json_number(detail::median(defects));

  // short-interval variance at L = sqrt(x) across scales, plus an L sweep
  std::size_t vi = 0;
  double max_ratio = 0;
  const RepTable vtable(1'000'000 + 1'000 + 2);
  auto variance_row = [&](u64 xx, double L) {
    const auto v = spectral::short_interval_variance(vtable, xx, L);
    T.add("variance", vi, "x", xx);
    T.add("variance", vi, "L", L);
    T.add("variance", vi, "value", v.value);
    T.add("variance", vi, "bound_ratio", v.bound_ratio);
    ++vi;
    return v.bound_ratio;
  };
  for (u64 xx : {u64(10'000), u64(100'000), u64(1'000'000)}) max_ratio = std::max(max_ratio, variance_row(xx, std::sqrt(double(xx))));
  for (double L : {3.0, 10.0, 100.0, 1000.0, 100000.0}) variance_row(100'000, L);
  rep.summary["variance_max_bound_ratio_sqrt_L"] = max_ratio;

  // tail identity
  double max_diff = 0;
  const auto ts = tail_samples(gen, 100, 1e4, 1e6);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto r = spectral::tail_identity_check(table, ts[i].u, ts[i].v, ts[i].t);
    T.add("tail", i, "u", ts[i].u);
    T.add("tail", i, "v", ts[i].v);
    T.add("tail", i, "t", ts[i].t);
    T.add("tail", i, "diff", r.diff);
    max_diff = std::max(max_diff, std::fabs(r.diff));
  }
  rep.summary["tail_max_abs_diff"] = max_diff;

  // two-term dominance on strong-coupling scar candidates
  nlohmann::ordered_json scratch;
  Config sc;
  for (const auto& key : {"q0", "q1", "m0", "m1", "T", "H", "a0", "a1", "epsilon", "floor", "p2_ceiling", "y"})
    if (cfg.has(key)) sc.set(key, cfg.str(key, ""));
  sc.set("x", std::to_string(x));
  sc.set("coupling", "strong:1");
  const auto s = scar_settings(sc, scratch);
  std::size_t within = 0, k = 0;
  for (const auto& r : scar_rows(s)) {
    const auto tt = two_term_check(r, s.mode, x);
    T.add("two_term", k, "m", r.cand.m);
    T.add("two_term", k, "two_term", tt.two_term);
    T.add("two_term", k, "target", tt.target);
    T.add("two_term", k, "band", tt.band);
    T.add("two_term", k, "within", tt.within() ? 1 : 0);
    within += tt.within();
    ++k;
  }
  rep.summary["two_term_candidates"] = k;
  rep.summary["two_term_fraction_within"] = detail::json_number(k ? double(within) / double(k) : NAN);
  return rep;
}

// ---------------------------------------------------------------------------
// sector counts and hypothesis counts

inline Report cmd_sector_count(const Config& cfg) {
  Report rep = make_report("sector-count", "sector-count");
  const u64 x = cfg.integer("x", 1'000'000);
  const u64 q = cfg.integer("q", 5);
  const i64 a = i64(cfg.integer("a", 1));
  const double theta = cfg.real("theta", std::numbers::pi / 8);
  const double eps = cfg.real("epsilon", 0.5);
  detail::budget(x <= sieve::kMaxProgressionX, "sector-count: x exceeds 10^8");
  detail::require(q >= 1 && q <= sieve::kMaxProgressionQ && (q == 1 || q % 2 == 1), "q must be odd and <= 1000");
  auto row = [&](u64 qq, i64 aa, double th, double e) {
    sieve::SectorCount c;
    try {
      c = sieve::sector_progression_count(x, qq, aa, th, e);
    } catch (const DomainError& err) {
      throw ConfigError(err.what());
    }
    const double dA = (double(c.count) - c.main_term_A) / c.main_term_A;
    const double dB = (double(c.count) - c.main_term_B) / c.main_term_B;
    rep.table.add(qq, aa, th, e, x, c.count, c.main_term_A, c.main_term_B, dA, dB);
    return std::make_pair(dA, dB);
  };
  const auto [dA, dB] = row(q, a, theta, eps);
  row(q, a, theta, eps / 2);
  row(q, a, theta, eps / 4);
  row(1, 0, 0, 2 * std::numbers::pi);
  rep.summary["better_main_term"] = std::fabs(dB) < std::fabs(dA) ? "B" : "A";
  rep.summary["rel_dev_A"] = dA;
  rep.summary["rel_dev_B"] = dB;
  return rep;
}

inline Report cmd_hypothesis(const Config& cfg) {
  Report rep = make_report("hypothesis", "hypothesis");
  nlohmann::ordered_json scratch;
  const auto s = scar_settings(cfg, scratch);
  detail::budget(s.x >= 100, "hypothesis: x must be >= 100");
  auto arr = nlohmann::ordered_json::array();
  for (u64 xx : {s.x / 100, s.x / 10, s.x}) {
    const auto h = sieve::hypothesis_count(xx, s.Q0, s.Q1, s.search);
    rep.table.add(xx, s.Q0, s.Q1, s.search.sector.epsilon, s.search.y_for(xx), h.count, h.density_proxy);
    arr.push_back({{"x", xx}, {"count", h.count}, {"density_proxy", h.density_proxy}});
  }
  if (!scratch.is_null()) rep.summary["moduli"] = scratch["moduli"];
  rep.summary["sweep"] = arr;
  return rep;
}

// ---------------------------------------------------------------------------

inline Report run(const std::string& command, const Config& cfg) {
  Report rep;
  if (command == "spectrum")
    rep = cmd_spectrum(cfg);
  else if (command == "scar")
    rep = cmd_scar(cfg);
  else if (command == "measure")
    rep = cmd_measure(cfg);
  else if (command == "diagnostics")
    rep = cmd_diagnostics(cfg);
  else if (command == "sector-count")
    rep = cmd_sector_count(cfg);
  else if (command == "hypothesis")
    rep = cmd_hypothesis(cfg);
  else
    throw ConfigError("unknown command '" + command + "'");
  cfg.integer("seed", 1);  // always part of the echo
  rep.config = cfg.resolved();
  rep.config["command"] = command;
  rep.config_hash = config_hash(rep.config);
  return rep;
}

/// Writes <out> (CSV) and <out>.json (summary sidecar).
inline void write(const Report& rep, const std::string& out) {
  {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + out + "'");
    f << rep.table.csv();
  }
  std::ofstream j(out + ".json", std::ios::binary);
  if (!j) throw ConfigError("cannot write '" + out + ".json'");
  j << rep.sidecar().dump(2) << '\n';
}

}  // namespace scatter::exp
