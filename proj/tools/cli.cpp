#include "cli.hpp"

#include "bvmax/classifier.hpp"
#include "bvmax/constants.hpp"
#include "bvmax/oracle.hpp"
#include "bvmax/thresholds.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace bvmax {

namespace {

using json = nlohmann::ordered_json;

json json_num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string fmt17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json params_json(const ProblemParams& p, bool with_alpha) {
  json j;
  j["n"] = p.dim;
  j["a"] = p.a;
  j["b"] = p.b;
  j["q"] = p.q;
  if (with_alpha) j["alpha"] = p.alpha;
  return j;
}

json threshold_json(const ExtendedThreshold& th) {
  json j;
  j["value"] = json_num(th.value);
  j["source"] = th.source == ThresholdSource::ClosedForm ? "closed-form" : "numeric";
  j["formula"] = th.formula;
  return j;
}

std::string verdict_str(Verdict v) {
  return v == Verdict::Attained ? "attained" : "not-attained";
}

int cli_thread_count() {
  if (const char* env = std::getenv("BVMAX_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1 && n <= 256) return static_cast<int>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 32u));
}

int cmd_thresholds(const ProblemParams& p, std::ostream& out) {
  json j;
  j["params"] = params_json(p, false);
  j["one_star"] = p.sobolev_conjugate();
  j["critical"] = p.critical();
  j["e_q"] = gn_best_constant(p.dim, p.q);
  j["b_0"] = p.critical() ? json(nullptr) : json(critical_b0(p.dim, p.q));
  j["alpha_v"] = threshold_json(alpha_v(p));
  j["alpha_c"] = p.critical() ? threshold_json(alpha_c(p)) : json(nullptr);
  out << j.dump(2) << "\n";
  return 0;
}

json regime_json(const RegimeReport& rep) {
  json j;
  j["params"] = params_json(rep.params, true);
  j["alpha_v"] = threshold_json(rep.alpha_v);
  j["alpha_c"] = rep.alpha_c ? threshold_json(*rep.alpha_c) : json(nullptr);
  json d;
  d["value"] = json_num(rep.d_alpha.value);
  d["arg"] = rep.d_alpha.arg ? json(*rep.d_alpha.arg) : json(nullptr);
  d["attained"] = rep.d_alpha.attained;
  d["plateau"] = rep.d_alpha.plateau;
  j["d_alpha"] = d;
  j["verdict"] = verdict_str(rep.verdict);
  j["relation"] = to_string(rep.relation);
  j["case_label"] = rep.case_label;
  return j;
}

int cmd_classify(const ProblemParams& p, std::ostream& out) {
  out << regime_json(classify(p)).dump(2) << "\n";
  return 0;
}

double ball_value(const BallMaximizer& m, const ProblemParams& p) {
  RadialStepFunction ball;
  ball.dim = p.dim;
  ball.radii = {m.radius};
  ball.shell_values = {m.sign * m.height};
  return functional_value(ball, p.alpha, p.q);
}

int cmd_maximizer(const ProblemParams& p, std::ostream& out) {
  const RegimeReport rep = classify(p);
  const MaximizerSet ms = maximizer_set(rep);
  json j;
  j["params"] = params_json(p, true);
  j["case_label"] = rep.case_label;
  j["verdict"] = verdict_str(rep.verdict);
  j["d_alpha"] = json_num(rep.d_alpha.value);
  j["continuum"] = ms.continuum;
  j["note"] = ms.note;
  json arr = json::array();
  for (const BallMaximizer& m : ms.maximizers) {
    json e;
    e["t0"] = m.t0;
    e["radius"] = m.radius;
    e["height"] = m.height;
    e["sign"] = m.sign;
    e["center"] = m.center;
    e["value"] = json_num(ball_value(m, p));
    arr.push_back(e);
  }
  j["maximizers"] = arr;
  out << j.dump(2) << "\n";
  return 0;
}

std::vector<double> near_maximizer_radii(const RegimeReport& rep) {
  std::vector<double> extra;
  if (rep.verdict != Verdict::Attained) return extra;
  for (const BallMaximizer& m : maximizer_set(rep).maximizers) {
    if (m.sign < 0) continue;
    extra.push_back(m.radius * 0.999);
    extra.push_back(m.radius);
    extra.push_back(m.radius * 1.001);
  }
  return extra;
}

int cmd_verify(const ProblemParams& p, std::uint64_t samples, std::uint64_t seed,
               std::ostream& out) {
  const RegimeReport rep = classify(p);
  const VerifyReport v = monte_carlo_bound_check(p, samples, seed, near_maximizer_radii(rep));
  json j;
  j["params"] = params_json(p, true);
  j["samples"] = v.samples;
  j["seed"] = v.seed;
  j["d_alpha"] = json_num(v.d_alpha);
  j["max_value"] = json_num(v.max_value);
  j["gap"] = json_num(v.gap);
  j["best_single_shell"] = json_num(v.best_single_shell);
  j["violations"] = v.violations;
  j["gn_violations"] = v.gn_violations;
  j["reduction_violations"] = v.reduction_violations;
  const bool bad = v.violations + v.gn_violations + v.reduction_violations > 0;
  j["ok"] = !bad;
  out << j.dump(2) << "\n";
  return bad ? 1 : 0;
}

struct SweepRow {
  bool ok = false;
  std::string csv;
  std::string skip_reason;
};

int cmd_sweep(const ProblemParams& base, const std::string& param, double lo, double hi,
              int count, bool log_spacing, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  if (count < 1) {
    err << "error: --count must be a positive integer\n";
    return 2;
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    err << "error: --lo and --hi must be finite with lo <= hi\n";
    return 2;
  }
  if (log_spacing && !(lo > 0.0)) {
    err << "error: --log requires --lo > 0\n";
    return 2;
  }

  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    double x = log_spacing ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo)))
                           : lo + f * (hi - lo);
    if (i == 0) x = lo;
    if (i == count - 1) x = hi;
    grid[static_cast<std::size_t>(i)] = x;
  }

  std::vector<SweepRow> rows(grid.size());
  const auto eval_row = [&](std::size_t i) {
    ProblemParams p = base;
    const double x = grid[i];
    if (param == "a")
      p.a = x;
    else if (param == "b")
      p.b = x;
    else if (param == "q")
      p.q = x;
    else
      p.alpha = x;
    SweepRow row;
    try {
      p.validate();
      const RegimeReport rep = classify(p);
      std::string ac;
      if (rep.alpha_c) ac = fmt17(rep.alpha_c->value);
      row.csv = fmt17(x) + "," + fmt17(rep.alpha_v.value) + "," + ac + "," +
                fmt17(rep.d_alpha.value) + "," + verdict_str(rep.verdict) + "," + rep.case_label;
      row.ok = true;
    } catch (const std::exception& e) {
      row.skip_reason = e.what();
    }
    rows[i] = row;
  };

  const int workers = std::min<int>(cli_thread_count(), static_cast<int>(rows.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) eval_row(i);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (rows.size() + workers - 1) / static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::size_t b = chunk * static_cast<std::size_t>(w);
      const std::size_t e = std::min(rows.size(), b + chunk);
      if (b >= e) break;
      pool.emplace_back([&, b, e]() {
        for (std::size_t i = b; i < e; ++i) eval_row(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open output file: " << out_path << "\n";
      return 3;
    }
    sink = &file;
  }
  *sink << "swept_value,alpha_v,alpha_c,d_alpha,verdict,case_label\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].ok)
      *sink << rows[i].csv << "\n";
    else
      err << "skip " << param << "=" << fmt17(grid[i]) << ": " << rows[i].skip_reason << "\n";
  }
  sink->flush();
  if (!*sink) {
    err << "error: failed to write sweep output\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"best constants, thresholds, and ball maximizers for the D_alpha(a,b,q) family"};
  app.require_subcommand(1);

  int n = 2;
  double a = 1.0, b = 1.0, q = 2.0, alpha = 1.0;
  std::uint64_t samples = 100000, seed = 0;
  std::string param, out_path;
  double lo = 0.0, hi = 0.0;
  int count = 0;
  bool log_spacing = false;

  const auto add_params = [&](CLI::App* cmd, bool with_alpha, bool required) {
    auto* on = cmd->add_option("--n", n, "space dimension (integer >= 2)");
    auto* oa = cmd->add_option("--a", a, "total-variation exponent a > 0");
    auto* ob = cmd->add_option("--b", b, "L1 exponent b > 0");
    auto* oq = cmd->add_option("--q", q, "Lebesgue exponent q in (1, N/(N-1)]");
    if (required) {
      on->required();
      oa->required();
      ob->required();
      oq->required();
    } else {
      on->capture_default_str();
      oa->capture_default_str();
      ob->capture_default_str();
      oq->capture_default_str();
    }
    if (with_alpha) {
      auto* oal = cmd->add_option("--alpha", alpha, "functional weight alpha > 0");
      if (required)
        oal->required();
      else
        oal->capture_default_str();
    }
  };

  CLI::App* c_thresholds =
      app.add_subcommand("thresholds", "print alpha_v, alpha_c, E_q, b_0 as JSON");
  add_params(c_thresholds, false, true);

  CLI::App* c_classify =
      app.add_subcommand("classify", "print the regime report for (params, alpha) as JSON");
  add_params(c_classify, true, true);

  CLI::App* c_maximizer =
      app.add_subcommand("maximizer", "print the ball maximizer list for (params, alpha) as JSON");
  add_params(c_maximizer, true, true);

  CLI::App* c_sweep = app.add_subcommand("sweep", "sweep one parameter and emit a CSV table");
  add_params(c_sweep, true, false);
  c_sweep->add_option("--param", param, "parameter to sweep")
      ->required()
      ->check(CLI::IsMember({"a", "b", "q", "alpha"}));
  c_sweep->add_option("--lo", lo, "lowest swept value")->required();
  c_sweep->add_option("--hi", hi, "highest swept value")->required();
  c_sweep->add_option("--count", count, "number of grid points")->required();
  c_sweep->add_flag("--log", log_spacing, "use log spacing (default: linear)");
  c_sweep->add_option("--out", out_path, "output CSV path (default: stdout)");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "Monte-Carlo check that no sampled function beats d_alpha; JSON report");
  add_params(c_verify, true, true);
  c_verify->add_option("--samples", samples, "number of random samples")->capture_default_str();
  c_verify->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  ProblemParams p;
  p.dim = n;
  p.a = a;
  p.b = b;
  p.q = q;
  p.alpha = alpha;

  try {
    if (app.got_subcommand(c_thresholds)) {
      p.alpha = 1.0;
      p.validate();
      return cmd_thresholds(p, out);
    }
    if (app.got_subcommand(c_classify)) {
      p.validate();
      return cmd_classify(p, out);
    }
    if (app.got_subcommand(c_maximizer)) {
      p.validate();
      return cmd_maximizer(p, out);
    }
    if (app.got_subcommand(c_sweep))
      return cmd_sweep(p, param, lo, hi, count, log_spacing, out_path, out, err);
    if (app.got_subcommand(c_verify)) {
      p.validate();
      return cmd_verify(p, samples, seed, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand given\n";
  return 2;
}

}  // namespace bvmax
