#include "bvmax/oracle.hpp"

#include "bvmax/reduction.hpp"
#include "bvmax/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace bvmax {

namespace {

void check_exponent_q(int dim, double q) {
  if (!std::isfinite(q) || !(q > 1.0) || side_of(q, sobolev_conjugate(dim)) > 0)
    throw std::invalid_argument("q must lie in (1, N/(N-1)]");
}

// Shell volumes matching RadialStepFunction's layout: index i is the annulus
// between radii[i] and radii[i+1] (the last index is the innermost ball).
std::vector<double> shell_volumes(const RadialStepFunction& u) {
  const double ball = unit_sphere_area(u.dim) / u.dim;  // volume of the unit ball
  const std::size_t k = u.radii.size();
  std::vector<double> vol(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double outer = std::pow(u.radii[i], u.dim);
    const double inner = i + 1 < k ? std::pow(u.radii[i + 1], u.dim) : 0.0;
    vol[i] = ball * (outer - inner);
  }
  return vol;
}

struct MassPair {
  double l1 = 0.0;
  double tv = 0.0;
};

MassPair l1_and_tv(const RadialStepFunction& u) {
  const double area = unit_sphere_area(u.dim);
  const auto vol = shell_volumes(u);
  MassPair out;
  for (std::size_t i = 0; i < u.radii.size(); ++i) {
    out.l1 += std::fabs(u.shell_values[i]) * vol[i];
    const double outside = i == 0 ? 0.0 : u.shell_values[i - 1];
    out.tv += area * std::pow(u.radii[i], u.dim - 1) * std::fabs(u.shell_values[i] - outside);
  }
  return out;
}

// SplitMix64 with a per-sample substream keyed by (seed, index).
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index)
      : state_(mix64(seed ^ mix64(index * 0xD2B74407B1CE6E93ull + 0x8BB84B93962EACC9ull))) {}

  double u01() {
    state_ += 0x9E3779B97F4A7C15ull;
    return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

constexpr double kSampleLogLo = -3.0 * 2.302585092994046;  // log(1e-3)
constexpr double kSampleLogHi = 3.0 * 2.302585092994046;   // log(1e3)

RadialStepFunction draw_sample(int dim, std::uint64_t seed, std::uint64_t index) {
  SampleStream rng(seed, index);
  const int k = 1 + std::min(7, static_cast<int>(rng.u01() * 8.0));
  RadialStepFunction u;
  u.dim = dim;
  u.radii.resize(k);
  u.shell_values.resize(k);
  for (int i = 0; i < k; ++i)
    u.radii[i] = std::exp(kSampleLogLo + rng.u01() * (kSampleLogHi - kSampleLogLo));
  std::sort(u.radii.begin(), u.radii.end(), std::greater<>());
  for (int i = 1; i < k; ++i)
    if (!(u.radii[i] < u.radii[i - 1])) u.radii[i] = u.radii[i - 1] * (1.0 - 1e-9);
  for (int i = 0; i < k; ++i) {
    const double mag = std::exp(kSampleLogLo + rng.u01() * (kSampleLogHi - kSampleLogLo));
    u.shell_values[i] = rng.u01() < 0.5 ? -mag : mag;
  }
  return u;
}

int thread_count() {
  if (const char* env = std::getenv("BVMAX_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1 && n <= 256) return static_cast<int>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 32u));
}

struct ChunkStats {
  double max_value = -std::numeric_limits<double>::infinity();
  double best_single_shell = -std::numeric_limits<double>::infinity();
  std::uint64_t violations = 0;
  std::uint64_t gn_violations = 0;
  std::uint64_t reduction_violations = 0;

  void merge(const ChunkStats& o) {
    max_value = std::max(max_value, o.max_value);
    best_single_shell = std::max(best_single_shell, o.best_single_shell);
    violations += o.violations;
    gn_violations += o.gn_violations;
    reduction_violations += o.reduction_violations;
  }
};

}  // namespace

void RadialStepFunction::validate() const {
  if (dim < 2) throw std::invalid_argument("dimension must be an integer >= 2");
  if (radii.empty() || radii.size() > kMaxShells)
    throw std::invalid_argument("shell count must lie in [1, 64]");
  if (radii.size() != shell_values.size())
    throw std::invalid_argument("radii and shell_values must have equal length");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!std::isfinite(radii[i]) || !(radii[i] > 0.0))
      throw std::invalid_argument("radii must be positive reals");
    if (i > 0 && !(radii[i] < radii[i - 1]))
      throw std::invalid_argument("radii must be strictly decreasing");
    if (!std::isfinite(shell_values[i]))
      throw std::invalid_argument("shell values must be finite");
  }
}

BVNorms norms(const RadialStepFunction& u, double q) {
  u.validate();
  check_exponent_q(u.dim, q);
  const double one_star = sobolev_conjugate(u.dim);
  const auto vol = shell_volumes(u);
  BVNorms out;
  const double area = unit_sphere_area(u.dim);
  for (std::size_t i = 0; i < u.radii.size(); ++i) {
    const double m = std::fabs(u.shell_values[i]);
    out.l1 += m * vol[i];
    if (m > 0.0) {
      out.lq_q += std::pow(m, q) * vol[i];
      out.l1star_1star += std::pow(m, one_star) * vol[i];
    }
    const double outside = i == 0 ? 0.0 : u.shell_values[i - 1];
    out.tv += area * std::pow(u.radii[i], u.dim - 1) * std::fabs(u.shell_values[i] - outside);
  }
  return out;
}

RadialStepFunction scaled(const RadialStepFunction& u, double amplitude) {
  u.validate();
  if (!std::isfinite(amplitude)) throw std::invalid_argument("amplitude must be finite");
  RadialStepFunction v = u;
  for (double& c : v.shell_values) c *= amplitude;
  return v;
}

RadialStepFunction normalize_to_constraint(const RadialStepFunction& u, double a, double b) {
  u.validate();
  if (!std::isfinite(a) || !(a > 0.0) || !std::isfinite(b) || !(b > 0.0))
    throw std::invalid_argument("a and b must be positive reals");
  const auto [l1, tv] = l1_and_tv(u);
  if (!(l1 > 0.0) || !(tv > 0.0))
    throw std::invalid_argument("the function must not vanish identically");
  const auto excess = [&](double m) {
    return std::pow(m * tv, a) + std::pow(m * l1, b) - 1.0;
  };
  double hi = 1.0 / std::max(tv, l1);
  for (int it = 0; it < 2000 && excess(hi) < 0.0; ++it) hi *= 2.0;
  double lo = hi;
  for (int it = 0; it < 2000 && excess(lo) > 0.0; ++it) lo *= 0.5;
  for (int it = 0; it < 200; ++it) {
    const double mid = std::sqrt(lo * hi);
    (excess(mid) > 0.0 ? hi : lo) = mid;
  }
  return scaled(u, 0.5 * (lo + hi));
}

double functional_value(const RadialStepFunction& u, double alpha, double q) {
  if (!std::isfinite(alpha) || !(alpha > 0.0))
    throw std::invalid_argument("alpha must be a positive real");
  const BVNorms n = norms(u, q);
  return n.l1 + alpha * n.lq_q;
}

RadialStepFunction vanishing_element(const RadialStepFunction& u, std::int64_t n) {
  u.validate();
  if (n < 1) throw std::invalid_argument("n must be a positive integer");
  RadialStepFunction v = u;
  const double nn = static_cast<double>(n);
  const double scale = std::pow(nn, -u.dim);
  for (double& r : v.radii) r *= nn;
  for (double& c : v.shell_values) c *= scale;
  return v;
}

RadialStepFunction concentrating_element(const RadialStepFunction& u, std::int64_t n) {
  u.validate();
  if (n < 1) throw std::invalid_argument("n must be a positive integer");
  RadialStepFunction v = u;
  const double nn = static_cast<double>(n);
  const double scale = std::pow(nn, u.dim - 1);
  for (double& r : v.radii) r /= nn;
  for (double& c : v.shell_values) c *= scale;
  return v;
}

VerifyReport monte_carlo_bound_check(const ProblemParams& params, std::uint64_t samples,
                                     std::uint64_t seed,
                                     const std::vector<double>& extra_single_shell_radii) {
  params.validate();
  VerifyReport rep;
  rep.params = params;
  rep.samples = samples;
  rep.seed = seed;

  ReducedFunctions rf(params);
  rep.d_alpha = d_alpha(params).value;
  const double log_eq = std::log(rf.eq());
  const double theta = params.q - (params.q - 1.0) * params.dim;  // l1 exponent of the bound

  auto evaluate = [&](const RadialStepFunction& u, ChunkStats& stats, bool single_shell) {
    const RadialStepFunction w = normalize_to_constraint(u, params.a, params.b);
    const BVNorms n = norms(w, params.q);
    const double value = n.l1 + params.alpha * n.lq_q;
    stats.max_value = std::max(stats.max_value, value);
    if (single_shell) stats.best_single_shell = std::max(stats.best_single_shell, value);
    if (value > rep.d_alpha * (1.0 + 1e-9)) ++stats.violations;
    // Interpolation bound: log |u|_q^q <= log E_q + theta log |u|_1 + (q-1)N log |u|_TV.
    const double log_bound =
        log_eq + theta * std::log(n.l1) + (params.q - 1.0) * params.dim * std::log(n.tv);
    if (std::log(n.lq_q) > log_bound + 1e-12) ++stats.gn_violations;
    // Reduction coherence: the functional never exceeds f_alpha at the ratio.
    const double s = params.a * std::log(n.tv) - params.b * std::log(n.l1);
    const double f_at_ratio = std::exp(rf.log_f(s));
    if (value > f_at_ratio + 1e-10 * std::max(1.0, f_at_ratio)) ++stats.reduction_violations;
  };

  const int workers = thread_count();
  std::vector<ChunkStats> partial(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  const std::uint64_t chunk = workers > 0 ? (samples + workers - 1) / workers : samples;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
    const std::uint64_t hi = std::min(samples, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi]() {
      ChunkStats local;
      for (std::uint64_t i = lo; i < hi; ++i) {
        const RadialStepFunction u = draw_sample(params.dim, seed, i);
        evaluate(u, local, u.radii.size() == 1);
      }
      partial[static_cast<std::size_t>(w)] = local;
    });
  }
  for (auto& th : pool) th.join();

  ChunkStats total;
  for (const auto& p : partial) total.merge(p);
  for (double r : extra_single_shell_radii) {
    RadialStepFunction probe;
    probe.dim = params.dim;
    probe.radii = {r};
    probe.shell_values = {1.0};
    evaluate(probe, total, true);
  }

  rep.max_value = total.max_value;
  rep.best_single_shell = total.best_single_shell;
  rep.violations = total.violations;
  rep.gn_violations = total.gn_violations;
  rep.reduction_violations = total.reduction_violations;
  rep.gap = rep.d_alpha - rep.max_value;
  return rep;
}

}  // namespace bvmax
