#include "bvmax/reduction.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace bvmax {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(1 + e^s), stable for any s.
double log1p_exp(double s) {
  return s > 0.0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s));
}

// log(e^x - 1) for x > 0, stable for both tiny and huge x.
double log_expm1(double x) {
  return x > 0.693 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x));
}

// log(1 - e^{-x}) for x > 0, accurate near both ends.
double log1m_exp_neg(double x) {
  return x > 0.693 ? std::log1p(-std::exp(-x)) : std::log(-std::expm1(-x));
}

void check_t(double t) {
  if (!std::isfinite(t) || !(t > 0.0)) throw std::invalid_argument("t must be a positive real");
}

void check_s(double s) {
  if (std::isnan(s)) throw std::invalid_argument("log t must not be NaN");
}

int sign_of_diff(double lhs, double rhs) {
  if (lhs > rhs) return 1;
  if (lhs < rhs) return -1;
  return 0;
}

}  // namespace

ReducedFunctions::ReducedFunctions(ProblemParams params) : params_(params) {
  params_.validate();
  one_star_ = params_.sobolev_conjugate();
  critical_ = params_.critical();
  eq_ = gn_best_constant(params_.dim, params_.q);
  const double n = params_.dim;
  const double a = params_.a;
  const double b = params_.b;
  inv_b_ = 1.0 / b;
  c_ = one_star_ / a;
  if (critical_) {
    // q = 1*: (q-1)N = 1*, (q-1)(N-1) = 1, N - q(N-1) = 0.
    p_t_ = c_;
    p_mix_ = c_ - inv_b_;
    p_tail_ = 0.0;
  } else {
    const double q = params_.q;
    p_t_ = (q - 1.0) * n / a;
    p_mix_ = (q - 1.0) * (n / a - (n - 1.0) / b);
    p_tail_ = (n - q * (n - 1.0)) / b;
  }
  phi_a_ = p_tail_;
  phi_b_ = critical_ ? inv_b_ : (params_.q - 1.0) * (n - 1.0) / b;
  phi_regime_ = !critical_ && side_of(a, params_.vanishing_pivot()) == 0;
}

void ReducedFunctions::require_critical(const char* what) const {
  if (!critical_)
    throw std::invalid_argument(std::string(what) + " is defined only at the critical q = N/(N-1)");
}

void ReducedFunctions::require_phi_regime() const {
  if (!phi_regime_)
    throw std::invalid_argument("phi is defined only for subcritical q with a = N(q-1)");
}

double ReducedFunctions::log_f(double s) const {
  check_s(s);
  const double lt = log1p_exp(s);  // log(1+t)
  const double u = p_mix_ * lt;
  const double v = std::log(params_.alpha * eq_) + p_t_ * s;
  const double hi = std::max(u, v);
  const double lo = std::min(u, v);
  return hi + std::log1p(std::exp(lo - hi)) - (p_t_ + p_tail_) * lt;
}

double ReducedFunctions::log_g(double s) const {
  check_s(s);
  const double lt = log1p_exp(s);
  return log_expm1(lt * inv_b_) + p_mix_ * lt - p_t_ * s;
}

double ReducedFunctions::log_h(double s) const {
  require_critical("h");
  check_s(s);
  const double lt = log1p_exp(s);    // log(1+t)
  const double ltm = log1p_exp(-s);  // log(1+1/t)
  // log((1+t)^{1*/a} - t^{1*/a}) = (1*/a) log(1+t) + log(1 - (t/(1+t))^{1*/a})
  const double log_den = c_ * lt + log1m_exp_neg(c_ * ltm);
  return (c_ - inv_b_) * lt - log_den;
}

double ReducedFunctions::f(double t) const {
  check_t(t);
  return std::exp(log_f(std::log(t)));
}

double ReducedFunctions::g(double t) const {
  check_t(t);
  return std::exp(log_g(std::log(t)));
}

double ReducedFunctions::h(double t) const {
  check_t(t);
  return std::exp(log_h(std::log(t)));
}

double ReducedFunctions::g_tilde(double t) const {
  require_critical("g_tilde");
  check_t(t);
  return t * inv_b_ - c_ * std::expm1(std::log1p(t) * inv_b_);
}

double ReducedFunctions::h_tilde(double t) const {
  require_critical("h_tilde");
  check_t(t);
  return params_.b * c_ / t - std::expm1(c_ * std::log1p(1.0 / t));
}

int ReducedFunctions::sign_g_tilde_log(double s) const {
  require_critical("g_tilde");
  check_s(s);
  // g_tilde = t/b - (1*/a)((1+t)^{1/b} - 1); compare the two positive parts in logs.
  const double log_lhs = s - std::log(params_.b);
  const double log_rhs = std::log(c_) + log_expm1(log1p_exp(s) * inv_b_);
  return sign_of_diff(log_lhs, log_rhs);
}

int ReducedFunctions::sign_h_tilde_log(double s) const {
  require_critical("h_tilde");
  check_s(s);
  // h_tilde = (1 + b 1*/(a t)) - (1+1/t)^{1*/a}
  const double log_lhs = log1p_exp(std::log(params_.b * c_) - s);
  const double log_rhs = c_ * log1p_exp(-s);
  return sign_of_diff(log_lhs, log_rhs);
}

int ReducedFunctions::sign_phi_log(double s) const {
  require_phi_regime();
  check_s(s);
  // phi = (1+t)^{1-B}((1+t)^{1/b} - 1) - t/b with A + B = 1/b.
  const double lt = log1p_exp(s);
  const double log_lhs = (1.0 - phi_b_) * lt + log_expm1(lt * inv_b_);
  const double log_rhs = s - std::log(params_.b);
  return sign_of_diff(log_lhs, log_rhs);
}

PhiFamily ReducedFunctions::phi_family(double t) const {
  require_phi_regime();
  check_t(t);
  const double a_exp = phi_a_;
  const double b_exp = phi_b_;
  const double lt = std::log1p(t);
  PhiFamily out;
  out.phi = std::exp((1.0 - b_exp) * lt) * std::expm1(lt * inv_b_) - t * inv_b_;
  out.dphi = (1.0 + a_exp) * std::exp(a_exp * lt) - (1.0 - b_exp) * std::exp(-b_exp * lt) - inv_b_;
  out.varphi = a_exp * (1.0 + a_exp) * std::exp(lt * inv_b_) + b_exp * (1.0 - b_exp);
  out.d2phi = std::exp((-1.0 - b_exp) * lt) * out.varphi;
  return out;
}

EndpointLimits ReducedFunctions::limits(ReducedFn which) const {
  switch (which) {
    case ReducedFn::F:
      return {1.0, critical_ ? params_.alpha * eq_ : 0.0};
    case ReducedFn::G: {
      double at_zero = 0.0;
      switch (side_of(params_.a, params_.vanishing_pivot())) {
        case 1: at_zero = 0.0; break;
        case 0: at_zero = inv_b_; break;
        default: at_zero = kInf; break;
      }
      return {at_zero, critical_ ? 1.0 : kInf};
    }
    case ReducedFn::H: {
      require_critical("h");
      double at_inf = 0.0;
      switch (side_of(params_.b, 1.0)) {
        case 1: at_inf = kInf; break;
        case 0: at_inf = params_.a / one_star_; break;
        default: at_inf = 0.0; break;
      }
      return {1.0, at_inf};
    }
  }
  throw std::invalid_argument("unknown reduced profile");
}

}  // namespace bvmax
