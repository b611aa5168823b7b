#include "exppell/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "exppell/error.hpp"

namespace exppell {

namespace {
constexpr double kPi = 3.14159265358979323846;

bool finite(Complex v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// log |cosh u| (plus = true) or log |sinh u| (plus = false), stable for
// large |Re u|.
double log_abs_cosh_sinh(Complex u, bool plus) {
  double a = std::abs(u.real());
  if (a < 30.0) {
    Complex v = plus ? std::cosh(u) : std::sinh(u);
    return std::log(std::abs(v));
  }
  Complex e = std::exp(u.real() > 0 ? -2.0 * u : 2.0 * u);
  double corr = std::abs(plus ? 1.0 + e : 1.0 - e);
  return a - std::log(2.0) + std::log(corr);
}
}  // namespace

SurfacePoint sheet_eval(Complex z, int sheet) {
  Complex w = std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
  return {z, sheet, sheet >= 0 ? w : -w};
}

CircleStats circle_stats(const SurfaceFn& fn, Complex center, double radius,
                         int samples) {
  if (samples < 64)
    throw Error(ErrorCode::DomainError, "need at least 64 samples");
  CircleStats st;
  st.center = center;
  st.radius = radius;
  st.samples = samples;
  bool first = true;
  for (int j = 0; j < samples; ++j) {
    double t = 2.0 * kPi * j / samples;
    Complex z = center + radius * Complex(std::cos(t), std::sin(t));
    for (int sheet : {+1, -1}) {
      Complex v = fn(sheet_eval(z, sheet));
      if (!finite(v))
        throw Error(ErrorCode::EvaluationOverflow,
                    "sample exceeded the floating range");
      double m = std::abs(v);
      if (first || m > st.max_modulus) st.max_modulus = m;
      if (first || v.real() > st.max_real) st.max_real = v.real();
      first = false;
    }
  }
  return st;
}

double bc_constant(int n, double r, double R) {
  if (n < 1) throw Error(ErrorCode::DomainError, "n must be >= 1");
  if (!(0 < r && r < R))
    throw Error(ErrorCode::DomainError, "need 0 < r < R");
  return 2.0 / (std::pow(R / r, 1.0 / n) - 1.0);
}

BcReport check_bc_inequality(const Poly& h, double r, double R, int samples) {
  SurfaceFn hw = [&h](const SurfacePoint& p) { return h.eval(p.z) * p.w; };
  BcReport rep;
  rep.constant = bc_constant(2, r, R);
  rep.lhs = circle_stats(hw, Complex(1.0, 0.0), r, samples).max_modulus;
  rep.rhs = rep.constant *
            circle_stats(hw, Complex(1.0, 0.0), R, samples).max_real;
  rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-9) + 1e-12;
  return rep;
}

GrowthReport check_growth_lemma(const Poly& h, double r, int samples) {
  if (r < 74.0)
    throw Error(ErrorCode::DomainError, "the inequality requires r >= 74");
  if (samples < 64)
    throw Error(ErrorCode::DomainError, "need at least 64 samples");
  GrowthReport rep;

  // Left side: M_C(h, r) on the plain plane.
  double mh = 0;
  for (int j = 0; j < samples; ++j) {
    double t = 2.0 * kPi * j / samples;
    Complex z = r * Complex(std::cos(t), std::sin(t));
    double m = std::abs(h.eval(z));
    if (!std::isfinite(m))
      throw Error(ErrorCode::EvaluationOverflow, "h sample overflowed");
    if (m > mh) mh = m;
  }
  rep.lhs = mh;

  // Right side: log-domain maxima of f = cosh(hw) and g = sinh(hw)/w on
  // |z| = 2r. Both are single-valued in z (even in w), so one sheet is
  // enough.
  if (h.is_zero()) {
    // f = 1, g = 0; max{M_f, M_g} = 1.
    rep.rhs = 12.0 * std::log(r) / r;
  } else {
    double logmax = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < samples; ++j) {
      double t = 2.0 * kPi * j / samples;
      Complex z = 2.0 * r * Complex(std::cos(t), std::sin(t));
      SurfacePoint p = sheet_eval(z, +1);
      Complex u = h.eval(z) * p.w;
      if (!finite(u))
        throw Error(ErrorCode::EvaluationOverflow, "h*w sample overflowed");
      double lf = log_abs_cosh_sinh(u, true);
      double lg = log_abs_cosh_sinh(u, false) - std::log(std::abs(p.w));
      logmax = std::max({logmax, lf, lg});
    }
    rep.rhs = (6.0 / r) * logmax + 12.0 * std::log(r) / r;
  }
  rep.holds = rep.lhs <= rep.rhs * (1.0 + 1e-6) + 1e-12;
  return rep;
}

bool check_poly_growth(const SurfaceFn& fn, double alpha,
                       const std::vector<double>& radii, int samples) {
  if (radii.size() < 3)
    throw Error(ErrorCode::DomainError, "need at least 3 radii");
  for (size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1])
      throw Error(ErrorCode::DomainError, "radii must be increasing");
  double m0 = circle_stats(fn, 0.0, radii[0], samples).max_modulus;
  double k = m0 / std::pow(radii[0], alpha);
  for (double r : radii) {
    double m = circle_stats(fn, 0.0, r, samples).max_modulus;
    if (m > 2.0 * k * std::pow(r, alpha) + 1e-12) return false;
  }
  return true;
}

}  // namespace exppell
