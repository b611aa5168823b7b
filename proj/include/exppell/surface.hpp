#ifndef EXPPELL_SURFACE_HPP
#define EXPPELL_SURFACE_HPP

#include <complex>
#include <functional>
#include <vector>

#include "exppell/poly.hpp"

namespace exppell {

using Complex = std::complex<double>;

/// A point of the two-sheeted surface w^2 = z^2 - 1.
///
/// Branch convention: w_+(z) = sqrt(z-1) * sqrt(z+1) with principal square
/// roots, which puts the cut exactly on the real segment [-1, 1] and makes
/// w ~ z as z -> +infinity; sheet +1 carries w_+, sheet -1 carries -w_+.
struct SurfacePoint {
  Complex z;
  int sheet;  // +1 or -1
  Complex w;
};

/// Max modulus / max real part of a function over |z - center| <= radius,
/// sampled on the boundary circle over both sheets (boundary sampling is
/// justified by the maximum principle for holomorphic handles).
struct CircleStats {
  Complex center;
  double radius = 0;
  double max_modulus = 0;   // M
  double max_real = 0;      // A
  int samples = 0;
};

using SurfaceFn = std::function<Complex(const SurfacePoint&)>;

SurfacePoint sheet_eval(Complex z, int sheet);

/// Throws Error(EvaluationOverflow) if any sample is non-finite.
CircleStats circle_stats(const SurfaceFn& fn, Complex center, double radius,
                         int samples);

/// C_n(r, R) = 2 ((R/r)^{1/n} - 1)^{-1}; throws Error(DomainError) unless
/// 0 < r < R and n >= 1.
double bc_constant(int n, double r, double R);

struct BcReport {
  double lhs = 0;    // M at radius r around z0 = 1
  double rhs = 0;    // C_2(r, R) * A at radius R
  double constant = 0;
  bool holds = false;
};

/// Borel-Caratheodory check for h(z)*w around z0 = 1 (that function
/// vanishes on the whole fiber over 1): M(r) <= C_2(r,R) * A(R), with 1e-9
/// relative slack.
BcReport check_bc_inequality(const Poly& h, double r, double R, int samples);

struct GrowthReport {
  double lhs = 0;   // M_C(h, r)
  double rhs = 0;   // (6/r) log max{M_C(f,2r), M_C(g,2r)} + 12 log(r) / r
  bool holds = false;
};

/// The key growth inequality for exp(h*w) = f + g*w, with f = cosh(h*w)
/// and g = sinh(h*w)/w realized numerically (log-domain, overflow-safe).
/// Requires r >= 74; slack 1e-6 relative.
GrowthReport check_growth_lemma(const Poly& h, double r, int samples);

/// Plausibility check that fn grows at most like r^alpha: fits K at the
/// smallest radius and allows slack 2 at the others.
bool check_poly_growth(const SurfaceFn& fn, double alpha,
                       const std::vector<double>& radii, int samples);

}  // namespace exppell

#endif
