#pragma once

// Airy function Ai and Ai' on the sector |arg z| <= pi/3 used by the
// half-space kinetic resolvent, plus the exact constants the solver
// relies on (Ai(0), Ai'(0), Gamma at thirds, the ray integral of Ai).

#include <complex>

namespace tdk::specfn {

using cplx = std::complex<double>;

enum class AiryMethod { series, asymptotic };

struct AiryEval {
  cplx value;
  cplx derivative;
  AiryMethod method_used;
};

// Frozen seed constants of the power series (validated against the
// Lanczos Gamma evaluation in tests).
//   Ai(0)  =  1/(3^{2/3} Gamma(2/3))
//   Ai'(0) = -1/(3^{1/3} Gamma(1/3))
inline constexpr double kAi0 = 0.3550280538878172;
inline constexpr double kAi0Lo = 2.05233632436212e-17;
inline constexpr double kAiPrime0 = -0.2588194037928068;
inline constexpr double kAiPrime0Lo = 2.522243111610832e-17;

// Series/asymptotic switch radius. The series is evaluated in compensated
// double-double arithmetic, so the switch sits where the optimally
// truncated asymptotic sum drops below ~1e-10 relative.
inline constexpr double kZSwitch = 8.0;

// Admissible sector half-angle (decay sector with margin).
inline constexpr double kSectorMax = 1.0471975511965976 - 0.01;  // pi/3 - 0.01

double gamma_positive(double x);  // Lanczos, x > 0

// Ai(z), Ai'(z). Throws sector_error outside |arg z| <= pi/3 - 0.01 or
// |z| > 1e4; precision_error if the series fails to converge.
AiryEval ai(cplx z);

struct RayIntegral {
  cplx value;
  double error_bound;  // quadrature tolerance + analytic tail bound
};

// Integral of Ai along the ray r*e^{i*angle}, r in [0, upper], with the
// asymptotic tail beyond `upper` bounded analytically and folded into
// `error_bound`. |angle| <= pi/6. Throws precision_error if the tail
// bound alone exceeds `tol`.
RayIntegral ai_ray_integral(double angle, double upper, double tol = 1e-10);

}  // namespace tdk::specfn
