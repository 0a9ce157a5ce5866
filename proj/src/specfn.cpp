#include "tdk/specfn.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "tdk/dd.hpp"
#include "tdk/errors.hpp"

namespace tdk::specfn {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// g = 7, 9-term Lanczos coefficients.
constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

}  // namespace

double gamma_positive(double x) {
  if (!(x > 0.0)) throw precondition_error("gamma_positive: requires x > 0");
  if (x < 0.5) {
    // reflection (only reached for x in (0, 0.5))
    return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
  }
  double z = x - 1.0;
  double a = kLanczosCoef[0];
  for (int i = 1; i < 9; ++i) a += kLanczosCoef[i] / (z + i);
  double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

namespace {

using dd::Cdd;
using dd::Dd;

struct SeriesResult {
  cplx value;
  cplx derivative;
};

// Power series with the recurrence implied by the expansion
//   Ai(z) = sum_n [ z^{3n}/(3^{2n+2/3} G(n+2/3) n!)
//                 - z^{3n+1}/(3^{2n+4/3} G(n+4/3) n!) ],
// seeded exactly by Ai(0) and -Ai'(0). Accumulated in double-double:
// the sub-series grow like e^{+|zeta|} while Ai decays like e^{-zeta},
// so plain doubles lose ~e^{2 zeta} of relative accuracy.
SeriesResult ai_series(cplx z) {
  const Cdd z3 = dd::mul(dd::mul(dd::from_complex(z), dd::from_complex(z)),
                         dd::from_complex(z));
  const Cdd zc = dd::from_complex(z);

  Cdd t = {{kAi0, kAi0Lo}, {0.0, 0.0}};                  // z^{3n} branch
  Cdd s = dd::mul(zc, Dd{-kAiPrime0, -kAiPrime0Lo});     // z^{3n+1} branch
  Cdd f = dd::sub(t, s);

  // derivative sub-series: tp_1 = Ai(0) z^2 / 2, sp_0 = -Ai'(0)
  Cdd tp = dd::div(dd::mul(dd::mul(zc, zc), Dd{kAi0, kAi0Lo}), 2.0);
  Cdd sp = {{-kAiPrime0, -kAiPrime0Lo}, {0.0, 0.0}};
  Cdd fp = dd::sub(tp, sp);

  for (int n = 1; n <= 400; ++n) {
    // value terms: index n-1 -> n
    t = dd::div(dd::mul(t, z3), 3.0 * (3.0 * n - 1.0) * n);
    s = dd::div(dd::mul(s, z3), 3.0 * (3.0 * n + 1.0) * n);
    f = dd::add(f, dd::sub(t, s));
    // derivative terms (tp_1 is the seed, its recurrence starts at n = 2)
    if (n >= 2) tp = dd::div(dd::mul(tp, z3), 3.0 * (n - 1.0) * (3.0 * n - 1.0));
    sp = dd::div(dd::mul(sp, z3), 3.0 * (3.0 * n - 2.0) * n);
    if (n >= 2)
      fp = dd::add(fp, dd::sub(tp, sp));
    else
      fp = dd::sub(fp, sp);

    double term2 = dd::abs2_double(t) + dd::abs2_double(s);
    double ref2 = dd::abs2_double(f) + 1e-300;
    if (term2 < 1e-70 * ref2 && n > 4) {
      return {dd::to_complex(f), dd::to_complex(fp)};
    }
  }
  throw precision_error("ai: power series did not converge");
}

// Optimally truncated asymptotic expansion
//   Ai(z) ~ e^{-zeta}/(2 sqrt(pi) z^{1/4}) * sum (-1)^n u_n / zeta^n,
//   zeta = (2/3) z^{3/2},
// valid in |arg z| < pi (used here only inside the decay sector).
SeriesResult ai_asymptotic(cplx z) {
  const cplx z12 = std::sqrt(z);
  const cplx z14 = std::sqrt(z12);
  const cplx zeta = (2.0 / 3.0) * z * z12;
  const double azeta = std::abs(zeta);

  double u = 1.0;
  cplx zinv = 1.0 / zeta;
  cplx pw = 1.0;
  cplx sum_u = 1.0;   // for Ai
  cplx sum_v = 1.0;   // for Ai'
  double prev = 1.0;
  for (int n = 1; n <= 80; ++n) {
    u *= (6.0 * n - 1.0) * (6.0 * n - 3.0) * (6.0 * n - 5.0) /
         (216.0 * n * (2.0 * n - 1.0));
    double mag = u / std::pow(azeta, n);
    if (mag > prev) break;  // smallest term reached
    prev = mag;
    pw *= -zinv;
    double v = -u * (6.0 * n + 1.0) / (6.0 * n - 1.0);
    sum_u += u * pw;
    sum_v += v * pw;
  }
  const double c = 0.5 / std::sqrt(kPi);
  const cplx e = std::exp(-zeta);
  cplx ai = c * e / z14 * sum_u;
  cplx aip = -c * e * z14 * sum_v;
  return {ai, aip};
}

}  // namespace

AiryEval ai(cplx z) {
  const double az = std::abs(z);
  if (az > 1e4) throw sector_error("ai: |z| > 1e4");
  if (az > 0.0 && std::abs(std::arg(z)) > kSectorMax + 1e-14)
    throw sector_error("ai: argument outside sector |arg z| <= pi/3 - 0.01");

  if (az <= kZSwitch) {
    SeriesResult r = ai_series(z);
    return {r.value, r.derivative, AiryMethod::series};
  }
  SeriesResult r = ai_asymptotic(z);
  return {r.value, r.derivative, AiryMethod::asymptotic};
}

namespace {

cplx ai_on_ray(double angle, double r) {
  if (r == 0.0) return cplx(kAi0, 0.0);
  return ai(std::polar(r, angle)).value;
}

struct Simpson {
  double angle;
  int evals = 0;

  cplx f(double r) {
    ++evals;
    return ai_on_ray(angle, r);
  }

  cplx adapt(double a, double b, cplx fa, cplx fm, cplx fb, cplx whole,
             double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    cplx flm = f(lm), frm = f(rm);
    cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
      return left + right + (left + right - whole) / 15.0;
    }
    return adapt(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }
};

}  // namespace

RayIntegral ai_ray_integral(double angle, double upper, double tol) {
  if (std::abs(angle) > kPi / 6.0 + 1e-14)
    throw sector_error("ai_ray_integral: |angle| > pi/6");
  if (upper < 0.0) throw precondition_error("ai_ray_integral: upper < 0");
  if (upper == 0.0) return {cplx(0.0, 0.0), 0.0};

  // analytic tail bound: |Ai(r e^{i angle})| <= 1.1 e^{-c r^{3/2}} /
  // (2 sqrt(pi) r^{1/4}) for r >= 2, c = (2/3) cos(3 angle / 2) > 0
  double tail = 0.0;
  if (upper >= 2.0) {
    double c = (2.0 / 3.0) * std::cos(1.5 * angle);
    tail = 1.1 / (2.0 * std::sqrt(kPi) * std::pow(upper, 0.25)) *
           std::exp(-c * std::pow(upper, 1.5)) /
           (1.5 * c * std::sqrt(upper));
  } else {
    tail = 1.0;  // no useful bound before the decay sets in
  }
  if (tail > tol)
    throw precision_error("ai_ray_integral: tail bound exceeds tolerance; "
                          "increase upper");

  Simpson s{angle};
  cplx fa = s.f(0.0), fb = s.f(upper), fm = s.f(0.5 * upper);
  cplx whole = upper / 6.0 * (fa + 4.0 * fm + fb);
  cplx v = s.adapt(0.0, upper, fa, fm, fb, whole, tol, 30);
  v *= std::polar(1.0, angle);  // dz = e^{i angle} dr
  return {v, tol + tail};
}

}  // namespace tdk::specfn
