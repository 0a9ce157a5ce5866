#pragma once

// Minimal double-double arithmetic. Used only where a sum suffers
// catastrophic cancellation in plain doubles (the Airy power series at
// moderate |z|, where the two sub-series grow like e^{+zeta} while the
// result decays like e^{-zeta}).

#include <cmath>
#include <complex>

namespace tdk::dd {

struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline Dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Dd sub(Dd a, Dd b) { return add(a, {-b.hi, -b.lo}); }

inline Dd mul(Dd a, Dd b) {
  Dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd mul(Dd a, double b) {
  Dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd div(Dd a, double b) {
  double q1 = a.hi / b;
  Dd p = two_prod(q1, b);
  double q2 = ((a.hi - p.hi) - p.lo + a.lo) / b;
  return quick_two_sum(q1, q2);
}

inline double to_double(Dd a) { return a.hi + a.lo; }

struct Cdd {
  Dd re, im;
};

inline Cdd from_complex(std::complex<double> z) {
  return {{z.real(), 0.0}, {z.imag(), 0.0}};
}

inline Cdd add(Cdd a, Cdd b) { return {add(a.re, b.re), add(a.im, b.im)}; }

inline Cdd sub(Cdd a, Cdd b) { return {sub(a.re, b.re), sub(a.im, b.im)}; }

inline Cdd mul(Cdd a, Cdd b) {
  return {sub(mul(a.re, b.re), mul(a.im, b.im)),
          add(mul(a.re, b.im), mul(a.im, b.re))};
}

inline Cdd mul(Cdd a, double b) { return {mul(a.re, b), mul(a.im, b)}; }

inline Cdd mul(Cdd a, Dd b) { return {mul(a.re, b), mul(a.im, b)}; }

inline Cdd div(Cdd a, double b) { return {div(a.re, b), div(a.im, b)}; }

inline std::complex<double> to_complex(Cdd a) {
  return {to_double(a.re), to_double(a.im)};
}

inline double abs2_double(Cdd a) {
  double x = to_double(a.re), y = to_double(a.im);
  return x * x + y * y;
}

}  // namespace tdk::dd
