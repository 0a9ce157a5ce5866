#include "tdk/reduction.hpp"

#include <cmath>

#include "tdk/errors.hpp"
#include "tdk/interp.hpp"

namespace tdk::reduction {

namespace {

// S(s) = a/(a+b), a = e^{-1/s}, b = e^{-1/(1-s)}: smooth step on [0,1]
double step(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  double a = std::exp(-1.0 / s);
  double b = std::exp(-1.0 / (1.0 - s));
  return a / (a + b);
}

double dstep(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  double a = std::exp(-1.0 / s);
  double b = std::exp(-1.0 / (1.0 - s));
  double ap = a / (s * s);
  double bp = -b / ((1.0 - s) * (1.0 - s));
  double D = a + b;
  return (ap * b - a * bp) / (D * D);
}

double d2step(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  double a = std::exp(-1.0 / s);
  double b = std::exp(-1.0 / (1.0 - s));
  double s2 = s * s, u = 1.0 - s, u2 = u * u;
  double ap = a / s2;
  double app = a * (1.0 / (s2 * s2) - 2.0 / (s2 * s));
  double bp = -b / u2;
  double bpp = b * (1.0 / (u2 * u2) - 2.0 / (u2 * u));
  double D = a + b;
  double num = ap * b - a * bp;
  double dnum = app * b - a * bpp;
  return dnum / (D * D) - 2.0 * num * (ap + bp) / (D * D * D);
}

}  // namespace

double chi_base(double t) { return step(t - 1.0); }
double dchi_base(double t) { return dstep(t - 1.0); }
double d2chi_base(double t) { return d2step(t - 1.0); }

double chi_w1inf() {
  static const double k = [] {
    double m1 = 0.0, m2 = 0.0;
    const int n = 200001;
    for (int i = 0; i < n; ++i) {
      double t = 1.0 + double(i) / (n - 1);
      m1 = std::max(m1, std::abs(dchi_base(t)));
      m2 = std::max(m2, std::abs(d2chi_base(t)));
    }
    return m1 + m2;
  }();
  return k;
}

double CutoffProfile::chi_at(double y) const { return chi_base(y / scale); }
double CutoffProfile::dchi_at(double y) const {
  return dchi_base(y / scale) / scale;
}
double CutoffProfile::d2chi_at(double y) const {
  return d2chi_base(y / scale) / (scale * scale);
}

CutoffProfile build_cutoff(const LineFunction& A, double R,
                           const GridSpec& g) {
  if (R < 2.0) throw precondition_error("build_cutoff: R must be >= 2");
  LineFunction ap = transform(A, Space::physical);
  double a_sup = 0.0;
  for (const cplx& z : ap.v) a_sup = std::max(a_sup, std::abs(z.real()));
  CutoffProfile c;
  c.R = R;
  c.a_sup = a_sup;
  c.scale = R * chi_w1inf() * (1.0 + a_sup);
  c.chi.resize(g.Ny);
  c.dchi.resize(g.Ny);
  c.d2chi.resize(g.Ny);
  for (int j = 0; j < g.Ny; ++j) {
    c.chi[j] = c.chi_at(g.y[j]);
    c.dchi[j] = c.dchi_at(g.y[j]);
    c.d2chi[j] = c.d2chi_at(g.y[j]);
  }
  return c;
}

double phi_of(double y, double Ax, const CutoffProfile& c) {
  return y - c.chi_at(y) * Ax;
}

double phi_inverse(double eta, double Ax, const CutoffProfile& c) {
  double lo = std::max(0.0, eta - 2.0 * std::abs(Ax));
  double hi = eta + 2.0 * std::abs(Ax) + 1e-30;
  if (phi_of(lo, Ax, c) > eta || phi_of(hi, Ax, c) < eta)
    throw invariant_error("phi_inverse: bracket failure (non-monotone Phi?)");
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    if (phi_of(mid, Ax, c) < eta)
      lo = mid;
    else
      hi = mid;
  }
  double y = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {  // Newton polish
    double dphi = 1.0 - c.dchi_at(y) * Ax;
    y -= (phi_of(y, Ax, c) - eta) / dphi;
    if (y < 0.0) y = 0.0;
  }
  return y;
}

namespace {

// composition h(x,y) = f(x, map(y)) per x-column with cubic Hermite interp
template <class MapFn>
Field compose(const Field& f, MapFn&& map_of, bool* clamped_any) {
  Field p = transform(f, Space::physical);
  Field out = Field::zeros(f.g, Space::physical);
  bool clamped = false;
  for (int ix = 0; ix < f.g.Nx; ++ix) {
    ColumnInterp ci(f.g, &p.at(ix, 0));
    for (int iy = 0; iy < f.g.Ny; ++iy)
      out.at(ix, iy) = ci.eval(map_of(ix, iy));
    clamped = clamped || ci.clamped;
  }
  if (clamped_any) *clamped_any = clamped;
  out.tail_warning = clamped;
  return out;
}

std::vector<double> real_line(const LineFunction& A) {
  LineFunction p = transform(A, Space::physical);
  std::vector<double> out(p.g.Nx);
  for (int i = 0; i < p.g.Nx; ++i) out[i] = p.v[i].real();
  return out;
}

void check_consistency(const Field& omega, const LineFunction& A,
                       const char* who) {
  LineFunction I = integrate_y_full(omega);
  LineFunction Ap = transform(A, Space::physical);
  double worst = 0.0, scale = max_abs(Ap) + max_abs(omega);
  for (int i = 0; i < A.g.Nx; ++i)
    worst = std::max(worst, std::abs(I.v[i] - Ap.v[i]));
  if (worst > 1e-5 * std::max(1e-30, scale))
    throw precondition_error(std::string(who) +
                             ": state inconsistent (I_inf[omega] != A)");
}

}  // namespace

Field to_w(const Field& omega, const LineFunction& A, const CutoffProfile& c) {
  std::vector<double> a = real_line(A);
  return compose(
      omega,
      [&](int ix, int iy) { return phi_of(omega.g.y[iy], a[ix], c); },
      nullptr);
}

Field to_omega(const Field& w, const LineFunction& A, const CutoffProfile& c) {
  std::vector<double> a = real_line(A);
  return compose(
      w, [&](int ix, int iy) { return phi_inverse(w.g.y[iy], a[ix], c); },
      nullptr);
}

std::pair<Field, Field> velocity(const Field& omega, const LineFunction& A) {
  check_consistency(omega, A, "velocity");
  Field u = integrate_y_from_zero(omega);
  LineFunction dxA = dx_line(transform(A, Space::physical));
  Field T = add(dx_field(omega), multiply(deriv_y(omega, 1), dxA), -1.0);
  Field G = integrate_y_to_infinity(T);
  Field v = integrate_y_from_zero(G);
  Field ydxA = Field::zeros(omega.g, Space::physical);
  for (int ix = 0; ix < omega.g.Nx; ++ix)
    for (int iy = 0; iy < omega.g.Ny; ++iy)
      ydxA.at(ix, iy) = omega.g.y[iy] * dxA.v[ix];
  v = add(v, ydxA, -1.0);
  v = add(v, multiply(u, dxA), -1.0);
  return {std::move(u), std::move(v)};
}

ThetaSet theta_coefficients(const Field& omega, const Field& w,
                            const LineFunction& A, const CutoffProfile& c) {
  check_consistency(omega, A, "theta_coefficients");
  const GridSpec& g = omega.g;
  std::vector<double> a = real_line(A);
  LineFunction dxA = dx_line(transform(A, Space::physical));
  Field u = integrate_y_from_zero(omega);
  Field T = add(dx_field(omega), multiply(deriv_y(omega, 1), dxA), -1.0);
  Field H = integrate_y_from_zero(integrate_y_to_infinity(T));

  ThetaSet th{Field::zeros(g), Field::zeros(g), Field::zeros(g),
              Field::zeros(g), Field::zeros(g)};
  Field up = transform(u, Space::physical);
  Field Hp = H;  // already physical
  for (int ix = 0; ix < g.Nx; ++ix) {
    ColumnInterp ui(g, &up.at(ix, 0));
    ColumnInterp Hi(g, &Hp.at(ix, 0));
    double Ax = a[ix];
    cplx dAx = dxA.v[ix];
    for (int iy = 0; iy < g.Ny; ++iy) {
      double y = g.y[iy];
      double phi = phi_of(y, Ax, c);
      double D = Ax * c.dchi[iy];
      double om = 1.0 - D;
      if (om < 0.5 - 1e-12 || om > 1.5 + 1e-12)
        throw invariant_error(
            "theta_coefficients: 1 - A dchi_R left [1/2, 3/2]");
      cplx uphi = ui.eval(phi);
      th.theta1.at(ix, iy) = uphi - Ax * c.chi[iy];
      th.theta21.at(ix, iy) = -Hi.eval(phi);
      th.theta22.at(ix, iy) =
          -(1.0 / om) * (1.0 - c.chi[iy]) * (uphi - phi) * dAx;
      double q = -2.0 * D + D * D;
      double ad2 = Ax * c.d2chi[iy];
      th.theta23.at(ix, iy) =
          q / (om * om * om) * ad2 - ad2 / om;
      th.theta3.at(ix, iy) = q / (om * om);
    }
  }
  return th;
}

namespace {
Field theta_rhs(const Field& w, const ThetaSet& th, bool do_dealias) {
  Field dxw = dx_field(w);
  Field dyw = deriv_y(w, 1);
  Field dyyw = deriv_y(w, 2);
  Field th2 = add(add(th.theta21, th.theta22), th.theta23);
  Field r = multiply(th.theta1, dxw);
  r = add(r, multiply(th2, dyw));
  r = add(r, multiply(th.theta3, dyyw), -1.0);
  // rhs of the system is -theta1 dx w - sum theta2 dy w + theta3 dyy w = -r
  for (cplx& z : r.v) z = -z;
  return do_dealias ? dealias(r) : r;
}
}  // namespace

Field rhs_ptd3(const Field& w, const ThetaSet& th) {
  return theta_rhs(w, th, true);
}

Field residual_ptd3(const Field& w, const ThetaSet& th) {
  Field lhs = add(scale_by_y(dx_field(w), 1.0), deriv_y(w, 2), -1.0);
  Field rhs = theta_rhs(w, th, false);
  return add(lhs, rhs, -1.0);
}

}  // namespace tdk::reduction
