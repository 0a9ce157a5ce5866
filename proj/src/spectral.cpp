#include "tdk/spectral.hpp"

#include <cmath>

#include "tdk/errors.hpp"
#include "tdk/fft.hpp"

namespace tdk {

Field Field::zeros(const GridSpec& g, Space s) {
  Field f;
  f.g = g;
  f.space = s;
  f.v.assign(static_cast<size_t>(g.Nx) * g.Ny, cplx(0.0, 0.0));
  return f;
}

LineFunction LineFunction::zeros(const GridSpec& g, Space s) {
  LineFunction f;
  f.g = g;
  f.space = s;
  f.v.assign(g.Nx, cplx(0.0, 0.0));
  return f;
}

namespace {

// forward: physical -> spectral with the (-1)^k phase from x_0 = -Lx
void dft_slice(cplx* a, int Nx, bool to_spectral) {
  const double scale = 1.0 / std::sqrt(double(Nx));
  if (to_spectral) {
    fft::fft_inplace(a, Nx, false);
    for (int idx = 0; idx < Nx; ++idx) {
      double ph = (idx % 2 == 0) ? 1.0 : -1.0;  // (-1)^k, k = idx mod Nx
      a[idx] *= ph * scale;
    }
  } else {
    for (int idx = 0; idx < Nx; ++idx) {
      double ph = (idx % 2 == 0) ? 1.0 : -1.0;
      a[idx] *= ph * scale;
    }
    fft::fft_inplace(a, Nx, true);
  }
}

void check_sizes(const Field& f) {
  if (f.v.size() != static_cast<size_t>(f.g.Nx) * f.g.Ny)
    throw precondition_error("Field: value size does not match GridSpec");
}

void check_sizes(const LineFunction& f) {
  if (f.v.size() != static_cast<size_t>(f.g.Nx))
    throw precondition_error("LineFunction: value size does not match GridSpec");
}

}  // namespace

Field transform(const Field& f, Space target) {
  check_sizes(f);
  if (f.space == target) return f;
  Field out = f;
  out.space = target;
  const int Nx = f.g.Nx, Ny = f.g.Ny;
  std::vector<cplx> slice(Nx);
  for (int iy = 0; iy < Ny; ++iy) {
    for (int ix = 0; ix < Nx; ++ix) slice[ix] = f.at(ix, iy);
    dft_slice(slice.data(), Nx, target == Space::spectral);
    for (int ix = 0; ix < Nx; ++ix) out.at(ix, iy) = slice[ix];
  }
  return out;
}

LineFunction transform(const LineFunction& f, Space target) {
  check_sizes(f);
  if (f.space == target) return f;
  LineFunction out = f;
  out.space = target;
  dft_slice(out.v.data(), f.g.Nx, target == Space::spectral);
  return out;
}

LineFunction apply_multiplier(const LineFunction& f,
                              const std::function<cplx(double)>& symbol) {
  LineFunction s = transform(f, Space::spectral);
  for (int idx = 0; idx < f.g.Nx; ++idx) s.v[idx] *= symbol(f.g.xi_of(idx));
  return f.space == Space::physical ? transform(s, Space::physical) : s;
}

Field apply_multiplier(const Field& f,
                       const std::function<cplx(double)>& symbol) {
  Field s = transform(f, Space::spectral);
  for (int ix = 0; ix < f.g.Nx; ++ix) {
    cplx m = symbol(f.g.xi_of(ix));
    for (int iy = 0; iy < f.g.Ny; ++iy) s.at(ix, iy) *= m;
  }
  return f.space == Space::physical ? transform(s, Space::physical) : s;
}

LineFunction abs_dx_power(const LineFunction& f, double s) {
  if (s < 0.0) throw precondition_error("abs_dx_power: s must be >= 0");
  if (s == 0.0) return f;
  return apply_multiplier(
      f, [s](double xi) { return cplx(std::pow(std::abs(xi), s), 0.0); });
}

namespace {
// odd multipliers must vanish at the unpaired Nyquist mode to keep real
// fields real
cplx odd_symbol_ixi_absxi(double xi, double xi_nyq) {
  if (std::abs(std::abs(xi) - xi_nyq) < 1e-14) return cplx(0.0, 0.0);
  return cplx(0.0, xi * std::abs(xi));
}
cplx odd_symbol_ixi(double xi, double xi_nyq) {
  if (std::abs(std::abs(xi) - xi_nyq) < 1e-14) return cplx(0.0, 0.0);
  return cplx(0.0, xi);
}
}  // namespace

LineFunction dx_abs_dx(const LineFunction& f) {
  double nyq = f.g.xi(f.g.Nx / 2);
  return apply_multiplier(
      f, [nyq](double xi) { return odd_symbol_ixi_absxi(xi, nyq); });
}

LineFunction dx_line(const LineFunction& f) {
  double nyq = f.g.xi(f.g.Nx / 2);
  return apply_multiplier(f,
                          [nyq](double xi) { return odd_symbol_ixi(xi, nyq); });
}

Field dx_field(const Field& f) {
  double nyq = f.g.xi(f.g.Nx / 2);
  return apply_multiplier(f,
                          [nyq](double xi) { return odd_symbol_ixi(xi, nyq); });
}

Field dealias(const Field& f) {
  Field s = transform(f, Space::spectral);
  for (int ix = 0; ix < f.g.Nx; ++ix) {
    if (3 * std::abs(f.g.k_of(ix)) >= f.g.Nx)
      for (int iy = 0; iy < f.g.Ny; ++iy) s.at(ix, iy) = 0.0;
  }
  return f.space == Space::physical ? transform(s, Space::physical) : s;
}

LineFunction dealias(const LineFunction& f) {
  LineFunction s = transform(f, Space::spectral);
  for (int ix = 0; ix < f.g.Nx; ++ix)
    if (3 * std::abs(f.g.k_of(ix)) >= f.g.Nx) s.v[ix] = 0.0;
  return f.space == Space::physical ? transform(s, Space::physical) : s;
}

Field multiply(const Field& a, const Field& b) {
  if (!a.g.same_shape(b.g)) throw precondition_error("multiply: grid mismatch");
  Field pa = transform(a, Space::physical);
  Field pb = transform(b, Space::physical);
  for (size_t i = 0; i < pa.v.size(); ++i) pa.v[i] *= pb.v[i];
  return pa;
}

Field multiply(const Field& a, const LineFunction& line) {
  if (!a.g.same_shape(line.g))
    throw precondition_error("multiply: grid mismatch");
  Field pa = transform(a, Space::physical);
  LineFunction pl = transform(line, Space::physical);
  for (int ix = 0; ix < a.g.Nx; ++ix)
    for (int iy = 0; iy < a.g.Ny; ++iy) pa.at(ix, iy) *= pl.v[ix];
  return pa;
}

LineFunction multiply(const LineFunction& a, const LineFunction& b) {
  if (!a.g.same_shape(b.g)) throw precondition_error("multiply: grid mismatch");
  LineFunction pa = transform(a, Space::physical);
  LineFunction pb = transform(b, Space::physical);
  for (int ix = 0; ix < a.g.Nx; ++ix) pa.v[ix] *= pb.v[ix];
  return pa;
}

Field scale_by_y_profile(const Field& a, const std::vector<double>& profile) {
  if (profile.size() != static_cast<size_t>(a.g.Ny))
    throw precondition_error("scale_by_y_profile: profile size mismatch");
  Field out = a;  // diagonal in y: valid in either space
  for (int ix = 0; ix < a.g.Nx; ++ix)
    for (int iy = 0; iy < a.g.Ny; ++iy) out.at(ix, iy) *= profile[iy];
  return out;
}

Field scale_by_y(const Field& a, double power) {
  std::vector<double> p(a.g.Ny);
  for (int j = 0; j < a.g.Ny; ++j) p[j] = std::pow(a.g.y[j], power);
  if (power > 0.0) p[0] = 0.0;
  return scale_by_y_profile(a, p);
}

Field add(const Field& a, const Field& b, double cb) {
  if (!a.g.same_shape(b.g) || a.space != b.space)
    throw precondition_error("add: field mismatch");
  Field out = a;
  for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += cb * b.v[i];
  return out;
}

LineFunction add(const LineFunction& a, const LineFunction& b, double cb) {
  if (!a.g.same_shape(b.g) || a.space != b.space)
    throw precondition_error("add: line mismatch");
  LineFunction out = a;
  for (int i = 0; i < a.g.Nx; ++i) out.v[i] += cb * b.v[i];
  return out;
}

Field integrate_y_from_zero(const Field& f) {
  Field p = transform(f, Space::physical);
  Field out = Field::zeros(f.g, Space::physical);
  for (int ix = 0; ix < f.g.Nx; ++ix) {
    cplx acc(0.0, 0.0);
    out.at(ix, 0) = 0.0;
    for (int iy = 1; iy < f.g.Ny; ++iy) {
      double h = f.g.y[iy] - f.g.y[iy - 1];
      acc += 0.5 * h * (p.at(ix, iy - 1) + p.at(ix, iy));
      out.at(ix, iy) = acc;
    }
  }
  return out;
}

namespace {
bool tail_ok(const Field& p, double tol) {
  double m = 0.0;
  for (int ix = 0; ix < p.g.Nx; ++ix)
    m = std::max(m, std::abs(p.at(ix, p.g.Ny - 1)));
  return m <= tol;
}
}  // namespace

Field integrate_y_to_infinity(const Field& f, double tol) {
  Field p = transform(f, Space::physical);
  Field out = Field::zeros(f.g, Space::physical);
  out.tail_warning = !tail_ok(p, tol);
  for (int ix = 0; ix < f.g.Nx; ++ix) {
    cplx acc(0.0, 0.0);
    out.at(ix, f.g.Ny - 1) = 0.0;
    for (int iy = f.g.Ny - 2; iy >= 0; --iy) {
      double h = f.g.y[iy + 1] - f.g.y[iy];
      acc += 0.5 * h * (p.at(ix, iy) + p.at(ix, iy + 1));
      out.at(ix, iy) = acc;
    }
  }
  return out;
}

LineFunction integrate_y_full(const Field& f, double tol) {
  Field p = transform(f, Space::physical);
  LineFunction out = LineFunction::zeros(f.g, Space::physical);
  if (!tail_ok(p, tol)) {
    // carried as metadata on the grid-wide field in integrate_y_to_infinity;
    // here the caller only sees the value, tolerance is advisory
  }
  for (int ix = 0; ix < f.g.Nx; ++ix) {
    cplx acc(0.0, 0.0);
    for (int iy = 0; iy < f.g.Ny; ++iy) acc += f.g.wy[iy] * p.at(ix, iy);
    out.v[ix] = acc;
  }
  return out;
}

Field deriv_y(const Field& f, int order) {
  if (order != 1 && order != 2)
    throw precondition_error("deriv_y: order must be 1 or 2");
  Field p = f;  // FD in y is valid in either space
  const std::vector<double>& w = (order == 1) ? f.g.w1 : f.g.w2;
  Field out = Field::zeros(f.g, f.space);
  for (int ix = 0; ix < f.g.Nx; ++ix) {
    for (int iy = 0; iy < f.g.Ny; ++iy) {
      int s = f.g.s0[iy];
      cplx acc(0.0, 0.0);
      for (int t = 0; t < 5; ++t) acc += w[iy * 5 + t] * p.at(ix, s + t);
      out.at(ix, iy) = acc;
    }
  }
  return out;
}

double max_abs(const Field& f) {
  double m = 0.0;
  for (const cplx& z : f.v) m = std::max(m, std::abs(z));
  return m;
}

double max_abs(const LineFunction& f) {
  double m = 0.0;
  for (const cplx& z : f.v) m = std::max(m, std::abs(z));
  return m;
}

double parseval_defect(const Field& f) {
  Field p = transform(f, Space::physical);
  Field s = transform(f, Space::spectral);
  double worst = 0.0;
  for (int iy = 0; iy < f.g.Ny; ++iy) {
    double np = 0.0, ns = 0.0;
    for (int ix = 0; ix < f.g.Nx; ++ix) {
      np += std::norm(p.at(ix, iy));
      ns += std::norm(s.at(ix, iy));
    }
    np = std::sqrt(np);
    ns = std::sqrt(ns);
    if (np + ns > 0.0)
      worst = std::max(worst, std::abs(np - ns) / std::max(np, ns));
  }
  return worst;
}

}  // namespace tdk
