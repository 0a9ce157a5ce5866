#include "tdk/norms.hpp"

#include <algorithm>
#include <cmath>

#include "tdk/errors.hpp"

namespace tdk::norms {

double weak_lp(std::vector<std::pair<double, double>> samples, double p) {
  if (p <= 1.0) throw precondition_error("weak_lp: p must be > 1");
  for (auto& s : samples) s.first = std::abs(s.first);
  std::sort(samples.begin(), samples.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  double t = 0.0, best = 0.0;
  for (auto& s : samples) {
    if (!(s.second > 0.0)) continue;
    t += s.second;
    best = std::max(best, s.first * std::pow(t, 1.0 / p));
  }
  return best;
}

double lorentz_pq(std::vector<std::pair<double, double>> samples, double p,
                  double q) {
  if (p <= 1.0) throw precondition_error("lorentz_pq: p must be > 1");
  if (!(q >= 1.0) || std::isinf(q))
    throw precondition_error("lorentz_pq: require 1 <= q < inf");
  for (auto& s : samples) s.first = std::abs(s.first);
  std::sort(samples.begin(), samples.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  double t_prev = 0.0, acc = 0.0;
  for (auto& s : samples) {
    if (!(s.second > 0.0)) continue;
    double t = t_prev + s.second;
    if (s.first > 0.0)
      acc += std::pow(s.first, q) * (p / q) *
             (std::pow(t, q / p) - std::pow(t_prev, q / p));
    t_prev = t;
    if (acc > 1e290) throw precision_error("lorentz_pq: divergent integral");
  }
  return std::pow(acc, 1.0 / q);
}

double nested_weak(const Field& f, double p_out, double p_in) {
  Field p = transform(f, Space::physical);
  std::vector<std::pair<double, double>> outer;
  outer.reserve(p.g.Nx);
  std::vector<std::pair<double, double>> inner(p.g.Ny);
  for (int ix = 0; ix < p.g.Nx; ++ix) {
    for (int iy = 0; iy < p.g.Ny; ++iy)
      inner[iy] = {std::abs(p.at(ix, iy)), p.g.wy[iy]};
    outer.emplace_back(weak_lp(inner, p_in), p.g.dx());
  }
  return weak_lp(std::move(outer), p_out);
}

double l2(const Field& f) {
  Field p = transform(f, Space::physical);
  double acc = 0.0;
  for (int ix = 0; ix < p.g.Nx; ++ix)
    for (int iy = 0; iy < p.g.Ny; ++iy)
      acc += std::norm(p.at(ix, iy)) * p.g.wy[iy];
  return std::sqrt(acc * p.g.dx());
}

double linf(const Field& f) { return max_abs(transform(f, Space::physical)); }

double linf_l1(const Field& f) {
  Field p = transform(f, Space::physical);
  double best = 0.0;
  for (int ix = 0; ix < p.g.Nx; ++ix) {
    double acc = 0.0;
    for (int iy = 0; iy < p.g.Ny; ++iy)
      acc += std::abs(p.at(ix, iy)) * p.g.wy[iy];
    best = std::max(best, acc);
  }
  return best;
}

double l6l2(const Field& f) {
  Field p = transform(f, Space::physical);
  double acc = 0.0;
  for (int ix = 0; ix < p.g.Nx; ++ix) {
    double s = 0.0;
    for (int iy = 0; iy < p.g.Ny; ++iy)
      s += std::norm(p.at(ix, iy)) * p.g.wy[iy];
    acc += std::pow(s, 3.0);  // (L2_y)^6 = s^3
  }
  return std::pow(acc * p.g.dx(), 1.0 / 6.0);
}

double l2_line(const LineFunction& f) {
  LineFunction p = transform(f, Space::physical);
  double acc = 0.0;
  for (const cplx& z : p.v) acc += std::norm(z);
  return std::sqrt(acc * p.g.dx());
}

double l3_line(const LineFunction& f) {
  LineFunction p = transform(f, Space::physical);
  double acc = 0.0;
  for (const cplx& z : p.v) acc += std::pow(std::abs(z), 3.0);
  return std::cbrt(acc * p.g.dx());
}

double linf_line(const LineFunction& f) {
  return max_abs(transform(f, Space::physical));
}

Field transported_dx(const Field& f, const LineFunction& Q) {
  LineFunction dxQ = dx_line(transform(Q, Space::physical));
  return add(dx_field(f), multiply(deriv_y(f, 1), dxQ), -1.0);
}

namespace {
// || |dx|^s  y^a  g ||_{L^2} with g already a Field (spectral multiplier in
// x, diagonal y-weight)
double weighted_l2(const Field& g, double s, double a) {
  Field sp = transform(g, Space::spectral);
  double acc = 0.0;
  for (int ix = 0; ix < sp.g.Nx; ++ix) {
    double m = std::pow(std::abs(sp.g.xi_of(ix)), s);
    if (s > 0.0 && sp.g.xi_of(ix) == 0.0) m = 0.0;
    for (int iy = 0; iy < sp.g.Ny; ++iy) {
      double yw = a == 0.0 ? 1.0 : std::pow(sp.g.y[iy], a);
      acc += std::norm(m * yw * sp.at(ix, iy)) * sp.g.wy[iy];
    }
  }
  return std::sqrt(acc * sp.g.dx());
}
}  // namespace

YNormReport y_norm(const Field& f) {
  Field dy = deriv_y(f, 1);
  Field dyy = deriv_y(f, 2);
  YNormReport r;
  r.dyy = weighted_l2(dyy, 0.0, 0.0);
  r.y_dx = weighted_l2(dx_field(f), 0.0, 1.0);
  r.dx23 = weighted_l2(f, 2.0 / 3.0, 0.0);
  r.dx13_dy = weighted_l2(dy, 1.0 / 3.0, 0.0);
  r.dx12_y12_dy = weighted_l2(dy, 0.5, 0.5);
  r.dx512_y14_dy = weighted_l2(dy, 5.0 / 12.0, 0.25);
  r.total = r.dyy + r.y_dx + r.dx23 + r.dx13_dy + r.dx12_y12_dy +
            r.dx512_y14_dy;
  return r;
}

ScNormReport sc_norm(const Field& omega, const LineFunction& A) {
  ScNormReport r;
  r.omega_linf_l1 = linf_l1(omega);
  r.dxA_l3 = l3_line(dx_line(A));
  r.product = r.omega_linf_l1 * r.dxA_l3;
  r.omega_linf = linf(omega);
  r.dy_l6l2 = l6l2(deriv_y(omega, 1));
  r.transport_weak = nested_weak(scale_by_y(transported_dx(omega, A), 1.0));
  r.total = r.product + r.omega_linf + r.dy_l6l2 + r.transport_weak;
  return r;
}

XQNormReport x_q_norm(const Field& f, const LineFunction& Q) {
  XQNormReport r;
  r.linf_l1 = linf_l1(f);
  r.dy_l6l2 = l6l2(deriv_y(f, 1));
  r.dyy_l2 = l2(deriv_y(f, 2));
  r.y_transport_l2 = l2(scale_by_y(transported_dx(f, Q), 1.0));
  r.total = r.linf_l1 + r.dy_l6l2 + r.dyy_l2 + r.y_transport_l2;
  return r;
}

}  // namespace tdk::norms
