#pragma once

// Every norm used by the verification suite: mixed Lebesgue norms, Lorentz
// L^{p,q} and weak-L^p via the discrete decreasing rearrangement, the
// hypoelliptic Y-norm, the solution-space X_Q norm, and the scale-critical
// sc-norm.

#include <utility>
#include <vector>

#include "tdk/spectral.hpp"

namespace tdk::norms {

// discrete weak-L^p: sort |values| decreasingly, sup over prefixes of
// (cumulative measure)^{1/p} * value
double weak_lp(std::vector<std::pair<double, double>> samples, double p);

// L^{p,q} with 1 <= q < inf via the closed-form plateau integral
// sum_k v_k^q (p/q) (t_k^{q/p} - t_{k-1}^{q/p}), then the 1/q root
double lorentz_pq(std::vector<std::pair<double, double>> samples, double p,
                  double q);

// inner weak-L^{p_in} per x-slice (measure = y quadrature weights), outer
// weak-L^{p_out} in x of the slice norms
double nested_weak(const Field& f, double p_out = 12.0 / 5.0,
                   double p_in = 4.0 / 3.0);

// plain helpers (physical-space quadrature; L2-type via spectral x)
double l2(const Field& f);                   // L^2(dx dy)
double linf(const Field& f);                 // grid max
double linf_l1(const Field& f);              // L^inf_x L^1_y
double l6l2(const Field& f);                 // L^6_x L^2_y
double l2_line(const LineFunction& f);
double l3_line(const LineFunction& f);
double linf_line(const LineFunction& f);

// dx f - dx Q dy f
Field transported_dx(const Field& f, const LineFunction& Q);

struct YNormReport {
  double dyy = 0.0;          // ||dyy f||_L2
  double y_dx = 0.0;         // ||y dx f||_L2
  double dx23 = 0.0;         // || |dx|^{2/3} f ||_L2
  double dx13_dy = 0.0;      // || |dx|^{1/3} dy f ||_L2
  double dx12_y12_dy = 0.0;  // || |dx|^{1/2} y^{1/2} dy f ||_L2
  double dx512_y14_dy = 0.0; // || |dx|^{5/12} y^{1/4} dy f ||_L2
  double total = 0.0;
};
YNormReport y_norm(const Field& f);

struct ScNormReport {
  double omega_linf_l1 = 0.0;
  double dxA_l3 = 0.0;
  double product = 0.0;         // omega_linf_l1 * dxA_l3
  double omega_linf = 0.0;
  double dy_l6l2 = 0.0;
  double transport_weak = 0.0;  // ||y(dx w - dxA dy w)||_{L^{12/5,inf}(L^{4/3,inf})}
  double total = 0.0;
};
ScNormReport sc_norm(const Field& omega, const LineFunction& A);

struct XQNormReport {
  double linf_l1 = 0.0;
  double dy_l6l2 = 0.0;
  double dyy_l2 = 0.0;
  double y_transport_l2 = 0.0;
  double total = 0.0;
};
XQNormReport x_q_norm(const Field& f, const LineFunction& Q);

}  // namespace tdk::norms
