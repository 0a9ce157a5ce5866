#pragma once

// The change of variables w(x,y) = omega(x, Phi(x,y)), Phi = y - chi_R(y)A(x),
// the smooth cutoff chi_R, velocity reconstruction, and the theta-coefficients
// of the reduced kinetic system.

#include <utility>

#include "tdk/spectral.hpp"

namespace tdk::reduction {

// base cutoff: chi(t) = 0 for t <= 1, 1 for t >= 2, smooth monotone between
double chi_base(double t);
double dchi_base(double t);
double d2chi_base(double t);

// ||dchi||_{W^{1,inf}} = sup|chi'| + sup|chi''| of the base cutoff,
// computed once by dense sampling and frozen for the build
double chi_w1inf();

struct CutoffProfile {
  double R = 8.0;
  double a_sup = 0.0;  // ||A||_inf
  double scale = 0.0;  // R * chi_w1inf() * (1 + a_sup)
  std::vector<double> chi, dchi, d2chi;  // sampled on the grid y-nodes

  double chi_at(double y) const;
  double dchi_at(double y) const;
  double d2chi_at(double y) const;
};

CutoffProfile build_cutoff(const LineFunction& A, double R, const GridSpec& g);

double phi_of(double y, double Ax, const CutoffProfile& c);
// monotone bisection + Newton polish to 1e-12
double phi_inverse(double eta, double Ax, const CutoffProfile& c);

Field to_w(const Field& omega, const LineFunction& A, const CutoffProfile& c);
Field to_omega(const Field& w, const LineFunction& A, const CutoffProfile& c);

// u = I_y[omega]; v by the stable identity
// v = -y dxA + I_y[I^inf[dx omega - dxA dy omega]] - dxA I_y[omega].
// Requires I_inf[omega] = A to a relative 1e-6 tolerance.
std::pair<Field, Field> velocity(const Field& omega, const LineFunction& A);

struct ThetaSet {
  Field theta1, theta21, theta22, theta23, theta3;
};

ThetaSet theta_coefficients(const Field& omega, const Field& w,
                            const LineFunction& A, const CutoffProfile& c);

// y dx w - dyy w + theta1 dx w + (theta21+theta22+theta23) dy w
//   - theta3 dyy w, pointwise
Field residual_ptd3(const Field& w, const ThetaSet& th);

// the forcing of the reduced system (right-hand side), dealiased products
Field rhs_ptd3(const Field& w, const ThetaSet& th);

}  // namespace tdk::reduction
