#pragma once

// Fields on the x-torus x [0,Ly] strip, the unitary DFT contract in x,
// Fourier multipliers (|dx|^s, dx|dx|, dx), y-integration and y-derivative
// primitives, and dealiased products.

#include <complex>
#include <functional>
#include <vector>

#include "tdk/grid.hpp"

namespace tdk {

using cplx = std::complex<double>;

enum class Space { physical, spectral };

struct Field {
  GridSpec g;
  Space space = Space::physical;
  std::vector<cplx> v;  // ix * Ny + iy
  bool tail_warning = false;

  cplx& at(int ix, int iy) { return v[static_cast<size_t>(ix) * g.Ny + iy]; }
  const cplx& at(int ix, int iy) const {
    return v[static_cast<size_t>(ix) * g.Ny + iy];
  }
  static Field zeros(const GridSpec& g, Space s = Space::physical);
};

struct LineFunction {
  GridSpec g;
  Space space = Space::physical;
  std::vector<cplx> v;  // Nx entries

  static LineFunction zeros(const GridSpec& g, Space s = Space::physical);
};

// Unitary-normalized DFT per y-slice:
//   fhat_k = Nx^{-1/2} sum_i f(x_i) e^{-i xi_k x_i},  xi_k = pi k / Lx.
// No-op when already in the target space.
Field transform(const Field& f, Space target);
LineFunction transform(const LineFunction& f, Space target);

LineFunction apply_multiplier(const LineFunction& f,
                              const std::function<cplx(double)>& symbol);
Field apply_multiplier(const Field& f,
                       const std::function<cplx(double)>& symbol);

LineFunction abs_dx_power(const LineFunction& f, double s);  // |xi|^s
LineFunction dx_abs_dx(const LineFunction& f);               // i xi |xi|
LineFunction dx_line(const LineFunction& f);                 // i xi
Field dx_field(const Field& f);

// zero all modes |k| >= Nx/3 (2/3-rule)
Field dealias(const Field& f);
LineFunction dealias(const LineFunction& f);

// physical pointwise products (output physical); callers dealias explicitly
Field multiply(const Field& a, const Field& b);
Field multiply(const Field& a, const LineFunction& line);  // per x-column
LineFunction multiply(const LineFunction& a, const LineFunction& b);
Field scale_by_y_profile(const Field& a, const std::vector<double>& profile);
Field scale_by_y(const Field& a, double power);  // multiply by y^power

Field add(const Field& a, const Field& b, double cb = 1.0);
LineFunction add(const LineFunction& a, const LineFunction& b, double cb = 1.0);

// composite trapezoid on the graded y-nodes
Field integrate_y_from_zero(const Field& f);                     // I_y[f]
Field integrate_y_to_infinity(const Field& f, double tol = 1e-8);  // I_y^inf
LineFunction integrate_y_full(const Field& f, double tol = 1e-8);  // I_inf

Field deriv_y(const Field& f, int order);  // order 1 or 2, 5-point stencils

double max_abs(const Field& f);
double max_abs(const LineFunction& f);

// max over y-slices of | ||slice||_phys - ||slice||_spec | / ||slice||
double parseval_defect(const Field& f);

}  // namespace tdk
