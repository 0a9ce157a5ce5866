#pragma once

// Explicit Airy-function solution of the kinetic Neumann problem
// y dx w - dyy w = 0, dy w|_{y=0} = g, the displacement multiplier
// sigma(xi), and the per-mode inhomogeneous solve.

#include <complex>
#include <vector>

#include "tdk/spectral.hpp"

namespace tdk::resolvent {

using cplx = std::complex<double>;

struct ResolventSolve {
  Field w_b;                    // physical
  LineFunction neumann_data;    // the g that was solved for
  std::vector<double> per_mode_tail_error;  // |w_b_hat(xi, Ly)| per mode
};

// hat{w}_b(xi, y) = Ai(e^{+-i pi/6} |xi|^{1/3} y)
//                   / (Ai'(0) e^{+-i pi/6} |xi|^{1/3}) * ghat,
// the sign following sign(xi); 0 for xi = 0.
cplx wb_hat(double xi, double y, cplx ghat);
cplx dy_wb_hat(double xi, double y, cplx ghat);

// sigma(xi) = 1 / (3 Ai'(0) e^{+- i pi/3}), sign of the exponent = sign(xi)
cplx sigma(double xi);

// requires mean-zero g (|ghat(0)| <= 1e-12 * ||g||)
ResolventSolve solve_homogeneous_neumann(const LineFunction& g);

// multiplier sigma(xi) i xi |xi|^{1/3} applied to A; equals I_inf[w_b]
LineFunction displacement_of_wb(const LineFunction& A);

// per-mode FD solve of i xi y w - w'' = F_hat with w'(0) = ghat(xi),
// delegated to oracle::solve_mode_bvp on the state grid
Field solve_inhomogeneous(const Field& F, const LineFunction& g);

}  // namespace tdk::resolvent
