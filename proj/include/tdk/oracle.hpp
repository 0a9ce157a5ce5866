#pragma once

// Independent, deliberately simple reference computations: the per-mode
// two-point BVP for i*xi*y*w - w'' = rhs with Neumann data at y=0, a
// brute-force Lorentz norm over all level sets, a direct O(N^2) DFT, and a
// principal-value Hilbert quadrature. These never share code with the fast
// paths they validate.

#include <complex>
#include <utility>
#include <vector>

#include "tdk/spectral.hpp"

namespace tdk::oracle {

using cplx = std::complex<double>;

struct ModeBVP {
  double xi = 0.0;
  std::vector<double> y;
  std::vector<cplx> rhs;
  cplx neumann{0.0, 0.0};
  std::vector<cplx> solution;
};

// Graded nodes on [0, Ly_xi] where Ly_xi shrinks like |xi|^{-1/3} so the
// Airy-scale decay reaches ~1e-12 at the top (capped by ly_cap).
std::vector<double> mode_grid(double xi, int ny, double ly_cap);

// Second-order centered FD for i*xi*y*w - w'' = rhs, w'(0) = neumann
// (2nd-order one-sided), w(y_max) = 0. Banded Gaussian elimination with
// partial pivoting.
ModeBVP solve_mode_bvp(double xi, const std::vector<double>& y,
                       const std::vector<cplx>& rhs, cplx neumann);

// Lorentz L^{p,q} norm over all super-level sets, O(n^2).
// q = infinity() gives the weak-L^p norm.
double lorentz_bruteforce(std::vector<std::pair<double, double>> samples,
                          double p, double q);

// P = (1/pi) p.v. int dxA(x') / (x - x') dx' via symmetric-pair midpoint
// quadrature with periodic images; dxA from centered differences.
LineFunction hilbert_pv_quadrature(const LineFunction& A);

// Direct O(N^2) unitary DFT with the same frequency/phase contract as
// tdk::transform.
std::vector<cplx> dft_direct(const std::vector<cplx>& in, double Lx,
                             bool to_spectral);

}  // namespace tdk::oracle
