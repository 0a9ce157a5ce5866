#pragma once

// Discretization of the x-periodic strip R/(2Lx) x [0, Ly]: graded y-nodes,
// trapezoid weights, and precomputed 5-point finite-difference tables for
// y-derivatives on the nonuniform grid.

#include <vector>

namespace tdk {

// Fornberg finite-difference weights for derivative `order` at point x0
// given the n stencil nodes xs. Returns n weights.
std::vector<double> fd_weights(double x0, const double* xs, int n, int order);

struct GridSpec {
  double Lx = 40.0;  // half-period of the x-torus
  int Nx = 512;      // even power of two
  double Ly = 30.0;  // y-truncation height
  int Ny = 1025;
  std::vector<double> y;   // y[0]=0 < ... < y[Ny-1]=Ly, graded ~ j^{3/2}
  std::vector<double> wy;  // composite trapezoid weights on y

  // 5-point FD tables: row j holds weights for nodes s0[j]..s0[j]+4.
  std::vector<int> s0;
  std::vector<double> w1;  // first derivative, Ny x 5
  std::vector<double> w2;  // second derivative, Ny x 5

  double dx() const { return 2.0 * Lx / Nx; }
  double x(int i) const { return -Lx + dx() * i; }
  // signed integer frequency of FFT storage index
  int k_of(int idx) const { return idx < Nx / 2 ? idx : idx - Nx; }
  double xi(int k) const;          // pi*k/Lx
  double xi_of(int idx) const { return xi(k_of(idx)); }

  bool same_shape(const GridSpec& o) const;

  static GridSpec make(double Lx, int Nx, double Ly, int Ny);
  static GridSpec make_with_nodes(double Lx, int Nx, std::vector<double> y);
};

// graded nodes y_j = Ly (j/(Ny-1))^{3/2}
std::vector<double> graded_nodes(double Ly, int Ny);
std::vector<double> trapezoid_weights(const std::vector<double>& y);

}  // namespace tdk
