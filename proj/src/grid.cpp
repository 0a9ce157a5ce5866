#include "tdk/grid.hpp"

#include <cmath>

#include "tdk/errors.hpp"

namespace tdk {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

// Fornberg's recursive algorithm (Math. Comp. 51, 1988).
std::vector<double> fd_weights(double x0, const double* xs, int n, int order) {
  const int m = order;
  std::vector<double> c(static_cast<size_t>(n) * (m + 1), 0.0);
  auto C = [&](int i, int k) -> double& { return c[i * (m + 1) + k]; };
  double c1 = 1.0;
  double c4 = xs[0] - x0;
  C(0, 0) = 1.0;
  for (int i = 1; i < n; ++i) {
    int mn = std::min(i, m);
    double c2 = 1.0;
    double c5 = c4;
    c4 = xs[i] - x0;
    for (int j = 0; j < i; ++j) {
      double c3 = xs[i] - xs[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          C(i, k) = c1 * (k * C(i - 1, k - 1) - c5 * C(i - 1, k)) / c2;
        C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
      }
      for (int k = mn; k >= 1; --k)
        C(j, k) = (c4 * C(j, k) - k * C(j, k - 1)) / c3;
      C(j, 0) = c4 * C(j, 0) / c3;
    }
    c1 = c2;
  }
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = C(i, m);
  return out;
}

std::vector<double> graded_nodes(double Ly, int Ny) {
  std::vector<double> y(Ny);
  for (int j = 0; j < Ny; ++j)
    y[j] = Ly * std::pow(double(j) / (Ny - 1), 1.5);
  y[0] = 0.0;
  y[Ny - 1] = Ly;
  return y;
}

std::vector<double> trapezoid_weights(const std::vector<double>& y) {
  int n = static_cast<int>(y.size());
  std::vector<double> w(n, 0.0);
  for (int j = 0; j + 1 < n; ++j) {
    double h = y[j + 1] - y[j];
    w[j] += 0.5 * h;
    w[j + 1] += 0.5 * h;
  }
  return w;
}

double GridSpec::xi(int k) const { return kPi * k / Lx; }

bool GridSpec::same_shape(const GridSpec& o) const {
  return Nx == o.Nx && Ny == o.Ny && Lx == o.Lx && Ly == o.Ly;
}

GridSpec GridSpec::make(double Lx, int Nx, double Ly, int Ny) {
  return make_with_nodes(Lx, Nx, graded_nodes(Ly, Ny));
}

GridSpec GridSpec::make_with_nodes(double Lx, int Nx, std::vector<double> y) {
  if (Nx < 4 || (Nx & (Nx - 1)) != 0)
    throw precondition_error("GridSpec: Nx must be a power of two >= 4");
  int Ny = static_cast<int>(y.size());
  if (Ny < 5) throw precondition_error("GridSpec: Ny must be >= 5");
  for (int j = 0; j + 1 < Ny; ++j)
    if (!(y[j] < y[j + 1]))
      throw precondition_error("GridSpec: y nodes must be strictly increasing");
  if (y[0] != 0.0) throw precondition_error("GridSpec: y[0] must be 0");

  GridSpec g;
  g.Lx = Lx;
  g.Nx = Nx;
  g.Ny = Ny;
  g.Ly = y.back();
  g.y = std::move(y);
  g.wy = trapezoid_weights(g.y);
  g.s0.resize(Ny);
  g.w1.resize(static_cast<size_t>(Ny) * 5);
  g.w2.resize(static_cast<size_t>(Ny) * 5);
  for (int j = 0; j < Ny; ++j) {
    int s = std::min(std::max(j - 2, 0), Ny - 5);
    g.s0[j] = s;
    auto a1 = fd_weights(g.y[j], g.y.data() + s, 5, 1);
    auto a2 = fd_weights(g.y[j], g.y.data() + s, 5, 2);
    for (int t = 0; t < 5; ++t) {
      g.w1[j * 5 + t] = a1[t];
      g.w2[j * 5 + t] = a2[t];
    }
  }
  return g;
}

}  // namespace tdk
