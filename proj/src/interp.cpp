#include "tdk/interp.hpp"

namespace tdk {

ColumnInterp::ColumnInterp(const GridSpec& g, const std::complex<double>* vals)
    : y(&g.y), f(vals, vals + g.Ny), d(g.Ny) {
  for (int j = 0; j < g.Ny; ++j) {
    int s = g.s0[j];
    std::complex<double> acc(0.0, 0.0);
    for (int t = 0; t < 5; ++t) acc += g.w1[j * 5 + t] * f[s + t];
    d[j] = acc;
  }
}

std::complex<double> ColumnInterp::eval(double yy) {
  const std::vector<double>& yn = *y;
  int n = static_cast<int>(yn.size());
  if (yy <= yn.front()) {
    if (yy < yn.front()) clamped = true;
    return f.front();
  }
  if (yy >= yn.back()) {
    if (yy > yn.back()) clamped = true;
    return f.back();
  }
  int j = static_cast<int>(std::upper_bound(yn.begin(), yn.end(), yy) -
                           yn.begin()) -
          1;
  double h = yn[j + 1] - yn[j];
  double t = (yy - yn[j]) / h;
  double t2 = t * t, t3 = t2 * t;
  double h00 = 2 * t3 - 3 * t2 + 1;
  double h10 = t3 - 2 * t2 + t;
  double h01 = -2 * t3 + 3 * t2;
  double h11 = t3 - t2;
  return h00 * f[j] + h10 * h * d[j] + h01 * f[j + 1] + h11 * h * d[j + 1];
}

}  // namespace tdk
