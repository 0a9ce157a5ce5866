#pragma once

// Cubic Hermite interpolation in y on the graded grid, with node slopes
// estimated by 5-point finite differences (4th-order accurate on smooth
// data). Used for the composition omega(x, Phi(x,y)) and its inverse.

#include <algorithm>
#include <complex>
#include <vector>

#include "tdk/grid.hpp"

namespace tdk {

struct ColumnInterp {
  const std::vector<double>* y = nullptr;
  std::vector<std::complex<double>> f, d;
  bool clamped = false;  // an eval fell outside [y0, yN]

  // grid supplies the precomputed 5-point first-derivative table
  ColumnInterp(const GridSpec& g, const std::complex<double>* vals);

  std::complex<double> eval(double yy);
};

}  // namespace tdk
