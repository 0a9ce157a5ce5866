#include "tdk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tdk/errors.hpp"

namespace tdk::oracle {

std::vector<double> mode_grid(double xi, int ny, double ly_cap) {
  // height where |Ai(e^{i pi/6}|xi|^{1/3} y)| ~ e^{-26*1.5} at the top,
  // i.e. (2/3)|z|^{3/2} cos(pi/4) = 39
  const double c = std::pow(26.0 * 1.5 / std::cos(M_PI / 4.0), 2.0 / 3.0);
  double top = ly_cap;
  if (xi != 0.0) top = std::min(ly_cap, c / std::cbrt(std::abs(xi)));
  std::vector<double> y(ny);
  for (int j = 0; j < ny; ++j)
    y[j] = top * std::pow(double(j) / (ny - 1), 1.5);
  y[0] = 0.0;
  y[ny - 1] = top;
  return y;
}

ModeBVP solve_mode_bvp(double xi, const std::vector<double>& y,
                       const std::vector<cplx>& rhs, cplx neumann) {
  const int n = static_cast<int>(y.size());
  if (n < 4) throw precondition_error("solve_mode_bvp: need >= 4 nodes");
  if (rhs.size() != y.size())
    throw precondition_error("solve_mode_bvp: rhs size mismatch");

  // band storage: row i holds columns i-1 .. i+2 at band[4i .. 4i+3]
  std::vector<cplx> band(static_cast<size_t>(n) * 4, cplx(0.0, 0.0));
  std::vector<cplx> b(n, cplx(0.0, 0.0));
  auto at = [&](int i, int j) -> cplx& { return band[4 * i + (j - i + 1)]; };

  // Neumann row: 2nd-order one-sided first derivative at y=0
  {
    double h1 = y[1] - y[0], h2 = y[2] - y[0];
    // weights of the 3-point derivative at 0 for nodes {0, h1, h2}
    double w0 = -(h1 + h2) / (h1 * h2);
    double w1 = h2 / (h1 * (h2 - h1));
    double w2 = -h1 / (h2 * (h2 - h1));
    at(0, 0) = w0;
    at(0, 1) = w1;
    at(0, 2) = w2;
    b[0] = neumann;
  }
  for (int j = 1; j < n - 1; ++j) {
    double hm = y[j] - y[j - 1], hp = y[j + 1] - y[j];
    at(j, j - 1) = -2.0 / (hm * (hm + hp));
    at(j, j) = cplx(2.0 / (hm * hp), 0.0) + cplx(0.0, xi * y[j]);
    at(j, j + 1) = -2.0 / (hp * (hm + hp));
    b[j] = rhs[j];
  }
  at(n - 1, n - 1) = 1.0;
  b[n - 1] = 0.0;

  // banded Gaussian elimination with partial pivoting (adjacent rows only,
  // since the lower bandwidth is 1)
  for (int i = 0; i < n - 1; ++i) {
    cplx piv = band[4 * i + 1];
    cplx below = band[4 * (i + 1) + 0];
    if (std::abs(below) > std::abs(piv)) {
      for (int t = 0; t < 3; ++t)
        std::swap(band[4 * i + 1 + t], band[4 * (i + 1) + t]);
      std::swap(b[i], b[i + 1]);
      piv = band[4 * i + 1];
    }
    if (std::abs(piv) < 1e-300)
      throw solver_error("solve_mode_bvp: singular pivot at xi=" +
                         std::to_string(xi));
    cplx m = band[4 * (i + 1) + 0] / piv;
    band[4 * (i + 1) + 0] = 0.0;
    for (int t = 1; t <= 2; ++t)
      band[4 * (i + 1) + t - 1 + 1] -= m * band[4 * i + 1 + t];
    b[i + 1] -= m * b[i];
  }

  std::vector<cplx> w(n);
  for (int i = n - 1; i >= 0; --i) {
    cplx acc = b[i];
    if (i + 1 < n) acc -= band[4 * i + 2] * w[i + 1];
    if (i + 2 < n) acc -= band[4 * i + 3] * w[i + 2];
    cplx piv = band[4 * i + 1];
    if (std::abs(piv) < 1e-300)
      throw solver_error("solve_mode_bvp: singular back substitution at xi=" +
                         std::to_string(xi));
    w[i] = acc / piv;
  }

  ModeBVP out;
  out.xi = xi;
  out.y = y;
  out.rhs = rhs;
  out.neumann = neumann;
  out.solution = std::move(w);
  return out;
}

double lorentz_bruteforce(std::vector<std::pair<double, double>> samples,
                          double p, double q) {
  if (p <= 1.0) throw precondition_error("lorentz_bruteforce: p must be > 1");
  // distinct |values| sorted decreasingly
  std::vector<double> vals;
  vals.reserve(samples.size());
  for (auto& s : samples) vals.push_back(std::abs(s.first));
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());

  double norm_weak = 0.0;
  double acc = 0.0;
  double mu_prev = 0.0;
  for (double v : vals) {
    if (v == 0.0) continue;
    double mu = 0.0;  // measure of {|f| >= v}, full O(n) scan per level
    for (auto& s : samples)
      if (std::abs(s.first) >= v) mu += s.second;
    if (std::isinf(q)) {
      norm_weak = std::max(norm_weak, v * std::pow(mu, 1.0 / p));
    } else {
      acc += std::pow(v, q) * (p / q) *
             (std::pow(mu, q / p) - std::pow(mu_prev, q / p));
    }
    mu_prev = mu;
  }
  if (std::isinf(q)) return norm_weak;
  return std::pow(acc, 1.0 / q);
}

LineFunction hilbert_pv_quadrature(const LineFunction& A) {
  LineFunction a = transform(A, Space::physical);
  const int n = a.g.Nx;
  const double L = a.g.Lx;
  const double dx = a.g.dx();
  std::vector<double> da(n);
  for (int i = 0; i < n; ++i) {
    int ip = (i + 1) % n, im = (i + n - 1) % n;
    da[i] = (a.v[ip].real() - a.v[im].real()) / (2.0 * dx);
  }
  // periodic image sum in closed form: sum_m 1/(d + 2Lm) =
  // (pi/2L) cot(pi d / 2L). The alternate-point trapezoid rule (only j with
  // i - j odd, double spacing) handles the p.v. singularity with spectral
  // accuracy on smooth periodic data.
  LineFunction out = LineFunction::zeros(a.g, Space::physical);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = (i + 1) % 2; j < n; j += 2) {
      double d = a.g.x(i) - a.g.x(j);
      double k = (M_PI / (2.0 * L)) / std::tan(M_PI * d / (2.0 * L));
      acc += da[j] * k;
    }
    out.v[i] = acc * 2.0 * dx / M_PI;
  }
  return out;
}

std::vector<cplx> dft_direct(const std::vector<cplx>& in, double Lx,
                             bool to_spectral) {
  const int n = static_cast<int>(in.size());
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  const double scale = 1.0 / std::sqrt(double(n));
  if (to_spectral) {
    for (int idx = 0; idx < n; ++idx) {
      int k = idx < n / 2 ? idx : idx - n;
      double xi = M_PI * k / Lx;
      cplx acc(0.0, 0.0);
      for (int i = 0; i < n; ++i) {
        double x = -Lx + 2.0 * Lx * i / n;
        acc += in[i] * std::polar(1.0, -xi * x);
      }
      out[idx] = acc * scale;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      double x = -Lx + 2.0 * Lx * i / n;
      cplx acc(0.0, 0.0);
      for (int idx = 0; idx < n; ++idx) {
        int k = idx < n / 2 ? idx : idx - n;
        double xi = M_PI * k / Lx;
        acc += in[idx] * std::polar(1.0, xi * x);
      }
      out[i] = acc * scale;
    }
  }
  return out;
}

}  // namespace tdk::oracle
