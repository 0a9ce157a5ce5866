#include <cmath>
#include <random>

#include <doctest.h>

#include "tdk/errors.hpp"
#include "tdk/grid.hpp"
#include "tdk/oracle.hpp"
#include "tdk/spectral.hpp"

using namespace tdk;

namespace {

GridSpec small_grid() { return GridSpec::make(10.0, 64, 12.0, 129); }

Field random_field(const GridSpec& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Field f = Field::zeros(g, Space::physical);
  for (cplx& z : f.v) z = {nd(rng), nd(rng)};
  return f;
}

}  // namespace

TEST_CASE("Fornberg weights are exact on polynomials") {
  double xs[5] = {0.0, 0.3, 1.1, 1.9, 3.0};
  auto w1 = fd_weights(1.1, xs, 5, 1);
  auto w2 = fd_weights(1.1, xs, 5, 2);
  // p(x) = x^4 - 2x^2 + x, p'(1.1), p''(1.1) exactly
  auto p = [](double x) { return x * x * x * x - 2.0 * x * x + x; };
  double d1 = 0.0, d2 = 0.0;
  for (int i = 0; i < 5; ++i) {
    d1 += w1[i] * p(xs[i]);
    d2 += w2[i] * p(xs[i]);
  }
  double x = 1.1;
  CHECK(d1 == doctest::Approx(4.0 * x * x * x - 4.0 * x + 1.0).epsilon(1e-12));
  CHECK(d2 == doctest::Approx(12.0 * x * x - 4.0).epsilon(1e-12));
}

TEST_CASE("graded nodes and trapezoid weights") {
  GridSpec g = small_grid();
  CHECK(g.y.front() == 0.0);
  CHECK(g.y.back() == doctest::Approx(g.Ly));
  for (int j = 1; j < g.Ny; ++j) CHECK(g.y[j] > g.y[j - 1]);
  // trapezoid is exact on piecewise-linear data
  double acc = 0.0;
  for (int j = 0; j < g.Ny; ++j) acc += g.wy[j] * (2.0 * g.y[j] + 1.0);
  CHECK(acc == doctest::Approx(g.Ly * g.Ly + g.Ly).epsilon(1e-13));
}

TEST_CASE("grid construction rejects bad shapes") {
  CHECK_THROWS_AS(GridSpec::make(10.0, 48, 12.0, 65), tdk::precondition_error);
  CHECK_THROWS_AS(GridSpec::make(10.0, 64, 12.0, 4), tdk::precondition_error);
  CHECK_THROWS_AS(GridSpec::make_with_nodes(10.0, 64, {0.0, 1.0, 0.5, 2.0, 3.0}),
                  tdk::precondition_error);
}

TEST_CASE("delta impulse transforms to a flat spectrum of height Nx^{-1/2}") {
  GridSpec g = small_grid();
  Field f = Field::zeros(g, Space::physical);
  f.at(0, 0) = 1.0;  // at x = -Lx
  Field s = transform(f, Space::spectral);
  double expect = 1.0 / std::sqrt(double(g.Nx));
  for (int ix = 0; ix < g.Nx; ++ix) {
    // e^{-i xi_k x_0} = e^{+i pi k} = (-1)^k
    double sign = g.k_of(ix) % 2 == 0 ? 1.0 : -1.0;
    CHECK(std::abs(s.at(ix, 0) - cplx(sign * expect)) < 1e-13);
  }
}

TEST_CASE("cos(pi x / Lx) concentrates on modes k = +-1") {
  GridSpec g = small_grid();
  Field f = Field::zeros(g, Space::physical);
  for (int ix = 0; ix < g.Nx; ++ix)
    for (int iy = 0; iy < g.Ny; ++iy)
      f.at(ix, iy) = std::cos(M_PI * g.x(ix) / g.Lx);
  Field s = transform(f, Space::spectral);
  double expect = 0.5 * std::sqrt(double(g.Nx));
  for (int ix = 0; ix < g.Nx; ++ix) {
    int k = g.k_of(ix);
    double want = (k == 1 || k == -1) ? expect : 0.0;
    CHECK(std::abs(s.at(ix, 5)) == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("transform round trip and agreement with the direct DFT oracle") {
  GridSpec g = small_grid();
  Field f = random_field(g, 42);
  Field s = transform(f, Space::spectral);
  Field back = transform(s, Space::physical);
  for (size_t i = 0; i < f.v.size(); ++i)
    CHECK(std::abs(back.v[i] - f.v[i]) < 1e-13);

  // one y-slice against the O(N^2) oracle
  std::vector<cplx> slice(g.Nx);
  for (int ix = 0; ix < g.Nx; ++ix) slice[ix] = f.at(ix, 17);
  auto ref = oracle::dft_direct(slice, g.Lx, true);
  for (int ix = 0; ix < g.Nx; ++ix)
    CHECK(std::abs(s.at(ix, 17) - ref[ix]) < 1e-12);
}

TEST_CASE("Parseval defect of the unitary transform") {
  GridSpec g = small_grid();
  Field f = random_field(g, 7);
  CHECK(parseval_defect(f) < 1e-12);
}

TEST_CASE("multiplier composition |dx|^{s1} |dx|^{s2} = |dx|^{s1+s2}") {
  GridSpec g = small_grid();
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  LineFunction f = LineFunction::zeros(g, Space::physical);
  for (cplx& z : f.v) z = {nd(rng), nd(rng)};
  LineFunction a = abs_dx_power(abs_dx_power(f, 0.4), 0.8);
  LineFunction b = abs_dx_power(f, 1.2);
  for (int ix = 0; ix < g.Nx; ++ix)
    CHECK(std::abs(a.v[ix] - b.v[ix]) < 1e-11);
  CHECK_THROWS_AS(abs_dx_power(f, -0.5), tdk::precondition_error);
}

TEST_CASE("dx differentiates single modes exactly") {
  GridSpec g = small_grid();
  Field f = Field::zeros(g, Space::physical);
  double xi3 = g.xi(3);
  for (int ix = 0; ix < g.Nx; ++ix)
    for (int iy = 0; iy < g.Ny; ++iy)
      f.at(ix, iy) = std::sin(xi3 * g.x(ix));
  Field d = dx_field(f);
  for (int ix = 0; ix < g.Nx; ++ix)
    CHECK(std::abs(d.at(ix, 4) - cplx(xi3 * std::cos(xi3 * g.x(ix)))) < 1e-11);
}

TEST_CASE("dealias zeroes the upper third and is idempotent") {
  GridSpec g = small_grid();
  Field f = random_field(g, 11);
  Field d = transform(dealias(f), Space::spectral);
  for (int ix = 0; ix < g.Nx; ++ix) {
    if (3 * std::abs(g.k_of(ix)) >= g.Nx)
      CHECK(std::abs(d.at(ix, 0)) < 1e-13);
  }
  Field dd = dealias(dealias(f));
  Field d1 = dealias(f);
  for (size_t i = 0; i < dd.v.size(); ++i)
    CHECK(std::abs(dd.v[i] - d1.v[i]) < 1e-12);
}

TEST_CASE("y-integration identities") {
  GridSpec g = small_grid();
  // f(y) = e^{-y}: I_y = 1 - e^{-y}, I^inf = e^{-y} - e^{-Ly}
  Field f = Field::zeros(g, Space::physical);
  for (int ix = 0; ix < g.Nx; ++ix)
    for (int iy = 0; iy < g.Ny; ++iy) f.at(ix, iy) = std::exp(-g.y[iy]);
  Field up = integrate_y_from_zero(f);
  Field down = integrate_y_to_infinity(f, 1e-4);
  LineFunction full = integrate_y_full(f, 1e-4);
  for (int iy = 0; iy < g.Ny; ++iy) {
    // I_y + I^inf = I_inf at every height
    CHECK(std::abs(up.at(3, iy) + down.at(3, iy) - full.v[3]) < 1e-13);
  }
  CHECK(std::abs(full.v[3] - (1.0 - std::exp(-g.Ly))) < 1e-3);
  CHECK(std::abs(up.at(3, g.Ny - 1) - full.v[3]) < 1e-14);
}

TEST_CASE("tail warning fires when the profile does not vanish at Ly") {
  GridSpec g = small_grid();
  Field f = Field::zeros(g, Space::physical);
  for (int ix = 0; ix < g.Nx; ++ix)
    for (int iy = 0; iy < g.Ny; ++iy) f.at(ix, iy) = 1.0;
  Field down = integrate_y_to_infinity(f, 1e-8);
  CHECK(down.tail_warning);
}

TEST_CASE("y-derivatives are fourth-order accurate on smooth profiles") {
  GridSpec g = GridSpec::make(10.0, 8, 12.0, 257);
  Field f = Field::zeros(g, Space::physical);
  for (int ix = 0; ix < g.Nx; ++ix)
    for (int iy = 0; iy < g.Ny; ++iy)
      f.at(ix, iy) = std::sin(g.y[iy]) * std::exp(-0.3 * g.y[iy]);
  Field d1 = deriv_y(f, 1);
  Field d2 = deriv_y(f, 2);
  double e1 = 0.0, e2 = 0.0;
  for (int iy = 0; iy < g.Ny; ++iy) {
    double y = g.y[iy], em = std::exp(-0.3 * y);
    double ref1 = (std::cos(y) - 0.3 * std::sin(y)) * em;
    double ref2 = (-std::sin(y) - 0.6 * std::cos(y) + 0.09 * std::sin(y)) * em;
    e1 = std::max(e1, std::abs(d1.at(2, iy) - cplx(ref1)));
    e2 = std::max(e2, std::abs(d2.at(2, iy) - cplx(ref2)));
  }
  CHECK(e1 < 3e-7);
  CHECK(e2 < 1e-4);
}

TEST_CASE("products and scale_by_y") {
  GridSpec g = small_grid();
  Field a = random_field(g, 1), b = random_field(g, 2);
  Field p = multiply(a, b);
  CHECK(std::abs(p.at(5, 9) - a.at(5, 9) * b.at(5, 9)) < 1e-15);
  Field sy = scale_by_y(a, 2.0);
  CHECK(std::abs(sy.at(4, 10) - a.at(4, 10) * g.y[10] * g.y[10]) < 1e-13);
}
