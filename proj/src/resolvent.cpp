#include "tdk/resolvent.hpp"

#include <cmath>

#include "tdk/errors.hpp"
#include "tdk/oracle.hpp"
#include "tdk/specfn.hpp"

namespace tdk::resolvent {

namespace {

constexpr double kAiryCut = 28.0;  // |z| beyond which Ai underflows ~1e-41

// phase e^{+- i pi/6} and the real cube root, carried separately so no
// complex power with an ambiguous branch is ever taken
struct ModeScale {
  cplx phase;   // e^{sign(xi) i pi/6}
  double root;  // |xi|^{1/3}
};

ModeScale mode_scale(double xi) {
  double s = xi > 0.0 ? 1.0 : -1.0;
  return {std::polar(1.0, s * M_PI / 6.0), std::cbrt(std::abs(xi))};
}

}  // namespace

cplx wb_hat(double xi, double y, cplx ghat) {
  if (xi == 0.0) return cplx(0.0, 0.0);
  ModeScale m = mode_scale(xi);
  cplx z = m.phase * (m.root * y);
  if (std::abs(z) > kAiryCut) return cplx(0.0, 0.0);
  cplx ai = specfn::ai(z).value;
  return ai / (specfn::kAiPrime0 * m.phase * m.root) * ghat;
}

cplx dy_wb_hat(double xi, double y, cplx ghat) {
  if (xi == 0.0) return cplx(0.0, 0.0);
  ModeScale m = mode_scale(xi);
  cplx z = m.phase * (m.root * y);
  if (std::abs(z) > kAiryCut) return cplx(0.0, 0.0);
  cplx aip = specfn::ai(z).derivative;
  return aip / specfn::kAiPrime0 * ghat;
}

cplx sigma(double xi) {
  if (xi == 0.0) throw precondition_error("sigma: xi must be nonzero");
  double s = xi > 0.0 ? 1.0 : -1.0;
  return 1.0 / (3.0 * specfn::kAiPrime0 * std::polar(1.0, s * M_PI / 3.0));
}

ResolventSolve solve_homogeneous_neumann(const LineFunction& g) {
  LineFunction gs = transform(g, Space::spectral);
  double gnorm = max_abs(gs);
  if (std::abs(gs.v[0]) > 1e-12 * std::max(1.0, gnorm))
    throw precondition_error(
        "solve_homogeneous_neumann: g must be mean-zero");

  const GridSpec& grid = g.g;
  Field wb = Field::zeros(grid, Space::spectral);
  std::vector<double> tail(grid.Nx, 0.0);
  for (int ix = 0; ix < grid.Nx; ++ix) {
    double xi = grid.xi_of(ix);
    if (xi == 0.0) continue;
    cplx gh = gs.v[ix];
    if (gh == cplx(0.0, 0.0)) continue;
    for (int iy = 0; iy < grid.Ny; ++iy)
      wb.at(ix, iy) = wb_hat(xi, grid.y[iy], gh);
    tail[ix] = std::abs(wb.at(ix, grid.Ny - 1));
  }
  ResolventSolve out;
  out.w_b = transform(wb, Space::physical);
  out.neumann_data = transform(g, Space::physical);
  out.per_mode_tail_error = std::move(tail);
  return out;
}

LineFunction displacement_of_wb(const LineFunction& A) {
  double nyq = A.g.xi(A.g.Nx / 2);
  return apply_multiplier(A, [nyq](double xi) -> cplx {
    if (xi == 0.0 || std::abs(std::abs(xi) - nyq) < 1e-14)
      return cplx(0.0, 0.0);
    return sigma(xi) * cplx(0.0, xi) * std::cbrt(std::abs(xi));
  });
}

Field solve_inhomogeneous(const Field& F, const LineFunction& g) {
  if (!F.g.same_shape(g.g))
    throw precondition_error("solve_inhomogeneous: grid mismatch");
  const GridSpec& grid = F.g;
  Field Fs = transform(F, Space::spectral);
  LineFunction gs = transform(g, Space::spectral);
  Field w = Field::zeros(grid, Space::spectral);
  std::vector<cplx> rhs(grid.Ny);
  for (int ix = 0; ix < grid.Nx; ++ix) {
    double xi = grid.xi_of(ix);
    for (int iy = 0; iy < grid.Ny; ++iy) rhs[iy] = Fs.at(ix, iy);
    try {
      oracle::ModeBVP sol = oracle::solve_mode_bvp(xi, grid.y, rhs, gs.v[ix]);
      for (int iy = 0; iy < grid.Ny; ++iy) w.at(ix, iy) = sol.solution[iy];
    } catch (const solver_error& e) {
      throw solver_error("solve_inhomogeneous: mode " + std::to_string(ix) +
                         " (xi=" + std::to_string(xi) + "): " + e.what());
    }
  }
  return transform(w, Space::physical);
}

}  // namespace tdk::resolvent
