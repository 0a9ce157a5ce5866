#include "tdk/elliptic_a.hpp"

#include <cmath>

#include "tdk/errors.hpp"
#include "tdk/resolvent.hpp"

namespace tdk::elliptic_a {

MSymbol m_symbol(double xi) {
  MSymbol m;
  m.xi = xi;
  if (xi == 0.0) return m;  // multiplier term vanishes at xi = 0
  m.value = 1.0 - resolvent::sigma(xi) * cplx(0.0, xi) *
                      std::cbrt(std::abs(xi));
  m.inv_value = 1.0 / m.value;
  return m;
}

namespace {
LineFunction apply_m_inverse(const LineFunction& f) {
  return apply_multiplier(
      f, [](double xi) { return m_symbol(xi).inv_value; });
}
}  // namespace

LineFunction solve_A(const Field& w_in, const Field& w,
                     const std::vector<double>& dchi_R) {
  if (!w_in.g.same_shape(w.g))
    throw precondition_error("solve_A: grid mismatch");
  LineFunction rhs = apply_m_inverse(integrate_y_full(w_in));
  // b(x) = I_inf[w dchi_R]; contraction requires ||b||_inf < 1
  LineFunction b = integrate_y_full(scale_by_y_profile(w, dchi_R));
  double bsup = max_abs(b);
  if (bsup >= 1.0)
    throw smallness_error("solve_A: ||I_inf[w dchi_R]||_inf >= 1");

  LineFunction A = rhs;
  double prev_update = -1.0;
  for (int it = 0; it < 200; ++it) {
    LineFunction BA = dealias(multiply(b, A));
    LineFunction next = add(rhs, apply_m_inverse(BA), -1.0);
    double diff = max_abs(add(next, A, -1.0));
    double scale = std::max(max_abs(next), 1e-300);
    if (prev_update >= 0.0 && diff > prev_update && diff > 1e-13 * scale)
      throw smallness_error("solve_A: inner iteration is not contracting");
    prev_update = diff;
    A = next;
    if (diff <= 1e-12 * scale) return A;
  }
  throw solver_error("solve_A: no convergence in 200 iterations");
}

ARegularityReport a_regularity_norms(const LineFunction& A) {
  LineFunction s = transform(A, Space::spectral);
  const GridSpec& g = A.g;
  double dx = g.dx();
  double h43 = 0.0, h76 = 0.0;
  for (int ix = 0; ix < g.Nx; ++ix) {
    double xi = g.xi_of(ix);
    double a2 = std::norm(s.v[ix]);
    h43 += std::pow(std::abs(xi), 5.0 / 3.0) *
           std::pow(1.0 + xi * xi, 4.0 / 3.0) * a2;
    h76 += xi * xi * std::pow(1.0 + xi * xi, 7.0 / 6.0) * a2;
  }
  LineFunction dxA = dx_line(transform(A, Space::physical));
  double l3 = 0.0;
  for (int ix = 0; ix < g.Nx; ++ix)
    l3 += std::pow(std::abs(dxA.v[ix]), 3.0);
  ARegularityReport r;
  r.a56_h43 = std::sqrt(dx * h43);
  r.dxA_h76 = std::sqrt(dx * h76);
  r.dxA_l3 = std::cbrt(dx * l3);
  return r;
}

}  // namespace tdk::elliptic_a
