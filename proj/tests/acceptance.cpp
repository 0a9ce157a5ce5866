// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances are pinned here and nowhere else.

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "tdk/elliptic_a.hpp"
#include "tdk/errors.hpp"
#include "tdk/norms.hpp"
#include "tdk/oracle.hpp"
#include "tdk/reduction.hpp"
#include "tdk/resolvent.hpp"
#include "tdk/rigidity.hpp"
#include "tdk/specfn.hpp"
#include "tdk/spectral.hpp"

using namespace tdk;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

void note(Result& r, bool ok, const std::string& what) {
  if (!ok) {
    r.pass = false;
    r.detail += (r.detail.empty() ? "" : "; ") + what;
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---------------------------------------------------------------- criterion 1

// independent termwise-differentiated series for Ai'' (plain double; the
// worst cancellation inside the series disk keeps it honest to ~1e-11)
cplx ai_second_series(cplx z) {
  cplx z3 = z * z * z;
  cplx u = z, v = z * z;
  cplx sum = specfn::kAi0 * u + specfn::kAiPrime0 * v;
  for (int n = 2; n < 400; ++n) {
    u *= z3 / ((3.0 * n - 3.0) * (3.0 * n - 4.0));
    v *= z3 / ((3.0 * n - 2.0) * (3.0 * n - 3.0));
    sum += specfn::kAi0 * u + specfn::kAiPrime0 * v;
    if (std::abs(u) + std::abs(v) < 1e-22) break;
  }
  return sum;
}

Result criterion_constants() {
  Result r;
  auto ray = specfn::ai_ray_integral(0.0, 40.0, 1e-9);
  double e_ray = std::abs(ray.value - cplx(1.0 / 3.0, 0.0));
  note(r, e_ray <= 1e-8, "ray integral err " + fmt(e_ray));

  double ai0_ref =
      1.0 / (std::pow(3.0, 2.0 / 3.0) * specfn::gamma_positive(2.0 / 3.0));
  double e_ai0 = std::abs(specfn::ai(cplx(0.0)).value.real() - ai0_ref);
  note(r, e_ai0 <= 1e-12, "Ai(0) err " + fmt(e_ai0));

  double worst = 0.0;
  for (double rr : {0.3, 1.0, 2.5, 4.0, 5.5, 6.4}) {
    for (double th : {0.0, 0.4, 0.8, specfn::kSectorMax}) {
      cplx z = std::polar(rr, th);
      worst = std::max(worst,
                       std::abs(ai_second_series(z) - z * specfn::ai(z).value));
    }
  }
  for (double rr : {7.0, 10.0, 14.0}) {
    for (double th : {0.0, 0.5, specfn::kSectorMax - 0.05}) {
      cplx z = std::polar(rr, th);
      // h balances stencil truncation (h^4 |z|^3 |Ai|) against rounding
      double h = 5e-4;
      cplx d2 = (-specfn::ai(z + 2.0 * h).derivative +
                 8.0 * specfn::ai(z + h).derivative -
                 8.0 * specfn::ai(z - h).derivative +
                 specfn::ai(z - 2.0 * h).derivative) /
                (12.0 * h);
      worst = std::max(worst, std::abs(d2 - z * specfn::ai(z).value));
    }
  }
  note(r, worst <= 1e-10, "ODE residual " + fmt(worst));

  double sig_ref = 1.0 / (6.0 * specfn::kAiPrime0);
  double e_sig = std::abs(resolvent::sigma(1.7).real() - sig_ref);
  note(r, e_sig <= 1e-10, "Re sigma err " + fmt(e_sig));
  if (r.pass)
    r.detail = "ray " + fmt(e_ray) + ", Ai(0) " + fmt(e_ai0) + ", ODE " +
               fmt(worst) + ", Re sigma " + fmt(e_sig);
  return r;
}

// ---------------------------------------------------------------- criterion 2

double mode_rel_l2(double xi, int ny) {
  auto y = oracle::mode_grid(xi, ny, 40.0);
  std::vector<cplx> rhs(y.size(), cplx(0.0, 0.0));
  auto sol = oracle::solve_mode_bvp(xi, y, rhs, cplx(1.0, 0.0));
  auto wq = trapezoid_weights(y);
  double num = 0.0, den = 0.0;
  for (size_t j = 0; j < y.size(); ++j) {
    cplx ref = resolvent::wb_hat(xi, y[j], cplx(1.0, 0.0));
    num += std::norm(sol.solution[j] - ref) * wq[j];
    den += std::norm(ref) * wq[j];
  }
  return std::sqrt(num / den);
}

Result criterion_resolvent_vs_oracle() {
  Result r;
  double worst = 0.0, worst_xi = 0.0;
  for (int i = 0; i < 10; ++i) {
    double mag = 0.1 * std::pow(500.0, i / 9.0);
    for (double xi : {mag, -mag}) {
      double e = mode_rel_l2(xi, 2049);
      if (e > worst) {
        worst = e;
        worst_xi = xi;
      }
    }
  }
  note(r, worst <= 1e-6,
       "rel L2 " + fmt(worst) + " at xi=" + fmt(worst_xi));

  double e1 = mode_rel_l2(2.0, 513);
  double e2 = mode_rel_l2(2.0, 1025);
  double order = std::log2(e1 / e2);
  note(r, order >= 1.8 && order <= 2.2, "FD order " + fmt(order));
  if (r.pass)
    r.detail = "worst rel L2 " + fmt(worst) + ", FD order " + fmt(order);
  return r;
}

// ---------------------------------------------------------------- criterion 3

Result criterion_neumann_trace() {
  Result r;
  GridSpec g = GridSpec::make(10.0, 64, 30.0, 2049);
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> nd;
  LineFunction gl = LineFunction::zeros(g, Space::physical);
  for (int k = 1; k <= g.Nx / 4; ++k) {
    double c = nd(rng), s = nd(rng);
    for (int ix = 0; ix < g.Nx; ++ix)
      gl.v[ix] +=
          c * std::cos(g.xi(k) * g.x(ix)) + s * std::sin(g.xi(k) * g.x(ix));
  }
  auto sol = resolvent::solve_homogeneous_neumann(gl);
  Field dyw = deriv_y(sol.w_b, 1);
  double num = 0.0, den = 0.0;
  for (int ix = 0; ix < g.Nx; ++ix) {
    num += std::norm(dyw.at(ix, 0) - gl.v[ix]);
    den += std::norm(gl.v[ix]);
  }
  double err = std::sqrt(num / den);
  note(r, err <= 1e-6, "trace rel L2 " + fmt(err));
  if (r.pass) r.detail = "trace rel L2 " + fmt(err);
  return r;
}

// ---------------------------------------------------------------- criterion 4

std::pair<double, double> m_scan(int n) {
  double min_m = 1e300, sup_q = 0.0;
  for (int i = 0; i < n; ++i) {
    double mag = std::pow(10.0, -6.0 + 10.0 * double(i) / (n - 1));
    for (double xi : {mag, -mag}) {
      double am = std::abs(elliptic_a::m_symbol(xi).value);
      min_m = std::min(min_m, am);
      sup_q = std::max(sup_q, (1.0 + std::pow(std::abs(xi), 4.0 / 3.0)) / am);
    }
  }
  return {min_m, sup_q};
}

Result criterion_m_invertibility() {
  Result r;
  auto [min1, sup1] = m_scan(500000);  // 1e6 points counting both signs
  auto [min2, sup2] = m_scan(5000000);
  note(r, min1 > 0.0 && min2 > 0.0, "min |m| " + fmt(std::min(min1, min2)));
  double drift = std::abs(sup2 - sup1) / sup1;
  note(r, std::isfinite(sup1) && drift <= 0.01,
       "sup (1+|xi|^{4/3})/|m| drift " + fmt(drift));
  if (r.pass)
    r.detail = "min|m| " + fmt(min1) + ", sup " + fmt(sup1) + ", drift " +
               fmt(drift);
  return r;
}

// ---------------------------------------------------------------- criterion 5

Result criterion_audit_constants() {
  Result r;
  GridSpec coarse = GridSpec::make(10.0, 64, 16.0, 257);
  GridSpec fine = GridSpec::make(10.0, 128, 16.0, 513);
  auto rows = rigidity::audit_inequalities(100, 77, coarse, fine);
  for (const auto& row : rows) {
    bool ok = std::isfinite(row.c_coarse) && std::isfinite(row.c_fine) &&
              row.c_coarse > 0.0 && row.drift <= 0.10;
    note(r, ok, row.name + " drift " + fmt(row.drift) + " (C " +
                    fmt(row.c_coarse) + " -> " + fmt(row.c_fine) + ")");
    if (r.pass)
      r.detail += (r.detail.empty() ? "" : ", ") + row.name + " " +
                  fmt(row.drift);
  }
  return r;
}

// ---------------------------------------------------------------- criterion 6

struct AnalyticState {
  // omega(x,y) = sum_m re(c_m e^{i xi_m x}) y^{a_m} e^{-y/l_m} on the base
  // half-period Lx0; the lambda-rescaled state lives on Lx0/lambda^3.
  std::vector<int> k;
  std::vector<cplx> c;
  std::vector<double> a, l;
  double Lx0 = 10.0;

  Field omega_scaled(const GridSpec& g, double lam) const {
    Field f = Field::zeros(g, Space::physical);
    for (size_t m = 0; m < k.size(); ++m) {
      double xi = M_PI * k[m] / Lx0;  // base-state frequency
      for (int ix = 0; ix < g.Nx; ++ix) {
        // omega_lam(x, y) = omega(lam^3 x, lam y)
        cplx e = c[m] * std::polar(1.0, xi * lam * lam * lam * g.x(ix));
        for (int iy = 0; iy < g.Ny; ++iy) {
          double y = lam * g.y[iy];
          f.at(ix, iy) += e.real() * std::pow(y, a[m]) * std::exp(-y / l[m]);
        }
      }
    }
    return f;
  }
};

struct ScaleQuantities {
  double linf, y_dx, dyy, dy_l6l2, transport_weak, product, a_transport;
};

ScaleQuantities scale_quantities(const Field& omega) {
  LineFunction A = integrate_y_full(omega);
  ScaleQuantities q{};
  q.linf = norms::linf(omega);
  auto y = norms::y_norm(omega);
  q.y_dx = y.y_dx;
  q.dyy = y.dyy;
  q.dy_l6l2 = norms::l6l2(deriv_y(omega, 1));
  q.transport_weak = norms::nested_weak(scale_by_y(dx_field(omega), 1.0));
  auto sc = norms::sc_norm(omega, A);
  q.product = sc.product;
  LineFunction dxA = dx_line(transform(A, Space::physical));
  Field t = scale_by_y(multiply(deriv_y(omega, 1), dxA), 1.0);
  q.a_transport = norms::nested_weak(t);
  return q;
}

Result criterion_scale_invariance() {
  Result r;
  AnalyticState st;
  st.k = {1, 2};
  st.c = {cplx(0.9, 0.3), cplx(-0.4, 0.6)};
  st.a = {1.0, 2.0};
  st.l = {1.0, 0.8};

  const int Nx = 64, Ny = 1025;
  const double Ly0 = 20.0;
  GridSpec base = GridSpec::make(st.Lx0, Nx, Ly0, Ny);
  ScaleQuantities q0 = scale_quantities(st.omega_scaled(base, 1.0));
  const char* names[] = {"linf",   "y_dx",    "dyy",        "dy_l6l2",
                         "w_weak", "product", "a_transport"};
  for (double lam : {0.5, 2.0}) {
    GridSpec g = GridSpec::make(st.Lx0 / (lam * lam * lam), Nx, Ly0 / lam, Ny);
    ScaleQuantities q = scale_quantities(st.omega_scaled(g, lam));
    double v0[] = {q0.linf,    q0.y_dx,    q0.dyy,    q0.dy_l6l2,
                   q0.transport_weak, q0.product, q0.a_transport};
    double v1[] = {q.linf,    q.y_dx,    q.dyy,    q.dy_l6l2,
                   q.transport_weak, q.product, q.a_transport};
    for (int i = 0; i < 7; ++i) {
      double rel = std::abs(v1[i] - v0[i]) / v0[i];
      note(r, rel <= 0.02, std::string(names[i]) + "@lam=" + fmt(lam) +
                               " rel " + fmt(rel));
    }
  }
  if (r.pass) r.detail = "all 7 quantities within 2% for lambda in {1/2, 2}";
  return r;
}

// ---------------------------------------------------------------- criterion 7

Result criterion_rigidity() {
  Result r;
  GridSpec g = GridSpec::make(10.0, 64, 20.0, 1025);
  rigidity::State s = rigidity::make_seed(g, 1e-3, 8.0, 12345);
  std::vector<double> trace;
  trace.push_back(norms::y_norm(s.w_in).total);
  bool converged = false;
  for (int it = 0; it < 40 && !converged; ++it) {
    try {
      s = rigidity::iterate_once(s);
    } catch (const tdk::error& e) {
      note(r, false, std::string("iteration threw: ") + e.what());
      return r;
    }
    trace.push_back(norms::y_norm(s.w_in).total);
    if (trace.back() < 1e-12) converged = true;
  }
  note(r, converged, "did not reach 1e-12 (last " + fmt(trace.back()) + ")");
  double rho_max = 0.0;
  bool strict = true;
  for (size_t i = 1; i < trace.size(); ++i) {
    strict = strict && trace[i] < trace[i - 1];
    rho_max = std::max(rho_max, trace[i] / trace[i - 1]);
  }
  note(r, strict, "trace not strictly decreasing");
  note(r, rho_max <= 0.5, "ratio max " + fmt(rho_max));

  // final-state residuals
  reduction::ThetaSet th =
      reduction::theta_coefficients(s.omega, s.w, s.A, s.cutoff);
  double res = max_abs(reduction::residual_ptd3(s.w, th));
  note(r, res <= 1e-6, "reduced residual " + fmt(res));
  LineFunction Ap = transform(s.A, Space::physical);
  Field integrand = s.w;
  for (int ix = 0; ix < g.Nx; ++ix)
    for (int iy = 0; iy < g.Ny; ++iy)
      integrand.at(ix, iy) *= 1.0 - Ap.v[ix].real() * s.cutoff.dchi[iy];
  LineFunction got = integrate_y_full(integrand);
  double disp = 0.0;
  for (int ix = 0; ix < g.Nx; ++ix)
    disp = std::max(disp, std::abs(got.v[ix] - Ap.v[ix]));
  note(r, disp <= 1e-8, "displacement identity " + fmt(disp));
  if (r.pass)
    r.detail = "converged in " + std::to_string(trace.size() - 1) +
               " iters, rho_max " + fmt(rho_max) + ", residual " + fmt(res) +
               ", displacement " + fmt(disp);
  return r;
}

// ---------------------------------------------------------------- criterion 8

Result criterion_norm_engine() {
  Result r;
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> uv(0.0, 5.0), um(0.001, 0.3);
  std::vector<std::pair<double, double>> s(1000);
  for (auto& p : s) p = {uv(rng), um(rng)};
  double inf = std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (double p : {4.0 / 3.0, 2.0, 12.0 / 5.0}) {
    worst = std::max(worst, std::abs(norms::weak_lp(s, p) -
                                     oracle::lorentz_bruteforce(s, p, inf)));
    for (double q : {1.0, 2.0})
      worst = std::max(worst, std::abs(norms::lorentz_pq(s, p, q) -
                                       oracle::lorentz_bruteforce(s, p, q)));
  }
  note(r, worst <= 1e-12, "norm vs brute force " + fmt(worst));

  // p.v. Hilbert quadrature vs spectral |dx| on a smooth bump
  GridSpec g = GridSpec::make(10.0, 512, 5.0, 9);
  LineFunction A = LineFunction::zeros(g, Space::physical);
  for (int ix = 0; ix < g.Nx; ++ix) {
    double x = g.x(ix);
    A.v[ix] = std::exp(-x * x);
  }
  LineFunction P = oracle::hilbert_pv_quadrature(A);
  LineFunction ref = abs_dx_power(A, 1.0);
  double num = 0.0, den = 0.0;
  for (int ix = 0; ix < g.Nx; ++ix) {
    num += std::norm(P.v[ix] - ref.v[ix]);
    den += std::norm(ref.v[ix]);
  }
  double hil = std::sqrt(num / den);
  note(r, hil <= 1e-3, "Hilbert bump rel L2 " + fmt(hil));

  LineFunction As = LineFunction::zeros(g, Space::physical);
  for (int ix = 0; ix < g.Nx; ++ix) As.v[ix] = std::cos(g.xi(4) * g.x(ix));
  LineFunction Ps = oracle::hilbert_pv_quadrature(As);
  LineFunction refs = abs_dx_power(As, 1.0);
  double worst_m = 0.0;
  for (int ix = 0; ix < g.Nx; ++ix)
    worst_m = std::max(worst_m, std::abs(Ps.v[ix] - refs.v[ix]));
  note(r, worst_m <= 1e-3 * g.xi(4), "Hilbert mode err " + fmt(worst_m));
  if (r.pass)
    r.detail = "brute-force gap " + fmt(worst) + ", Hilbert " + fmt(hil);
  return r;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Result (*fn)();
  };
  const Entry entries[] = {
      {"1_constants", criterion_constants},
      {"2_resolvent_vs_oracle", criterion_resolvent_vs_oracle},
      {"3_neumann_trace", criterion_neumann_trace},
      {"4_multiplier_invertibility", criterion_m_invertibility},
      {"5_audit_constants", criterion_audit_constants},
      {"6_scale_invariance", criterion_scale_invariance},
      {"7_rigidity_contraction", criterion_rigidity},
      {"8_norm_engine", criterion_norm_engine},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    Result r;
    try {
      r = e.fn();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", e.name,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
