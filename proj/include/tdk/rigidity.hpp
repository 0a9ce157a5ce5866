#pragma once

// The fixed-point iteration of the reduced system (w = w_in + w_b, A from
// the elliptic solve, w_in from the kinetic solve with theta-forcing) and
// the ensemble audit of the hypoelliptic inequalities.

#include <cstdint>
#include <string>
#include <vector>

#include "tdk/reduction.hpp"
#include "tdk/spectral.hpp"

namespace tdk::rigidity {

struct State {
  Field omega, w, w_b, w_in;
  LineFunction A;
  double R = 8.0;
  reduction::CutoffProfile cutoff;
};

// random band-limited (|k| <= Nx/8) omega with smooth decaying y-profiles,
// A := I_inf[omega], normalized so ||[omega,A]||_sc = amplitude
State make_seed(const GridSpec& g, double amplitude, double R,
                std::uint64_t rng_seed);

State iterate_once(const State& s);

struct RigidityTrace {
  std::vector<double> w_in_Y, sc, a56_h43, ratio;
  bool converged = false;
  double rho_max = 0.0;
  int iterations = 0;
};

RigidityTrace run_rigidity(const GridSpec& g, double seed_amplitude, double R,
                           int max_iters, double tol, std::uint64_t rng_seed);

struct AuditRow {
  std::string name;
  double c_coarse = 0.0;  // empirical max of LHS/RHS on the coarse grid
  double c_fine = 0.0;    // same ensemble on the refined grid
  double drift = 0.0;     // |c_fine - c_coarse| / c_coarse
};

// analytically defined random ensemble evaluated on both grids
std::vector<AuditRow> audit_inequalities(int n_samples, std::uint64_t seed,
                                         const GridSpec& coarse,
                                         const GridSpec& fine);

}  // namespace tdk::rigidity
