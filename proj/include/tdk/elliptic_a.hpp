#pragma once

// The elliptic multiplier m(xi) = 1 - sigma(xi) i xi |xi|^{1/3}, its
// inversion, and the fixed-point solve for the displacement A.

#include <complex>
#include <vector>

#include "tdk/spectral.hpp"

namespace tdk::elliptic_a {

using cplx = std::complex<double>;

struct MSymbol {
  double xi = 0.0;
  cplx value{1.0, 0.0};
  cplx inv_value{1.0, 0.0};
};

MSymbol m_symbol(double xi);  // m(0) = 1

// Solves (1 + I_inf[w dchi_R]) A - I_inf[w_b] = I_inf[w_in] in the fixed
// point form A <- m^{-1}( I_inf[w_in] - I_inf[w dchi_R] A ), where the w_b
// part is absorbed into m. dchi_R is the cutoff derivative on the y-nodes.
// Inner iteration to relative update 1e-12, max 200 iterations.
LineFunction solve_A(const Field& w_in, const Field& w,
                     const std::vector<double>& dchi_R);

struct ARegularityReport {
  double a56_h43 = 0.0;  // || |dx|^{5/6} A ||_{H^{4/3}}
  double dxA_l3 = 0.0;   // || dx A ||_{L^3}
  double dxA_h76 = 0.0;  // || dx A ||_{H^{7/6}}
};

ARegularityReport a_regularity_norms(const LineFunction& A);

}  // namespace tdk::elliptic_a
