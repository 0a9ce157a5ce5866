#pragma once

#include <complex>
#include <vector>

namespace tdk::fft {

using cplx = std::complex<double>;

// In-place radix-2 Cooley-Tukey, unnormalized. inverse=false uses the
// e^{-2*pi*i*jk/N} kernel. Size must be a power of two.
void fft_inplace(cplx* a, int n, bool inverse);

}  // namespace tdk::fft
