#include "tdk/fft.hpp"

#include <cmath>

#include "tdk/errors.hpp"

namespace tdk::fft {

void fft_inplace(cplx* a, int n, bool inverse) {
  if (n < 1 || (n & (n - 1)) != 0)
    throw precondition_error("fft: size must be a power of two");
  // bit reversal
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const double sgn = inverse ? 1.0 : -1.0;
  for (int len = 2; len <= n; len <<= 1) {
    double ang = sgn * 2.0 * M_PI / len;
    cplx wl(std::cos(ang), std::sin(ang));
    for (int i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (int j = 0; j < len / 2; ++j) {
        cplx u = a[i + j];
        cplx v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

}  // namespace tdk::fft
