#pragma once

// Thin FFTW wrapper. Coefficients are normalised so that
// f(x_j) = sum_k c_k exp(2 pi i k x_j) with c_k = (1/n) sum_j f_j exp(-2 pi i k x_j).

#include <complex>
#include <span>
#include <vector>

namespace hs2::spectral {

using cplx = std::complex<double>;

std::vector<cplx> forward(std::span<const cplx> samples);
std::vector<cplx> forward(std::span<const double> samples);
std::vector<cplx> inverse(std::span<const cplx> coeffs);

/// Signed wavenumber of FFT slot `index`; the Nyquist slot maps to +n/2.
inline int wavenumber(int index, int n) noexcept { return index <= n / 2 ? index : index - n; }
inline bool is_nyquist(int index, int n) noexcept { return 2 * index == n; }

}  // namespace hs2::spectral
