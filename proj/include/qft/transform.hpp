#pragma once

#include "qft/signal.hpp"

namespace qft {

/// Two-sided quaternion Fourier transform, direct O((n1 n2)^2) summation:
///
///   F(xi) = sum_x e^{-i 2 pi xi1 x1} f(x) e^{-j 2 pi xi2 x2} d1 d2
///
/// evaluated at the centered dual-grid frequencies. The kernel order is part
/// of the definition: i and j do not commute with f. Component spectra are
/// accumulated from the same kernel products, one sum per nonzero f_m.
/// This is the reference oracle, not the production path.
QSpectrum qft_direct(const QSignal& f);

/// Same transform computed from four standard complex 2D FFTs, one per real
/// component: each f_m is real, so its two-sided transform splits into the
/// four cos/sin channel sums, which are read off the complex FFT at (xi1, xi2)
/// and (xi1, -xi2); the channel quaternions then recombine with the left-i /
/// right-j placement of f = f0 + i f1 + j f2 + k f3. Matches qft_direct to
/// rounding. O(n1 n2 log(n1 n2)).
QSpectrum qft_fast(const QSignal& f);

/// Inverse transform f(x) = sum_xi e^{+i 2 pi xi1 x1} F(xi) e^{+j 2 pi xi2 x2} dxi1 dxi2,
/// fast path. qft_inverse(qft_fast(f)) == f to rounding.
QSignal qft_inverse(const QSpectrum& S);

/// Direct-summation inverse, oracle counterpart of qft_inverse.
QSignal qft_inverse_direct(const QSpectrum& S);

/// Circular convolution on the shared grid, scaled by d1*d2:
///
///   (f*g)(x_m) = sum_t f(x_t) g(x_m - x_t) d1 d2
///
/// with x_m - x_t wrapped periodically onto the grid. Quaternion product
/// order is f(t) g(x-t). Throws std::invalid_argument on grid mismatch.
///
/// The spectral product identity F{f*g} = F{f} F{g} holds for real f and g
/// when g is even in the first axis (or f even in the second); the committed
/// tests pin both the identity and its failure outside that class.
QSignal convolve(const QSignal& f, const QSignal& g);

/// Nearest-grid dilation (dilate(f, a))(x) ~= f(a x) resampled onto the same
/// grid. Spectrum law: F{f(a .)}(xi) = (1/a^2) F{f}(xi / a). Throws
/// std::invalid_argument if a <= 0.
QSignal dilate(const QSignal& f, double a);

}  // namespace qft
