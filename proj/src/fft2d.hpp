#pragma once

#include <vector>

#include "qft/grid.hpp"
#include "qft/quaternion.hpp"

namespace qft::detail {

/// Two-sided kernel transform of one real component via one complex 2D FFT.
///
/// Computes T{h}(xi) = sum_m e^{sign i th1} h[m] e^{sign j th2} * measure on
/// the centered dual grid, th_k = 2 pi xi_k x_k. The four cos/sin channel
/// sums are read from the complex FFT at (xi1, xi2) and (xi1, -xi2); the
/// result is the quaternion channel array (CC, sign SC, sign CS, SS).
std::vector<Quaternion> component_channels(const std::vector<double>& comp,
                                           const GridSpec& in_grid, int sign,
                                           double measure);

/// Plain centered complex 2D FFT (kernel e^{sign 2 pi i ...}), real input,
/// scaled by measure. Used by channel extraction and exposed for tests.
void centered_complex_fft(const std::vector<double>& comp, const GridSpec& in_grid,
                          int sign, double measure, std::vector<double>& re,
                          std::vector<double>& im);

}  // namespace qft::detail
