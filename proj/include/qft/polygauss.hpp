#pragma once

#include <array>
#include <vector>

#include "qft/signal.hpp"

namespace qft {

/// Coefficients of the polynomial factor of the m-th derivative of e^{-pi x^2}:
///
///   d^m/dx^m e^{-pi x^2} = e^{-pi x^2} P_m(x),   deg P_m = m,
///
/// by the recurrence P_0 = 1, P_{m+1}(x) = -2 pi x P_m(x) + P_m'(x).
/// Returned ascending (coeff[k] multiplies x^k). Throws on m < 0.
std::vector<double> hermite_factor(int m);

/// Real test function P(x) e^{-pi alpha |x|^2} with P(x) = sum c[m][n] x1^m x2^n.
///
/// The closed-form family the transform lemmas and the uncertainty
/// certificates live on; sampling is exact evaluation, never interpolation.
class PolyGauss {
public:
    /// coeffs[m][n] multiplies x1^m x2^n; alpha > 0 or std::invalid_argument.
    PolyGauss(std::vector<std::vector<double>> coeffs, double alpha);

    static PolyGauss gaussian(double alpha = 1.0);
    /// Monomial x1^m x2^n times e^{-pi alpha |x|^2}.
    static PolyGauss monomial(int m, int n, double alpha = 1.0, double scale = 1.0);

    double alpha() const { return alpha_; }
    const std::vector<std::vector<double>>& coeffs() const { return coeffs_; }

    /// max{m+n : c[m][n] != 0}, or -1 for the zero polynomial.
    int degree() const;

    double eval(double x1, double x2) const;
    double eval_polynomial(double x1, double x2) const;

    QSignal sample(const GridSpec& grid) const;

    /// Exact dilation x -> a x: coefficients scale by a^{m+n}, width by a^2.
    PolyGauss dilated(double a) const;

    bool is_zero() const { return degree() < 0; }

private:
    std::vector<std::vector<double>> coeffs_;
    double alpha_;
};

/// Quaternion polynomial times Gaussian, Q(xi) e^{-pi alpha |xi|^2}, stored as
/// four real coefficient planes assembled with the left-i / right-j placement
/// (so plane m is the q_m component of each coefficient). Closed under the
/// two-sided transform of PolyGauss inputs.
class QPolyGauss {
public:
    QPolyGauss(std::array<std::vector<std::vector<double>>, 4> planes, double alpha);

    double alpha() const { return alpha_; }
    const std::vector<std::vector<double>>& plane(int m) const { return planes_[m]; }

    int degree() const;
    Quaternion eval(double xi1, double xi2) const;

    /// Evaluates onto a frequency grid. The originating signal is real, so
    /// the result carries the whole spectrum as component 0 and the module
    /// norm coincides with the pointwise modulus.
    QSpectrum sample_spectrum(const GridSpec& freq_grid) const;

private:
    std::array<std::vector<std::vector<double>>, 4> planes_;
    double alpha_;
};

/// Closed-form two-sided transform of f(x) = P(x) e^{-pi alpha |x|^2}:
///
///   F{f}(xi) = Q(xi) e^{-(pi/alpha) |xi|^2},  deg Q = deg P,
///
/// where each monomial x1^m x2^n contributes (1/2pi)^{m+n} i^m j^n
/// P_m(xi1) P_n(xi2) at width 1, carried to general alpha by the dilation
/// law F{f(a .)}(xi) = (1/a^2) F{f}(xi/a) with a = sqrt(alpha).
QPolyGauss qft_polygauss(const PolyGauss& f);

}  // namespace qft
