#include "qft/polygauss.hpp"

#include <cmath>
#include <stdexcept>

namespace qft {

namespace {

constexpr double kPi = M_PI;

// i^m j^n over the unit cycle i^0..3 = 1, i, -1, -i (and likewise j).
Quaternion unit_power_ij(int m, int n) {
    static const Quaternion ipow[4] = {Quaternion::one(), Quaternion::i(),
                                       -Quaternion::one(), -Quaternion::i()};
    static const Quaternion jpow[4] = {Quaternion::one(), Quaternion::j(),
                                       -Quaternion::one(), -Quaternion::j()};
    return ipow[m % 4] * jpow[n % 4];
}

}  // namespace

std::vector<double> hermite_factor(int m) {
    if (m < 0) throw std::invalid_argument("hermite_factor needs m >= 0");
    std::vector<double> P = {1.0};
    for (int k = 0; k < m; ++k) {
        std::vector<double> next(P.size() + 1, 0.0);
        // -2 pi x P_k(x)
        for (std::size_t a = 0; a < P.size(); ++a) next[a + 1] += -2.0 * kPi * P[a];
        // + P_k'(x)
        for (std::size_t a = 1; a < P.size(); ++a) next[a - 1] += static_cast<double>(a) * P[a];
        P = std::move(next);
    }
    return P;
}

PolyGauss::PolyGauss(std::vector<std::vector<double>> coeffs, double alpha)
    : coeffs_(std::move(coeffs)), alpha_(alpha) {
    if (!(alpha_ > 0.0)) throw std::invalid_argument("PolyGauss width alpha must be positive");
    std::size_t cols = 0;
    for (const auto& row : coeffs_) cols = std::max(cols, row.size());
    for (auto& row : coeffs_) row.resize(cols, 0.0);
    if (coeffs_.empty()) coeffs_.push_back({0.0});
}

PolyGauss PolyGauss::gaussian(double alpha) {
    return PolyGauss({{1.0}}, alpha);
}

PolyGauss PolyGauss::monomial(int m, int n, double alpha, double scale) {
    if (m < 0 || n < 0) throw std::invalid_argument("monomial powers must be nonnegative");
    std::vector<std::vector<double>> c(m + 1, std::vector<double>(n + 1, 0.0));
    c[m][n] = scale;
    return PolyGauss(std::move(c), alpha);
}

int PolyGauss::degree() const {
    int deg = -1;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) {
        for (std::size_t n = 0; n < coeffs_[m].size(); ++n) {
            if (coeffs_[m][n] != 0.0) deg = std::max(deg, static_cast<int>(m + n));
        }
    }
    return deg;
}

double PolyGauss::eval_polynomial(double x1, double x2) const {
    // Horner in x1 with inner Horner in x2.
    double acc = 0.0;
    for (std::size_t m = coeffs_.size(); m-- > 0;) {
        double row = 0.0;
        for (std::size_t n = coeffs_[m].size(); n-- > 0;) row = row * x2 + coeffs_[m][n];
        acc = acc * x1 + row;
    }
    return acc;
}

double PolyGauss::eval(double x1, double x2) const {
    return eval_polynomial(x1, x2) * std::exp(-kPi * alpha_ * (x1 * x1 + x2 * x2));
}

QSignal PolyGauss::sample(const GridSpec& grid) const {
    return QSignal::from_function(
        grid, [this](double x1, double x2) { return Quaternion(eval(x1, x2)); });
}

PolyGauss PolyGauss::dilated(double a) const {
    if (!(a > 0.0)) throw std::invalid_argument("dilation factor must be positive");
    auto c = coeffs_;
    for (std::size_t m = 0; m < c.size(); ++m) {
        for (std::size_t n = 0; n < c[m].size(); ++n) {
            c[m][n] *= std::pow(a, static_cast<double>(m + n));
        }
    }
    return PolyGauss(std::move(c), alpha_ * a * a);
}

QPolyGauss::QPolyGauss(std::array<std::vector<std::vector<double>>, 4> planes, double alpha)
    : planes_(std::move(planes)), alpha_(alpha) {
    if (!(alpha_ > 0.0)) throw std::invalid_argument("QPolyGauss width alpha must be positive");
    std::size_t rows = 0, cols = 0;
    for (const auto& p : planes_) {
        rows = std::max(rows, p.size());
        for (const auto& r : p) cols = std::max(cols, r.size());
    }
    for (auto& p : planes_) {
        p.resize(rows);
        for (auto& r : p) r.resize(cols, 0.0);
    }
}

int QPolyGauss::degree() const {
    int deg = -1;
    for (const auto& p : planes_) {
        for (std::size_t m = 0; m < p.size(); ++m) {
            for (std::size_t n = 0; n < p[m].size(); ++n) {
                if (p[m][n] != 0.0) deg = std::max(deg, static_cast<int>(m + n));
            }
        }
    }
    return deg;
}

Quaternion QPolyGauss::eval(double xi1, double xi2) const {
    const double env = std::exp(-kPi * alpha_ * (xi1 * xi1 + xi2 * xi2));
    double comp[4];
    for (int ch = 0; ch < 4; ++ch) {
        const auto& p = planes_[ch];
        double acc = 0.0;
        for (std::size_t m = p.size(); m-- > 0;) {
            double row = 0.0;
            for (std::size_t n = p[m].size(); n-- > 0;) row = row * xi2 + p[m][n];
            acc = acc * xi1 + row;
        }
        comp[ch] = acc * env;
    }
    return {comp[0], comp[1], comp[2], comp[3]};
}

QSpectrum QPolyGauss::sample_spectrum(const GridSpec& freq_grid) const {
    const auto size = static_cast<std::size_t>(freq_grid.size());
    std::vector<Quaternion> samples(size);
    QSpectrum::ComponentSpectra comps;
    for (auto& c : comps) c.assign(size, Quaternion{});
    for (int u1 = 0; u1 < freq_grid.n1; ++u1) {
        const double xi1 = freq_grid.x1(u1);
        for (int u2 = 0; u2 < freq_grid.n2; ++u2) {
            const double xi2 = freq_grid.x2(u2);
            const Quaternion v = eval(xi1, xi2);
            const std::size_t at = static_cast<std::size_t>(u1) * freq_grid.n2 + u2;
            samples[at] = v;
            // A real input has one component; its spectrum is the whole value.
            comps[0][at] = v;
        }
    }
    return {freq_grid, std::move(samples), std::move(comps)};
}

QPolyGauss qft_polygauss(const PolyGauss& f) {
    const double alpha = f.alpha();
    const double s = std::sqrt(alpha);
    const auto& c = f.coeffs();
    const std::size_t rows = c.size();
    std::size_t cols = 0;
    for (const auto& r : c) cols = std::max(cols, r.size());

    std::array<std::vector<std::vector<double>>, 4> planes;
    for (auto& p : planes) p.assign(rows, std::vector<double>(cols, 0.0));

    // Each monomial x1^m x2^n at width 1 transforms to
    // (1/2pi)^{m+n} i^m j^n P_m(xi1) P_n(xi2) e^{-pi |xi|^2}; general alpha
    // is reached through x -> sqrt(alpha) x, which rescales coefficients by
    // s^{-(m+n)}, arguments by 1/s, and the whole transform by 1/s^2.
    for (std::size_t m = 0; m < rows; ++m) {
        const std::vector<double> Pm = hermite_factor(static_cast<int>(m));
        for (std::size_t n = 0; n < c[m].size(); ++n) {
            if (c[m][n] == 0.0) continue;
            const std::vector<double> Pn = hermite_factor(static_cast<int>(n));
            const Quaternion unit = unit_power_ij(static_cast<int>(m), static_cast<int>(n));
            const double scale = c[m][n] *
                                 std::pow(1.0 / (2.0 * kPi), static_cast<double>(m + n)) /
                                 (std::pow(s, static_cast<double>(m + n)) * alpha);
            for (std::size_t a = 0; a < Pm.size(); ++a) {
                for (std::size_t b = 0; b < Pn.size(); ++b) {
                    const double coeff =
                        scale * Pm[a] * Pn[b] / std::pow(s, static_cast<double>(a + b));
                    if (coeff == 0.0) continue;
                    const Quaternion q = unit * coeff;
                    planes[0][a][b] += q.q0;
                    planes[1][a][b] += q.q1;
                    planes[2][a][b] += q.q2;
                    planes[3][a][b] += q.q3;
                }
            }
        }
    }
    return {std::move(planes), 1.0 / alpha};
}

}  // namespace qft
