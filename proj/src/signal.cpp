#include "qft/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace qft {

QSignal::QSignal(GridSpec grid)
    : grid_(grid), samples_(static_cast<std::size_t>(grid.size())) {}

QSignal::QSignal(GridSpec grid, std::vector<Quaternion> samples)
    : grid_(grid), samples_(std::move(samples)) {
    if (samples_.size() != static_cast<std::size_t>(grid_.size())) {
        throw std::invalid_argument("sample count does not match grid dimensions");
    }
}

QSignal QSignal::from_function(GridSpec grid,
                               const std::function<Quaternion(double, double)>& fn) {
    QSignal f(grid);
    for (int m1 = 0; m1 < grid.n1; ++m1) {
        const double x1 = grid.x1(m1);
        for (int m2 = 0; m2 < grid.n2; ++m2) {
            f.at(m1, m2) = fn(x1, grid.x2(m2));
        }
    }
    return f;
}

std::vector<double> QSignal::component(int m) const {
    if (m < 0 || m > 3) throw std::invalid_argument("component index must be 0..3");
    std::vector<double> out(samples_.size());
    for (std::size_t s = 0; s < samples_.size(); ++s) {
        const Quaternion& q = samples_[s];
        out[s] = m == 0 ? q.q0 : m == 1 ? q.q1 : m == 2 ? q.q2 : q.q3;
    }
    return out;
}

QSignal QSignal::from_components(GridSpec grid,
                                 const std::array<std::vector<double>, 4>& comps) {
    const auto n = static_cast<std::size_t>(grid.size());
    for (const auto& c : comps) {
        if (c.size() != n) throw std::invalid_argument("component size does not match grid");
    }
    std::vector<Quaternion> samples(n);
    for (std::size_t s = 0; s < n; ++s) {
        samples[s] = {comps[0][s], comps[1][s], comps[2][s], comps[3][s]};
    }
    return {grid, std::move(samples)};
}

QSpectrum::QSpectrum(GridSpec freq_grid, std::vector<Quaternion> samples)
    : grid_(freq_grid), samples_(std::move(samples)) {
    if (samples_.size() != static_cast<std::size_t>(grid_.size())) {
        throw std::invalid_argument("spectrum sample count does not match grid");
    }
}

QSpectrum::QSpectrum(GridSpec freq_grid, std::vector<Quaternion> samples,
                     ComponentSpectra components)
    : QSpectrum(freq_grid, std::move(samples)) {
    for (const auto& c : components) {
        if (c.size() != samples_.size()) {
            throw std::invalid_argument("component spectrum size does not match grid");
        }
    }
    components_ = std::move(components);
}

const QSpectrum::ComponentSpectra& QSpectrum::components() const {
    if (!components_) {
        throw std::logic_error(
            "component spectra unavailable: recompute the transform with components retained "
            "(qft_fast/qft_direct keep them; spectra loaded from files do not)");
    }
    return *components_;
}

double l1_norm(const QSignal& f) {
    double acc = 0.0;
    for (const Quaternion& q : f.samples()) acc += modulus(q);
    return acc * f.grid().d1 * f.grid().d2;
}

double l2_norm(const QSignal& f) {
    double acc = 0.0;
    for (const Quaternion& q : f.samples()) acc += modulus_sq(q);
    return std::sqrt(acc * f.grid().d1 * f.grid().d2);
}

std::vector<double> module_norm(const QSpectrum& S) {
    const auto& comps = S.components();
    std::vector<double> out(S.samples().size());
    for (std::size_t s = 0; s < out.size(); ++s) {
        double acc = 0.0;
        for (int m = 0; m < 4; ++m) acc += modulus_sq(comps[m][s]);
        out[s] = std::sqrt(acc);
    }
    return out;
}

double module_norm_l2(const QSpectrum& S) {
    const auto& comps = S.components();
    double acc = 0.0;
    for (std::size_t s = 0; s < S.samples().size(); ++s) {
        for (int m = 0; m < 4; ++m) acc += modulus_sq(comps[m][s]);
    }
    return std::sqrt(acc * S.grid().d1 * S.grid().d2);
}

std::vector<double> modulus_map(const QSpectrum& S) {
    std::vector<double> out(S.samples().size());
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = modulus(S.samples()[s]);
    return out;
}

}  // namespace qft
