#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "qft/grid.hpp"
#include "qft/quaternion.hpp"

namespace qft {

/// Quaternion-valued samples f = f0 + i f1 + j f2 + k f3 on a centered grid.
/// Row-major storage: sample (m1, m2) lives at index m1 * n2 + m2.
class QSignal {
public:
    QSignal() = default;
    explicit QSignal(GridSpec grid);
    /// Throws std::invalid_argument if samples.size() != grid.size().
    QSignal(GridSpec grid, std::vector<Quaternion> samples);

    /// Samples a pointwise map (x1, x2) -> Quaternion onto the grid.
    static QSignal from_function(GridSpec grid,
                                 const std::function<Quaternion(double, double)>& fn);

    const GridSpec& grid() const { return grid_; }
    const std::vector<Quaternion>& samples() const { return samples_; }
    std::vector<Quaternion>& samples() { return samples_; }

    const Quaternion& at(int m1, int m2) const { return samples_[idx(m1, m2)]; }
    Quaternion& at(int m1, int m2) { return samples_[idx(m1, m2)]; }

    /// Real component array f_m, m in 0..3.
    std::vector<double> component(int m) const;
    /// Rebuilds f0 + i f1 + j f2 + k f3. Inverse of component().
    static QSignal from_components(GridSpec grid,
                                   const std::array<std::vector<double>, 4>& comps);

    std::size_t idx(int m1, int m2) const {
        return static_cast<std::size_t>(m1) * grid_.n2 + m2;
    }

private:
    GridSpec grid_;
    std::vector<Quaternion> samples_;
};

/// Two-sided QFT samples on the dual (frequency) grid.
///
/// By default the four component spectra F{f_m} are retained; the module
/// norm ||F{f}||_Q, which every certificate needs, cannot be recovered from
/// the combined samples alone.
class QSpectrum {
public:
    using ComponentSpectra = std::array<std::vector<Quaternion>, 4>;

    QSpectrum() = default;
    QSpectrum(GridSpec freq_grid, std::vector<Quaternion> samples);
    QSpectrum(GridSpec freq_grid, std::vector<Quaternion> samples,
              ComponentSpectra components);

    /// Frequency grid (spacing 1/(n_k d_k) of the originating signal grid).
    const GridSpec& grid() const { return grid_; }
    const std::vector<Quaternion>& samples() const { return samples_; }
    const Quaternion& at(int u1, int u2) const { return samples_[idx(u1, u2)]; }

    bool has_components() const { return components_.has_value(); }
    /// Throws std::logic_error if the spectrum was built without components.
    const ComponentSpectra& components() const;

    std::size_t idx(int u1, int u2) const {
        return static_cast<std::size_t>(u1) * grid_.n2 + u2;
    }

private:
    GridSpec grid_;
    std::vector<Quaternion> samples_;
    std::optional<ComponentSpectra> components_;
};

/// Riemann sum of |f(x)|_Q over the grid, weight d1*d2.
double l1_norm(const QSignal& f);

/// sqrt of the Riemann sum of |f(x)|_Q^2, weight d1*d2.
double l2_norm(const QSignal& f);

/// Pointwise module norm ||F{f}(y)||_Q = sqrt(sum_m |F{f_m}(y)|_Q^2).
///
/// Requires component spectra; throws std::logic_error telling the caller to
/// recompute the transform with components retained otherwise. Coincides with
/// the plain modulus |F{f}(y)|_Q only for real-valued f.
std::vector<double> module_norm(const QSpectrum& S);

/// L2 aggregate of module_norm over the frequency grid, weight dxi1*dxi2.
double module_norm_l2(const QSpectrum& S);

/// Pointwise quaternion modulus |F{f}(y)|_Q of the combined samples.
std::vector<double> modulus_map(const QSpectrum& S);

}  // namespace qft
