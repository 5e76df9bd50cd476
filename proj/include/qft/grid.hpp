#pragma once

#include <cstdint>

namespace qft {

/// A uniform 2D sampling grid centered at the origin.
///
/// Axis k has n_k samples with spacing d_k; sample m maps to the coordinate
/// (m - n_k/2) * d_k, so index n_k/2 sits exactly at 0 (for even n_k).
/// The dual grid has spacing 1/(n_k d_k) and the same sample counts.
struct GridSpec {
    int n1 = 0;
    int n2 = 0;
    double d1 = 0.0;
    double d2 = 0.0;

    GridSpec() = default;
    /// Throws std::invalid_argument unless n1, n2 >= 2 and d1, d2 > 0.
    GridSpec(int n1_, int n2_, double d1_, double d2_);

    /// Square grid spanning [-half_extent, half_extent) with n samples per axis.
    static GridSpec centered_square(int n, double half_extent);

    int center1() const { return n1 / 2; }
    int center2() const { return n2 / 2; }

    double x1(int m1) const { return (m1 - center1()) * d1; }
    double x2(int m2) const { return (m2 - center2()) * d2; }

    /// Total extent L_k = n_k * d_k per axis.
    double extent1() const { return n1 * d1; }
    double extent2() const { return n2 * d2; }

    std::int64_t size() const { return static_cast<std::int64_t>(n1) * n2; }

    /// Frequency grid of the two-sided transform: same counts, spacing 1/(n_k d_k).
    GridSpec dual() const { return {n1, n2, 1.0 / extent1(), 1.0 / extent2()}; }

    bool operator==(const GridSpec&) const = default;
    bool almost_equal(const GridSpec& o, double rel_tol = 1e-12) const;
};

}  // namespace qft
