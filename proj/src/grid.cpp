#include "qft/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qft {

GridSpec::GridSpec(int n1_, int n2_, double d1_, double d2_)
    : n1(n1_), n2(n2_), d1(d1_), d2(d2_) {
    if (n1 < 1 || n2 < 1) {
        throw std::invalid_argument("grid needs at least 1 sample per axis, got " +
                                    std::to_string(n1) + "x" + std::to_string(n2));
    }
    if (!(d1 > 0.0) || !(d2 > 0.0)) {
        throw std::invalid_argument("grid spacing must be positive");
    }
}

GridSpec GridSpec::centered_square(int n, double half_extent) {
    return {n, n, 2.0 * half_extent / n, 2.0 * half_extent / n};
}

bool GridSpec::almost_equal(const GridSpec& o, double rel_tol) const {
    return n1 == o.n1 && n2 == o.n2 &&
           std::abs(d1 - o.d1) <= rel_tol * std::abs(d1) &&
           std::abs(d2 - o.d2) <= rel_tol * std::abs(d2);
}

}  // namespace qft
