#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qft/polygauss.hpp"
#include "qft/signal.hpp"

namespace qft::fixtures {

/// Built-in deterministic test signals addressable by name:
///
///   gaussian               e^{-pi |x|^2}
///   delta                  1/(d1 d2) at the origin sample
///   polygauss:m,n,alpha    x1^m x2^n e^{-pi alpha |x|^2}
///   noise:seed             uniform [-1,1]^4 quaternion noise, fixed seed
///   zero                   identically zero
///
/// gaussian/polygauss/zero carry a closed form and default to an analytic
/// certificate subject; all fixtures can be sampled onto a grid.
struct Fixture {
    std::string name;
    std::optional<PolyGauss> analytic;
    GridSpec default_grid;

    QSignal sample(const GridSpec& grid) const;
    QSignal sample() const { return sample(default_grid); }

private:
    friend Fixture make(const std::string& spec);
    // set for delta/noise
    std::function<QSignal(const GridSpec&)> sampler_;
};

/// Parses a fixture spec string. Throws std::invalid_argument listing the
/// valid names on an unknown fixture.
Fixture make(const std::string& spec);

/// True if the string names a builtin rather than a file path.
bool is_fixture_name(const std::string& spec);

std::vector<std::string> names();

/// Deterministic quaternion noise used across tests: uniform [-1,1] per
/// component from a fixed-seed mt19937_64.
QSignal noise_signal(const GridSpec& grid, std::uint64_t seed);

}  // namespace qft::fixtures
