#include "qft/fixtures.hpp"

#include <random>
#include <stdexcept>

namespace qft::fixtures {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

[[noreturn]] void unknown(const std::string& spec) {
    std::string msg = "unknown fixture '" + spec + "'; valid names:";
    for (const auto& n : names()) msg += " " + n;
    throw std::invalid_argument(msg);
}

}  // namespace

QSignal noise_signal(const GridSpec& grid, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    QSignal f(grid);
    for (Quaternion& q : f.samples()) {
        // evaluation order of the four draws is pinned
        const double a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
        q = {a, b, c, d};
    }
    return f;
}

QSignal Fixture::sample(const GridSpec& grid) const {
    if (analytic) return analytic->sample(grid);
    return sampler_(grid);
}

std::vector<std::string> names() {
    return {"gaussian", "delta", "polygauss:m,n,alpha", "noise:seed", "zero"};
}

bool is_fixture_name(const std::string& spec) {
    if (spec == "gaussian" || spec == "delta" || spec == "zero") return true;
    return spec.rfind("polygauss:", 0) == 0 || spec.rfind("noise:", 0) == 0;
}

Fixture make(const std::string& spec) {
    Fixture fx;
    fx.name = spec;
    if (spec == "gaussian") {
        fx.analytic = PolyGauss::gaussian(1.0);
        fx.default_grid = GridSpec::centered_square(64, 8.0);
        return fx;
    }
    if (spec == "zero") {
        fx.analytic = PolyGauss({{0.0}}, 1.0);
        fx.default_grid = GridSpec(32, 32, 1.0, 1.0);
        return fx;
    }
    if (spec == "delta") {
        fx.default_grid = GridSpec(16, 16, 1.0, 1.0);
        fx.sampler_ = [](const GridSpec& g) {
            QSignal f(g);
            f.at(g.center1(), g.center2()) = Quaternion(1.0 / (g.d1 * g.d2));
            return f;
        };
        return fx;
    }
    if (spec.rfind("polygauss:", 0) == 0) {
        const auto parts = split(spec.substr(10), ',');
        if (parts.size() != 3) {
            throw std::invalid_argument("polygauss fixture needs m,n,alpha, e.g. polygauss:1,0,1");
        }
        int m, n;
        double alpha;
        try {
            m = std::stoi(parts[0]);
            n = std::stoi(parts[1]);
            alpha = std::stod(parts[2]);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad polygauss fixture parameters in '" + spec + "'");
        }
        fx.analytic = PolyGauss::monomial(m, n, alpha);
        fx.default_grid = GridSpec::centered_square(64, 8.0);
        return fx;
    }
    if (spec.rfind("noise:", 0) == 0) {
        std::uint64_t seed;
        try {
            seed = std::stoull(spec.substr(6));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad noise fixture seed in '" + spec + "'");
        }
        fx.default_grid = GridSpec(32, 32, 1.0, 1.0);
        fx.sampler_ = [seed](const GridSpec& g) { return noise_signal(g, seed); };
        return fx;
    }
    unknown(spec);
}

}  // namespace qft::fixtures
