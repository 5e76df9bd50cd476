#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qft/fixtures.hpp"
#include "qft/signal.hpp"
#include "qft/transform.hpp"

using qft::GridSpec;
using qft::QSignal;
using qft::Quaternion;

TEST_CASE("grid geometry") {
    GridSpec g(8, 4, 0.5, 0.25);
    CHECK(g.x1(4) == 0.0);  // even count puts 0 on the grid at n/2
    CHECK(g.x2(2) == 0.0);
    CHECK(g.x1(0) == -2.0);
    CHECK(g.extent1() == doctest::Approx(4.0));
    const GridSpec dual = g.dual();
    CHECK(dual.d1 == doctest::Approx(1.0 / 4.0));
    CHECK(dual.d2 == doctest::Approx(1.0));
    CHECK_THROWS_AS(GridSpec(0, 4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(4, 4, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(QSignal(GridSpec(2, 2, 1, 1), std::vector<Quaternion>(3)),
                    std::invalid_argument);
}

TEST_CASE("l1 norm examples") {
    // constant 1 on a 4x4 grid with spacing 0.5 integrates to the area
    QSignal ones(GridSpec(4, 4, 0.5, 0.5));
    for (auto& q : ones.samples()) q = Quaternion::one();
    CHECK(qft::l1_norm(ones) == doctest::Approx(4.0).epsilon(1e-15));

    QSignal zero(GridSpec(4, 4, 0.5, 0.5));
    CHECK(qft::l1_norm(zero) == 0.0);

    // int e^{-pi |x|^2} dx = 1
    const GridSpec g = GridSpec::centered_square(128, 4.0);
    const QSignal gauss = QSignal::from_function(g, [](double x1, double x2) {
        return Quaternion(std::exp(-M_PI * (x1 * x1 + x2 * x2)));
    });
    CHECK(std::abs(qft::l1_norm(gauss) - 1.0) < 1e-6);
}

TEST_CASE("l2 norm examples") {
    QSignal zero(GridSpec(4, 4, 0.5, 0.5));
    CHECK(qft::l2_norm(zero) == 0.0);

    QSignal ci(GridSpec(2, 2, 1.0, 1.0));
    for (auto& q : ci.samples()) q = Quaternion::i();
    CHECK(qft::l2_norm(ci) == doctest::Approx(2.0).epsilon(1e-15));

    // int e^{-2 pi |x|^2} dx = 1/2
    const GridSpec g = GridSpec::centered_square(128, 4.0);
    const QSignal gauss = QSignal::from_function(g, [](double x1, double x2) {
        return Quaternion(std::exp(-M_PI * (x1 * x1 + x2 * x2)));
    });
    CHECK(std::abs(qft::l2_norm(gauss) - std::pow(2.0, -0.5)) < 1e-6);
}

TEST_CASE("component split and recombine is the identity") {
    const GridSpec g(8, 6, 0.7, 0.3);
    const QSignal f = qft::fixtures::noise_signal(g, 7);
    std::array<std::vector<double>, 4> comps;
    for (int m = 0; m < 4; ++m) comps[m] = f.component(m);
    const QSignal back = QSignal::from_components(g, comps);
    for (std::size_t s = 0; s < f.samples().size(); ++s) {
        CHECK(back.samples()[s] == f.samples()[s]);
    }
}

TEST_CASE("|f_m| <= |f|_Q pointwise") {
    const QSignal f = qft::fixtures::noise_signal(GridSpec(8, 8, 1, 1), 8);
    for (int m = 0; m < 4; ++m) {
        const auto comp = f.component(m);
        for (std::size_t s = 0; s < comp.size(); ++s) {
            CHECK(std::abs(comp[s]) <= qft::modulus(f.samples()[s]) + 1e-15);
        }
    }
}

TEST_CASE("Pythagorean split of the l2 norm") {
    const GridSpec g(16, 16, 0.4, 0.4);
    const QSignal f = qft::fixtures::noise_signal(g, 9);
    double sum_sq = 0.0;
    for (int m = 0; m < 4; ++m) {
        QSignal fm(g);
        const auto comp = f.component(m);
        for (std::size_t s = 0; s < comp.size(); ++s) fm.samples()[s] = Quaternion(comp[s]);
        sum_sq += qft::l2_norm(fm) * qft::l2_norm(fm);
    }
    const double whole = qft::l2_norm(f) * qft::l2_norm(f);
    CHECK(std::abs(whole - sum_sq) <= 1e-10 * whole);
}

TEST_CASE("module norm of a real signal equals the pointwise modulus") {
    const GridSpec g(16, 16, 0.5, 0.5);
    QSignal f(g);
    const QSignal noise = qft::fixtures::noise_signal(g, 10);
    for (std::size_t s = 0; s < f.samples().size(); ++s) {
        f.samples()[s] = Quaternion(noise.samples()[s].q0);
    }
    const qft::QSpectrum S = qft::qft_fast(f);
    const auto mod_norm = qft::module_norm(S);
    const auto mods = qft::modulus_map(S);
    for (std::size_t s = 0; s < mods.size(); ++s) {
        CHECK(std::abs(mod_norm[s] - mods[s]) <= 1e-10 * (1.0 + mods[s]));
    }
}

TEST_CASE("module norm of f = i g (g real) equals |F{g}|_Q") {
    const GridSpec g(12, 12, 0.5, 0.5);
    QSignal base(g), ig(g);
    const QSignal noise = qft::fixtures::noise_signal(g, 11);
    for (std::size_t s = 0; s < base.samples().size(); ++s) {
        const double v = noise.samples()[s].q0;
        base.samples()[s] = Quaternion(v);
        ig.samples()[s] = Quaternion{0, v, 0, 0};
    }
    const auto norm_ig = qft::module_norm(qft::qft_fast(ig));
    const auto mod_g = qft::modulus_map(qft::qft_fast(base));
    for (std::size_t s = 0; s < norm_ig.size(); ++s) {
        CHECK(std::abs(norm_ig[s] - mod_g[s]) <= 1e-12 * (1.0 + mod_g[s]));
    }
}

TEST_CASE("module norm of the zero signal vanishes") {
    const auto S = qft::qft_fast(QSignal(GridSpec(4, 4, 1, 1)));
    for (double v : qft::module_norm(S)) CHECK(v == 0.0);
}

TEST_CASE("module norm without components is a state error") {
    const qft::QSpectrum bare(GridSpec(4, 4, 1, 1),
                              std::vector<Quaternion>(16, Quaternion::one()));
    CHECK_FALSE(bare.has_components());
    CHECK_THROWS_AS(qft::module_norm(bare), std::logic_error);
    CHECK_THROWS_WITH_AS(qft::module_norm(bare),
                         doctest::Contains("recompute the transform"), std::logic_error);
}

TEST_CASE("spectrum samples recombine from the component spectra") {
    const GridSpec g(10, 8, 0.6, 0.8);
    const QSignal f = qft::fixtures::noise_signal(g, 12);
    const qft::QSpectrum S = qft::qft_direct(f);
    const auto& T = S.components();
    const Quaternion qi = Quaternion::i(), qj = Quaternion::j();
    for (std::size_t s = 0; s < S.samples().size(); ++s) {
        const Quaternion rec = T[0][s] + qi * T[1][s] + T[2][s] * qj + qi * T[3][s] * qj;
        CHECK(qft::modulus(S.samples()[s] - rec) <= 1e-12);
    }
}
