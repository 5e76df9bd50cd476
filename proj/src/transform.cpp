#include "qft/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "fft2d.hpp"
#include "parallel.hpp"

namespace qft {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// cos/sin tables of sign * 2 pi (u - c)(m - c) / n, u-major. On the centered
// grids the kernel phase xi(u) * x(m) reduces to (u-c)(m-c)/n exactly.
struct AxisTables {
    int n = 0;
    std::vector<double> c, s;

    AxisTables(int n_, int sign) : n(n_), c(static_cast<std::size_t>(n_) * n_),
                                   s(static_cast<std::size_t>(n_) * n_) {
        const int half = n / 2;
        for (int u = 0; u < n; ++u) {
            for (int m = 0; m < n; ++m) {
                const double angle =
                    sign * kTwoPi * static_cast<double>(u - half) * (m - half) / n;
                c[static_cast<std::size_t>(u) * n + m] = std::cos(angle);
                s[static_cast<std::size_t>(u) * n + m] = std::sin(angle);
            }
        }
    }
};

struct DirectResult {
    std::vector<Quaternion> samples;
    QSpectrum::ComponentSpectra components;
};

// Shared direct evaluator for the forward and inverse kernels. Sums the
// sandwich e^{sign i th1} q e^{sign j th2} per output point, and the per
// component channel quaternions from the same kernel products. A signal with
// a single nonzero component is summed once: its sandwich equals its channel
// sum term by term.
DirectResult two_sided_direct(const std::vector<Quaternion>& in, const GridSpec& in_grid,
                              int sign, double measure) {
    const int n1 = in_grid.n1, n2 = in_grid.n2;
    const AxisTables t1(n1, sign), t2(n2, sign);

    bool nonzero[4] = {false, false, false, false};
    for (const Quaternion& q : in) {
        nonzero[0] |= q.q0 != 0.0;
        nonzero[1] |= q.q1 != 0.0;
        nonzero[2] |= q.q2 != 0.0;
        nonzero[3] |= q.q3 != 0.0;
    }
    int live = 0;
    for (bool b : nonzero) live += b ? 1 : 0;
    const bool pure_scalar = live == 1 && nonzero[0];

    DirectResult res;
    res.samples.resize(in.size());
    for (int m = 0; m < 4; ++m) res.components[m].assign(in.size(), Quaternion{});

    detail::parallel_for(0, n1, [&](int u1) {
        const double* c1row = &t1.c[static_cast<std::size_t>(u1) * n1];
        const double* s1row = &t1.s[static_cast<std::size_t>(u1) * n1];
        for (int u2 = 0; u2 < n2; ++u2) {
            const double* c2row = &t2.c[static_cast<std::size_t>(u2) * n2];
            const double* s2row = &t2.s[static_cast<std::size_t>(u2) * n2];
            Quaternion sand{};
            Quaternion chan[4] = {};
            for (int m1 = 0; m1 < n1; ++m1) {
                const double c1 = c1row[m1], s1 = s1row[m1];
                const Quaternion* row = &in[static_cast<std::size_t>(m1) * n2];
                for (int m2 = 0; m2 < n2; ++m2) {
                    const double kcc = c1 * c2row[m2];
                    const double ksc = s1 * c2row[m2];
                    const double kcs = c1 * s2row[m2];
                    const double kss = s1 * s2row[m2];
                    const Quaternion& q = row[m2];
                    if (pure_scalar) {
                        chan[0].q0 += kcc * q.q0;
                        chan[0].q1 += ksc * q.q0;
                        chan[0].q2 += kcs * q.q0;
                        chan[0].q3 += kss * q.q0;
                        continue;
                    }
                    // e^{i th1} q e^{j th2} expanded over the kernel products
                    sand.q0 += kcc * q.q0 - ksc * q.q1 - kcs * q.q2 + kss * q.q3;
                    sand.q1 += kcc * q.q1 + ksc * q.q0 - kcs * q.q3 - kss * q.q2;
                    sand.q2 += kcc * q.q2 - ksc * q.q3 + kcs * q.q0 - kss * q.q1;
                    sand.q3 += kcc * q.q3 + ksc * q.q2 + kcs * q.q1 + kss * q.q0;
                    if (nonzero[0]) {
                        chan[0].q0 += kcc * q.q0; chan[0].q1 += ksc * q.q0;
                        chan[0].q2 += kcs * q.q0; chan[0].q3 += kss * q.q0;
                    }
                    if (nonzero[1]) {
                        chan[1].q0 += kcc * q.q1; chan[1].q1 += ksc * q.q1;
                        chan[1].q2 += kcs * q.q1; chan[1].q3 += kss * q.q1;
                    }
                    if (nonzero[2]) {
                        chan[2].q0 += kcc * q.q2; chan[2].q1 += ksc * q.q2;
                        chan[2].q2 += kcs * q.q2; chan[2].q3 += kss * q.q2;
                    }
                    if (nonzero[3]) {
                        chan[3].q0 += kcc * q.q3; chan[3].q1 += ksc * q.q3;
                        chan[3].q2 += kcs * q.q3; chan[3].q3 += kss * q.q3;
                    }
                }
            }
            const std::size_t at = static_cast<std::size_t>(u1) * n2 + u2;
            if (pure_scalar) {
                res.samples[at] = chan[0] * measure;
                res.components[0][at] = chan[0] * measure;
            } else {
                res.samples[at] = sand * measure;
                for (int m = 0; m < 4; ++m) res.components[m][at] = chan[m] * measure;
            }
        }
    });
    return res;
}

// f = f0 + i f1 + j f2 + k f3 recombines as T0 + i T1 + T2 j + i T3 j: the i
// of f1 commutes out left, the j of f2 slides right through e^{j th2}, and
// k = i j contributes both.
std::vector<Quaternion> recombine(const QSpectrum::ComponentSpectra& T) {
    const std::size_t n = T[0].size();
    std::vector<Quaternion> out(n);
    const Quaternion qi = Quaternion::i();
    const Quaternion qj = Quaternion::j();
    for (std::size_t s = 0; s < n; ++s) {
        out[s] = T[0][s] + qi * T[1][s] + T[2][s] * qj + qi * T[3][s] * qj;
    }
    return out;
}

}  // namespace

QSpectrum qft_direct(const QSignal& f) {
    const GridSpec& g = f.grid();
    DirectResult res = two_sided_direct(f.samples(), g, -1, g.d1 * g.d2);
    return {g.dual(), std::move(res.samples), std::move(res.components)};
}

QSpectrum qft_fast(const QSignal& f) {
    const GridSpec& g = f.grid();
    const double measure = g.d1 * g.d2;
    QSpectrum::ComponentSpectra T;
    for (int m = 0; m < 4; ++m) {
        T[m] = detail::component_channels(f.component(m), g, -1, measure);
    }
    std::vector<Quaternion> samples = recombine(T);
    return {g.dual(), std::move(samples), std::move(T)};
}

QSignal qft_inverse(const QSpectrum& S) {
    const GridSpec& gf = S.grid();
    const double measure = gf.d1 * gf.d2;
    QSpectrum::ComponentSpectra U;
    std::array<std::vector<double>, 4> comps;
    const auto& samples = S.samples();
    for (int m = 0; m < 4; ++m) {
        comps[m].resize(samples.size());
        for (std::size_t s = 0; s < samples.size(); ++s) {
            const Quaternion& q = samples[s];
            comps[m][s] = m == 0 ? q.q0 : m == 1 ? q.q1 : m == 2 ? q.q2 : q.q3;
        }
        U[m] = detail::component_channels(comps[m], gf, +1, measure);
    }
    return {gf.dual(), recombine(U)};
}

QSignal qft_inverse_direct(const QSpectrum& S) {
    const GridSpec& gf = S.grid();
    DirectResult res = two_sided_direct(S.samples(), gf, +1, gf.d1 * gf.d2);
    return {gf.dual(), std::move(res.samples)};
}

QSignal convolve(const QSignal& f, const QSignal& g) {
    if (!f.grid().almost_equal(g.grid())) {
        throw std::invalid_argument("convolve requires both signals on the same grid");
    }
    const GridSpec& gr = f.grid();
    const int n1 = gr.n1, n2 = gr.n2;
    const int c1 = gr.center1(), c2 = gr.center2();
    const double measure = gr.d1 * gr.d2;
    QSignal out(gr);
    detail::parallel_for(0, n1, [&](int m1) {
        for (int m2 = 0; m2 < n2; ++m2) {
            Quaternion acc{};
            for (int t1 = 0; t1 < n1; ++t1) {
                // x_m - x_t lands on the grid at index m - t + c, wrapped.
                const int v1 = ((m1 - t1 + c1) % n1 + n1) % n1;
                for (int t2 = 0; t2 < n2; ++t2) {
                    const int v2 = ((m2 - t2 + c2) % n2 + n2) % n2;
                    acc += f.at(t1, t2) * g.at(v1, v2);
                }
            }
            out.at(m1, m2) = acc * measure;
        }
    });
    return out;
}

QSignal dilate(const QSignal& f, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("dilation factor must be positive");
    const GridSpec& g = f.grid();
    QSignal out(g);
    for (int m1 = 0; m1 < g.n1; ++m1) {
        const double t1 = a * g.x1(m1) / g.d1;
        const long i1 = std::lround(t1) + g.center1();
        for (int m2 = 0; m2 < g.n2; ++m2) {
            const double t2 = a * g.x2(m2) / g.d2;
            const long i2 = std::lround(t2) + g.center2();
            if (i1 >= 0 && i1 < g.n1 && i2 >= 0 && i2 < g.n2) {
                out.at(m1, m2) = f.at(static_cast<int>(i1), static_cast<int>(i2));
            }
        }
    }
    return out;
}

}  // namespace qft
