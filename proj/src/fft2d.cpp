#include "fft2d.hpp"

#include <fftw3.h>

#include <complex>
#include <mutex>

namespace qft::detail {

namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex plan_mutex;

}  // namespace

void centered_complex_fft(const std::vector<double>& comp, const GridSpec& g,
                          int sign, double measure, std::vector<double>& re,
                          std::vector<double>& im) {
    const int n1 = g.n1, n2 = g.n2;
    const int c1 = g.center1(), c2 = g.center2();
    const auto size = static_cast<std::size_t>(g.size());

    std::vector<std::complex<double>> in(size), out(size);
    // Circular shift so the x = 0 sample leads; the FFT then evaluates the
    // centered kernel exactly (the shift is an index permutation, no phases).
    for (int m1 = 0; m1 < n1; ++m1) {
        const int s1 = (m1 + c1) % n1;
        for (int m2 = 0; m2 < n2; ++m2) {
            const int s2 = (m2 + c2) % n2;
            in[static_cast<std::size_t>(m1) * n2 + m2] =
                comp[static_cast<std::size_t>(s1) * n2 + s2];
        }
    }

    {
        std::scoped_lock lock(plan_mutex);
        fftw_plan plan = fftw_plan_dft_2d(
            n1, n2, reinterpret_cast<fftw_complex*>(in.data()),
            reinterpret_cast<fftw_complex*>(out.data()),
            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }

    re.resize(size);
    im.resize(size);
    // Shift frequency index 0 back to the centered position.
    for (int u1 = 0; u1 < n1; ++u1) {
        const int s1 = (u1 - c1 + n1) % n1;
        for (int u2 = 0; u2 < n2; ++u2) {
            const int s2 = (u2 - c2 + n2) % n2;
            const std::complex<double> v = out[static_cast<std::size_t>(s1) * n2 + s2];
            const std::size_t at = static_cast<std::size_t>(u1) * n2 + u2;
            re[at] = v.real() * measure;
            im[at] = v.imag() * measure;
        }
    }
}

std::vector<Quaternion> component_channels(const std::vector<double>& comp,
                                           const GridSpec& g, int sign,
                                           double measure) {
    const int n1 = g.n1, n2 = g.n2;
    const int c2 = g.center2();

    std::vector<double> re, im;
    centered_complex_fft(comp, g, sign, measure, re, im);

    // The complex transform carries cos(a+b) and sin(a+b) of the two axis
    // angles; pairing each frequency with its xi2-negated partner separates
    // the four cos/sin products. The FFT's imaginary part already has the
    // kernel sign folded in, so the channel assembly is direction-free.
    std::vector<Quaternion> T(static_cast<std::size_t>(g.size()));
    for (int u1 = 0; u1 < n1; ++u1) {
        for (int u2 = 0; u2 < n2; ++u2) {
            const int u2n = ((2 * c2 - u2) % n2 + n2) % n2;
            const std::size_t at = static_cast<std::size_t>(u1) * n2 + u2;
            const std::size_t atn = static_cast<std::size_t>(u1) * n2 + u2n;
            const double cc = 0.5 * (re[at] + re[atn]);
            const double ss = 0.5 * (re[atn] - re[at]);
            const double signed_sc = 0.5 * (im[at] + im[atn]);
            const double signed_cs = 0.5 * (im[at] - im[atn]);
            T[at] = {cc, signed_sc, signed_cs, ss};
        }
    }
    return T;
}

}  // namespace qft::detail
