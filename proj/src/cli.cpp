#include "qft/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "qft/fixtures.hpp"
#include "qft/io.hpp"
#include "qft/polygauss.hpp"
#include "qft/transform.hpp"
#include "qft/uncertainty.hpp"

namespace qft::cli {

namespace {

namespace unc = qft::uncertainty;

struct GridOverride {
    std::optional<std::pair<int, int>> counts;
    std::optional<std::pair<double, double>> spacings;
};

std::pair<double, double> parse_pair_d(const std::string& text) {
    const auto at = text.find(',');
    if (at == std::string::npos) throw CLI::ValidationError("expected two comma-separated values");
    return {std::stod(text.substr(0, at)), std::stod(text.substr(at + 1))};
}

std::pair<int, int> parse_pair_i(const std::string& text) {
    const auto d = parse_pair_d(text);
    return {static_cast<int>(d.first), static_cast<int>(d.second)};
}

GridSpec apply_override(GridSpec base, const GridOverride& ov) {
    if (ov.counts) {
        base.n1 = ov.counts->first;
        base.n2 = ov.counts->second;
    }
    if (ov.spacings) {
        base.d1 = ov.spacings->first;
        base.d2 = ov.spacings->second;
    }
    return GridSpec(base.n1, base.n2, base.d1, base.d2);  // revalidate
}

[[noreturn]] void bad_input(const std::string& input) {
    std::string msg = "input '" + input + "' is neither a readable file nor a builtin fixture";
    msg += "; fixtures:";
    for (const auto& n : fixtures::names()) msg += " " + n;
    throw std::invalid_argument(msg);
}

QSignal resolve_signal(const std::string& input, const GridOverride& ov) {
    if (fixtures::is_fixture_name(input)) {
        const fixtures::Fixture fx = fixtures::make(input);
        return fx.sample(apply_override(fx.default_grid, ov));
    }
    if (!std::ifstream(input).good()) bad_input(input);
    return io::load_signal(input);
}

// --- check-lemma -----------------------------------------------------------

struct LemmaResult {
    double error = 0.0;
    double tolerance = 0.0;
};

double max_pointwise_error(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
    double worst = 0.0;
    for (std::size_t s = 0; s < a.size(); ++s) worst = std::max(worst, modulus(a[s] - b[s]));
    return worst;
}

LemmaResult lemma_plancherel() {
    const QSignal f = fixtures::noise_signal(GridSpec(32, 32, 0.5, 0.5), 42);
    const QSpectrum S = qft_fast(f);
    const double lhs = l2_norm(f);
    return {std::abs(lhs - module_norm_l2(S)) / lhs, 1e-9};
}

LemmaResult lemma_inverse() {
    const QSignal f = fixtures::noise_signal(GridSpec(32, 32, 0.5, 0.5), 43);
    const QSignal back = qft_inverse(qft_fast(f));
    double num = 0.0, den = 0.0;
    for (std::size_t s = 0; s < f.samples().size(); ++s) {
        num += modulus_sq(back.samples()[s] - f.samples()[s]);
        den += modulus_sq(f.samples()[s]);
    }
    return {std::sqrt(num / den), 1e-9};
}

LemmaResult lemma_convolution() {
    // real f, centered Gaussian g (axis-even, the class the identity covers)
    const GridSpec g(32, 32, 0.35, 0.35);
    QSignal f(g);
    {
        const QSignal noise = fixtures::noise_signal(g, 44);
        for (std::size_t s = 0; s < f.samples().size(); ++s) {
            f.samples()[s] = Quaternion(noise.samples()[s].q0);
        }
    }
    const QSignal gauss = PolyGauss::gaussian(1.0).sample(g);
    const QSignal conv = convolve(f, gauss);
    const QSpectrum lhs = qft_fast(conv);
    const QSpectrum Ff = qft_fast(f);
    const QSpectrum Fg = qft_fast(gauss);
    double worst = 0.0;
    for (std::size_t s = 0; s < lhs.samples().size(); ++s) {
        worst = std::max(worst, modulus(lhs.samples()[s] - Ff.samples()[s] * Fg.samples()[s]));
    }
    return {worst, 1e-8};
}

LemmaResult lemma_gaussian() {
    const GridSpec g = GridSpec::centered_square(64, 6.0);
    const QSpectrum S = qft_fast(PolyGauss::gaussian(1.0).sample(g));
    const GridSpec dual = S.grid();
    double worst = 0.0;
    for (int u1 = 0; u1 < dual.n1; ++u1) {
        for (int u2 = 0; u2 < dual.n2; ++u2) {
            const double xi1 = dual.x1(u1), xi2 = dual.x2(u2);
            const Quaternion expect(std::exp(-M_PI * (xi1 * xi1 + xi2 * xi2)));
            worst = std::max(worst, modulus(S.at(u1, u2) - expect));
        }
    }
    return {worst, 1e-6};
}

LemmaResult lemma_module_law() {
    const GridSpec g(16, 16, 0.5, 0.5);
    QSignal f(g);
    {
        const QSignal noise = fixtures::noise_signal(g, 45);
        for (std::size_t s = 0; s < f.samples().size(); ++s) {
            f.samples()[s] = Quaternion(noise.samples()[s].q0);
        }
    }
    QSignal ifj(g);
    for (std::size_t s = 0; s < f.samples().size(); ++s) {
        ifj.samples()[s] = Quaternion::i() * f.samples()[s] * Quaternion::j();
    }
    const QSpectrum lhs = qft_fast(ifj);
    const QSpectrum Ff = qft_fast(f);
    double worst = 0.0;
    for (std::size_t s = 0; s < lhs.samples().size(); ++s) {
        const Quaternion rhs = Quaternion::i() * Ff.samples()[s] * Quaternion::j();
        worst = std::max(worst, modulus(lhs.samples()[s] - rhs));
    }
    return {worst, 1e-10};
}

LemmaResult lemma_polygauss() {
    const GridSpec g = GridSpec::centered_square(64, 4.0);
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.0}) {
        const PolyGauss f = PolyGauss::monomial(1, 1, alpha);
        const QSpectrum numeric = qft_fast(f.sample(g));
        const QPolyGauss closed = qft_polygauss(f);
        const QSpectrum expect = closed.sample_spectrum(numeric.grid());
        worst = std::max(worst, max_pointwise_error(numeric.samples(), expect.samples()));
    }
    return {worst, 1e-5};
}

LemmaResult lemma_dilation() {
    // wide enough that both the a=2 narrow signal (wide spectrum) and the
    // a=0.5 wide signal stay below truncation/aliasing ~1e-8
    const GridSpec g = GridSpec::centered_square(96, 4.8);
    double worst = 0.0;
    const PolyGauss f({{0.0, 0.0, 0.5}, {1.0}}, 1.0);  // x1 + 0.5 x2^2
    for (double a : {2.0, 0.5}) {
        const PolyGauss fa = f.dilated(a);
        const QSpectrum lhs = qft_fast(fa.sample(g));
        const QPolyGauss Ff = qft_polygauss(f);
        const GridSpec dual = lhs.grid();
        for (int u1 = 0; u1 < dual.n1; ++u1) {
            for (int u2 = 0; u2 < dual.n2; ++u2) {
                const Quaternion expect =
                    Ff.eval(dual.x1(u1) / a, dual.x2(u2) / a) * (1.0 / (a * a));
                worst = std::max(worst, modulus(lhs.at(u1, u2) - expect));
            }
        }
    }
    return {worst, 1e-5};
}

int run_lemma(const std::string& name, std::optional<double> tolerance, std::ostream& out,
              std::ostream& err) {
    using Runner = std::function<LemmaResult()>;
    const std::pair<const char*, Runner> lemmas[] = {
        {"plancherel", lemma_plancherel}, {"inverse", lemma_inverse},
        {"convolution", lemma_convolution}, {"gaussian", lemma_gaussian},
        {"module-law", lemma_module_law}, {"polygauss", lemma_polygauss},
        {"dilation", lemma_dilation},
    };
    for (const auto& [key, runner] : lemmas) {
        if (name != key) continue;
        LemmaResult res = runner();
        if (tolerance) res.tolerance = *tolerance;
        const bool pass = res.error <= res.tolerance;
        out << (pass ? "PASS" : "FAIL") << " check-lemma " << name << ": error=" << res.error
            << " tolerance=" << res.tolerance << "\n";
        return pass ? 0 : 1;
    }
    err << "unknown lemma '" << name
        << "'; valid names: plancherel inverse convolution gaussian module-law polygauss "
           "dilation\n";
    return 2;
}

// --- certify ----------------------------------------------------------------

int run_certify(const std::string& theorem, const std::string& input, const GridOverride& ov,
                double d, double alpha, double beta, double p, double q,
                const std::string& output, bool pointwise, std::ostream& out,
                std::ostream& err) {
    unc::Subject subject = [&] {
        if (fixtures::is_fixture_name(input)) {
            const fixtures::Fixture fx = fixtures::make(input);
            if (fx.analytic && !ov.counts && !ov.spacings) {
                return unc::Subject::analytic(*fx.analytic);
            }
            return unc::Subject::sampled(fx.sample(apply_override(fx.default_grid, ov)));
        }
        if (!std::ifstream(input).good()) bad_input(input);
        return unc::Subject::sampled(io::load_signal(input));
    }();

    unc::CertificateReport rep;
    if (theorem == "beurling") {
        rep = unc::beurling_certify(subject, {d, pointwise});
    } else if (theorem == "hardy") {
        rep = unc::hardy_check(subject, {d, alpha, beta});
    } else if (theorem == "gelfand-shilov") {
        rep = unc::gelfand_shilov_check(subject,
                                        {static_cast<int>(std::lround(d)), alpha, beta, p, q});
    } else if (theorem == "cowling-price") {
        rep = unc::cowling_price_check(subject, {d, alpha, beta, p, q});
    } else {
        err << "unknown theorem '" << theorem
            << "'; valid names: beurling hardy gelfand-shilov cowling-price\n";
        return 2;
    }
    out << rep.to_text();
    if (!output.empty()) {
        std::ofstream os(output);
        if (!os) {
            err << "cannot open " << output << " for writing\n";
            return 2;
        }
        os << rep.to_key_values();
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"two-sided quaternion Fourier transform toolkit"};
    app.require_subcommand(1);

    std::string input, second_input, output, grid_text, spacing_text;
    std::string lemma_name, theorem_name;
    double d = 0.0, alpha = 1.0, beta = 1.0, p = 2.0, q = 2.0;
    std::optional<double> tolerance;
    bool pointwise = false;

    const auto add_grid_flags = [&](CLI::App* cmd) {
        cmd->add_option("--grid", grid_text, "sample counts n1,n2 (fixtures only)");
        cmd->add_option("--spacing", spacing_text, "sample spacings d1,d2 (fixtures only)");
    };

    CLI::App* transform = app.add_subcommand("transform", "two-sided QFT of a signal");
    transform->add_option("--input", input, "fixture name or signal file")->required();
    transform->add_option("--output", output, "spectrum file (.csv or binary)")->required();
    std::string probe_text;
    transform->add_option("--probe", probe_text,
                          "echo the spectrum value nearest to xi1,xi2 as a+bi+cj+dk");
    add_grid_flags(transform);

    CLI::App* inverse = app.add_subcommand("inverse", "inverse transform of a spectrum file");
    inverse->add_option("--input", input, "spectrum file")->required();
    inverse->add_option("--output", output, "signal file")->required();

    CLI::App* conv = app.add_subcommand("convolve", "circular convolution of two signals");
    conv->add_option("--input", input, "fixture name or signal file")->required();
    conv->add_option("--kernel", second_input, "fixture name or signal file")->required();
    conv->add_option("--output", output, "signal file")->required();
    add_grid_flags(conv);

    CLI::App* lemma = app.add_subcommand("check-lemma", "run a named transform property check");
    lemma->add_option("name", lemma_name,
                      "plancherel | inverse | convolution | gaussian | module-law | polygauss | "
                      "dilation")
        ->required();
    lemma->add_option("--tolerance", tolerance, "override the check tolerance");

    CLI::App* certify = app.add_subcommand("certify", "evaluate an uncertainty certificate");
    certify->add_option("theorem", theorem_name,
                        "beurling | hardy | gelfand-shilov | cowling-price")
        ->required();
    certify->add_option("--input", input, "fixture name or signal file")->required();
    certify->add_option("--d", d, "decay exponent d");
    certify->add_option("--alpha", alpha, "alpha parameter");
    certify->add_option("--beta", beta, "beta parameter");
    certify->add_option("--p", p, "L^p exponent");
    certify->add_option("--q", q, "conjugate exponent");
    certify->add_option("--output", output, "write machine-readable key=value report");
    certify->add_flag("--pointwise-norm", pointwise,
                      "use |F{f}|_Q instead of ||F{f}||_Q (Beurling only)");
    add_grid_flags(certify);

    CLI::App* exportc = app.add_subcommand("export", "write a |.|_Q magnitude CSV of a spectrum");
    exportc->add_option("--input", input, "spectrum file, or fixture to transform first")
        ->required();
    exportc->add_option("--output", output, "magnitude CSV path")->required();
    add_grid_flags(exportc);

    try {
        std::vector<const char*> argv;
        argv.push_back("qft");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    GridOverride ov;
    try {
        if (!grid_text.empty()) ov.counts = parse_pair_i(grid_text);
        if (!spacing_text.empty()) ov.spacings = parse_pair_d(spacing_text);

        if (transform->parsed()) {
            const QSignal f = resolve_signal(input, ov);
            const QSpectrum S = qft_fast(f);
            io::save_spectrum(S, output);
            out << "wrote spectrum " << output << " (" << S.grid().n1 << "x" << S.grid().n2
                << ")\n";
            if (!probe_text.empty()) {
                const auto [p1, p2] = parse_pair_d(probe_text);
                const GridSpec& fg = S.grid();
                const int u1 = std::clamp(
                    static_cast<int>(std::lround(p1 / fg.d1)) + fg.center1(), 0, fg.n1 - 1);
                const int u2 = std::clamp(
                    static_cast<int>(std::lround(p2 / fg.d2)) + fg.center2(), 0, fg.n2 - 1);
                out << "F(" << fg.x1(u1) << ", " << fg.x2(u2)
                    << ") = " << qft::to_string(S.at(u1, u2)) << "\n";
            }
            return 0;
        }
        if (inverse->parsed()) {
            const QSpectrum S = io::load_spectrum(input);
            const QSignal f = qft_inverse(S);
            io::save_signal(f, output);
            out << "wrote signal " << output << " (" << f.grid().n1 << "x" << f.grid().n2
                << ")\n";
            return 0;
        }
        if (conv->parsed()) {
            const QSignal f = resolve_signal(input, ov);
            const QSignal g = resolve_signal(second_input, ov);
            const QSignal h = convolve(f, g);
            io::save_signal(h, output);
            out << "wrote signal " << output << "\n";
            return 0;
        }
        if (lemma->parsed()) {
            return run_lemma(lemma_name, tolerance, out, err);
        }
        if (certify->parsed()) {
            return run_certify(theorem_name, input, ov, d, alpha, beta, p, q, output, pointwise,
                               out, err);
        }
        if (exportc->parsed()) {
            QSpectrum S = [&] {
                if (fixtures::is_fixture_name(input)) {
                    return qft_fast(resolve_signal(input, ov));
                }
                return io::load_spectrum(input);
            }();
            io::save_magnitude_csv(S, output);
            out << "wrote magnitude map " << output << "\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace qft::cli
