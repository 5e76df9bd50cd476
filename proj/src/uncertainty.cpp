#include "qft/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qft/transform.hpp"

namespace qft::uncertainty {

namespace {

constexpr double kPi = M_PI;
constexpr double kInf = std::numeric_limits<double>::infinity();

double sq(double v) { return v * v; }

/// Largest integer strictly below bound.
int strict_floor(double bound) {
    return static_cast<int>(std::ceil(bound)) - 1;
}

bool conjugate_pair(double p, double q, double tol = 1e-12) {
    return p > 1.0 && q > 1.0 && std::abs(1.0 / p + 1.0 / q - 1.0) <= tol;
}

}  // namespace

void validate(const BeurlingParams& p) {
    if (!(p.d >= 0.0)) throw std::invalid_argument("Beurling d must be >= 0");
}

void validate(const HardyParams& p) {
    if (!(p.d >= 0.0)) throw std::invalid_argument("Hardy d must be >= 0");
    if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
        throw std::invalid_argument("Hardy alpha, beta must be > 0");
    }
}

void validate(const GelfandShilovParams& p) {
    if (p.d < 0) throw std::invalid_argument("Gelfand-Shilov d must be a nonnegative integer");
    if (!(p.alpha >= 1.0) || !(p.beta >= 1.0)) {
        throw std::invalid_argument("Gelfand-Shilov alpha, beta must be >= 1");
    }
    if (!conjugate_pair(p.p, p.q)) {
        throw std::invalid_argument("Gelfand-Shilov needs conjugate exponents 1/p + 1/q = 1");
    }
}

void validate(const CowlingPriceParams& p) {
    if (!(p.d >= 0.0)) throw std::invalid_argument("Cowling-Price d must be >= 0");
    if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
        throw std::invalid_argument("Cowling-Price alpha, beta must be > 0");
    }
    if (!conjugate_pair(p.p, p.q)) {
        throw std::invalid_argument("Cowling-Price needs conjugate exponents 1/p + 1/q = 1");
    }
}

bool young_bound_check(double x, double y, double alpha, double beta, double p,
                       double q, double slack) {
    const double lhs = alpha * beta * std::abs(x) * std::abs(y);
    const double rhs = std::pow(alpha, p) / p * std::pow(std::abs(x), p) +
                       std::pow(beta, q) / q * std::pow(std::abs(y), q);
    return rhs - lhs >= -slack;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::convergent: return "convergent";
        case Verdict::divergent: return "divergent";
        default: return "inconclusive";
    }
}

std::string to_string(const Conclusion& c) {
    switch (c.kind) {
        case ConclusionKind::zero: return "zero";
        case ConclusionKind::poly_times_gaussian: {
            std::ostringstream os;
            os << "poly_times_gaussian(max_degree=" << c.max_degree;
            if (c.gaussian_width) os << ", width=" << *c.gaussian_width;
            os << ")";
            return os.str();
        }
        default: return "unconstrained";
    }
}

LadderClassification classify_ladder(const std::vector<double>& partials, double flat_tol) {
    LadderClassification out;
    if (partials.size() < 2) {
        out.reason = "ladder too short";
        return out;
    }
    for (double v : partials) {
        if (!std::isfinite(v)) {
            out.verdict = Verdict::divergent;
            out.growth_exponent = kInf;
            out.reason = "partial value exceeds double range";
            return out;
        }
    }
    std::vector<double> inc;
    inc.push_back(partials.front());
    for (std::size_t k = 1; k < partials.size(); ++k) {
        inc.push_back(partials[k] - partials[k - 1]);
    }
    // flatness is judged against the value at that rung, not the final one;
    // a geometric blowup must not make its own early increments look flat
    const double last = inc[inc.size() - 1];
    const double prev = inc[inc.size() - 2];
    const double scale_last = std::max(std::abs(partials.back()), 1.0);
    const double scale_prev = std::max(std::abs(partials[partials.size() - 2]), 1.0);
    if (last <= flat_tol * scale_last) {
        out.verdict = Verdict::convergent;
        out.growth_exponent = -kInf;
        out.reason = "increments stabilized below tolerance";
        return out;
    }
    if (prev <= flat_tol * scale_prev) {
        out.reason = "increments vanished then resumed";
        return out;
    }
    const double ratio = last / prev;
    out.growth_exponent = std::log2(ratio);
    if (ratio < kRatioConvergent) {
        out.verdict = Verdict::convergent;
        out.reason = "increments decay geometrically";
    } else if (ratio > kRatioDivergent) {
        out.verdict = Verdict::divergent;
        out.reason = "increments do not decay";
    } else {
        out.reason = "increment ratio in the indeterminate band";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Subject

Subject Subject::analytic(PolyGauss f) {
    Subject s;
    s.analytic_spectrum_ = qft_polygauss(f);
    s.analytic_ = std::move(f);
    return s;
}

Subject Subject::sampled(QSignal f, QSpectrum S) {
    if (!S.has_components()) {
        throw std::logic_error(
            "certificates need component spectra; transform with qft_fast/qft_direct");
    }
    Subject s;
    s.signal_ = std::move(f);
    s.spectrum_ = std::move(S);
    return s;
}

Subject Subject::sampled(QSignal f) {
    QSpectrum S = qft_fast(f);
    return sampled(std::move(f), std::move(S));
}

namespace {

// ---------------------------------------------------------------------------
// Log-space magnitude access. All certificate sums run on log terms so the
// e^{2 pi |x||y|} weights cannot overflow against decaying magnitudes; a term
// genuinely past double range surfaces as +inf and classifies as divergent.

struct GridMagnitudes {
    std::vector<double> radius;
    std::vector<double> log_mag;  // -inf on zero samples
    double cell = 0.0;            // measure per sample
    double box_radius = 0.0;      // largest |x| on the grid
};

GridMagnitudes collect_signal(const QSignal& f) {
    GridMagnitudes g;
    const GridSpec& gr = f.grid();
    g.cell = gr.d1 * gr.d2;
    g.radius.reserve(f.samples().size());
    g.log_mag.reserve(f.samples().size());
    for (int m1 = 0; m1 < gr.n1; ++m1) {
        for (int m2 = 0; m2 < gr.n2; ++m2) {
            const double r = std::hypot(gr.x1(m1), gr.x2(m2));
            g.radius.push_back(r);
            g.log_mag.push_back(std::log(modulus(f.at(m1, m2))));
            g.box_radius = std::max(g.box_radius, r);
        }
    }
    return g;
}

// Sampled spectra are alias-contaminated near the Nyquist edge, and the
// e^{...|y|^2} certificate weights amplify exactly that region. Only the
// inner fraction of the dual box is trusted.
constexpr double kNyquistGuard = 0.75;

GridMagnitudes collect_spectrum(const QSpectrum& S, bool pointwise_modulus) {
    GridMagnitudes g;
    const GridSpec& gr = S.grid();
    g.cell = gr.d1 * gr.d2;
    const double guard =
        kNyquistGuard * std::min(gr.center1() * gr.d1, gr.center2() * gr.d2);
    const std::vector<double> mags = pointwise_modulus ? modulus_map(S) : module_norm(S);
    g.radius.reserve(mags.size());
    g.log_mag.reserve(mags.size());
    for (int u1 = 0; u1 < gr.n1; ++u1) {
        for (int u2 = 0; u2 < gr.n2; ++u2) {
            const double r = std::hypot(gr.x1(u1), gr.x2(u2));
            g.radius.push_back(r);
            const bool usable = r <= guard;
            g.log_mag.push_back(
                usable ? std::log(mags[static_cast<std::size_t>(u1) * gr.n2 + u2]) : -kInf);
            if (usable) g.box_radius = std::max(g.box_radius, r);
        }
    }
    return g;
}

// Angular profile of an analytic magnitude at one radius, envelope factored
// out: returns log( r * int_0^{2pi} |poly(r cos t, r sin t)|^power dt ).
template <typename PolyAbs>
double log_angular_profile(double r, const PolyAbs& poly_abs, int theta_nodes, double power) {
    double acc = 0.0;
    const double dt = 2.0 * kPi / theta_nodes;
    for (int t = 0; t < theta_nodes; ++t) {
        const double th = (t + 0.5) * dt;
        const double v = poly_abs(r * std::cos(th), r * std::sin(th));
        acc += power == 1.0 ? v : std::pow(v, power);
    }
    return std::log(r * acc * dt);
}

// Radial quadrature nodes (midpoint rule) out to R_max.
std::vector<double> radial_nodes(double r_max, double step) {
    const int n = std::max(1, static_cast<int>(std::ceil(r_max / step)));
    std::vector<double> r(n);
    for (int i = 0; i < n; ++i) r[i] = (i + 0.5) * step;
    return r;
}

struct AnalyticProfiles {
    std::vector<double> nodes;  // radii
    // log( r * int |f|^pf dtheta ) with the Gaussian envelope folded in, so a
    // radial integral of the pf-th power needs only the weight factor.
    std::vector<double> log_f;
    std::vector<double> log_F;  // same for ||F|| to the pF
    double step = 0.0;
};

double qpoly_modulus(const QPolyGauss& F, double y1, double y2) {
    // polynomial part only; real f makes the module norm the plain modulus
    double acc = 0.0;
    for (int ch = 0; ch < 4; ++ch) {
        double v = 0.0;
        const auto& plane = F.plane(ch);
        for (std::size_t m = plane.size(); m-- > 0;) {
            double row = 0.0;
            for (std::size_t n = plane[m].size(); n-- > 0;) row = row * y2 + plane[m][n];
            v = v * y1 + row;
        }
        acc += v * v;
    }
    return std::sqrt(acc);
}

AnalyticProfiles make_profiles(const PolyGauss& f, const QPolyGauss& F, double r_max,
                               const EvalOptions& opts, double power_f = 1.0,
                               double power_F = 1.0) {
    AnalyticProfiles prof;
    prof.step = opts.radial_step;
    prof.nodes = radial_nodes(r_max, opts.radial_step);
    prof.log_f.resize(prof.nodes.size());
    prof.log_F.resize(prof.nodes.size());
    const double af = f.alpha();
    const double aF = F.alpha();
    for (std::size_t i = 0; i < prof.nodes.size(); ++i) {
        const double r = prof.nodes[i];
        prof.log_f[i] =
            log_angular_profile(
                r, [&](double x1, double x2) { return std::abs(f.eval_polynomial(x1, x2)); },
                opts.theta_nodes, power_f) -
            power_f * kPi * af * r * r;
        prof.log_F[i] =
            log_angular_profile(
                r, [&](double y1, double y2) { return qpoly_modulus(F, y1, y2); },
                opts.theta_nodes, power_F) -
            power_F * kPi * aF * r * r;
    }
    return prof;
}

bool subject_is_zero(const Subject& s) {
    if (s.is_analytic()) return s.poly().is_zero();
    for (const Quaternion& q : s.signal().samples()) {
        if (modulus_sq(q) != 0.0) return false;
    }
    return true;
}

// Rungs past the grid box add no samples; trim them so the last increments
// stay meaningful, and finish at the box itself to use all available data.
std::vector<double> clamp_ladder(std::vector<double> ladder, double box_radius) {
    std::vector<double> out;
    for (double r : ladder) {
        if (r <= box_radius * (1.0 + 1e-12)) out.push_back(r);
    }
    if (out.size() < 2) {
        out = {box_radius / 2.0, box_radius};
    } else if (out.back() < box_radius * (1.0 - 1e-12)) {
        out.push_back(box_radius);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Beurling joint integral.

std::vector<double> beurling_partials_analytic(const Subject& s, const BeurlingParams& p,
                                               const std::vector<double>& ladder,
                                               const EvalOptions& opts) {
    const double r_max = ladder.back();
    const AnalyticProfiles prof = make_profiles(s.poly(), s.poly_spectrum(), r_max, opts);
    const double h2 = prof.step * prof.step;
    std::vector<double> partials;
    double acc = 0.0;
    std::size_t prev_count = 0;
    for (double R : ladder) {
        std::size_t count = 0;
        while (count < prof.nodes.size() && prof.nodes[count] <= R) ++count;
        // annulus: index pairs inside the new square, outside the previous one
        for (std::size_t i = 0; i < count; ++i) {
            const double base = prof.log_f[i];
            if (base == -kInf) continue;
            const std::size_t jstart = i < prev_count ? prev_count : 0;
            for (std::size_t j = jstart; j < count; ++j) {
                const double lb = prof.log_F[j];
                if (lb == -kInf) continue;
                const double expo = base + lb + 2.0 * kPi * prof.nodes[i] * prof.nodes[j] -
                                    p.d * std::log1p(prof.nodes[i] + prof.nodes[j]);
                acc += std::exp(expo) * h2;
            }
        }
        prev_count = count;
        partials.push_back(acc);
    }
    return partials;
}

std::vector<double> beurling_partials_sampled(const Subject& s, const BeurlingParams& p,
                                              const std::vector<double>& ladder) {
    const GridMagnitudes f = collect_signal(s.signal());
    const GridMagnitudes F = collect_spectrum(s.spectrum(), p.use_pointwise_modulus);
    const double cell4 = f.cell * F.cell;
    std::vector<double> partials;
    double prev_R = -1.0;
    double acc = 0.0;
    for (double R : ladder) {
        for (std::size_t i = 0; i < f.radius.size(); ++i) {
            if (f.radius[i] > R || f.log_mag[i] == -kInf) continue;
            const bool i_new = f.radius[i] > prev_R;
            for (std::size_t j = 0; j < F.radius.size(); ++j) {
                if (F.radius[j] > R || F.log_mag[j] == -kInf) continue;
                if (!i_new && F.radius[j] <= prev_R) continue;  // counted already
                const double expo = f.log_mag[i] + F.log_mag[j] +
                                    2.0 * kPi * f.radius[i] * F.radius[j] -
                                    p.d * std::log1p(f.radius[i] + F.radius[j]);
                acc += std::exp(expo) * cell4;
            }
        }
        prev_R = R;
        partials.push_back(acc);
    }
    return partials;
}

std::vector<double> beurling_partials(const Subject& s, const BeurlingParams& p,
                                      const std::vector<double>& ladder,
                                      const EvalOptions& opts) {
    if (s.is_analytic()) return beurling_partials_analytic(s, p, ladder, opts);
    return beurling_partials_sampled(s, p, ladder);
}

// ---------------------------------------------------------------------------
// Single radial integrals (Gelfand-Shilov, Cowling-Price). The weight
// exponent is a callable of the radius, applied to the log magnitude.

template <typename LogWeight>
std::vector<double> weighted_partials_analytic(const std::vector<double>& nodes,
                                               const std::vector<double>& log_prof,
                                               double step, const std::vector<double>& ladder,
                                               double power, const LogWeight& log_weight) {
    std::vector<double> partials;
    double acc = 0.0;
    std::size_t taken = 0;
    for (double R : ladder) {
        while (taken < nodes.size() && nodes[taken] <= R) {
            const double r = nodes[taken];
            if (log_prof[taken] != -kInf) {
                // the profile already carries |f|^power; only the radial
                // weight still needs raising
                acc += std::exp(log_prof[taken] + power * log_weight(r)) * step;
            }
            ++taken;
        }
        partials.push_back(acc);
    }
    return partials;
}

template <typename LogWeight>
std::vector<double> weighted_partials_sampled(const GridMagnitudes& g,
                                              const std::vector<double>& ladder, double power,
                                              const LogWeight& log_weight) {
    std::vector<double> partials;
    double acc = 0.0;
    double prev_R = -1.0;
    for (double R : ladder) {
        for (std::size_t i = 0; i < g.radius.size(); ++i) {
            if (g.radius[i] > R || g.radius[i] <= prev_R || g.log_mag[i] == -kInf) continue;
            acc += std::exp(power * (g.log_mag[i] + log_weight(g.radius[i]))) * g.cell;
        }
        prev_R = R;
        partials.push_back(acc);
    }
    return partials;
}

struct SidePartials {
    std::vector<double> ladder_f;  // signal-side radii
    std::vector<double> ladder_F;  // spectrum-side radii (dual grids are Nyquist-limited)
    std::vector<double> signal;
    std::vector<double> spectrum;
    std::string note;
};

// Evaluates both single integrals with per-side log weights and powers.
template <typename WF, typename WS>
SidePartials weighted_sides(const Subject& s, const EvalOptions& opts, const WF& weight_f,
                            double power_f, const WS& weight_F, double power_F,
                            bool pointwise_modulus = false) {
    SidePartials out;
    if (s.is_analytic()) {
        out.ladder_f = out.ladder_F = opts.ladder;
        const AnalyticProfiles prof = make_profiles(s.poly(), s.poly_spectrum(),
                                                    opts.ladder.back(), opts, power_f, power_F);
        out.signal = weighted_partials_analytic(prof.nodes, prof.log_f, prof.step, out.ladder_f,
                                                power_f, weight_f);
        out.spectrum = weighted_partials_analytic(prof.nodes, prof.log_F, prof.step,
                                                  out.ladder_F, power_F, weight_F);
    } else {
        const GridMagnitudes f = collect_signal(s.signal());
        const GridMagnitudes F = collect_spectrum(s.spectrum(), pointwise_modulus);
        out.ladder_f = clamp_ladder(opts.ladder, f.box_radius);
        out.ladder_F = clamp_ladder(opts.ladder, F.box_radius);
        if (out.ladder_f != opts.ladder || out.ladder_F != opts.ladder) {
            out.note = "ladders trimmed to the grid boxes; ";
        }
        out.signal = weighted_partials_sampled(f, out.ladder_f, power_f, weight_f);
        out.spectrum = weighted_partials_sampled(F, out.ladder_F, power_F, weight_F);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sup scans (Hardy).

template <typename LogValue>
std::vector<SupPoint> sup_scan_analytic(const LogValue& log_value,
                                        const std::vector<double>& ladder,
                                        const EvalOptions& opts) {
    std::vector<SupPoint> out;
    double best = -kInf, bx1 = 0.0, bx2 = 0.0;
    {
        const double v0 = log_value(0.0, 0.0);
        if (v0 > best) best = v0;
    }
    double prev_R = 0.0;
    for (double R : ladder) {
        for (double r = prev_R + opts.radial_step / 2.0; r <= R; r += opts.radial_step) {
            for (int t = 0; t < opts.theta_nodes; ++t) {
                const double th = (t + 0.5) * 2.0 * kPi / opts.theta_nodes;
                const double x1 = r * std::cos(th), x2 = r * std::sin(th);
                const double v = log_value(x1, x2);
                if (v > best) {
                    best = v;
                    bx1 = x1;
                    bx2 = x2;
                }
            }
        }
        prev_R = R;
        out.push_back({R, best, bx1, bx2});
    }
    return out;
}

template <typename LogValue>
std::vector<SupPoint> sup_scan_sampled(const GridSpec& grid, const LogValue& log_value_at,
                                       const std::vector<double>& ladder) {
    std::vector<SupPoint> out;
    double best = -kInf, bx1 = 0.0, bx2 = 0.0;
    double prev_R = -1.0;
    for (double R : ladder) {
        for (int m1 = 0; m1 < grid.n1; ++m1) {
            for (int m2 = 0; m2 < grid.n2; ++m2) {
                const double x1 = grid.x1(m1), x2 = grid.x2(m2);
                const double r = std::hypot(x1, x2);
                if (r > R || r <= prev_R) continue;
                const double v = log_value_at(m1, m2, r);
                if (v > best) {
                    best = v;
                    bx1 = x1;
                    bx2 = x2;
                }
            }
        }
        prev_R = R;
        out.push_back({R, best, bx1, bx2});
    }
    return out;
}

LadderClassification classify_sups(const std::vector<SupPoint>& sups) {
    // Rungs before the sup is established (no nonzero sample yet) carry no
    // growth information; classify from the first finite value on.
    std::vector<double> values;
    for (const SupPoint& p : sups) {
        if (values.empty() && p.log_value == -kInf) continue;
        values.push_back(p.log_value);
    }
    if (values.empty()) {
        return {Verdict::convergent, -kInf, "signal is identically zero inside the ladder"};
    }
    if (values.size() < 2) {
        return {Verdict::inconclusive, 0.0, "too few rungs past the signal support"};
    }
    // Shift so the ladder of log sups starts at zero; the increments are what
    // the ratio rule inspects, the offset is irrelevant.
    std::vector<double> shifted;
    shifted.reserve(values.size());
    for (double v : values) shifted.push_back(v - values.front());
    return classify_ladder(shifted, kSupFlatTol);
}

void fill_common(CertificateReport& rep, const char* theorem,
                 std::initializer_list<std::pair<std::string, double>> params,
                 bool pointwise) {
    rep.theorem = theorem;
    rep.params.assign(params.begin(), params.end());
    rep.norm_used = pointwise ? "pointwise" : "module";
}

}  // namespace

double beurling_integral(const Subject& s, const BeurlingParams& p, double R,
                         const EvalOptions& opts) {
    validate(p);
    if (!(R > 0.0)) throw std::invalid_argument("truncation radius must be positive");
    return beurling_partials(s, p, {R}, opts).back();
}

CertificateReport beurling_certify(const Subject& s, const BeurlingParams& p,
                                   const EvalOptions& opts) {
    validate(p);
    CertificateReport rep;
    fill_common(rep, "beurling", {{"d", p.d}}, p.use_pointwise_modulus);

    rep.ladder = opts.ladder;
    if (!s.is_analytic()) {
        // Each side saturates at its own grid box; the ladder only needs to
        // reach the larger one.
        const GridMagnitudes f = collect_signal(s.signal());
        const GridMagnitudes F = collect_spectrum(s.spectrum(), p.use_pointwise_modulus);
        const double reach = std::max(f.box_radius, F.box_radius);
        if (reach < rep.ladder.back()) {
            rep.ladder = clamp_ladder(rep.ladder, reach);
            rep.notes = "ladder trimmed to the grid box; ";
        }
    }
    rep.signal_partials = beurling_partials(s, p, rep.ladder, opts);

    const LadderClassification cls = classify_ladder(rep.signal_partials);
    rep.verdict = cls.verdict;
    rep.growth_exponent = cls.growth_exponent;
    rep.notes += cls.reason;

    if (subject_is_zero(s)) {
        rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
        rep.notes += "; signal is identically zero";
        return rep;
    }
    if (rep.verdict == Verdict::convergent) {
        if (p.d <= 2.0) {
            rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
        } else {
            const int deg = strict_floor((p.d - 2.0) / 2.0);
            if (deg < 0) {
                rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
            } else {
                rep.conclusion = {ConclusionKind::poly_times_gaussian, deg, std::nullopt};
            }
        }
    } else {
        rep.conclusion = {ConclusionKind::unconstrained, -1, std::nullopt};
        if (rep.verdict == Verdict::inconclusive) {
            rep.notes += "; hypothesis not established, theorem not invoked";
        }
    }
    return rep;
}

CertificateReport hardy_check(const Subject& s, const HardyParams& p,
                              const EvalOptions& opts) {
    validate(p);
    CertificateReport rep;
    fill_common(rep, "hardy", {{"d", p.d}, {"alpha", p.alpha}, {"beta", p.beta}}, false);

    std::vector<double> ladder_f = opts.ladder, ladder_F = opts.ladder;
    if (s.is_analytic()) {
        // extra rungs sharpen the bounded/growing separation and cost little
        for (double r : opts.sup_ladder_extension) {
            ladder_f.push_back(r);
            ladder_F.push_back(r);
        }
        const PolyGauss& f = s.poly();
        const QPolyGauss& F = s.poly_spectrum();
        rep.signal_sups = sup_scan_analytic(
            [&](double x1, double x2) {
                const double r = std::hypot(x1, x2);
                return std::log(std::abs(f.eval_polynomial(x1, x2))) -
                       kPi * f.alpha() * r * r - p.d * std::log1p(r) + kPi * p.alpha * r * r;
            },
            ladder_f, opts);
        rep.spectrum_sups = sup_scan_analytic(
            [&](double y1, double y2) {
                // envelope in log space, or it underflows before the weight
                const double r = std::hypot(y1, y2);
                return std::log(qpoly_modulus(F, y1, y2)) - kPi * F.alpha() * r * r -
                       p.d * std::log1p(r) + kPi * p.beta * r * r;
            },
            ladder_F, opts);
    } else {
        const QSignal& f = s.signal();
        const QSpectrum& S = s.spectrum();
        const std::vector<double> mags = module_norm(S);
        ladder_f = clamp_ladder(ladder_f, collect_signal(f).box_radius);
        ladder_F = clamp_ladder(ladder_F, collect_spectrum(S, false).box_radius);
        rep.signal_sups = sup_scan_sampled(
            f.grid(),
            [&](int m1, int m2, double r) {
                return std::log(modulus(f.at(m1, m2))) - p.d * std::log1p(r) +
                       kPi * p.alpha * r * r;
            },
            ladder_f);
        rep.spectrum_sups = sup_scan_sampled(
            S.grid(),
            [&](int u1, int u2, double r) {
                return std::log(mags[static_cast<std::size_t>(u1) * S.grid().n2 + u2]) -
                       p.d * std::log1p(r) + kPi * p.beta * r * r;
            },
            ladder_F);
    }
    rep.ladder = ladder_f;
    if (ladder_F != ladder_f) rep.spectrum_ladder = ladder_F;
    for (const SupPoint& sp : rep.signal_sups) rep.signal_partials.push_back(sp.log_value);
    for (const SupPoint& sp : rep.spectrum_sups) rep.spectrum_partials.push_back(sp.log_value);

    const LadderClassification cf = classify_sups(rep.signal_sups);
    const LadderClassification cF = classify_sups(rep.spectrum_sups);
    rep.growth_exponent = std::max(cf.growth_exponent, cF.growth_exponent);
    rep.notes = "signal sup: " + cf.reason + "; spectrum sup: " + cF.reason;

    if (cf.verdict == Verdict::divergent || cF.verdict == Verdict::divergent) {
        rep.verdict = Verdict::divergent;  // some sup constant is unbounded
        rep.conclusion = {ConclusionKind::unconstrained, -1, std::nullopt};
        return rep;
    }
    if (cf.verdict == Verdict::inconclusive || cF.verdict == Verdict::inconclusive) {
        rep.verdict = Verdict::inconclusive;
        rep.conclusion = {ConclusionKind::unconstrained, -1, std::nullopt};
        rep.notes += "; hypothesis not established";
        return rep;
    }
    rep.verdict = Verdict::convergent;  // both sup constants bounded
    if (subject_is_zero(s)) {
        rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
        return rep;
    }
    const double ab = p.alpha * p.beta;
    if (ab > 1.0 + 1e-12) {
        rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
    } else if (std::abs(ab - 1.0) <= 1e-12) {
        rep.conclusion = {ConclusionKind::poly_times_gaussian,
                          static_cast<int>(std::floor(p.d)), p.alpha};
    } else {
        rep.conclusion = {ConclusionKind::unconstrained, -1, std::nullopt};
        rep.notes += "; alpha*beta < 1 admits infinitely many functions";
    }
    return rep;
}

CertificateReport gelfand_shilov_check(const Subject& s, const GelfandShilovParams& p,
                                       const EvalOptions& opts) {
    validate(p);
    CertificateReport rep;
    fill_common(rep, "gelfand-shilov",
                {{"d", static_cast<double>(p.d)},
                 {"alpha", p.alpha},
                 {"beta", p.beta},
                 {"p", p.p},
                 {"q", p.q}},
                false);

    const double cf = 2.0 * kPi * std::pow(p.alpha, p.p) / p.p;
    const double cF = 2.0 * kPi * std::pow(p.beta, p.q) / p.q;
    const SidePartials sides = weighted_sides(
        s, opts,
        [&](double r) { return -p.d * std::log1p(r) + cf * std::pow(r, p.p); }, 1.0,
        [&](double r) { return -p.d * std::log1p(r) + cF * std::pow(r, p.q); }, 1.0);
    rep.ladder = sides.ladder_f;
    if (sides.ladder_F != sides.ladder_f) rep.spectrum_ladder = sides.ladder_F;
    rep.signal_partials = sides.signal;
    rep.spectrum_partials = sides.spectrum;

    const LadderClassification clf = classify_ladder(rep.signal_partials);
    const LadderClassification clF = classify_ladder(rep.spectrum_partials);
    rep.growth_exponent = std::max(clf.growth_exponent, clF.growth_exponent);
    rep.notes = sides.note + "signal integral: " + clf.reason + "; spectrum integral: " +
                clF.reason;

    if (clf.verdict == Verdict::divergent || clF.verdict == Verdict::divergent) {
        rep.verdict = Verdict::divergent;
        rep.conclusion = {ConclusionKind::unconstrained, -1, std::nullopt};
        return rep;
    }
    if (clf.verdict == Verdict::inconclusive || clF.verdict == Verdict::inconclusive) {
        rep.verdict = Verdict::inconclusive;
        rep.conclusion = {ConclusionKind::unconstrained, -1, std::nullopt};
        rep.notes += "; hypothesis not established";
        return rep;
    }
    rep.verdict = Verdict::convergent;
    if (subject_is_zero(s)) {
        rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
        return rep;
    }
    const bool p2q2 = std::abs(p.p - 2.0) <= 1e-12 && std::abs(p.q - 2.0) <= 1e-12;
    const double ab = p.alpha * p.beta;
    if (!p2q2 || ab > 1.0 + 1e-12) {
        rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
    } else {
        const int deg = strict_floor(static_cast<double>(p.d) - 2.0);
        if (deg < 0) {
            rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
        } else {
            rep.conclusion = {ConclusionKind::poly_times_gaussian, deg, sq(p.alpha)};
        }
    }
    return rep;
}

CertificateReport cowling_price_check(const Subject& s, const CowlingPriceParams& p,
                                      const EvalOptions& opts) {
    validate(p);
    CertificateReport rep;
    fill_common(rep, "cowling-price",
                {{"d", p.d}, {"alpha", p.alpha}, {"beta", p.beta}, {"p", p.p}, {"q", p.q}},
                false);

    const SidePartials sides = weighted_sides(
        s, opts,
        [&](double r) { return -p.d * std::log1p(r) + 2.0 * kPi * p.alpha * r * r; }, p.p,
        [&](double r) { return -p.d * std::log1p(r) + 2.0 * kPi * p.beta * r * r; }, p.q);
    rep.ladder = sides.ladder_f;
    if (sides.ladder_F != sides.ladder_f) rep.spectrum_ladder = sides.ladder_F;
    rep.signal_partials = sides.signal;
    rep.spectrum_partials = sides.spectrum;

    const LadderClassification clf = classify_ladder(rep.signal_partials);
    const LadderClassification clF = classify_ladder(rep.spectrum_partials);
    rep.growth_exponent = std::max(clf.growth_exponent, clF.growth_exponent);
    rep.notes = sides.note + "signal integral: " + clf.reason + "; spectrum integral: " +
                clF.reason;

    if (clf.verdict == Verdict::divergent || clF.verdict == Verdict::divergent) {
        rep.verdict = Verdict::divergent;
        rep.conclusion = {ConclusionKind::unconstrained, -1, std::nullopt};
        return rep;
    }
    if (clf.verdict == Verdict::inconclusive || clF.verdict == Verdict::inconclusive) {
        rep.verdict = Verdict::inconclusive;
        rep.conclusion = {ConclusionKind::unconstrained, -1, std::nullopt};
        rep.notes += "; hypothesis not established";
        return rep;
    }
    rep.verdict = Verdict::convergent;
    if (subject_is_zero(s)) {
        rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
        return rep;
    }
    const double ab = p.alpha * p.beta;
    if (ab > 0.25 + 1e-12) {
        rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
    } else if (std::abs(ab - 0.25) <= 1e-12) {
        const int deg = strict_floor(std::min((p.d - 2.0) / p.p, (p.d - 2.0) / p.q));
        if (deg < 0) {
            rep.conclusion = {ConclusionKind::zero, -1, std::nullopt};
        } else {
            rep.conclusion = {ConclusionKind::poly_times_gaussian, deg, 2.0 * p.alpha};
        }
    } else {
        rep.conclusion = {ConclusionKind::unconstrained, -1, std::nullopt};
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Report serialization.

namespace {

void append_series(std::ostream& os, const char* label, const std::vector<double>& radii,
                   const std::vector<double>& values) {
    os << "  " << label << ":";
    for (std::size_t k = 0; k < values.size(); ++k) {
        os << "  R=" << radii[k] << " -> " << values[k];
    }
    os << '\n';
}

}  // namespace

std::string CertificateReport::to_text() const {
    std::ostringstream os;
    os.precision(12);
    os << "certificate: " << theorem << '\n';
    os << "  params:";
    for (const auto& [k, v] : params) os << ' ' << k << '=' << v;
    os << '\n';
    os << "  spectrum norm: " << norm_used << '\n';
    const std::vector<double>& sladder = spectrum_ladder.empty() ? ladder : spectrum_ladder;
    if (!signal_sups.empty()) {
        append_series(os, "log sup constants (signal)", ladder, signal_partials);
        append_series(os, "log sup constants (spectrum)", sladder, spectrum_partials);
        const SupPoint& a = signal_sups.back();
        const SupPoint& b = spectrum_sups.back();
        os << "  attained at: signal (" << a.at_x1 << ", " << a.at_x2 << "), spectrum ("
           << b.at_x1 << ", " << b.at_x2 << ")\n";
    } else if (!spectrum_partials.empty()) {
        append_series(os, "signal integral partials", ladder, signal_partials);
        append_series(os, "spectrum integral partials", sladder, spectrum_partials);
    } else {
        append_series(os, "joint integral partials", ladder, signal_partials);
    }
    os << "  growth exponent: " << growth_exponent << '\n';
    os << "  verdict: " << to_string(verdict) << '\n';
    os << "  forced conclusion: " << to_string(conclusion) << '\n';
    if (!notes.empty()) os << "  notes: " << notes << '\n';
    return os.str();
}

std::string CertificateReport::to_key_values() const {
    std::ostringstream os;
    os.precision(17);
    os << "theorem=" << theorem << '\n';
    for (const auto& [k, v] : params) os << "param." << k << '=' << v << '\n';
    os << "norm=" << norm_used << '\n';
    for (std::size_t k = 0; k < ladder.size() && k < signal_partials.size(); ++k) {
        os << "ladder." << k << ".radius=" << ladder[k] << '\n';
        os << "ladder." << k << ".signal=" << signal_partials[k] << '\n';
    }
    const std::vector<double>& sladder = spectrum_ladder.empty() ? ladder : spectrum_ladder;
    for (std::size_t k = 0; k < sladder.size() && k < spectrum_partials.size(); ++k) {
        os << "spectrum_ladder." << k << ".radius=" << sladder[k] << '\n';
        os << "spectrum_ladder." << k << ".value=" << spectrum_partials[k] << '\n';
    }
    if (!signal_sups.empty()) {
        os << "sup.signal.at=" << signal_sups.back().at_x1 << ',' << signal_sups.back().at_x2
           << '\n';
        os << "sup.spectrum.at=" << spectrum_sups.back().at_x1 << ','
           << spectrum_sups.back().at_x2 << '\n';
    }
    os << "growth_exponent=" << growth_exponent << '\n';
    os << "verdict=" << to_string(verdict) << '\n';
    os << "conclusion=" << to_string(conclusion) << '\n';
    if (conclusion.kind == ConclusionKind::poly_times_gaussian) {
        os << "conclusion.max_degree=" << conclusion.max_degree << '\n';
        if (conclusion.gaussian_width) {
            os << "conclusion.width=" << *conclusion.gaussian_width << '\n';
        }
    }
    if (!notes.empty()) os << "notes=" << notes << '\n';
    return os.str();
}

}  // namespace qft::uncertainty
