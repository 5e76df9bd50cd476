#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qft/polygauss.hpp"
#include "qft/signal.hpp"

namespace qft::uncertainty {

// ---------------------------------------------------------------------------
// Parameter sets, one per theorem. Constructors validate the stated domains.

struct BeurlingParams {
    double d = 0.0;  // decay exponent, d >= 0
    /// When true the joint integral uses the pointwise modulus |F{f}(y)|_Q
    /// instead of the module norm ||F{f}(y)||_Q (the real-signal lemma form).
    bool use_pointwise_modulus = false;
};

struct HardyParams {
    double d = 0.0;
    double alpha = 1.0;  // > 0
    double beta = 1.0;   // > 0
};

struct GelfandShilovParams {
    int d = 0;           // nonnegative integer
    double alpha = 1.0;  // >= 1
    double beta = 1.0;   // >= 1
    double p = 2.0;      // 1 < p < inf, 1/p + 1/q = 1
    double q = 2.0;
};

struct CowlingPriceParams {
    double d = 0.0;
    double alpha = 1.0;  // > 0
    double beta = 1.0;   // > 0
    double p = 2.0;      // conjugate pair as above
    double q = 2.0;
};

void validate(const BeurlingParams& p);
void validate(const HardyParams& p);
void validate(const GelfandShilovParams& p);
void validate(const CowlingPriceParams& p);

/// Young's inequality specialization used by the Gelfand-Shilov reduction:
/// alpha*beta*|x|*|y| <= (alpha^p/p)|x|^p + (beta^q/q)|y|^q.
bool young_bound_check(double x, double y, double alpha, double beta,
                       double p, double q, double slack = 1e-12);

// ---------------------------------------------------------------------------
// Verdicts and forced conclusions.

enum class Verdict { convergent, divergent, inconclusive };

enum class ConclusionKind { zero, poly_times_gaussian, unconstrained };

struct Conclusion {
    ConclusionKind kind = ConclusionKind::unconstrained;
    /// Valid for poly_times_gaussian: largest admissible polynomial degree.
    int max_degree = -1;
    /// Width w of the forced Gaussian e^{-pi w |x|^2} where the statement
    /// pins one (Hardy: alpha; Gelfand-Shilov: alpha^2; Cowling-Price:
    /// 2 alpha); absent for Beurling's unspecified a > 0.
    std::optional<double> gaussian_width;
};

const char* to_string(Verdict v);
std::string to_string(const Conclusion& c);

/// Growth classification of a ladder of partial values (integrals truncated
/// at increasing radii, or running sup constants).
///
/// The discriminator is the last increment ratio rho = D_K / D_{K-1} under
/// radius doubling: a tail ~ R^{-g} gives rho ~ 2^{-g} < 1, divergent growth
/// gives rho >= 1. Ratios below kRatioConvergent classify as convergent
/// (geometric tail), above kRatioDivergent (or any non-finite partial) as
/// divergent, in between as inconclusive. Increments below absolute floor
/// kFlatTol count as stabilized.
struct LadderClassification {
    Verdict verdict = Verdict::inconclusive;
    double growth_exponent = 0.0;  // log2 of the last increment ratio
    std::string reason;
};

inline constexpr double kRatioConvergent = 0.78;
inline constexpr double kRatioDivergent = 0.93;
inline constexpr double kFlatTol = 1e-12;
/// Flat tolerance for ladders of log sup constants: sup stability is only
/// meaningful above the discretization noise of sampled subjects.
inline constexpr double kSupFlatTol = 1e-4;

LadderClassification classify_ladder(const std::vector<double>& partials,
                                     double flat_tol = kFlatTol);

// ---------------------------------------------------------------------------
// Certificate report.

struct SupPoint {
    double radius = 0.0;   // ladder rung
    double log_value = 0.0;
    double at_x1 = 0.0;    // attaining point of the running sup
    double at_x2 = 0.0;
};

struct CertificateReport {
    std::string theorem;
    std::vector<std::pair<std::string, double>> params;
    std::string norm_used;  // "module" or "pointwise"

    std::vector<double> ladder;             // truncation radii R_1 < ... < R_K
    /// Spectrum-side radii when they differ from ladder (sampled subjects are
    /// Nyquist-limited on the dual grid); empty means same as ladder.
    std::vector<double> spectrum_ladder;
    std::vector<double> signal_partials;    // joint integral (Beurling) or signal-side values
    std::vector<double> spectrum_partials;  // spectrum-side values (empty for Beurling)
    std::vector<SupPoint> signal_sups;      // Hardy only
    std::vector<SupPoint> spectrum_sups;    // Hardy only

    double growth_exponent = 0.0;
    Verdict verdict = Verdict::inconclusive;
    Conclusion conclusion;
    std::string notes;

    /// Human-readable block.
    std::string to_text() const;
    /// Machine-readable "key=value" lines.
    std::string to_key_values() const;
};

// ---------------------------------------------------------------------------
// Evaluation subjects and options.
//
// Certificates accept either a closed-form PolyGauss (spectrum via
// qft_polygauss, integrals by polar quadrature) or a sampled signal with its
// component-bearing spectrum (integrals by grid summation, radii capped by
// the grid box). All evaluation is deterministic.

struct EvalOptions {
    std::vector<double> ladder = {2.0, 4.0, 8.0, 16.0};
    /// Extra rungs appended for sup scans on analytic subjects (cheap and
    /// sharpens the bounded/growing separation).
    std::vector<double> sup_ladder_extension = {32.0, 64.0};
    double radial_step = 1.0 / 128.0;  // polar quadrature step for analytic subjects
    int theta_nodes = 512;             // angular nodes for analytic profiles
};

class Subject {
public:
    static Subject analytic(PolyGauss f);
    /// Uses a precomputed spectrum; it must carry component spectra.
    static Subject sampled(QSignal f, QSpectrum S);
    /// Convenience: transforms with qft_fast.
    static Subject sampled(QSignal f);

    bool is_analytic() const { return analytic_.has_value(); }
    const PolyGauss& poly() const { return *analytic_; }
    const QPolyGauss& poly_spectrum() const { return *analytic_spectrum_; }
    const QSignal& signal() const { return *signal_; }
    const QSpectrum& spectrum() const { return *spectrum_; }

private:
    Subject() = default;
    std::optional<PolyGauss> analytic_;
    std::optional<QPolyGauss> analytic_spectrum_;
    std::optional<QSignal> signal_;
    std::optional<QSpectrum> spectrum_;
};

// ---------------------------------------------------------------------------
// Condition evaluators.

/// Truncated Beurling integral
///
///   I(R) = int_{|x|<=R} int_{|y|<=R} |f(x)|_Q ||F{f}(y)||_Q
///          e^{2 pi |x||y|} / (1+|x|+|y|)^d dx dy,
///
/// monotone nondecreasing in R. Terms are accumulated in log space; a value
/// past double range reports +inf.
double beurling_integral(const Subject& s, const BeurlingParams& p, double R,
                         const EvalOptions& opts = {});

/// Ladder run + classification + forced conclusion of the Beurling theorem:
/// convergent with d <= 2 forces zero, convergent with d > 2 forces
/// P(x) e^{-a|x|^2} with deg P < (d-2)/2, divergent leaves f unconstrained.
CertificateReport beurling_certify(const Subject& s, const BeurlingParams& p,
                                   const EvalOptions& opts = {});

/// Hardy-type decay hypothesis via minimal sup constants
/// C_f = sup |f(x)|_Q (1+|x|)^{-d} e^{pi alpha |x|^2} (and dually C_F); both
/// bounded over the ladder means the hypothesis holds, then alpha*beta > 1
/// forces zero, = 1 forces P(x) e^{-pi alpha |x|^2} with deg P <= d, < 1
/// leaves f unconstrained.
CertificateReport hardy_check(const Subject& s, const HardyParams& p,
                              const EvalOptions& opts = {});

/// Gelfand-Shilov-type: the two single integrals with e^{2pi (alpha^p/p)|x|^p}
/// weights; hypothesis holds when both converge. (p,q) != (2,2) or
/// alpha*beta > 1 forces zero, else P(x) e^{-pi alpha^2 |x|^2}, deg P < d-2.
CertificateReport gelfand_shilov_check(const Subject& s, const GelfandShilovParams& p,
                                       const EvalOptions& opts = {});

/// Cowling-Price-type: L^p/L^q weighted integrals; alpha*beta > 1/4 forces
/// zero, = 1/4 forces P(x) e^{-2 pi alpha |x|^2} with
/// deg P < min{(d-2)/p, (d-2)/q}, else unconstrained.
CertificateReport cowling_price_check(const Subject& s, const CowlingPriceParams& p,
                                      const EvalOptions& opts = {});

}  // namespace qft::uncertainty
