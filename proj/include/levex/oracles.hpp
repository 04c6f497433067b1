#ifndef LEVEX_ORACLES_HPP
#define LEVEX_ORACLES_HPP

#include <cstdint>
#include <functional>

#include "levex/levy_models.hpp"
#include "levex/quad.hpp"
#include "levex/truncation.hpp"

namespace levex {

struct InversionSpec {
    double abs_tol = 1e-12;
    /// Envelope probe: require |psi_t| to drop below this by u = u_probe_max,
    /// else the characteristic function is treated as non-decaying.
    double u_probe_max = 1e9;
};

/// p_t^(m)(x) via the inversion formula ((-i)^m / 2 pi) int e^{-iux} u^m psi_t(u) du.
/// Errors out (pointing to the exact series) when psi_t does not decay, e.g.
/// for a compound Poisson model without Gaussian part.
quad::Result density_by_inversion_r(const LevyModel& model, double t, double x, int m,
                                    const InversionSpec& spec = {});
double density_by_inversion(const LevyModel& model, double t, double x, int m,
                            const InversionSpec& spec = {});

/// P(X_t >= y) = 1/2 - (1/pi) int_0^inf Im(e^{-iuy} psi_t(u))/u du.
/// The [0, u0] stretch uses the series expansion of the integrand (u0 = 1e-3);
/// the raw value is asserted inside [-1e-8, 1 + 1e-8] before clamping.
double tail_by_gil_pelaez(const LevyModel& model, double t, double y,
                          const InversionSpec& spec = {});

/// Exact Poisson-weighted series for compound-Poisson(+Brownian) models;
/// truncated when the remaining Poisson tail is below tail_cut.
double exact_compound_poisson_tail(const LevyModel& model, double t, double y,
                                   double tail_cut = 1e-14);

/// Density (of the absolutely continuous part) and its derivatives for the
/// compound-Poisson model.  The k=0 atom at drift*t contributes only when
/// sigma2 > 0 (normal jumps required in that case).
double compound_poisson_density_deriv(const LevyModel& model, double t, double x, int m,
                                      double tail_cut = 1e-16);

/// E g(X_t): exact Poisson mixture for compound-Poisson models, inversion
/// density quadrature otherwise.
double expectation(const LevyModel& model, double t, const std::function<double(double)>& g,
                   double g_support_radius = 0.0);

struct MCConfig {
    std::uint64_t seed = 1;
    long replications = 10000;
    enum class SmallJump { truncate, gaussian_substitute };
    SmallJump policy = SmallJump::gaussian_substitute;
    double eps_mc = 1e-3;
    int threads = 1;
};

struct MCEstimate {
    double estimate = 0;
    double std_error = 0;
    double small_jump_bias_bound = 0;  // 0 for exactly simulable models
};

/// Monte Carlo estimate of P(X_t >= y).  Stable components use the exact
/// Chambers-Mallows-Stuck sampler; compound Poisson is exact; other jump
/// components are truncated at eps_mc under the configured policy.
/// Seed-deterministic and independent of the thread count.
MCEstimate mc_increment_tail(const LevyModel& model, double t, double y, const MCConfig& cfg);

/// One path increment sample (exposed for the estimator experiments).
double sample_increment(const LevyModel& model, double t, Rng& rng,
                        MCConfig::SmallJump policy = MCConfig::SmallJump::gaussian_substitute,
                        double eps_mc = 1e-3);

/// Small-jump remainder process X^eps as a LevyModel (numeric characteristic
/// exponent); used by the tail-estimate checker.
ModelPtr make_small_jump_model(ModelPtr model, const TruncationScheme& scheme);

struct TailEstimateReport {
    double lhs = 0;       // P(|X^eps_t| >= y)
    double rhs = 0;       // exp(a y0 log y0) exp(ay - ay log y) t^{ya}
    double margin = 0;    // rhs - lhs
    bool pass = false;
};

/// Numerical check of the small-jump tail estimate; y0 is the (unknown)
/// constant from the cited lemma, configurable with default 10.
TailEstimateReport check_tail_estimate(ModelPtr model, const TruncationScheme& scheme, double a,
                                       double y, double t, double y0 = 10.0);

}  // namespace levex

#endif
