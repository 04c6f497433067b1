#ifndef LEVEX_LEVY_MODELS_HPP
#define LEVEX_LEVY_MODELS_HPP

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levex/common.hpp"
#include "levex/rng.hpp"

namespace levex {

using Cx = std::complex<double>;

/// Jump-size law of a compound-Poisson component.  conv_tail(k, y) is
/// P(xi_1 + ... + xi_k >= y); closed forms where available (normal, uniform),
/// else grid convolution.
struct JumpDensity {
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    std::function<double(int, double)> conv_tail;
    std::function<double(int, double)> conv_pdf;       // k >= 1
    std::function<double(int, double)> pdf_deriv;      // analytic, may be null
    std::function<Cx(double)> cf;
    std::function<double(Rng&)> sample;
    bool smooth = false;
    std::string name;
};

JumpDensity normal_jumps();
JumpDensity uniform_jumps(double a, double b);

struct CompoundPoissonData {
    double lambda = 0;
    JumpDensity jumps;
    double drift = 0;   // linear drift of the process (not the triplet b)
    double sigma2 = 0;
};

/// Self-similar scaling data for symmetric alpha-stable components:
/// psi_t(u) = exp(-coef * t * |u|^alpha), X_t ~ (coef*t)^{1/alpha} Z with Z
/// the unit law exp(-|u|^alpha).  density_coef A: s(x) = A |x|^{-alpha-1}.
struct StableData {
    double alpha = 0;
    double exponent_coef = 0;
    double density_coef = 0;
};

struct CgmyData {
    double C = 0, G = 0, M = 0, alpha = 0;
};

/// Leading power behaviour of s at 0: s(x) ~ coef_pos x^{-1-alpha} (x->0+),
/// coef_neg |x|^{-1-alpha} (x->0-).  Drives singularity-removing
/// substitutions in quadrature.
struct SmallXSingularity {
    bool present = false;
    double alpha = 0;
    double coef_pos = 0, coef_neg = 0;
};

enum class ModelKind { SymmetricStable, Cgmy, CompoundPoisson, BrownianDrift, Sum };

/// A Levy process in the truncation-at-1 convention: triplet (sigma2, b, nu)
/// with evaluable Levy density, derivatives, characteristic exponent and
/// tails.  Immutable after construction; all members are pure.
class LevyModel {
public:
    ModelKind kind = ModelKind::BrownianDrift;
    std::string label;

    double sigma2 = 0;
    double b = 0;  // drift in the truncation-at-1 convention
    bool symmetric = false;
    SmallXSingularity sing;

    std::function<double(double)> levy_density;               // s(x), x != 0
    std::function<double(int, double)> levy_density_deriv_fn; // analytic; may be null
    std::function<Cx(double)> char_exponent;                  // gamma(u)
    std::function<Cx(int, double)> char_exponent_deriv_fn;    // analytic; may be null
    std::function<double(double)> tail_pos_fn;                // int_a^inf s, a > 0
    std::function<double(double)> tail_neg_fn;                // int_-inf^-a s, a > 0

    std::optional<CompoundPoissonData> cp;
    std::optional<StableData> stable;
    std::optional<CgmyData> cgmy;
    std::vector<std::shared_ptr<const LevyModel>> components;  // Sum kind

    double s(double x) const { return levy_density(x); }
    /// s^(k)(x): analytic where available, else Richardson-extrapolated
    /// central differences with step max(1e-5, 1e-3 |x|).
    double s_deriv(int k, double x) const;
    Cx gamma(double u) const { return char_exponent(u); }
    Cx gamma_deriv(int i, double u) const;
    double tail_pos(double a) const { return tail_pos_fn(a); }
    double tail_neg(double a) const { return tail_neg_fn(a); }
    /// nu([y, inf)) for y > 0.
    double nu_tail(double y) const { return tail_pos(y); }

    bool has_jumps() const { return kind != ModelKind::BrownianDrift; }
};

using ModelPtr = std::shared_ptr<const LevyModel>;

/// s(x) = |x|^{-alpha-1}; the exponent constant is derived by quadrature
/// (c = 2 int_0^inf (1-cos v) v^{-alpha-1} dv).
ModelPtr make_symmetric_stable(double alpha);
/// Alternate normalization psi_1(u) = exp(-|u|^alpha); then
/// s(x) = |x|^{-alpha-1} / c(alpha).
ModelPtr make_symmetric_stable_unit(double alpha);

ModelPtr make_cgmy(double C, double G, double M, double alpha);

ModelPtr make_compound_poisson(double lambda, JumpDensity jumps, double drift = 0.0,
                               double sigma2 = 0.0);

ModelPtr make_brownian(double sigma2, double b);

ModelPtr make_sum(std::vector<ModelPtr> components);

/// 2 int_0^inf (1 - cos v) v^{-alpha-1} dv, by quadrature.
double stable_exponent_constant(double alpha);

/// Levy-Khintchine quadrature of gamma from (sigma2, b, s); test oracle for
/// the closed-form exponent.
Cx gamma_numeric(const LevyModel& model, double u);

/// JSON config loading ({"kind": ..., "params": {...}}); unknown fields are
/// rejected.
ModelPtr load_model_json(const std::string& json_text);
ModelPtr load_model_file(const std::string& path);

}  // namespace levex

#endif
