#include "levex/oracles.hpp"

#include <algorithm>
#include <cmath>

#include "levex/chebyshev.hpp"
#include "levex/oscillatory.hpp"
#include "levex/special.hpp"

namespace levex {

namespace {

// Probe the envelope decay; throws for characteristic functions that do not
// vanish at infinity (finite-activity pure-jump laws have an atom).
void check_envelope(const LevyModel& model, double t, int m, const InversionSpec& spec,
                    const char* who) {
    double u = 64.0;
    while (u <= spec.u_probe_max) {
        const double mag = t * model.gamma(u).real() + m * std::log(u);
        if (mag < -46.0) return;
        u *= 8.0;
    }
    throw NumericError(who,
                       "characteristic function does not decay fast enough for inversion; "
                       "use the exact compound-Poisson series oracle for finite-activity models");
}

}  // namespace

quad::Result density_by_inversion_r(const LevyModel& model, double t, double x, int m,
                                    const InversionSpec& spec) {
    const char* who = "oracles.density_by_inversion";
    if (t <= 0.0) throw DomainError(who, "t must be positive");
    check_envelope(model, t, m, spec, who);
    auto envelope = [&model, t, m](double u) {
        return std::pow(u, m) * std::exp(t * model.gamma(u));
    };
    OscOptions opt;
    opt.abs_tol = spec.abs_tol;
    OscResult r = integrate_oscillatory_tail(envelope, x, 0.0, opt);
    // p^(m)(x) = (1/pi) Re[(-i)^m int_0^inf e^{-iux} u^m psi_t(u) du]
    const Cx rot = std::pow(Cx(0.0, -1.0), m);
    const double val = (rot * r.value).real() / kPi;
    return {val, r.error / kPi, r.evals};
}

double density_by_inversion(const LevyModel& model, double t, double x, int m,
                            const InversionSpec& spec) {
    return density_by_inversion_r(model, t, x, m, spec).value;
}

double tail_by_gil_pelaez(const LevyModel& model, double t, double y,
                          const InversionSpec& spec) {
    const char* who = "oracles.tail_by_gil_pelaez";
    if (t <= 0.0) throw DomainError(who, "t must be positive");
    check_envelope(model, t, 0, spec, who);
    const double u0 = 1e-3;
    // Series of Im(e^{-iuy} psi_t(u))/u = c0 + c1 u + O(u^2) on [0, u0]:
    // phi(u) = t gamma(u) - iuy; e^phi = 1 + phi + phi^2/2 + ...
    const Cx g1 = model.gamma_deriv(1, 1e-4);  // gamma'(0) via small-u value
    const Cx g2 = model.gamma_deriv(2, 1e-4);
    const Cx a1 = t * g1 - Cx(0.0, y);
    const Cx a2 = 0.5 * (t * g2 + a1 * a1);
    const double head = a1.imag() * u0 + 0.5 * a2.imag() * u0 * u0;

    auto envelope = [&model, t](double u) { return std::exp(t * model.gamma(u)) / u; };
    OscOptions opt;
    opt.abs_tol = spec.abs_tol;
    OscResult r = integrate_oscillatory_tail(envelope, y, u0, opt);
    const double raw = 0.5 - (head + r.value.imag()) / kPi;
    if (raw < -1e-8 || raw > 1.0 + 1e-8)
        throw NumericError(who, "inverted tail " + std::to_string(raw) + " outside [0,1]");
    return std::clamp(raw, 0.0, 1.0);
}

namespace {

const CompoundPoissonData& need_cp(const LevyModel& model, const char* who) {
    if (!model.cp)
        throw DomainError(who, "operation requires a compound-Poisson model");
    return *model.cp;
}

// Poisson weights e^{-lt} (lt)^k / k! until the remaining tail < cut.
std::vector<double> poisson_weights(double lt, double cut) {
    std::vector<double> w;
    double wk = std::exp(-lt);
    double cum = 0.0;
    for (int k = 0; k < 400; ++k) {
        w.push_back(wk);
        cum += wk;
        if (1.0 - cum < cut && k > lt) break;
        wk *= lt / (k + 1);
    }
    return w;
}

}  // namespace

double exact_compound_poisson_tail(const LevyModel& model, double t, double y, double tail_cut) {
    const char* who = "oracles.exact_compound_poisson_tail";
    const auto& cp = need_cp(model, who);
    if (t < 0.0) throw DomainError(who, "t must be nonnegative");
    if (t == 0.0) return y <= 0.0 ? 1.0 : 0.0;
    const bool has_bm = cp.sigma2 > 0.0;
    if (has_bm && cp.jumps.name != "normal")
        throw DomainError(who,
                          "Brownian part with non-normal jumps has no closed convolution; "
                          "use the Monte Carlo oracle");
    const double shift = cp.drift * t;
    const auto w = poisson_weights(cp.lambda * t, tail_cut);
    double p = 0.0;
    for (size_t k = 0; k < w.size(); ++k) {
        double pk;
        if (has_bm) {
            pk = norm_tail(y - shift, cp.sigma2 * t + static_cast<double>(k));
        } else {
            pk = cp.jumps.conv_tail(static_cast<int>(k), y - shift);
        }
        p += w[k] * pk;
    }
    return p;
}

double compound_poisson_density_deriv(const LevyModel& model, double t, double x, int m,
                                      double tail_cut) {
    const char* who = "oracles.compound_poisson_density";
    const auto& cp = need_cp(model, who);
    if (t <= 0.0) throw DomainError(who, "t must be positive");
    const bool has_bm = cp.sigma2 > 0.0;
    if (has_bm && cp.jumps.name != "normal")
        throw DomainError(who, "Brownian part requires normal jumps");
    const double shift = cp.drift * t;
    const auto w = poisson_weights(cp.lambda * t, tail_cut);
    double p = 0.0;
    for (size_t k = has_bm ? 0 : 1; k < w.size(); ++k) {
        double pk;
        const double var = cp.sigma2 * t + static_cast<double>(k);
        if (has_bm || cp.jumps.name == "normal") {
            const double sd = std::sqrt(var);
            pk = norm_pdf_deriv(m, (x - shift) / sd) / std::pow(sd, m + 1);
        } else if (m == 0 && cp.jumps.conv_pdf) {
            pk = cp.jumps.conv_pdf(static_cast<int>(k), x - shift);
        } else {
            throw DomainError(who, "no closed-form convolution derivatives for this jump law");
        }
        p += w[k] * pk;
    }
    return p;
}

double expectation(const LevyModel& model, double t, const std::function<double(double)>& g,
                   double g_support_radius) {
    const char* who = "oracles.expectation";
    if (t <= 0.0) throw DomainError(who, "t must be positive");
    quad::Options opt;
    opt.abs_tol = 1e-12;
    opt.rel_tol = 1e-10;
    if (model.cp) {
        const auto& cp = *model.cp;
        const bool has_bm = cp.sigma2 > 0.0;
        const double shift = cp.drift * t;
        const auto w = poisson_weights(cp.lambda * t, 1e-15);
        double e = has_bm ? 0.0 : w[0] * g(shift);
        for (size_t k = has_bm ? 0 : 1; k < w.size(); ++k) {
            double ek;
            const double var = cp.sigma2 * t + static_cast<double>(k);
            if (has_bm || cp.jumps.name == "normal") {
                const double sd = std::sqrt(var);
                auto f = [&](double z) { return g(shift + sd * z) * norm_pdf(z); };
                ek = quad::integrate(f, -12.0, 12.0, opt).value;
            } else {
                auto pdf = cp.jumps.conv_pdf;
                if (!pdf) throw DomainError(who, "jump law lacks convolution densities");
                auto f = [&, k](double z) { return g(z) * pdf(static_cast<int>(k), z - shift); };
                // support of a k-fold sum grows linearly; uniform laws are compact
                const double lo = shift - 2.0 * static_cast<double>(k) - 2.0;
                const double hi = shift + 2.0 * static_cast<double>(k) + 2.0;
                ek = quad::integrate(f, lo, hi, opt).value;
            }
            e += w[k] * ek;
        }
        return e;
    }
    // Generic route: quadrature against the inversion density.
    const double R = g_support_radius > 0.0 ? g_support_radius : 40.0;
    auto f = [&](double x) { return g(x) * density_by_inversion(model, t, x, 0); };
    quad::Options gopt;
    gopt.abs_tol = 1e-9;
    gopt.rel_tol = 1e-8;
    gopt.max_intervals = 600;
    return quad::integrate(f, -R, R, gopt).value;
}

ModelPtr make_small_jump_model(ModelPtr model, const TruncationScheme& scheme) {
    auto m = std::make_shared<LevyModel>();
    const double eps = scheme.eps;
    ModelPtr base = model;
    m->kind = base->kind;
    m->label = base->label + "^eps";
    m->sigma2 = base->sigma2;
    m->b = scheme.b_eps;
    m->symmetric = base->symmetric;
    m->sing = base->sing;
    // capture by value: the scheme may outlive differently
    auto ceps = [eps](double x) {
        const double ax = std::abs(x);
        if (ax <= 0.5 * eps) return 1.0;
        if (ax >= eps) return 0.0;
        return 1.0 - bump::H((ax - 0.5 * eps) / (0.5 * eps));
    };
    m->levy_density = [base, ceps](double x) { return ceps(x) * base->s(x); };
    const double beps = scheme.b_eps;
    const double sig2 = base->sigma2;
    m->char_exponent = [base, ceps, beps, sig2, eps](double u) {
        quad::Options opt;
        opt.abs_tol = 1e-13;
        opt.rel_tol = 1e-11;
        auto fre = [&](double x) { return -2.0 * sqr(std::sin(0.5 * u * x)) * ceps(x) * base->s(x); };
        auto fim = [&](double x) {
            const double w = u * x;
            double sm;
            if (std::abs(w) > 1e-3) {
                sm = std::sin(w) - w;
            } else {
                const double w2 = w * w;
                sm = -w * w2 / 6.0 * (1.0 - w2 / 20.0 * (1.0 - w2 / 42.0));
            }
            return sm * ceps(x) * base->s(x);
        };
        std::vector<double> pts{-eps, -0.5 * eps, 0.0, 0.5 * eps, eps};
        const Cx jumps(quad::integrate(fre, pts, opt).value, quad::integrate(fim, pts, opt).value);
        return Cx(-0.5 * sig2 * u * u, beps * u) + jumps;
    };
    m->tail_pos_fn = [base, ceps, eps](double a) {
        if (a >= eps) return 0.0;
        quad::Options opt;
        opt.abs_tol = 1e-13;
        auto f = [&](double x) { return ceps(x) * base->s(x); };
        return quad::integrate(f, std::max(a, 1e-300), eps, opt).value;
    };
    m->tail_neg_fn = [base, ceps, eps](double a) {
        if (a >= eps) return 0.0;
        quad::Options opt;
        opt.abs_tol = 1e-13;
        auto f = [&](double x) { return ceps(-x) * base->s(-x); };
        return quad::integrate(f, std::max(a, 1e-300), eps, opt).value;
    };
    return m;
}

TailEstimateReport check_tail_estimate(ModelPtr model, const TruncationScheme& scheme, double a,
                                       double y, double t, double y0) {
    const char* who = "oracles.check_tail_estimate";
    if (!(a > 0.0 && a < 1.0 / scheme.eps))
        throw DomainError(who, "need 0 < a < 1/eps");
    if (y < scheme.eps) throw DomainError(who, "need y >= eps for the small-jump tail bound");
    if (!(t > 0.0 && t < y / y0)) throw DomainError(who, "need 0 < t < y/y0");
    ModelPtr small = make_small_jump_model(model, scheme);
    const double upper = tail_by_gil_pelaez(*small, t, y);
    const double lower = tail_by_gil_pelaez(*small, t, -y);
    TailEstimateReport rep;
    rep.lhs = upper + (1.0 - lower);  // P(X >= y) + P(X <= -y)
    rep.rhs = std::exp(a * y0 * std::log(y0)) * std::exp(a * y - a * y * std::log(y)) *
              std::pow(t, y * a);
    rep.margin = rep.rhs - rep.lhs;
    rep.pass = rep.lhs <= rep.rhs;
    return rep;
}

}  // namespace levex
