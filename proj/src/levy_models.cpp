#include "levex/levy_models.hpp"

#include <cmath>

#include "levex/oscillatory.hpp"
#include "levex/quad.hpp"
#include "levex/special.hpp"

namespace levex {

namespace {

double falling_product(double alpha, int i) {
    // alpha (alpha-1) ... (alpha-i+1)
    double p = 1.0;
    for (int j = 0; j < i; ++j) p *= alpha - j;
    return p;
}

// Central-difference derivative of order k with one Richardson step.
double fd_deriv(const std::function<double(double)>& f, int k, double x) {
    const double h = std::max(1e-5, 1e-3 * std::abs(x));
    auto stencil = [&](double step) {
        // k-th central difference: sum_j (-1)^j C(k,j) f(x + (k/2 - j) step)
        double s = 0.0, binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            s += ((j % 2 == 0) ? 1.0 : -1.0) * binom * f(x + (0.5 * k - j) * step);
            binom *= static_cast<double>(k - j) / (j + 1);
        }
        return s / std::pow(step, k);
    };
    const double d1 = stencil(h), d2 = stencil(0.5 * h);
    return (4.0 * d2 - d1) / 3.0;  // O(h^4)
}

// Order-6 central stencil for complex-valued gamma derivatives (fallback
// when no analytic form is attached).
Cx fd_gamma_deriv(const std::function<Cx(double)>& g, int i, double u) {
    const double h = std::max(1e-3, 1e-4 * std::abs(u)) * std::pow(2.0, i - 1);
    static const double c1[] = {-1.0 / 60, 3.0 / 20, -3.0 / 4, 0.0, 3.0 / 4, -3.0 / 20, 1.0 / 60};
    static const double c2[] = {1.0 / 90, -3.0 / 20, 3.0 / 2, -49.0 / 18, 3.0 / 2, -3.0 / 20, 1.0 / 90};
    if (i == 1 || i == 2) {
        const double* c = (i == 1) ? c1 : c2;
        Cx s(0, 0);
        for (int j = -3; j <= 3; ++j) s += c[j + 3] * g(u + j * h);
        return s / std::pow(h, i);
    }
    // Higher orders: recurse on the (i-2)-nd derivative of gamma''.
    auto g2 = [&g, h](double v) {
        Cx s(0, 0);
        for (int j = -3; j <= 3; ++j) s += c2[j + 3] * g(v + j * h);
        return s / (h * h);
    };
    return fd_gamma_deriv(g2, i - 2, u);
}

void validate_model(const LevyModel& m, const std::string& who) {
    if (m.sigma2 < 0) throw DomainError(who, "sigma2 must be nonnegative");
    if (!m.has_jumps()) return;
    // s >= 0 on a probe grid; int_{|x|<=1} x^2 s < inf by quadrature.
    for (double x : {-2.0, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0}) {
        if (m.s(x) < 0) throw DomainError(who, "levy density must be nonnegative");
    }
    auto f = [&m](double x) { return x * x * m.s(x); };
    quad::Options opt;
    opt.abs_tol = 1e-8;
    opt.rel_tol = 1e-8;
    quad::Result r = quad::integrate(f, {-1.0, -0.5, 0.0, 0.5, 1.0}, opt);
    if (!std::isfinite(r.value)) throw DomainError(who, "x^2 s(x) not integrable near 0");
}

}  // namespace

double LevyModel::s_deriv(int k, double x) const {
    if (k == 0) return levy_density(x);
    if (levy_density_deriv_fn) return levy_density_deriv_fn(k, x);
    return fd_deriv(levy_density, k, x);
}

Cx LevyModel::gamma_deriv(int i, double u) const {
    if (i == 0) return char_exponent(u);
    if (char_exponent_deriv_fn) return char_exponent_deriv_fn(i, u);
    return fd_gamma_deriv(char_exponent, i, u);
}

double stable_exponent_constant(double alpha) {
    // 2 int_0^1 (1-cos v) v^{-a-1} dv  +  2/alpha  -  2 int_1^inf cos(v) v^{-a-1} dv
    quad::Options opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 1e-13;
    // 1-cos v as 2 sin^2(v/2): no cancellation at small v
    auto near = [alpha](double v) {
        return 2.0 * sqr(std::sin(0.5 * v)) * std::pow(v, -alpha - 1.0);
    };
    const double head = quad::integrate(near, 0.0, 1.0, opt).value;
    auto osc = [alpha](double v) { return Cx(std::pow(v, -alpha - 1.0), 0.0); };
    const Cx tail = integrate_oscillatory_tail(osc, 1.0, 1.0).value;  // int_1^inf e^{-iv} v^{-a-1}
    return 2.0 * (head + 1.0 / alpha - tail.real());
}

namespace {

ModelPtr make_stable_impl(double alpha, double density_coef, const std::string& label) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw DomainError("levy_models.make_symmetric_stable", "alpha must lie in (0,2)");
    auto m = std::make_shared<LevyModel>();
    m->kind = ModelKind::SymmetricStable;
    m->label = label;
    m->symmetric = true;
    const double c = stable_exponent_constant(alpha);
    const double A = density_coef;
    const double scale = A * c;  // psi_t(u) = exp(-scale * t * |u|^alpha)
    m->stable = StableData{alpha, scale, A};
    m->sing = {true, alpha, A, A};
    m->levy_density = [A, alpha](double x) { return A * std::pow(std::abs(x), -alpha - 1.0); };
    m->levy_density_deriv_fn = [A, alpha](int k, double x) {
        const double ax = std::abs(x);
        double v = A * falling_product(-alpha - 1.0, k) * std::pow(ax, -alpha - 1.0 - k);
        if (x < 0 && k % 2 == 1) v = -v;
        return v;
    };
    m->char_exponent = [scale, alpha](double u) {
        return Cx(-scale * std::pow(std::abs(u), alpha), 0.0);
    };
    m->char_exponent_deriv_fn = [scale, alpha](int i, double u) {
        const double au = std::abs(u);
        double v = -scale * falling_product(alpha, i) * std::pow(au, alpha - i);
        if (u < 0 && i % 2 == 1) v = -v;
        return Cx(v, 0.0);
    };
    m->tail_pos_fn = [A, alpha](double a) { return A * std::pow(a, -alpha) / alpha; };
    m->tail_neg_fn = m->tail_pos_fn;
    validate_model(*m, "levy_models.make_symmetric_stable");
    return m;
}

}  // namespace

ModelPtr make_symmetric_stable(double alpha) {
    return make_stable_impl(alpha, 1.0, "stable(alpha=" + std::to_string(alpha) + ")");
}

ModelPtr make_symmetric_stable_unit(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw DomainError("levy_models.make_symmetric_stable", "alpha must lie in (0,2)");
    const double c = stable_exponent_constant(alpha);
    return make_stable_impl(alpha, 1.0 / c, "stable_unit(alpha=" + std::to_string(alpha) + ")");
}

ModelPtr make_cgmy(double C, double G, double M, double alpha) {
    const std::string who = "levy_models.make_cgmy";
    if (C <= 0 || G <= 0 || M <= 0) throw DomainError(who, "C, G, M must be positive");
    if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError(who, "alpha must lie in (0,2)");
    if (alpha == 1.0) throw DomainError(who, "alpha = 1 excluded (Gamma(-alpha) pole)");
    auto m = std::make_shared<LevyModel>();
    m->kind = ModelKind::Cgmy;
    m->label = "cgmy";
    m->cgmy = CgmyData{C, G, M, alpha};
    m->symmetric = (G == M);
    m->sing = {true, alpha, C, C};
    m->levy_density = [C, G, M, alpha](double x) {
        return x > 0 ? C * std::exp(-M * x) * std::pow(x, -alpha - 1.0)
                     : C * std::exp(G * x) * std::pow(-x, -alpha - 1.0);
    };
    m->levy_density_deriv_fn = [C, G, M, alpha](int k, double x) {
        // Leibniz on exp(-M x) * x^{-alpha-1} (and the mirrored branch).
        const double ax = std::abs(x);
        const double rate = x > 0 ? M : G;
        double sum = 0.0, binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            const double expd = std::pow(-rate, j);  // d^j/dax^j e^{-rate*ax}
            const double powd = falling_product(-alpha - 1.0, k - j) *
                                std::pow(ax, -alpha - 1.0 - (k - j));
            sum += binom * expd * powd;
            binom *= static_cast<double>(k - j) / (j + 1);
        }
        sum *= C * std::exp(-rate * ax);
        if (x < 0 && k % 2 == 1) sum = -sum;  // d/dx = -d/dax on the left branch
        return sum;
    };
    const double gam = std::tgamma(-alpha);
    m->char_exponent = [C, G, M, alpha, gam](double u) {
        const Cx mi(M, -u), gi(G, u);
        return C * gam *
               (std::pow(mi, alpha) - std::pow(M, alpha) + std::pow(gi, alpha) -
                std::pow(G, alpha));
    };
    m->char_exponent_deriv_fn = [C, G, M, alpha, gam](int i, double u) {
        const Cx mi(M, -u), gi(G, u);
        const double fp = falling_product(alpha, i);
        const Cx di = std::pow(Cx(0, -1), i), pi = std::pow(Cx(0, 1), i);
        return C * gam * fp * (di * std::pow(mi, alpha - i) + pi * std::pow(gi, alpha - i));
    };
    m->tail_pos_fn = [C, M, alpha](double a) {
        quad::Options opt;
        opt.abs_tol = 1e-14;
        opt.rel_tol = 1e-12;
        const double hi = a + 60.0 / M;  // e^{-M x} below 1e-26 past here
        auto f = [C, M, alpha](double x) { return C * std::exp(-M * x) * std::pow(x, -alpha - 1.0); };
        return quad::integrate(f, a, hi, opt).value;
    };
    m->tail_neg_fn = [C, G, alpha](double a) {
        quad::Options opt;
        opt.abs_tol = 1e-14;
        opt.rel_tol = 1e-12;
        const double hi = a + 60.0 / G;
        auto f = [C, G, alpha](double x) { return C * std::exp(-G * x) * std::pow(x, -alpha - 1.0); };
        return quad::integrate(f, a, hi, opt).value;
    };
    // Triplet drift consistent with the Madan characteristic exponent:
    // b = -i gamma'(0) - int_{|x|>1} x s(x) dx.
    const double gprime_im = (C * gam * falling_product(alpha, 1) *
                              (std::pow(M, alpha - 1.0) * -1.0 + std::pow(G, alpha - 1.0)));
    quad::Options topt;
    topt.abs_tol = 1e-13;
    auto xpos = [&m](double x) { return x * m->levy_density(x); };
    const double big_pos = quad::integrate(xpos, 1.0, 1.0 + 60.0 / M, topt).value;
    const double big_neg = quad::integrate(xpos, -(1.0 + 60.0 / G), -1.0, topt).value;
    m->b = gprime_im - (big_pos + big_neg);
    validate_model(*m, who);
    return m;
}

ModelPtr make_compound_poisson(double lambda, JumpDensity jumps, double drift, double sigma2) {
    const std::string who = "levy_models.make_compound_poisson";
    if (lambda <= 0) throw DomainError(who, "lambda must be positive");
    if (sigma2 < 0) throw DomainError(who, "sigma2 must be nonnegative");
    auto m = std::make_shared<LevyModel>();
    m->kind = ModelKind::CompoundPoisson;
    m->label = "compound_poisson(" + jumps.name + ")";
    m->sigma2 = sigma2;
    auto pdf = jumps.pdf;
    m->levy_density = [lambda, pdf](double x) { return lambda * pdf(x); };
    if (jumps.pdf_deriv) {
        auto pd = jumps.pdf_deriv;
        m->levy_density_deriv_fn = [lambda, pd](int k, double x) { return lambda * pd(k, x); };
    }
    auto jcf = jumps.cf;
    m->char_exponent = [lambda, drift, sigma2, jcf](double u) {
        return Cx(0, drift * u) - 0.5 * sigma2 * u * u + lambda * (jcf(u) - 1.0);
    };
    auto cdf = jumps.cdf;
    m->tail_pos_fn = [lambda, cdf](double a) { return lambda * (1.0 - cdf(a)); };
    m->tail_neg_fn = [lambda, cdf](double a) { return lambda * cdf(-a); };
    // Triplet drift: b = drift + int_{|x|<=1} x nu(dx).
    quad::Options opt;
    opt.abs_tol = 1e-13;
    auto xs = [lambda, pdf](double x) { return lambda * x * pdf(x); };
    const double comp = quad::integrate(xs, {-1.0, 0.0, 1.0}, opt).value;
    m->b = drift + comp;
    m->symmetric = (sigma2 >= 0) && std::abs(comp) < 1e-12 && drift == 0.0 &&
                   std::abs(pdf(0.3) - pdf(-0.3)) < 1e-14;
    m->cp = CompoundPoissonData{lambda, std::move(jumps), drift, sigma2};
    validate_model(*m, who);
    return m;
}

ModelPtr make_brownian(double sigma2, double b) {
    auto m = std::make_shared<LevyModel>();
    m->kind = ModelKind::BrownianDrift;
    m->label = "brownian";
    m->sigma2 = sigma2;
    m->b = b;
    m->symmetric = (b == 0.0);
    m->levy_density = [](double) { return 0.0; };
    m->levy_density_deriv_fn = [](int, double) { return 0.0; };
    m->char_exponent = [sigma2, b](double u) { return Cx(-0.5 * sigma2 * u * u, b * u); };
    m->char_exponent_deriv_fn = [sigma2, b](int i, double u) -> Cx {
        if (i == 1) return Cx(-sigma2 * u, b);
        if (i == 2) return Cx(-sigma2, 0);
        return Cx(0, 0);
    };
    m->tail_pos_fn = [](double) { return 0.0; };
    m->tail_neg_fn = [](double) { return 0.0; };
    return m;
}

ModelPtr make_sum(std::vector<ModelPtr> components) {
    if (components.empty()) throw DomainError("levy_models.make_sum", "empty component list");
    auto m = std::make_shared<LevyModel>();
    m->kind = ModelKind::Sum;
    m->label = "sum";
    m->components = components;
    for (const auto& c : components) {
        m->sigma2 += c->sigma2;
        m->b += c->b;
        if (c->sing.present) {
            if (!m->sing.present || c->sing.alpha > m->sing.alpha) {
                m->sing = c->sing;
            }
        }
    }
    m->symmetric = true;
    for (const auto& c : components) m->symmetric = m->symmetric && c->symmetric;
    auto comps = components;
    m->levy_density = [comps](double x) {
        double s = 0;
        for (const auto& c : comps) s += c->s(x);
        return s;
    };
    m->levy_density_deriv_fn = [comps](int k, double x) {
        double s = 0;
        for (const auto& c : comps) s += c->s_deriv(k, x);
        return s;
    };
    m->char_exponent = [comps](double u) {
        Cx s(0, 0);
        for (const auto& c : comps) s += c->gamma(u);
        return s;
    };
    m->char_exponent_deriv_fn = [comps](int i, double u) {
        Cx s(0, 0);
        for (const auto& c : comps) s += c->gamma_deriv(i, u);
        return s;
    };
    m->tail_pos_fn = [comps](double a) {
        double s = 0;
        for (const auto& c : comps) s += c->tail_pos(a);
        return s;
    };
    m->tail_neg_fn = [comps](double a) {
        double s = 0;
        for (const auto& c : comps) s += c->tail_neg(a);
        return s;
    };
    return m;
}

JumpDensity normal_jumps() {
    JumpDensity j;
    j.name = "normal";
    j.smooth = true;
    j.pdf = [](double x) { return norm_pdf(x); };
    j.cdf = [](double x) { return norm_cdf(x); };
    j.conv_tail = [](int k, double y) {
        if (k == 0) return y <= 0.0 ? 1.0 : 0.0;
        return norm_tail(y, static_cast<double>(k));
    };
    j.conv_pdf = [](int k, double x) { return norm_pdf(x, static_cast<double>(k)); };
    j.pdf_deriv = [](int k, double x) { return norm_pdf_deriv(k, x); };
    j.cf = [](double u) { return Cx(std::exp(-0.5 * u * u), 0.0); };
    j.sample = [](Rng& rng) { return rng.normal(); };
    return j;
}

JumpDensity uniform_jumps(double a, double b) {
    if (!(a < b)) throw DomainError("levy_models.uniform_jumps", "need a < b");
    JumpDensity j;
    j.name = "uniform";
    j.smooth = false;
    const double w = b - a;
    j.pdf = [a, b, w](double x) { return (x >= a && x <= b) ? 1.0 / w : 0.0; };
    j.cdf = [a, b, w](double x) {
        if (x <= a) return 0.0;
        if (x >= b) return 1.0;
        return (x - a) / w;
    };
    j.conv_tail = [a, w](int k, double y) {
        if (k == 0) return y <= 0.0 ? 1.0 : 0.0;
        return irwin_hall_tail(k, (y - k * a) / w);
    };
    j.conv_pdf = [a, w](int k, double x) { return irwin_hall_pdf(k, (x - k * a) / w) / w; };
    j.cf = [a, b, w](double u) {
        if (std::abs(u) < 1e-8) {
            // series around 0 avoids 0/0
            const double m1 = 0.5 * (a + b);
            const double m2 = (b * b * b - a * a * a) / (3.0 * w);
            return Cx(1.0 - 0.5 * m2 * u * u, m1 * u);
        }
        const Cx iu(0.0, u);
        return (std::exp(iu * b) - std::exp(iu * a)) / (iu * w);
    };
    j.sample = [a, b](Rng& rng) { return rng.uniform(a, b); };
    return j;
}

Cx gamma_numeric(const LevyModel& model, double u) {
    Cx val(-0.5 * model.sigma2 * u * u, model.b * u);
    if (!model.has_jumps()) return val;
    quad::Options opt;
    opt.abs_tol = 1e-12;
    opt.rel_tol = 1e-10;
    opt.max_intervals = 20000;
    // |x| <= 1: (e^{iux} - 1 - iux) s(x), integrable at 0 (~ -u^2 x^2 s / 2).
    // Cancellation-free forms of cos(w)-1 and sin(w)-w.
    auto sin_minus = [](double w) {
        if (std::abs(w) > 1e-3) return std::sin(w) - w;
        const double w2 = w * w;
        return -w * w2 / 6.0 * (1.0 - w2 / 20.0 * (1.0 - w2 / 42.0));
    };
    auto fre = [&](double x) { return -2.0 * sqr(std::sin(0.5 * u * x)) * model.s(x); };
    auto fim = [&, sin_minus](double x) { return sin_minus(u * x) * model.s(x); };
    std::vector<double> pts{-1.0, -0.5, -0.25, -0.1, -0.01, 0.0, 0.01, 0.1, 0.25, 0.5, 1.0};
    val += Cx(quad::integrate(fre, pts, opt).value, quad::integrate(fim, pts, opt).value);
    // |x| > 1: (e^{iux} - 1) s(x); the oscillatory part via Levin panels.
    auto env_pos = [&](double x) { return Cx(model.s(x), 0.0); };
    auto env_neg = [&](double x) { return Cx(model.s(-x), 0.0); };
    // int_1^inf e^{iux} s = conj-free: e^{iux} = e^{-i(-u)x}
    val += integrate_oscillatory_tail(env_pos, -u, 1.0).value - model.tail_pos(1.0);
    val += integrate_oscillatory_tail(env_neg, u, 1.0).value - model.tail_neg(1.0);
    return val;
}

}  // namespace levex
