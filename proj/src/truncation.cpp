#include "levex/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "levex/jets.hpp"

namespace levex {

namespace bump {

namespace {

double bump_raw(double v) {
    if (v <= 0.0 || v >= 1.0) return 0.0;
    return std::exp(-1.0 / (v * (1.0 - v)));
}

double bump_norm() {
    static const double I = quad::integrate([](double v) { return bump_raw(v); }, 0.0, 1.0,
                                            {1e-15, 1e-15, 8000, false})
                                .value;
    return I;
}

const Cheb& H_cheb() {
    static const Cheb fit = [] {
        const double I = bump_norm();
        auto H_exact = [I](double v) {
            if (v <= 0.0) return 0.0;
            if (v >= 1.0) return 1.0;
            return quad::integrate([](double w) { return bump_raw(w); }, 0.0, v,
                                   {1e-15, 1e-15, 8000, false})
                       .value /
                   I;
        };
        return Cheb::fit(H_exact, 0.0, 1.0, 60);
    }();
    return fit;
}

}  // namespace

double H(double v) {
    if (v <= 0.0) return 0.0;
    if (v >= 1.0) return 1.0;
    return H_cheb().eval(v);
}

double H_deriv(int k, double v) {
    if (k == 0) return H(v);
    if (v <= 0.0 || v >= 1.0) return 0.0;
    // H' = bump/I; higher derivatives from the jet of exp(-1/(v(1-v))).
    Jet<5> x = Jet<5>::variable(v);
    Jet<5> g = exp(Jet<5>::constant(-1.0) * (x * (1.0 - x)).inverse());
    return g.deriv(k - 1) / bump_norm();
}

}  // namespace bump

double TruncationScheme::c_eps(double x) const {
    const double ax = std::abs(x);
    if (ax <= 0.5 * eps) return 1.0;
    if (ax >= eps) return 0.0;
    return 1.0 - bump::H((ax - 0.5 * eps) / (0.5 * eps));
}

double TruncationScheme::c_eps_deriv(int k, double x) const {
    if (k == 0) return c_eps(x);
    const double ax = std::abs(x);
    if (ax <= 0.5 * eps || ax >= eps) return 0.0;
    const double scale = 2.0 / eps;
    double d = -bump::H_deriv(k, (ax - 0.5 * eps) / (0.5 * eps)) * std::pow(scale, k);
    if (x < 0 && k % 2 == 1) d = -d;  // even function
    return d;
}

double TruncationScheme::cbar_s_deriv(int m, double x) const {
    const double ax = std::abs(x);
    if (ax <= 0.5 * eps) return 0.0;
    if (ax >= eps) return model->s_deriv(m, x);
    double sum = 0.0, binom = 1.0;
    for (int j = 0; j <= m; ++j) {
        const double cb = (j == 0) ? (1.0 - c_eps(x)) : -c_eps_deriv(j, x);
        sum += binom * cb * model->s_deriv(m - j, x);
        binom *= static_cast<double>(m - j) / (j + 1);
    }
    return sum;
}

const std::vector<double>& TruncationScheme::conv_power(int i) const {
    if (i < 1 || i > static_cast<int>(conv_.size()))
        throw DomainError("truncation.convolve_power",
                          "convolution power " + std::to_string(i) + " not tabulated");
    return conv_[i - 1];
}

std::vector<double> TruncationScheme::grid_points() const {
    const size_t n = conv_.empty() ? 0 : conv_[0].size();
    std::vector<double> x(n);
    for (size_t j = 0; j < n; ++j) x[j] = -grid_R + static_cast<double>(j) * grid_h;
    return x;
}

double TruncationScheme::conv_power_at(int i, double x) const {
    const auto& row = conv_power(i);
    const double lo = -grid_R + i * eps, hi = grid_R - i * eps;
    if (x < lo || x > hi)
        throw DomainError("truncation.convolve_power",
                          "requested point outside the reliable window [-R+i*eps, R-i*eps]");
    const double pos = (x + grid_R) / grid_h;
    const auto j = static_cast<size_t>(pos);
    if (j + 1 >= row.size()) return row.back();
    const double frac = pos - static_cast<double>(j);
    return row[j] * (1.0 - frac) + row[j + 1] * frac;
}

double TruncationScheme::sbar_tail(double z, bool reflected) const {
    auto tail_p = [&](double a) {
        return reflected ? model->tail_neg(a) : model->tail_pos(a);
    };
    auto tail_n = [&](double a) {
        return reflected ? model->tail_pos(a) : model->tail_neg(a);
    };
    if (z >= eps) return tail_p(z);
    if (z <= -eps) return lambda_eps - tail_n(-z);
    const auto& band = reflected ? band_tail_reflected_ : band_tail_;
    return band.eval(z) + tail_p(eps);
}

double TruncationScheme::kappa(double r) const {
    const double ar = std::abs(r);
    if (ar >= eps) return 0.0;
    if (ar < kappa_delta_) {
        // Only the integrated moments below kappa_delta_ are used by
        // small_jump_fold; point values here are not needed.
        throw NumericError("truncation.kappa", "kernel evaluated below the stub cutoff");
    }
    return (r > 0) ? kappa_pos_.eval(ar) : kappa_neg_.eval(ar);
}

double TruncationScheme::band_integral(const std::function<double(double)>& f, int side) const {
    // int_0^eps f(w) c_eps(w) s(w) dw on the chosen side, with the power
    // substitution w = q^{1/(2-alpha)} when s has a stable-like singularity.
    const double sgn = side >= 0 ? 1.0 : -1.0;
    quad::Options opt;
    opt.abs_tol = 1e-13;
    opt.rel_tol = 1e-12;
    opt.max_intervals = 8000;
    if (model->sing.present && model->sing.alpha > 0.0) {
        const double p = 1.0 / (2.0 - model->sing.alpha);
        const double qmax = std::pow(eps, 1.0 / p);
        auto g = [&](double q) {
            const double w = std::pow(q, p);
            const double x = sgn * w;
            return f(x) * c_eps(x) * model->s(x) * p * std::pow(q, p - 1.0);
        };
        return quad::integrate(g, 0.0, qmax, opt).value;
    }
    auto g = [&](double w) {
        const double x = sgn * w;
        return f(x) * c_eps(x) * model->s(x);
    };
    return quad::integrate(g, 0.0, eps, opt).value;
}

quad::Result TruncationScheme::small_jump_fold(const std::function<double(double)>& g,
                                               double v) const {
    // K[g](v) = int g(v - r) kappa(r) dr over [-eps, eps]; kappa carries the
    // (w, beta) weight int (1-beta) dbeta w^2 c_eps s(w) dw collapsed to one
    // variable.  The |r| < delta stub uses the moments M0, M1.
    quad::Options opt;
    opt.abs_tol = 1e-12 * std::max(1.0, std::abs(g(v))) * std::max(1.0, m2c);
    opt.rel_tol = 1e-11;
    opt.max_intervals = 6000;
    const double d = kappa_delta_;
    quad::Result r;
    auto fp = [&](double t) { return g(v - t) * kappa_pos_.eval(t); };
    auto fn = [&](double t) { return g(v + t) * kappa_neg_.eval(t); };
    r += quad::integrate(fp, {d, 0.25 * eps, 0.5 * eps, 0.75 * eps, eps}, opt);
    r += quad::integrate(fn, {d, 0.25 * eps, 0.5 * eps, 0.75 * eps, eps}, opt);
    // Stub: int_{|r|<delta} g(v-r) kappa(r) dr ~ g(v) M0 -/+ g'(v) M1.
    const double h = std::max(1e-6, 1e-4 * std::abs(v));
    const double gp = (g(v + h) - g(v - h)) / (2.0 * h);
    r.value += g(v) * (kappa_m0_pos_ + kappa_m0_neg_) - gp * (kappa_m1_pos_ - kappa_m1_neg_);
    r.error += std::abs(gp) * (kappa_m1_pos_ + kappa_m1_neg_) * 1e-4 +
               (kappa_m0_pos_ + kappa_m0_neg_) * std::abs(g(v)) * 1e-10;
    return r;
}

namespace {

// FFT-based or direct discrete convolution of sampled rows, trapezoid scale h.
void fft(std::vector<std::complex<double>>& a, bool inverse) {
    const size_t n = a.size();
    if (n <= 1) return;
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1 : -1);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k], t = w * a[i + k + len / 2];
                a[i + k] = u + t;
                a[i + k + len / 2] = u - t;
                w *= wl;
            }
        }
    }
    if (inverse)
        for (auto& z : a) z /= static_cast<double>(n);
}

std::vector<double> convolve(const std::vector<double>& f, const std::vector<double>& g,
                             double h) {
    const size_t n = f.size();
    std::vector<double> out(n, 0.0);
    // center index of x = 0 on the symmetric grid (n odd)
    const auto cc = static_cast<long>((n - 1) / 2);
    if (n <= 8192) {
        const long c = cc;
        for (size_t j = 0; j < n; ++j) {
            double s = 0.0;
            const long lo = std::max<long>(0, static_cast<long>(j) - static_cast<long>(n) + 1 + c);
            const long hi = std::min<long>(static_cast<long>(n) - 1, static_cast<long>(j) + c);
            for (long k = lo; k <= hi; ++k) {
                s += f[static_cast<size_t>(k)] *
                     g[static_cast<size_t>(static_cast<long>(j) - k + c)];
            }
            out[j] = s * h;
        }
        return out;
    }
    size_t m = 1;
    while (m < 2 * n) m <<= 1;
    std::vector<std::complex<double>> F(m), G(m);
    for (size_t i = 0; i < n; ++i) {
        F[i] = f[i];
        G[i] = g[i];
    }
    fft(F, false);
    fft(G, false);
    for (size_t i = 0; i < m; ++i) F[i] *= G[i];
    fft(F, true);
    for (size_t j = 0; j < n; ++j) out[j] = F[j + static_cast<size_t>(cc)].real() * h;
    return out;
}

}  // namespace

TruncationScheme build_truncation(ModelPtr model, double eps, int order, GridSpec grid) {
    const std::string who = "truncation.build_truncation";
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError(who, "need 0 < eps < 1");
    if (!model->has_jumps()) throw DomainError(who, "model has no jump component");
    TruncationScheme sc;
    sc.model = model;
    sc.eps = eps;
    sc.order = std::max(1, order);
    sc.grid_R = grid.R > 0.0 ? grid.R : 8.0;
    sc.grid_h = grid.h > 0.0 ? grid.h : eps / 64.0;
    if (sc.grid_h > eps / 16.0) throw DomainError(who, "grid too coarse: need h <= eps/16");

    // Band tail interpolants: z -> int_z^eps sbar(u) du on [-eps, eps].
    auto band_tail_fn = [&sc](double z, bool refl) {
        auto f = [&sc, refl](double u) { return sc.sbar(refl ? -u : u); };
        quad::Options opt;
        opt.abs_tol = 1e-14;
        opt.rel_tol = 1e-13;
        std::vector<double> pts{z, sc.eps};
        for (double p : {-sc.eps, -0.75 * sc.eps, -0.5 * sc.eps, 0.5 * sc.eps, 0.75 * sc.eps})
            if (p > z) pts.push_back(p);
        return quad::integrate(f, pts, opt).value;
    };
    sc.band_tail_ = PiecewiseCheb::build([&](double z) { return band_tail_fn(z, false); },
                                         -eps, eps, 1e-13, 20, 1e-9);
    sc.band_tail_reflected_ = PiecewiseCheb::build(
        [&](double z) { return band_tail_fn(z, true); }, -eps, eps, 1e-13, 20, 1e-9);

    // lambda_eps = int sbar = band mass + exact tails beyond the band.
    sc.lambda_eps = sc.band_tail_.eval(-eps) + model->tail_pos(eps) + model->tail_neg(eps);
    sc.b0 = -sc.lambda_eps;
    sc.b2 = 0.5 * model->sigma2;

    // b_eps = b - int_{|x|<=1} x sbar(x) dx (integrand vanishes on |x| < eps/2)
    {
        quad::Options opt;
        opt.abs_tol = 1e-13;
        opt.rel_tol = 1e-12;
        auto f = [&sc](double x) { return x * sc.sbar(x); };
        const double upper = std::max(eps, 1.0);
        quad::Result r = quad::integrate(
            f, {-upper, -eps, -0.75 * eps, -0.5 * eps, 0.5 * eps, 0.75 * eps, eps, upper}, opt);
        sc.b_eps = model->b - r.value;
        sc.b1 = sc.b_eps;
    }

    // Second moment of the small-jump measure.
    sc.m2c = sc.band_integral([](double w) { return w * w; }, +1) +
             sc.band_integral([](double w) { return w * w; }, -1);

    // Folding kernel kappa and its stub moments.
    sc.kappa_delta_ = 1e-5 * eps;
    auto kappa_fn = [&sc](double r, int side) {
        // int_r^eps (w - r) c_eps(+-w) s(+-w) dw
        const double sgn = side >= 0 ? 1.0 : -1.0;
        quad::Options opt;
        opt.abs_tol = 1e-15;
        opt.rel_tol = 1e-12;
        opt.max_intervals = 8000;
        auto g = [&](double w) {
            const double x = sgn * w;
            return (w - r) * sc.c_eps(x) * sc.model->s(x);
        };
        return quad::integrate(g, {r, std::min(2.0 * r, sc.eps), 0.5 * sc.eps, sc.eps}, opt)
            .value;
    };
    sc.kappa_pos_ = PiecewiseCheb::build([&](double r) { return kappa_fn(r, +1); },
                                         sc.kappa_delta_, eps, 1e-12, 20, 1e-7, true);
    sc.kappa_neg_ = PiecewiseCheb::build([&](double r) { return kappa_fn(r, -1); },
                                         sc.kappa_delta_, eps, 1e-12, 20, 1e-7, true);
    // Moments int_0^delta kappa(r) dr and int_0^delta r kappa(r) dr by Fubini:
    // int_0^eps c s(w) q(w) dw with q(w) = int_0^{min(w,delta)} (w-r) r^j dr.
    const double d = sc.kappa_delta_;
    auto q0 = [d](double w) {
        const double aw = std::abs(w);
        const double m = std::min(aw, d);
        return aw * m - 0.5 * m * m;
    };
    auto q1 = [d](double w) {
        const double aw = std::abs(w);
        const double m = std::min(aw, d);
        return aw * m * m / 2.0 - m * m * m / 3.0;
    };
    sc.kappa_m0_pos_ = sc.band_integral(q0, +1);
    sc.kappa_m0_neg_ = sc.band_integral(q0, -1);
    sc.kappa_m1_pos_ = sc.band_integral(q1, +1);
    sc.kappa_m1_neg_ = sc.band_integral(q1, -1);

    // Grid convolution powers on a symmetric grid (odd point count).
    const auto half = static_cast<size_t>(std::llround(sc.grid_R / sc.grid_h));
    sc.grid_h = sc.grid_R / static_cast<double>(half);
    const size_t n = 2 * half + 1;
    std::vector<double> base(n);
    for (size_t j = 0; j < n; ++j) {
        const double x = -sc.grid_R + static_cast<double>(j) * sc.grid_h;
        base[j] = sc.sbar(x);
    }
    sc.conv_.push_back(base);
    for (int i = 2; i <= sc.order; ++i)
        sc.conv_.push_back(convolve(sc.conv_.back(), base, sc.grid_h));

    return sc;
}

SchemePtr build_truncation_ptr(ModelPtr model, double eps, int order, GridSpec grid) {
    return std::make_shared<const TruncationScheme>(
        build_truncation(std::move(model), eps, order, grid));
}

}  // namespace levex
