#include <cmath>

#include "levex/truncation.hpp"

// T_k(z) = mass of {u_1 + ... + u_k >= z} under the k-fold product of
// sbar_eps.  Heavy tails are never truncated: outside [-eps, eps] the
// integrals run against the model's exact tail functions through the
// substitution u = a + t/(1-t), and the pair tail T_2 uses the exact split
//   T_2(z) = 2 int_{u < z/2} sbar(u) T_1(z - u) du + T_1(z/2)^2,
// whose inner arguments stay in the closed-form region z - u >= z/2.

namespace levex {

namespace {

double lambda_pow(double lambda, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= lambda;
    return p;
}

}  // namespace

quad::Result TruncationScheme::conv_tail(int k, double z) const {
    if (k < 1 || k > 3)
        throw DomainError("truncation.conv_tail", "convolution tail supports k = 1..3");
    return conv_tail_oriented(k, z, false);
}

quad::Result TruncationScheme::conv_tail_oriented(int k, double z, bool refl) const {
    if (z < 0.0) {
        quad::Result r = conv_tail_oriented(k, -z, !refl);
        const double lk = lambda_pow(lambda_eps, k);
        return {lk - r.value, r.error + 1e-15 * lk, r.evals};
    }
    if (k == 1) {
        const double v = sbar_tail(z, refl);
        return {v, 1e-13 * std::max(1.0, lambda_eps), 1};
    }
    if (k == 2) return conv_tail2_pos(z, refl);
    return conv_tail3_pos(z, refl);
}

quad::Result TruncationScheme::conv_tail2_pos(double z, bool refl) const {
    auto sb = [this, refl](double u) { return sbar(refl ? -u : u); };
    auto t1 = [this, refl](double w) { return sbar_tail(w, refl); };
    const double scale = std::max(1.0, lambda_eps * lambda_eps);
    quad::Options opt;
    opt.abs_tol = 1e-12 * scale;
    opt.rel_tol = 1e-11;
    opt.max_intervals = 6000;

    quad::Result total;
    // core: u in [-eps, min(z/2, eps)]
    const double core_hi = std::min(0.5 * z, eps);
    if (core_hi > -eps) {
        std::vector<double> pts{-eps, -0.75 * eps, -0.5 * eps, core_hi};
        for (double p : {0.5 * eps, 0.75 * eps, z - eps, z - 0.5 * eps, z + 0.5 * eps, z + eps})
            if (p > -eps && p < core_hi) pts.push_back(p);
        auto f = [&](double u) { return sb(u) * t1(z - u); };
        total += quad::integrate(f, pts, opt);
    }
    // mid: u in [eps, z/2] (only when z > 2 eps); sbar = s there, T1 closed
    if (0.5 * z > eps) {
        auto f = [&](double u) { return sb(u) * t1(z - u); };
        total += quad::integrate(f, eps, 0.5 * z, opt);
    }
    // left tail: u in (-inf, -eps]; T1(z - u) = T1(z + v), v >= eps
    {
        auto f = [&](double v) { return sb(-v) * t1(z + v); };
        total += quad::integrate_right_tail(f, eps, opt);
    }
    total = 2.0 * total;
    const double t1h = t1(0.5 * z);
    total.value += t1h * t1h;
    total.error += 2.0 * t1h * 1e-13 * std::max(1.0, lambda_eps);
    return total;
}

quad::Result TruncationScheme::conv_tail3_pos(double z, bool refl) const {
    auto sb = [this, refl](double u) { return sbar(refl ? -u : u); };
    const double scale = std::max(1.0, lambda_pow(lambda_eps, 3));
    quad::Options opt;
    opt.abs_tol = 1e-11 * scale;
    opt.rel_tol = 1e-10;
    opt.max_intervals = 2000;

    quad::Result total;
    double inner_err = 0.0;
    auto t2 = [&](double w) {
        quad::Result r = conv_tail_oriented(2, w, refl);
        inner_err = std::max(inner_err, r.error);
        return r.value;
    };
    // core band
    {
        auto f = [&](double u) { return sb(u) * t2(z - u); };
        total += quad::integrate(
            f, {-eps, -0.75 * eps, -0.5 * eps, 0.5 * eps, 0.75 * eps, eps}, opt);
    }
    // right: u >= eps
    {
        auto f = [&](double u) { return sb(u) * t2(z - u); };
        total += quad::integrate_right_tail(f, eps, opt);
    }
    // left: u <= -eps
    {
        auto f = [&](double v) { return sb(-v) * t2(z + v); };
        total += quad::integrate_right_tail(f, eps, opt);
    }
    total.error += inner_err * lambda_eps;  // inner T2 error times outer mass
    return total;
}

}  // namespace levex
