#ifndef LEVEX_TRUNCATION_HPP
#define LEVEX_TRUNCATION_HPP

#include <memory>
#include <vector>

#include "levex/chebyshev.hpp"
#include "levex/levy_models.hpp"
#include "levex/quad.hpp"

namespace levex {

/// Smoothed step H: 0 on (-inf,0], 1 on [1,inf), C^inf monotone in between,
/// built from the bump exp(-1/(v(1-v))).
namespace bump {
double H(double v);
/// k-th derivative, k <= 5.
double H_deriv(int k, double v);
}  // namespace bump

struct GridSpec {
    double R = 0.0;  // 0 -> default max(8, 4*y_max)-style resolved at build
    double h = 0.0;  // 0 -> eps/64
};

/// Smooth big/small-jump decomposition at level eps: cutoff c_eps, truncated
/// densities s_eps / sbar_eps, compound-Poisson intensity lambda_eps,
/// adjusted drifts, operator constants, grid convolution powers, and the
/// small-jump folding kernel.
class TruncationScheme {
public:
    ModelPtr model;
    double eps = 0;
    int order = 1;  // convolution powers tabulated for i = 1..order

    double lambda_eps = 0;  // int sbar_eps
    double b_eps = 0;       // b - int_{|x|<=1} x sbar_eps(x) dx
    double b0 = 0;          // -int cbar_eps dnu = -lambda_eps
    double b1 = 0;          // b - int u (1_{|u|<=1} - c_eps(u)) nu(du)  (= b_eps for eps < 1)
    double b2 = 0;          // sigma^2 / 2
    double m2c = 0;         // int w^2 c_eps(w) s(w) dw

    double grid_R = 0, grid_h = 0;

    // cutoff and truncated densities
    double c_eps(double x) const;
    double c_eps_deriv(int k, double x) const;
    double s_eps(double x) const { return c_eps(x) * model->s(x); }
    double sbar(double x) const { return (1.0 - c_eps(x)) * model->s(x); }
    /// (cbar_eps * s)^(m)(x); Leibniz with exact cutoff derivatives.
    double cbar_s_deriv(int m, double x) const;

    // grid convolution powers  sbar^{*i}
    const std::vector<double>& conv_power(int i) const;
    /// Interpolated sbar^{*i}(x); throws outside the reliable window
    /// [-R + i*eps, R - i*eps].
    double conv_power_at(int i, double x) const;
    std::vector<double> grid_points() const;

    /// int_z^inf sbar(u) du (orientation handled internally; exact model
    /// tails outside the cutoff band, band interpolant inside).
    double sbar_tail(double z, bool reflected = false) const;

    /// T_k(z) = mass of {u_1+...+u_k >= z} under sbar^{(x)k}; k <= 3.
    quad::Result conv_tail(int k, double z) const;

    /// Small-jump fold K[g](v) = int int_0^1 g(v - beta w)(1-beta) dbeta
    /// w^2 c_eps(w) s(w) dw, via the kernel kappa.
    quad::Result small_jump_fold(const std::function<double(double)>& g, double v) const;

    /// Weighted integral int_band f(w) c_eps(w) s(w) dw over one side of the
    /// small-jump band (side=+1: (0,eps], side=-1: [-eps,0)), with the
    /// power substitution that removes the Levy-density singularity at 0.
    double band_integral(const std::function<double(double)>& f, int side) const;

    /// kappa(r): folding kernel (see small_jump_fold); r in [-eps, eps].
    double kappa(double r) const;

private:
    friend TruncationScheme build_truncation(ModelPtr, double, int, GridSpec);
    std::vector<std::vector<double>> conv_;  // conv_[i-1]: sbar^{*i} samples
    PiecewiseCheb band_tail_;            // z -> int_z^eps sbar on [-eps, eps]
    PiecewiseCheb band_tail_reflected_;  // same for sbar(-x)
    PiecewiseCheb kappa_pos_, kappa_neg_;  // kernel on [delta, eps], each side
    double kappa_delta_ = 0;
    double kappa_m0_pos_ = 0, kappa_m1_pos_ = 0;  // int_0^delta kappa, r*kappa
    double kappa_m0_neg_ = 0, kappa_m1_neg_ = 0;

    quad::Result conv_tail_oriented(int k, double z, bool reflected) const;
    quad::Result conv_tail2_pos(double z, bool reflected) const;
    quad::Result conv_tail3_pos(double z, bool reflected) const;
};

using SchemePtr = std::shared_ptr<const TruncationScheme>;

/// Builds the decomposition.  Preconditions: 0 < eps < 1; grid step
/// h <= eps/16.  For use at level y with order n the caller must ensure
/// eps < y/(n+1) (checked again by the expansion operations).
TruncationScheme build_truncation(ModelPtr model, double eps, int order, GridSpec grid = {});

SchemePtr build_truncation_ptr(ModelPtr model, double eps, int order, GridSpec grid = {});

}  // namespace levex

#endif
