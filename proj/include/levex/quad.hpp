#ifndef LEVEX_QUAD_HPP
#define LEVEX_QUAD_HPP

#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace levex::quad {

using Fn = std::function<double(double)>;

/// Quadrature value with an accumulated absolute-error estimate.
struct Result {
    double value = 0.0;
    double error = 0.0;
    long evals = 0;

    Result& operator+=(const Result& o) {
        value += o.value;
        error += o.error;
        evals += o.evals;
        return *this;
    }
    friend Result operator*(double s, const Result& r) {
        return {s * r.value, std::abs(s) * r.error, r.evals};
    }
};

struct Options {
    double abs_tol = 1e-11;
    double rel_tol = 1e-11;
    int max_intervals = 4000;
    /// When true, exhausting max_intervals throws NumericError instead of
    /// returning the best estimate with its (large) error bound.
    bool throw_on_failure = false;
};

/// Single Gauss-Kronrod 7-15 panel; error = |K15 - G7| rescaled.
Result kronrod15(const Fn& f, double a, double b);

/// Globally adaptive GK15 on [a, b].
Result integrate(const Fn& f, double a, double b, const Options& opt = {});

/// Adaptive integration with interior breakpoints (kinks, band edges).
Result integrate(const Fn& f, std::vector<double> breakpoints, const Options& opt = {});

/// \int_a^inf f, via u = a + t/(1-t).
Result integrate_right_tail(const Fn& f, double a, const Options& opt = {});

/// \int_{-inf}^b f.
Result integrate_left_tail(const Fn& f, double b, const Options& opt = {});

/// Whole-line integral with optional interior breakpoints.
Result integrate_line(const Fn& f, std::vector<double> breakpoints, const Options& opt = {});

/// 16-point Gauss-Legendre nodes/weights on [-1, 1].
const std::array<double, 16>& gl16_nodes();
const std::array<double, 16>& gl16_weights();

/// Fixed 16-point Gauss-Legendre on [a, b] (no error estimate; for smooth
/// weight integrals like \int_0^1 (1-beta) g(beta) dbeta).
double gl16(const Fn& f, double a, double b);

}  // namespace levex::quad

#endif
