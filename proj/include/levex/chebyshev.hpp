#ifndef LEVEX_CHEBYSHEV_HPP
#define LEVEX_CHEBYSHEV_HPP

#include <functional>
#include <vector>

namespace levex {

/// Chebyshev interpolant of f on [a, b].
class Cheb {
public:
    Cheb() = default;
    static Cheb fit(const std::function<double(double)>& f, double a, double b, int n);

    double eval(double x) const;
    double a() const { return a_; }
    double b() const { return b_; }
    /// Magnitude of the trailing coefficients, as a truncation-error proxy.
    double tail_bound() const;
    /// Largest coefficient magnitude (piece scale).
    double scale() const;

private:
    double a_ = 0, b_ = 1;
    std::vector<double> coef_;
};

/// Piecewise-Chebyshev approximation built by adaptive bisection until each
/// piece's trailing coefficients fall below tol (absolute, against the
/// global scale).  Handles integrable endpoint singularities by refining
/// down to min_width.
class PiecewiseCheb {
public:
    PiecewiseCheb() = default;
    /// When relative is true a piece is accepted once its trailing
    /// coefficients are below tol times the piece's own scale.
    static PiecewiseCheb build(const std::function<double(double)>& f, double a, double b,
                               double tol, int degree = 24, double min_width_frac = 1e-12,
                               bool relative = false);

    double eval(double x) const;
    double a() const { return a_; }
    double b() const { return b_; }
    size_t pieces() const { return pieces_.size(); }
    /// Max trailing-coefficient bound across pieces.
    double max_tail_bound() const;

private:
    double a_ = 0, b_ = 1;
    std::vector<Cheb> pieces_;       // sorted by interval
    std::vector<double> ends_;       // right endpoints, for lookup
};

}  // namespace levex

#endif
