#ifndef LEVEX_OSCILLATORY_HPP
#define LEVEX_OSCILLATORY_HPP

#include <complex>
#include <functional>

namespace levex {

using Cx = std::complex<double>;
using CFn = std::function<Cx(double)>;

struct OscResult {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    long evals = 0;

    OscResult& operator+=(const OscResult& o) {
        value += o.value;
        error += o.error;
        evals += o.evals;
        return *this;
    }
};

struct OscOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_panels = 4000;
    double panel_ratio = 1.35;  // geometric growth of panel edges
};

/// \int_a^b F(u) e^{-i u x} du.  Per panel: Gauss-Legendre when the phase
/// variation is small, Levin collocation otherwise.  Panels bisect until the
/// two-degree error estimate meets tolerance.
OscResult integrate_oscillatory(const CFn& envelope, double x, double a, double b,
                                const OscOptions& opt = {});

/// \int_a^inf F(u) e^{-i u x} du for a decaying envelope.  Extends
/// geometrically spaced panels until contributions decay geometrically, then
/// adds a tail bound to the error estimate.
OscResult integrate_oscillatory_tail(const CFn& envelope, double x, double a,
                                     const OscOptions& opt = {});

}  // namespace levex

#endif
