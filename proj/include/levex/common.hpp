#ifndef LEVEX_COMMON_HPP
#define LEVEX_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace levex {

/// Error thrown by library operations.  `where` names the module and
/// operation ("expansion.coeff_dk_general") so the CLI can report which
/// computation failed.
class Error : public std::runtime_error {
public:
    Error(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// Domain/precondition violation (bad parameter, unsupported order, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Numerical failure (quadrature non-convergence, envelope check, ...).
class NumericError : public Error {
public:
    using Error::Error;
};

inline constexpr double kPi = 3.14159265358979323846;

inline double sqr(double x) { return x * x; }

/// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace levex

#endif
