#ifndef LEVEX_SPECIAL_HPP
#define LEVEX_SPECIAL_HPP

#include <cmath>

#include "levex/common.hpp"

namespace levex {

inline double norm_pdf(double x, double var = 1.0) {
    return std::exp(-0.5 * x * x / var) / std::sqrt(2.0 * kPi * var);
}

/// P(N(0,var) <= x)
inline double norm_cdf(double x, double var = 1.0) {
    return 0.5 * std::erfc(-x / std::sqrt(2.0 * var));
}

/// P(N(0,var) >= x)
inline double norm_tail(double x, double var = 1.0) {
    return 0.5 * std::erfc(x / std::sqrt(2.0 * var));
}

/// k-th derivative of the N(0,1) pdf via the probabilists' Hermite
/// recurrence: phi^(k)(x) = (-1)^k He_k(x) phi(x).
double norm_pdf_deriv(int k, double x);

/// Irwin-Hall: density of the sum of k iid U(0,1).
double irwin_hall_pdf(int k, double x);
/// P(U_1 + ... + U_k >= x)
double irwin_hall_tail(int k, double x);

/// log(n!)
inline double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace levex

#endif
