#include "levex/special.hpp"

#include <vector>

namespace levex {

double norm_pdf_deriv(int k, double x) {
    // He_0 = 1, He_1 = x, He_{n+1} = x He_n - n He_{n-1}
    double h0 = 1.0, h1 = x;
    if (k == 0) return norm_pdf(x);
    for (int n = 1; n < k; ++n) {
        const double h2 = x * h1 - n * h0;
        h0 = h1;
        h1 = h2;
    }
    const double he = (k == 0) ? h0 : h1;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * he * norm_pdf(x);
}

double irwin_hall_pdf(int k, double x) {
    if (k < 1 || x <= 0.0 || x >= k) return 0.0;
    if (k == 1) return 1.0;
    // f_k(x) = 1/(k-1)! sum_j (-1)^j C(k,j) (x-j)_+^{k-1}
    double s = 0.0, binom = 1.0;
    for (int j = 0; j <= static_cast<int>(x); ++j) {
        const double d = x - j;
        s += ((j % 2 == 0) ? 1.0 : -1.0) * binom * std::pow(d, k - 1);
        binom *= static_cast<double>(k - j) / (j + 1);
    }
    return s / std::exp(log_factorial(k - 1));
}

double irwin_hall_tail(int k, double x) {
    if (k < 1) return x <= 0.0 ? 1.0 : 0.0;
    if (x <= 0.0) return 1.0;
    if (x >= k) return 0.0;
    // F_k(x) = 1/k! sum_j (-1)^j C(k,j) (x-j)_+^k
    double s = 0.0, binom = 1.0;
    for (int j = 0; j <= static_cast<int>(x); ++j) {
        const double d = x - j;
        s += ((j % 2 == 0) ? 1.0 : -1.0) * binom * std::pow(d, k);
        binom *= static_cast<double>(k - j) / (j + 1);
    }
    return 1.0 - s / std::exp(log_factorial(k));
}

}  // namespace levex
