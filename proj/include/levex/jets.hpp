#ifndef LEVEX_JETS_HPP
#define LEVEX_JETS_HPP

#include <array>
#include <cmath>

namespace levex {

/// Truncated Taylor series (jet) arithmetic of order N: carries value and
/// derivatives 0..N at a point.  Used to get machine-precision derivatives
/// of composite closed forms (the smooth cutoff bump, products c̄_ε·s).
template <int N>
struct Jet {
    // c[k] = f^(k)(x0) / k!
    std::array<double, N + 1> c{};

    static Jet constant(double v) {
        Jet j;
        j.c[0] = v;
        return j;
    }
    static Jet variable(double v) {
        Jet j;
        j.c[0] = v;
        if constexpr (N >= 1) j.c[1] = 1.0;
        return j;
    }

    double value() const { return c[0]; }
    /// k-th derivative (not the Taylor coefficient).
    double deriv(int k) const {
        double f = 1.0;
        for (int i = 2; i <= k; ++i) f *= i;
        return c[k] * f;
    }

    Jet operator-() const {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c[k] = -c[k];
        return r;
    }
    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r;
        for (int k = 0; k <= N; ++k) {
            double s = 0;
            for (int i = 0; i <= k; ++i) s += a.c[i] * b.c[k - i];
            r.c[k] = s;
        }
        return r;
    }
    friend Jet operator*(double s, const Jet& a) {
        Jet r;
        for (int k = 0; k <= N; ++k) r.c[k] = s * a.c[k];
        return r;
    }
    friend Jet operator+(const Jet& a, double s) {
        Jet r = a;
        r.c[0] += s;
        return r;
    }
    friend Jet operator-(double s, const Jet& a) {
        Jet r = -a;
        r.c[0] += s;
        return r;
    }

    /// 1/a, requires a.c[0] != 0.
    Jet inverse() const {
        Jet r;
        r.c[0] = 1.0 / c[0];
        for (int k = 1; k <= N; ++k) {
            double s = 0;
            for (int i = 1; i <= k; ++i) s += c[i] * r.c[k - i];
            r.c[k] = -s / c[0];
        }
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }

    /// exp(a), via d(exp f) = exp f * df:  (k+1) e_{k+1} = sum (i+1) f_{i+1} e_{k-i}.
    Jet exp_() const {
        Jet r;
        r.c[0] = std::exp(c[0]);
        for (int k = 1; k <= N; ++k) {
            double s = 0;
            for (int i = 1; i <= k; ++i) s += i * c[i] * r.c[k - i];
            r.c[k] = s / k;
        }
        return r;
    }
};

template <int N>
Jet<N> exp(const Jet<N>& a) {
    return a.exp_();
}

}  // namespace levex

#endif
