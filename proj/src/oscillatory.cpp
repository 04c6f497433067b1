#include "levex/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "levex/common.hpp"
#include "levex/quad.hpp"

namespace levex {

namespace {

// Solve a dense complex system in place (partial pivoting).  Sizes are tiny
// (<= 25), so no library dependency is warranted.
void solve_complex(std::vector<Cx>& A, std::vector<Cx>& rhs, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(A[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double v = std::abs(A[r * n + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) throw NumericError("oscillatory.solve", "singular Levin system");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
            std::swap(rhs[piv], rhs[col]);
        }
        const Cx d = A[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const Cx m = A[r * n + col] / d;
            if (m == Cx(0.0, 0.0)) continue;
            for (int c = col; c < n; ++c) A[r * n + c] -= m * A[col * n + c];
            rhs[r] -= m * rhs[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        Cx s = rhs[r];
        for (int c = r + 1; c < n; ++c) s -= A[r * n + c] * rhs[c];
        rhs[r] = s / A[r * n + r];
    }
}

// Levin collocation on [a,b]: find p with p' - i x p = F, then
// I = p(b) e^{-ixb} - p(a) e^{-ixa}.  Chebyshev basis of degree n.
Cx levin_panel(const CFn& F, double x, double a, double b, int n, long& evals) {
    const int m = n + 1;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::vector<Cx> A(m * m), rhs(m);
    for (int j = 0; j < m; ++j) {
        const double tau = std::cos(kPi * (j + 0.5) / m);
        const double u = c + h * tau;
        rhs[j] = F(u);
        ++evals;
        // T_k(tau) and T'_k(tau) = k U_{k-1}(tau)
        double T0 = 1.0, T1 = tau, U0 = 1.0, U1 = 2.0 * tau;
        for (int k = 0; k < m; ++k) {
            double Tk, dTk;
            if (k == 0) {
                Tk = 1.0;
                dTk = 0.0;
            } else if (k == 1) {
                Tk = tau;
                dTk = 1.0;
            } else {
                const double T2 = 2.0 * tau * T1 - T0;
                T0 = T1;
                T1 = T2;
                Tk = T2;
                dTk = k * U1;
                const double U2 = 2.0 * tau * U1 - U0;
                U0 = U1;
                U1 = U2;
            }
            A[j * m + k] = Cx(dTk / h, 0.0) - Cx(0.0, x) * Cx(Tk, 0.0);
        }
    }
    solve_complex(A, rhs, m);
    Cx pb(0.0, 0.0), pa(0.0, 0.0);
    for (int k = 0; k < m; ++k) {
        pb += rhs[k];
        pa += (k % 2 == 0) ? rhs[k] : -rhs[k];
    }
    const Cx eb = std::exp(Cx(0.0, -x * b)), ea = std::exp(Cx(0.0, -x * a));
    return pb * eb - pa * ea;
}

Cx gl_panel(const CFn& F, double x, double a, double b, int n, long& evals) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    // Reuse GL16 twice with split when n > 16; here n is 12 or 24.
    Cx s(0.0, 0.0);
    const auto& nodes = quad::gl16_nodes();
    const auto& wts = quad::gl16_weights();
    const int pieces = (n <= 16) ? 1 : 2;
    for (int p = 0; p < pieces; ++p) {
        const double pa = a + (b - a) * p / pieces;
        const double pb = a + (b - a) * (p + 1) / pieces;
        const double pc = 0.5 * (pa + pb), ph = 0.5 * (pb - pa);
        for (int i = 0; i < 16; ++i) {
            const double u = pc + ph * nodes[i];
            s += wts[i] * ph * F(u) * std::exp(Cx(0.0, -x * u));
            ++evals;
        }
    }
    (void)c;
    (void)h;
    return s;
}

OscResult panel_integrate(const CFn& F, double x, double a, double b, double tol, int depth) {
    OscResult r;
    const double omega = std::abs(x) * 0.5 * (b - a);
    Cx lo, hi;
    if (omega <= 6.0) {
        lo = gl_panel(F, x, a, b, 12, r.evals);
        hi = gl_panel(F, x, a, b, 24, r.evals);
    } else {
        lo = levin_panel(F, x, a, b, 12, r.evals);
        hi = levin_panel(F, x, a, b, 24, r.evals);
    }
    const double err = std::abs(hi - lo);
    if (err <= tol || depth >= 24) {
        r.value = hi;
        r.error = err;
        return r;
    }
    const double m = 0.5 * (a + b);
    OscResult left = panel_integrate(F, x, a, m, 0.5 * tol, depth + 1);
    OscResult right = panel_integrate(F, x, m, b, 0.5 * tol, depth + 1);
    left += right;
    left.evals += r.evals;
    return left;
}

}  // namespace

OscResult integrate_oscillatory(const CFn& F, double x, double a, double b,
                                const OscOptions& opt) {
    if (a == b) return {};
    return panel_integrate(F, x, a, b, opt.abs_tol, 0);
}

OscResult integrate_oscillatory_tail(const CFn& F, double x, double a, const OscOptions& opt) {
    OscResult total;
    // First edge resolves the envelope near a; growth is geometric after.
    double lo = a;
    double width = std::max(1.0, std::abs(a)) * 0.5;
    if (x != 0.0) width = std::min(width * 8.0, std::max(width, 2.0 * kPi / std::abs(x)));
    double last_mag = 0.0;
    int shrinking = 0;
    for (int k = 0; k < opt.max_panels; ++k) {
        const double hi = lo + width;
        OscResult p = panel_integrate(F, x, lo, hi, opt.abs_tol, 0);
        total += p;
        const double mag = std::abs(p.value);
        const double scale = std::max(std::abs(total.value), opt.abs_tol);
        if (mag < last_mag) {
            ++shrinking;
        } else {
            shrinking = 0;
        }
        if (shrinking >= 3 && mag <= std::max(opt.abs_tol, opt.rel_tol * scale)) {
            // Geometric tail bound from the last two panel magnitudes.
            const double ratio = std::min(0.9, last_mag > 0.0 ? mag / last_mag : 0.0);
            total.error += mag * ratio / (1.0 - ratio);
            return total;
        }
        last_mag = mag;
        lo = hi;
        width *= opt.panel_ratio;
    }
    throw NumericError("oscillatory.tail",
                       "envelope did not decay within panel budget (non-integrable tail?)");
}

}  // namespace levex
