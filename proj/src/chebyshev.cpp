#include "levex/chebyshev.hpp"

#include <algorithm>
#include <cmath>

#include "levex/common.hpp"

namespace levex {

Cheb Cheb::fit(const std::function<double(double)>& f, double a, double b, int n) {
    Cheb c;
    c.a_ = a;
    c.b_ = b;
    c.coef_.assign(n + 1, 0.0);
    std::vector<double> fv(n + 1);
    // Chebyshev points of the first kind.
    for (int k = 0; k <= n; ++k) {
        const double theta = kPi * (k + 0.5) / (n + 1);
        const double x = 0.5 * (a + b) + 0.5 * (b - a) * std::cos(theta);
        fv[k] = f(x);
    }
    for (int j = 0; j <= n; ++j) {
        double s = 0;
        for (int k = 0; k <= n; ++k) s += fv[k] * std::cos(kPi * j * (k + 0.5) / (n + 1));
        c.coef_[j] = 2.0 * s / (n + 1);
    }
    c.coef_[0] *= 0.5;
    return c;
}

double Cheb::eval(double x) const {
    const double t = (2.0 * x - a_ - b_) / (b_ - a_);
    // Clenshaw
    double b1 = 0, b2 = 0;
    for (size_t j = coef_.size(); j-- > 1;) {
        const double tmp = 2.0 * t * b1 - b2 + coef_[j];
        b2 = b1;
        b1 = tmp;
    }
    return t * b1 - b2 + coef_[0];
}

double Cheb::tail_bound() const {
    const size_t n = coef_.size();
    double s = 0;
    for (size_t j = n > 3 ? n - 3 : 0; j < n; ++j) s += std::abs(coef_[j]);
    return s;
}

double Cheb::scale() const {
    double m = 0;
    for (double c : coef_) m = std::max(m, std::abs(c));
    return m;
}

PiecewiseCheb PiecewiseCheb::build(const std::function<double(double)>& f, double a, double b,
                                   double tol, int degree, double min_width_frac,
                                   bool relative) {
    PiecewiseCheb pc;
    pc.a_ = a;
    pc.b_ = b;
    const double min_width = (b - a) * min_width_frac;
    struct Seg {
        double a, b;
    };
    std::vector<Seg> stack{{a, b}};
    std::vector<Cheb> done;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        Cheb piece = Cheb::fit(f, s.a, s.b, degree);
        const double accept = relative ? tol * (piece.scale() + 1e-300) : tol;
        if (piece.tail_bound() <= accept || (s.b - s.a) <= min_width) {
            done.push_back(std::move(piece));
        } else {
            const double m = 0.5 * (s.a + s.b);
            stack.push_back({m, s.b});
            stack.push_back({s.a, m});
        }
    }
    std::sort(done.begin(), done.end(),
              [](const Cheb& x, const Cheb& y) { return x.a() < y.a(); });
    pc.pieces_ = std::move(done);
    for (const auto& p : pc.pieces_) pc.ends_.push_back(p.b());
    return pc;
}

double PiecewiseCheb::eval(double x) const {
    if (pieces_.empty()) throw NumericError("chebyshev.eval", "empty interpolant");
    auto it = std::lower_bound(ends_.begin(), ends_.end(), x);
    size_t i = static_cast<size_t>(it - ends_.begin());
    if (i >= pieces_.size()) i = pieces_.size() - 1;
    return pieces_[i].eval(std::clamp(x, a_, b_));
}

double PiecewiseCheb::max_tail_bound() const {
    double m = 0;
    for (const auto& p : pieces_) m = std::max(m, p.tail_bound());
    return m;
}

}  // namespace levex
