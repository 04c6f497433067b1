#include "levex/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "levex/common.hpp"

namespace levex::quad {

namespace {

// Kronrod-15 nodes (positive half) and weights; Gauss-7 weights on the
// odd-indexed Kronrod nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

Interval gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    std::array<double, 7> flo, fhi;
    const double fc = f(c);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        flo[j] = f(c - x);
        fhi[j] = f(c + x);
        const double fsum = flo[j] + fhi[j];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(flo[j]) + std::abs(fhi[j]));
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(flo[j] - mean) + std::abs(fhi[j] - mean));
    resasc *= std::abs(h);
    resabs *= std::abs(h);
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50.0 * eps * resabs);
    return {a, b, resk * h, err};
}

}  // namespace

Result kronrod15(const Fn& f, double a, double b) {
    Interval iv = gk15(f, a, b);
    return {iv.value, iv.error, 15};
}

Result integrate(const Fn& f, double a, double b, const Options& opt) {
    if (a == b) return {0.0, 0.0, 0};
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::priority_queue<Interval> heap;
    Interval first = gk15(f, a, b);
    double total = first.value, toterr = first.error;
    long evals = 15;
    heap.push(first);
    int n = 1;
    while (toterr > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
           n < opt.max_intervals && !heap.empty()) {
        Interval worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) break;  // machine resolution
        Interval left = gk15(f, worst.a, mid);
        Interval right = gk15(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        toterr += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n;
    }
    if (opt.throw_on_failure && n >= opt.max_intervals &&
        toterr > 10.0 * std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
        throw NumericError("quad.integrate", "adaptive quadrature did not converge");
    }
    return {sign * total, toterr, evals};
}

Result integrate(const Fn& f, std::vector<double> pts, const Options& opt) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Result r;
    if (pts.size() < 2) return r;
    Options sub = opt;
    sub.abs_tol = opt.abs_tol / static_cast<double>(pts.size() - 1);
    for (size_t i = 0; i + 1 < pts.size(); ++i) r += integrate(f, pts[i], pts[i + 1], sub);
    return r;
}

Result integrate_right_tail(const Fn& f, double a, const Options& opt) {
    auto g = [&f, a](double t) {
        const double om = 1.0 - t;
        const double u = a + t / om;
        if (!std::isfinite(u)) return 0.0;
        return f(u) / (om * om);
    };
    return integrate(g, 0.0, 1.0, opt);
}

Result integrate_left_tail(const Fn& f, double b, const Options& opt) {
    auto g = [&f, b](double u) { return f(b - (u - b)); };  // reflect about b
    return integrate_right_tail(g, b, opt);
}

Result integrate_line(const Fn& f, std::vector<double> pts, const Options& opt) {
    pts.push_back(0.0);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Result r = integrate(f, pts, opt);
    r += integrate_right_tail(f, pts.back(), opt);
    r += integrate_left_tail(f, pts.front(), opt);
    return r;
}

namespace {
// 16-point Gauss-Legendre on [-1,1].
constexpr std::array<double, 16> kGl16X = {
    -0.989400934991649932596154173450, -0.944575023073232576077988415535,
    -0.865631202387831743880467897712, -0.755404408355003033895101194847,
    -0.617876244402643748446671764049, -0.458016777657227386342419442984,
    -0.281603550779258913230460501460, -0.095012509837637440185319335425,
    0.095012509837637440185319335425,  0.281603550779258913230460501460,
    0.458016777657227386342419442984,  0.617876244402643748446671764049,
    0.755404408355003033895101194847,  0.865631202387831743880467897712,
    0.944575023073232576077988415535,  0.989400934991649932596154173450};
constexpr std::array<double, 16> kGl16W = {
    0.027152459411754094851780572456, 0.062253523938647892862843836994,
    0.095158511682492784809925107602, 0.124628971255533872052476282192,
    0.149595988816576732081501730547, 0.169156519395002538189312079030,
    0.182603415044923588866763667969, 0.189450610455068496285396723208,
    0.189450610455068496285396723208, 0.182603415044923588866763667969,
    0.169156519395002538189312079030, 0.149595988816576732081501730547,
    0.124628971255533872052476282192, 0.095158511682492784809925107602,
    0.062253523938647892862843836994, 0.027152459411754094851780572456};
}  // namespace

const std::array<double, 16>& gl16_nodes() { return kGl16X; }
const std::array<double, 16>& gl16_weights() { return kGl16W; }

double gl16(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += kGl16W[i] * f(c + h * kGl16X[i]);
    return s * h;
}

}  // namespace levex::quad
