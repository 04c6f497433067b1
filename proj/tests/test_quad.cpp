#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "levex/chebyshev.hpp"
#include "levex/common.hpp"
#include "levex/jets.hpp"
#include "levex/oscillatory.hpp"
#include "levex/quad.hpp"
#include "levex/rng.hpp"
#include "levex/special.hpp"

using namespace levex;

TEST_CASE("adaptive GK15 on smooth integrands") {
    auto r = quad::integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
    CHECK(r.value == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    CHECK(std::abs(r.value - std::sqrt(kPi)) <= 10 * r.error + 1e-15);

    auto s = quad::integrate([](double x) { return std::sin(x); }, 0.0, kPi);
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("integrable endpoint singularity") {
    // int_0^1 x^{-1/2} = 2
    quad::Options opt;
    opt.abs_tol = 1e-11;
    opt.max_intervals = 20000;
    auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, opt);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("semi-infinite transforms") {
    // int_1^inf x^{-2.5} dx = 1/1.5
    auto r = quad::integrate_right_tail([](double x) { return std::pow(x, -2.5); }, 1.0);
    CHECK(r.value == doctest::Approx(1.0 / 1.5).epsilon(1e-10));
    // int_-inf^-1 e^{x} dx = e^{-1}
    auto l = quad::integrate_left_tail([](double x) { return std::exp(x); }, -1.0);
    CHECK(l.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("oscillatory engine vs closed forms") {
    // int_0^inf e^{-u} e^{-iux} du = 1/(1+ix)
    for (double x : {0.0, 0.5, 3.0, 25.0, 400.0}) {
        auto r = integrate_oscillatory_tail([](double u) { return Cx(std::exp(-u), 0.0); }, x, 0.0);
        const Cx expect = 1.0 / Cx(1.0, x);
        CHECK(std::abs(r.value - expect) < 1e-11);
    }
    // Finite: int_0^{2pi} cos(x u) du = sin(2 pi x)/x
    for (double x : {7.3, 113.0}) {
        auto r = integrate_oscillatory([](double) { return Cx(1.0, 0.0); }, x, 0.0, 2 * kPi);
        CHECK(r.value.real() == doctest::Approx(std::sin(2 * kPi * x) / x).epsilon(1e-9));
        CHECK(std::abs(r.value.imag() - (std::cos(2 * kPi * x) - 1.0) / x) < 1e-9);
    }
}

TEST_CASE("oscillatory engine handles power envelopes") {
    // int_1^inf v^{-2} e^{-iv} dv, checked against adaptive splitting at zeros
    auto env = [](double v) { return Cx(std::pow(v, -2.0), 0.0); };
    auto r = integrate_oscillatory_tail(env, 1.0, 1.0);
    // Reference by brute-force zero splitting with plain quadrature
    double re = 0, im = 0;
    double a = 1.0;
    for (int k = 0; k < 4000; ++k) {
        double b = a + kPi / 2;
        re += quad::integrate([](double v) { return std::cos(v) / (v * v); }, a, b).value;
        im -= quad::integrate([](double v) { return std::sin(v) / (v * v); }, a, b).value;
        a = b;
    }
    CHECK(r.value.real() == doctest::Approx(re).epsilon(1e-7));
    CHECK(r.value.imag() == doctest::Approx(im).epsilon(1e-7));
}

TEST_CASE("chebyshev piecewise fit") {
    auto f = [](double x) { return std::exp(-1.0 / x); };  // flat singular corner at 0+
    auto pc = PiecewiseCheb::build(f, 1e-8, 2.0, 1e-12);
    for (double x : {1e-6, 1e-3, 0.02, 0.4, 1.7}) {
        CHECK(pc.eval(x) == doctest::Approx(f(x)).epsilon(1e-9));
    }
}

TEST_CASE("jet derivatives of composites") {
    // f(v) = exp(-1/(v(1-v))): compare jet derivatives with finite differences
    auto fval = [](double v) { return std::exp(-1.0 / (v * (1.0 - v))); };
    const double v0 = 0.37;
    Jet<4> v = Jet<4>::variable(v0);
    Jet<4> f = exp(Jet<4>::constant(-1.0) * (v * (1.0 - v)).inverse());
    CHECK(f.value() == doctest::Approx(fval(v0)).epsilon(1e-14));
    const double h = 1e-5;
    const double fd1 = (fval(v0 + h) - fval(v0 - h)) / (2 * h);
    CHECK(f.deriv(1) == doctest::Approx(fd1).epsilon(1e-8));
    const double fd2 = (fval(v0 + h) - 2 * fval(v0) + fval(v0 - h)) / (h * h);
    CHECK(f.deriv(2) == doctest::Approx(fd2).epsilon(1e-5));
}

TEST_CASE("special functions") {
    CHECK(norm_tail(1.0) == doctest::Approx(0.15865525393145707).epsilon(1e-12));
    CHECK(norm_tail(1.0, 2.0) == doctest::Approx(0.23975006109347669).epsilon(1e-12));
    CHECK(norm_pdf_deriv(1, 1.0) == doctest::Approx(-norm_pdf(1.0)).epsilon(1e-12));
    // Irwin-Hall(2) is triangular on [0,2]
    CHECK(irwin_hall_pdf(2, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(irwin_hall_pdf(2, 1.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(irwin_hall_tail(2, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    // mass checks
    auto r = quad::integrate([](double x) { return irwin_hall_pdf(3, x); }, 0.0, 3.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("rng reproducibility and moments") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(7);
    double sum = 0, sum2 = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double z = r.normal();
        sum += z;
        sum2 += z * z;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));
    // Poisson mean with chunked generation
    Rng p(11);
    double ps = 0;
    for (int i = 0; i < 20000; ++i) ps += p.poisson(70.0);
    CHECK(ps / 20000 == doctest::Approx(70.0).epsilon(0.01));
}
