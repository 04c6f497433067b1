#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "levex/common.hpp"
#include "levex/levy_models.hpp"
#include "levex/quad.hpp"
#include "levex/special.hpp"

using namespace levex;

TEST_CASE("stable exponent constant") {
    // c(1) = 2 int (1-cos v)/v^2 = pi
    CHECK(stable_exponent_constant(1.0) == doctest::Approx(kPi).epsilon(1e-10));
    // closed form -Gamma(-a) cos(pi a / 2) for the one-sided integral
    for (double a : {0.5, 1.5}) {
        const double expect = -2.0 * std::tgamma(-a) * std::cos(kPi * a / 2.0);
        CHECK(stable_exponent_constant(a) == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("stable model basics") {
    CHECK_THROWS_AS(make_symmetric_stable(2.0), DomainError);
    CHECK_THROWS_AS(make_symmetric_stable(0.0), DomainError);
    auto m = make_symmetric_stable(1.5);
    CHECK(m->s(2.0) == doctest::Approx(std::pow(2.0, -2.5)).epsilon(1e-14));
    CHECK(m->tail_pos(2.0) == doctest::Approx(std::pow(2.0, -1.5) / 1.5).epsilon(1e-14));
    CHECK(m->gamma(0.0).real() == 0.0);
    CHECK(m->gamma(3.0).imag() == 0.0);
    // d1 closed form from the spec example: stable(1.5), y=2
    CHECK(m->nu_tail(2.0) == doctest::Approx(0.2357023).epsilon(1e-5));

    auto u = make_symmetric_stable_unit(1.0);
    CHECK(u->gamma(2.0).real() == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("cgmy model") {
    CHECK_THROWS_AS(make_cgmy(1, 5, 5, 1.0), DomainError);
    CHECK_THROWS_AS(make_cgmy(-1, 5, 5, 0.5), DomainError);
    auto m = make_cgmy(1, 5, 5, 0.5);
    CHECK(std::abs(m->gamma(0.0)) < 1e-12);
    for (double u : {0.3, 1.0, 7.0, 40.0}) CHECK(std::abs(m->gamma(u).imag()) < 1e-12);
    // derivative closed form vs finite difference
    const double h = 1e-4;
    for (int i = 1; i <= 3; ++i) {
        const Cx fd = (m->gamma_deriv(i - 1, 2.0 + h) - m->gamma_deriv(i - 1, 2.0 - h)) / (2 * h);
        CHECK(std::abs(m->gamma_deriv(i, 2.0) - fd) < 1e-6 * std::max(1.0, std::abs(fd)));
    }
    // asymmetric drift consistency comes from the gamma_numeric test below
    auto asym = make_cgmy(1, 3, 7, 0.5);
    CHECK(!asym->symmetric);
}

TEST_CASE("compound poisson model") {
    auto m = make_compound_poisson(1.0, normal_jumps());
    CHECK(m->symmetric);
    CHECK(m->b == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(m->s(1.0) == doctest::Approx(norm_pdf(1.0)).epsilon(1e-14));
    CHECK(m->tail_pos(1.0) == doctest::Approx(norm_tail(1.0)).epsilon(1e-12));
    CHECK_THROWS_AS(make_compound_poisson(0.0, normal_jumps()), DomainError);
}

TEST_CASE("numerical Levy-Khintchine matches closed-form gamma") {
    std::vector<ModelPtr> models = {
        make_symmetric_stable(0.7),
        make_symmetric_stable(1.5),
        make_cgmy(1, 5, 5, 0.5),
        make_cgmy(0.8, 3, 7, 1.4),
        make_compound_poisson(2.0, normal_jumps(), 0.3, 0.2),
    };
    for (const auto& m : models) {
        for (double u : {-50.0, -7.0, 0.5, 3.0, 21.0, 50.0}) {
            const Cx closed = m->gamma(u);
            const Cx numeric = gamma_numeric(*m, u);
            const double scale = std::max(1.0, std::abs(closed));
            CHECK(std::abs(closed - numeric) / scale < 1e-6);
        }
    }
}

TEST_CASE("sum model gamma is the sum of component gammas") {
    auto s = make_symmetric_stable(1.5);
    auto c = make_compound_poisson(1.0, uniform_jumps(0.0, 1.0));
    auto sum = make_sum({s, c});
    for (double u : {-11.0, 0.25, 4.0}) {
        CHECK(std::abs(sum->gamma(u) - (s->gamma(u) + c->gamma(u))) < 1e-12);
    }
    CHECK(sum->s(0.5) == doctest::Approx(s->s(0.5) + 1.0).epsilon(1e-13));
    CHECK(!sum->symmetric);  // uniform jumps on [0,1] break symmetry
}

TEST_CASE("json model loading") {
    auto m = load_model_json(R"({"kind":"stable","params":{"alpha":1.5}})");
    CHECK(m->stable.has_value());
    CHECK(m->stable->alpha == 1.5);

    auto c = load_model_json(
        R"({"kind":"compound_poisson","params":{"lambda":2.0,"jumps":{"type":"normal"}}})");
    CHECK(c->cp.has_value());
    CHECK(c->cp->lambda == 2.0);

    auto sum = load_model_json(
        R"({"kind":"sum","params":{"components":[
            {"kind":"stable","params":{"alpha":1.5}},
            {"kind":"compound_poisson","params":{"lambda":1.0,"jumps":{"type":"uniform","a":0,"b":1}}}]}})");
    CHECK(sum->components.size() == 2);

    CHECK_THROWS_AS(load_model_json(R"({"kind":"stable","params":{"alpha":1.5,"beta":2}})"),
                    DomainError);
    CHECK_THROWS_AS(load_model_json(R"({"kind":"nope"})"), DomainError);
    CHECK_THROWS_AS(load_model_json("not json"), DomainError);
}

TEST_CASE("derivative fallback matches analytic derivatives") {
    auto m = make_cgmy(1, 5, 5, 0.5);
    // compare the analytic s'' against the generic finite-difference path
    LevyModel copy = *m;
    copy.levy_density_deriv_fn = nullptr;
    for (double x : {0.5, 1.0, -2.0}) {
        CHECK(copy.s_deriv(2, x) == doctest::Approx(m->s_deriv(2, x)).epsilon(1e-5));
    }
}
