#include <doctest.h>

#include <cmath>

#include "nlcs/errors.hpp"
#include "nlcs/quad.hpp"

using nlcs::quad::QuadConfig;
using nlcs::quad::QuadResult;

TEST_CASE("gamma-function integrals on the half line") {
    // int_0^inf t^n e^-t dt = n!
    double factorial = 1.0;
    for (int n = 0; n <= 8; ++n) {
        QuadConfig cfg;
        cfg.rel_tol = 1e-12;
        cfg.split_points = {double(n) + 1.0};
        auto integrand = [n](double t) { return std::pow(t, n) * std::exp(-t); };
        const QuadResult r = nlcs::quad::integrate_semi_infinite(integrand, cfg);
        CHECK(r.value == doctest::Approx(factorial).epsilon(1e-11));
        factorial *= n + 1;
    }
}

TEST_CASE("declared algebraic endpoint singularities") {
    QuadConfig cfg;
    cfg.rel_tol = 1e-12;

    // int_0^1 t^(-1/2) dt = 2
    const QuadResult a = nlcs::quad::integrate_finite(
        [](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, cfg, 0.5);
    CHECK(a.value == doctest::Approx(2.0).epsilon(1e-11));

    // int_1^2 (t-1)^(-0.6) dt = 0.4^-1 * 1 = 2.5
    const QuadResult b = nlcs::quad::integrate_finite(
        [](double t) { return std::pow(t - 1.0, -0.6); }, 1.0, 2.0, cfg, 0.6);
    CHECK(b.value == doctest::Approx(2.5).epsilon(1e-11));

    // Gamma(1/2) = sqrt(pi) with both a singularity and an infinite tail.
    const QuadResult c = nlcs::quad::integrate_semi_infinite(
        [](double t) { return std::exp(-t) / std::sqrt(t); }, cfg, 0.5);
    CHECK(c.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-11));
}

TEST_CASE("error estimate bounds the true error") {
    QuadConfig cfg;
    cfg.rel_tol = 1e-10;
    const QuadResult r = nlcs::quad::integrate_finite(
        [](double t) { return std::sin(t); }, 0.0, M_PI, cfg);
    CHECK(std::abs(r.value - 2.0) <= std::max(r.error_estimate, 1e-14));
}

TEST_CASE("repeated evaluation is bitwise deterministic") {
    QuadConfig cfg;
    cfg.rel_tol = 1e-11;
    auto f = [](double t) { return std::exp(-t) * std::cos(10.0 * t); };
    const QuadResult a = nlcs::quad::integrate_semi_infinite(f, cfg);
    const QuadResult b = nlcs::quad::integrate_semi_infinite(f, cfg);
    CHECK(a.value == b.value);
    CHECK(a.error_estimate == b.error_estimate);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("budget exhaustion raises a coded error") {
    QuadConfig cfg;
    cfg.rel_tol = 1e-14;
    cfg.abs_tol = 0.0;
    cfg.max_evaluations = 100;
    CHECK_THROWS_AS(nlcs::quad::integrate_finite(
                        [](double t) { return std::cos(200.0 * t * t); }, 0.0, 10.0, cfg),
                    nlcs::BudgetExceeded);
}

TEST_CASE("invalid bounds are rejected") {
    QuadConfig cfg;
    CHECK_THROWS_AS(
        nlcs::quad::integrate_finite([](double) { return 1.0; }, 1.0, 1.0, cfg),
        nlcs::ParameterOutOfDomain);
}
