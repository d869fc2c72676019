#include <doctest.h>

#include <cmath>

#include "nlcs/errors.hpp"
#include "nlcs/pho.hpp"
#include "nlcs/quad.hpp"

namespace ph = nlcs::pho;

TEST_CASE("mu(alpha) fixtures") {
    CHECK(ph::mu_of_alpha(2.0) == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(ph::mu_of_alpha(0.75) == doctest::Approx(2.0).epsilon(1e-14));
    const auto cfg = ph::OscillatorConfig::from_mu_beta(2.5, 1.0);
    CHECK(cfg.alpha == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("parameterizations agree") {
    const double rho = 3.0, kappa0 = 0.8;
    const auto mol = ph::OscillatorConfig::from_molecular(rho, kappa0);
    CHECK(mol.alpha == doctest::Approx(rho * kappa0 * kappa0).epsilon(1e-14));
    CHECK(mol.beta == doctest::Approx(std::sqrt(rho) / kappa0).epsilon(1e-14));
    // V(xi) = beta^2 xi^2 + alpha/xi^2 has minimum 2 sqrt(alpha) beta = 2 rho.
    CHECK(2.0 * std::sqrt(mol.alpha) * mol.beta == doctest::Approx(2.0 * rho).epsilon(1e-13));

    const auto pb = ph::OscillatorConfig::para_bose(5.0);
    CHECK(pb.alpha == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(pb.beta == 1.0);
}

TEST_CASE("equally spaced spectrum") {
    const auto cfg = ph::OscillatorConfig::from_mu_beta(2.5, 0.7);
    for (int n = 0; n < 6; ++n) {
        CHECK(ph::eigenvalue(cfg, n) == doctest::Approx(2.0 * 0.7 * (2.0 * n + 2.5)));
        CHECK(ph::eigenvalue(cfg, n + 1) - ph::eigenvalue(cfg, n) ==
              doctest::Approx(4.0 * 0.7).epsilon(1e-13));
    }
}

TEST_CASE("eigenfunctions are normalized") {
    const auto cfg = ph::OscillatorConfig::from_mu_beta(2.5, 1.0);
    for (int n : {0, 1, 4}) {
        nlcs::quad::QuadConfig qc;
        qc.rel_tol = 1e-12;
        auto f = [&](double xi) {
            const double v = ph::eigenfunction(cfg, n, xi);
            return v * v;
        };
        qc.split_points = {std::sqrt((2.0 * n + cfg.mu) / cfg.beta)};
        CHECK(nlcs::quad::integrate_semi_infinite(f, qc).value ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("Gram matrix is the identity") {
    const auto cfg = ph::OscillatorConfig::from_mu_beta(4.0, 0.5);
    const auto gram = ph::gram_matrix(cfg, 6, 1e-10);
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m)
            CHECK(std::abs(gram[n][m] - (n == m ? 1.0 : 0.0)) < 1e-9);
}

TEST_CASE("finite-difference Hamiltonian residual") {
    const auto cfg = ph::OscillatorConfig::from_mu_beta(2.5, 1.0);
    const double r0 = ph::hamiltonian_residual(cfg, 0, 0.01, 8.0, 1e-3);
    const double r3 = ph::hamiltonian_residual(cfg, 3, 0.01, 8.0, 1e-3);
    CHECK(r0 <= 1e-4);
    CHECK(r3 <= 1e-3);

    // Central differences are second order: halving the step divides the
    // residual by about four.
    const double coarse = ph::hamiltonian_residual(cfg, 1, 0.05, 8.0, 2e-3);
    const double fine = ph::hamiltonian_residual(cfg, 1, 0.05, 8.0, 1e-3);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("grid validation") {
    const auto cfg = ph::OscillatorConfig::from_mu_beta(2.5, 1.0);
    CHECK_THROWS_AS(ph::hamiltonian_residual(cfg, 0, 0.01, 8.0, -1e-3), nlcs::InvalidGrid);
    CHECK_THROWS_AS(ph::hamiltonian_residual(cfg, 0, 1e-4, 8.0, 1e-3), nlcs::InvalidGrid);
    CHECK_THROWS_AS(ph::hamiltonian_residual(cfg, 0, 1.0, 1.001, 1e-3), nlcs::InvalidGrid);
}

TEST_CASE("mu must exceed 3/2 for the Dirichlet problem") {
    CHECK_THROWS_AS(ph::OscillatorConfig::from_mu_beta(1.2, 1.0), nlcs::ParameterOutOfDomain);
    CHECK_THROWS_AS(ph::OscillatorConfig::from_mu_beta(2.5, -1.0), nlcs::ParameterOutOfDomain);
}
