#include "nlcs/pho.hpp"

#include <cmath>

#include "nlcs/errors.hpp"
#include "nlcs/quad.hpp"
#include "nlcs/specfun.hpp"

namespace nlcs::pho {

OscillatorConfig OscillatorConfig::from_alpha_beta(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw ParameterOutOfDomain("oscillator requires alpha > 0 and beta > 0");
    return {alpha, beta, mu_of_alpha(alpha)};
}

OscillatorConfig OscillatorConfig::from_mu_beta(double mu, double beta) {
    if (!(mu > 1.5)) throw ParameterOutOfDomain("oscillator requires mu > 3/2");
    return from_alpha_beta((mu - 1.0) * (mu - 1.0) - 0.25, beta);
}

OscillatorConfig OscillatorConfig::from_molecular(double rho, double kappa0) {
    if (!(rho > 0.0) || !(kappa0 > 0.0))
        throw ParameterOutOfDomain("molecular parameters require rho > 0 and kappa0 > 0");
    return from_alpha_beta(rho * kappa0 * kappa0, std::sqrt(rho) / kappa0);
}

OscillatorConfig OscillatorConfig::para_bose(double p) {
    return from_alpha_beta((p - 1.0) * (p - 3.0) / 4.0, 1.0);
}

double mu_of_alpha(double alpha) {
    if (!(alpha > 0.0)) throw ParameterOutOfDomain("mu(alpha) requires alpha > 0");
    return 1.0 + 0.5 * std::sqrt(1.0 + 4.0 * alpha);
}

double eigenvalue(const OscillatorConfig& cfg, int n) {
    return 2.0 * cfg.beta * (2.0 * n + cfg.mu);
}

double eigenfunction(const OscillatorConfig& cfg, int n, double xi) {
    if (!(xi > 0.0)) throw ParameterOutOfDomain("eigenfunction requires xi > 0");
    // Normalization in log space keeps n up to ~50 finite.
    const double log_norm = 0.5 * (std::log(2.0) + cfg.mu * std::log(cfg.beta) +
                                   specfun::log_gamma(double(n) + 1.0) -
                                   specfun::log_gamma(cfg.mu + n));
    const double x = cfg.beta * xi * xi;
    return std::exp(log_norm + (cfg.mu - 0.5) * std::log(xi) - 0.5 * x) *
           specfun::laguerre(n, cfg.mu - 1.0, x);
}

double hamiltonian_residual(const OscillatorConfig& cfg, int n, double xi_start, double xi_end,
                            double step) {
    if (!(step > 0.0) || !(xi_start >= step) || !(xi_end > xi_start))
        throw InvalidGrid("grid must be uniform, start at xi >= step, and be increasing");
    const int count = int(std::floor((xi_end - xi_start) / step)) + 1;
    if (count < 5) throw InvalidGrid("grid too coarse: need at least 5 points");

    std::vector<double> psi(count);
    for (int i = 0; i < count; ++i) psi[i] = eigenfunction(cfg, n, xi_start + i * step);

    const double lambda = eigenvalue(cfg, n);
    double res2 = 0.0;
    double ref2 = 0.0;
    for (int i = 1; i + 1 < count; ++i) {
        const double xi = xi_start + i * step;
        const double d2 = (psi[i - 1] - 2.0 * psi[i] + psi[i + 1]) / (step * step);
        const double h_psi =
            -d2 + (cfg.beta * cfg.beta * xi * xi + cfg.alpha / (xi * xi)) * psi[i];
        const double r = h_psi - lambda * psi[i];
        res2 += r * r;
        ref2 += lambda * psi[i] * lambda * psi[i];
    }
    return std::sqrt(res2 / ref2);
}

std::vector<std::vector<double>> gram_matrix(const OscillatorConfig& cfg, int n_max, double tol,
                                             Execution mode) {
    const int size = n_max + 1;
    std::vector<std::pair<int, int>> pairs;
    for (int n = 0; n < size; ++n)
        for (int m = n; m < size; ++m) pairs.emplace_back(n, m);

    std::vector<double> entries(pairs.size(), 0.0);
    for_each_index(pairs.size(), mode, [&](std::size_t i) {
        const auto [n, m] = pairs[i];
        auto integrand = [&, n = n, m = m](double xi) {
            return eigenfunction(cfg, n, xi) * eigenfunction(cfg, m, xi);
        };
        quad::QuadConfig qc;
        qc.rel_tol = tol;
        qc.abs_tol = tol / 10.0;  // off-diagonal entries are genuine zeros
        qc.split_points = {std::sqrt((2.0 * n_max + cfg.mu) / cfg.beta)};
        entries[i] = quad::integrate_semi_infinite(integrand, qc).value;
    });

    std::vector<std::vector<double>> gram(size, std::vector<double>(size, 0.0));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [n, m] = pairs[i];
        gram[n][m] = entries[i];
        gram[m][n] = entries[i];
    }
    return gram;
}

}  // namespace nlcs::pho
