#pragma once

#include <vector>

#include "nlcs/parallel.hpp"

namespace nlcs::pho {

// Oscillator -d^2/dxi^2 + beta^2 xi^2 + alpha/xi^2 on (0, inf), Dirichlet at 0.
struct OscillatorConfig {
    double alpha = 0.0;
    double beta = 0.0;
    double mu = 0.0;  // mu(alpha) = 1 + sqrt(1+4 alpha)/2 > 3/2

    static OscillatorConfig from_alpha_beta(double alpha, double beta);
    static OscillatorConfig from_mu_beta(double mu, double beta);
    // Molecular parameters: alpha = rho kappa0^2, beta = sqrt(rho)/kappa0.
    static OscillatorConfig from_molecular(double rho, double kappa0);
    // Para-Bose fixture: alpha = (p-1)(p-3)/4, beta = 1.
    static OscillatorConfig para_bose(double p);
};

double mu_of_alpha(double alpha);

// lambda_n = 2 beta (2n + mu); constant gap 4 beta.
double eigenvalue(const OscillatorConfig& cfg, int n);

// psi_n(xi) = sqrt(2 beta^mu n!/Gamma(mu+n)) xi^(mu-1/2) e^(-beta xi^2/2) L_n^(mu-1)(beta xi^2).
double eigenfunction(const OscillatorConfig& cfg, int n, double xi);

// Relative L2 residual of (-D^2 + beta^2 xi^2 + alpha/xi^2) psi_n - lambda_n psi_n
// on a uniform grid [xi_start, xi_end] with the given step (central differences).
double hamiltonian_residual(const OscillatorConfig& cfg, int n, double xi_start, double xi_end,
                            double step);

// Gram matrix <psi_n|psi_m> for n,m <= n_max by quadrature; expected identity.
std::vector<std::vector<double>> gram_matrix(const OscillatorConfig& cfg, int n_max, double tol,
                                             Execution mode = Execution::Parallel);

}  // namespace nlcs::pho
