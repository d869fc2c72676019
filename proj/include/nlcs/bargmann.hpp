#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "nlcs/pho.hpp"
#include "nlcs/states.hpp"

namespace nlcs::bargmann {

// Coupling 2 gamma = mu with -1 < sigma <= 0; the derived (gamma, sigma) is
// measure-admissible by construction.
struct BargmannSpec {
    pho::OscillatorConfig osc;
    double sigma = 0.0;
    states::Params params;  // classify(mu/2, sigma)

    static BargmannSpec make(const pho::OscillatorConfig& osc, double sigma);
};

// A sampled function on an explicit positive xi-grid; quadrature against it
// uses the grid's own trapezoid weights.
struct GridFunction {
    std::vector<double> xi;
    std::vector<std::complex<double>> samples;
};

// Coherent-state wavefunction <xi|z> in closed form (normalized).
std::complex<double> wavefunction(const BargmannSpec& spec, std::complex<double> z, double xi,
                                  double tol);

// B[phi](z) as quadrature of the Kampe-de-Feriet kernel against phi.
std::complex<double> bargmann_transform(const BargmannSpec& spec, const GridFunction& phi,
                                        std::complex<double> z, double tol);
std::complex<double> bargmann_transform(const BargmannSpec& spec,
                                        const std::function<double(double)>& phi,
                                        std::complex<double> z, double tol);

// Image of the basis vector psi_n: closed form sqrt(n!/(mu)_n) z^n/(sigma+1)_n,
// and the same through quadrature of the transform.
std::complex<double> basis_image(const BargmannSpec& spec, int n, std::complex<double> z);
std::complex<double> basis_image_quadrature(const BargmannSpec& spec, int n,
                                            std::complex<double> z, double tol);
// sigma = 0 only: the transform through its Bessel-kernel reduction, z > 0.
std::complex<double> basis_image_bessel(const BargmannSpec& spec, int n, double z, double tol);

// Relative residual of the Laguerre-Bessel integral identity (sigma = 0 route):
// int xi^mu e^(-beta xi^2) J_(mu-1)(2 sqrt(beta z) xi) L_n^(mu-1)(beta xi^2) dxi
//   = z^(n+(mu-1)/2) e^(-z) / (n! 2 beta^((mu+1)/2)).
double bessel_identity_check(double mu, double beta, int n, double z, double tol);

// Relative residual of the Kampe-de-Feriet integral identity:
// int xi^(2mu-1) e^(-beta xi^2) F(z, -beta z xi^2) L_n^(mu-1)(beta xi^2) dxi
//   = Gamma(mu)/(2 beta^mu) z^n/(sigma+1)_n.
double kdf_identity_check(const BargmannSpec& spec, int n, std::complex<double> z, double tol);

// K(z, wbar) = 2F3(1,1; mu, sigma+1, sigma+1; z conj(w)).
std::complex<double> reproducing_kernel(const BargmannSpec& spec, std::complex<double> z,
                                        std::complex<double> w, double tol);

// <phi|phi> reconstructed through the transform and the radial measure
// moments, for phi concentrated within its grid.
double norm_via_bargmann(const BargmannSpec& spec, const GridFunction& phi, double tol,
                         int n_max = 8);

}  // namespace nlcs::bargmann
