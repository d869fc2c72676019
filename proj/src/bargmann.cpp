#include "nlcs/bargmann.hpp"

#include <cmath>

#include "nlcs/errors.hpp"
#include "nlcs/measure.hpp"
#include "nlcs/quad.hpp"
#include "nlcs/specfun.hpp"

namespace nlcs::bargmann {
namespace {

double kernel_prefactor_log(const BargmannSpec& spec) {
    // sqrt(2 beta^mu / Gamma(mu))
    return 0.5 * (std::log(2.0) + spec.osc.mu * std::log(spec.osc.beta) -
                  specfun::log_gamma(spec.osc.mu));
}

std::complex<double> kernel(const BargmannSpec& spec, std::complex<double> z, double xi,
                            double tol) {
    const double mu = spec.osc.mu;
    const double beta = spec.osc.beta;
    const std::complex<double> kdf =
        specfun::kampe_de_feriet_1011(spec.sigma + 1.0, mu, z, -beta * z * xi * xi, tol).value;
    return std::exp(kernel_prefactor_log(spec) + (mu - 0.5) * std::log(xi) -
                    0.5 * beta * xi * xi) *
           kdf;
}

// Gaussian-decay cutoff: beyond it the e^(-beta xi^2) factor times any growth
// the kernel can muster is below 1e-18. A degree-n Laguerre factor contributes
// (beta xi^2)^n near the cutoff, so the budget grows with n.
double gaussian_cutoff(const BargmannSpec& spec, std::complex<double> z, int n = 0) {
    const double beta = spec.osc.beta;
    return std::sqrt((55.0 + 5.0 * n) / beta) + 2.0 * std::sqrt(std::abs(z) / beta);
}

void check_grid(const GridFunction& phi) {
    if (phi.xi.size() != phi.samples.size() || phi.xi.size() < 2)
        throw InvalidGrid("grid and samples must have equal length >= 2");
    if (!(phi.xi.front() > 0.0)) throw InvalidGrid("grid must start at xi > 0");
    for (std::size_t i = 1; i < phi.xi.size(); ++i)
        if (!(phi.xi[i] > phi.xi[i - 1])) throw InvalidGrid("grid must be strictly increasing");
    if (std::abs(phi.samples.back()) >= 1e-12)
        throw InvalidGrid("function not negligible at the grid end; extend the grid");
}

}  // namespace

BargmannSpec BargmannSpec::make(const pho::OscillatorConfig& osc, double sigma) {
    if (!(osc.mu > 1.5)) throw ParameterOutOfDomain("Bargmann coupling requires mu > 3/2");
    if (!(sigma > -1.0 && sigma <= 0.0))
        throw ParameterOutOfDomain("Bargmann coupling requires -1 < sigma <= 0");
    BargmannSpec spec{osc, sigma, states::classify(0.5 * osc.mu, sigma)};
    if (spec.params.domain_class != states::DomainClass::MeasureAdmissible)
        throw ParameterOutOfDomain("derived (gamma, sigma) is not measure-admissible");
    return spec;
}

std::complex<double> wavefunction(const BargmannSpec& spec, std::complex<double> z, double xi,
                                  double tol) {
    if (!(xi > 0.0)) throw ParameterOutOfDomain("wavefunction requires xi > 0");
    const double norm =
        states::normalization(spec.params, std::norm(z), tol).value.real();
    return kernel(spec, std::conj(z), xi, tol) / std::sqrt(norm);
}

std::complex<double> bargmann_transform(const BargmannSpec& spec, const GridFunction& phi,
                                        std::complex<double> z, double tol) {
    check_grid(phi);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < phi.xi.size(); ++i) {
        const double h = phi.xi[i + 1] - phi.xi[i];
        acc += 0.5 * h *
               (kernel(spec, z, phi.xi[i], tol) * phi.samples[i] +
                kernel(spec, z, phi.xi[i + 1], tol) * phi.samples[i + 1]);
    }
    return acc;
}

std::complex<double> bargmann_transform(const BargmannSpec& spec,
                                        const std::function<double(double)>& phi,
                                        std::complex<double> z, double tol) {
    auto integrand = [&](double xi) { return kernel(spec, z, xi, tol / 10.0) * phi(xi); };
    quad::QuadConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = tol / 100.0;
    const double cutoff = gaussian_cutoff(spec, z);
    return quad::integrate_finite_complex(quad::ComplexIntegrand(integrand), 1e-8, cutoff, cfg).value;
}

std::complex<double> basis_image(const BargmannSpec& spec, int n, std::complex<double> z) {
    const double mu = spec.osc.mu;
    const double mag = 0.5 * (specfun::log_gamma(double(n) + 1.0) -
                              specfun::log_pochhammer(mu, n));
    return std::exp(mag) * std::pow(z, n) / specfun::pochhammer(spec.sigma + 1.0, n);
}

std::complex<double> basis_image_quadrature(const BargmannSpec& spec, int n,
                                            std::complex<double> z, double tol) {
    auto integrand = [&](double xi) -> std::complex<double> {
        return kernel(spec, z, xi, tol / 10.0) * pho::eigenfunction(spec.osc, n, xi);
    };
    quad::QuadConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = tol / 100.0;
    const double cutoff = gaussian_cutoff(spec, z, n);
    return quad::integrate_finite_complex(quad::ComplexIntegrand(integrand), 1e-8, cutoff, cfg).value;
}

std::complex<double> basis_image_bessel(const BargmannSpec& spec, int n, double z, double tol) {
    if (spec.sigma != 0.0)
        throw ParameterOutOfDomain("Bessel-kernel route exists only at sigma = 0");
    if (!(z > 0.0)) throw ParameterOutOfDomain("Bessel-kernel route validated for real z > 0");
    const double mu = spec.osc.mu;
    const double beta = spec.osc.beta;
    auto integrand = [&](double xi) {
        return std::sqrt(xi) * std::exp(-0.5 * beta * xi * xi) *
               specfun::bessel_j(mu - 1.0, 2.0 * std::sqrt(beta * z) * xi) *
               pho::eigenfunction(spec.osc, n, xi);
    };
    quad::QuadConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = tol / 100.0;
    const double cutoff = gaussian_cutoff(spec, z, n);
    const double integral = quad::integrate_finite(integrand, 1e-8, cutoff, cfg).value;
    const double pref_log = 0.5 * (std::log(2.0 * beta) + specfun::log_gamma(mu));
    return std::exp(pref_log) * std::pow(z, 0.5 * (1.0 - mu)) * std::exp(z) * integral;
}

double bessel_identity_check(double mu, double beta, int n, double z, double tol) {
    if (!(mu > 1.5) || !(beta > 0.0) || !(z > 0.0))
        throw ParameterOutOfDomain("identity requires mu > 3/2, beta > 0, z > 0");
    const double root = 2.0 * std::sqrt(beta * z);
    auto integrand = [&](double xi) {
        return std::pow(xi, mu) * std::exp(-beta * xi * xi) *
               specfun::bessel_j(mu - 1.0, root * xi) *
               specfun::laguerre(n, mu - 1.0, beta * xi * xi);
    };
    quad::QuadConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = 1e-300;
    const double cutoff = std::sqrt((46.0 + 5.0 * n) / beta);
    const double lhs = quad::integrate_finite(integrand, 1e-8, cutoff, cfg).value;
    const double rhs = std::exp((double(n) + 0.5 * (mu - 1.0)) * std::log(z) - z -
                                specfun::log_gamma(double(n) + 1.0) - std::log(2.0) -
                                0.5 * (mu + 1.0) * std::log(beta));
    return std::abs(lhs / rhs - 1.0);
}

double kdf_identity_check(const BargmannSpec& spec, int n, std::complex<double> z, double tol) {
    const double mu = spec.osc.mu;
    const double beta = spec.osc.beta;
    auto integrand = [&](double xi) -> std::complex<double> {
        const std::complex<double> kdf =
            specfun::kampe_de_feriet_1011(spec.sigma + 1.0, mu, z, -beta * z * xi * xi, tol / 10.0)
                .value;
        return std::pow(xi, 2.0 * mu - 1.0) * std::exp(-beta * xi * xi) * kdf *
               specfun::laguerre(n, mu - 1.0, beta * xi * xi);
    };
    quad::QuadConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = 1e-300;
    const double cutoff = gaussian_cutoff(spec, z, n);
    const std::complex<double> lhs =
        quad::integrate_finite_complex(quad::ComplexIntegrand(integrand), 1e-8, cutoff, cfg).value;
    const std::complex<double> rhs = std::exp(specfun::log_gamma(mu) - std::log(2.0) -
                                              mu * std::log(beta)) *
                                     std::pow(z, n) /
                                     specfun::pochhammer(spec.sigma + 1.0, n);
    return std::abs(lhs - rhs) / std::abs(rhs);
}

std::complex<double> reproducing_kernel(const BargmannSpec& spec, std::complex<double> z,
                                        std::complex<double> w, double tol) {
    const double num[2] = {1.0, 1.0};
    const double den[3] = {spec.osc.mu, spec.sigma + 1.0, spec.sigma + 1.0};
    return specfun::hyp_pfq(num, den, z * std::conj(w), tol).value;
}

double norm_via_bargmann(const BargmannSpec& spec, const GridFunction& phi, double tol,
                         int n_max) {
    check_grid(phi);
    // Project onto the eigenbasis with the grid's trapezoid weights; the
    // angular integral kills the cross terms, leaving radial moments.
    std::vector<std::complex<double>> coeffs(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        std::complex<double> c{0.0, 0.0};
        for (std::size_t i = 0; i + 1 < phi.xi.size(); ++i) {
            const double h = phi.xi[i + 1] - phi.xi[i];
            c += 0.5 * h *
                 (pho::eigenfunction(spec.osc, n, phi.xi[i]) * phi.samples[i] +
                  pho::eigenfunction(spec.osc, n, phi.xi[i + 1]) * phi.samples[i + 1]);
        }
        coeffs[n] = c;
    }
    const auto moments = measure::moment_set(spec.params, n_max, tol);
    double norm = 0.0;
    for (int n = 0; n <= n_max; ++n)
        norm += std::norm(coeffs[n]) * (1.0 + moments[n].relative_deviation);
    return norm;
}

}  // namespace nlcs::bargmann
