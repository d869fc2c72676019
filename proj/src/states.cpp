#include "nlcs/states.hpp"

#include <cmath>

#include "nlcs/errors.hpp"

namespace nlcs::states {
namespace {

void require_valid(const Params& p) {
    if (p.domain_class == DomainClass::Invalid)
        throw ParameterOutOfDomain("parameters require gamma > 0 and sigma not in {-1,-2,...}");
}

// log |(a)_n| for any real a that is not a nonpositive integer along the way.
double log_abs_pochhammer(double a, int n) {
    double s = 0.0;
    for (int k = 0; k < n; ++k) s += std::log(std::abs(a + k));
    return s;
}

}  // namespace

Params classify(double gamma, double sigma) {
    Params p{gamma, sigma, DomainClass::Invalid};
    const bool sigma_negative_integer = sigma < 0.0 && sigma == std::floor(sigma);
    if (!(gamma > 0.0) || sigma_negative_integer) return p;
    const bool in_s1 = sigma > -1.0 && sigma <= 0.0;
    const bool in_s2 = gamma <= 0.5 && sigma > -1.0;
    p.domain_class = (in_s1 || in_s2) ? DomainClass::MeasureAdmissible : DomainClass::NormalizableOnly;
    return p;
}

double sequence_term(const Params& p, int n) {
    require_valid(p);
    if (n == 0) return 0.0;
    const double np = double(n);
    return (np + p.sigma) * (np + p.sigma) * (np + 2.0 * p.gamma - 1.0) / np;
}

double generalized_factorial(const Params& p, int n) {
    require_valid(p);
    if (n > 30) return std::exp(log_generalized_factorial(p, n));
    return specfun::pochhammer(p.sigma + 1.0, n) * specfun::pochhammer(p.sigma + 1.0, n) *
           specfun::pochhammer(2.0 * p.gamma, n) / specfun::pochhammer(1.0, n);
}

double log_generalized_factorial(const Params& p, int n) {
    require_valid(p);
    return 2.0 * log_abs_pochhammer(p.sigma + 1.0, n) +
           specfun::log_pochhammer(2.0 * p.gamma, n) - specfun::log_gamma(double(n) + 1.0);
}

specfun::SeriesValue normalization(const Params& p, double zz, double tol) {
    require_valid(p);
    if (zz < 0.0) throw ParameterOutOfDomain("normalization argument zz = |z|^2 must be >= 0");
    const double num[2] = {1.0, 1.0};
    const double den[3] = {2.0 * p.gamma, p.sigma + 1.0, p.sigma + 1.0};
    return specfun::hyp_pfq(num, den, zz, tol);
}

std::complex<double> coefficient(const Params& p, std::complex<double> z, int n) {
    require_valid(p);
    if (n == 0) return {1.0, 0.0};
    const double log_mag = 0.5 * (specfun::log_gamma(double(n) + 1.0) -
                                  specfun::log_pochhammer(2.0 * p.gamma, n));
    const double poch_sigma = specfun::pochhammer(p.sigma + 1.0, n);
    return std::exp(log_mag) * std::pow(std::conj(z), n) / poch_sigma;
}

std::complex<double> overlap(const StateSpec& a, const StateSpec& b, double tol) {
    if (a.params.gamma != b.params.gamma || a.params.sigma != b.params.sigma)
        throw ParameterOutOfDomain("overlap requires both states to share (gamma, sigma)");
    require_valid(a.params);
    const double num[2] = {1.0, 1.0};
    const double den[3] = {2.0 * a.params.gamma, a.params.sigma + 1.0, a.params.sigma + 1.0};
    const std::complex<double> cross =
        specfun::hyp_pfq(num, den, a.z * std::conj(b.z), tol).value;
    const double na = normalization(a.params, std::norm(a.z), tol).value.real();
    const double nb = normalization(b.params, std::norm(b.z), tol).value.real();
    return cross / std::sqrt(na * nb);
}

std::vector<double> photon_distribution(const StateSpec& s, int n_max, double tol) {
    require_valid(s.params);
    std::vector<double> probs(n_max + 1, 0.0);
    const double zz = std::norm(s.z);
    if (zz == 0.0) {
        probs[0] = 1.0;
        return probs;
    }
    const double log_norm = std::log(normalization(s.params, zz, tol).value.real());
    for (int n = 0; n <= n_max; ++n) {
        const double log_p = specfun::log_gamma(double(n) + 1.0) -
                             specfun::log_pochhammer(2.0 * s.params.gamma, n) +
                             double(n) * std::log(zz) -
                             2.0 * log_abs_pochhammer(s.params.sigma + 1.0, n) - log_norm;
        probs[n] = std::exp(log_p);
    }
    return probs;
}

}  // namespace nlcs::states
