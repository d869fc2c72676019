#pragma once

#include <complex>
#include <vector>

#include "nlcs/specfun.hpp"

namespace nlcs::states {

enum class DomainClass {
    Invalid,             // gamma <= 0 or sigma a negative integer
    NormalizableOnly,    // states exist but no verified identity-resolution measure
    MeasureAdmissible,   // (gamma, sigma) in S1 u S2
};

struct Params {
    double gamma = 0.0;
    double sigma = 0.0;
    DomainClass domain_class = DomainClass::Invalid;
};

// S1 = (0,inf) x (-1,0],  S2 = (0,1/2] x (-1,inf).
Params classify(double gamma, double sigma);

struct StateSpec {
    Params params;
    std::complex<double> z{0.0, 0.0};
};

// x_0 = 0,  x_n = (n+sigma)^2 (n+2 gamma-1)/n for n >= 1.
double sequence_term(const Params& p, int n);

// x_n! = (sigma+1)_n^2 (2 gamma)_n / n!, in log space for large n.
double generalized_factorial(const Params& p, int n);
double log_generalized_factorial(const Params& p, int n);

// Normalization factor 2F3(1,1; 2 gamma, sigma+1, sigma+1; zz), zz = |z|^2.
specfun::SeriesValue normalization(const Params& p, double zz, double tol);

// Unnormalized expansion coefficient c_n(z) = sqrt(n!/(2 gamma)_n) zbar^n/(sigma+1)_n.
std::complex<double> coefficient(const Params& p, std::complex<double> z, int n);

// <a|b> with the convention <z|w> ~ 2F3(...; z conj(w)); overlap(s, s) = 1.
std::complex<double> overlap(const StateSpec& a, const StateSpec& b, double tol);

// P_n = N^{-1} (n!/(2 gamma)_n) |z|^{2n} / (sigma+1)_n^2 for n = 0..n_max,
// computed from log-space magnitudes. The tail mass 1 - sum P_n is left to
// the caller to inspect.
std::vector<double> photon_distribution(const StateSpec& s, int n_max, double tol);

}  // namespace nlcs::states
