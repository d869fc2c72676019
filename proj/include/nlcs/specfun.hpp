#pragma once

#include <complex>
#include <span>

#include "nlcs/quad.hpp"

namespace nlcs::specfun {

// A converged series evaluation. `tail_estimate` is the relative magnitude of
// the last accepted term; at most the requested tolerance on success.
struct SeriesValue {
    std::complex<double> value{0.0, 0.0};
    int terms_used = 0;
    double tail_estimate = 0.0;
};

// Lanczos (g = 7) gamma and log-gamma; reflection below 1/2. Relative error
// below 1e-13 for arguments in (0, 50), which covers every call site here.
double gamma_fn(double x);
double log_gamma(double x);  // requires x > 0

// Rising factorial (a)_n. The log companion requires a > 0; the plain product
// may overflow to infinity for large n, which the caller can detect.
double pochhammer(double a, int n);
double log_pochhammer(double a, int n);

// Generalized hypergeometric series pFq(num; den; x) by term-ratio recursion
// with compensated summation. Only entire cases (p <= q+1) arise here.
SeriesValue hyp_pfq(std::span<const double> numerators, std::span<const double> denominators,
                    std::complex<double> x, double tol);

double bessel_i(double order, double x);  // via the 0F1 representation; order > -1
double bessel_j(double order, double x);  // alternating 0F1 series, validated for x <= 30

// Macdonald function K_order(x), evaluated literally as the Laplace-type
// integral (1/2)(x/2)^s int_0^inf exp(-t - x^2/4t) t^(-s-1) dt, x > 0.
quad::QuadResult macdonald_k(double order, double x, double tol);

// Generalized Laguerre polynomial L_n^(alpha)(x), stable three-term recurrence.
double laguerre(int n, double alpha, double x);

// Kampe de Feriet F^{1:0;0}_{1:0;1}(1 : -; - | d1 : -; b1 | t, u), summed over
// anti-diagonals r+s = m:  sum_m (1)_m/(d1)_m sum_{s<=m} t^(m-s) u^s / ((m-s)! s! (b1)_s).
SeriesValue kampe_de_feriet_1011(double d1, double b1, std::complex<double> t,
                                 std::complex<double> u, double tol);

// Meijer G^{20}_{12}(z | alpha; beta, lambda) through its Whittaker-derived
// integral representation; requires alpha - lambda > 0 and z > 0.
quad::QuadResult meijer_g2012(double alpha, double beta, double lam, double z, double tol);

}  // namespace nlcs::specfun
