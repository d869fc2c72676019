#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace nlcs::quad {

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct ComplexQuadResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    long evaluations = 0;
};

// Process-wide default evaluation budget; the CLI seeds it from NLCS_MAX_EVALS.
long& global_max_evaluations();

struct QuadConfig {
    QuadConfig() : max_evaluations(global_max_evaluations()) {}
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    long max_evaluations;
    // Interior break points (e.g. a known peak location); points outside the
    // integration range are ignored.
    std::vector<double> split_points;
};

using Integrand = std::function<double(double)>;
using ComplexIntegrand = std::function<std::complex<double>(double)>;

// Adaptive Gauss-Kronrod (7-15) on [a, b]. `left_singular_exponent` p in [0,1)
// declares an algebraic endpoint singularity f ~ (t-a)^{-p}, removed by the
// substitution u = (t-a)^{1-p}. Callers state the exponent; it is never guessed.
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg,
                            double left_singular_exponent = 0.0);
ComplexQuadResult integrate_finite_complex(const ComplexIntegrand& f, double a, double b,
                                   const QuadConfig& cfg, double left_singular_exponent = 0.0);

// Adaptive integration on (0, inf): adaptive core on (0, L) followed by
// doubling tail blocks mapped through t = e^u, stopping once two consecutive
// blocks fall below a tenth of the accuracy target.
QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg,
                                   double left_singular_exponent = 0.0);
ComplexQuadResult integrate_semi_infinite_complex(const ComplexIntegrand& f, const QuadConfig& cfg,
                                          double left_singular_exponent = 0.0);

}  // namespace nlcs::quad
