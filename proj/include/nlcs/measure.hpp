#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nlcs/parallel.hpp"
#include "nlcs/quad.hpp"
#include "nlcs/states.hpp"

namespace nlcs::measure {

enum class WeightPath {
    MacdonaldClosedForm,  // sigma = 0 or 2 gamma = 1: order reduction to G^{20}_{02}
    Case1Integral,        // sigma in (-1, 0): outer exponential integral of G^{20}_{12}
    Case2Integral,        // 2 gamma in (0, 1): Macdonald kernel on (1, inf)
};

// Paths whose hypotheses hold for the given parameters, default first.
std::vector<WeightPath> admissible_paths(const states::Params& p);

// G^{30}_{13}(r | 1; 2 gamma, sigma+1, sigma+1), strictly positive.
quad::QuadResult meijer_g3013(const states::Params& p, double r, double tol,
                              std::optional<WeightPath> forced_path = std::nullopt);

// Weight m(r) = [2/(Gamma(2 gamma) Gamma^2(sigma+1))] (1/r) G^{30}_{13}(r | 1; ...).
double weight(const states::Params& p, double r, double tol);

std::vector<double> weight_grid(const states::Params& p, const std::vector<double>& r_values,
                                double tol, Execution mode = Execution::Parallel);

struct MomentResult {
    int n = 0;
    quad::QuadResult integral;
    double target = 0.0;              // 2 (2 gamma)_n (sigma+1)_n^2 / n!
    double relative_deviation = 0.0;  // integral/target - 1
};

// Quadrature of int_0^inf r^n m(r) dr against its closed-form target.
MomentResult moment(const states::Params& p, int n, double tol);
std::vector<MomentResult> moment_set(const states::Params& p, int n_max, double tol,
                                     Execution mode = Execution::Parallel);

// O_{nk} for n,k <= n_max. Off-diagonals are exactly 0 (angular orthogonality);
// diagonals are n! moment(n) / (2 (2 gamma)_n (sigma+1)_n^2), expected 1.
std::vector<std::vector<double>> identity_resolution_check(const states::Params& p, int n_max,
                                                           double tol,
                                                           Execution mode = Execution::Parallel);

struct AdmissibilityRow {
    std::string label;       // parameter assignment of the Mellin-factor split
    std::string conditions;  // conditions the row imposes on (gamma, sigma)
    bool satisfied = false;
};

struct AdmissibilityReport {
    std::array<AdmissibilityRow, 4> rows;
    states::DomainClass result = states::DomainClass::Invalid;
};

AdmissibilityReport admissibility_table(const states::Params& p);

}  // namespace nlcs::measure
