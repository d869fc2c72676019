#include "nlcs/measure.hpp"

#include <cmath>

#include "nlcs/errors.hpp"
#include "nlcs/specfun.hpp"

namespace nlcs::measure {
namespace {

constexpr int kMaxMomentOrder = 12;

void require_admissible(const states::Params& p) {
    if (p.domain_class != states::DomainClass::MeasureAdmissible)
        throw ParameterOutOfDomain("(gamma, sigma) outside S1 u S2: no verified measure");
}

bool closed_form_applies(const states::Params& p) {
    return p.sigma == 0.0 || 2.0 * p.gamma == 1.0;
}

// Parameter coincidence with the upper parameter 1 reduces G^{30}_{13} to
// G^{20}_{02}(r | b, c) = 2 r^{(b+c)/2} K_{c-b}(2 sqrt r).
quad::QuadResult g3013_closed_form(const states::Params& p, double r, double tol) {
    double b, c;
    if (p.sigma == 0.0) {
        b = 2.0 * p.gamma;
        c = 1.0;
    } else {
        b = p.sigma + 1.0;
        c = p.sigma + 1.0;
    }
    quad::QuadResult k = specfun::macdonald_k(c - b, 2.0 * std::sqrt(r), tol);
    const double pref = 2.0 * std::pow(r, 0.5 * (b + c));
    return {pref * k.value, pref * k.error_estimate, k.evaluations};
}

// int_0^inf t^(a-1) e^(-t) G^{20}_{12}(r/t | 1; b, c) dt with a = 2 gamma,
// b = c = sigma + 1; the inner integral runs one decade tighter.
quad::QuadResult g3013_case1(const states::Params& p, double r, double tol) {
    const double a = 2.0 * p.gamma;
    const double bc = p.sigma + 1.0;
    long inner_evaluations = 0;
    auto integrand = [&](double t) {
        quad::QuadResult inner = specfun::meijer_g2012(1.0, bc, bc, r / t, tol / 10.0);
        inner_evaluations += inner.evaluations;
        return std::exp((a - 1.0) * std::log(t) - t) * inner.value;
    };
    quad::QuadConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = 1e-305;
    cfg.split_points = {r, 1.0};
    const double hint = a < 1.0 ? 1.0 - a : 0.0;
    quad::QuadResult outer = quad::integrate_semi_infinite(integrand, cfg, hint);
    outer.evaluations += inner_evaluations;
    return outer;
}

// 2 r^(sigma+1) / Gamma(1-2 gamma) int_1^inf t^sigma (t-1)^(-2 gamma)
// K_0(2 sqrt(r t)) dt, shifted to u = t - 1.
quad::QuadResult g3013_case2(const states::Params& p, double r, double tol) {
    const double b = 2.0 * p.gamma;
    const double s = p.sigma;
    long inner_evaluations = 0;
    auto integrand = [&](double u) {
        quad::QuadResult k =
            specfun::macdonald_k(0.0, 2.0 * std::sqrt(r * (1.0 + u)), tol / 10.0);
        inner_evaluations += k.evaluations;
        return std::pow(u, -b) * std::pow(1.0 + u, s) * k.value;
    };
    quad::QuadConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = 1e-305;
    quad::QuadResult outer = quad::integrate_semi_infinite(integrand, cfg, b);
    const double pref =
        2.0 * std::pow(r, s + 1.0) / specfun::gamma_fn(1.0 - b);
    outer.value *= pref;
    outer.error_estimate *= pref;
    outer.evaluations += inner_evaluations;
    return outer;
}

}  // namespace

std::vector<WeightPath> admissible_paths(const states::Params& p) {
    require_admissible(p);
    std::vector<WeightPath> paths;
    if (closed_form_applies(p)) paths.push_back(WeightPath::MacdonaldClosedForm);
    // Boundary parameters sigma = 0 and 2 gamma = 1 hit Gamma poles in the
    // integral representations; the closed form covers them instead.
    if (p.sigma > -1.0 && p.sigma < 0.0) paths.push_back(WeightPath::Case1Integral);
    if (p.gamma > 0.0 && p.gamma < 0.5) paths.push_back(WeightPath::Case2Integral);
    return paths;
}

quad::QuadResult meijer_g3013(const states::Params& p, double r, double tol,
                              std::optional<WeightPath> forced_path) {
    require_admissible(p);
    if (!(r > 0.0)) throw ParameterOutOfDomain("meijer_g3013 requires r > 0");
    WeightPath path;
    if (forced_path) {
        path = *forced_path;
        const auto paths = admissible_paths(p);
        bool ok = false;
        for (WeightPath q : paths) ok = ok || q == path;
        if (!ok) throw ParameterOutOfDomain("requested evaluation path not admissible here");
    } else {
        path = admissible_paths(p).front();
    }
    switch (path) {
        case WeightPath::MacdonaldClosedForm: return g3013_closed_form(p, r, tol);
        case WeightPath::Case1Integral: return g3013_case1(p, r, tol);
        case WeightPath::Case2Integral: return g3013_case2(p, r, tol);
    }
    throw ParameterOutOfDomain("unreachable weight path");
}

double weight(const states::Params& p, double r, double tol) {
    const double pref = 2.0 / (specfun::gamma_fn(2.0 * p.gamma) *
                               specfun::gamma_fn(p.sigma + 1.0) * specfun::gamma_fn(p.sigma + 1.0));
    // Multiplication formula: G(r | 0; 2g-1, s, s) = (1/r) G(r | 1; 2g, s+1, s+1).
    return pref * meijer_g3013(p, r, tol).value / r;
}

std::vector<double> weight_grid(const states::Params& p, const std::vector<double>& r_values,
                                double tol, Execution mode) {
    require_admissible(p);
    std::vector<double> out(r_values.size(), 0.0);
    for_each_index(r_values.size(), mode, [&](std::size_t i) { out[i] = weight(p, r_values[i], tol); });
    return out;
}

MomentResult moment(const states::Params& p, int n, double tol) {
    require_admissible(p);
    if (n < 0 || n > kMaxMomentOrder)
        throw ParameterOutOfDomain("moment order limited to 0..12: the integrand tail cost explodes");

    const double target = 2.0 * specfun::pochhammer(2.0 * p.gamma, n) *
                          specfun::pochhammer(p.sigma + 1.0, n) *
                          specfun::pochhammer(p.sigma + 1.0, n) /
                          specfun::pochhammer(1.0, n);

    const double point_tol = tol / 10.0;
    auto integrand = [&](double r) { return std::pow(r, n) * weight(p, r, point_tol); };
    quad::QuadConfig cfg;
    cfg.rel_tol = tol / 3.0;
    cfg.abs_tol = 1e-305;
    cfg.split_points = {1.0, double(n + 1) * double(n + 1)};
    // Small-r behaviour m ~ r^(min(2g, s+1) - 1), algebraic only for n = 0.
    const double leading = std::min(2.0 * p.gamma, p.sigma + 1.0);
    const double hint = (n == 0 && leading < 1.0) ? 1.0 - leading : 0.0;
    quad::QuadResult integral = quad::integrate_semi_infinite(integrand, cfg, hint);
    return {n, integral, target, integral.value / target - 1.0};
}

std::vector<MomentResult> moment_set(const states::Params& p, int n_max, double tol,
                                     Execution mode) {
    require_admissible(p);
    std::vector<MomentResult> out(n_max + 1);
    for_each_index(std::size_t(n_max) + 1, mode, [&](std::size_t n) { out[n] = moment(p, int(n), tol); });
    return out;
}

std::vector<std::vector<double>> identity_resolution_check(const states::Params& p, int n_max,
                                                           double tol, Execution mode) {
    // Off-diagonals vanish exactly through the angular integral; only the
    // diagonal needs quadrature.
    std::vector<MomentResult> diag = moment_set(p, n_max, tol, mode);
    std::vector<std::vector<double>> matrix(n_max + 1, std::vector<double>(n_max + 1, 0.0));
    for (int n = 0; n <= n_max; ++n) matrix[n][n] = 1.0 + diag[n].relative_deviation;
    return matrix;
}

AdmissibilityReport admissibility_table(const states::Params& p) {
    const bool base = p.gamma > 0.0 && p.sigma > -1.0;
    const bool s1 = base && p.sigma <= 0.0;
    const bool s2 = base && p.gamma <= 0.5;
    AdmissibilityReport report;
    report.rows = {AdmissibilityRow{"a=b=sigma+1, c=2gamma", "0<gamma, -1<sigma<=0", s1},
                   AdmissibilityRow{"a=2gamma, b=c=sigma+1", "0<gamma, -1<sigma<=0", s1},
                   AdmissibilityRow{"a=2gamma, b=c=sigma+1", "0<gamma<=1/2, -1<sigma", s2},
                   AdmissibilityRow{"a=c=sigma+1, b=2gamma", "0<gamma, -1<sigma<=0", s1}};
    report.result = states::classify(p.gamma, p.sigma).domain_class;
    return report;
}

}  // namespace nlcs::measure
