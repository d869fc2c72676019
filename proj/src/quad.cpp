#include "nlcs/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nlcs/errors.hpp"

namespace nlcs::quad {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Segment {
    double a, b;
    T value;
    double error;
};

template <typename T, typename F>
Segment<T> gk15(const F& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    T fc = f(c);
    T resg = fc * kWg[3];
    T resk = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        T fs = f(c - dx) + f(c + dx);
        resk += fs * kWgk[j];
        if (j % 2 == 1) resg += fs * kWg[j / 2];
    }
    return {a, b, resk * h, std::abs((resk - resg) * h)};
}

template <typename T, typename F>
Segment<T> sum_segments(std::vector<Segment<T>>& segs) {
    // Fixed left-to-right reduction so results are reproducible regardless of
    // the subdivision history.
    std::sort(segs.begin(), segs.end(),
              [](const Segment<T>& x, const Segment<T>& y) { return x.a < y.a; });
    Segment<T> total{segs.front().a, segs.back().b, T{}, 0.0};
    for (const auto& s : segs) {
        total.value += s.value;
        total.error += s.error;
    }
    return total;
}

template <typename T, typename F>
Segment<T> adapt(const F& f, double a, double b, const QuadConfig& cfg,
                 const std::vector<double>& splits, long* evaluations) {
    std::vector<double> pts{a};
    for (double s : splits)
        if (s > a && s < b) pts.push_back(s);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<Segment<T>> segs;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        segs.push_back(gk15<T>(f, pts[i], pts[i + 1]));
        *evaluations += 15;
    }

    const double min_width = 1e-14 * (b - a);
    for (;;) {
        T tv{};
        double te = 0.0;
        for (const auto& s : segs) {
            tv += s.value;
            te += s.error;
        }
        if (te <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(tv))) break;

        std::size_t wi = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].error > segs[wi].error) wi = i;
        const Segment<T> w = segs[wi];
        if (w.b - w.a < min_width)
            throw QuadratureNoConvergence("quadrature stalled: interval below resolution limit");
        if (*evaluations + 30 > cfg.max_evaluations)
            throw BudgetExceeded("quadrature evaluation budget exhausted");
        const double m = 0.5 * (w.a + w.b);
        segs[wi] = gk15<T>(f, w.a, m);
        segs.push_back(gk15<T>(f, m, w.b));
        *evaluations += 30;
    }
    return sum_segments<T, F>(segs);
}

template <typename T, typename F>
Segment<T> adapt_with_hint(const F& f, double a, double b, const QuadConfig& cfg, double p,
                           const std::vector<double>& splits, long* evaluations) {
    if (p <= 0.0) return adapt<T>(f, a, b, cfg, splits, evaluations);
    if (p >= 1.0)
        throw ParameterOutOfDomain("endpoint singularity exponent must be < 1 to be integrable");
    // u = (t-a)^(1-p) regularises f ~ (t-a)^(-p) at the left endpoint.
    const double s = 1.0 / (1.0 - p);
    const double ub = std::pow(b - a, 1.0 - p);
    auto g = [&](double u) -> T { return f(a + std::pow(u, s)) * (s * std::pow(u, s - 1.0)); };
    std::vector<double> usplits;
    for (double sp : splits)
        if (sp > a && sp < b) usplits.push_back(std::pow(sp - a, 1.0 - p));
    Segment<T> seg = adapt<T>(g, 0.0, ub, cfg, usplits, evaluations);
    seg.a = a;
    seg.b = b;
    return seg;
}

template <typename T, typename F>
Segment<T> semi_infinite(const F& f, const QuadConfig& cfg, double p, long* evaluations) {
    double core_end = 1.0;
    for (double s : cfg.split_points) core_end = std::max(core_end, 2.0 * s);

    Segment<T> core =
        adapt_with_hint<T>(f, 0.0, core_end, cfg, p, cfg.split_points, evaluations);
    T total = core.value;
    double error = core.error;

    auto g = [&](double u) -> T {
        const double t = std::exp(u);
        return f(t) * t;
    };

    QuadConfig block_cfg = cfg;
    double left = core_end;
    int calm = 0;
    while (calm < 2) {
        if (left > 1e18)
            throw QuadratureNoConvergence("semi-infinite tail did not decay below tolerance");
        const double threshold = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)) / 10.0;
        block_cfg.abs_tol = std::max(cfg.abs_tol, threshold / 2.0);
        Segment<T> block =
            adapt<T>(g, std::log(left), std::log(2.0 * left), block_cfg, {}, evaluations);
        total += block.value;
        error += block.error;
        left *= 2.0;
        calm = (std::abs(block.value) < threshold) ? calm + 1 : 0;
    }
    return {0.0, left, total, error};
}

}  // namespace

long& global_max_evaluations() {
    static long budget = 5'000'000;
    return budget;
}

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg,
                            double left_singular_exponent) {
    if (!(a < b)) throw ParameterOutOfDomain("integration bounds must satisfy a < b");
    long evaluations = 0;
    Segment<double> s = adapt_with_hint<double>(f, a, b, cfg, left_singular_exponent,
                                                cfg.split_points, &evaluations);
    return {s.value, s.error, evaluations};
}

ComplexQuadResult integrate_finite_complex(const ComplexIntegrand& f, double a, double b,
                                   const QuadConfig& cfg, double left_singular_exponent) {
    if (!(a < b)) throw ParameterOutOfDomain("integration bounds must satisfy a < b");
    long evaluations = 0;
    Segment<std::complex<double>> s = adapt_with_hint<std::complex<double>>(
        f, a, b, cfg, left_singular_exponent, cfg.split_points, &evaluations);
    return {s.value, s.error, evaluations};
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg,
                                   double left_singular_exponent) {
    long evaluations = 0;
    Segment<double> s = semi_infinite<double>(f, cfg, left_singular_exponent, &evaluations);
    return {s.value, s.error, evaluations};
}

ComplexQuadResult integrate_semi_infinite_complex(const ComplexIntegrand& f, const QuadConfig& cfg,
                                          double left_singular_exponent) {
    long evaluations = 0;
    Segment<std::complex<double>> s =
        semi_infinite<std::complex<double>>(f, cfg, left_singular_exponent, &evaluations);
    return {s.value, s.error, evaluations};
}

}  // namespace nlcs::quad
