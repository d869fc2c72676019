// Acceptance gate: ten independent criteria, one pass/fail line each.
// Usage: acceptance [path-to-nlcs-binary]   (the CLI path enables criterion 10)

#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nlcs/bargmann.hpp"
#include "nlcs/measure.hpp"
#include "nlcs/pho.hpp"
#include "nlcs/specfun.hpp"
#include "nlcs/states.hpp"

namespace bg = nlcs::bargmann;
namespace ms = nlcs::measure;
namespace ph = nlcs::pho;
namespace sf = nlcs::specfun;
namespace st = nlcs::states;
using cplx = std::complex<double>;

namespace {

int failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %2d [%s] %s%s%s\n", index, pass ? "PASS" : "FAIL", name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

std::string fmt_max(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "max residual %.3g", v);
    return buf;
}

// 1. Moment identity across five parameter pairs, n = 0..8, within 1e-6.
void criterion_moments() {
    double worst = 0.0;
    bool ok = true;
    for (auto [g, s] : std::vector<std::pair<double, double>>{
             {0.5, 0.0}, {1.0, -0.5}, {2.0, -0.25}, {0.4, 0.5}, {0.3, 1.5}}) {
        const auto p = st::classify(g, s);
        for (const auto& m : ms::moment_set(p, 8, 2e-7)) {
            worst = std::max(worst, std::abs(m.relative_deviation));
            ok = ok && std::abs(m.relative_deviation) <= 1e-6;
        }
    }
    report(1, "moment identity, 5 parameter pairs, n <= 8", ok, fmt_max(worst));
}

// 2. Resolution of identity at one S1 and one S2 pair.
void criterion_identity() {
    double worst = 0.0;
    bool ok = true;
    for (auto [g, s] : std::vector<std::pair<double, double>>{{1.0, -0.5}, {0.5, 1.5}}) {
        const auto matrix = ms::identity_resolution_check(st::classify(g, s), 8, 2e-7);
        for (int n = 0; n <= 8; ++n) {
            for (int k = 0; k <= 8; ++k) {
                const double dev = std::abs(matrix[n][k] - (n == k ? 1.0 : 0.0));
                worst = std::max(worst, dev);
                ok = ok && dev <= 1e-6;
                if (n != k) ok = ok && matrix[n][k] == 0.0;
            }
        }
    }
    report(2, "resolution of identity in S1 and S2", ok, fmt_max(worst));
}

// 3. Normalization special cases: Bessel-I form and the half-gamma form.
void criterion_normalization() {
    double worst = 0.0;
    bool ok = true;
    for (double gamma : {0.3, 0.5, 1.0, 2.5}) {
        const auto p = st::classify(gamma, 0.0);
        for (double az : {0.1, 1.0, 3.0}) {
            const double expected = sf::gamma_fn(2.0 * gamma) *
                                    std::pow(az, 1.0 - 2.0 * gamma) *
                                    sf::bessel_i(2.0 * gamma - 1.0, 2.0 * az);
            const double got = st::normalization(p, az * az, 1e-15).value.real();
            const double rel = std::abs(got / expected - 1.0);
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-10;
        }
    }
    for (int s : {1, 2, 3}) {
        const auto p = st::classify(0.5, double(s));
        for (double x : {0.25, 1.0, 4.0}) {
            double direct = 0.0;
            for (int n = 0; n < 300; ++n)
                direct += std::pow(x, n) / std::pow(sf::pochhammer(double(s) + 1.0, n), 2);
            const double got = st::normalization(p, x, 1e-15).value.real();
            const double rel = std::abs(got / direct - 1.0);
            worst = std::max(worst, rel);
            ok = ok && rel <= 1e-10;
        }
    }
    report(3, "normalization special cases (Bessel forms)", ok, fmt_max(worst));
}

// 4. Weight positivity on a 40-point log grid, plus cross-path agreement.
void criterion_positivity() {
    bool ok = true;
    double worst = 0.0;
    for (auto [g, s] : std::vector<std::pair<double, double>>{
             {0.5, 0.0}, {1.0, -0.5}, {2.0, -0.25}, {0.4, 0.5}, {0.3, 1.5}, {0.5, 2.0}}) {
        const auto p = st::classify(g, s);
        std::vector<double> grid;
        for (int i = 0; i < 40; ++i)
            grid.push_back(1e-6 * std::pow(50.0 / 1e-6, double(i) / 39.0));
        for (double v : ms::weight_grid(p, grid, 1e-8)) ok = ok && v > 0.0;
    }
    const auto both = st::classify(0.4, -0.5);  // both integral routes admissible
    for (double r : {0.1, 1.0, 5.0}) {
        const double a = ms::meijer_g3013(both, r, 1e-9, ms::WeightPath::Case1Integral).value;
        const double b = ms::meijer_g3013(both, r, 1e-9, ms::WeightPath::Case2Integral).value;
        const double rel = std::abs(a / b - 1.0);
        worst = std::max(worst, rel);
        ok = ok && rel <= 1e-6;
    }
    report(4, "weight positivity and cross-path agreement", ok, fmt_max(worst));
}

// 5. Eigenbasis: Gram identity at (mu=2.5, beta=1) and Hamiltonian residuals.
void criterion_eigenbasis() {
    const auto cfg = ph::OscillatorConfig::from_mu_beta(2.5, 1.0);
    double worst = 0.0;
    bool ok = true;
    const auto gram = ph::gram_matrix(cfg, 12, 1e-9);
    for (int n = 0; n <= 12; ++n) {
        for (int m = 0; m <= 12; ++m) {
            const double dev = std::abs(gram[n][m] - (n == m ? 1.0 : 0.0));
            worst = std::max(worst, dev);
            ok = ok && dev <= 1e-8;
        }
    }
    for (int n = 0; n <= 3; ++n) {
        const double res = ph::hamiltonian_residual(cfg, n, 0.01, 8.0, 1e-3);
        ok = ok && res <= 1e-4;
    }
    report(5, "eigenbasis Gram identity and Hamiltonian residual", ok, fmt_max(worst));
}

// 6. Closed-form wavefunction vs the truncated eigenfunction series, and the
// sigma = 0 Bessel reduction.
void criterion_closed_form() {
    double worst = 0.0;
    bool ok = true;
    const auto spec = bg::BargmannSpec::make(ph::OscillatorConfig::from_mu_beta(2.5, 1.0), -0.3);
    const double zr[5] = {0.2, 0.5, 0.8, 1.1, 1.4};
    const double xis[5] = {0.3, 0.8, 1.3, 2.0, 3.0};
    for (double zv : zr) {
        const cplx z{zv, 0.25};
        const double norm = st::normalization(spec.params, std::norm(z), 1e-15).value.real();
        for (double xi : xis) {
            cplx series{0.0, 0.0};
            for (int n = 0; n < 70; ++n)
                series += std::conj(st::coefficient(spec.params, std::conj(z), n)) *
                          ph::eigenfunction(spec.osc, n, xi);
            series /= std::sqrt(norm);
            const cplx closed = bg::wavefunction(spec, z, xi, 1e-14);
            const double dev = std::abs(closed - series) / std::abs(series);
            worst = std::max(worst, dev);
            ok = ok && dev <= 1e-8;
        }
    }
    const auto s0 = bg::BargmannSpec::make(ph::OscillatorConfig::from_mu_beta(2.5, 1.0), 0.0);
    const double mu = s0.osc.mu;
    for (double z : {0.05, 0.2, 0.5, 0.8, 1.0, 1.3, 1.7, 2.1, 2.5, 3.0}) {
        const double xi = 1.1;
        const double u = s0.osc.beta * z * xi * xi;
        const double reduced =
            sf::gamma_fn(mu) * std::exp(z) * std::pow(u, 0.5 * (1.0 - mu)) *
            sf::bessel_j(mu - 1.0, 2.0 * std::sqrt(u));
        const double norm = st::normalization(s0.params, z * z, 1e-15).value.real();
        const double pref =
            std::exp(0.5 * (std::log(2.0) + mu * std::log(s0.osc.beta) - sf::log_gamma(mu)) +
                     (mu - 0.5) * std::log(xi) - 0.5 * s0.osc.beta * xi * xi);
        const double expected = pref * reduced / std::sqrt(norm);
        const double got = bg::wavefunction(s0, cplx{z, 0.0}, xi, 1e-14).real();
        const double dev = std::abs(got / expected - 1.0);
        worst = std::max(worst, dev);
        ok = ok && dev <= 1e-10;
    }
    report(6, "closed-form kernel vs series and sigma=0 reduction", ok, fmt_max(worst));
}

// 7. Bargmann basis images by quadrature vs the closed form.
void criterion_basis_images() {
    const auto spec = bg::BargmannSpec::make(ph::OscillatorConfig::from_mu_beta(2.5, 1.0), -0.3);
    double worst = 0.0;
    bool ok = true;
    for (cplx z : {cplx{0.5, 0.0}, cplx{1.0, 0.5}}) {
        for (int n = 0; n <= 8; ++n) {
            const cplx numeric = bg::basis_image_quadrature(spec, n, z, 1e-8);
            const cplx closed = bg::basis_image(spec, n, z);
            const double dev = std::abs(numeric - closed) / std::abs(closed);
            worst = std::max(worst, dev);
            ok = ok && dev <= 1e-6;
        }
    }
    report(7, "Bargmann basis images", ok, fmt_max(worst));
}

// 8. The two integral identities behind the transform.
void criterion_integral_identities() {
    double worst = 0.0;
    bool ok = true;
    for (auto [mu, beta, z] :
         std::vector<std::array<double, 3>>{{2.5, 1.0, 1.0}, {2.0, 0.7, 2.0}}) {
        for (int n = 0; n <= 8; ++n) {
            const double res = bg::bessel_identity_check(mu, beta, n, z, 1e-9);
            worst = std::max(worst, res);
            ok = ok && res <= 1e-7;
        }
    }
    for (double sigma : {0.0, -0.3}) {
        const auto spec =
            bg::BargmannSpec::make(ph::OscillatorConfig::from_mu_beta(2.5, 1.0), sigma);
        for (int n = 0; n <= 8; ++n) {
            const double res = bg::kdf_identity_check(spec, n, cplx{0.9, 0.3}, 1e-8);
            worst = std::max(worst, res);
            ok = ok && res <= 1e-6;
        }
    }
    report(8, "Laguerre-Bessel and Kampe-de-Feriet integral identities", ok, fmt_max(worst));
}

// 9. Regression to the known one-parameter families.
void criterion_regression() {
    double worst = 0.0;
    bool ok = true;
    // sigma = 0: coefficients must equal z^n / sqrt(n! (2 gamma)_n).
    for (double g2 : {1.0, 2.0, 3.0}) {
        const auto p = st::classify(0.5 * g2, 0.0);
        const cplx z{1.3, -0.4};
        for (int n = 0; n <= 12; ++n) {
            const cplx got = st::coefficient(p, z, n);
            const cplx expected =
                std::pow(std::conj(z), n) *
                std::exp(-0.5 * (sf::log_gamma(double(n) + 1.0) + sf::log_pochhammer(g2, n)));
            const double dev = std::abs(got - expected) /
                               std::max(std::abs(expected), 1e-300);
            worst = std::max(worst, dev);
            ok = ok && dev <= 1e-12;
        }
    }
    // sigma = 0 weight: the Macdonald closed form reproduces the moments
    // of the one-parameter measure (r = rho^2 substitution) for n <= 6.
    for (double g2 : {1.0, 2.0}) {
        const auto p = st::classify(0.5 * g2, 0.0);
        for (const auto& m : ms::moment_set(p, 6, 1e-8)) {
            const double dev = std::abs(m.relative_deviation);
            worst = std::max(worst, dev);
            ok = ok && dev <= 1e-6;
        }
    }
    report(9, "regression to the one-parameter families", ok, fmt_max(worst));
}

// 10. Byte-identical reports across repeated CLI runs.
void criterion_determinism(const char* cli) {
    if (cli == nullptr) {
        report(10, "report determinism (CLI path not supplied)", false, "");
        return;
    }
    const std::vector<std::string> commands = {
        "verify moments --gamma 0.5 --sigma 0 --n-max 6",
        "verify orthonormality --mu 2.5 --beta 1 --n-max 8",
        "verify bargmann-basis --mu 2.5 --beta 1 --sigma 0 --n-max 6 --z 0.5",
        "emit sequence --gamma 0.5 --sigma 0 --n-max 10",
        "emit weight --gamma 0.5 --sigma 0 --xi-min 0.1 --xi-max 10 --xi-steps 25",
        "emit photon --gamma 0.5 --sigma 0 --z 1 --n-max 12 --format json",
    };
    bool ok = true;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::array<std::string, 2> outputs;
        for (int run = 0; run < 2; ++run) {
            const std::string path =
                "acceptance_run_" + std::to_string(i) + "_" + std::to_string(run) + ".tmp";
            const std::string cmd = std::string(cli) + " " + commands[i] + " --out " + path +
                                    " 2> /dev/null";
            const int rc = std::system(cmd.c_str());
            std::ifstream in(path, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            outputs[run] = buf.str();
            std::remove(path.c_str());
            ok = ok && rc == 0 && !outputs[run].empty();
        }
        ok = ok && outputs[0] == outputs[1];
    }
    report(10, "report determinism across repeated runs", ok, "");
}

}  // namespace

int main(int argc, char** argv) {
    criterion_moments();
    criterion_identity();
    criterion_normalization();
    criterion_positivity();
    criterion_eigenbasis();
    criterion_closed_form();
    criterion_basis_images();
    criterion_integral_identities();
    criterion_regression();
    criterion_determinism(argc > 1 ? argv[1] : nullptr);
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
