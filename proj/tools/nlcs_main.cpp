// Command-line surface: verification suites and table emitters for the
// two-parameter nonlinear coherent state family and its Bargmann transform.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nlcs/bargmann.hpp"
#include "nlcs/errors.hpp"
#include "nlcs/measure.hpp"
#include "nlcs/pho.hpp"
#include "nlcs/quad.hpp"
#include "nlcs/specfun.hpp"
#include "nlcs/states.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

bool is_quoted(const std::string& token) { return !token.empty() && token.front() == '"'; }

// Deterministic report: ordered meta, a header row, preformatted cells.
// Numbers are kept as %.17g tokens so CSV and JSON emit identical digits.
struct Report {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_meta(const std::string& key, const std::string& value) { meta.emplace_back(key, value); }
    void add_meta(const std::string& key, double value) { meta.emplace_back(key, fmt(value)); }

    std::string to_csv() const {
        std::ostringstream out;
        for (const auto& [k, v] : meta)
            out << "# " << k << "=" << (is_quoted(v) ? v.substr(1, v.size() - 2) : v) << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? "," : "") << columns[i];
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "")
                    << (is_quoted(row[i]) ? row[i].substr(1, row[i].size() - 2) : row[i]);
            out << "\n";
        }
        return out.str();
    }

    std::string to_json() const {
        std::ostringstream out;
        out << "{\n  \"meta\": {";
        for (std::size_t i = 0; i < meta.size(); ++i)
            out << (i ? ", " : "") << quoted(meta[i].first) << ": "
                << (is_quoted(meta[i].second) ? meta[i].second : meta[i].second);
        out << "},\n  \"columns\": [";
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? ", " : "") << quoted(columns[i]);
        out << "],\n  \"rows\": [";
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out << (r ? ",\n    [" : "\n    [");
            for (std::size_t i = 0; i < rows[r].size(); ++i) out << (i ? ", " : "") << rows[r][i];
            out << "]";
        }
        out << "\n  ]\n}\n";
        return out.str();
    }
};

struct Options {
    double gamma = 0.5;
    double sigma = 0.0;
    double mu = 2.5;
    double beta = 1.0;
    std::optional<double> alpha;
    std::string z_text = "1";
    double zz = 1.0;
    int n_max = -1;  // -1: suite default
    double xi_min = 0.05;
    double xi_max = 8.0;
    int xi_steps = 200;
    std::optional<double> rel_tol;
    double abs_tol = 1e-12;
    std::string format = "csv";
    std::string out_path;
};

std::complex<double> parse_z(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--gamma", opt.gamma, "sequence parameter gamma");
    cmd->add_option("--sigma", opt.sigma, "sequence parameter sigma");
    cmd->add_option("--mu", opt.mu, "oscillator mu (mu > 3/2)");
    cmd->add_option("--alpha", opt.alpha, "oscillator alpha (overrides --mu)");
    cmd->add_option("--beta", opt.beta, "oscillator beta");
    cmd->add_option("--z", opt.z_text, "complex label re[,im]");
    cmd->add_option("--zz", opt.zz, "|z|^2 argument");
    cmd->add_option("--n-max", opt.n_max, "largest index n");
    cmd->add_option("--xi-min", opt.xi_min, "grid start");
    cmd->add_option("--xi-max", opt.xi_max, "grid end");
    cmd->add_option("--xi-steps", opt.xi_steps, "grid step count");
    cmd->add_option("--rel-tol", opt.rel_tol, "relative tolerance (suite default if omitted)");
    cmd->add_option("--abs-tol", opt.abs_tol, "absolute tolerance");
    cmd->add_option("--format", opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
}

void base_meta(Report& report, const std::string& command, double tol) {
    report.add_meta("tool", quoted("nlcs"));
    report.add_meta("version", quoted(kVersion));
    report.add_meta("command", quoted(command));
    report.add_meta("tolerance", tol);
}

nlcs::pho::OscillatorConfig oscillator(const Options& opt) {
    if (opt.alpha) return nlcs::pho::OscillatorConfig::from_alpha_beta(*opt.alpha, opt.beta);
    return nlcs::pho::OscillatorConfig::from_mu_beta(opt.mu, opt.beta);
}

int n_max_or(const Options& opt, int fallback) { return opt.n_max >= 0 ? opt.n_max : fallback; }
double tol_or(const Options& opt, double fallback) {
    return opt.rel_tol ? *opt.rel_tol : fallback;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i)
        grid[i] = lo * std::pow(hi / lo, double(i) / double(count - 1));
    return grid;
}

// ---- verify suites ------------------------------------------------------

int verify_moments(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-6);
    const auto params = nlcs::states::classify(opt.gamma, opt.sigma);
    base_meta(report, "verify moments", tol);
    report.add_meta("gamma", opt.gamma);
    report.add_meta("sigma", opt.sigma);
    const int n_max = n_max_or(opt, 8);
    report.columns = {"n", "integral", "target", "residual", "pass"};
    const auto moments = nlcs::measure::moment_set(params, n_max, tol / 5.0);
    int failures = 0;
    for (const auto& m : moments) {
        const bool pass = std::abs(m.relative_deviation) <= tol;
        failures += !pass;
        report.rows.push_back({std::to_string(m.n), fmt(m.integral.value), fmt(m.target),
                               fmt(m.relative_deviation), pass ? "true" : "false"});
    }
    return failures;
}

int verify_identity(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-6);
    const auto params = nlcs::states::classify(opt.gamma, opt.sigma);
    base_meta(report, "verify identity", tol);
    report.add_meta("gamma", opt.gamma);
    report.add_meta("sigma", opt.sigma);
    const int n_max = n_max_or(opt, 8);
    report.columns = {"n", "k", "value", "expected", "pass"};
    const auto matrix = nlcs::measure::identity_resolution_check(params, n_max, tol / 5.0);
    int failures = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n_max; ++k) {
            const double expected = n == k ? 1.0 : 0.0;
            const bool pass = std::abs(matrix[n][k] - expected) <= tol;
            failures += !pass;
            report.rows.push_back({std::to_string(n), std::to_string(k), fmt(matrix[n][k]),
                                   fmt(expected), pass ? "true" : "false"});
        }
    }
    return failures;
}

int verify_orthonormality(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-8);
    const auto cfg = oscillator(opt);
    base_meta(report, "verify orthonormality", tol);
    report.add_meta("mu", cfg.mu);
    report.add_meta("beta", cfg.beta);
    const int n_max = n_max_or(opt, 12);
    report.columns = {"n", "m", "value", "expected", "pass"};
    const auto gram = nlcs::pho::gram_matrix(cfg, n_max, tol / 10.0);
    int failures = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= n_max; ++m) {
            const double expected = n == m ? 1.0 : 0.0;
            const bool pass = std::abs(gram[n][m] - expected) <= tol;
            failures += !pass;
            report.rows.push_back({std::to_string(n), std::to_string(m), fmt(gram[n][m]),
                                   fmt(expected), pass ? "true" : "false"});
        }
    }
    return failures;
}

int verify_bargmann_basis(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-6);
    const auto spec = nlcs::bargmann::BargmannSpec::make(oscillator(opt), opt.sigma);
    const std::complex<double> z = parse_z(opt.z_text);
    base_meta(report, "verify bargmann-basis", tol);
    report.add_meta("mu", spec.osc.mu);
    report.add_meta("beta", spec.osc.beta);
    report.add_meta("sigma", spec.sigma);
    report.add_meta("z_re", z.real());
    report.add_meta("z_im", z.imag());
    const int n_max = n_max_or(opt, 8);
    report.columns = {"n", "quad_re", "quad_im", "closed_re", "closed_im", "rel_err", "pass"};
    int failures = 0;
    for (int n = 0; n <= n_max; ++n) {
        const auto numeric = nlcs::bargmann::basis_image_quadrature(spec, n, z, tol / 10.0);
        const auto closed = nlcs::bargmann::basis_image(spec, n, z);
        const double rel = std::abs(numeric - closed) / std::abs(closed);
        const bool pass = rel <= tol;
        failures += !pass;
        report.rows.push_back({std::to_string(n), fmt(numeric.real()), fmt(numeric.imag()),
                               fmt(closed.real()), fmt(closed.imag()), fmt(rel),
                               pass ? "true" : "false"});
    }
    return failures;
}

int verify_bessel_identity(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-7);
    const auto cfg = oscillator(opt);
    const double z = parse_z(opt.z_text).real();
    base_meta(report, "verify bessel-identity", tol);
    report.add_meta("mu", cfg.mu);
    report.add_meta("beta", cfg.beta);
    report.add_meta("z", z);
    const int n_max = n_max_or(opt, 8);
    report.columns = {"n", "residual", "pass"};
    int failures = 0;
    for (int n = 0; n <= n_max; ++n) {
        const double residual =
            nlcs::bargmann::bessel_identity_check(cfg.mu, cfg.beta, n, z, tol / 10.0);
        const bool pass = residual <= tol;
        failures += !pass;
        report.rows.push_back({std::to_string(n), fmt(residual), pass ? "true" : "false"});
    }
    return failures;
}

int verify_kdf_identity(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-6);
    const auto spec = nlcs::bargmann::BargmannSpec::make(oscillator(opt), opt.sigma);
    const std::complex<double> z = parse_z(opt.z_text);
    base_meta(report, "verify kdf-identity", tol);
    report.add_meta("mu", spec.osc.mu);
    report.add_meta("beta", spec.osc.beta);
    report.add_meta("sigma", spec.sigma);
    report.add_meta("z_re", z.real());
    report.add_meta("z_im", z.imag());
    const int n_max = n_max_or(opt, 8);
    report.columns = {"n", "residual", "pass"};
    int failures = 0;
    for (int n = 0; n <= n_max; ++n) {
        const double residual = nlcs::bargmann::kdf_identity_check(spec, n, z, tol / 10.0);
        const bool pass = residual <= tol;
        failures += !pass;
        report.rows.push_back({std::to_string(n), fmt(residual), pass ? "true" : "false"});
    }
    return failures;
}

int verify_positivity(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-6);
    const auto params = nlcs::states::classify(opt.gamma, opt.sigma);
    base_meta(report, "verify positivity", tol);
    report.add_meta("gamma", opt.gamma);
    report.add_meta("sigma", opt.sigma);
    report.columns = {"case", "r", "value", "reference", "pass"};
    int failures = 0;

    const auto grid = log_grid(1e-6, 50.0, 40);
    const auto values = nlcs::measure::weight_grid(params, grid, 1e-8);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const bool pass = values[i] > 0.0;
        failures += !pass;
        report.rows.push_back(
            {quoted("positive"), fmt(grid[i]), fmt(values[i]), fmt(0.0), pass ? "true" : "false"});
    }

    const auto paths = nlcs::measure::admissible_paths(params);
    const bool both = paths.size() >= 2 &&
                      paths.front() != nlcs::measure::WeightPath::MacdonaldClosedForm;
    if (both) {
        for (double r : {0.1, 1.0, 5.0}) {
            const double a =
                nlcs::measure::meijer_g3013(params, r, 1e-8, paths[0]).value;
            const double b =
                nlcs::measure::meijer_g3013(params, r, 1e-8, paths[1]).value;
            const double rel = std::abs(a / b - 1.0);
            const bool pass = rel <= tol;
            failures += !pass;
            report.rows.push_back(
                {quoted("cross-path"), fmt(r), fmt(a), fmt(b), pass ? "true" : "false"});
        }
    }
    return failures;
}

// ---- emitters -----------------------------------------------------------

void emit_sequence(const Options& opt, Report& report) {
    const auto params = nlcs::states::classify(opt.gamma, opt.sigma);
    base_meta(report, "emit sequence", 0.0);
    report.add_meta("gamma", opt.gamma);
    report.add_meta("sigma", opt.sigma);
    report.columns = {"n", "x_n", "x_n_factorial"};
    const int n_max = n_max_or(opt, 10);
    for (int n = 0; n <= n_max; ++n)
        report.rows.push_back({std::to_string(n), fmt(nlcs::states::sequence_term(params, n)),
                               fmt(nlcs::states::generalized_factorial(params, n))});
}

void emit_normalization(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-12);
    const auto params = nlcs::states::classify(opt.gamma, opt.sigma);
    base_meta(report, "emit normalization", tol);
    report.add_meta("gamma", opt.gamma);
    report.add_meta("sigma", opt.sigma);
    report.columns = {"zz", "value", "terms_used", "tail_estimate"};
    const auto n = nlcs::states::normalization(params, opt.zz, tol);
    report.rows.push_back(
        {fmt(opt.zz), fmt(n.value.real()), std::to_string(n.terms_used), fmt(n.tail_estimate)});
}

void emit_photon(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-12);
    const auto params = nlcs::states::classify(opt.gamma, opt.sigma);
    if (params.domain_class == nlcs::states::DomainClass::NormalizableOnly &&
        params.sigma < -1.0) {
        std::cerr << "warning: sigma < -1 (non-integer): states are normalizable but the "
                     "coefficients alternate in sign and no measure claim applies\n";
    }
    const std::complex<double> z = parse_z(opt.z_text);
    base_meta(report, "emit photon", tol);
    report.add_meta("gamma", opt.gamma);
    report.add_meta("sigma", opt.sigma);
    report.add_meta("z_re", z.real());
    report.add_meta("z_im", z.imag());
    const int n_max = n_max_or(opt, 20);
    const auto probs =
        nlcs::states::photon_distribution({params, z}, n_max, tol);
    double total = 0.0;
    report.columns = {"n", "p_n"};
    for (int n = 0; n <= n_max; ++n) {
        total += probs[n];
        report.rows.push_back({std::to_string(n), fmt(probs[n])});
    }
    report.add_meta("captured_mass", total);
    report.add_meta("tail", 1.0 - total);
}

void emit_weight(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-8);
    const auto params = nlcs::states::classify(opt.gamma, opt.sigma);
    base_meta(report, "emit weight", tol);
    report.add_meta("gamma", opt.gamma);
    report.add_meta("sigma", opt.sigma);
    report.columns = {"r", "m"};
    const auto grid = log_grid(opt.xi_min, opt.xi_max, opt.xi_steps);
    const auto values = nlcs::measure::weight_grid(params, grid, tol);
    for (std::size_t i = 0; i < grid.size(); ++i)
        report.rows.push_back({fmt(grid[i]), fmt(values[i])});
}

void emit_wavefunction(const Options& opt, Report& report) {
    const double tol = tol_or(opt, 1e-10);
    const auto spec = nlcs::bargmann::BargmannSpec::make(oscillator(opt), opt.sigma);
    const std::complex<double> z = parse_z(opt.z_text);
    base_meta(report, "emit wavefunction", tol);
    report.add_meta("mu", spec.osc.mu);
    report.add_meta("beta", spec.osc.beta);
    report.add_meta("sigma", spec.sigma);
    report.add_meta("z_re", z.real());
    report.add_meta("z_im", z.imag());
    report.columns = {"xi", "re_psi", "im_psi"};
    for (int i = 0; i < opt.xi_steps; ++i) {
        const double xi =
            opt.xi_min + (opt.xi_max - opt.xi_min) * double(i) / double(opt.xi_steps - 1);
        const auto psi = nlcs::bargmann::wavefunction(spec, z, xi, tol);
        report.rows.push_back({fmt(xi), fmt(psi.real()), fmt(psi.imag())});
    }
}

void write_report(const Options& opt, const Report& report) {
    const std::string text = opt.format == "json" ? report.to_json() : report.to_csv();
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) throw nlcs::Error("IO_ERROR", "cannot open output path " + opt.out_path);
        file << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("NLCS_MAX_EVALS")) {
        const long cap = std::atol(env);
        if (cap >= 100) nlcs::quad::global_max_evaluations() = cap;
    }

    CLI::App app{"nonlinear coherent states for the pseudoharmonic oscillator"};
    app.require_subcommand(1);
    Options opt;

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "moments|identity|orthonormality|bargmann-basis|bessel-identity|kdf-identity|positivity")
        ->required()
        ->check(CLI::IsMember({"moments", "identity", "orthonormality", "bargmann-basis",
                               "bessel-identity", "kdf-identity", "positivity"}));
    add_common_flags(verify, opt);

    auto* emit = app.add_subcommand("emit", "emit a data table");
    std::string what;
    emit->add_option("what", what, "sequence|normalization|photon|weight|wavefunction")
        ->required()
        ->check(CLI::IsMember({"sequence", "normalization", "photon", "weight", "wavefunction"}));
    add_common_flags(emit, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        Report report;
        int failures = 0;
        const auto t0 = std::chrono::steady_clock::now();
        if (verify->parsed()) {
            if (suite == "moments") failures = verify_moments(opt, report);
            else if (suite == "identity") failures = verify_identity(opt, report);
            else if (suite == "orthonormality") failures = verify_orthonormality(opt, report);
            else if (suite == "bargmann-basis") failures = verify_bargmann_basis(opt, report);
            else if (suite == "bessel-identity") failures = verify_bessel_identity(opt, report);
            else if (suite == "kdf-identity") failures = verify_kdf_identity(opt, report);
            else failures = verify_positivity(opt, report);
        } else {
            if (what == "sequence") emit_sequence(opt, report);
            else if (what == "normalization") emit_normalization(opt, report);
            else if (what == "photon") emit_photon(opt, report);
            else if (what == "weight") emit_weight(opt, report);
            else emit_wavefunction(opt, report);
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
        write_report(opt, report);
        // Timing goes to stderr only: report files must be byte-reproducible.
        std::cerr << (verify->parsed() ? suite : what) << ": " << report.rows.size() << " rows, "
                  << failures << " failed, " << elapsed.count() << " s\n";
        return failures == 0 ? 0 : 1;
    } catch (const nlcs::Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
