#pragma once

#include <stdexcept>
#include <string>

namespace nlcs {

// All library failures carry a stable machine-readable code next to the
// human-readable message; the CLI maps codes to exit status.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DenominatorPole : Error {
    explicit DenominatorPole(const std::string& what) : Error("DENOMINATOR_POLE", what) {}
};

struct NonConvergent : Error {
    explicit NonConvergent(const std::string& what) : Error("NON_CONVERGENT", what) {}
};

struct NotSupported : Error {
    explicit NotSupported(const std::string& what) : Error("NOT_SUPPORTED", what) {}
};

struct ParameterOutOfDomain : Error {
    explicit ParameterOutOfDomain(const std::string& what) : Error("PARAM_OUT_OF_DOMAIN", what) {}
};

struct QuadratureNoConvergence : Error {
    explicit QuadratureNoConvergence(const std::string& what)
        : Error("QUADRATURE_NO_CONVERGENCE", what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error("BUDGET_EXCEEDED", what) {}
};

struct InvalidGrid : Error {
    explicit InvalidGrid(const std::string& what) : Error("INVALID_GRID", what) {}
};

}  // namespace nlcs
