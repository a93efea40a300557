#pragma once

#include <stdexcept>
#include <string>

namespace nbhd {

// Each error carries a short machine-readable kind, printed by the CLI as
// "error:<kind>:<message>".
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct ParameterError : Error {
    explicit ParameterError(const std::string& what) : Error("parameter", what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse", what) {}
};

struct BudgetExceeded : Error {
    BudgetExceeded(int dimension, const std::string& what)
        : Error("budget", what), dimension(dimension) {}
    int dimension;
};

struct CertificateError : Error {
    explicit CertificateError(const std::string& what) : Error("certificate", what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error("precondition", what) {}
};

}  // namespace nbhd
