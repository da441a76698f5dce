#pragma once

#include <stdexcept>
#include <string>

namespace qci {

// Base class for everything thrown by this library. `kind()` is a stable
// machine-readable tag that ends up in CLI error reports.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Rejected inputs: nothing was computed. CLI exit code 2.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what)
        : Error("precondition", what) {}
    PreconditionError(std::string kind, const std::string& what)
        : Error(std::move(kind), what) {}
};

// A computation that started could not finish consistently. CLI exit code 1.
class ComputationError : public Error {
public:
    explicit ComputationError(const std::string& what)
        : Error("computation", what) {}
};

class NoSuchRootError : public PreconditionError {
public:
    explicit NoSuchRootError(const std::string& what)
        : PreconditionError("no_such_root", what) {}
};

class DivisionByZeroError : public PreconditionError {
public:
    explicit DivisionByZeroError(const std::string& what)
        : PreconditionError("division_by_zero", what) {}
};

class SpecMismatchError : public PreconditionError {
public:
    explicit SpecMismatchError(const std::string& what)
        : PreconditionError("spec_mismatch", what) {}
};

class ZeroLambdaError : public PreconditionError {
public:
    explicit ZeroLambdaError(const std::string& what)
        : PreconditionError("zero_lambda", what) {}
};

class AmbientMismatchError : public PreconditionError {
public:
    explicit AmbientMismatchError(const std::string& what)
        : PreconditionError("ambient_mismatch", what) {}
};

class InsufficientDataError : public PreconditionError {
public:
    explicit InsufficientDataError(const std::string& what)
        : PreconditionError("insufficient_data", what) {}
};

class FieldUnsuitableError : public PreconditionError {
public:
    explicit FieldUnsuitableError(const std::string& what)
        : PreconditionError("field_unsuitable", what) {}
};

class BadDesignatorError : public PreconditionError {
public:
    explicit BadDesignatorError(const std::string& what)
        : PreconditionError("bad_designator", what) {}
};

} // namespace qci
