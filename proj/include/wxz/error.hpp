#pragma once

#include <stdexcept>
#include <string>

namespace wxz {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& msg = "matrix is singular") : Error(msg) {}
};

class HypothesisViolated : public Error {
public:
    explicit HypothesisViolated(const std::string& which)
        : Error("hypothesis violated: " + which), hypothesis(which) {}
    std::string hypothesis;
};

class ConstraintViolated : public Error {
public:
    explicit ConstraintViolated(const std::string& which)
        : Error("constraint violated: " + which), constraint(which) {}
    std::string constraint;
};

class IncompleteAssignment : public Error {
public:
    explicit IncompleteAssignment(const std::string& param)
        : Error("missing parameter: " + param), parameter(param) {}
    std::string parameter;
};

class Unsatisfiable : public Error {
public:
    explicit Unsatisfiable(const std::string& msg) : Error("unsatisfiable: " + msg) {}
};

class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& which)
        : Error("precondition violated: " + which), precondition(which) {}
    std::string precondition;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error("parse error at " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

} // namespace wxz
