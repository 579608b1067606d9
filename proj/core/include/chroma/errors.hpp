#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chroma {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Value outside the domain of an operation (group mismatch, bad index, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position_(pos) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class NotCommutationFactor : public Error {
public:
    NotCommutationFactor() : Error("bicharacter is not a commutation factor") {}
};

class DegenerateBeta : public Error {
public:
    DegenerateBeta() : Error("bicharacter is degenerate") {}
};

class DiagonalOne : public Error {
public:
    explicit DiagonalOne(int i) : Error("diagonal entry q_" + std::to_string(i + 1) + std::to_string(i + 1) + " equals 1") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SizeLimit : public Error {
public:
    using Error::Error;
};

class NotSymmetric : public Error {
public:
    NotSymmetric() : Error("twisted matrix is not symmetric") {}
};

class NonCommutingAction : public Error {
public:
    NonCommutingAction() : Error("action matrices do not commute") {}
};

class NonMonomialAction : public Error {
public:
    NonMonomialAction() : Error("action matrix is not monomial") {}
};

class RactNotTrivial : public Error {
public:
    RactNotTrivial() : Error("left action of L on Gamma is not trivial") {}
};

// Input that fails a structural validation (not a group law, not a cocycle, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace chroma
