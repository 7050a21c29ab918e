#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace homalg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input that cannot be read: bad syntax, unknown names, wrong shapes.
class InputError : public Error {
public:
    using Error::Error;
};

// Failures of exact arithmetic: division by zero, singular matrices.
class MathError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& what, std::size_t pos)
        : InputError(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class UnknownParameter : public InputError {
public:
    explicit UnknownParameter(const std::string& name)
        : InputError("unknown parameter '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class SortError : public InputError {
public:
    using InputError::InputError;
};

class NotMultilinear : public InputError {
public:
    using InputError::InputError;
};

class ShapeMismatch : public InputError {
public:
    using InputError::InputError;
};

class DuplicateLabel : public InputError {
public:
    using InputError::InputError;
};

class UnknownLabel : public InputError {
public:
    using InputError::InputError;
};

class MissingProduct : public InputError {
public:
    using InputError::InputError;
};

class MissingAction : public InputError {
public:
    using InputError::InputError;
};

class UnknownExample : public InputError {
public:
    using InputError::InputError;
};

class ZeroDenominator : public MathError {
public:
    ZeroDenominator() : MathError("zero denominator") {}
};

class DivisionByZero : public MathError {
public:
    DivisionByZero() : MathError("division by zero") {}
};

class Singular : public MathError {
public:
    Singular(const std::string& what, std::string det)
        : MathError(what + " (determinant " + det + ")"), det_(std::move(det)) {}
    const std::string& determinant() const { return det_; }

private:
    std::string det_;
};

class DenominatorVanishes : public MathError {
public:
    using MathError::MathError;
};

// A non-constant denominator showed up and the caller did not allow it.
class DenominatorAssumption : public MathError {
public:
    using MathError::MathError;
};

} // namespace homalg
