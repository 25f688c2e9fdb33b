#pragma once

#include <stdexcept>
#include <string>

namespace pcf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain where the quantity is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Gamma function evaluated at a nonpositive integer.
class PoleError : public Error {
public:
    using Error::Error;
};

/// The quadrature refinement budget was exhausted before the error goal was met.
class QuadratureNotConverged : public Error {
public:
    using Error::Error;
};

/// A backward recurrence step hit a denominator interval that touches zero.
class PositivityLost : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// An oracle evaluation failed inside a sweep; carries the offending point.
class OracleFailure : public Error {
public:
    OracleFailure(double n, double x, const std::string& what)
        : Error("oracle failure at (n=" + std::to_string(n) + ", x=" + std::to_string(x) + "): " + what),
          n_(n), x_(x) {}

    double n() const noexcept { return n_; }
    double x() const noexcept { return x_; }

private:
    double n_;
    double x_;
};

}  // namespace pcf
