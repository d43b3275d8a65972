#pragma once

#include <stdexcept>
#include <string>

namespace qsr {

// Failure while reading a text input. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// An iterative solver exhausted its iteration budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double residual, int iterations)
        : std::runtime_error(msg + ": residual " + std::to_string(residual) + " after " +
                             std::to_string(iterations) + " iterations"),
          residual_(residual),
          iterations_(iterations) {}

    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }

private:
    double residual_;
    int iterations_;
};

}  // namespace qsr
