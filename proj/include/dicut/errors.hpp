#pragma once

#include <stdexcept>
#include <string>

namespace dicut {

// Malformed input text (graph / step-function / 2-AND / certificate files).
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                            (column > 0 ? ":" + std::to_string(column) : "") +
                                            ": " + msg
                                      : msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Instance exceeds a configured size limit (brute force, family enumeration,
// unweighted expansion).
class limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// LP solver failure: iteration limit, singular basis, unexpected infeasibility.
class solver_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact re-verification of a primal/dual pair failed.
class certificate_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ratio-related operation on a graph with zero total weight.
class zero_weight_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace dicut
