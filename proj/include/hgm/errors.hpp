#pragma once

#include <stdexcept>
#include <string>

namespace hgm {

/// Operands of incompatible dimensions.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A checker or command was configured with inputs outside its preconditions
/// (wrong weight constraint, exponent below the admissible bound, bad index, ...).
/// Never used to signal that an inequality failed.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed matrix file or rejected entries.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative eigenvalue computation hit its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hgm
