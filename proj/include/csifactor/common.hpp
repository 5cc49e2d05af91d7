#ifndef CSIFACTOR_COMMON_HPP_
#define CSIFACTOR_COMMON_HPP_

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace csifactor {

inline constexpr const char* kVersion = "0.1.0";

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unrecognized or unsupported file structure (bad magic, bad version).
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg) : Error(msg) {}
};

/// Structurally valid file whose payload does not match its header.
class CorruptionError : public Error {
 public:
  explicit CorruptionError(const std::string& msg) : Error(msg) {}
};

/// Input violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace csifactor

#endif  // CSIFACTOR_COMMON_HPP_
