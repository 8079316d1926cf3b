#ifndef FRAMEKIT_ERRORS_HPP
#define FRAMEKIT_ERRORS_HPP

#include <stdexcept>

namespace framekit {

/// Algorithmic failure: eigensolver non-convergence, ill-conditioned Gram
/// matrices, series that hit their term cap. CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent run configuration. The message names the
/// offending field. CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace framekit

#endif  // FRAMEKIT_ERRORS_HPP
