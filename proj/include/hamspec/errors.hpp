#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamspec {

// Invalid input to a graph constructor (bad endpoint, loop, side mismatch).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters outside the range where an operation or family is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed graph6 payload. offset() is the byte position of the defect.
class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Eigensolver did not converge; carries the last estimate.
class SpectralError : public std::runtime_error {
 public:
  SpectralError(const std::string& what, double best_estimate, double residual)
      : std::runtime_error(what), best_estimate_(best_estimate), residual_(residual) {}

  double best_estimate() const { return best_estimate_; }
  double residual() const { return residual_; }

 private:
  double best_estimate_;
  double residual_;
};

}  // namespace hamspec
