#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spex {

// Invalid vertex pair, self-loop or otherwise malformed graph input.
class construction_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Precondition on an operation's parameters failed.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Iterative eigensolver hit its iteration cap.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double residual, long iters)
      : std::runtime_error(what), residual_(residual), iters_(iters) {}

  double residual() const noexcept { return residual_; }
  long iters() const noexcept { return iters_; }

 private:
  double residual_;
  long iters_;
};

}  // namespace spex
