#pragma once

#include <stdexcept>
#include <string>

namespace aaee {

// Invalid user input (config file, CLI arguments, malformed data files).
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solver breakdown or loss of ellipticity. Carries the residual
// reached so failures in long runs are diagnosable.
class solver_error : public std::runtime_error {
  public:
    solver_error(const std::string& msg, double residual = 0.0)
        : std::runtime_error(msg), residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

class io_error : public std::runtime_error {
  public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace aaee
