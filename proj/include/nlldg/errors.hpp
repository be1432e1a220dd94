#pragma once

#include <stdexcept>
#include <string>

namespace nlldg {

/// Invalid parameter or configuration value (bad degree, CFL number, horizon, ...).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Non-finite state detected while advancing the solution.
class NumericalError : public std::runtime_error {
public:
  NumericalError(double time, int cell, double value);

  double time() const noexcept { return time_; }
  int cell() const noexcept { return cell_; }
  double value() const noexcept { return value_; }

private:
  double time_;
  int cell_;
  double value_;
};

} // namespace nlldg
