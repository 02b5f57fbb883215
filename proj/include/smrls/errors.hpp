#pragma once

#include <stdexcept>
#include <string>

namespace smrls {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Covariance downdate would cross the positivity guard. This only happens
// when the removed regressor was never absorbed into the covariance, so it
// is treated as a hard consistency failure rather than something to clamp.
struct DowndateSingularError : Error {
  using Error::Error;
};

// Estimator failure during a run, tagged with the offending step.
struct TrainerError : Error {
  TrainerError(std::size_t step, const std::string& what)
      : Error("trainer error at step " + std::to_string(step) + ": " + what),
        step_index(step) {}
  std::size_t step_index;
};

struct ConfigError : Error {
  using Error::Error;
};

struct MissingFileError : ConfigError {
  using ConfigError::ConfigError;
};

struct ParseError : ConfigError {
  using ConfigError::ConfigError;
};

struct ValidationError : ConfigError {
  using ConfigError::ConfigError;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace smrls
