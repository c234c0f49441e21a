#pragma once

#include <stdexcept>
#include <string>

namespace mapc {

/// Base of every error raised by the simulator.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or malformed configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Scenario document failed to parse or violates deployment invariants.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

/// Argument outside a function's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// No schedule can cover every station.
class SchedulingError : public Error {
 public:
  using Error::Error;
};

/// Throughput model preconditions violated.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Batch run produced no usable deployment.
class ExperimentError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing files failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mapc
