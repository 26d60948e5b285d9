#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadlab {

/// Process exit codes shared by the CLI and the test harness.
enum class ExitCode : int {
  Ok = 0,
  ConfigError = 1,
  Diverged = 2,
  IoError = 3,
};

/// Invalid or inconsistent configuration; the message names the offending key.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Vector/matrix dimensions do not agree.
class DimensionMismatch : public std::runtime_error {
 public:
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Motor command outside [0, rpm_max].
class MotorBoundViolation : public std::runtime_error {
 public:
  explicit MotorBoundViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Simulation produced a non-finite state or left the valid attitude envelope.
/// Carries the physics step index at which divergence was detected.
class SimulationDiverged : public std::runtime_error {
 public:
  SimulationDiverged(const std::string& what, std::uint64_t step_index)
      : std::runtime_error(what + " (physics step " + std::to_string(step_index) + ")"),
        step_index_(step_index) {}

  std::uint64_t step_index() const { return step_index_; }

 private:
  std::uint64_t step_index_;
};

/// Checkpoint file failed version or checksum validation.
class CheckpointError : public std::runtime_error {
 public:
  explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure (open, write, rename).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quadlab
