#pragma once

#include <Eigen/Dense>
#include <filesystem>

#include "quadlab/dynamics.hpp"

namespace quadlab {

/// The 18 controller parameters: proportional/integral/derivative gains per
/// position axis (x, y, z) and per attitude angle (roll, pitch, yaw).
struct PidGains {
  Eigen::Vector3d pos_kp = Eigen::Vector3d::Zero();
  Eigen::Vector3d pos_ki = Eigen::Vector3d::Zero();
  Eigen::Vector3d pos_kd = Eigen::Vector3d::Zero();
  Eigen::Vector3d att_kp = Eigen::Vector3d::Zero();
  Eigen::Vector3d att_ki = Eigen::Vector3d::Zero();
  Eigen::Vector3d att_kd = Eigen::Vector3d::Zero();

  /// All 18 scalars finite and non-negative.
  void validate() const;

  /// Flattened [pos_kp, pos_ki, pos_kd, att_kp, att_ki, att_kd].
  Eigen::VectorXd to_vector() const;
  static PidGains from_vector(const Eigen::VectorXd& v);

  /// JSON object with the six 3-vector fields; the tuner's output format and
  /// the navigation harness's input format.
  void save_json(const std::filesystem::path& path) const;
  static PidGains load_json(const std::filesystem::path& path);
};

/// Saturation and anti-windup limits of the cascade.
struct PidOptions {
  double pos_integral_limit = 2.0;
  double att_integral_limit = 1.0;
  double max_tilt = 0.3;  // rad, clamp on commanded roll/pitch
};

/// Mutable controller state owned by one simulation episode.
struct PidState {
  Eigen::Vector3d pos_integral = Eigen::Vector3d::Zero();
  Eigen::Vector3d att_integral = Eigen::Vector3d::Zero();
  Eigen::Vector3d prev_pos_error = Eigen::Vector3d::Zero();
  bool has_prev_pos_error = false;

  void reset() { *this = PidState{}; }
};

struct AttitudeSetpoint {
  Eigen::Vector3d desired_att = Eigen::Vector3d::Zero();  // rad, yaw always 0
  double collective_thrust = 0.0;                         // N
};

/// Outer loop: PID on position error -> acceleration demand -> desired
/// roll/pitch (small-angle, rotated by current yaw) and collective thrust
/// mass*(g + az), clamped to [0, max total thrust].
AttitudeSetpoint position_control(const QuadState& state, const Eigen::Vector3d& target_pos,
                                  const Eigen::Vector3d& target_vel, const PidGains& gains,
                                  PidState& mem, double dt, const QuadParams& params,
                                  const PidOptions& opt = {});

/// Inner loop: PID on attitude error with angular-velocity damping ->
/// body torques -> rotor speeds through the inverted X mixer, clamped to
/// [0, rpm_max]. Saturates, never throws.
MotorCommand attitude_control(const QuadState& state, const Eigen::Vector3d& desired_att,
                              double collective_thrust, const PidGains& gains, PidState& mem,
                              double dt, const QuadParams& params, const PidOptions& opt = {});

/// One full control tick: position_control with zero velocity target
/// composed with attitude_control.
MotorCommand goto_setpoint(const QuadState& state, const Eigen::Vector3d& setpoint,
                           const PidGains& gains, PidState& mem, double dt,
                           const QuadParams& params, const PidOptions& opt = {});

}  // namespace quadlab
