#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

namespace quadlab {

class Config;

/// Physical constants of the vehicle. Defaults are CF2X-scale; everything is
/// overridable through the `quad.*` config namespace.
struct QuadParams {
  double mass = 0.027;                                      // kg
  double arm_length = 0.0397;                               // m, hub to rotor
  Eigen::Vector3d inertia_diag{1.4e-5, 1.4e-5, 2.17e-5};    // kg m^2
  double thrust_coeff = 3.16e-10;                           // N / rpm^2
  double torque_coeff = 7.94e-12;                           // N m / rpm^2
  double gravity = 9.81;                                    // m/s^2
  double rpm_max = 21702.0;
  double physics_dt = 1.0 / 240.0;                          // s

  /// Throws ConfigError unless all fields are strictly positive and
  /// physics_dt does not exceed 1/240 s.
  void validate() const;

  /// Reads fields from `quad.<field>` keys (or bare field names when no
  /// `quad.` key is present), recording defaults for absent keys.
  static QuadParams from_config(Config& cfg);

  double max_total_thrust() const { return 4.0 * thrust_coeff * rpm_max * rpm_max; }
};

/// Full 12-component rigid-body state. Attitude is roll/pitch/yaw (ZYX
/// Euler); angular velocity is expressed in the body frame.
struct QuadState {
  Eigen::Vector3d pos = Eigen::Vector3d::Zero();      // m, world frame
  Eigen::Vector3d att = Eigen::Vector3d::Zero();      // rad: roll, pitch, yaw
  Eigen::Vector3d lin_vel = Eigen::Vector3d::Zero();  // m/s, world frame
  Eigen::Vector3d ang_vel = Eigen::Vector3d::Zero();  // rad/s, body frame

  bool is_finite() const;

  /// [x, y, z, roll, pitch, yaw, vx, vy, vz, wx, wy, wz]
  Eigen::VectorXd to_vector() const;
  static QuadState from_vector(const Eigen::VectorXd& v);
};

/// Rotor speeds in rpm. Rotor layout (body frame, d = arm_length / sqrt(2)):
///   0: (+d, +d)   1: (+d, -d)   2: (-d, -d)   3: (-d, +d)
/// Rotors 1 and 3 produce positive yaw reaction torque, 0 and 2 negative.
struct MotorCommand {
  std::array<double, 4> rpm{0.0, 0.0, 0.0, 0.0};

  static MotorCommand uniform(double r) { return MotorCommand{{r, r, r, r}}; }
};

/// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

/// Rotor speed at which four rotors exactly balance gravity at level
/// attitude: sqrt(mass * g / (4 * k_f)).
double hover_rpm(const QuadParams& params);

/// Body-to-world rotation for ZYX Euler angles.
Eigen::Matrix3d body_to_world(const Eigen::Vector3d& att);

/// Advances the state by one physics step (semi-implicit Euler: velocities
/// first, then position and attitude). `ext_force` is a world-frame force at
/// the center of mass. Throws MotorBoundViolation for out-of-range commands
/// and SimulationDiverged when the result is non-finite or pitch leaves the
/// gimbal-safe envelope (|pitch| > pi/2 - 0.05).
QuadState step(const QuadState& state, const MotorCommand& cmd,
               const Eigen::Vector3d& ext_force, const QuadParams& params,
               std::uint64_t step_index = 0);

/// Controller invoked at a fixed period during simulate(). The physics step
/// is shrunk, if needed, so an integer number of substeps exactly fills each
/// control period (never exceeding params.physics_dt).
struct Controller {
  double period;  // s
  std::function<MotorCommand(const QuadState&, double t)> command;
};

using ForceSchedule = std::function<Eigen::Vector3d(double t)>;

struct Trajectory {
  std::vector<QuadState> states;  // states[0] = initial
  double dt = 0.0;                // spacing of consecutive states
};

/// Runs the physics loop for `duration` seconds, consulting the controller
/// at its period and the force schedule every physics step. Propagates
/// SimulationDiverged with the physics step index at which it occurred.
Trajectory simulate(const QuadState& initial, const Controller& controller,
                    const ForceSchedule& ext_schedule, double duration,
                    const QuadParams& params);

/// CSV export, one row per physics step:
/// t,x,y,z,roll,pitch,yaw,vx,vy,vz,wx,wy,wz (9 significant digits).
void export_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

}  // namespace quadlab
