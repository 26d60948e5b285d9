#include "quadlab/dynamics.hpp"

#include <cmath>
#include <string>

#include "quadlab/config.hpp"
#include "quadlab/csv.hpp"
#include "quadlab/error.hpp"

namespace quadlab {

namespace {

constexpr double kPitchGuard = M_PI / 2.0 - 0.05;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw ConfigError(std::string("quad.") + name + " must be strictly positive");
}

}  // namespace

void QuadParams::validate() const {
  require_positive(mass, "mass");
  require_positive(arm_length, "arm_length");
  require_positive(inertia_diag.x(), "inertia_diag");
  require_positive(inertia_diag.y(), "inertia_diag");
  require_positive(inertia_diag.z(), "inertia_diag");
  require_positive(thrust_coeff, "thrust_coeff");
  require_positive(torque_coeff, "torque_coeff");
  require_positive(gravity, "gravity");
  require_positive(rpm_max, "rpm_max");
  require_positive(physics_dt, "physics_dt");
  if (physics_dt > (1.0 / 240.0) * (1.0 + 1e-12))
    throw ConfigError("quad.physics_dt must not exceed 1/240 s");
}

QuadParams QuadParams::from_config(Config& cfg) {
  auto key = [&cfg](const char* field) {
    // Accept both `quad.mass` and a bare `mass` (standalone parameter files).
    return cfg.has(std::string("quad.") + field) || !cfg.has(field)
               ? std::string("quad.") + field
               : std::string(field);
  };
  QuadParams p;
  p.mass = cfg.get_double_or(key("mass"), p.mass);
  p.arm_length = cfg.get_double_or(key("arm_length"), p.arm_length);
  auto inertia = cfg.get_vector_or(key("inertia_diag"),
                                   {p.inertia_diag.x(), p.inertia_diag.y(), p.inertia_diag.z()});
  if (inertia.size() != 3) throw ConfigError("config key 'quad.inertia_diag': expected 3 values");
  p.inertia_diag = Eigen::Vector3d(inertia[0], inertia[1], inertia[2]);
  p.thrust_coeff = cfg.get_double_or(key("thrust_coeff"), p.thrust_coeff);
  p.torque_coeff = cfg.get_double_or(key("torque_coeff"), p.torque_coeff);
  p.gravity = cfg.get_double_or(key("gravity"), p.gravity);
  p.rpm_max = cfg.get_double_or(key("rpm_max"), p.rpm_max);
  p.physics_dt = cfg.get_double_or(key("physics_dt"), p.physics_dt);
  p.validate();
  return p;
}

bool QuadState::is_finite() const {
  return pos.allFinite() && att.allFinite() && lin_vel.allFinite() && ang_vel.allFinite();
}

Eigen::VectorXd QuadState::to_vector() const {
  Eigen::VectorXd v(12);
  v << pos, att, lin_vel, ang_vel;
  return v;
}

QuadState QuadState::from_vector(const Eigen::VectorXd& v) {
  if (v.size() != 12) throw DimensionMismatch("state vector must have 12 components");
  QuadState s;
  s.pos = v.segment<3>(0);
  s.att = v.segment<3>(3);
  s.lin_vel = v.segment<3>(6);
  s.ang_vel = v.segment<3>(9);
  return s;
}

double wrap_angle(double a) {
  a = std::fmod(a + M_PI, 2.0 * M_PI);
  if (a <= 0.0) a += 2.0 * M_PI;
  return a - M_PI;
}

double hover_rpm(const QuadParams& params) {
  return std::sqrt(params.mass * params.gravity / (4.0 * params.thrust_coeff));
}

Eigen::Matrix3d body_to_world(const Eigen::Vector3d& att) {
  const double cr = std::cos(att.x()), sr = std::sin(att.x());
  const double cp = std::cos(att.y()), sp = std::sin(att.y());
  const double cy = std::cos(att.z()), sy = std::sin(att.z());
  Eigen::Matrix3d r;
  r << cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr,
       sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr,
       -sp,     cp * sr,                cp * cr;
  return r;
}

QuadState step(const QuadState& state, const MotorCommand& cmd,
               const Eigen::Vector3d& ext_force, const QuadParams& params,
               std::uint64_t step_index) {
  for (double r : cmd.rpm) {
    if (!(r >= 0.0) || !(r <= params.rpm_max) || !std::isfinite(r))
      throw MotorBoundViolation("rpm " + std::to_string(r) + " outside [0, " +
                                std::to_string(params.rpm_max) + "]");
  }
  if (!state.is_finite())
    throw SimulationDiverged("input state is non-finite", step_index);

  const double kf = params.thrust_coeff;
  const double km = params.torque_coeff;
  const double d = params.arm_length / std::sqrt(2.0);

  std::array<double, 4> thrust;
  for (int i = 0; i < 4; ++i) thrust[i] = kf * cmd.rpm[i] * cmd.rpm[i];
  const double total_thrust = thrust[0] + thrust[1] + thrust[2] + thrust[3];

  // X-configuration mixing; see MotorCommand for the rotor layout.
  Eigen::Vector3d torque;
  torque.x() = d * (thrust[0] - thrust[1] - thrust[2] + thrust[3]);
  torque.y() = d * (-thrust[0] - thrust[1] + thrust[2] + thrust[3]);
  torque.z() = km * (-cmd.rpm[0] * cmd.rpm[0] + cmd.rpm[1] * cmd.rpm[1] -
                     cmd.rpm[2] * cmd.rpm[2] + cmd.rpm[3] * cmd.rpm[3]);

  const Eigen::Matrix3d rot = body_to_world(state.att);
  const Eigen::Vector3d accel =
      (rot * Eigen::Vector3d(0.0, 0.0, total_thrust) + ext_force) / params.mass -
      Eigen::Vector3d(0.0, 0.0, params.gravity);

  // Euler's equations with diagonal inertia, body frame.
  const Eigen::Vector3d& inertia = params.inertia_diag;
  const Eigen::Vector3d momentum = inertia.cwiseProduct(state.ang_vel);
  const Eigen::Vector3d ang_accel =
      (torque - state.ang_vel.cross(momentum)).cwiseQuotient(inertia);

  const double dt = params.physics_dt;
  QuadState next;
  next.lin_vel = state.lin_vel + accel * dt;
  next.ang_vel = state.ang_vel + ang_accel * dt;
  next.pos = state.pos + next.lin_vel * dt;

  // Euler-angle kinematics: body rates -> roll/pitch/yaw rates.
  const double cr = std::cos(state.att.x()), sr = std::sin(state.att.x());
  const double cp = std::cos(state.att.y()), tp = std::tan(state.att.y());
  const Eigen::Vector3d w = next.ang_vel;
  Eigen::Vector3d att_rate;
  att_rate.x() = w.x() + sr * tp * w.y() + cr * tp * w.z();
  att_rate.y() = cr * w.y() - sr * w.z();
  att_rate.z() = (sr * w.y() + cr * w.z()) / cp;
  next.att = state.att + att_rate * dt;
  next.att.x() = wrap_angle(next.att.x());
  next.att.z() = wrap_angle(next.att.z());

  if (!next.is_finite())
    throw SimulationDiverged("state diverged to non-finite values", step_index);
  if (std::abs(next.att.y()) > kPitchGuard)
    throw SimulationDiverged("pitch left the gimbal-safe envelope", step_index);
  return next;
}

Trajectory simulate(const QuadState& initial, const Controller& controller,
                    const ForceSchedule& ext_schedule, double duration,
                    const QuadParams& params) {
  if (!(duration > 0.0)) throw ConfigError("simulate: duration must be positive");
  if (!(controller.period > 0.0)) throw ConfigError("simulate: control period must be positive");
  params.validate();

  // Integer number of physics substeps per control tick, dt never above the
  // configured physics_dt.
  const int substeps =
      std::max(1, static_cast<int>(std::ceil(controller.period / params.physics_dt - 1e-9)));
  QuadParams p = params;
  p.physics_dt = controller.period / substeps;

  const auto ticks =
      static_cast<std::uint64_t>(std::llround(std::ceil(duration / controller.period - 1e-9)));

  Trajectory traj;
  traj.dt = p.physics_dt;
  traj.states.reserve(1 + ticks * static_cast<std::uint64_t>(substeps));
  traj.states.push_back(initial);

  QuadState s = initial;
  std::uint64_t step_index = 0;
  for (std::uint64_t tick = 0; tick < ticks; ++tick) {
    const MotorCommand cmd = controller.command(s, tick * controller.period);
    for (int k = 0; k < substeps; ++k) {
      const double t = step_index * p.physics_dt;
      s = step(s, cmd, ext_schedule ? ext_schedule(t) : Eigen::Vector3d::Zero(), p, step_index);
      ++step_index;
      traj.states.push_back(s);
    }
  }
  return traj;
}

void export_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
  CsvWriter csv(path, {"t", "x", "y", "z", "roll", "pitch", "yaw", "vx", "vy", "vz", "wx", "wy",
                       "wz"});
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const QuadState& s = traj.states[i];
    csv.row({static_cast<double>(i) * traj.dt, s.pos.x(), s.pos.y(), s.pos.z(), s.att.x(),
             s.att.y(), s.att.z(), s.lin_vel.x(), s.lin_vel.y(), s.lin_vel.z(), s.ang_vel.x(),
             s.ang_vel.y(), s.ang_vel.z()});
  }
  csv.write();
}

}  // namespace quadlab
