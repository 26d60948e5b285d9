#include "quadlab/pid.hpp"

#include <cmath>
#include <json.hpp>

#include "quadlab/error.hpp"
#include "quadlab/io.hpp"

namespace quadlab {

namespace {

Eigen::Vector3d clamp_abs(const Eigen::Vector3d& v, double limit) {
  return v.cwiseMax(-limit).cwiseMin(limit);
}

void check_gain(const Eigen::Vector3d& g, const char* name) {
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(g[i]) || g[i] < 0.0)
      throw ConfigError(std::string("pid gain ") + name + " must be finite and >= 0");
  }
}

}  // namespace

void PidGains::validate() const {
  check_gain(pos_kp, "pos_kp");
  check_gain(pos_ki, "pos_ki");
  check_gain(pos_kd, "pos_kd");
  check_gain(att_kp, "att_kp");
  check_gain(att_ki, "att_ki");
  check_gain(att_kd, "att_kd");
}

Eigen::VectorXd PidGains::to_vector() const {
  Eigen::VectorXd v(18);
  v << pos_kp, pos_ki, pos_kd, att_kp, att_ki, att_kd;
  return v;
}

PidGains PidGains::from_vector(const Eigen::VectorXd& v) {
  if (v.size() != 18) throw DimensionMismatch("pid gain vector must have 18 components");
  PidGains g;
  g.pos_kp = v.segment<3>(0);
  g.pos_ki = v.segment<3>(3);
  g.pos_kd = v.segment<3>(6);
  g.att_kp = v.segment<3>(9);
  g.att_ki = v.segment<3>(12);
  g.att_kd = v.segment<3>(15);
  return g;
}

void PidGains::save_json(const std::filesystem::path& path) const {
  validate();
  nlohmann::json j;
  auto put = [&j](const char* name, const Eigen::Vector3d& v) {
    j[name] = {v.x(), v.y(), v.z()};
  };
  put("pos_kp", pos_kp);
  put("pos_ki", pos_ki);
  put("pos_kd", pos_kd);
  put("att_kp", att_kp);
  put("att_ki", att_ki);
  put("att_kd", att_kd);
  write_text_atomic(path, j.dump(2) + "\n");
}

PidGains PidGains::load_json(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("gains file " + path.string() + ": " + e.what());
  }
  auto get = [&j, &path](const char* name) {
    if (!j.contains(name) || !j[name].is_array() || j[name].size() != 3)
      throw ConfigError("gains file " + path.string() + ": field '" + name +
                        "' must be a 3-element array");
    return Eigen::Vector3d(j[name][0].get<double>(), j[name][1].get<double>(),
                           j[name][2].get<double>());
  };
  PidGains g;
  g.pos_kp = get("pos_kp");
  g.pos_ki = get("pos_ki");
  g.pos_kd = get("pos_kd");
  g.att_kp = get("att_kp");
  g.att_ki = get("att_ki");
  g.att_kd = get("att_kd");
  g.validate();
  return g;
}

AttitudeSetpoint position_control(const QuadState& state, const Eigen::Vector3d& target_pos,
                                  const Eigen::Vector3d& target_vel, const PidGains& gains,
                                  PidState& mem, double dt, const QuadParams& params,
                                  const PidOptions& opt) {
  const Eigen::Vector3d error = target_pos - state.pos;
  mem.pos_integral = clamp_abs(mem.pos_integral + error * dt, opt.pos_integral_limit);

  Eigen::Vector3d error_rate;
  if (mem.has_prev_pos_error) {
    error_rate = (error - mem.prev_pos_error) / dt;
  } else {
    error_rate = target_vel - state.lin_vel;
  }
  mem.prev_pos_error = error;
  mem.has_prev_pos_error = true;

  const Eigen::Vector3d accel = gains.pos_kp.cwiseProduct(error) +
                                gains.pos_ki.cwiseProduct(mem.pos_integral) +
                                gains.pos_kd.cwiseProduct(error_rate);

  AttitudeSetpoint out;
  out.collective_thrust =
      std::clamp(params.mass * (params.gravity + accel.z()), 0.0, params.max_total_thrust());

  // Horizontal demand rotated into the yaw frame; small-angle tilt mapping.
  const double cy = std::cos(state.att.z()), sy = std::sin(state.att.z());
  const double a_fwd = cy * accel.x() + sy * accel.y();
  const double a_left = -sy * accel.x() + cy * accel.y();
  out.desired_att.x() = std::clamp(-a_left / params.gravity, -opt.max_tilt, opt.max_tilt);
  out.desired_att.y() = std::clamp(a_fwd / params.gravity, -opt.max_tilt, opt.max_tilt);
  out.desired_att.z() = 0.0;
  return out;
}

MotorCommand attitude_control(const QuadState& state, const Eigen::Vector3d& desired_att,
                              double collective_thrust, const PidGains& gains, PidState& mem,
                              double dt, const QuadParams& params, const PidOptions& opt) {
  Eigen::Vector3d error;
  for (int i = 0; i < 3; ++i) error[i] = wrap_angle(desired_att[i] - state.att[i]);
  mem.att_integral = clamp_abs(mem.att_integral + error * dt, opt.att_integral_limit);

  const Eigen::Vector3d torque = gains.att_kp.cwiseProduct(error) +
                                 gains.att_ki.cwiseProduct(mem.att_integral) -
                                 gains.att_kd.cwiseProduct(state.ang_vel);

  // Invert the X mixer: per-rotor thrusts realizing (T, tau), then rpm.
  const double d = params.arm_length / std::sqrt(2.0);
  const double yaw_ratio = params.torque_coeff / params.thrust_coeff;
  const double t4 = collective_thrust / 4.0;
  const double rx = torque.x() / (4.0 * d);
  const double ry = torque.y() / (4.0 * d);
  const double rz = torque.z() / (4.0 * yaw_ratio);

  std::array<double, 4> thrust{t4 + rx - ry - rz, t4 - rx - ry + rz, t4 - rx + ry - rz,
                               t4 + rx + ry + rz};
  MotorCommand cmd;
  for (int i = 0; i < 4; ++i) {
    const double f = std::max(thrust[i], 0.0);
    cmd.rpm[i] = std::min(std::sqrt(f / params.thrust_coeff), params.rpm_max);
  }
  return cmd;
}

MotorCommand goto_setpoint(const QuadState& state, const Eigen::Vector3d& setpoint,
                           const PidGains& gains, PidState& mem, double dt,
                           const QuadParams& params, const PidOptions& opt) {
  const AttitudeSetpoint sp =
      position_control(state, setpoint, Eigen::Vector3d::Zero(), gains, mem, dt, params, opt);
  return attitude_control(state, sp.desired_att, sp.collective_thrust, gains, mem, dt, params,
                          opt);
}

}  // namespace quadlab
