#pragma once

#include <sstream>
#include <string>

namespace quadlab::log {

enum class Level : int { Quiet = 0, Warn = 1, Info = 2, Debug = 3 };

/// Current verbosity. Initialized once from the QUADLAB_LOG environment
/// variable (quiet|warn|info|debug), default info.
Level level();
void set_level(Level lvl);

void write(Level lvl, const std::string& msg);

namespace detail {
template <typename... Args>
std::string concat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}
}  // namespace detail

template <typename... Args>
void debug(Args&&... args) {
  if (level() >= Level::Debug) write(Level::Debug, detail::concat(args...));
}
template <typename... Args>
void info(Args&&... args) {
  if (level() >= Level::Info) write(Level::Info, detail::concat(args...));
}
template <typename... Args>
void warn(Args&&... args) {
  if (level() >= Level::Warn) write(Level::Warn, detail::concat(args...));
}

}  // namespace quadlab::log
