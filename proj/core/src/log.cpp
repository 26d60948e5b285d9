#include "quadlab/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace quadlab::log {

namespace {

Level parse_env() {
  const char* env = std::getenv("QUADLAB_LOG");
  if (env == nullptr) return Level::Info;
  if (std::strcmp(env, "quiet") == 0) return Level::Quiet;
  if (std::strcmp(env, "warn") == 0) return Level::Warn;
  if (std::strcmp(env, "debug") == 0) return Level::Debug;
  return Level::Info;
}

Level g_level = parse_env();

const char* tag(Level lvl) {
  switch (lvl) {
    case Level::Warn: return "warn";
    case Level::Debug: return "debug";
    default: return "info";
  }
}

}  // namespace

Level level() { return g_level; }
void set_level(Level lvl) { g_level = lvl; }

void write(Level lvl, const std::string& msg) {
  std::fprintf(stderr, "[quadlab:%s] %s\n", tag(lvl), msg.c_str());
}

}  // namespace quadlab::log
