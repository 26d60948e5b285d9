#include "quadlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

#include "quadlab/error.hpp"
#include "quadlab/io.hpp"

namespace quadlab {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse '" + v + "' as number");
  }
}

}  // namespace

Config Config::from_file(const std::filesystem::path& path) {
  return from_string(read_text(path));
}

Config Config::from_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    cfg.values_[key] = value;
  }
  return cfg;
}

void Config::set_override(const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override '" + kv + "': expected key=value");
  std::string key = trim(kv.substr(0, eq));
  std::string value = trim(kv.substr(eq + 1));
  if (key.empty()) throw ConfigError("override '" + kv + "': empty key");
  values_[key] = value;
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

std::string Config::get_string(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key '" + key + "'");
  return it->second;
}

std::string Config::get_string_or(const std::string& key, const std::string& def) {
  auto it = values_.find(key);
  if (it == values_.end()) {
    values_[key] = def;
    return def;
  }
  return it->second;
}

double Config::get_double(const std::string& key) const {
  return parse_double(key, get_string(key));
}

double Config::get_double_or(const std::string& key, double def) {
  if (!has(key)) {
    std::ostringstream os;
    os << std::setprecision(17) << def;
    values_[key] = os.str();
    return def;
  }
  return get_double(key);
}

std::int64_t Config::get_int(const std::string& key) const {
  const std::string v = get_string(key);
  try {
    std::size_t pos = 0;
    long long i = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse '" + v + "' as integer");
  }
}

std::int64_t Config::get_int_or(const std::string& key, std::int64_t def) {
  if (!has(key)) {
    values_[key] = std::to_string(def);
    return def;
  }
  return get_int(key);
}

bool Config::get_bool_or(const std::string& key, bool def) {
  if (!has(key)) {
    values_[key] = def ? "true" : "false";
    return def;
  }
  const std::string v = get_string(key);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("config key '" + key + "': cannot parse '" + v + "' as boolean");
}

std::vector<double> Config::get_vector(const std::string& key) const {
  const std::string v = get_string(key);
  std::vector<double> out;
  std::string item;
  std::istringstream ss(v);
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("config key '" + key + "': empty vector component");
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) throw ConfigError("config key '" + key + "': empty vector");
  return out;
}

std::vector<double> Config::get_vector_or(const std::string& key, const std::vector<double>& def) {
  if (!has(key)) {
    std::ostringstream os;
    os << std::setprecision(17);
    for (std::size_t i = 0; i < def.size(); ++i) {
      if (i) os << ',';
      os << def[i];
    }
    values_[key] = os.str();
    return def;
  }
  return get_vector(key);
}

std::vector<std::int64_t> Config::get_int_vector_or(const std::string& key,
                                                    const std::vector<std::int64_t>& def) {
  if (!has(key)) {
    std::ostringstream os;
    for (std::size_t i = 0; i < def.size(); ++i) {
      if (i) os << ',';
      os << def[i];
    }
    values_[key] = os.str();
    return def;
  }
  std::vector<std::int64_t> out;
  for (double d : get_vector(key)) {
    auto i = static_cast<std::int64_t>(d);
    if (static_cast<double>(i) != d)
      throw ConfigError("config key '" + key + "': expected integer components");
    out.push_back(i);
  }
  return out;
}

std::string Config::get_enum_or(const std::string& key, const std::string& def,
                                const std::set<std::string>& allowed) {
  const std::string v = get_string_or(key, def);
  if (!allowed.count(v)) {
    std::string opts;
    for (const auto& a : allowed) opts += (opts.empty() ? "" : "|") + a;
    throw ConfigError("config key '" + key + "': '" + v + "' not one of {" + opts + "}");
  }
  return v;
}

void Config::validate_keys(const std::set<std::string>& known) const {
  for (const auto& [key, value] : values_) {
    if (!known.count(key))
      throw ConfigError("unknown config key '" + key + "'");
  }
}

std::string Config::to_string() const {
  std::string out;
  for (const auto& [key, value] : values_) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  }
  return out;
}

}  // namespace quadlab
