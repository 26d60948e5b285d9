#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace quadlab {

/// Flat key-value configuration with dotted namespaces
/// (e.g. `td3.learning_rate = 0.001`). One format shared by every
/// subcommand; `#` starts a comment, values keep everything after `=`.
class Config {
 public:
  Config() = default;

  static Config from_file(const std::filesystem::path& path);
  static Config from_string(const std::string& text);

  /// Applies a `key=value` override (command line wins over file values).
  void set_override(const std::string& key_equals_value);
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;

  // Typed getters. The _or variants fall back to the default and record the
  // resolved value so the manifest echo always lists every consulted key.
  std::string get_string(const std::string& key) const;
  std::string get_string_or(const std::string& key, const std::string& def);
  double get_double(const std::string& key) const;
  double get_double_or(const std::string& key, double def);
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int_or(const std::string& key, std::int64_t def);
  bool get_bool_or(const std::string& key, bool def);
  std::vector<double> get_vector(const std::string& key) const;
  std::vector<double> get_vector_or(const std::string& key, const std::vector<double>& def);
  std::vector<std::int64_t> get_int_vector_or(const std::string& key,
                                              const std::vector<std::int64_t>& def);

  /// Requires value to be one of `allowed`; names the key otherwise.
  std::string get_enum_or(const std::string& key, const std::string& def,
                          const std::set<std::string>& allowed);

  /// Errors (naming the key) if any stored key is absent from `known`.
  void validate_keys(const std::set<std::string>& known) const;

  /// Sorted key -> resolved value snapshot; round-trips through from_string.
  const std::map<std::string, std::string>& entries() const { return values_; }
  std::string to_string() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace quadlab
