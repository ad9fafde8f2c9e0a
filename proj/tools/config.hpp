#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sppcli {

/// Bad config text or values; the CLI maps it to the usage exit code.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sectioned key = value config. Every key has a schema default; unknown
/// sections and keys, duplicates, and malformed lines are rejected.
class Config {
 public:
  static Config defaults();
  static Config parse(std::istream& in, const std::string& origin = "<config>");
  static Config load(const std::string& path);

  const std::string& raw(const std::string& section, const std::string& key) const;
  bool was_set(const std::string& section, const std::string& key) const;

  double number(const std::string& section, const std::string& key) const;
  std::optional<double> optional_number(const std::string& section, const std::string& key) const;
  std::int64_t integer(const std::string& section, const std::string& key) const;
  std::vector<double> numbers(const std::string& section, const std::string& key) const;
  std::vector<std::string> words(const std::string& section, const std::string& key) const;

  void set(const std::string& section, const std::string& key, const std::string& value);

  /// Every section and key in schema order with its effective value.
  void dump(std::ostream& out) const;

 private:
  std::map<std::string, std::map<std::string, std::string>> values_;
  std::map<std::string, std::map<std::string, bool>> explicit_;
};

double parse_number(const std::string& text, const std::string& what);

}  // namespace sppcli
