#pragma once

#include <map>
#include <string>
#include <vector>

namespace slabqo::cli {

/// Flat key = value document. '#' starts a comment; keys use dotted namespaces.
class Config {
 public:
  static Config parse(const std::string& text, const std::string& source = "<text>");
  static Config load(const std::string& path);

  /// Applies "key=value"; throws InvalidArgument on a malformed override.
  void apply_override(const std::string& assignment);
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  /// Keys of `other` replace keys here.
  void merge(const Config& other);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& get(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long get_int(const std::string& key) const;
  long get_int(const std::string& key, long fallback) const;
  /// Comma-separated list of numbers.
  std::vector<double> get_list(const std::string& key) const;

  const std::map<std::string, std::string>& values() const { return values_; }
  /// Canonical text: sorted keys, one per line.
  std::string dump() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace slabqo::cli
