#pragma once

// Flat key=value run configuration with command-line overrides.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qlc/errors.hpp"

namespace qlc {

class KeyValueConfig {
 public:
  KeyValueConfig() = default;

  static KeyValueConfig from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    KeyValueConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r'; };
      while (!line.empty() && is_space(line.back())) line.pop_back();
      std::size_t start = 0;
      while (start < line.size() && is_space(line[start])) ++start;
      if (start >= line.size()) continue;
      auto eq = line.find('=', start);
      if (eq == std::string::npos)
        throw ConfigError("config: line " + std::to_string(lineno) +
                          " is not key=value");
      cfg.set(trim(line.substr(start, eq - start)), trim(line.substr(eq + 1)));
    }
    return cfg;
  }

  void set(const std::string& key, const std::string& value) {
    values_[key] = value;
  }
  void set_override(const std::string& kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw ConfigError("override '" + kv + "' is not key=value");
    set(trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::string get(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }
  std::string require(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end())
      throw ConfigError("config: missing required key '" + key + "'");
    return it->second;
  }

  double get_double(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    return parse_double(key, values_.at(key));
  }
  int get_int(const std::string& key, int fallback) const {
    if (!has(key)) return fallback;
    return parse_int(key, values_.at(key));
  }

  std::vector<int> get_int_list(const std::string& key,
                                const std::vector<int>& fallback) const {
    if (!has(key)) return fallback;
    std::vector<int> out;
    std::stringstream ss(values_.at(key));
    std::string item;
    while (std::getline(ss, item, ','))
      out.push_back(parse_int(key, trim(item)));
    return out;
  }

 private:
  static std::string trim(std::string s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(0, 1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
      s.pop_back();
    return s;
  }
  static double parse_double(const std::string& key, const std::string& v) {
    try {
      std::size_t pos = 0;
      double d = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return d;
    } catch (const std::exception&) {
      throw ConfigError("config: key '" + key + "' has non-numeric value '" +
                        v + "'");
    }
  }
  static int parse_int(const std::string& key, const std::string& v) {
    try {
      std::size_t pos = 0;
      int i = std::stoi(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return i;
    } catch (const std::exception&) {
      throw ConfigError("config: key '" + key + "' has non-integer value '" +
                        v + "'");
    }
  }

  std::map<std::string, std::string> values_;
};

}  // namespace qlc
