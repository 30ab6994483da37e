#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace echograph {

// Flat `key = value` configuration file. Lines starting with '#' (after
// leading whitespace) are comments; blank lines are skipped. Values keep
// internal whitespace but are trimmed at both ends.
class Config {
 public:
  Config() = default;

  static Config parse_string(std::string_view text) {
    Config cfg;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++line_no;
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos)
        throw std::runtime_error("config line " + std::to_string(line_no) +
                                 ": expected key = value");
      const std::string key{trim(line.substr(0, eq))};
      const std::string value{trim(line.substr(eq + 1))};
      if (key.empty())
        throw std::runtime_error("config line " + std::to_string(line_no) +
                                 ": empty key");
      cfg.values_[key] = value;
    }
    return cfg;
  }

  static Config parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
  }

  bool has(const std::string& key) const { return values_.count(key) > 0; }

  std::optional<std::string> get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::string get_or(const std::string& key, std::string fallback) const {
    auto v = get(key);
    return v ? *v : std::move(fallback);
  }

  std::int64_t get_int(const std::string& key, std::int64_t fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    try {
      std::size_t used = 0;
      const std::int64_t out = std::stoll(*v, &used);
      if (used != v->size()) throw std::invalid_argument(*v);
      return out;
    } catch (const std::exception&) {
      throw std::runtime_error("config key '" + key + "': not an integer: " +
                               *v);
    }
  }

  double get_double(const std::string& key, double fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    try {
      std::size_t used = 0;
      const double out = std::stod(*v, &used);
      if (used != v->size()) throw std::invalid_argument(*v);
      return out;
    } catch (const std::exception&) {
      throw std::runtime_error("config key '" + key + "': not a number: " +
                               *v);
    }
  }

  bool get_bool(const std::string& key, bool fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
    if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
    throw std::runtime_error("config key '" + key + "': not a boolean: " + *v);
  }

  // All entries whose key starts with `prefix`, in key order, with the prefix
  // stripped.
  std::vector<std::pair<std::string, std::string>> with_prefix(
      const std::string& prefix) const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto it = values_.lower_bound(prefix); it != values_.end(); ++it) {
      if (it->first.compare(0, prefix.size(), prefix) != 0) break;
      out.emplace_back(it->first.substr(prefix.size()), it->second);
    }
    return out;
  }

  const std::map<std::string, std::string>& entries() const { return values_; }

  // Comma-separated list helper; empty value yields an empty list.
  static std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= value.size()) {
      std::size_t comma = value.find(',', pos);
      if (comma == std::string_view::npos) comma = value.size();
      const std::string_view item = trim(value.substr(pos, comma - pos));
      if (!item.empty()) out.emplace_back(item);
      pos = comma + 1;
    }
    return out;
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace echograph
