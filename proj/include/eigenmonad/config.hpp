#pragma once

// Run configuration: key=value lines or a flat JSON object.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "exactla.hpp"

namespace eigenmonad {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int max_n = 3;
  int max_m = 3;
  int max_d = 3;
  int magnus_D = 3;
  int word_len_bound = 3;
  int conjugator_bound = 4;
  long field = 0;  // 0 for ℚ, otherwise a prime
  int intermediate_cap = 8;
  std::uint64_t seed = 20241016;
  int jobs = 1;
  bool corrupt = false;  // negative control for monad-laws

  Field make_field() const { return field == 0 ? Field::rationals() : Field::prime(field); }

  nlohmann::ordered_json to_json() const {
    return {{"max_n", max_n},
            {"max_m", max_m},
            {"max_d", max_d},
            {"magnus_D", magnus_D},
            {"word_len_bound", word_len_bound},
            {"conjugator_bound", conjugator_bound},
            {"field", field},
            {"intermediate_cap", intermediate_cap},
            {"seed", seed}};
  }
};

namespace detail {

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

inline long parse_long(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  long x = 0;
  try {
    x = std::stol(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError(key + ": not an integer: '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError(key + ": not an integer: '" + v + "'");
  return x;
}

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace detail

// Bounds beyond which the default machinery is not expected to finish quickly.
inline void validate(const Config& c) {
  auto range = [](const char* k, long v, long lo, long hi) {
    if (v < lo || v > hi)
      throw ConfigError(std::string(k) + " = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  };
  range("max_n", c.max_n, 0, 4);
  range("max_m", c.max_m, 0, 4);
  range("max_d", c.max_d, 0, 4);
  range("magnus_D", c.magnus_D, 0, 4);
  range("word_len_bound", c.word_len_bound, 0, 5);
  range("conjugator_bound", c.conjugator_bound, 0, 6);
  range("intermediate_cap", c.intermediate_cap, 2, 10);
  range("jobs", c.jobs, 1, 64);
  if (c.field != 0 && !detail::is_prime(c.field)) throw ConfigError("field must be 0 (rationals) or a prime");
  if (c.magnus_D < c.max_d) throw ConfigError("magnus_D must be at least max_d");
}

inline void set_key(Config& c, const std::string& key, long v) {
  if (key == "max_n") c.max_n = (int)v;
  else if (key == "max_m") c.max_m = (int)v;
  else if (key == "max_d") c.max_d = (int)v;
  else if (key == "magnus_D") c.magnus_D = (int)v;
  else if (key == "word_len_bound") c.word_len_bound = (int)v;
  else if (key == "conjugator_bound") c.conjugator_bound = (int)v;
  else if (key == "field") c.field = v;
  else if (key == "intermediate_cap") c.intermediate_cap = (int)v;
  else if (key == "seed") {
    if (v < 0) throw ConfigError("seed must be non-negative");
    c.seed = (std::uint64_t)v;
  } else
    throw ConfigError("unknown key '" + key + "'");
}

// `field` also accepts "Q"/"q" for the rationals.
inline long field_value(const std::string& v) {
  if (v == "Q" || v == "q" || v == "QQ") return 0;
  return detail::parse_long("field", v);
}

inline Config parse_config(const std::string& text, Config c = {}) {
  std::string t = detail::trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(std::string("bad JSON: ") + e.what());
    }
    for (auto& [k, v] : j.items()) {
      if (k == "field" && v.is_string()) set_key(c, k, field_value(v.get<std::string>()));
      else if (v.is_number_integer()) set_key(c, k, v.get<long>());
      else throw ConfigError(k + ": expected an integer");
    }
  } else {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto h = line.find('#');
      if (h != std::string::npos) line.resize(h);
      line = detail::trim(line);
      if (line.empty()) continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
      std::string k = detail::trim(line.substr(0, eq)), v = detail::trim(line.substr(eq + 1));
      set_key(c, k, k == "field" ? field_value(v) : detail::parse_long(k, v));
    }
  }
  validate(c);
  return c;
}

inline Config load_config(const std::string& path, Config c = {}) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), c);
}

}  // namespace eigenmonad
