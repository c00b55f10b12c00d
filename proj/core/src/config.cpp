#include "inls/config.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace inls {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_key(const std::string& section, const std::string& key) {
  throw std::invalid_argument("unknown key '" + key + "' in section [" + section + "]");
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("key '" + key + "': not a number: '" + value + "'");
  }
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    size_t used = 0;
    const long v = std::stol(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument("key '" + key + "': not an integer: '" + value + "'");
  }
}

Rational parse_rational(const std::string& key, const std::string& value) {
  auto r = Rational::try_parse(value);
  if (!r) throw std::invalid_argument("key '" + key + "': not a rational: '" + value + "'");
  return *r;
}

}  // namespace

RunConfig parse_run_config(std::istream& in) {
  RunConfig cfg;
  std::string section;
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed section");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "params" && section != "grid" && section != "run" && section != "output")
        throw std::invalid_argument("unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("line " + std::to_string(line_no) + ": empty key or value");

    if (section == "params") {
      if (key == "N")
        cfg.params.dim = static_cast<int>(parse_long(key, value));
      else if (key == "alpha")
        cfg.params.alpha = parse_rational(key, value);
      else if (key == "b")
        cfg.params.b = parse_rational(key, value);
      else if (key == "s")
        cfg.params.s = parse_rational(key, value);
      else if (key == "theta")
        cfg.params.theta = parse_rational(key, value);
      else if (key == "mu")
        cfg.params.mu = parse_rational(key, value);
      else if (key == "epsilon")
        cfg.params.epsilon = parse_rational(key, value);
      else if (key == "lambda")
        cfg.params.lambda_sign = static_cast<int>(parse_long(key, value));
      else
        bad_key(section, key);
    } else if (section == "grid") {
      if (key == "dim")
        cfg.grid.dim = static_cast<int>(parse_long(key, value));
      else if (key == "extent")
        cfg.grid.extent = parse_double(key, value);
      else if (key == "points")
        cfg.grid.points = static_cast<std::size_t>(parse_long(key, value));
      else
        bad_key(section, key);
    } else if (section == "run") {
      if (key == "T")
        cfg.run.T = parse_double(key, value);
      else if (key == "dt")
        cfg.run.dt = parse_double(key, value);
      else if (key == "sample_every")
        cfg.run.sample_every = static_cast<int>(parse_long(key, value));
      else if (key == "amplitude_ceiling")
        cfg.run.amplitude_ceiling = parse_double(key, value);
      else
        bad_key(section, key);
    } else if (section == "output") {
      if (key == "dir") {
        cfg.output.dir = value;
      } else if (key == "formats") {
        cfg.output.formats.clear();
        std::stringstream ss(value);
        std::string fmt;
        while (std::getline(ss, fmt, ',')) {
          fmt = trim(fmt);
          if (fmt != "csv" && fmt != "json" && fmt != "bin")
            throw std::invalid_argument("key 'formats': unknown format '" + fmt + "'");
          cfg.output.formats.push_back(fmt);
        }
      } else {
        bad_key(section, key);
      }
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": key outside of any section");
    }
  }

  cfg.params.require_valid();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  return parse_run_config(in);
}

}  // namespace inls
