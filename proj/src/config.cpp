// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.

#include "qedwall/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qedwall {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string format_au(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

Config parse_config_text(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key == "lamb_shift_au")
      cfg.constants.lamb_shift = std::stod(val);
    else if (key == "fine_structure_au")
      cfg.constants.fine_structure = std::stod(val);
    else if (key == "gamma_2s_au")
      cfg.constants.gamma_2s = std::stod(val);
    else if (key == "gamma_2p_au")
      cfg.constants.gamma_2p = std::stod(val);
    else if (key == "au_to_mhz")
      cfg.constants.au_to_mhz = std::stod(val);
    else if (key == "n_max")
      cfg.n_max = std::stoi(val);
    else if (key == "gap_convention") {
      if (val == "lamb_plus_fine")
        cfg.gap_convention = GapConvention::kLambPlusFine;
      else if (val == "fine_only")
        cfg.gap_convention = GapConvention::kFineOnly;
      else
        throw std::invalid_argument("config: unknown gap_convention '" + val + "'");
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::map<std::string, std::string> config_echo(const Config& cfg) {
  std::map<std::string, std::string> out;
  out["lamb_shift_au"] = format_au(cfg.constants.lamb_shift);
  out["fine_structure_au"] = format_au(cfg.constants.fine_structure);
  out["gamma_2s_au"] = format_au(cfg.constants.gamma_2s);
  out["gamma_2p_au"] = format_au(cfg.constants.gamma_2p);
  out["au_to_mhz"] = format_au(cfg.constants.au_to_mhz);
  out["n_max"] = std::to_string(cfg.n_max);
  out["gap_convention"] = cfg.gap_convention == GapConvention::kLambPlusFine
                              ? "lamb_plus_fine"
                              : "fine_only";
  return out;
}

}  // namespace qedwall
