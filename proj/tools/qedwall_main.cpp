// qedwall: retarded atom-wall energy shifts and 2S-2P mixing in hydrogen.
// Licensed under the Apache License, Version 2.0. See LICENSE for details.
//
// Command-line front end: point evaluations, distance scans, decay-rate
// solving.  Exit codes: 0 success, 1 I/O failure, 2 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qedwall/asymptotics.hpp"
#include "qedwall/hydrogen.hpp"
#include "qedwall/retarded.hpp"
#include "qedwall/statics.hpp"

namespace {

using json = nlohmann::json;
using namespace qedwall;
using hydrogen::LevelLabel;

constexpr const char* kOutOfRegime = "out-of-regime";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string fmt_cell(const std::optional<double>& v) {
  return v ? fmt(*v) : std::string(kOutOfRegime);
}

void emit_config_comments(std::ostream& os, const Config& cfg) {
  for (const auto& [k, v] : config_echo(cfg)) os << "# " << k << "=" << v << "\n";
}

json config_json(const Config& cfg) {
  json j;
  for (const auto& [k, v] : config_echo(cfg)) j[k] = v;
  return j;
}

Config load_base_config() {
  if (const char* path = std::getenv("QEDWALL_CONFIG"))
    return load_config_file(path);
  return Config{};
}

struct CommonOpts {
  std::string config_path;
  int n_max = 0;  // 0 = keep config value
  std::string convention;

  Config resolve() const {
    Config cfg = config_path.empty() ? load_base_config()
                                     : load_config_file(config_path);
    if (n_max != 0) cfg.n_max = n_max;
    if (!convention.empty()) {
      if (convention == "lamb_plus_fine")
        cfg.gap_convention = GapConvention::kLambPlusFine;
      else if (convention == "fine_only")
        cfg.gap_convention = GapConvention::kFineOnly;
      else
        throw CLI::ValidationError("--convention",
                                   "expected lamb_plus_fine or fine_only");
    }
    cfg.validate();
    return cfg;
  }
};

const char* osc_name(asymptotics::Oscillation o) {
  switch (o) {
    case asymptotics::Oscillation::kNone: return "none";
    case asymptotics::Oscillation::kCos: return "cos";
    case asymptotics::Oscillation::kSin: return "sin";
  }
  return "?";
}

json terms_json(const std::vector<asymptotics::TailTerm>& terms) {
  json arr = json::array();
  for (const auto& t : terms) {
    json jt;
    jt["power"] = t.power_of_z;
    jt["oscillator"] = osc_name(t.oscillatory);
    jt["coefficient"] = t.coefficient;
    jt["gap_au"] = t.gap;
    jt["channel"] = t.channel;
    arr.push_back(jt);
  }
  return arr;
}

void emit_terms_comments(std::ostream& os,
                         const std::vector<asymptotics::TailTerm>& terms) {
  os << "# tail_term: power,oscillator,coefficient,gap_au,channel\n";
  for (const auto& t : terms)
    os << "# tail_term: " << t.power_of_z << "," << osc_name(t.oscillatory)
       << "," << fmt(t.coefficient) << "," << fmt(t.gap) << "," << t.channel
       << "\n";
}

// ---------------------------------------------------------------------------
// energy

struct EnergyRow {
  double z_au;
  double energy_au;
  std::optional<double> tail_au;
  std::vector<asymptotics::TailTerm> tail_terms;
  double nonretarded_au;
};

EnergyRow eval_energy(double z, LevelLabel state, const Config& cfg) {
  EnergyRow row{};
  row.z_au = z;
  const auto channels = hydrogen::dipole_channels({2, state}, cfg.n_max, cfg);
  retarded::EvalNotes notes;
  row.energy_au = retarded::energy_shift(z, channels, &notes);
  if (notes.chi_overflow_warning)
    std::cerr << "note: chi > 1e8; asymptotic tail recommended over the full form\n";
  try {
    const auto tail = asymptotics::energy_tail(z, channels);
    row.tail_au = tail.total;
    row.tail_terms = tail.terms;
  } catch (const OutOfRegimeError&) {
    row.tail_au = std::nullopt;
  }
  const int idx = state == LevelLabel::S12 ? 0 : (state == LevelLabel::P12 ? 1 : 2);
  const auto h = statics::multipole_matrix(z, 6, cfg);
  const auto h_free = statics::multipole_matrix(1e30, 6, cfg);
  row.nonretarded_au = h(idx, idx) - h_free(idx, idx);
  return row;
}

int cmd_energy(const CommonOpts& common, const std::string& state_str, double z,
               const std::string& units, const std::string& format) {
  const Config cfg = common.resolve();
  const LevelLabel state = hydrogen::level_from_string(state_str);
  const EnergyRow row = eval_energy(z, state, cfg);
  const double to_mhz = cfg.constants.au_to_mhz;

  if (format == "json") {
    json j;
    j["config"] = config_json(cfg);
    j["z_au"] = row.z_au;
    j["state"] = hydrogen::to_string(state);
    j["energy_au"] = row.energy_au;
    j["energy_mhz"] = row.energy_au * to_mhz;
    j["method"] = "retarded";
    j["nonretarded_au"] = row.nonretarded_au;
    j["nonretarded_mhz"] = row.nonretarded_au * to_mhz;
    if (row.tail_au) {
      j["tail_au"] = *row.tail_au;
      j["tail_mhz"] = *row.tail_au * to_mhz;
      j["tail_terms"] = terms_json(row.tail_terms);
    } else {
      j["tail_au"] = nullptr;
      j["tail_mhz"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    emit_config_comments(std::cout, cfg);
    std::cout << "z_au,state,energy_au,energy_mhz,nonretarded_au,"
                 "nonretarded_mhz,tail_au,tail_mhz,method\n";
    std::cout << fmt(row.z_au) << "," << hydrogen::to_string(state) << ","
              << fmt(row.energy_au) << "," << fmt(row.energy_au * to_mhz) << ","
              << fmt(row.nonretarded_au) << ","
              << fmt(row.nonretarded_au * to_mhz) << ","
              << fmt_cell(row.tail_au)
              << ","
              << (row.tail_au ? fmt(*row.tail_au * to_mhz)
                              : std::string(kOutOfRegime))
              << ",retarded\n";
    if (row.tail_au) emit_terms_comments(std::cout, row.tail_terms);
  } else {  // table
    const bool mhz = units == "mhz";
    const double u = mhz ? to_mhz : 1.0;
    const char* unit_name = mhz ? "MHz" : "a.u.";
    std::printf("state %s at z = %g a.u. (n_max = %d)\n",
                hydrogen::to_string(state).c_str(), z, cfg.n_max);
    std::printf("  retarded shift     %+.6e %s\n", row.energy_au * u, unit_name);
    std::printf("  nonretarded value  %+.6e %s\n", row.nonretarded_au * u,
                unit_name);
    if (row.tail_au)
      std::printf("  long-range tail    %+.6e %s\n", *row.tail_au * u, unit_name);
    else
      std::printf("  long-range tail    %s\n", kOutOfRegime);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// mixing

struct MixingRow {
  double z_au;
  double mixing_au;
  std::optional<double> tail_total;
  std::optional<std::array<double, 4>> tail_osc;  // values by power 1..4
  std::optional<double> tail_z5;
  std::vector<asymptotics::TailTerm> tail_terms;
  bool p12_products_vanish;
};

MixingRow eval_mixing(double z, LevelLabel from, LevelLabel to,
                      const Config& cfg, asymptotics::TailForm form) {
  MixingRow row{};
  row.z_au = z;
  const auto channels = hydrogen::mixing_channels(from, to, cfg.n_max, cfg);
  row.mixing_au = retarded::mixing_element(z, channels);
  row.p12_products_vanish = true;
  for (const auto& ch : channels) {
    if (ch.label != "2P1/2") continue;
    const double scale = std::abs(ch.p_zq2) + std::abs(ch.p_rparz) +
                         std::abs(ch.p_zq2_rev) + std::abs(ch.p_rparz_rev);
    row.p12_products_vanish = scale < 1e-12;
  }
  try {
    const auto tail = asymptotics::mixing_tail(z, channels, form);
    row.tail_total = tail.total;
    row.tail_terms = tail.terms;
    std::array<double, 4> osc{0, 0, 0, 0};
    double z5 = 0.0;
    for (const auto& t : tail.terms) {
      if (t.oscillatory == asymptotics::Oscillation::kNone)
        z5 += t.evaluate(z);
      else
        osc[t.power_of_z - 1] += t.evaluate(z);
    }
    row.tail_osc = osc;
    row.tail_z5 = z5;
  } catch (const OutOfRegimeError&) {
  }
  return row;
}

int cmd_mixing(const CommonOpts& common, const std::string& from_str,
               const std::string& to_str, double z, bool strict_tail,
               const std::string& format) {
  const Config cfg = common.resolve();
  const LevelLabel from = hydrogen::level_from_string(from_str);
  const LevelLabel to = hydrogen::level_from_string(to_str);
  const auto form = strict_tail ? asymptotics::TailForm::kStrict
                                : asymptotics::TailForm::kConsistent;
  const MixingRow row = eval_mixing(z, from, to, cfg, form);
  const double to_mhz = cfg.constants.au_to_mhz;

  if (format == "json") {
    json j;
    j["config"] = config_json(cfg);
    j["z_au"] = row.z_au;
    j["from"] = hydrogen::to_string(from);
    j["to"] = hydrogen::to_string(to);
    j["mixing_au"] = row.mixing_au;
    j["mixing_mhz"] = row.mixing_au * to_mhz;
    j["method"] = "retarded";
    j["strict_paper_tail"] = strict_tail;
    j["p12_cancellation"] = row.p12_products_vanish;
    if (row.tail_total) {
      j["tail_au"] = *row.tail_total;
      for (int p = 1; p <= 4; ++p)
        j["tail_osc_z" + std::to_string(p) + "_au"] = (*row.tail_osc)[p - 1];
      j["tail_z5_au"] = *row.tail_z5;
      j["tail_terms"] = terms_json(row.tail_terms);
    } else {
      j["tail_au"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    emit_config_comments(std::cout, cfg);
    std::cout << "z_au,from,to,mixing_au,mixing_mhz,tail_au,tail_osc_z1_au,"
                 "tail_osc_z2_au,tail_osc_z3_au,tail_osc_z4_au,tail_z5_au,"
                 "p12_cancellation,strict_paper_tail\n";
    std::cout << fmt(row.z_au) << "," << hydrogen::to_string(from) << ","
              << hydrogen::to_string(to) << "," << fmt(row.mixing_au) << ","
              << fmt(row.mixing_au * to_mhz) << "," << fmt_cell(row.tail_total);
    for (int p = 1; p <= 4; ++p)
      std::cout << ","
                << (row.tail_osc ? fmt((*row.tail_osc)[p - 1])
                                 : std::string(kOutOfRegime));
    std::cout << "," << fmt_cell(row.tail_z5) << ","
              << (row.p12_products_vanish ? "true" : "false") << ","
              << (strict_tail ? "on" : "off") << "\n";
    if (row.tail_total) emit_terms_comments(std::cout, row.tail_terms);
  } else {
    std::printf("mixing <%s|dV|%s> at z = %g a.u. (n_max = %d)\n",
                hydrogen::to_string(from).c_str(),
                hydrogen::to_string(to).c_str(), z, cfg.n_max);
    std::printf("  retarded element   %+.6e a.u.\n", row.mixing_au);
    if (row.tail_total) {
      std::printf("  long-range tail    %+.6e a.u.\n", *row.tail_total);
      for (int p = 1; p <= 4; ++p)
        std::printf("    oscillatory 1/Z^%d  %+.6e a.u.\n", p,
                    (*row.tail_osc)[p - 1]);
      std::printf("    smooth 1/Z^5       %+.6e a.u.\n", *row.tail_z5);
    } else {
      std::printf("  long-range tail    %s\n", kOutOfRegime);
    }
    std::printf("  virtual 2P1/2 products vanish: %s\n",
                row.p12_products_vanish ? "yes" : "no");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// scan

std::vector<double> make_grid(double zmin, double zmax, int points, bool log) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    g[i] = log ? zmin * std::pow(zmax / zmin, f) : zmin + (zmax - zmin) * f;
  }
  return g;
}

int cmd_scan(const CommonOpts& common, const std::string& quantity,
             double zmin, double zmax, int points, bool log_grid,
             const std::string& out_path, const std::string& format,
             const std::string& state_str, const std::string& from_str,
             const std::string& to_str, bool strict_tail) {
  const Config cfg = common.resolve();
  const auto grid = make_grid(zmin, zmax, points, log_grid);
  const auto form = strict_tail ? asymptotics::TailForm::kStrict
                                : asymptotics::TailForm::kConsistent;

  std::ostringstream body;
  json jrows = json::array();
  std::string header;

  if (quantity == "energy") {
    const LevelLabel state = hydrogen::level_from_string(state_str);
    header = "z_au,energy_au,energy_mhz,nonretarded_au,tail_au";
    for (double z : grid) {
      const auto row = eval_energy(z, state, cfg);
      body << fmt(z) << "," << fmt(row.energy_au) << ","
           << fmt(row.energy_au * cfg.constants.au_to_mhz) << ","
           << fmt(row.nonretarded_au) << "," << fmt_cell(row.tail_au) << "\n";
      json jr;
      jr["z_au"] = z;
      jr["energy_au"] = row.energy_au;
      jr["energy_mhz"] = row.energy_au * cfg.constants.au_to_mhz;
      jr["nonretarded_au"] = row.nonretarded_au;
      jr["tail_au"] = row.tail_au ? json(*row.tail_au) : json(nullptr);
      jrows.push_back(jr);
    }
  } else if (quantity == "mixing") {
    const LevelLabel from = hydrogen::level_from_string(from_str);
    const LevelLabel to = hydrogen::level_from_string(to_str);
    header = "z_au,mixing_au,tail_au";
    for (double z : grid) {
      const auto row = eval_mixing(z, from, to, cfg, form);
      body << fmt(z) << "," << fmt(row.mixing_au) << ","
           << fmt_cell(row.tail_total) << "\n";
      json jr;
      jr["z_au"] = z;
      jr["mixing_au"] = row.mixing_au;
      jr["tail_au"] = row.tail_total ? json(*row.tail_total) : json(nullptr);
      jrows.push_back(jr);
    }
  } else if (quantity == "admixtures") {
    header = "z_au,aS_sq,a12_sq,a32_sq,branch_eigenvalue_au";
    auto desc = grid;
    std::reverse(desc.begin(), desc.end());
    const auto spectra = statics::adiabatic_spectrum(desc, cfg);
    for (size_t i = 0; i < grid.size(); ++i) {
      const auto& s = spectra[grid.size() - 1 - i][0];  // coupled S branch
      const double z = grid[i];
      const auto& c = s.coefficients;
      body << fmt(z) << "," << fmt(c(0) * c(0)) << "," << fmt(c(1) * c(1))
           << "," << fmt(c(2) * c(2)) << "," << fmt(s.eigenvalue) << "\n";
      json jr;
      jr["z_au"] = z;
      jr["aS_sq"] = c(0) * c(0);
      jr["a12_sq"] = c(1) * c(1);
      jr["a32_sq"] = c(2) * c(2);
      jr["branch_eigenvalue_au"] = s.eigenvalue;
      jrows.push_back(jr);
    }
  } else if (quantity == "gamma") {
    header = "z_au,xi,gamma_eff_au";
    for (double z : grid) {
      std::optional<double> xv, gv;
      try {
        xv = statics::xi(z, cfg.constants);
        gv = statics::gamma_eff(z, cfg.constants);
      } catch (const OutOfRegimeError&) {
      }
      body << fmt(z) << "," << fmt_cell(xv) << "," << fmt_cell(gv) << "\n";
      json jr;
      jr["z_au"] = z;
      jr["xi"] = xv ? json(*xv) : json(nullptr);
      jr["gamma_eff_au"] = gv ? json(*gv) : json(nullptr);
      jrows.push_back(jr);
    }
  } else {
    throw CLI::ValidationError("--quantity",
                               "expected energy|mixing|admixtures|gamma");
  }

  std::ostringstream full;
  if (format == "json") {
    json j;
    j["config"] = config_json(cfg);
    j["quantity"] = quantity;
    j["rows"] = jrows;
    full << j.dump(2) << "\n";
  } else {
    emit_config_comments(full, cfg);
    full << header << "\n" << body.str();
  }

  if (out_path.empty() || out_path == "-") {
    std::cout << full.str();
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return 1;
    }
    out << full.str();
    if (!out.good()) {
      std::cerr << "error: write failure on '" << out_path << "'\n";
      return 1;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// doubling

int cmd_doubling(const CommonOpts& common, const std::string& format) {
  const Config cfg = common.resolve();
  const double z0 = statics::doubling_distance(cfg.constants);
  if (format == "json") {
    json j;
    j["config"] = config_json(cfg);
    j["z0_au"] = z0;
    std::cout << j.dump(2) << "\n";
  } else {
    emit_config_comments(std::cout, cfg);
    std::cout << "z0_au=" << fmt(z0) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qedwall: retarded atom-wall energy shifts, parity mixing and decay "
      "quenching for metastable hydrogen 2S near a perfect conductor"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--config", common.config_path,
                 "key=value configuration file (overrides QEDWALL_CONFIG)");
  app.add_option("--nmax", common.n_max,
                 "principal quantum number cutoff for virtual states (2..6)");
  app.add_option("--convention", common.convention,
                 "2P3/2 gap convention: lamb_plus_fine|fine_only");

  // energy
  auto* energy = app.add_subcommand("energy", "retarded level shift at one distance");
  std::string e_state = "2S";
  double e_z = 0.0;
  std::string e_units = "au", e_format = "table";
  energy->add_option("--state", e_state, "2S | 2P12 | 2P32")->required();
  energy->add_option("--z", e_z, "atom-wall distance, a.u.")
      ->required()
      ->check(CLI::PositiveNumber);
  energy->add_option("--units", e_units)->check(CLI::IsMember({"au", "mhz"}));
  energy->add_option("--format", e_format)
      ->check(CLI::IsMember({"csv", "json", "table"}));

  // mixing
  auto* mixing = app.add_subcommand("mixing", "retarded parity-mixing element");
  std::string m_from, m_to = "2S", m_strict = "off", m_format = "table";
  double m_z = 0.0;
  mixing->add_option("--from", m_from, "admixed state, e.g. 2P12")->required();
  mixing->add_option("--to", m_to, "reference state")->required();
  mixing->add_option("--z", m_z)->required()->check(CLI::PositiveNumber);
  mixing->add_option("--strict-paper-tail", m_strict)
      ->check(CLI::IsMember({"on", "off"}));
  mixing->add_option("--format", m_format)
      ->check(CLI::IsMember({"csv", "json", "table"}));

  // scan
  auto* scan = app.add_subcommand("scan", "tabulate a quantity over a distance grid");
  std::string s_quantity;
  double s_zmin = 0.0, s_zmax = 0.0;
  int s_points = 0;
  bool s_log = false;
  std::string s_out, s_format = "csv", s_state = "2S", s_from = "2P12",
              s_to = "2S", s_strict = "off";
  scan->add_option("--quantity", s_quantity, "energy|mixing|admixtures|gamma")
      ->required();
  scan->add_option("--zmin", s_zmin)->required()->check(CLI::PositiveNumber);
  scan->add_option("--zmax", s_zmax)->required()->check(CLI::PositiveNumber);
  scan->add_option("--points", s_points)->required()->check(CLI::Range(2, 100000));
  scan->add_flag("--log", s_log, "logarithmic grid");
  scan->add_option("--out", s_out, "output file (default stdout)");
  scan->add_option("--format", s_format)->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--state", s_state, "state for energy scans");
  scan->add_option("--from", s_from, "admixed state for mixing scans");
  scan->add_option("--to", s_to, "reference state for mixing scans");
  scan->add_option("--strict-paper-tail", s_strict)
      ->check(CLI::IsMember({"on", "off"}));

  // doubling
  auto* doubling =
      app.add_subcommand("doubling", "distance where the 2S decay rate doubles");
  std::string d_format = "text";
  doubling->add_option("--format", d_format)
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (energy->parsed())
      return cmd_energy(common, e_state, e_z, e_units, e_format);
    if (mixing->parsed())
      return cmd_mixing(common, m_from, m_to, m_z, m_strict == "on", m_format);
    if (scan->parsed()) {
      if (!(s_zmin < s_zmax)) {
        std::cerr << "error: require zmin < zmax\n";
        return 2;
      }
      return cmd_scan(common, s_quantity, s_zmin, s_zmax, s_points, s_log,
                      s_out, s_format, s_state, s_from, s_to, s_strict == "on");
    }
    if (doubling->parsed()) return cmd_doubling(common, d_format);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
