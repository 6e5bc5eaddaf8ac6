// multibrot: render Multibrot / Hyperbrot / Perplexbrot sets, print the
// closed-form parameters of order p, and run the verification suites.
//
// Exit status: 0 = success / all checks pass, 1 = a mathematical check
// failed, 2 = usage or I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "multibrot/multibrot.hpp"

namespace {

using multibrot::format_double;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandConfig {
  std::string subcommand;
  std::string kind = "multibrot";
  int p = 2;
  std::vector<double> window;
  std::vector<double> box;
  std::vector<int> res;
  int max_iter = 0;  // 0 = command default
  std::string out;
  std::string format;
  std::string suite = "all";
  std::string config;
};

using OptionMap = std::map<std::string, CLI::Option*>;

OptionMap add_common_options(CLI::App* cmd, CommandConfig& cfg) {
  OptionMap m;
  m["p"] = cmd->add_option("--p", cfg.p, "Degree of z^p + c");
  m["res"] = cmd->add_option("--res", cfg.res, "Resolution N or N,N[,N]")->delimiter(',');
  m["max_iter"] = cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap");
  m["out"] = cmd->add_option("--out", cfg.out, "Output path");
  m["format"] = cmd->add_option("--format", cfg.format, "Output format")
                    ->check(CLI::IsMember({"pgm", "obj", "csv", "json"}));
  cmd->add_option("--config", cfg.config, "JSON file supplying any of the flags above");
  return m;
}

/// Fills options not given on the command line from the JSON config file.
void apply_config_file(CommandConfig& cfg, const OptionMap& options) {
  if (cfg.config.empty()) return;
  std::ifstream in(cfg.config);
  if (!in) throw UsageError("cannot read config file: " + cfg.config);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("invalid JSON in " + cfg.config + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  auto unset = [&](const std::string& key) {
    auto it = options.find(key);
    return it != options.end() && it->second->count() == 0;
  };
  try {
    for (auto& [key, value] : j.items()) {
      if (!options.count(key)) throw UsageError("unknown config key: " + key);
      if (!unset(key)) continue;
      if (key == "p") cfg.p = value.get<int>();
      else if (key == "kind") cfg.kind = value.get<std::string>();
      else if (key == "window") cfg.window = value.get<std::vector<double>>();
      else if (key == "box") cfg.box = value.get<std::vector<double>>();
      else if (key == "res") cfg.res = value.is_array() ? value.get<std::vector<int>>() : std::vector<int>{value.get<int>()};
      else if (key == "max_iter") cfg.max_iter = value.get<int>();
      else if (key == "out") cfg.out = value.get<std::string>();
      else if (key == "format") cfg.format = value.get<std::string>();
      else if (key == "suite") cfg.suite = value.get<std::string>();
    }
  } catch (const json::exception& e) {
    throw UsageError("bad value in config file: " + std::string(e.what()));
  }
}

std::vector<int> resolution(const CommandConfig& cfg, std::size_t dims, int fallback) {
  std::vector<int> r = cfg.res;
  if (r.empty()) r.assign(dims, fallback);
  if (r.size() == 1) r.assign(dims, r[0]);
  if (r.size() != dims) throw UsageError("--res expects 1 or " + std::to_string(dims) + " values");
  for (int n : r)
    if (n < 2) throw UsageError("--res values must be >= 2");
  return r;
}

multibrot::EscapeParams escape_params(const CommandConfig& cfg, int fallback_iter) {
  multibrot::EscapeParams e;
  e.p = cfg.p;
  e.max_iter = cfg.max_iter > 0 ? cfg.max_iter : fallback_iter;
  try {
    e.validate();
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
  return e;
}

std::string replace_extension(const std::string& path, const std::string& ext) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + ext;
  return path.substr(0, dot) + ext;
}

void write_raster(const CommandConfig& cfg, const multibrot::RasterGrid& grid, const std::string& format) {
  auto out = multibrot::open_output(cfg.out);
  if (format == "pgm") {
    multibrot::write_pgm(out, grid);
  } else {
    multibrot::PointSet2D members;
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (grid.member(i)) members.push_back(grid.domain.center(i));
    multibrot::write_points_csv(out, members);
  }
  if (!out) throw std::runtime_error("write failed: " + cfg.out);
}

int cmd_render(CommandConfig cfg) {
  using namespace multibrot;
  if (cfg.kind == "perplexbrot") {
    const std::string format = cfg.format.empty() ? "obj" : cfg.format;
    if (format != "obj" && format != "csv") throw UsageError("perplexbrot renders to obj or csv");
    if (cfg.p % 2 != 0 || cfg.p < 2 || cfg.p > max_degree)
      throw UsageError("perplexbrot needs an even p in [2, 64]");
    std::vector<double> b = cfg.box.empty() ? std::vector<double>{-2, 2, -2, 2, -2, 2} : cfg.box;
    if (b.size() != 6) throw UsageError("--box expects x0,x1,y0,y1,z0,z1");
    const auto r = resolution(cfg, 3, 128);
    const EscapeParams e = escape_params(cfg, render_max_iter);
    Box3D box;
    try {
      box = make_box(b[0], b[1], b[2], b[3], b[4], b[5], r[0], r[1], r[2]);
    } catch (const std::invalid_argument& err) {
      throw UsageError(err.what());
    }
    if (cfg.out.empty()) cfg.out = "perplexbrot_p" + std::to_string(cfg.p) + ".obj";

    const SquareParams s = square_params(cfg.p);
    const VoxelGrid grid = voxelize_perplexbrot(box, e);
    const int p = cfg.p;
    const AgreementReport rep = agreement_report_against(
        grid, [p](const Point<3>& c) { return perplexbrot_contains(c[0], c[1], c[2], p); },
        [p](const Point<3>& c) { return perplexbrot_l1_excess(c[0], c[1], c[2], p); });

    std::string summary_path = cfg.out;
    if (format == "obj") {
      auto out = open_output(cfg.out);
      write_obj(out, octahedron_mesh(s.t, s.l));
      if (!out) throw std::runtime_error("write failed: " + cfg.out);
      summary_path = replace_extension(cfg.out, ".csv");
    }
    CsvTable t{{"p", "nx", "ny", "nz", "max_iter", "member_voxels", "voxel_volume", "estimated_volume",
                "analytic_volume", "disagreeing_voxels", "max_disagreement_band"},
               {}};
    t.add_row({std::to_string(p), std::to_string(r[0]), std::to_string(r[1]), std::to_string(r[2]),
               std::to_string(e.max_iter), std::to_string(rep.iterative_members), format_double(box.cell_volume()),
               format_double(rep.iterative_members * box.cell_volume()), format_double(s.l * s.l * s.l / 6.0),
               std::to_string(rep.disagree), format_double(rep.max_band)});
    auto out = open_output(summary_path);
    write_csv(out, t);
    if (!out) throw std::runtime_error("write failed: " + summary_path);
    std::cout << "wrote " << (format == "obj" ? cfg.out + " and " : std::string{}) << summary_path << '\n';
    return exit_ok;
  }

  if (cfg.kind != "multibrot" && cfg.kind != "hyperbrot") throw UsageError("unknown --kind " + cfg.kind);
  const std::string format = cfg.format.empty() ? "pgm" : cfg.format;
  if (format != "pgm" && format != "csv") throw UsageError(cfg.kind + " renders to pgm or csv");
  std::vector<double> w = cfg.window;
  if (w.empty()) {
    if (cfg.kind == "multibrot") {
      const double half = cfg.p >= 2 ? std::pow(2.0, 1.0 / (cfg.p - 1.0)) : 2.0;
      w = {-half, half, -half, half};
    } else {
      w = {-2.0, 1.0, -1.5, 1.5};
    }
  }
  if (w.size() != 4) throw UsageError("--window expects x0,x1,y0,y1");
  const auto r = resolution(cfg, 2, 1024);
  const EscapeParams e = escape_params(cfg, render_max_iter);
  Window2D window;
  try {
    window = make_window(w[0], w[1], w[2], w[3], r[0], r[1]);
  } catch (const std::invalid_argument& err) {
    throw UsageError(err.what());
  }
  if (cfg.out.empty()) cfg.out = cfg.kind + "_p" + std::to_string(cfg.p) + "." + format;
  const RasterGrid grid = cfg.kind == "multibrot" ? raster_multibrot(window, e) : raster_hyperbrot(window, e);
  write_raster(cfg, grid, format);
  std::cout << "wrote " << cfg.out << " (" << grid.member_count() << " of " << grid.size() << " cells in the set)\n";
  return exit_ok;
}

int cmd_info(const CommandConfig& cfg) {
  using namespace multibrot;
  if (cfg.p < 2 || cfg.p > max_degree) throw UsageError("info needs p in [2, 64]");
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format != "json" && format != "csv") throw UsageError("info writes json or csv");
  const RealInterval iv = real_interval(cfg.p);
  json j = json::object();
  j["p"] = cfg.p;
  j["lo"] = iv.lo;
  j["hi"] = iv.hi;
  if (cfg.p % 2 == 0) {
    const SquareParams s = square_params(cfg.p);
    j["t"] = s.t;
    j["l"] = s.l;
    j["edge"] = octahedron_edge(cfg.p);
    j["h"] = hausdorff_analytic(cfg.p);
  }
  std::ostringstream text;
  if (format == "json") {
    text << j.dump(2) << '\n';
  } else {
    CsvTable t;
    std::vector<std::string> row;
    for (auto& [key, value] : j.items()) {
      t.header.push_back(key);
      row.push_back(value.is_number_integer() ? std::to_string(value.get<int>()) : format_double(value.get<double>()));
    }
    t.add_row(row);
    write_csv(text, t);
  }
  if (cfg.out.empty()) {
    std::cout << text.str();
  } else {
    auto out = open_output(cfg.out);
    out << text.str();
    if (!out) throw std::runtime_error("write failed: " + cfg.out);
  }
  return exit_ok;
}

int cmd_verify(const CommandConfig& cfg) {
  using namespace multibrot;
  std::vector<std::string> suites;
  if (cfg.suite == "all") {
    suites = suite_names();
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
      throw UsageError("unknown --suite " + cfg.suite);
    suites = {cfg.suite};
  }
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format != "json" && format != "csv") throw UsageError("verify writes csv or json");
  VerifyConfig vc;
  if (cfg.max_iter > 0) vc.max_iter = cfg.max_iter;
  if (!cfg.res.empty()) vc.res = cfg.res[0];
  if (vc.res && *vc.res < 2) throw UsageError("--res must be >= 2");

  std::vector<SuiteReport> reports;
  bool all_passed = true;
  for (const std::string& name : suites) {
    reports.push_back(*run_suite(name, vc));
    const SuiteReport& rep = reports.back();
    for (const Check& c : rep.checks)
      std::cout << (c.passed ? "PASS " : "FAIL ") << rep.suite << ": " << c.name << "  value=" << format_double(c.value)
                << " limit=" << format_double(c.limit) << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
    all_passed = all_passed && rep.passed();
  }

  if (!cfg.out.empty()) {
    auto out = open_output(cfg.out);
    if (format == "csv") {
      CsvTable t{{"suite", "check", "value", "limit", "passed", "detail"}, {}};
      for (const auto& rep : reports)
        for (const Check& c : rep.checks)
          t.add_row({rep.suite, c.name, format_double(c.value), format_double(c.limit), c.passed ? "true" : "false",
                     c.detail});
      write_csv(out, t);
    } else {
      json j = json::object();
      j["passed"] = all_passed;
      j["suites"] = json::array();
      for (const auto& rep : reports) {
        json s{{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", json::array()}};
        for (const Check& c : rep.checks)
          s["checks"].push_back(
              {{"check", c.name}, {"value", c.value}, {"limit", c.limit}, {"passed", c.passed}, {"detail", c.detail}});
        j["suites"].push_back(s);
      }
      out << j.dump(2) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + cfg.out);
  }
  std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << '\n';
  return all_passed ? exit_ok : exit_check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multibrot, Hyperbrot and Perplexbrot renderer and verifier"};
  app.require_subcommand(1);
  CommandConfig cfg;

  CLI::App* render = app.add_subcommand("render", "Render a set to PGM (2D) or OBJ + CSV summary (3D)");
  OptionMap render_opts = add_common_options(render, cfg);
  render_opts["kind"] = render->add_option("--kind", cfg.kind, "multibrot | hyperbrot | perplexbrot")
                            ->check(CLI::IsMember({"multibrot", "hyperbrot", "perplexbrot"}));
  render_opts["window"] = render->add_option("--window", cfg.window, "x0,x1,y0,y1")->delimiter(',');
  render_opts["box"] = render->add_option("--box", cfg.box, "x0,x1,y0,y1,z0,z1")->delimiter(',');

  CLI::App* info = app.add_subcommand("info", "Print the closed-form parameters for degree p");
  OptionMap info_opts = add_common_options(info, cfg);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  OptionMap verify_opts = add_common_options(verify, cfg);
  verify_opts["suite"] = verify->add_option("--suite", cfg.suite, "interval | square | octahedron | hausdorff | algebra | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (render->parsed()) {
      apply_config_file(cfg, render_opts);
      return cmd_render(cfg);
    }
    if (info->parsed()) {
      apply_config_file(cfg, info_opts);
      return cmd_info(cfg);
    }
    apply_config_file(cfg, verify_opts);
    return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return exit_usage;
  }
}
