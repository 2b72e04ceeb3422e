// djqla: verify standard R-matrices and their quantum Lie brackets, run the
// classification sweep, reduce words in the enveloping algebra, recognize ice
// matrices. Prints the JSON report on stdout.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "djqla/cli.hpp"
#include "djqla/errors.hpp"

namespace {

std::vector<int> parse_parity(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "0" || item == "1") {
      out.push_back(item == "1" ? 1 : 0);
    } else {
      throw djqla::ParseError("parity entries must be 0 or 1, got '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for multi-parametric R-matrices and quantum Lie algebras"};
  std::string config_path;
  std::string json_path;
  std::uint64_t seed = 1;
  int d_max = 0;
  bool symbolic = false;
  bool sampled = false;
  std::string q_text;
  int dim = 0;
  std::string parity_text;
  std::string c_text;

  app.add_option("--config", config_path, "JSON job config");
  app.add_option("--seed", seed, "seed for sample points");
  app.add_option("--dmax", d_max, "largest dimension for classify (1..4)");
  app.add_option("--json", json_path, "also write the report to this path");
  auto* sym = app.add_flag("--symbolic", symbolic, "keep q, p and c symbolic (default)");
  app.add_flag("--sampled", sampled, "substitute a generic rational point first")->excludes(sym);
  app.add_option("--q", q_text, "q as a scalar string, e.g. 5/7 or q");
  app.add_option("--dim", dim, "dimension of V");
  app.add_option("--parity", parity_text, "comma separated parities, e.g. 0,0,1");
  app.add_option("--c", c_text, "bracket scale c");
  for (const char* name : {"verify", "classify", "equivalence", "normal-form", "recognize"}) {
    app.add_subcommand(name, std::string("run ") + name)->fallthrough();
  }
  app.require_subcommand(1);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command_name = app.get_subcommands().front()->get_name();
  djqla::Report report;
  try {
    djqla::json cfg_json = djqla::json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw djqla::ParseError("cannot open config '" + config_path + "'");
      try {
        in >> cfg_json;
      } catch (const djqla::json::exception& e) {
        throw djqla::ParseError(std::string("config is not valid JSON: ") + e.what());
      }
    }
    if (dim > 0 || !q_text.empty() || !parity_text.empty()) {
      djqla::json spec = cfg_json.contains("spec") ? cfg_json["spec"] : djqla::json::object();
      if (dim > 0) spec["dim"] = dim;
      if (!q_text.empty()) spec["q"] = q_text;
      if (!parity_text.empty()) spec["parity"] = parse_parity(parity_text);
      if (!spec.contains("dim") && spec.contains("parity")) spec["dim"] = spec["parity"].size();
      cfg_json["spec"] = spec;
    }
    if (!c_text.empty()) cfg_json["c"] = c_text;
    if (app.count("--seed") > 0) cfg_json["seed"] = seed;
    if (d_max > 0) cfg_json["d_max"] = d_max;
    if (sampled) cfg_json["mode"] = "sampled";
    if (symbolic) cfg_json["mode"] = "symbolic";
    auto cfg = djqla::config_from_json(cfg_json, djqla::command_from_string(command_name));
    report = djqla::run(cfg);
  } catch (const djqla::Error& e) {
    report = djqla::Report{command_name, 2, djqla::json{{"error", "input"}, {"message", e.what()}, {"passed", false}}};
  }

  const std::string text = djqla::to_json(report).dump(2);
  std::cout << text << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return 2;
    }
    out << text << "\n";
  }
  if (report.exit_code == 2 && report.body.contains("message")) {
    std::cerr << report.body["message"].get<std::string>() << "\n";
  }
  return report.exit_code;
}
