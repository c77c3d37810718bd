// emtool: run verification suites, print Passi rank tables, list Hall sets.
// Exit status: 0 all checks pass, 1 some check fails, 2 bad arguments or config.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "eigenmonad/suites.hpp"

using namespace eigenmonad;
namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& p, const std::string& s) {
  fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + p.string());
  f << s;
}

int cmd_run(const std::vector<std::string>& names, const Config& cfg, const std::string& out_dir) {
  bool all_ok = true;
  for (auto& name : names) {
    SuiteResult r = suites::run(name, cfg);
    fs::path dir(out_dir);
    write_file(dir / (name + ".json"), r.to_json(cfg.to_json()).dump(2) + "\n");
    if (!r.csv.empty()) write_file(dir / (name + ".csv"), r.csv);
    for (auto& [stem, g] : r.grids) write_file(dir / "grids" / (stem + ".json"), g.dump(2) + "\n");
    std::cout << name << ": " << r.checks.size() << " checks, " << r.failures() << " failed\n";
    for (auto& c : r.checks)
      if (!c.pass) std::cout << "  FAIL " << c.id << ": " << c.computed.dump() << "\n";
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 1;
}

std::vector<int> parse_multidegree(const std::string& s) {
  std::vector<int> d;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');) {
    long v = detail::parse_long("multidegree", detail::trim(tok));
    if (v < 0) throw ConfigError("multidegree entries must be non-negative");
    d.push_back((int)v);
  }
  return d;
}

int cmd_hall(int letters, const std::string& md) {
  std::vector<int> delta = parse_multidegree(md);
  if ((int)delta.size() != letters)
    throw ConfigError("multidegree has " + std::to_string(delta.size()) + " entries, expected " + std::to_string(letters));
  int total = std::accumulate(delta.begin(), delta.end(), 0);
  if (total > 8) throw ConfigError("total degree above 8 is not supported");
  const Field QQ = Field::rationals();
  json trees = json::array();
  for (auto& t : hall_set(delta)) trees.push_back({{"tree", hall_str(t)}, {"expansion", hall_expand(QQ, t).str()}});
  json j;
  j["letters"] = letters;
  j["multidegree"] = delta;
  j["witt_dimension"] = witt_dimension(delta);
  j["count"] = trees.size();
  j["trees"] = trees;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_table(const std::string& kind, int max_n, int max_m, int max_d, const Config& base) {
  if (kind != "gr" && kind != "fr") throw ConfigError("--kind must be gr or fr");
  Config c = base;
  c.max_n = max_n;
  c.max_m = max_m;
  c.max_d = max_d;
  c.magnus_D = std::max(c.magnus_D, max_d);
  validate(c);
  const Field F = c.make_field();
  CatKind k = kind == "gr" ? CatKind::Gr : CatKind::Fr;
  std::cout << "kind,n,m,d,dim_formula,dim_computed,match\n";
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= max_m; ++m)
      for (int d = 0; d <= max_d; ++d) {
        PassiCell cell(F, k, n, m, d);
        long long f = passi_rank_formula(k, n, m, d);
        int r = passi_rank_computed(cell);
        std::cout << kind << ',' << n << ',' << m << ',' << d << ',' << f << ',' << r << ','
                  << (r == f && cell.dim() == f ? "true" : "false") << '\n';
      }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenmonad verification tool"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a verification suite (or 'all')");
  std::string suite, config_path, out_dir = "out", field;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  bool corrupt = false;
  run->add_option("suite", suite, "Suite name")->required();
  run->add_option("--config", config_path, "Config file (key=value lines or JSON)");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--seed", seed, "Random seed");
  run->add_option("--field", field, "0 or Q for the rationals, otherwise a prime");
  run->add_option("--jobs", jobs, "Worker threads");
  run->add_flag("--corrupt", corrupt, "monad-laws: add a deliberately corrupted monad");

  auto* table = app.add_subcommand("table", "Print a Passi rank table as CSV");
  std::string table_what, kind = "gr";
  int tn = 3, tm = 3, td = 3;
  table->add_option("what", table_what, "Table name (passi)")->required();
  table->add_option("--kind", kind, "gr or fr");
  table->add_option("--max-n", tn);
  table->add_option("--max-m", tm);
  table->add_option("--max-d", td);
  table->add_option("--field", field, "0 or Q for the rationals, otherwise a prime");

  auto* hall = app.add_subcommand("hall", "List the Hall set of a multidegree");
  int letters = 0;
  std::string md;
  hall->add_option("--letters", letters)->required();
  hall->add_option("--multidegree", md, "Comma-separated, one entry per letter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    if (seed) set_key(cfg, "seed", (long)*seed);
    if (!field.empty()) set_key(cfg, "field", field_value(field));
    cfg.jobs = jobs;
    cfg.corrupt = corrupt;
    validate(cfg);

    if (*run) {
      std::vector<std::string> names;
      if (suite == "all") names = suites::ids();
      else if (std::find(suites::ids().begin(), suites::ids().end(), suite) != suites::ids().end()) names = {suite};
      else throw ConfigError("unknown suite '" + suite + "'");
      if (corrupt && suite != "monad-laws") throw ConfigError("--corrupt applies to monad-laws only");
      return cmd_run(names, cfg, out_dir);
    }
    if (*table) {
      if (table_what != "passi") throw ConfigError("unknown table '" + table_what + "'");
      return cmd_table(kind, tn, tm, td, cfg);
    }
    return cmd_hall(letters, md);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
