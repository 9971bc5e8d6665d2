// symj: exhaustive anticommutativity sweeps over group rings with oriented involutions.
//
//   symj verify   --max-order 8 --rings z4,z8 --out report.json [--format json|csv] [--jobs K]
//   symj classify ...   (adds structure and gp14 tags)
//   symj lemmas   ...   (adds the lemma suite for every anticommuting instance)
//   symj witness  --group D4 --ring z4 --involution inversion --orientation 0
//
// Exit codes: 0 clean, 1 usage or IO error, 2 mismatch between the direct check and the
// classification (or a failing lemma).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "symj/catalog.hpp"
#include "symj/io.hpp"
#include "symj/sweep.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    out.push_back(std::stoi(item, &used));
    if (used != item.size()) throw std::invalid_argument("not an integer list: " + s);
  }
  return out;
}

bool is_index(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

struct WitnessArgs {
  std::string group, ring, involution, orientation, out;
};

int run_witness(const WitnessArgs& a) {
  using namespace symj;
  GroupPtr g = catalog_group(a.group);
  if (!g) {
    if (!std::filesystem::exists(a.group)) {
      std::cerr << "error: unknown catalog group '" << a.group << "' (and no such file)\n";
      return 1;
    }
    g = std::make_shared<const Group>(load_group_file(a.group));
  }
  RingPtr r = ring_from_token(a.ring);

  std::vector<GroupInvolution> taus = enumerate_involutions(g);
  std::size_t tau_index = 0;
  std::optional<GroupInvolution> tau;
  if (a.involution == "id" || a.involution == "identity") {
    std::vector<Elem> id(g->order());
    for (Elem x = 0; x < g->order(); ++x) id[x] = x;
    tau = GroupInvolution(g, id);
  } else if (a.involution == "inv" || a.involution == "inversion") {
    tau = GroupInvolution::inversion(g);
  } else if (is_index(a.involution)) {
    tau_index = std::stoul(a.involution);
    if (tau_index >= taus.size()) throw std::invalid_argument("involution index out of range");
    tau = taus[tau_index];
  } else {
    tau = GroupInvolution(g, parse_int_list(a.involution));
  }
  for (std::size_t i = 0; i < taus.size(); ++i)
    if (taus[i] == *tau) tau_index = i;

  std::vector<Orientation> sigmas = enumerate_orientations(g, r, true);
  std::size_t sigma_index = 0;
  std::optional<Orientation> sigma;
  if (is_index(a.orientation)) {
    std::vector<Orientation> nontrivial = enumerate_orientations(g, r, false);
    sigma_index = std::stoul(a.orientation);
    if (sigma_index >= nontrivial.size()) throw std::invalid_argument("orientation index out of range");
    sigma = nontrivial[sigma_index];
  } else {
    sigma = Orientation(g, r, parse_int_list(a.orientation));
  }
  if (!is_compatible(*tau, *sigma)) {
    std::cerr << "error: involution and orientation are not compatible (x x* not in ker sigma)\n";
    return 1;
  }
  const Instance inst{g, r, a.ring, tau_index, sigma_index, *tau, *sigma};
  std::cout << explain_instance(inst);
  if (!a.out.empty()) {
    std::ofstream out(a.out);
    if (!out) throw std::runtime_error("cannot write " + a.out);
    out << record_to_json(evaluate_instance(inst, Mode::Lemmas), Mode::Lemmas).dump(1) << "\n";
  }
  const InstanceRecord rec = evaluate_instance(inst, Mode::Classify);
  return rec.agreement ? 0 : 2;
}

void add_sweep_options(CLI::App* cmd, symj::SweepConfig& cfg, std::string& rings, std::string& format) {
  cmd->add_option("--max-order", cfg.max_order, "largest group order to sweep (catalog covers <= 16)");
  cmd->add_option("--rings", rings, "comma-separated ring tokens (z4, z8, z4xz4, z4xz2, dual-z4, file.json)");
  cmd->add_option("--out", cfg.out_path, "report path ('-' for stdout)");
  cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--jobs", cfg.jobs, "OpenMP threads; 1 runs the serial path");
  cmd->add_option("--group-file", cfg.group_files, "additional Cayley-table JSON files");
  cmd->add_flag("--no-catalog", [&cfg](std::int64_t) { cfg.use_catalog = false; }, "skip the builtin catalog");
  cmd->add_flag("--include-trivial-sigma", cfg.include_trivial_sigma, "also sweep the trivial orientation");
  cmd->add_flag("--include-trivial-group", cfg.include_trivial_group, "include C1 in the catalog");
  cmd->add_flag("--allow-large", cfg.allow_large, "raise the order cap to 32 for group files");
  cmd->add_flag("--timing", cfg.timing, "record elapsed time in the report summary");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anticommutativity of symmetric elements under oriented involutions"};
  app.require_subcommand(1);

  symj::SweepConfig cfg;
  std::string rings = "z4", format = "json";
  CLI::App* verify = app.add_subcommand("verify", "direct check vs classification on every instance");
  CLI::App* classify = app.add_subcommand("classify", "verify plus structure and gp14 tags");
  CLI::App* lemmas = app.add_subcommand("lemmas", "verify plus the lemma suite on anticommuting instances");
  for (CLI::App* cmd : {verify, classify, lemmas}) add_sweep_options(cmd, cfg, rings, format);

  WitnessArgs wa;
  CLI::App* witness = app.add_subcommand("witness", "explain a single instance");
  witness->add_option("--group", wa.group, "catalog label or Cayley-table file")->required();
  witness->add_option("--ring", wa.ring, "ring token")->required();
  witness->add_option("--involution", wa.involution, "index, image list, 'id' or 'inversion'")->required();
  witness->add_option("--orientation", wa.orientation, "index among nontrivial orientations, or value list")
      ->required();
  witness->add_option("--out", wa.out, "also write the instance record as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (witness->parsed()) return run_witness(wa);
    cfg.mode = classify->parsed() ? symj::Mode::Classify
               : lemmas->parsed() ? symj::Mode::Lemmas
                                  : symj::Mode::Verify;
    cfg.format = format == "csv" ? symj::Format::Csv : symj::Format::Json;
    cfg.rings.clear();
    std::stringstream ss(rings);
    for (std::string tok; std::getline(ss, tok, ',');)
      if (!tok.empty()) cfg.rings.push_back(tok);
    return symj::run_sweep(cfg, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
