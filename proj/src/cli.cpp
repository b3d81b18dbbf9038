#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wtreelab/errors.hpp"
#include "wtreelab/io.hpp"

namespace wtreelab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GraphDocument load_graph(const std::string& path) {
  return parse_graph(read_file(path), graph_format_from_extension(path));
}

Engine engine_from_string(const std::string& name) {
  if (name == "taylor") return Engine::taylor;
  if (name == "koszul") return Engine::koszul;
  if (name == "both") return Engine::both;
  if (name == "auto") return Engine::automatic;
  throw std::invalid_argument("unknown engine: " + name);
}

std::string command_echo(const std::vector<std::string>& args) {
  std::string out = "wtreelab";
  for (const std::string& a : args) out += " " + a;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact depth, regularity and Betti tables of edge ideals of edge-weighted trees"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  bool as_csv = false;
  Exponent power = 1;
  std::string engine_name = "auto";
  std::string field_name = "32003";

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Classify a weighted tree and its roots");
  analyze_cmd->add_option("file", file, "graph file (.json or edge list)")->required();
  analyze_cmd->add_flag("--json", as_json, "machine-readable output");

  std::string ideal_format = "plain";
  CLI::App* ideal_cmd = app.add_subcommand("ideal", "Print the edge ideal or one of its powers");
  ideal_cmd->add_option("file", file)->required();
  ideal_cmd->add_option("--power", power, "power t >= 1")->check(CLI::PositiveNumber);
  ideal_cmd->add_option("--format", ideal_format, "plain | json | m2")
      ->check(CLI::IsMember({"plain", "json", "m2"}));

  CLI::App* betti_cmd = app.add_subcommand("betti", "Multigraded Betti table, depth and regularity");
  betti_cmd->add_option("file", file)->required();
  betti_cmd->add_option("--power", power, "power t >= 1")->check(CLI::PositiveNumber);
  betti_cmd->add_option("--engine", engine_name, "taylor | koszul | both | auto")
      ->check(CLI::IsMember({"taylor", "koszul", "both", "auto"}));
  betti_cmd->add_option("--field", field_name, "rational or a prime");
  betti_cmd->add_flag("--json", as_json);
  betti_cmd->add_flag("--csv", as_csv);

  bool random = false;
  int n_max = 6;
  Weight max_weight = 3;
  int count = 20;
  std::uint64_t seed = 1;
  int t_max = 3;
  std::string suite;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check the theorem suite on a file or a random campaign");
  verify_cmd->add_option("file", file, "fixed instance (omit with --random)");
  verify_cmd->add_flag("--random", random, "seeded random campaign instead of a file");
  verify_cmd->add_option("--n", n_max, "max vertex count (campaign draws n in [2, N])")->check(CLI::Range(2, 64));
  verify_cmd->add_option("--max-weight", max_weight)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--count", count)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--tmax", t_max, "power horizon for per-power checks")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--suite", suite, "all | depth | regularity | colon | taylor | structure")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_flag("--json", as_json);

  CLI::App* export_cmd = app.add_subcommand("export-m2", "Emit a Macaulay2 cross-check script");
  export_cmd->add_option("file", file)->required();
  export_cmd->add_option("--power", power, "power t >= 1")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    Report report;
    report.command = command_echo(args);

    if (analyze_cmd->parsed()) {
      GraphDocument doc = load_graph(file);
      WeightedTree tree = doc.to_tree();
      report.graph = doc;
      report.analysis = analyze(tree);
      out << render_report(report, as_json ? RenderMode::json : RenderMode::plain);
      return kExitOk;
    }

    if (ideal_cmd->parsed()) {
      GraphDocument doc = load_graph(file);
      WeightedTree tree = doc.to_tree();
      if (ideal_format == "m2") {
        out << export_macaulay2(tree, power);
        return kExitOk;
      }
      MonomialIdeal ideal = edge_ideal(tree).power(power);
      if (ideal_format == "json") {
        out << "{\n  \"ring_dim\": " << ideal.ring_dim() << ",\n  \"unit\": "
            << (ideal.is_unit() ? "true" : "false") << ",\n  \"generators\": " << ideal.str_exponents()
            << "\n}\n";
      } else {
        out << ideal.str(tree.names()) << "\n";
      }
      return kExitOk;
    }

    if (betti_cmd->parsed()) {
      GraphDocument doc = load_graph(file);
      WeightedTree tree = doc.to_tree();
      FieldSpec field = field_from_string(field_name);
      MonomialIdeal ideal = edge_ideal(tree).power(power);
      BettiBlock block;
      block.engine = engine_name;
      block.field = field.str();
      block.power = power;
      block.table = betti(ideal, field, engine_from_string(engine_name));
      report.graph = doc;
      report.analysis = analyze(tree);
      report.betti = std::move(block);
      RenderMode mode = as_json ? RenderMode::json : (as_csv ? RenderMode::csv : RenderMode::plain);
      out << render_report(report, mode);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      FieldSpec field = FieldSpec::default_field();
      Campaign campaign;
      if (random) {
        CampaignParams params;
        params.n_min = 2;
        params.n_max = n_max;
        params.max_weight = max_weight;
        params.count = count;
        params.seed = seed;
        params.t_max = t_max;
        campaign = run_campaign(suite, params, field);
      } else {
        if (file.empty()) throw std::invalid_argument("verify needs a file or --random");
        GraphDocument doc = load_graph(file);
        report.graph = doc;
        campaign = run_suite_on(suite, doc.to_tree(), field, t_max);
      }
      report.campaign = campaign;
      out << render_report(report, as_json ? RenderMode::json : RenderMode::plain);
      return campaign.counterexamples > 0 ? kExitCounterexample : kExitOk;
    }

    if (export_cmd->parsed()) {
      GraphDocument doc = load_graph(file);
      out << export_macaulay2(doc.to_tree(), power);
      return kExitOk;
    }
  } catch (const ResourceError& e) {
    err << "resource cap exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const EngineMismatchError& e) {
    err << "engine cross-check failed: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace wtreelab
