#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "wudcr/error.hpp"
#include "wudcr/gadgets.hpp"
#include "wudcr/graph.hpp"
#include "wudcr/json_io.hpp"
#include "wudcr/logicengine.hpp"
#include "wudcr/placement.hpp"
#include "wudcr/recognizer.hpp"
#include "wudcr/render.hpp"

namespace {

using namespace wudcr;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

struct LoadedTree {
  Tree tree;
  std::vector<NodeId> red;
};

// Edge-list text, or any JSON document with "node_count" and "edges" (gadget
// and engine output).
LoadedTree load_tree(const std::string& path) {
  const std::string text = read_input(path);
  if (!looks_like_json(text)) return {parse_edge_list(text), {}};
  try {
    const auto j = nlohmann::json::parse(text);
    LoadedTree out{Tree::from_edges(j.at("node_count").get<int>(),
                                    j.at("edges").get<std::vector<std::pair<int, int>>>()),
                   {}};
    if (j.contains("red")) out.red = j.at("red").get<std::vector<NodeId>>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("tree JSON: ") + e.what());
  }
}

// A bare placement, or a verdict / engine decision carrying one.
Placement load_placement(const std::string& path) {
  const std::string text = read_input(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("placement JSON: ") + e.what());
  }
  for (const char* key : {"witness", "certificate", "layout"}) {
    if (j.is_object() && j.contains(key)) return placement_from_json(j.at(key).dump());
  }
  return placement_from_json(text);
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kTimeout:
    case ErrorKind::kTooLarge:
    case ErrorKind::kTooManyVariables:
      return kExitResource;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak unit disk contact representations of trees"};
  app.require_subcommand(1);
  int jobs = 1;
  std::uint64_t seed = 0;
  app.add_option("--jobs", jobs, "Worker threads for searches")->check(CLI::Range(1, 256));
  app.add_option("--seed", seed, "Accepted and ignored (all commands are deterministic)");

  std::string input;
  std::string mode_text = "window";
  bool witness = false;
  auto* recognize = app.add_subcommand("recognize", "Decide a caterpillar; prints a verdict JSON");
  recognize->add_option("tree", input, "Edge-list file ('-' for stdin)");
  recognize->add_option("--mode", mode_text, "paper-prefix or window")
      ->check(CLI::IsMember({"paper-prefix", "window"}));
  recognize->add_flag("--witness", witness, "Attach a placement when realizable");

  auto* realize = app.add_subcommand("realize", "Emit a placement JSON for a realizable caterpillar");
  realize->add_option("tree", input, "Edge-list file ('-' for stdin)");
  realize->add_option("--mode", mode_text, "paper-prefix or window")
      ->check(CLI::IsMember({"paper-prefix", "window"}));

  bool all = false;
  std::optional<std::size_t> limit;
  std::optional<std::uint64_t> budget;
  std::vector<NodeId> marked;
  bool use_red = false;
  auto* oracle = app.add_subcommand("oracle", "Exact grid search for placements");
  oracle->add_option("tree", input, "Edge-list or gadget JSON file ('-' for stdin)");
  oracle->add_flag("--all", all, "List every canonical placement");
  oracle->add_option("--limit", limit, "Stop after this many placements");
  oracle->add_option("--budget", budget, "Node-expansion budget (exit 3 when exceeded)");
  oracle->add_option("--marked", marked, "Marked nodes for the distinguishable count");
  oracle->add_flag("--red", use_red, "Use the document's red vertices as the marking");

  auto* gadget = app.add_subcommand("gadget", "Emit a gadget tree with anchors and a reference layout");
  gadget->require_subcommand(1);
  int radius = 3;
  int trunk_length = kFrozenTrunkLength;
  auto* hexagon = gadget->add_subcommand("hexagon", "Rigid hexagon tree");
  hexagon->add_option("--radius", radius, "Radius (>= 3)");
  auto* branching = gadget->add_subcommand("branching", "60 degree branching gadget");
  branching->add_option("--radius", radius, "Hexagon radius");
  branching->add_option("--trunk-length", trunk_length, "Path nodes between junction and trunk-out hexagon");

  auto* reduce = app.add_subcommand("reduce", "Compile a DIMACS NAE3SAT formula into an engine tree");
  reduce->add_option("cnf", input, "DIMACS file ('-' for stdin)");

  auto* nae = app.add_subcommand("nae-solve", "Brute-force NAE3SAT");
  nae->add_option("cnf", input, "DIMACS file ('-' for stdin)");

  auto* engine = app.add_subcommand("engine-decide", "Decide a logic engine; prints a verdict with certificate");
  engine->add_option("input", input, "Engine JSON from 'reduce' or a DIMACS file ('-' for stdin)");

  std::string placement_path;
  RenderStyle style;
  auto* render = app.add_subcommand("render", "SVG of a placement");
  render->add_option("tree", input, "Edge-list or gadget/engine JSON file")->required();
  render->add_option("placement", placement_path, "Placement, verdict or engine decision JSON")->required();
  render->add_option("--scale", style.scale, "Pixels per unit")->check(CLI::PositiveNumber);
  render->add_flag("--legend", style.legend, "Draw a role legend");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*recognize || *realize) {
      const Tree t = load_tree(input).tree;
      const Mode mode = parse_mode(mode_text);
      const Verdict v = decide(t, mode, witness || *realize);
      if (*recognize) {
        std::cout << verdict_to_json(v);
        return v.realizable ? kExitYes : kExitNo;
      }
      if (!v.realizable) {
        std::cerr << "not realizable\n";
        return kExitNo;
      }
      if (!v.witness) throw Error(ErrorKind::kConstructionFailed, "no witness could be constructed");
      std::cout << placement_to_json(*v.witness);
      return kExitYes;
    }
    if (*oracle) {
      const LoadedTree lt = load_tree(input);
      SearchOptions opt;
      opt.limit = limit;
      opt.budget = budget;
      opt.jobs = jobs;
      std::vector<NodeId> marks = use_red ? lt.red : marked;
      opt.marked = marks;
      OracleReport report;
      report.node_count = lt.tree.node_count();
      report.result = embed_search(lt.tree, opt);
      if (!marks.empty()) report.distinguishable = distinguishable_count(report.result.placements, marks);
      report.include_placements = all;
      std::cout << oracle_report_to_json(report);
      return report.result.placements.empty() ? kExitNo : kExitYes;
    }
    if (*gadget) {
      if (*hexagon) {
        std::cout << gadget_to_json(hexagon_gadget(radius));
      } else {
        std::cout << gadget_to_json(branching_gadget({radius, trunk_length}));
      }
      return kExitYes;
    }
    if (*reduce) {
      std::cout << engine_to_json(build_engine_tree(parse_dimacs(read_input(input))));
      return kExitYes;
    }
    if (*nae) {
      const auto a = nae_solve_bruteforce(parse_dimacs(read_input(input)));
      std::cout << nae_result_to_json(a);
      return a ? kExitYes : kExitNo;
    }
    if (*engine) {
      const std::string text = read_input(input);
      EngineTree e = looks_like_json(text) ? engine_from_json(text) : build_engine_tree(parse_dimacs(text));
      const EngineDecision d = decide_engine(e.formula, jobs, e.geometry);
      std::cout << engine_decision_to_json(d);
      return d.realizable ? kExitYes : kExitNo;
    }
    if (*render) {
      const LoadedTree lt = load_tree(input);
      const Placement p = load_placement(placement_path);
      std::optional<std::vector<NodeRole>> roles;
      if (!lt.red.empty()) {
        roles.emplace(static_cast<std::size_t>(lt.tree.node_count()), NodeRole::kPlain);
        for (NodeId v : lt.red) {
          if (v >= 0 && v < lt.tree.node_count()) (*roles)[static_cast<std::size_t>(v)] = NodeRole::kSpine;
        }
      }
      std::cout << render_svg(lt.tree, p, style, roles);
      return kExitYes;
    }
  } catch (const Error& e) {
    std::cerr << "wudcr: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "wudcr: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
