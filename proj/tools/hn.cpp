// hn: command-line front end for the H(n) group and graph library.
//
// Exit codes: 0 ok, 1 verification failed, 2 usage error, 3 runtime error
// (cap exceeded, parse error, I/O).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hn/autsearch.hpp"
#include "hn/cayley.hpp"
#include "hn/error.hpp"
#include "hn/graph.hpp"
#include "hn/group.hpp"
#include "hn/hall.hpp"
#include "hn/symmetry.hpp"
#include "hn/verify.hpp"

namespace {

using hn::GroupContext;
using json = nlohmann::ordered_json;

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::string to_hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

// Power of two as a decimal string when it fits, else "2^e".
json power_of_two(std::int64_t e) {
  if (e < 64) return std::uint64_t{1} << e;
  return "2^" + std::to_string(e);
}

// --- info -------------------------------------------------------------------

int cmd_info(int n, bool as_json) {
  const GroupContext ctx(n);
  const auto dims = hn::hall::dimension_table(n);
  const std::int64_t order_exp = ctx.total_bits();
  const std::int64_t derived_exp = order_exp - 2 * n;
  json j;
  j["n"] = n;
  j["order_exponent"] = order_exp;
  j["order"] = power_of_two(order_exp);
  j["derived_exponent"] = derived_exp;
  j["derived_order"] = power_of_two(derived_exp);
  j["dim_w"] = ctx.dim_w();
  j["dim_h3"] = ctx.dim_t();
  j["sigma_vertices"] = power_of_two(order_exp - n + 1);
  j["sigma_edges"] = power_of_two(order_exp);
  j["sigma_valency"] = std::uint64_t{1} << n;
  j["gamma_valency"] = 2 * ((std::uint64_t{1} << n) - 1);
  j["dimension_table"] = {{"r", dims.r}, {"m_FK", dims.m_fk}, {"u", dims.u}, {"v", dims.v},
                          {"order_exp", dims.order_exp}};
  if (as_json) {
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  auto str = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  std::cout << "n                " << n << '\n'
            << "|H|              " << str(j["order"]) << "  (2^" << order_exp << ")\n"
            << "|H'|             " << str(j["derived_order"]) << "  (2^" << derived_exp << ")\n"
            << "dim W, dim H3    " << ctx.dim_w() << ", " << ctx.dim_t() << '\n'
            << "|V(Sigma)|       " << str(j["sigma_vertices"]) << '\n'
            << "|E(Sigma)|       " << str(j["sigma_edges"]) << '\n'
            << "valency Sigma    " << str(j["sigma_valency"]) << '\n'
            << "valency Gamma    " << str(j["gamma_valency"]) << '\n'
            << "r m_FK u v       " << dims.r << ' ' << dims.m_fk << ' ' << dims.u << ' ' << dims.v << '\n';
  return 0;
}

// --- graph ------------------------------------------------------------------

struct GraphOptions {
  int n = 2;
  std::string kind = "sigma";
  std::string format = "edgelist";
  std::string out;
  std::string labels;
  bool force = false;
};

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw hn::Error("cannot open '" + path + "' for writing");
  return file;
}

int cmd_graph(const GraphOptions& o) {
  const GroupContext ctx(o.n);
  const std::uint64_t cap = o.force ? std::numeric_limits<std::uint64_t>::max() : hn::kDefaultVertexCap;
  hn::GraphData g;
  hn::VertexLabeler labeler;
  std::optional<hn::SigmaGraph> sigma;
  std::optional<hn::DerivedQuotient> quotient;

  if (o.kind == "gamma") {
    g = hn::build_gamma(ctx, cap).graph;
    labeler = [&](hn::VertexId v) { return std::pair<std::string, std::string>{"H", ctx.format(ctx.unpack(v))}; };
  } else if (o.kind == "sigma") {
    sigma.emplace(hn::build_sigma(ctx, cap));
    g = sigma->graph();
    labeler = [&](hn::VertexId v) {
      return std::pair<std::string, std::string>{hn::side_name(sigma->side_of(v)), sigma->label(v)};
    };
  } else if (o.kind == "quotient") {
    sigma.emplace(hn::build_sigma(ctx, cap));
    quotient.emplace(hn::quotient_by_derived(*sigma));
    g = quotient->graph;
    const std::uint64_t classes = std::uint64_t{1} << o.n;
    labeler = [classes](hn::VertexId v) {
      return v < classes ? std::pair<std::string, std::string>{"X", "b:" + to_hex(v)}
                         : std::pair<std::string, std::string>{"Y", "a:" + to_hex(v - classes)};
    };
  } else if (o.kind == "linegraph") {
    sigma.emplace(hn::build_sigma(ctx, cap));
    if (sigma->graph().edge_count() > cap)
      throw hn::CapExceeded("line graph would have " + std::to_string(sigma->graph().edge_count()) +
                            " vertices, cap is " + std::to_string(cap) + " (use --force to override)");
    g = hn::line_graph(sigma->graph());
    labeler = [&](hn::VertexId e) {
      return std::pair<std::string, std::string>{"E", ctx.format(ctx.unpack(sigma->element_key_of_edge(e)))};
    };
  }

  std::ofstream file;
  std::ostream& os = open_out(o.out, file);
  if (o.format == "dot")
    hn::write_dot(os, g);
  else
    hn::write_edgelist(os, g, {o.n, o.kind});
  if (!os) throw hn::Error("write failed");

  if (!o.labels.empty()) {
    std::ofstream lf;
    std::ostream& ls = open_out(o.labels, lf);
    hn::write_labels(ls, g, labeler);
    if (!ls) throw hn::Error("write failed");
  }
  return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyCmd {
  int n = 2;
  std::string suite = "all";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  bool timings = false;
  bool json_out = false;
  bool no_aut = false;
  bool force = false;
};

int cmd_verify(const VerifyCmd& o) {
  hn::Suite suite = hn::Suite::kAll;
  if (o.suite == "core") suite = hn::Suite::kCore;
  if (o.suite == "graphs") suite = hn::Suite::kGraphs;
  if (o.suite == "symmetry") suite = hn::Suite::kSymmetry;
  hn::VerifyOptions opt;
  opt.samples = o.samples;
  opt.seed = o.seed;
  opt.run_aut_search = !o.no_aut;
  if (o.force) opt.vertex_cap = std::numeric_limits<std::uint64_t>::max();
  const auto report = hn::run_verification(o.n, suite, opt);
  if (o.json_out) {
    std::cout << report.to_json(o.timings).dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      std::cout << c.name << ": " << hn::status_name(c.status);
      if (o.timings) std::cout << " (" << c.runtime_ms << " ms)";
      if (c.status != hn::CheckStatus::kPass) {
        std::cout << "\n    expected " << c.expected.dump() << "\n    actual   " << c.actual.dump();
      }
      std::cout << '\n';
    }
    std::cout << "overall: " << (report.passed() ? "pass" : "fail") << '\n';
  }
  return report.passed() ? 0 : kExitFailed;
}

// --- diagram ----------------------------------------------------------------

int cmd_diagram(int n, const std::string& root_name, bool refine, bool as_json, bool force) {
  const GroupContext ctx(n);
  const auto sigma = hn::build_sigma(ctx, force ? std::numeric_limits<std::uint64_t>::max() : hn::kDefaultVertexCap);
  const auto& g = sigma.graph();
  const hn::VertexId root = root_name == "X" ? sigma.vertex_x() : sigma.vertex_y();
  const auto d = hn::distance_layers(g, root);
  std::optional<hn::EquitablePartition> p;
  std::vector<std::vector<hn::DiagramCell>> cells;
  if (refine) {
    p.emplace(hn::equitable_refinement(g, hn::distance_seed(g, root)));
    cells = hn::diagram_cells(g, root, *p);
  }
  if (as_json) {
    json j;
    j["n"] = n;
    j["root"] = root_name;
    j["layers"] = d.layers;
    j["unreachable"] = d.unreachable;
    if (refine) {
      json jc = json::array();
      for (const auto& layer : cells)
        for (const auto& c : layer) {
          json edges = json::array();
          for (const auto& [t, k] : c.edges) edges.push_back({t, k});
          jc.push_back({{"cell", c.cell}, {"distance", c.distance}, {"size", c.size}, {"edges", edges}});
        }
      j["cells"] = jc;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "root " << root_name << ", " << g.vertex_count() << " vertices\nlayers";
  for (auto s : d.layers) std::cout << ' ' << s;
  std::cout << '\n';
  if (d.unreachable) std::cout << "unreachable " << d.unreachable << '\n';
  if (refine) std::cout << hn::format_diagram(cells);
  return 0;
}

// --- element ----------------------------------------------------------------

int cmd_element(int n, const std::string& op, const std::vector<std::string>& operands) {
  const GroupContext ctx(n);
  const std::size_t want = op == "inv" ? 1 : 2;
  if (operands.size() != want)
    throw CLI::ValidationError("element " + op, "expects " + std::to_string(want) + " operand(s)");
  const hn::Element g = ctx.parse(operands[0]);
  hn::Element r;
  if (op == "inv") {
    r = ctx.inv(g);
  } else {
    const hn::Element h = ctx.parse(operands[1]);
    r = op == "mul" ? ctx.mul(g, h) : ctx.comm(g, h);
  }
  std::cout << ctx.format(r) << '\n';
  return 0;
}

// --- hall -------------------------------------------------------------------

int cmd_hall(int r, int weight, bool as_json) {
  const auto list = hn::hall::enumerate_basic_commutators(r, weight);
  if (as_json) {
    json j;
    j["r"] = r;
    j["weight"] = weight;
    j["count"] = list.size();
    j["commutators"] = json::array();
    for (const auto& c : list) j["commutators"].push_back(c.to_string());
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  for (const auto& c : list) std::cout << c.to_string() << '\n';
  return 0;
}

// --- aut --------------------------------------------------------------------

int cmd_aut(int n, const std::string& fix, bool as_json) {
  const GroupContext ctx(n);
  const auto sigma = hn::build_sigma(ctx, hn::kDefaultAutSearchCap);
  const auto& g = sigma.graph();
  std::vector<std::uint32_t> seed(g.vertex_count(), 0);
  if (fix == "X") seed = hn::point_seed(g, sigma.vertex_x());
  if (fix == "Y") seed = hn::point_seed(g, sigma.vertex_y());
  const auto aut = hn::automorphism_group(g, seed);
  const auto orb = hn::orbits(aut.generators, g.vertex_count());
  std::vector<std::size_t> orbit_sizes;
  for (const auto& o : orb) orbit_sizes.push_back(o.size());
  if (as_json) {
    json j;
    j["n"] = n;
    j["fixed"] = fix;
    j["order"] = aut.order;
    j["generators"] = aut.generators.size();
    j["level_orbit_lengths"] = aut.orbit_lengths;
    j["vertex_orbits"] = orbit_sizes;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "order " << aut.order << "\ngenerators " << aut.generators.size() << "\nlevel orbit lengths";
  for (auto l : aut.orbit_lengths) std::cout << ' ' << l;
  std::cout << "\nvertex orbits";
  for (auto s : orbit_sizes) std::cout << ' ' << s;
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hn: mixed dihedral 2-groups H(n) and their graphs"};
  app.require_subcommand(1);

  auto n_option = [](CLI::App* sub, int& n) {
    sub->add_option("--n", n, "dimension n (>= 2)")->check(CLI::Range(2, hn::kMaxN));
  };

  int info_n = 2;
  bool info_json = false;
  auto* info = app.add_subcommand("info", "group and graph sizes for H(n)");
  n_option(info, info_n);
  info->add_flag("--json", info_json, "JSON output");

  GraphOptions graph_opt;
  auto* graph = app.add_subcommand("graph", "build and export a graph");
  n_option(graph, graph_opt.n);
  graph->add_option("--kind", graph_opt.kind)->check(CLI::IsMember({"gamma", "sigma", "quotient", "linegraph"}));
  graph->add_option("--format", graph_opt.format)->check(CLI::IsMember({"edgelist", "dot"}));
  graph->add_option("--out", graph_opt.out, "output path (default stdout)");
  graph->add_option("--labels", graph_opt.labels, "write a vertex label table to this path");
  graph->add_flag("--force", graph_opt.force, "ignore the vertex cap");

  VerifyCmd verify_opt;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  n_option(verify, verify_opt.n);
  verify->add_option("--suite", verify_opt.suite)->check(CLI::IsMember({"core", "graphs", "symmetry", "all"}));
  verify->add_option("--samples", verify_opt.samples, "random samples per identity check");
  verify->add_option("--seed", verify_opt.seed, "RNG seed");
  verify->add_flag("--timings", verify_opt.timings, "report per-check runtimes");
  verify->add_flag("--json", verify_opt.json_out, "JSON report");
  verify->add_flag("--no-aut", verify_opt.no_aut, "skip the automorphism search");
  verify->add_flag("--force", verify_opt.force, "ignore the vertex cap");

  int diagram_n = 2;
  std::string diagram_root = "X";
  bool diagram_refine = false, diagram_json = false, diagram_force = false;
  auto* diagram = app.add_subcommand("diagram", "distance diagram of Sigma");
  n_option(diagram, diagram_n);
  diagram->add_option("--root", diagram_root)->check(CLI::IsMember({"X", "Y"}));
  diagram->add_flag("--refine", diagram_refine, "equitable refinement of the distance partition");
  diagram->add_flag("--json", diagram_json, "JSON output");
  diagram->add_flag("--force", diagram_force, "ignore the vertex cap");

  int element_n = 2;
  std::string element_op;
  std::vector<std::string> element_args;
  auto* element = app.add_subcommand("element", "group arithmetic on encoded elements");
  n_option(element, element_n);
  element->add_option("op", element_op)->required()->check(CLI::IsMember({"mul", "inv", "comm"}));
  element->add_option("operands", element_args, "elements as a:<hex>;b:<hex>;w:<hex>;t:<hex>");

  int hall_r = 4, hall_weight = 2;
  bool hall_json = false;
  auto* hall = app.add_subcommand("hall", "list basic commutators");
  hall->add_option("--r", hall_r, "alphabet size")->check(CLI::PositiveNumber);
  hall->add_option("--weight", hall_weight, "weight 1..3");
  hall->add_flag("--json", hall_json, "JSON output");

  int aut_n = 2;
  std::string aut_fix = "none";
  bool aut_json = false;
  auto* aut = app.add_subcommand("aut", "automorphism group of Sigma (small n)");
  n_option(aut, aut_n);
  aut->add_option("--fix", aut_fix, "fix vertex X or Y")->check(CLI::IsMember({"none", "X", "Y"}));
  aut->add_flag("--json", aut_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*info) return cmd_info(info_n, info_json);
    if (*graph) return cmd_graph(graph_opt);
    if (*verify) return cmd_verify(verify_opt);
    if (*diagram) return cmd_diagram(diagram_n, diagram_root, diagram_refine, diagram_json, diagram_force);
    if (*element) return cmd_element(element_n, element_op, element_args);
    if (*hall) return cmd_hall(hall_r, hall_weight, hall_json);
    if (*aut) return cmd_aut(aut_n, aut_fix, aut_json);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hn: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
