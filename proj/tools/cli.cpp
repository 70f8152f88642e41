#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "tdlc/coxeter.hpp"
#include "tdlc/davis.hpp"
#include "tdlc/error.hpp"
#include "tdlc/euler.hpp"
#include "tdlc/graph_of_groups.hpp"
#include "tdlc/io.hpp"
#include "tdlc/serre_graph.hpp"
#include "tdlc/simplicial.hpp"

namespace tdlc::cli {

using nlohmann::json;

namespace {

void render_table_value(std::ostream& os, const std::string& key, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, x] : v.items()) render_table_value(os, k, x, indent + 2);
  } else if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); })) {
    os << pad << key << ":\n";
    for (const auto& x : v) os << pad << "  " << x.dump() << "\n";
  } else if (v.is_string()) {
    os << pad << key << ": " << v.get<std::string>() << "\n";
  } else {
    os << pad << key << ": " << v.dump() << "\n";
  }
}

void render_davis_table(std::ostream& os, const json& report) {
  os << "cd: " << report.at("cd").dump() << "\n";
  os << "duality: " << report.at("duality").dump() << "\n";
  const auto& table = report.at("table");
  if (table.empty()) return;
  std::size_t degrees = 0;
  for (const auto& e : table) degrees = std::max(degrees, e.at("dims").size());
  os << std::left << std::setw(14) << "T";
  for (std::size_t k = 0; k < degrees; ++k) os << std::setw(6) << ("H^" + std::to_string(k));
  os << "\n";
  for (const auto& e : table) {
    std::string t = "{";
    for (std::size_t i = 0; i < e.at("T").size(); ++i) t += (i ? "," : "") + e.at("T")[i].dump();
    t += "}";
    os << std::setw(14) << t;
    for (const auto& d : e.at("dims")) os << std::setw(6) << d.dump();
    os << "\n";
  }
}

void emit(std::ostream& out, const std::string& format, const std::string& command, const json& report) {
  if (format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  if (command == "davis") {
    render_davis_table(out, report);
    return;
  }
  for (const auto& [k, v] : report.items()) render_table_value(out, k, v, 0);
}

json cmd_homology(const std::string& path) {
  const auto k = io::parse_complex(io::load_file(path));
  return {{"dim", k.dim()}, {"homology", homology(k)}};
}

json cmd_cohomology_c(const std::string& path) {
  const auto k = io::parse_complex(io::load_file(path));
  return {{"dim", k.dim()}, {"compact_cohomology", cohomology_compact(k)}};
}

json cmd_relative(const std::string& path) {
  const json j = io::load_file(path);
  if (!j.contains("complex") || !j.contains("subcomplex"))
    throw Error(ErrorCode::InvalidInput, "relative input needs 'complex' and 'subcomplex'");
  const auto k = io::parse_complex(j.at("complex"));
  const auto l = io::parse_complex(j.at("subcomplex"));
  return {{"relative_cohomology", relative_cohomology(k, l)}};
}

json cmd_graph(const std::string& path) {
  const auto g = io::parse_graph(io::load_file(path));
  json r = graph_invariants(g);
  r["vertices"] = g.num_vertices();
  r["geometric_edges"] = g.num_geometric_edges();
  r["combinatorial"] = g.is_combinatorial();
  return r;
}

json cmd_rough_cayley(const std::string& path) {
  const json j = io::load_file(path);
  const FiniteGroup group = io::parse_group(j.at("group"));
  std::vector<FiniteGroup::Element> o;
  if (j.contains("subgroup"))
    for (const auto& x : j.at("subgroup")) o.push_back(io::parse_element(group, x));
  std::vector<GroupElement> gens;
  for (const auto& x : j.at("generators")) gens.push_back({io::parse_element(group, x)});
  const FiniteGroupOracle oracle(group, o);
  const std::size_t radius = j.contains("radius") ? j.at("radius").get<std::size_t>() : group.order();
  const auto ball = rough_cayley_ball(oracle, gens, radius);
  std::size_t max_degree = 0;
  for (std::size_t v = 0; v < ball.graph.num_vertices(); ++v)
    max_degree = std::max(max_degree, ball.graph.star(v).size());
  const auto witness = connectivity_equals_generation(oracle, gens);
  return {{"group_order", group.order()},
          {"subgroup_order", oracle.subgroup_elements().size()},
          {"radius", radius},
          {"ball_vertices", ball.graph.num_vertices()},
          {"ball_edges", ball.graph.num_geometric_edges()},
          {"max_degree", max_degree},
          {"graph_connected", witness.graph_connected},
          {"generates", witness.generates}};
}

struct GogFlags {
  bool chi = false;
  bool unimodular = false;
  std::optional<std::size_t> ball;
  std::string cohomology;
};

json cmd_gog(const std::string& path, const GogFlags& f) {
  const GraphOfGroups g = io::parse_graph_of_groups(io::load_file(path));
  json r;
  r["vertices"] = g.base().num_vertices();
  r["geometric_edges"] = g.base().num_geometric_edges();
  r["indices"] = validate(g).index;
  if (f.unimodular) r["unimodular"] = unimodularity_check(g);
  if (f.chi) r["chi"] = euler_characteristic(g);
  if (f.ball) {
    const auto ball = bass_serre_ball(g, *f.ball);
    std::vector<std::size_t> degrees;
    for (std::size_t v = 0; v < ball.graph.num_vertices(); ++v) degrees.push_back(ball.graph.star(v).size());
    r["ball"] = {{"radius", *f.ball},
                 {"vertices", ball.graph.num_vertices()},
                 {"is_tree", graph_invariants(ball.graph).is_tree},
                 {"degrees", degrees}};
  }
  if (!f.cohomology.empty()) {
    const Representation rho = io::parse_representation(g, io::load_file(f.cohomology));
    r["cohomology"] = tree_action_cohomology(g, rho);
  }
  return r;
}

struct CoxeterFlags {
  bool poincare = false;
  bool exponents = false;
  std::optional<std::size_t> bott;
  std::string altsum;
};

json poly_json(const IntPolynomial& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.get_str());
  return {{"coefficients", c}, {"rendered", p.to_string()}};
}

json cmd_coxeter(const std::string& path, const CoxeterFlags& f) {
  const io::CoxeterInput in = io::parse_coxeter_input(io::load_file(path));
  json r;
  const CoxeterSystem& c = *in.coxeter;
  std::vector<std::size_t> all(c.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto types = classify(c, all);
  r["finite"] = types.has_value();
  if (types) {
    json names = json::array();
    for (const auto& t : *types) names.push_back(t.name());
    r["types"] = names;
  }
  std::optional<IntPolynomial> p;
  if (f.poincare || f.exponents) {
    p = in.cartan ? poincare_poly(*in.cartan) : poincare_from_classification(c);
    if (f.poincare) r["poincare"] = poly_json(*p);
    if (f.exponents) r["exponents"] = exponents(*p);
  }
  if (f.bott || !f.altsum.empty()) {
    if (!in.affine) throw Error(ErrorCode::InvalidInput, "--bott and --altsum need an affine diagram");
    if (f.bott) {
      r["bott"] = {{"degree", *f.bott}, {"holds", bott_check(in.affine->finite_part(), in.affine->affine, *f.bott)}};
    }
    if (!f.altsum.empty()) {
      const Rational q = io::parse_rational(json(f.altsum));
      const AlternatingSum s = alternating_sum(*in.affine, q);
      r["altsum"] = {{"q", q.get_str()}, {"lhs", s.lhs.get_str()}, {"rhs", s.rhs.get_str()}, {"holds", s.holds()}};
    }
  }
  return r;
}

json cmd_davis(const std::string& path, const DavisOptions& opt) {
  const io::CoxeterInput in = io::parse_coxeter_input(io::load_file(path));
  return davis_verdict(*in.coxeter, opt);
}

json cmd_chevalley(const std::string& type, long q, bool via_parahorics) {
  const CartanMatrix a = CartanMatrix::preset(type);
  const HaarValue chi = chevalley_chi(a, q);
  json r{{"type", type}, {"q", q}, {"chi", chi}};
  if (via_parahorics) {
    const HaarValue sum = chi_via_parahoric_sum(AffineDiagram::preset("affine " + type), q);
    r["via_parahorics"] = sum;
    r["agree"] = sum == chi;
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of graphs of groups, Coxeter systems and simplicial complexes", "tdlc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));

  std::string input;
  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Input JSON file")->required()->check(CLI::ExistingFile);
    return sub;
  };

  auto* homology_cmd = with_input(app.add_subcommand("homology", "Rational homology of a finite complex"));
  auto* cohom_cmd = with_input(app.add_subcommand("cohomology-c", "Compactly supported cohomology"));
  auto* relative_cmd = with_input(app.add_subcommand("relative", "Relative cohomology H^*(K, L)"));
  auto* graph_cmd = with_input(app.add_subcommand("graph", "Serre graph invariants"));
  bool dot = false;
  graph_cmd->add_flag("--dot", dot, "Print the graph in DOT format instead");
  auto* rough_cmd = with_input(app.add_subcommand("rough-cayley", "Rough Cayley graph of (G, S, O)"));

  auto* gog_cmd = with_input(app.add_subcommand("gog", "Finite graph of finite groups"));
  GogFlags gog;
  std::size_t ball_radius = 0;
  gog_cmd->add_flag("--chi", gog.chi, "Euler characteristic");
  gog_cmd->add_flag("--unimodular", gog.unimodular, "Unimodularity check");
  auto* ball_opt = gog_cmd->add_option("--ball", ball_radius, "Bass-Serre tree ball of radius R");
  gog_cmd->add_option("--cohomology", gog.cohomology, "Representation JSON for tree-action cohomology")
      ->check(CLI::ExistingFile);

  auto* cox_cmd = with_input(app.add_subcommand("coxeter", "Coxeter and Weyl group data"));
  CoxeterFlags cox;
  std::size_t bott_degree = 0;
  cox_cmd->add_flag("--poincare", cox.poincare, "Poincare polynomial");
  cox_cmd->add_flag("--exponents", cox.exponents, "Exponents");
  auto* bott_opt = cox_cmd->add_option("--bott", bott_degree, "Check the affine series to degree N");
  cox_cmd->add_option("--altsum", cox.altsum, "Check the parahoric alternating sum at q");

  auto* davis_cmd = with_input(app.add_subcommand("davis", "Davis chamber table and duality verdict"));
  DavisOptions davis;
  davis_cmd->add_flag("--strict-paper-T", davis.skip_empty_t, "Leave out T = empty set");
  davis_cmd->add_option("--jobs", davis.jobs, "Worker threads for the per-T table")->check(CLI::PositiveNumber);

  auto* chev_cmd = app.add_subcommand("chevalley", "Euler characteristic of a Chevalley group");
  std::string type;
  long q = 0;
  bool via = false;
  chev_cmd->add_option("--type", type, "Finite Cartan type, e.g. A2")->required();
  chev_cmd->add_option("--q", q, "Residue field size")->required();
  chev_cmd->add_flag("--via-parahorics", via, "Also evaluate the parahoric sum");

  // CLI11 consumes the argument vector from the back
  std::vector<std::string> rest(args.rbegin(), args.rend());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    json report;
    std::string command;
    if (*homology_cmd) command = "homology", report = cmd_homology(input);
    else if (*cohom_cmd) command = "cohomology-c", report = cmd_cohomology_c(input);
    else if (*relative_cmd) command = "relative", report = cmd_relative(input);
    else if (*graph_cmd) {
      if (dot) {
        out << to_dot(io::parse_graph(io::load_file(input)));
        return 0;
      }
      command = "graph", report = cmd_graph(input);
    } else if (*rough_cmd) command = "rough-cayley", report = cmd_rough_cayley(input);
    else if (*gog_cmd) {
      if (*ball_opt) gog.ball = ball_radius;
      command = "gog", report = cmd_gog(input, gog);
    } else if (*cox_cmd) {
      if (*bott_opt) cox.bott = bott_degree;
      command = "coxeter", report = cmd_coxeter(input, cox);
    } else if (*davis_cmd) command = "davis", report = cmd_davis(input, davis);
    else if (*chev_cmd) command = "chevalley", report = cmd_chevalley(type, q, via);
    emit(out, format, command, report);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: InvalidInput: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tdlc::cli
