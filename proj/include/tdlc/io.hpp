#pragma once

#include <string>

#include <json.hpp>

#include "tdlc/coxeter.hpp"
#include "tdlc/davis.hpp"
#include "tdlc/finite_group.hpp"
#include "tdlc/graph_of_groups.hpp"
#include "tdlc/haar.hpp"
#include "tdlc/serre_graph.hpp"
#include "tdlc/simplicial.hpp"

namespace tdlc::io {

using nlohmann::json;

/// Reads a whole file as JSON. Throws InvalidInput on I/O or parse errors.
json load_file(const std::string& path);

/// Integers or "p/q" strings.
Rational parse_rational(const json& j);
json render_rational(const Rational& q);

/// {"simplices": [...]} (must be closed), or {"maximal_simplices": [...]}
/// (alias "maximal"). An optional "vertices" list names the vertices; names
/// may be strings and become their positions in the list.
SimplicialComplex parse_complex(const json& j);
json render_complex(const SimplicialComplex& k);

/// "vertices" is a count or a list of names. Edges are given as
/// "edges": [[a, b], ...] (geometric), "edges": [{"id"?, "o", "t", "bar"}, ...]
/// or "directed": [{"origin", "terminus", "bar"}, ...].
SerreGraph parse_graph(const json& j);

/// "C3", "S4", ... or {"table": [[...]]} or {"permutations": [[...]]}.
FiniteGroup parse_group(const json& j);
/// Element index, or a permutation image list for permutation groups.
FiniteGroup::Element parse_element(const FiniteGroup& g, const json& j);

/// {"vertices": [group, ...], "edges": [{"from", "to", "group",
///   "to_images" | "to_map", "from_images" | "from_map"}, ...]}.
/// Geometric edge i becomes directed edges 2i (from -> to) and 2i+1.
GraphOfGroups parse_graph_of_groups(const json& j);

/// {"dim": d, "vertices": [[{"element", "matrix"}, ...], ...],
///  "edges": [matrix per positive edge]}.
Representation parse_representation(const GraphOfGroups& g, const json& j);
RationalMatrix parse_matrix(const json& j);

/// {"size": n, "m": [[1, "inf", ...], ...]}.
CoxeterSystem parse_coxeter_matrix(const json& j);
json render_coxeter_matrix(const CoxeterSystem& c);

/// Any Coxeter-flavoured input: {"preset": name}, {"cartan": rows,
/// "extended_node"?}, or a Coxeter matrix.
struct CoxeterInput {
  std::optional<CoxeterSystem> coxeter;
  std::optional<CartanMatrix> cartan;
  std::optional<AffineDiagram> affine;  // set for affine presets or when extended_node is given
};
CoxeterInput parse_coxeter_input(const json& j);

}  // namespace tdlc::io

namespace tdlc {

void to_json(nlohmann::json& j, const HaarValue& h);
void from_json(const nlohmann::json& j, HaarValue& h);
void to_json(nlohmann::json& j, const TableEntry& e);
void from_json(const nlohmann::json& j, TableEntry& e);
void to_json(nlohmann::json& j, const DualityVerdict& v);
void from_json(const nlohmann::json& j, DualityVerdict& v);
void to_json(nlohmann::json& j, const GraphInvariants& g);
void from_json(const nlohmann::json& j, GraphInvariants& g);
void to_json(nlohmann::json& j, const TreeActionCohomology& c);
void from_json(const nlohmann::json& j, TreeActionCohomology& c);

}  // namespace tdlc
