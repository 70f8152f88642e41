#include "tdlc/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "tdlc/error.hpp"

namespace tdlc::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t as_index(const json& j, const std::string& what) {
  const auto v = as_int(j, what);
  if (v < 0) bad(what + " must be non-negative");
  return static_cast<std::size_t>(v);
}

const json& as_array(const json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array");
  return j;
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Rational q;
    try {
      q = Rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      bad("cannot read rational '" + j.get<std::string>() + "'");
    }
    if (q.get_den() == 0) bad("zero denominator");
    q.canonicalize();
    return q;
  }
  bad("rationals are integers or \"p/q\" strings");
}

json render_rational(const Rational& q) { return q.get_str(); }

namespace {

// Vertex ids: integers pass through; with a "vertices" list every token is
// replaced by its position there, so names may be strings.
class VertexNames {
 public:
  explicit VertexNames(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array()) return;
    const auto& vs = j.at("vertices");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!vs[i].is_string() && !vs[i].is_number_integer()) bad("vertex names are strings or integers");
      if (!ids_.emplace(vs[i].dump(), static_cast<Vertex>(i)).second) bad("duplicate vertex " + vs[i].dump());
    }
    listed_ = true;
  }
  bool listed() const { return listed_; }
  std::size_t count() const { return ids_.size(); }
  Vertex operator()(const json& v) const {
    if (!listed_) return as_int(v, "vertex");
    const auto it = ids_.find(v.dump());
    if (it == ids_.end()) bad("vertex " + v.dump() + " is not listed in 'vertices'");
    return it->second;
  }

 private:
  bool listed_ = false;
  std::map<std::string, Vertex> ids_;
};

}  // namespace

SimplicialComplex parse_complex(const json& j) {
  const VertexNames names(j);
  auto read = [&](const json& list) {
    std::vector<Simplex> out;
    for (const auto& s : as_array(list, "simplex list")) {
      Simplex x;
      for (const auto& v : as_array(s, "simplex")) x.push_back(names(v));
      std::sort(x.begin(), x.end());
      out.push_back(std::move(x));
    }
    return out;
  };
  if (j.is_object() && j.contains("simplices")) return SimplicialComplex::from_simplices(read(j.at("simplices")));
  const char* key = j.is_object() && j.contains("maximal_simplices") ? "maximal_simplices" : "maximal";
  if (!j.is_object() || !j.contains(key)) bad("complex needs 'simplices', 'maximal_simplices' or 'maximal'");
  auto maximal = read(j.at(key));
  // listed vertices that lie in no simplex are isolated points
  for (std::size_t i = 0; i < names.count(); ++i) maximal.push_back({static_cast<Vertex>(i)});
  return SimplicialComplex::from_maximal(std::move(maximal));
}

json render_complex(const SimplicialComplex& k) {
  json out = json::array();
  for (const auto& s : k.all_simplices()) out.push_back(s);
  return json{{"simplices", out}};
}

SerreGraph parse_graph(const json& j) {
  const json& vs = field(j, "vertices");
  const VertexNames names(j);
  const std::size_t n = names.listed() ? names.count() : as_index(vs, "vertices");
  auto vertex = [&](const json& v) {
    const Vertex x = names(v);
    if (x < 0 || static_cast<std::size_t>(x) >= n) bad("vertex " + v.dump() + " out of range");
    return static_cast<std::size_t>(x);
  };
  if (j.contains("directed")) {
    std::vector<SerreGraph::Edge> edges;
    for (const auto& e : as_array(j.at("directed"), "directed"))
      edges.push_back({vertex(field(e, "origin")), vertex(field(e, "terminus")), as_index(field(e, "bar"), "bar")});
    return SerreGraph(n, std::move(edges));
  }
  const auto& list = as_array(field(j, "edges"), "edges");
  if (!list.empty() && list.front().is_object()) {
    // {"id", "o", "t", "bar"}; ids must be 0..m-1 in any order
    std::vector<std::optional<SerreGraph::Edge>> edges(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& e = list[i];
      const std::size_t id = e.contains("id") ? as_index(e.at("id"), "edge id") : i;
      if (id >= edges.size() || edges[id]) bad("edge ids must be distinct and below the edge count");
      edges[id] = SerreGraph::Edge{vertex(field(e, "o")), vertex(field(e, "t")), as_index(field(e, "bar"), "bar")};
    }
    std::vector<SerreGraph::Edge> out;
    for (auto& e : edges) out.push_back(*e);
    return SerreGraph(n, std::move(out));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2) bad("geometric edges are pairs [a, b]");
    edges.emplace_back(vertex(e[0]), vertex(e[1]));
  }
  return SerreGraph::from_geometric_edges(n, edges);
}

FiniteGroup parse_group(const json& j) {
  if (j.is_string()) return FiniteGroup::preset(j.get<std::string>());
  const std::string name = j.is_object() && j.contains("name") ? j.at("name").get<std::string>() : "";
  if (j.is_object() && j.contains("preset")) return FiniteGroup::preset(j.at("preset").get<std::string>());
  if (j.is_object() && j.contains("table")) {
    FiniteGroup::Table t;
    for (const auto& row : as_array(j.at("table"), "table")) {
      std::vector<FiniteGroup::Element> r;
      for (const auto& x : as_array(row, "table row")) r.push_back(static_cast<FiniteGroup::Element>(as_index(x, "entry")));
      t.push_back(std::move(r));
    }
    return FiniteGroup::from_table(std::move(t), name);
  }
  if (j.is_object() && j.contains("permutations")) {
    std::vector<std::vector<std::uint32_t>> gens;
    for (const auto& p : as_array(j.at("permutations"), "permutations")) {
      std::vector<std::uint32_t> perm;
      for (const auto& x : as_array(p, "permutation")) perm.push_back(static_cast<std::uint32_t>(as_index(x, "point")));
      gens.push_back(std::move(perm));
    }
    return FiniteGroup::from_permutations(gens, name);
  }
  bad("group needs a preset name, 'table' or 'permutations'");
}

FiniteGroup::Element parse_element(const FiniteGroup& g, const json& j) {
  if (j.is_array()) {
    std::vector<std::uint32_t> perm;
    for (const auto& x : j) perm.push_back(static_cast<std::uint32_t>(as_index(x, "point")));
    const auto& perms = g.permutations();
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == perm) return static_cast<FiniteGroup::Element>(i);
    bad("permutation is not an element of group " + g.name());
  }
  const std::size_t x = as_index(j, "element");
  if (x >= g.order()) bad("element " + std::to_string(x) + " out of range for group " + g.name());
  return static_cast<FiniteGroup::Element>(x);
}

namespace {

GraphOfGroups::ElementMap read_embedding(const json& e, const char* images_key, const char* map_key,
                                         const FiniteGroup& from, const FiniteGroup& to) {
  if (e.contains(map_key)) {
    GraphOfGroups::ElementMap map;
    for (const auto& x : as_array(e.at(map_key), map_key)) map.push_back(parse_element(to, x));
    return map;
  }
  std::vector<std::pair<FiniteGroup::Element, FiniteGroup::Element>> images;
  if (e.contains(images_key))
    for (const auto& p : as_array(e.at(images_key), images_key)) {
      if (!p.is_array() || p.size() != 2) bad(std::string(images_key) + " entries are [generator, image]");
      images.emplace_back(parse_element(from, p[0]), parse_element(to, p[1]));
    }
  else if (from.order() > 1)
    bad(std::string("edge needs '") + images_key + "' or '" + map_key + "'");
  return embedding_from_images(from, to, images);
}

}  // namespace

GraphOfGroups parse_graph_of_groups(const json& j) {
  std::vector<FiniteGroup> vgroups;
  for (const auto& g : as_array(field(j, "vertices"), "vertices")) vgroups.push_back(parse_group(g));
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::vector<FiniteGroup> egroups;
  std::vector<GraphOfGroups::ElementMap> maps;
  const json edges = j.contains("edges") ? j.at("edges") : json::array();
  for (const auto& e : as_array(edges, "edges")) {
    const std::size_t a = as_index(field(e, "from"), "from");
    const std::size_t b = as_index(field(e, "to"), "to");
    if (a >= vgroups.size() || b >= vgroups.size()) bad("edge end out of range");
    FiniteGroup ge = e.contains("group") ? parse_group(e.at("group")) : FiniteGroup::trivial();
    maps.push_back(read_embedding(e, "to_images", "to_map", ge, vgroups[b]));
    maps.push_back(read_embedding(e, "from_images", "from_map", ge, vgroups[a]));
    ends.emplace_back(a, b);
    egroups.push_back(std::move(ge));
  }
  SerreGraph base = SerreGraph::from_geometric_edges(vgroups.size(), ends);
  return GraphOfGroups(std::move(base), std::move(vgroups), std::move(egroups), std::move(maps));
}

RationalMatrix parse_matrix(const json& j) {
  std::vector<RationalVector> rows;
  for (const auto& r : as_array(j, "matrix")) {
    RationalVector row;
    for (const auto& x : as_array(r, "matrix row")) row.push_back(parse_rational(x));
    if (!rows.empty() && row.size() != rows[0].size()) bad("ragged matrix");
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_dense(rows, 0);
}

Representation parse_representation(const GraphOfGroups& g, const json& j) {
  const std::size_t dim = as_index(field(j, "dim"), "dim");
  std::vector<std::vector<std::pair<FiniteGroup::Element, RationalMatrix>>> gens(g.base().num_vertices());
  if (j.contains("vertices")) {
    const auto& vs = as_array(j.at("vertices"), "vertices");
    if (vs.size() != gens.size()) bad("representation needs one generator list per vertex");
    for (std::size_t v = 0; v < vs.size(); ++v)
      for (const auto& item : as_array(vs[v], "vertex generators"))
        gens[v].emplace_back(parse_element(g.vertex_group(v), field(item, "element")),
                             parse_matrix(field(item, "matrix")));
  }
  std::vector<RationalMatrix> edges;
  if (j.contains("edges"))
    for (const auto& m : as_array(j.at("edges"), "edges")) edges.push_back(parse_matrix(m));
  return representation_from_generators(g, dim, gens, edges);
}

CoxeterSystem parse_coxeter_matrix(const json& j) {
  const auto& rows = as_array(field(j, "m"), "m");
  if (j.contains("size") && as_index(j.at("size"), "size") != rows.size()) bad("'size' does not match 'm'");
  std::vector<std::vector<std::size_t>> m;
  for (const auto& r : rows) {
    std::vector<std::size_t> row;
    for (const auto& x : as_array(r, "m row")) {
      if (x.is_string() && (x == "inf" || x == "infinity" || x == "∞")) row.push_back(kInfinity);
      else {
        const std::size_t v = as_index(x, "Coxeter label");
        if (v == 0) bad("Coxeter label 0 is not allowed; write \"inf\"");
        row.push_back(v);
      }
    }
    m.push_back(std::move(row));
  }
  return CoxeterSystem(std::move(m));
}

json render_coxeter_matrix(const CoxeterSystem& c) {
  json rows = json::array();
  for (const auto& r : c.matrix()) {
    json row = json::array();
    for (std::size_t x : r) row.push_back(x == kInfinity ? json("inf") : json(x));
    rows.push_back(row);
  }
  return json{{"size", c.size()}, {"m", rows}};
}

CoxeterInput parse_coxeter_input(const json& j) {
  CoxeterInput in;
  if (j.is_string() || (j.is_object() && j.contains("preset"))) {
    const std::string name = j.is_string() ? j.get<std::string>() : j.at("preset").get<std::string>();
    if (name.rfind("affine ", 0) == 0 || (!name.empty() && name[0] == '~')) {
      in.affine = AffineDiagram::preset(name);
      in.cartan = in.affine->affine;
    } else {
      in.cartan = CartanMatrix::preset(name);
    }
  } else if (j.is_object() && j.contains("cartan")) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : as_array(j.at("cartan"), "cartan")) {
      std::vector<std::int64_t> row;
      for (const auto& x : as_array(r, "cartan row")) row.push_back(as_int(x, "Cartan entry"));
      rows.push_back(std::move(row));
    }
    in.cartan = CartanMatrix(std::move(rows));
    if (j.contains("extended_node")) {
      in.affine = AffineDiagram{*in.cartan, as_index(j.at("extended_node"), "extended_node")};
      if (in.affine->extended_node >= in.cartan->size()) bad("extended_node out of range");
    }
  } else if (j.is_object() && j.contains("m")) {
    in.coxeter = parse_coxeter_matrix(j);
  } else {
    bad("Coxeter input needs 'preset', 'cartan' or 'm'");
  }
  if (!in.coxeter) in.coxeter = in.cartan->coxeter();
  return in;
}

}  // namespace tdlc::io

namespace tdlc {

using nlohmann::json;

void to_json(json& j, const HaarValue& h) {
  j = json{{"coeff", h.coeff.get_str()}, {"base", h.base}, {"rendered", to_string(h)}};
}

void from_json(const json& j, HaarValue& h) {
  h.coeff = io::parse_rational(j.at("coeff"));
  h.base = j.at("base").get<std::string>();
}

void to_json(json& j, const TableEntry& e) { j = json{{"T", e.t}, {"dims", e.dims}}; }

void from_json(const json& j, TableEntry& e) {
  e.t = j.at("T").get<std::vector<std::size_t>>();
  e.dims = j.at("dims").get<std::vector<std::size_t>>();
}

void to_json(json& j, const DualityVerdict& v) {
  j = json{{"cd", v.cd}, {"duality", v.is_duality}, {"table", v.table}};
}

void from_json(const json& j, DualityVerdict& v) {
  v.cd = j.at("cd").get<std::size_t>();
  v.is_duality = j.at("duality").get<bool>();
  v.table = j.at("table").get<std::vector<TableEntry>>();
}

void to_json(json& j, const GraphInvariants& g) {
  j = json{{"h1_dim", g.h1_dim}, {"components", g.components}, {"is_tree", g.is_tree}};
}

void from_json(const json& j, GraphInvariants& g) {
  g.h1_dim = j.at("h1_dim").get<std::size_t>();
  g.components = j.at("components").get<std::size_t>();
  g.is_tree = j.at("is_tree").get<bool>();
}

void to_json(json& j, const TreeActionCohomology& c) { j = json{{"h0", c.h0}, {"h1", c.h1}}; }

void from_json(const json& j, TreeActionCohomology& c) {
  c.h0 = j.at("h0").get<std::size_t>();
  c.h1 = j.at("h1").get<std::size_t>();
}

}  // namespace tdlc
