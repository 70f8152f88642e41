#include "tdlc/serre_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tdlc/error.hpp"

namespace tdlc {

SerreGraph::SerreGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& x = edges_[e];
    if (x.origin >= num_vertices_ || x.terminus >= num_vertices_ || x.bar >= edges_.size())
      throw Error(ErrorCode::InvalidInput, "edge " + std::to_string(e) + " references a missing vertex or edge");
    if (x.bar == e) throw Error(ErrorCode::InvalidInput, "edge " + std::to_string(e) + " is its own inverse");
    const Edge& y = edges_[x.bar];
    if (y.bar != e) throw Error(ErrorCode::InvalidInput, "inversion is not an involution at edge " + std::to_string(e));
    if (y.terminus != x.origin || y.origin != x.terminus)
      throw Error(ErrorCode::InvalidInput, "t(bar e) != o(e) at edge " + std::to_string(e));
  }
}

SerreGraph SerreGraph::from_geometric_edges(std::size_t num_vertices,
                                            std::span<const std::pair<std::size_t, std::size_t>> edges) {
  std::vector<Edge> out;
  for (auto [a, b] : edges) {
    const std::size_t e = out.size();
    out.push_back({a, b, e + 1});
    out.push_back({b, a, e});
  }
  return SerreGraph(num_vertices, std::move(out));
}

std::vector<std::size_t> SerreGraph::positive_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (e < edges_[e].bar) out.push_back(e);
  return out;
}

std::vector<std::size_t> SerreGraph::star(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].origin == v) out.push_back(e);
  return out;
}

bool SerreGraph::is_combinatorial() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges_)
    if (!seen.emplace(e.terminus, e.origin).second) return false;
  return true;
}

RationalMatrix edge_boundary(const SerreGraph& g) {
  const auto pos = g.positive_edges();
  std::vector<Triplet> entries;
  for (std::size_t c = 0; c < pos.size(); ++c) {
    entries.push_back({g.terminus(pos[c]), c, Rational(1)});
    entries.push_back({g.origin(pos[c]), c, Rational(-1)});
  }
  return RationalMatrix::from_triplets(g.num_vertices(), pos.size(), std::move(entries));
}

GraphInvariants graph_invariants(const SerreGraph& g) {
  const RationalMatrix d = edge_boundary(g);
  const std::size_t r = rank(d);
  GraphInvariants inv;
  inv.h1_dim = d.cols() - r;
  inv.components = d.rows() - r;
  inv.is_tree = inv.h1_dim == 0 && inv.components == 1;
  return inv;
}

std::string to_dot(const SerreGraph& g, std::span<const std::string> labels) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    os << "  v" << v;
    if (v < labels.size()) os << " [label=\"" << labels[v] << "\"]";
    os << ";\n";
  }
  for (std::size_t e : g.positive_edges())
    os << "  v" << g.origin(e) << " -- v" << g.terminus(e) << " [label=\"e" << e << "\"];\n";
  os << "}\n";
  return os.str();
}

FiniteGroupOracle::FiniteGroupOracle(FiniteGroup group,
                                     const std::vector<FiniteGroup::Element>& subgroup_generators)
    : group_(std::move(group)), in_o_(group_.order(), false) {
  o_elements_ = group_.subgroup(subgroup_generators);
  for (auto x : o_elements_) in_o_[x] = true;
}

FiniteGroup::Element FiniteGroupOracle::unwrap(const GroupElement& g) const {
  if (g.size() != 1 || g[0] < 0 || static_cast<std::size_t>(g[0]) >= group_.order())
    throw Error(ErrorCode::InvalidInput, "not an element of the finite group");
  return static_cast<FiniteGroup::Element>(g[0]);
}

GroupElement FiniteGroupOracle::identity() const { return {group_.identity()}; }

GroupElement FiniteGroupOracle::multiply(const GroupElement& a, const GroupElement& b) const {
  return {group_.mul(unwrap(a), unwrap(b))};
}

GroupElement FiniteGroupOracle::inverse(const GroupElement& a) const { return {group_.inv(unwrap(a))}; }

GroupElement FiniteGroupOracle::coset_canon(const GroupElement& g) const {
  return {group_.left_coset_rep(unwrap(g), in_o_)};
}

bool FiniteGroupOracle::in_subgroup(const GroupElement& g) const { return in_o_[unwrap(g)]; }

std::vector<GroupElement> FiniteGroupOracle::subgroup_elements() const {
  std::vector<GroupElement> out;
  for (auto x : o_elements_) out.push_back({x});
  return out;
}

std::optional<std::vector<GroupElement>> FiniteGroupOracle::all_elements() const {
  std::vector<GroupElement> out;
  for (std::size_t x = 0; x < group_.order(); ++x) out.push_back({static_cast<std::int64_t>(x)});
  return out;
}

namespace {

void check_generators(const GroupOracle& oracle, std::span<const GroupElement> gens) {
  const std::set<GroupElement> s(gens.begin(), gens.end());
  for (const auto& g : gens) {
    if (oracle.in_subgroup(g)) throw Error(ErrorCode::GeneratorInO, "a generator lies in O");
    if (!s.count(oracle.inverse(g))) throw Error(ErrorCode::NotSymmetric, "S is not closed under inverses");
  }
}

}  // namespace

RoughCayleyBall rough_cayley_ball(const GroupOracle& oracle, std::span<const GroupElement> gens,
                                  std::size_t radius) {
  check_generators(oracle, gens);
  const auto o_elems = oracle.subgroup_elements();

  RoughCayleyBall ball;
  std::map<GroupElement, std::size_t> index;
  ball.cosets.push_back(oracle.coset_canon(oracle.identity()));
  ball.distance.push_back(0);
  index.emplace(ball.cosets[0], 0);

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < ball.cosets.size(); ++i) {
    const std::size_t d = ball.distance[i];
    std::set<GroupElement> nbrs;
    for (const auto& w : o_elems)
      for (const auto& s : gens)
        nbrs.insert(oracle.coset_canon(oracle.multiply(oracle.multiply(ball.cosets[i], w), s)));
    for (const auto& n : nbrs) {
      auto it = index.find(n);
      if (it == index.end()) {
        if (d == radius) continue;
        it = index.emplace(n, ball.cosets.size()).first;
        ball.cosets.push_back(n);
        ball.distance.push_back(d + 1);
      }
      const std::size_t j = it->second;
      pairs.emplace(std::min(i, j), std::max(i, j));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> geo(pairs.begin(), pairs.end());
  ball.graph = SerreGraph::from_geometric_edges(ball.cosets.size(), geo);
  return ball;
}

GenerationWitness connectivity_equals_generation(const GroupOracle& oracle,
                                                 std::span<const GroupElement> gens) {
  const auto all = oracle.all_elements();
  if (!all) throw Error(ErrorCode::InvalidInput, "oracle does not enumerate a finite group");
  std::set<GroupElement> cosets;
  for (const auto& g : *all) cosets.insert(oracle.coset_canon(g));

  const RoughCayleyBall ball = rough_cayley_ball(oracle, gens, cosets.size());
  GenerationWitness w;
  w.graph_connected = ball.cosets.size() == cosets.size();

  std::set<GroupElement> reached{oracle.identity()};
  std::vector<GroupElement> frontier{oracle.identity()};
  std::vector<GroupElement> step = oracle.subgroup_elements();
  step.insert(step.end(), gens.begin(), gens.end());
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (const auto& s : step) {
      GroupElement x = oracle.multiply(frontier[i], s);
      if (reached.insert(x).second) frontier.push_back(std::move(x));
    }
  w.generates = reached.size() == all->size();
  return w;
}

}  // namespace tdlc
