#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tdlc/finite_group.hpp"
#include "tdlc/ratlin.hpp"

namespace tdlc {

/// Graph with origin, terminus and a fixed-point-free edge inversion:
/// t(bar e) = o(e), o(bar e) = t(e), bar bar e = e, bar e != e.
class SerreGraph {
 public:
  struct Edge {
    std::size_t origin;
    std::size_t terminus;
    std::size_t bar;
  };

  SerreGraph() = default;
  /// Validates the inversion axioms (InvalidInput otherwise).
  SerreGraph(std::size_t num_vertices, std::vector<Edge> edges);
  /// Geometric edge i becomes directed edges 2i : a -> b and 2i+1 : b -> a.
  static SerreGraph from_geometric_edges(std::size_t num_vertices,
                                         std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_geometric_edges() const noexcept { return edges_.size() / 2; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::size_t origin(std::size_t e) const { return edges_.at(e).origin; }
  std::size_t terminus(std::size_t e) const { return edges_.at(e).terminus; }
  std::size_t bar(std::size_t e) const { return edges_.at(e).bar; }

  /// One edge per inversion orbit, the one with the smaller id.
  std::vector<std::size_t> positive_edges() const;
  /// Edges with origin v.
  std::vector<std::size_t> star(std::size_t v) const;
  /// (t, o) injective: no loops, no parallel edges.
  bool is_combinatorial() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

/// d(e) = t(e) - o(e) on the positive edges, as a |V| x |E+| matrix.
RationalMatrix edge_boundary(const SerreGraph& g);

struct GraphInvariants {
  std::size_t h1_dim = 0;
  std::size_t components = 0;
  bool is_tree = false;

  friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

/// h1 = dim ker d, components = dim coker d, tree iff ker = 0 and coker = Q.
GraphInvariants graph_invariants(const SerreGraph& g);

std::string to_dot(const SerreGraph& g, std::span<const std::string> labels = {});

/// Elements of an oracle group are opaque integer tuples; equal tuples mean
/// equal elements.
using GroupElement = std::vector<std::int64_t>;

/// A group G with a distinguished finite subgroup O, accessed through
/// canonical forms. Oracles are read sequentially by the library.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;
  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement inverse(const GroupElement& a) const = 0;
  /// Canonical representative of the left coset gO.
  virtual GroupElement coset_canon(const GroupElement& g) const = 0;
  virtual bool in_subgroup(const GroupElement& g) const = 0;
  virtual std::vector<GroupElement> subgroup_elements() const = 0;
  /// Every element of G when G is finite.
  virtual std::optional<std::vector<GroupElement>> all_elements() const { return std::nullopt; }
};

/// Table-backed finite group with O generated by the given elements.
class FiniteGroupOracle final : public GroupOracle {
 public:
  FiniteGroupOracle(FiniteGroup group, const std::vector<FiniteGroup::Element>& subgroup_generators);

  const FiniteGroup& group() const noexcept { return group_; }

  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  GroupElement coset_canon(const GroupElement& g) const override;
  bool in_subgroup(const GroupElement& g) const override;
  std::vector<GroupElement> subgroup_elements() const override;
  std::optional<std::vector<GroupElement>> all_elements() const override;

 private:
  FiniteGroup::Element unwrap(const GroupElement& g) const;

  FiniteGroup group_;
  std::vector<bool> in_o_;
  std::vector<FiniteGroup::Element> o_elements_;
};

/// The integers with O = {0}.
class IntegerOracle final : public GroupOracle {
 public:
  GroupElement identity() const override { return {0}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    return {a.at(0) + b.at(0)};
  }
  GroupElement inverse(const GroupElement& a) const override { return {-a.at(0)}; }
  GroupElement coset_canon(const GroupElement& g) const override { return g; }
  bool in_subgroup(const GroupElement& g) const override { return g.at(0) == 0; }
  std::vector<GroupElement> subgroup_elements() const override { return {{0}}; }
};

/// Truncated rough Cayley graph: vertex i is the coset cosets[i] at
/// distance distance[i] from O; vertex 0 is O.
struct RoughCayleyBall {
  SerreGraph graph;
  std::vector<GroupElement> cosets;
  std::vector<std::size_t> distance;
};

/// BFS from O along edges (gO, g w s O), w in O, s in S; the induced graph
/// on the ball. Throws NotSymmetric, GeneratorInO.
RoughCayleyBall rough_cayley_ball(const GroupOracle& oracle, std::span<const GroupElement> gens,
                                  std::size_t radius);

struct GenerationWitness {
  bool graph_connected = false;
  bool generates = false;
  bool agrees() const noexcept { return graph_connected == generates; }
};

/// Finite G only: compares connectivity of the full rough Cayley graph with
/// <O, S> = G.
GenerationWitness connectivity_equals_generation(const GroupOracle& oracle,
                                                 std::span<const GroupElement> gens);

}  // namespace tdlc
