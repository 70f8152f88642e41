#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tdlc/finite_group.hpp"
#include "tdlc/haar.hpp"
#include "tdlc/ratlin.hpp"
#include "tdlc/serre_graph.hpp"

namespace tdlc {

/// Finite connected graph of finite groups. Edge groups live on geometric
/// edges (A_e = A_{bar e}); every directed edge e carries an injective
/// homomorphism iota_e : A_e -> A_{t(e)}, stored as a full element map.
class GraphOfGroups {
 public:
  using Element = FiniteGroup::Element;
  using ElementMap = std::vector<Element>;

  /// edge_groups is indexed like base.positive_edges(); embeddings by
  /// directed edge id. Throws NotHomomorphism, NotInjective, Disconnected.
  GraphOfGroups(SerreGraph base, std::vector<FiniteGroup> vertex_groups,
                std::vector<FiniteGroup> edge_groups, std::vector<ElementMap> embeddings);

  const SerreGraph& base() const noexcept { return base_; }
  const FiniteGroup& vertex_group(std::size_t v) const { return vertex_groups_.at(v); }
  const FiniteGroup& edge_group(std::size_t e) const { return edge_groups_.at(geometric_index_.at(e)); }
  /// iota_e as an element map A_e -> A_{t(e)}.
  const ElementMap& embedding(std::size_t e) const { return embeddings_.at(e); }
  /// |A_{t(e)} : iota_e(A_e)|.
  std::size_t index(std::size_t e) const;

 private:
  SerreGraph base_;
  std::vector<FiniteGroup> vertex_groups_;
  std::vector<FiniteGroup> edge_groups_;
  std::vector<ElementMap> embeddings_;
  std::vector<std::size_t> geometric_index_;
};

/// Builds iota_e from generator images (pairs a -> iota_e(a)); fails with
/// NotHomomorphism when the assignment does not extend.
GraphOfGroups::ElementMap embedding_from_images(
    const FiniteGroup& edge_group, const FiniteGroup& vertex_group,
    const std::vector<std::pair<FiniteGroup::Element, FiniteGroup::Element>>& images);

struct ValidationReport {
  /// index[e] = |A_{t(e)} : iota_e(A_e)| per directed edge.
  std::vector<std::size_t> index;
};

ValidationReport validate(const GraphOfGroups& g);

/// Unimodularity from an index datum: ratio(e) = index[e] / index[bar e]
/// must multiply to 1 around every cycle.
bool unimodular_from_indices(const SerreGraph& base, std::span<const Rational> index);

bool unimodularity_check(const GraphOfGroups& g);

/// (sum_v 1/|A_v| - sum_{E+} 1/|A_e|) * mu_{1}. Throws NotUnimodular.
HaarValue euler_characteristic(const GraphOfGroups& g);

/// (1-d)/(1+d) * mu_{G_e}; d >= 1.
HaarValue aut_tree_chi(std::size_t d);

/// Normal form t_1 e_1 t_2 e_2 ... t_k e_k * tail of an element of the path
/// group based at vertex 0: t_i is the least-element representative of its
/// coset in A_{o(e_i)} / iota_{bar e_i}(A_{e_i}), and no t_i = 1 follows
/// e_{i-1} = bar e_i.
struct PiWord {
  struct Syllable {
    FiniteGroup::Element transversal;
    std::size_t edge;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
  };
  std::vector<Syllable> syllables;
  FiniteGroup::Element tail = 0;

  friend bool operator==(const PiWord&, const PiWord&) = default;
};

/// Letter of an unreduced word: a vertex-group element (in the group of the
/// current vertex) or an edge letter.
struct PiToken {
  enum class Kind { Element, Edge } kind;
  std::size_t value;
};

/// Word arithmetic in pi_1(A, Lambda, Xi) realised as closed paths at the
/// base vertex 0. The maximal tree Xi is the BFS tree by edge id.
class FundamentalGroup {
 public:
  explicit FundamentalGroup(const GraphOfGroups& g);

  const GraphOfGroups& graph() const noexcept { return *g_; }
  std::size_t end_vertex(const PiWord& w) const;

  PiWord identity() const;
  /// Normal form of a token sequence starting at `start` (the result may end
  /// anywhere; elements of pi_1 start and end at 0).
  PiWord reduce(std::span<const PiToken> tokens, std::size_t start = 0) const;
  PiWord multiply(const PiWord& a, const PiWord& b) const;
  PiWord inverse(const PiWord& a) const;

  /// gamma_v a gamma_v^{-1}, gamma_v the tree path from 0 to v.
  PiWord vertex_element(std::size_t v, FiniteGroup::Element a) const;
  /// gamma_{o(e)} e gamma_{t(e)}^{-1}; trivial for tree edges.
  PiWord edge_letter(std::size_t e) const;
  bool is_tree_edge(std::size_t e) const { return in_tree_.at(e); }
  /// Least-element transversal of A_{o(e)} / iota_{bar e}(A_e).
  const std::vector<FiniteGroup::Element>& transversal(std::size_t e) const { return transversal_.at(e); }

  std::vector<PiToken> tokens(const PiWord& w) const;

 private:
  const GraphOfGroups* g_;
  std::vector<bool> in_tree_;
  std::vector<std::vector<std::size_t>> tree_path_;
  // per directed edge e: membership of iota_e(A_e) in A_{t(e)} and its inverse
  std::vector<std::vector<bool>> image_;
  std::vector<std::vector<FiniteGroup::Element>> preimage_;
  std::vector<std::vector<FiniteGroup::Element>> transversal_;
};

/// Ball around the vertex A_0 of the Bass-Serre tree. Vertex i is the coset
/// whose normal form has syllables words[i] (tail dropped).
struct BassSerreBall {
  SerreGraph graph;
  std::vector<std::vector<PiWord::Syllable>> words;
  std::vector<std::size_t> vertex_type;
};

BassSerreBall bass_serre_ball(const GraphOfGroups& g, std::size_t radius);

/// Finite-dimensional rational representation of pi_1: a matrix for every
/// vertex-group element and every positive edge letter (identity on tree
/// edges).
struct Representation {
  std::size_t dim = 0;
  std::vector<std::vector<RationalMatrix>> vertex;
  std::vector<RationalMatrix> edge;  // indexed like positive_edges()

  static Representation trivial(const GraphOfGroups& g, std::size_t dim = 1);
};

/// Completes a representation from matrices for some elements of each vertex
/// group (closure under products) and matrices for the positive edges
/// (missing ones default to the identity). Throws RelationViolated when the
/// given matrices do not close up consistently.
Representation representation_from_generators(
    const GraphOfGroups& g, std::size_t dim,
    const std::vector<std::vector<std::pair<FiniteGroup::Element, RationalMatrix>>>& vertex_generators,
    const std::vector<RationalMatrix>& edge_matrices);

/// Checks the defining relations of pi_1 on rho. Throws RelationViolated,
/// NotInvertible.
void validate_representation(const GraphOfGroups& g, const Representation& rho);

struct TreeActionCohomology {
  std::size_t h0 = 0;
  std::size_t h1 = 0;

  friend bool operator==(const TreeActionCohomology&, const TreeActionCohomology&) = default;
};

/// Kernel and cokernel of prod_v M^{A_v} -> prod_{E+} M^{G_e},
/// m |-> rho(e) m_{t(e)} - m_{o(e)}.
TreeActionCohomology tree_action_cohomology(const GraphOfGroups& g, const Representation& rho);

/// Collapses edges whose embedding iota_e is onto (never a loop), as long as
/// one exists. The fundamental group is unchanged.
GraphOfGroups collapse_surjective_edges(const GraphOfGroups& g);

}  // namespace tdlc
