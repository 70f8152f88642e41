#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tdlc/ratlin.hpp"

namespace tdlc {

using Vertex = std::int64_t;
/// Strictly increasing vertex list.
using Simplex = std::vector<Vertex>;

/// Sorted x_0 ^ ... ^ x_q together with the sign picked up while sorting.
/// sign == 0 marks a repeated vertex (the wedge vanishes).
struct OrientedSimplex {
  Simplex vertices;
  int sign = 1;

  static OrientedSimplex from_sequence(std::vector<Vertex> seq);
};

/// Finite downward-closed family of nonempty vertex sets, graded by
/// degree q = |A| - 1. Immutable once built.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Strict constructor: every face of every listed simplex must be listed
  /// too (NotClosed otherwise).
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);
  /// Generates the downward closure.
  static SimplicialComplex from_maximal(std::vector<Simplex> maximal);
  /// The full complex on X: every nonempty finite subset.
  static SimplicialComplex full(std::vector<Vertex> vertices);

  /// -1 for the empty complex.
  int dim() const noexcept { return static_cast<int>(by_degree_.size()) - 1; }
  std::size_t count(std::size_t q) const noexcept {
    return q < by_degree_.size() ? by_degree_[q].size() : 0;
  }
  std::size_t total_count() const noexcept;
  const std::vector<Simplex>& simplices(std::size_t q) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  std::vector<Vertex> vertices() const;
  std::vector<Simplex> all_simplices() const;

  bool is_subcomplex_of(const SimplicialComplex& other) const;
  /// Full subcomplex spanned by a vertex subset.
  SimplicialComplex induced(std::span<const Vertex> keep) const;
  static SimplicialComplex union_of(std::span<const SimplicialComplex> parts);

  /// I(A) = { x not in A : A u {x} is a simplex }.
  std::vector<Vertex> link_vertices(const Simplex& a) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.by_degree_ == b.by_degree_;
  }

 private:
  explicit SimplicialComplex(std::vector<std::vector<Simplex>> by_degree);

  std::vector<std::vector<Simplex>> by_degree_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// Throws NotClosed naming the simplex and its missing face.
void validate_closed(std::span<const Simplex> simplices);

/// A set with a fixed-point-free involution. Elements are 0..size-1; the
/// least element of every orbit is its representative, so Q[X]/(x + bar x)
/// has the representatives as basis.
class SignedSet {
 public:
  explicit SignedSet(std::vector<std::size_t> bar);

  std::size_t size() const noexcept { return bar_.size(); }
  std::size_t bar(std::size_t x) const { return bar_.at(x); }
  const std::vector<std::size_t>& representatives() const noexcept { return reps_; }
  /// Coordinate of x in the representative basis: (basis index, +1 or -1).
  std::pair<std::size_t, int> coordinate(std::size_t x) const;
  /// x*(y): 1 if y == x, -1 if y == bar x, else 0.
  int evaluate(std::size_t dual_of, std::size_t y) const;

 private:
  std::vector<std::size_t> bar_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> rep_index_;
};

/// Oriented q-simplices as a signed set: element 2i is simplex i with its
/// increasing orientation, 2i+1 the reverse. For q = 0 this is the doubled
/// set { +x, -x }.
SignedSet oriented_signed_set(const SimplicialComplex& k, std::size_t q);

/// Adjoint of psi : Q[X] -> Q[Y] (representative coordinates) computed
/// through the evaluation pairing of dual signed sets.
RationalMatrix signed_adjoint(const RationalMatrix& psi, const SignedSet& x, const SignedSet& y);

/// Matrix of d_q : C_q -> C_{q-1}; 1 <= q <= dim. Dropping position j has
/// coefficient (-1)^j.
RationalMatrix boundary_matrix(const SimplicialComplex& k, std::size_t q);

/// d_0 .. d_dim, with d_0 the zero map to the 0-space.
std::vector<RationalMatrix> chain_complex(const SimplicialComplex& k);

std::vector<std::size_t> homology(const SimplicialComplex& k);

/// Matrix of the compact-support coboundary C_c^q -> C_c^{q+1} assembled
/// from z ^ x_0* ^ ... ^ x_q* over z in I(A); 0 <= q <= dim. The q = 0
/// domain is indexed by the doubled basis.
RationalMatrix compact_cochain_matrix(const SimplicialComplex& k, std::size_t q);

std::vector<std::size_t> cohomology_compact(const SimplicialComplex& k);

/// dim H^q(K, L; Q), q = 0..dim K. Throws NotSubcomplex.
std::vector<std::size_t> relative_cohomology(const SimplicialComplex& k,
                                             const SimplicialComplex& sub);

/// Finite window (B_R, frontier of B_R) of an infinite complex.
struct Window {
  SimplicialComplex ball;
  SimplicialComplex frontier;
};
using WindowBuilder = std::function<Window(std::size_t radius)>;

std::vector<std::vector<std::size_t>> ball_sphere_growth(const WindowBuilder& builder,
                                                         std::span<const std::size_t> radii);

/// Ball of radius R around 0 in the integer line, frontier {-R, R}.
Window line_window(std::size_t radius);
/// Ball of radius R in the regular tree of the given degree, frontier its
/// leaves at distance R.
Window regular_tree_window(std::size_t degree, std::size_t radius);
/// A single vertex with empty frontier.
Window point_window(std::size_t radius);

/// 1-dimensional complex from vertices and undirected edges (loops and
/// parallel edges collapse).
SimplicialComplex complex_from_graph(std::span<const Vertex> vertices,
                                     std::span<const std::pair<Vertex, Vertex>> edges);

}  // namespace tdlc
