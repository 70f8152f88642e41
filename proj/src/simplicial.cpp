#include "tdlc/simplicial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tdlc/error.hpp"

namespace tdlc {

namespace {

std::string show(const Simplex& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

Simplex normalized(Simplex s) {
  if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty simplex");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(ErrorCode::InvalidInput, "repeated vertex in simplex " + show(s));
  return s;
}

Simplex drop(const Simplex& s, std::size_t j) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != j) f.push_back(s[i]);
  return f;
}

}  // namespace

OrientedSimplex OrientedSimplex::from_sequence(std::vector<Vertex> seq) {
  OrientedSimplex o;
  // insertion sort, counting transpositions
  int parity = 0;
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (std::size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
      std::swap(seq[j - 1], seq[j]);
      parity ^= 1;
    }
  o.sign = std::adjacent_find(seq.begin(), seq.end()) != seq.end() ? 0 : (parity ? -1 : 1);
  o.vertices = std::move(seq);
  return o;
}

SimplicialComplex::SimplicialComplex(std::vector<std::vector<Simplex>> by_degree)
    : by_degree_(std::move(by_degree)) {
  while (!by_degree_.empty() && by_degree_.back().empty()) by_degree_.pop_back();
  index_.resize(by_degree_.size());
  for (std::size_t q = 0; q < by_degree_.size(); ++q) {
    std::sort(by_degree_[q].begin(), by_degree_[q].end());
    for (std::size_t i = 0; i < by_degree_[q].size(); ++i) index_[q].emplace(by_degree_[q][i], i);
  }
}

void validate_closed(std::span<const Simplex> simplices) {
  std::set<Simplex> all;
  for (const auto& s : simplices) all.insert(normalized(s));
  for (const auto& s : all) {
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex f = drop(s, j);
      if (!all.count(f))
        throw Error(ErrorCode::NotClosed, "simplex " + show(s) + " is missing face " + show(f));
    }
  }
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  validate_closed(simplices);
  std::set<Simplex> all;
  for (auto& s : simplices) all.insert(normalized(std::move(s)));
  std::vector<std::vector<Simplex>> by_degree;
  for (const auto& s : all) {
    if (by_degree.size() < s.size()) by_degree.resize(s.size());
    by_degree[s.size() - 1].push_back(s);
  }
  return SimplicialComplex(std::move(by_degree));
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Simplex> maximal) {
  std::set<Simplex> all;
  std::vector<Simplex> stack;
  for (auto& s : maximal) stack.push_back(normalized(std::move(s)));
  while (!stack.empty()) {
    Simplex s = std::move(stack.back());
    stack.pop_back();
    if (!all.insert(s).second) continue;
    if (s.size() > 1)
      for (std::size_t j = 0; j < s.size(); ++j) stack.push_back(drop(s, j));
  }
  return from_simplices(std::vector<Simplex>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::full(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.size() > 20) throw Error(ErrorCode::InvalidInput, "full complex on more than 20 vertices");
  if (vertices.empty()) return SimplicialComplex();
  return from_maximal({vertices});
}

std::size_t SimplicialComplex::total_count() const noexcept {
  std::size_t n = 0;
  for (const auto& d : by_degree_) n += d.size();
  return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t q) const {
  static const std::vector<Simplex> empty;
  return q < by_degree_.size() ? by_degree_[q] : empty;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> v;
  for (const auto& s : simplices(0)) v.push_back(s[0]);
  return v;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::vector<Simplex> out;
  for (const auto& d : by_degree_) out.insert(out.end(), d.begin(), d.end());
  return out;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  for (const auto& d : by_degree_)
    for (const auto& s : d)
      if (!other.contains(s)) return false;
  return true;
}

SimplicialComplex SimplicialComplex::induced(std::span<const Vertex> keep) const {
  std::set<Vertex> k(keep.begin(), keep.end());
  std::vector<std::vector<Simplex>> by_degree(by_degree_.size());
  for (std::size_t q = 0; q < by_degree_.size(); ++q)
    for (const auto& s : by_degree_[q])
      if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return k.count(v) > 0; }))
        by_degree[q].push_back(s);
  return SimplicialComplex(std::move(by_degree));
}

SimplicialComplex SimplicialComplex::union_of(std::span<const SimplicialComplex> parts) {
  std::vector<std::set<Simplex>> acc;
  for (const auto& p : parts) {
    if (acc.size() < p.by_degree_.size()) acc.resize(p.by_degree_.size());
    for (std::size_t q = 0; q < p.by_degree_.size(); ++q)
      acc[q].insert(p.by_degree_[q].begin(), p.by_degree_[q].end());
  }
  std::vector<std::vector<Simplex>> by_degree;
  for (auto& d : acc) by_degree.emplace_back(d.begin(), d.end());
  return SimplicialComplex(std::move(by_degree));
}

std::vector<Vertex> SimplicialComplex::link_vertices(const Simplex& a) const {
  std::vector<Vertex> out;
  for (const auto& s : simplices(a.size())) {
    if (!std::includes(s.begin(), s.end(), a.begin(), a.end())) continue;
    for (Vertex v : s)
      if (!std::binary_search(a.begin(), a.end(), v)) out.push_back(v);
  }
  return out;
}

SignedSet::SignedSet(std::vector<std::size_t> bar) : bar_(std::move(bar)) {
  rep_index_.assign(bar_.size(), 0);
  for (std::size_t x = 0; x < bar_.size(); ++x) {
    const std::size_t b = bar_[x];
    if (b >= bar_.size() || bar_[b] != x)
      throw Error(ErrorCode::InvalidInput, "bar is not an involution");
    if (b == x) throw Error(ErrorCode::InvalidInput, "bar has a fixed point");
    if (x < b) {
      rep_index_[x] = rep_index_[b] = reps_.size();
      reps_.push_back(x);
    }
  }
}

std::pair<std::size_t, int> SignedSet::coordinate(std::size_t x) const {
  const std::size_t i = rep_index_.at(x);
  return {i, reps_[i] == x ? 1 : -1};
}

int SignedSet::evaluate(std::size_t dual_of, std::size_t y) const {
  if (y == dual_of) return 1;
  if (y == bar(dual_of)) return -1;
  return 0;
}

SignedSet oriented_signed_set(const SimplicialComplex& k, std::size_t q) {
  std::vector<std::size_t> bar(2 * k.count(q));
  for (std::size_t x = 0; x < bar.size(); ++x) bar[x] = x ^ 1U;
  return SignedSet(std::move(bar));
}

RationalMatrix signed_adjoint(const RationalMatrix& psi, const SignedSet& x, const SignedSet& y) {
  if (psi.cols() != x.representatives().size() || psi.rows() != y.representatives().size())
    throw Error(ErrorCode::InvalidInput, "map does not match the signed sets");
  std::vector<Triplet> entries;
  const RationalMatrix cols = psi.transpose();
  for (std::size_t xi = 0; xi < cols.rows(); ++xi) {
    for (std::size_t yi = 0; yi < y.representatives().size(); ++yi) {
      Rational pairing = 0;
      for (const auto& [r, lambda] : cols.row(xi))
        pairing += lambda * y.evaluate(y.representatives()[yi], y.representatives()[r]);
      if (pairing != 0) entries.push_back({xi, yi, pairing});
    }
  }
  return RationalMatrix::from_triplets(x.representatives().size(), y.representatives().size(),
                                       std::move(entries));
}

RationalMatrix boundary_matrix(const SimplicialComplex& k, std::size_t q) {
  if (q < 1 || static_cast<int>(q) > k.dim())
    throw Error(ErrorCode::DegreeOutOfRange,
                "boundary degree " + std::to_string(q) + " outside 1.." + std::to_string(k.dim()));
  std::vector<Triplet> entries;
  const auto& cells = k.simplices(q);
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (std::size_t j = 0; j < cells[c].size(); ++j)
      entries.push_back({*k.index_of(drop(cells[c], j)), c, Rational(j % 2 ? -1 : 1)});
  return RationalMatrix::from_triplets(k.count(q - 1), k.count(q), std::move(entries));
}

std::vector<RationalMatrix> chain_complex(const SimplicialComplex& k) {
  std::vector<RationalMatrix> out;
  if (k.dim() < 0) return out;
  out.emplace_back(0, k.count(0));
  for (int q = 1; q <= k.dim(); ++q) out.push_back(boundary_matrix(k, static_cast<std::size_t>(q)));
  return out;
}

std::vector<std::size_t> homology(const SimplicialComplex& k) {
  const auto chain = chain_complex(k);
  return homology_dims(chain);
}

RationalMatrix compact_cochain_matrix(const SimplicialComplex& k, std::size_t q) {
  if (static_cast<int>(q) > k.dim())
    throw Error(ErrorCode::DegreeOutOfRange,
                "cochain degree " + std::to_string(q) + " outside 0.." + std::to_string(k.dim()));
  const SignedSet domain = oriented_signed_set(k, q);
  const SignedSet target = oriented_signed_set(k, q + 1);
  std::vector<Triplet> entries;
  for (std::size_t col = 0; col < domain.representatives().size(); ++col) {
    const std::size_t elem = domain.representatives()[col];
    const Simplex& a = k.simplices(q)[elem / 2];
    const int source_sign = elem % 2 ? -1 : 1;
    for (Vertex z : k.link_vertices(a)) {
      std::vector<Vertex> seq{z};
      seq.insert(seq.end(), a.begin(), a.end());
      OrientedSimplex w = OrientedSimplex::from_sequence(std::move(seq));
      const std::size_t j = *k.index_of(w.vertices);
      const auto [row, sign] = target.coordinate(2 * j + (w.sign > 0 ? 0 : 1));
      entries.push_back({row, col, Rational(sign * source_sign)});
    }
  }
  return RationalMatrix::from_triplets(target.representatives().size(),
                                       domain.representatives().size(), std::move(entries));
}

std::vector<std::size_t> cohomology_compact(const SimplicialComplex& k) {
  std::vector<RationalMatrix> cochain;
  for (int q = 0; q <= k.dim(); ++q)
    cochain.push_back(compact_cochain_matrix(k, static_cast<std::size_t>(q)));
  return cohomology_dims(cochain);
}

std::vector<std::size_t> relative_cohomology(const SimplicialComplex& k,
                                             const SimplicialComplex& sub) {
  if (!sub.is_subcomplex_of(k)) throw Error(ErrorCode::NotSubcomplex, "pair (K, L) with L not inside K");
  const int top = k.dim();
  if (top < 0) return {};
  // relative basis: simplices of K outside L
  std::vector<std::vector<std::size_t>> rel_index(static_cast<std::size_t>(top) + 2);
  std::vector<std::size_t> rel_count(static_cast<std::size_t>(top) + 2, 0);
  for (std::size_t q = 0; q <= static_cast<std::size_t>(top); ++q) {
    rel_index[q].assign(k.count(q), SIZE_MAX);
    for (std::size_t i = 0; i < k.count(q); ++i)
      if (!sub.contains(k.simplices(q)[i])) rel_index[q][i] = rel_count[q]++;
  }
  std::vector<RationalMatrix> cochain;
  for (std::size_t q = 0; q <= static_cast<std::size_t>(top); ++q) {
    std::vector<Triplet> entries;
    for (std::size_t t = 0; t < k.count(q + 1); ++t) {
      const std::size_t row = rel_index[q + 1][t];
      if (row == SIZE_MAX) continue;
      const Simplex& tau = k.simplices(q + 1)[t];
      for (std::size_t j = 0; j < tau.size(); ++j) {
        const std::size_t col = rel_index[q][*k.index_of(drop(tau, j))];
        if (col != SIZE_MAX) entries.push_back({row, col, Rational(j % 2 ? -1 : 1)});
      }
    }
    cochain.push_back(RationalMatrix::from_triplets(rel_count[q + 1], rel_count[q], std::move(entries)));
  }
  return cohomology_dims(cochain);
}

std::vector<std::vector<std::size_t>> ball_sphere_growth(const WindowBuilder& builder,
                                                         std::span<const std::size_t> radii) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t r : radii) {
    const Window w = builder(r);
    out.push_back(relative_cohomology(w.ball, w.frontier));
  }
  return out;
}

SimplicialComplex complex_from_graph(std::span<const Vertex> vertices,
                                     std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Simplex> cells;
  for (Vertex v : vertices) cells.push_back({v});
  for (auto [a, b] : edges) {
    if (a == b) continue;
    cells.push_back({std::min(a, b), std::max(a, b)});
  }
  return SimplicialComplex::from_simplices(std::move(cells));
}

Window line_window(std::size_t radius) {
  const auto r = static_cast<Vertex>(radius);
  std::vector<Vertex> verts;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = -r; v <= r; ++v) {
    verts.push_back(v);
    if (v < r) edges.emplace_back(v, v + 1);
  }
  const std::vector<Vertex> ends{-r, r};
  return {complex_from_graph(verts, edges), complex_from_graph(ends, {})};
}

Window regular_tree_window(std::size_t degree, std::size_t radius) {
  if (degree < 1) throw Error(ErrorCode::InvalidInput, "tree degree must be at least 1");
  std::vector<Vertex> verts{0};
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> layer{0};
  for (std::size_t depth = 0; depth < radius; ++depth) {
    std::vector<Vertex> next;
    const std::size_t children = depth == 0 ? degree : degree - 1;
    for (Vertex p : layer)
      for (std::size_t c = 0; c < children; ++c) {
        const auto v = static_cast<Vertex>(verts.size());
        verts.push_back(v);
        edges.emplace_back(p, v);
        next.push_back(v);
      }
    layer = std::move(next);
  }
  return {complex_from_graph(verts, edges), complex_from_graph(layer, {})};
}

Window point_window(std::size_t) {
  const std::vector<Vertex> v{0};
  return {complex_from_graph(v, {}), SimplicialComplex()};
}

}  // namespace tdlc
