#include "tdlc/graph_of_groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "tdlc/error.hpp"

namespace tdlc {

using Element = FiniteGroup::Element;

namespace {

bool connected(const SerreGraph& g) {
  if (g.num_vertices() == 0) return false;
  std::vector<bool> seen(g.num_vertices(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.star(v))
      if (!seen[g.terminus(e)]) {
        seen[g.terminus(e)] = true;
        stack.push_back(g.terminus(e));
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

GraphOfGroups::GraphOfGroups(SerreGraph base, std::vector<FiniteGroup> vertex_groups,
                             std::vector<FiniteGroup> edge_groups, std::vector<ElementMap> embeddings)
    : base_(std::move(base)),
      vertex_groups_(std::move(vertex_groups)),
      edge_groups_(std::move(edge_groups)),
      embeddings_(std::move(embeddings)) {
  if (vertex_groups_.size() != base_.num_vertices())
    throw Error(ErrorCode::InvalidInput, "one vertex group per vertex required");
  const auto pos = base_.positive_edges();
  if (edge_groups_.size() != pos.size())
    throw Error(ErrorCode::InvalidInput, "one edge group per geometric edge required");
  if (embeddings_.size() != base_.num_edges())
    throw Error(ErrorCode::InvalidInput, "one embedding per directed edge required");
  geometric_index_.assign(base_.num_edges(), 0);
  for (std::size_t i = 0; i < pos.size(); ++i) {
    geometric_index_[pos[i]] = i;
    geometric_index_[base_.bar(pos[i])] = i;
  }
  if (!connected(base_)) throw Error(ErrorCode::Disconnected, "the underlying graph is not connected");

  for (std::size_t e = 0; e < base_.num_edges(); ++e) {
    const FiniteGroup& from = edge_group(e);
    const FiniteGroup& to = vertex_group(base_.terminus(e));
    const ElementMap& map = embeddings_[e];
    const std::string name = "edge " + std::to_string(e);
    if (map.size() != from.order()) throw Error(ErrorCode::NotHomomorphism, name + ": map has wrong size");
    for (Element x : map)
      if (x >= to.order()) throw Error(ErrorCode::NotHomomorphism, name + ": image out of range");
    for (Element a = 0; a < from.order(); ++a)
      for (Element b = 0; b < from.order(); ++b)
        if (map[from.mul(a, b)] != to.mul(map[a], map[b]))
          throw Error(ErrorCode::NotHomomorphism, name + ": embedding is not a homomorphism");
    std::vector<bool> hit(to.order(), false);
    for (Element x : map) {
      if (hit[x]) throw Error(ErrorCode::NotInjective, name + ": embedding is not injective");
      hit[x] = true;
    }
  }
}

std::size_t GraphOfGroups::index(std::size_t e) const {
  return vertex_group(base_.terminus(e)).order() / edge_group(e).order();
}

GraphOfGroups::ElementMap embedding_from_images(
    const FiniteGroup& edge_group, const FiniteGroup& vertex_group,
    const std::vector<std::pair<Element, Element>>& images) {
  GraphOfGroups::ElementMap out;
  if (!extend_homomorphism(edge_group, vertex_group, images, out))
    throw Error(ErrorCode::NotHomomorphism, "generator images do not extend to a homomorphism");
  return out;
}

ValidationReport validate(const GraphOfGroups& g) {
  ValidationReport r;
  for (std::size_t e = 0; e < g.base().num_edges(); ++e) r.index.push_back(g.index(e));
  return r;
}

bool unimodular_from_indices(const SerreGraph& base, std::span<const Rational> index) {
  if (index.size() != base.num_edges()) throw Error(ErrorCode::InvalidInput, "one index per directed edge required");
  for (const auto& x : index)
    if (x <= 0) throw Error(ErrorCode::InvalidInput, "indices must be positive");
  // potential phi with phi(t(e)) = phi(o(e)) * ratio(e) along a spanning forest
  std::vector<std::optional<Rational>> phi(base.num_vertices());
  for (std::size_t root = 0; root < base.num_vertices(); ++root) {
    if (phi[root]) continue;
    phi[root] = Rational(1);
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : base.star(v)) {
        const Rational step = *phi[v] * index[e] / index[base.bar(e)];
        auto& target = phi[base.terminus(e)];
        if (!target) {
          target = step;
          queue.push_back(base.terminus(e));
        } else if (*target != step) {
          return false;
        }
      }
    }
  }
  return true;
}

bool unimodularity_check(const GraphOfGroups& g) {
  std::vector<Rational> index;
  for (std::size_t e = 0; e < g.base().num_edges(); ++e) index.emplace_back(g.index(e));
  return unimodular_from_indices(g.base(), index);
}

HaarValue euler_characteristic(const GraphOfGroups& g) {
  if (!unimodularity_check(g)) throw Error(ErrorCode::NotUnimodular, "fundamental group is not unimodular");
  Rational chi = 0;
  for (std::size_t v = 0; v < g.base().num_vertices(); ++v) chi += Rational(1, g.vertex_group(v).order());
  for (std::size_t e : g.base().positive_edges()) chi -= Rational(1, g.edge_group(e).order());
  chi.canonicalize();
  return {chi, "1"};
}

HaarValue aut_tree_chi(std::size_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidInput, "tree valency parameter d must be >= 1");
  const auto dl = static_cast<long>(d);
  return {make_rational(1 - dl, 1 + dl), "G_e"};
}

// ---------------------------------------------------------------------------
// word arithmetic

FundamentalGroup::FundamentalGroup(const GraphOfGroups& g) : g_(&g) {
  const SerreGraph& base = g.base();
  in_tree_.assign(base.num_edges(), false);
  tree_path_.assign(base.num_vertices(), {});
  std::vector<bool> seen(base.num_vertices(), false);
  seen[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : base.star(v)) {
      const std::size_t w = base.terminus(e);
      if (seen[w]) continue;
      seen[w] = true;
      in_tree_[e] = in_tree_[base.bar(e)] = true;
      tree_path_[w] = tree_path_[v];
      tree_path_[w].push_back(e);
      queue.push_back(w);
    }
  }

  image_.resize(base.num_edges());
  preimage_.resize(base.num_edges());
  transversal_.resize(base.num_edges());
  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    const FiniteGroup& target = g.vertex_group(base.terminus(e));
    image_[e].assign(target.order(), false);
    preimage_[e].assign(target.order(), 0);
    const auto& map = g.embedding(e);
    for (Element a = 0; a < map.size(); ++a) {
      image_[e][map[a]] = true;
      preimage_[e][map[a]] = a;
    }
  }
  for (std::size_t e = 0; e < base.num_edges(); ++e) {
    // cosets of iota_{bar e}(A_e) inside A_{o(e)}
    const FiniteGroup& vg = g.vertex_group(base.origin(e));
    const auto& in_h = image_[base.bar(e)];
    std::vector<Element> reps;
    for (Element a = 0; a < vg.order(); ++a) reps.push_back(vg.left_coset_rep(a, in_h));
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    transversal_[e] = std::move(reps);
  }
}

std::size_t FundamentalGroup::end_vertex(const PiWord& w) const {
  return w.syllables.empty() ? 0 : g_->base().terminus(w.syllables.back().edge);
}

PiWord FundamentalGroup::identity() const { return {{}, g_->vertex_group(0).identity()}; }

PiWord FundamentalGroup::reduce(std::span<const PiToken> tokens, std::size_t start) const {
  const SerreGraph& base = g_->base();
  PiWord w;
  std::size_t v = start;
  Element pending = g_->vertex_group(v).identity();
  for (const PiToken& tok : tokens) {
    if (tok.kind == PiToken::Kind::Element) {
      const FiniteGroup& gv = g_->vertex_group(v);
      if (tok.value >= gv.order()) throw Error(ErrorCode::InvalidInput, "element not in the current vertex group");
      pending = gv.mul(pending, static_cast<Element>(tok.value));
      continue;
    }
    const std::size_t e = tok.value;
    if (e >= base.num_edges() || base.origin(e) != v)
      throw Error(ErrorCode::InvalidInput, "edge letter does not continue the path");
    const std::size_t eb = base.bar(e);
    if (!w.syllables.empty() && w.syllables.back().edge == eb && image_[eb][pending]) {
      // t' e' iota_{e'}(c) e = t' iota_{bar e'}(c), with e' = bar e
      const Element c = preimage_[eb][pending];
      const PiWord::Syllable top = w.syllables.back();
      w.syllables.pop_back();
      v = base.origin(top.edge);
      pending = g_->vertex_group(v).mul(top.transversal, g_->embedding(e)[c]);
      continue;
    }
    // pending = t iota_{bar e}(c)  =>  pending e = t e iota_e(c)
    const FiniteGroup& gv = g_->vertex_group(v);
    const Element t = gv.left_coset_rep(pending, image_[eb]);
    const Element c = preimage_[eb][gv.mul(gv.inv(t), pending)];
    w.syllables.push_back({t, e});
    v = base.terminus(e);
    pending = g_->embedding(e)[c];
  }
  w.tail = pending;
  return w;
}

std::vector<PiToken> FundamentalGroup::tokens(const PiWord& w) const {
  std::vector<PiToken> out;
  for (const auto& s : w.syllables) {
    out.push_back({PiToken::Kind::Element, s.transversal});
    out.push_back({PiToken::Kind::Edge, s.edge});
  }
  out.push_back({PiToken::Kind::Element, w.tail});
  return out;
}

PiWord FundamentalGroup::multiply(const PiWord& a, const PiWord& b) const {
  if (end_vertex(a) != 0 || end_vertex(b) != 0)
    throw Error(ErrorCode::InvalidInput, "multiply expects closed words at the base vertex");
  auto toks = tokens(a);
  const auto tb = tokens(b);
  toks.insert(toks.end(), tb.begin(), tb.end());
  return reduce(toks);
}

PiWord FundamentalGroup::inverse(const PiWord& a) const {
  const SerreGraph& base = g_->base();
  std::vector<PiToken> toks;
  std::size_t v = end_vertex(a);
  toks.push_back({PiToken::Kind::Element, g_->vertex_group(v).inv(a.tail)});
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it) {
    toks.push_back({PiToken::Kind::Edge, base.bar(it->edge)});
    v = base.origin(it->edge);
    toks.push_back({PiToken::Kind::Element, g_->vertex_group(v).inv(it->transversal)});
  }
  return reduce(toks, end_vertex(a));
}

PiWord FundamentalGroup::vertex_element(std::size_t v, Element a) const {
  const SerreGraph& base = g_->base();
  std::vector<PiToken> toks;
  for (std::size_t e : tree_path_.at(v)) toks.push_back({PiToken::Kind::Edge, e});
  toks.push_back({PiToken::Kind::Element, a});
  for (auto it = tree_path_[v].rbegin(); it != tree_path_[v].rend(); ++it)
    toks.push_back({PiToken::Kind::Edge, base.bar(*it)});
  return reduce(toks);
}

PiWord FundamentalGroup::edge_letter(std::size_t e) const {
  const SerreGraph& base = g_->base();
  std::vector<PiToken> toks;
  for (std::size_t f : tree_path_.at(base.origin(e))) toks.push_back({PiToken::Kind::Edge, f});
  toks.push_back({PiToken::Kind::Edge, e});
  const auto& back = tree_path_.at(base.terminus(e));
  for (auto it = back.rbegin(); it != back.rend(); ++it) toks.push_back({PiToken::Kind::Edge, base.bar(*it)});
  return reduce(toks);
}

BassSerreBall bass_serre_ball(const GraphOfGroups& g, std::size_t radius) {
  const FundamentalGroup pi(g);
  const SerreGraph& base = g.base();
  BassSerreBall ball;
  ball.words.push_back({});
  ball.vertex_type.push_back(0);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < ball.words.size(); ++i) {
    if (ball.words[i].size() == radius) continue;
    const std::size_t v = ball.vertex_type[i];
    for (std::size_t e : base.star(v))
      for (Element t : pi.transversal(e)) {
        const auto& w = ball.words[i];
        // stepping back to the parent
        if (!w.empty() && w.back().edge == base.bar(e) && t == g.vertex_group(v).identity()) continue;
        auto child = w;
        child.push_back({t, e});
        edges.emplace_back(i, ball.words.size());
        ball.words.push_back(std::move(child));
        ball.vertex_type.push_back(base.terminus(e));
      }
  }
  ball.graph = SerreGraph::from_geometric_edges(ball.words.size(), edges);
  return ball;
}

// ---------------------------------------------------------------------------
// representations

namespace {

RationalMatrix stack_minus_identity(const std::vector<const RationalMatrix*>& mats, std::size_t dim) {
  std::vector<Triplet> entries;
  std::size_t offset = 0;
  for (const RationalMatrix* m : mats) {
    for (std::size_t r = 0; r < dim; ++r) {
      for (const auto& [c, v] : m->row(r)) entries.push_back({offset + r, c, v});
      entries.push_back({offset + r, r, Rational(-1)});
    }
    offset += dim;
  }
  return RationalMatrix::from_triplets(offset, dim, std::move(entries));
}

void check_square(const RationalMatrix& m, std::size_t dim, const std::string& what) {
  if (m.rows() != dim || m.cols() != dim)
    throw Error(ErrorCode::InvalidInput, what + " has the wrong shape");
}

}  // namespace

Representation Representation::trivial(const GraphOfGroups& g, std::size_t dim) {
  Representation rho;
  rho.dim = dim;
  for (std::size_t v = 0; v < g.base().num_vertices(); ++v)
    rho.vertex.emplace_back(g.vertex_group(v).order(), RationalMatrix::identity(dim));
  rho.edge.assign(g.base().positive_edges().size(), RationalMatrix::identity(dim));
  return rho;
}

Representation representation_from_generators(
    const GraphOfGroups& g, std::size_t dim,
    const std::vector<std::vector<std::pair<Element, RationalMatrix>>>& vertex_generators,
    const std::vector<RationalMatrix>& edge_matrices) {
  const std::size_t nv = g.base().num_vertices();
  if (vertex_generators.size() != nv) throw Error(ErrorCode::InvalidInput, "generator list per vertex required");
  Representation rho;
  rho.dim = dim;
  for (std::size_t v = 0; v < nv; ++v) {
    const FiniteGroup& gv = g.vertex_group(v);
    std::vector<std::optional<RationalMatrix>> mats(gv.order());
    mats[gv.identity()] = RationalMatrix::identity(dim);
    for (const auto& [a, m] : vertex_generators[v]) check_square(m, dim, "vertex matrix");
    std::vector<Element> frontier{gv.identity()};
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (const auto& [a, m] : vertex_generators[v]) {
        if (a >= gv.order()) throw Error(ErrorCode::InvalidInput, "vertex element out of range");
        const Element x = gv.mul(frontier[i], a);
        RationalMatrix prod = *mats[frontier[i]] * m;
        if (!mats[x]) {
          mats[x] = std::move(prod);
          frontier.push_back(x);
        } else if (!(*mats[x] == prod)) {
          throw Error(ErrorCode::RelationViolated,
                      "vertex " + std::to_string(v) + ": matrices violate the group law");
        }
      }
    std::vector<RationalMatrix> full;
    for (Element a = 0; a < gv.order(); ++a) {
      if (!mats[a])
        throw Error(ErrorCode::InvalidInput, "vertex " + std::to_string(v) + ": given elements do not generate");
      full.push_back(*mats[a]);
    }
    rho.vertex.push_back(std::move(full));
  }
  const std::size_t ne = g.base().positive_edges().size();
  if (edge_matrices.size() > ne) throw Error(ErrorCode::InvalidInput, "too many edge matrices");
  rho.edge = edge_matrices;
  rho.edge.resize(ne, RationalMatrix::identity(dim));
  validate_representation(g, rho);
  return rho;
}

void validate_representation(const GraphOfGroups& g, const Representation& rho) {
  const SerreGraph& base = g.base();
  const std::size_t dim = rho.dim;
  if (rho.vertex.size() != base.num_vertices()) throw Error(ErrorCode::InvalidInput, "missing vertex matrices");
  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    const FiniteGroup& gv = g.vertex_group(v);
    if (rho.vertex[v].size() != gv.order()) throw Error(ErrorCode::InvalidInput, "missing vertex matrices");
    for (Element a = 0; a < gv.order(); ++a) {
      check_square(rho.vertex[v][a], dim, "vertex matrix");
      if (rank(rho.vertex[v][a]) != dim)
        throw Error(ErrorCode::NotInvertible,
                    "vertex " + std::to_string(v) + ", element " + std::to_string(a) + ": matrix is singular");
    }
    for (Element a = 0; a < gv.order(); ++a)
      for (Element b = 0; b < gv.order(); ++b)
        if (!(rho.vertex[v][a] * rho.vertex[v][b] == rho.vertex[v][gv.mul(a, b)]))
          throw Error(ErrorCode::RelationViolated,
                      "vertex " + std::to_string(v) + ": rho(a) rho(b) != rho(ab)");
  }
  const auto pos = base.positive_edges();
  const FundamentalGroup pi(g);
  if (rho.edge.size() != pos.size()) throw Error(ErrorCode::InvalidInput, "missing edge matrices");
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const std::size_t e = pos[i];
    const RationalMatrix& m = rho.edge[i];
    check_square(m, dim, "edge matrix");
    if (rank(m) != dim) throw Error(ErrorCode::NotInvertible, "edge " + std::to_string(e) + ": letter is singular");
    if (pi.is_tree_edge(e) && !(m == RationalMatrix::identity(dim)))
      throw Error(ErrorCode::RelationViolated,
                  "edge " + std::to_string(e) + " lies in the maximal tree and must act trivially");
    const std::size_t eb = base.bar(e);
    const auto& rt = rho.vertex[base.terminus(e)];
    const auto& ro = rho.vertex[base.origin(e)];
    for (Element a = 0; a < g.edge_group(e).order(); ++a)
      if (!(m * rt[g.embedding(e)[a]] == ro[g.embedding(eb)[a]] * m))
        throw Error(ErrorCode::RelationViolated,
                    "edge " + std::to_string(e) + ": e iota_e(a) e^-1 != iota_ebar(a)");
  }
}

TreeActionCohomology tree_action_cohomology(const GraphOfGroups& g, const Representation& rho) {
  validate_representation(g, rho);
  const SerreGraph& base = g.base();
  const std::size_t dim = rho.dim;
  const auto pos = base.positive_edges();

  std::vector<std::vector<RationalVector>> fixed(base.num_vertices());
  for (std::size_t v = 0; v < base.num_vertices(); ++v) {
    std::vector<const RationalMatrix*> mats;
    for (const auto& m : rho.vertex[v]) mats.push_back(&m);
    fixed[v] = kernel_basis(stack_minus_identity(mats, dim));
  }

  std::size_t edge_fixed_total = 0;
  for (std::size_t e : pos) {
    // stabilizer of the edge 1.[e] is iota_{bar e}(A_e) inside A_{o(e)}
    std::vector<const RationalMatrix*> mats;
    for (Element x : g.embedding(base.bar(e))) mats.push_back(&rho.vertex[base.origin(e)][x]);
    edge_fixed_total += kernel_basis(stack_minus_identity(mats, dim)).size();
  }

  std::vector<Triplet> entries;
  std::size_t col = 0;
  for (std::size_t v = 0; v < base.num_vertices(); ++v)
    for (const auto& b : fixed[v]) {
      for (std::size_t i = 0; i < pos.size(); ++i) {
        const std::size_t e = pos[i];
        if (base.terminus(e) == v) {
          const RationalVector img = rho.edge[i].apply(b);
          for (std::size_t r = 0; r < dim; ++r)
            if (img[r] != 0) entries.push_back({i * dim + r, col, img[r]});
        }
        if (base.origin(e) == v)
          for (std::size_t r = 0; r < dim; ++r)
            if (b[r] != 0) entries.push_back({i * dim + r, col, -b[r]});
      }
      ++col;
    }
  const RationalMatrix delta = RationalMatrix::from_triplets(pos.size() * dim, col, std::move(entries));
  const std::size_t r = rank(delta);
  return {col - r, edge_fixed_total - r};
}

GraphOfGroups collapse_surjective_edges(const GraphOfGroups& input) {
  GraphOfGroups g = input;
  for (;;) {
    const SerreGraph& base = g.base();
    std::optional<std::size_t> hit;
    for (std::size_t e = 0; e < base.num_edges() && !hit; ++e)
      if (base.origin(e) != base.terminus(e) && g.index(e) == 1) hit = e;
    if (!hit) return g;

    const std::size_t e = *hit, eb = base.bar(e);
    const std::size_t keep = base.origin(e), gone = base.terminus(e);
    // iota_e is onto A_gone: identify A_gone with A_keep via iota_ebar o iota_e^{-1}
    std::vector<Element> transport(g.vertex_group(gone).order());
    for (Element a = 0; a < g.embedding(e).size(); ++a) transport[g.embedding(e)[a]] = g.embedding(eb)[a];

    std::vector<std::size_t> vmap(base.num_vertices());
    std::size_t next = 0;
    for (std::size_t v = 0; v < base.num_vertices(); ++v)
      if (v != gone) vmap[v] = next++;
    vmap[gone] = vmap[keep];

    std::vector<FiniteGroup> vgroups;
    for (std::size_t v = 0; v < base.num_vertices(); ++v)
      if (v != gone) vgroups.push_back(g.vertex_group(v));

    std::vector<SerreGraph::Edge> edges;
    std::vector<FiniteGroup> egroups;
    std::vector<GraphOfGroups::ElementMap> emaps;
    std::vector<std::size_t> emap_old(base.num_edges(), SIZE_MAX);
    for (std::size_t f = 0; f < base.num_edges(); ++f)
      if (f != e && f != eb) emap_old[f] = edges.size(), edges.push_back({});
    for (std::size_t f = 0; f < base.num_edges(); ++f) {
      if (emap_old[f] == SIZE_MAX) continue;
      edges[emap_old[f]] = {vmap[base.origin(f)], vmap[base.terminus(f)], emap_old[base.bar(f)]};
      auto map = g.embedding(f);
      if (base.terminus(f) == gone)
        for (auto& x : map) x = transport[x];
      emaps.push_back(std::move(map));
    }
    SerreGraph nb(next, std::move(edges));
    for (std::size_t f : nb.positive_edges()) {
      std::size_t old = 0;
      for (std::size_t k = 0; k < base.num_edges(); ++k)
        if (emap_old[k] == f) old = k;
      egroups.push_back(g.edge_group(old));
    }
    g = GraphOfGroups(std::move(nb), std::move(vgroups), std::move(egroups), std::move(emaps));
  }
}

}  // namespace tdlc
