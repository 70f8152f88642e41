#pragma once

// Seeded generators shared by the property suites.

#include <algorithm>
#include <random>
#include <vector>

#include "tdlc/finite_group.hpp"
#include "tdlc/graph_of_groups.hpp"
#include "tdlc/simplicial.hpp"

namespace fuzz {

using tdlc::FiniteGroup;

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::size_t element_order(const FiniteGroup& g, FiniteGroup::Element x) {
  std::size_t n = 1;
  for (auto y = x; y != g.identity(); y = g.mul(y, x)) ++n;
  return n;
}

/// Random subsets of {0..n-1} closed downwards.
inline tdlc::SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_dim = 3) {
  const std::size_t n = uniform(rng, 1, max_vertices);
  const std::size_t facets = uniform(rng, 1, 6);
  std::vector<tdlc::Simplex> maximal;
  for (std::size_t f = 0; f < facets; ++f) {
    std::vector<tdlc::Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<tdlc::Vertex>(i);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(uniform(rng, 1, std::min(n, max_dim + 1)));
    std::sort(all.begin(), all.end());
    maximal.push_back(all);
  }
  return tdlc::SimplicialComplex::from_maximal(maximal);
}

inline const std::vector<FiniteGroup>& group_pool() {
  static const std::vector<FiniteGroup> pool = {
      FiniteGroup::trivial(),     FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),  FiniteGroup::cyclic(4),
      FiniteGroup::cyclic(6),     FiniteGroup::preset("V4"), FiniteGroup::symmetric(3), FiniteGroup::dihedral(4),
      FiniteGroup::alternating(4)};
  return pool;
}

/// Embeds C_d into g by k -> x^k for an element x of order d.
inline tdlc::GraphOfGroups::ElementMap cyclic_embedding(const FiniteGroup& g, FiniteGroup::Element x, std::size_t d) {
  tdlc::GraphOfGroups::ElementMap map(d);
  auto y = g.identity();
  for (std::size_t k = 0; k < d; ++k) {
    map[k] = y;
    y = g.mul(y, x);
  }
  return map;
}

/// Connected graph of finite groups with cyclic edge groups.
inline tdlc::GraphOfGroups random_graph_of_groups(std::mt19937_64& rng, std::size_t max_vertices = 4,
                                                  std::size_t max_extra_edges = 2) {
  const auto& pool = group_pool();
  const std::size_t nv = uniform(rng, 1, max_vertices);
  std::vector<FiniteGroup> vg;
  for (std::size_t v = 0; v < nv; ++v) vg.push_back(pool[uniform(rng, 0, pool.size() - 1)]);

  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t v = 1; v < nv; ++v) ends.emplace_back(uniform(rng, 0, v - 1), v);
  const std::size_t extra = uniform(rng, 0, max_extra_edges);
  for (std::size_t i = 0; i < extra; ++i) ends.emplace_back(uniform(rng, 0, nv - 1), uniform(rng, 0, nv - 1));

  std::vector<FiniteGroup> eg;
  std::vector<tdlc::GraphOfGroups::ElementMap> maps;
  for (auto [a, b] : ends) {
    // pick d among element orders common to both endpoint groups
    std::vector<std::pair<FiniteGroup::Element, FiniteGroup::Element>> choices;
    for (FiniteGroup::Element x = 0; x < vg[a].order(); ++x)
      for (FiniteGroup::Element y = 0; y < vg[b].order(); ++y)
        if (element_order(vg[a], x) == element_order(vg[b], y)) choices.emplace_back(x, y);
    const auto [x, y] = choices[uniform(rng, 0, choices.size() - 1)];
    const std::size_t d = element_order(vg[a], x);
    eg.push_back(FiniteGroup::cyclic(d));
    maps.push_back(cyclic_embedding(vg[b], y, d));
    maps.push_back(cyclic_embedding(vg[a], x, d));
  }
  return tdlc::GraphOfGroups(tdlc::SerreGraph::from_geometric_edges(nv, ends), std::move(vg), std::move(eg),
                             std::move(maps));
}

}  // namespace fuzz
