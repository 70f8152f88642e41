#include <doctest.h>

#include <array>
#include <deque>
#include <map>
#include <random>

#include "fuzz.hpp"
#include "tdlc/error.hpp"
#include "tdlc/graph_of_groups.hpp"

using namespace tdlc;

namespace {

using Ends = std::vector<std::pair<std::size_t, std::size_t>>;
using Map = GraphOfGroups::ElementMap;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

GraphOfGroups edge_of_groups(const FiniteGroup& a, const FiniteGroup& b) {
  const Ends e{{0, 1}};
  return GraphOfGroups(SerreGraph::from_geometric_edges(2, e), {a, b}, {FiniteGroup::trivial()},
                       {Map{b.identity()}, Map{a.identity()}});
}

GraphOfGroups psl2z() { return edge_of_groups(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)); }

GraphOfGroups trivial_loop() {
  const Ends e{{0, 0}};
  return GraphOfGroups(SerreGraph::from_geometric_edges(1, e), {FiniteGroup::trivial()}, {FiniteGroup::trivial()},
                       {Map{0}, Map{0}});
}

GraphOfGroups c4_loop() {
  const Ends e{{0, 0}};
  return GraphOfGroups(SerreGraph::from_geometric_edges(1, e), {FiniteGroup::cyclic(4)}, {FiniteGroup::cyclic(2)},
                       {Map{0, 2}, Map{0, 2}});
}

GraphOfGroups single(std::size_t n) {
  return GraphOfGroups(SerreGraph(1, {}), {FiniteGroup::cyclic(n)}, {}, {});
}

std::vector<std::size_t> bfs_distance(const SerreGraph& g) {
  std::vector<std::size_t> dist(g.num_vertices(), SIZE_MAX);
  std::deque<std::size_t> todo{0};
  dist[0] = 0;
  while (!todo.empty()) {
    const auto v = todo.front();
    todo.pop_front();
    for (auto e : g.star(v))
      if (dist[g.terminus(e)] == SIZE_MAX) {
        dist[g.terminus(e)] = dist[v] + 1;
        todo.push_back(g.terminus(e));
      }
  }
  return dist;
}

PiWord random_element(const FundamentalGroup& pi, std::mt19937_64& rng) {
  const auto& g = pi.graph();
  PiWord w = pi.identity();
  for (std::size_t k = fuzz::uniform(rng, 0, 6); k > 0; --k) {
    if (g.base().num_edges() > 0 && fuzz::uniform(rng, 0, 1)) {
      w = pi.multiply(w, pi.edge_letter(fuzz::uniform(rng, 0, g.base().num_edges() - 1)));
    } else {
      const auto v = fuzz::uniform(rng, 0, g.base().num_vertices() - 1);
      const auto a = static_cast<FiniteGroup::Element>(fuzz::uniform(rng, 0, g.vertex_group(v).order() - 1));
      w = pi.multiply(w, pi.vertex_element(v, a));
    }
  }
  return w;
}

// PSL2(Z) = <S> * <U>, S of order 2 and U = ST of order 3.
using Mat = std::array<std::int64_t, 4>;
Mat mat_mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}
Mat projective(Mat m) {
  const bool flip = m[0] < 0 || (m[0] == 0 && m[1] < 0) || (m[0] == 0 && m[1] == 0 && m[2] < 0);
  if (flip)
    for (auto& x : m) x = -x;
  return m;
}
Mat psl_image(const FundamentalGroup& pi, const PiWord& w) {
  const Mat s{0, -1, 1, 0}, u{0, -1, 1, 1};
  Mat m{1, 0, 0, 1};
  std::size_t at = 0;
  for (const auto& tok : pi.tokens(w)) {
    if (tok.kind == PiToken::Kind::Edge) {
      at = pi.graph().base().terminus(tok.value);
      continue;
    }
    for (std::size_t k = 0; k < tok.value; ++k) m = mat_mul(m, at == 0 ? s : u);
  }
  return projective(m);
}

}  // namespace

TEST_CASE("validation") {
  const auto g = psl2z();
  const auto idx = validate(g).index;
  CHECK(idx == std::vector<std::size_t>{3, 2});
  CHECK(validate(c4_loop()).index == std::vector<std::size_t>{2, 2});

  const auto c2 = FiniteGroup::cyclic(2), c4 = FiniteGroup::cyclic(4);
  CHECK(code_of([&] { embedding_from_images(c2, c4, {{1, 1}}); }) == ErrorCode::NotHomomorphism);
  CHECK(embedding_from_images(c2, c4, {{1, 2}}) == Map{0, 2});
  const Ends loop{{0, 0}};
  CHECK(code_of([&] { GraphOfGroups(SerreGraph::from_geometric_edges(1, loop), {c4}, {c2}, {Map{0, 1}, Map{0, 2}}); }) ==
        ErrorCode::NotHomomorphism);
  CHECK(code_of([&] { GraphOfGroups(SerreGraph::from_geometric_edges(1, loop), {c4}, {c2}, {Map{0, 0}, Map{0, 2}}); }) ==
        ErrorCode::NotInjective);
  CHECK(code_of([&] { GraphOfGroups(SerreGraph(2, {}), {c2, c2}, {}, {}); }) == ErrorCode::Disconnected);
}

TEST_CASE("unimodularity") {
  CHECK(unimodularity_check(psl2z()));
  CHECK(unimodularity_check(c4_loop()));
  const Ends loop{{0, 0}};
  const auto base = SerreGraph::from_geometric_edges(1, loop);
  // ascending HNN datum: indices 2 and 1 around the loop
  const std::vector<Rational> ascending{2, 1}, balanced{2, 2};
  CHECK_FALSE(unimodular_from_indices(base, ascending));
  CHECK(unimodular_from_indices(base, balanced));
  const Ends path{{0, 1}, {1, 2}};
  const std::vector<Rational> any{5, 1, 3, 7};
  CHECK(unimodular_from_indices(SerreGraph::from_geometric_edges(3, path), any));
}

TEST_CASE("euler characteristic examples") {
  CHECK(euler_characteristic(psl2z()) == HaarValue{make_rational(-1, 6), "1"});
  CHECK(euler_characteristic(trivial_loop()) == HaarValue{0, "1"});
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(euler_characteristic(single(n)) == HaarValue{make_rational(1, static_cast<long>(n)), "1"});
  CHECK(euler_characteristic(c4_loop()) == HaarValue{make_rational(-1, 4), "1"});
}

TEST_CASE("automorphism group of a regular tree") {
  CHECK(aut_tree_chi(2) == HaarValue{make_rational(-1, 3), "G_e"});
  CHECK(aut_tree_chi(1).coeff == 0);
  for (long d = 1; d <= 20; ++d) CHECK(aut_tree_chi(static_cast<std::size_t>(d)).coeff == make_rational(1 - d, 1 + d));
}

TEST_CASE("Bass-Serre balls") {
  const auto b = bass_serre_ball(psl2z(), 2);
  CHECK(graph_invariants(b.graph).is_tree);
  CHECK(b.graph.star(0).size() == 2);
  for (std::size_t r = 0; r <= 4; ++r) {
    const auto z = bass_serre_ball(trivial_loop(), r);
    CHECK(z.graph.num_vertices() == 2 * r + 1);
    CHECK(graph_invariants(z.graph).is_tree);
  }
  CHECK(bass_serre_ball(single(5), 3).graph.num_vertices() == 1);
}

TEST_CASE("property: Bass-Serre balls are trees with index-sum degrees") {
  std::mt19937_64 rng(0xba55);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = fuzz::random_graph_of_groups(rng, 3, 1);
    const std::size_t radius = 3;
    const auto b = bass_serre_ball(g, radius);
    CAPTURE(trial);
    REQUIRE(b.graph.num_vertices() < 5000);
    CHECK(graph_invariants(b.graph).is_tree);
    const auto dist = bfs_distance(b.graph);
    for (std::size_t v = 0; v < b.graph.num_vertices(); ++v) {
      if (dist[v] >= radius) continue;
      std::size_t expected = 0;
      for (auto e : g.base().star(b.vertex_type[v])) expected += g.index(g.base().bar(e));
      CHECK(b.graph.star(v).size() == expected);
    }
  }
}

TEST_CASE("property: word arithmetic") {
  std::mt19937_64 rng(0x30d5);
  int words = 0;
  while (words < 10000) {
    const auto g = fuzz::random_graph_of_groups(rng);
    const FundamentalGroup pi(g);
    for (int k = 0; k < 200; ++k, ++words) {
      const auto w = random_element(pi, rng);
      CHECK(pi.end_vertex(w) == 0);
      CHECK(pi.multiply(w, pi.inverse(w)) == pi.identity());
      const auto toks = pi.tokens(w);
      CHECK(pi.reduce(toks) == w);
      if (k % 20 == 0) {
        const auto u = random_element(pi, rng), v = random_element(pi, rng);
        CHECK(pi.multiply(pi.multiply(w, u), v) == pi.multiply(w, pi.multiply(u, v)));
      }
    }
  }
}

TEST_CASE("normal forms in C2 * C3 match PSL2(Z)") {
  const auto g = psl2z();
  const FundamentalGroup pi(g);
  std::mt19937_64 rng(0x9512);
  std::map<Mat, PiWord> seen;
  for (int k = 0; k < 2000; ++k) {
    const auto a = random_element(pi, rng), b = random_element(pi, rng);
    CHECK(psl_image(pi, pi.multiply(a, b)) == projective(mat_mul(psl_image(pi, a), psl_image(pi, b))));
    const auto m = psl_image(pi, a);
    CHECK((m == Mat{1, 0, 0, 1}) == (a == pi.identity()));
    auto [it, fresh] = seen.emplace(m, a);
    if (!fresh) CHECK(it->second == a);
  }
}

TEST_CASE("tree action cohomology examples") {
  const auto dinf = edge_of_groups(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  CHECK(tree_action_cohomology(dinf, Representation::trivial(dinf)) == TreeActionCohomology{1, 0});
  const auto minus = RationalMatrix::from_dense({{-1}});
  const auto sign = representation_from_generators(dinf, 1, {{{1, minus}}, {{1, minus}}}, {});
  CHECK(tree_action_cohomology(dinf, sign) == TreeActionCohomology{0, 1});
  const auto z = trivial_loop();
  CHECK(tree_action_cohomology(z, Representation::trivial(z)) == TreeActionCohomology{1, 1});
  // Z acting on Q by -1: no invariants, and d = -1 - 1 is onto
  const auto flip = representation_from_generators(z, 1, {{}}, {minus});
  CHECK(tree_action_cohomology(z, flip) == TreeActionCohomology{0, 0});
}

TEST_CASE("representation errors") {
  const auto c2 = FiniteGroup::cyclic(2);
  const auto dinf = edge_of_groups(c2, c2);
  const auto two = RationalMatrix::from_dense({{2}});
  CHECK(code_of([&] { representation_from_generators(dinf, 1, {{{1, two}}, {}}, {}); }) == ErrorCode::RelationViolated);

  Representation zero = Representation::trivial(dinf);
  for (auto& per_vertex : zero.vertex)
    for (auto& m : per_vertex) m = RationalMatrix(1, 1);
  CHECK(code_of([&] { validate_representation(dinf, zero); }) == ErrorCode::NotInvertible);

  // S3 loop whose ends are two different transpositions; the identity edge
  // matrix cannot conjugate one permutation matrix into the other.
  const auto s3 = FiniteGroup::symmetric(3);
  FiniteGroup::Element t01 = 0, t12 = 0;
  for (FiniteGroup::Element x = 0; x < s3.order(); ++x) {
    if (s3.permutations()[x] == std::vector<std::uint32_t>{1, 0, 2}) t01 = x;
    if (s3.permutations()[x] == std::vector<std::uint32_t>{0, 2, 1}) t12 = x;
  }
  const Ends loop{{0, 0}};
  const GraphOfGroups twisted(SerreGraph::from_geometric_edges(1, loop), {s3}, {c2},
                              {Map{s3.identity(), t01}, Map{s3.identity(), t12}});
  std::vector<std::pair<FiniteGroup::Element, RationalMatrix>> perm;
  for (FiniteGroup::Element x = 0; x < s3.order(); ++x) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < 3; ++i) t.push_back({s3.permutations()[x][i], i, Rational(1)});
    perm.emplace_back(x, RationalMatrix::from_triplets(3, 3, t));
  }
  CHECK(code_of([&] { representation_from_generators(twisted, 3, {perm}, {RationalMatrix::identity(3)}); }) ==
        ErrorCode::RelationViolated);
}

TEST_CASE("property: trivial coefficients give the cycle rank") {
  std::mt19937_64 rng(0x7ac7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = fuzz::random_graph_of_groups(rng, 4, 3);
    CAPTURE(trial);
    CHECK(tree_action_cohomology(g, Representation::trivial(g)) ==
          TreeActionCohomology{1, graph_invariants(g.base()).h1_dim});
  }
}

TEST_CASE("property: non-compact unimodular graphs have non-positive characteristic") {
  std::mt19937_64 rng(0x3e55);
  int noncompact = 0, attempts = 0;
  while (noncompact < 100) {
    REQUIRE(++attempts < 10000);
    const auto g = fuzz::random_graph_of_groups(rng, 4, 2);
    REQUIRE(unimodularity_check(g));
    const auto chi = euler_characteristic(g);
    const auto reduced = collapse_surjective_edges(g);
    CHECK(euler_characteristic(reduced) == chi);
    if (reduced.base().num_vertices() == 1 && reduced.base().num_edges() == 0) continue;
    ++noncompact;
    CAPTURE(attempts);
    CHECK(chi.coeff <= 0);
  }
}
