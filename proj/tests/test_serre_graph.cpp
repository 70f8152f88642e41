#include <doctest.h>

#include <random>
#include <set>

#include "fuzz.hpp"
#include "oracles.hpp"
#include "tdlc/error.hpp"
#include "tdlc/serre_graph.hpp"

using namespace tdlc;

namespace {

using Ends = std::vector<std::pair<std::size_t, std::size_t>>;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

FiniteGroup::Element find_perm(const FiniteGroup& g, const std::vector<std::uint32_t>& p) {
  for (FiniteGroup::Element x = 0; x < g.order(); ++x)
    if (g.permutations()[x] == p) return x;
  FAIL("permutation not found");
  return 0;
}

std::vector<GroupElement> wrap(const std::vector<FiniteGroup::Element>& xs) {
  std::vector<GroupElement> out;
  for (auto x : xs) out.push_back({static_cast<std::int64_t>(x)});
  return out;
}

}  // namespace

TEST_CASE("inversion axioms are enforced") {
  CHECK(code_of([] { SerreGraph(1, {{0, 0, 0}}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { SerreGraph(2, {{0, 1, 1}, {0, 1, 0}}); }) == ErrorCode::InvalidInput);
  CHECK_NOTHROW(SerreGraph(2, {{0, 1, 1}, {1, 0, 0}}));
}

TEST_CASE("edge boundary examples") {
  const Ends one{{0, 1}};
  const auto d = edge_boundary(SerreGraph::from_geometric_edges(2, one));
  CHECK(d.at(0, 0) == -1);
  CHECK(d.at(1, 0) == 1);

  const Ends loop{{0, 0}};
  CHECK(edge_boundary(SerreGraph::from_geometric_edges(1, loop)).is_zero());

  const Ends tri{{0, 1}, {1, 2}, {2, 0}};
  CHECK(rank(edge_boundary(SerreGraph::from_geometric_edges(3, tri))) == 2);
}

TEST_CASE("graph invariants examples") {
  const Ends path{{0, 1}, {1, 2}};
  CHECK(graph_invariants(SerreGraph::from_geometric_edges(3, path)) == GraphInvariants{0, 1, true});
  const Ends loop{{0, 0}};
  CHECK(graph_invariants(SerreGraph::from_geometric_edges(1, loop)) == GraphInvariants{1, 1, false});
  const Ends two{{0, 1}, {2, 3}};
  CHECK(graph_invariants(SerreGraph::from_geometric_edges(4, two)) == GraphInvariants{0, 2, false});
  CHECK_FALSE(SerreGraph::from_geometric_edges(1, loop).is_combinatorial());
  CHECK(SerreGraph::from_geometric_edges(3, path).is_combinatorial());
}

TEST_CASE("dot export names every vertex") {
  const Ends path{{0, 1}};
  const auto dot = to_dot(SerreGraph::from_geometric_edges(2, path));
  CHECK(dot.find("0") != std::string::npos);
  CHECK(dot.find("1") != std::string::npos);
}

TEST_CASE("property: tree criterion against a union-find oracle") {
  std::mt19937_64 rng(0x5e22e);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = fuzz::uniform(rng, 1, 8);
    const std::size_t m = fuzz::uniform(rng, 0, 10);
    Ends ends;
    for (std::size_t i = 0; i < m; ++i) ends.emplace_back(fuzz::uniform(rng, 0, n - 1), fuzz::uniform(rng, 0, n - 1));
    const auto g = SerreGraph::from_geometric_edges(n, ends);
    const auto inv = graph_invariants(g);
    const oracle::Forest forest(n, ends);
    CAPTURE(trial);
    CHECK(inv.is_tree == forest.is_tree());
    CHECK(inv.components == forest.components);
    CHECK(inv.h1_dim + n == m + inv.components);
    CHECK(rank(edge_boundary(g)) + inv.h1_dim == g.num_geometric_edges());
  }
}

TEST_CASE("rough Cayley graph of S3") {
  const auto s3 = FiniteGroup::symmetric(3);
  const auto t12 = find_perm(s3, {1, 0, 2});
  const auto c = find_perm(s3, {1, 2, 0});
  const auto c2 = s3.inv(c);
  const FiniteGroupOracle oracle(s3, {t12});
  const auto gens = wrap({c, c2});
  const auto ball = rough_cayley_ball(oracle, gens, 2);
  CHECK(ball.graph.num_vertices() == 3);
  CHECK(graph_invariants(ball.graph).components == 1);
  CHECK(ball.graph.is_combinatorial());
  CHECK(connectivity_equals_generation(oracle, gens).agrees());
  CHECK(connectivity_equals_generation(oracle, gens).generates);

  const FiniteGroupOracle rot(s3, {c});
  const std::vector<GroupElement> none;
  const auto w = connectivity_equals_generation(rot, none);
  CHECK(w.agrees());
  CHECK_FALSE(w.generates);
  CHECK(rough_cayley_ball(rot, none, 3).graph.num_vertices() == 1);
}

TEST_CASE("rough Cayley graph of the integers") {
  const IntegerOracle z;
  const std::vector<GroupElement> gens{{1}, {-1}};
  for (std::size_t r = 0; r <= 5; ++r) {
    const auto ball = rough_cayley_ball(z, gens, r);
    CHECK(ball.graph.num_vertices() == 2 * r + 1);
    CHECK(graph_invariants(ball.graph).is_tree);
    CHECK(*std::max_element(ball.distance.begin(), ball.distance.end()) == r);
  }
  const std::vector<GroupElement> lopsided{{1}};
  CHECK(code_of([&] { rough_cayley_ball(z, lopsided, 2); }) == ErrorCode::NotSymmetric);
  const std::vector<GroupElement> trivial{{0}};
  CHECK(code_of([&] { rough_cayley_ball(z, trivial, 2); }) == ErrorCode::GeneratorInO);
}

TEST_CASE("property: rough Cayley connectivity and local finiteness") {
  const std::vector<FiniteGroup> groups{FiniteGroup::symmetric(3), FiniteGroup::symmetric(4), FiniteGroup::symmetric(5),
                                        FiniteGroup::alternating(4), FiniteGroup::alternating(5),
                                        FiniteGroup::dihedral(6), FiniteGroup::cyclic(12), FiniteGroup::preset("V4")};
  std::mt19937_64 rng(0xca1e7);
  int instances = 0;
  while (instances < 50) {
    const auto& g = groups[fuzz::uniform(rng, 0, groups.size() - 1)];
    REQUIRE(g.order() <= 120);
    std::vector<FiniteGroup::Element> ogens;
    for (std::size_t i = fuzz::uniform(rng, 0, 2); i > 0; --i) ogens.push_back(static_cast<FiniteGroup::Element>(fuzz::uniform(rng, 0, g.order() - 1)));
    const FiniteGroupOracle oracle(g, ogens);
    const auto o = g.subgroup(ogens);
    std::vector<FiniteGroup::Element> s;
    for (std::size_t i = fuzz::uniform(rng, 0, 2); i > 0; --i) {
      const auto x = static_cast<FiniteGroup::Element>(fuzz::uniform(rng, 0, g.order() - 1));
      if (std::binary_search(o.begin(), o.end(), x)) continue;
      s.push_back(x);
      s.push_back(g.inv(x));
    }
    ++instances;
    const auto gens = wrap(s);
    const std::size_t cosets = g.order() / o.size();
    const auto ball = rough_cayley_ball(oracle, gens, cosets);

    std::vector<FiniteGroup::Element> all = ogens;
    all.insert(all.end(), s.begin(), s.end());
    const bool generates = oracle::generated_order(g, all) == g.order();
    const bool connected = ball.graph.num_vertices() == cosets;
    CAPTURE(g.name());
    CHECK(connected == generates);
    const auto witness = connectivity_equals_generation(oracle, gens);
    CHECK(witness.generates == generates);
    CHECK(witness.graph_connected == connected);
    CHECK(ball.graph.is_combinatorial());

    // deg <= sum_s |OsO / O|
    std::size_t bound = 0;
    for (auto x : s) {
      std::set<GroupElement> cs;
      for (auto w : o) cs.insert(oracle.coset_canon({g.mul(w, x)}));
      bound += cs.size();
    }
    for (std::size_t v = 0; v < ball.graph.num_vertices(); ++v) CHECK(ball.graph.star(v).size() <= bound);
  }
}
