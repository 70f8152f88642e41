#include <doctest.h>

#include <random>

#include "fuzz.hpp"
#include "tdlc/error.hpp"
#include "tdlc/simplicial.hpp"

using namespace tdlc;

namespace {

SimplicialComplex triangle_boundary() { return SimplicialComplex::from_maximal({{0, 1}, {1, 2}, {0, 2}}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

long euler_by_cells(const SimplicialComplex& k) {
  long chi = 0;
  for (int q = 0; q <= k.dim(); ++q) chi += (q % 2 ? -1 : 1) * static_cast<long>(k.count(static_cast<std::size_t>(q)));
  return chi;
}

long alternating(const std::vector<std::size_t>& dims) {
  long chi = 0;
  for (std::size_t q = 0; q < dims.size(); ++q) chi += (q % 2 ? -1 : 1) * static_cast<long>(dims[q]);
  return chi;
}

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(SimplicialComplex::from_simplices({{0}, {1}, {0, 1}}));
  CHECK(code_of([] { SimplicialComplex::from_simplices({{0, 1}}); }) == ErrorCode::NotClosed);
  const auto full4 = SimplicialComplex::full({0, 1, 2, 3});
  CHECK(full4.dim() == 3);
  CHECK(full4.total_count() == 15);
}

TEST_CASE("oriented simplex sorting sign") {
  const auto a = OrientedSimplex::from_sequence({2, 0, 1});
  CHECK(a.vertices == Simplex{0, 1, 2});
  CHECK(a.sign == 1);
  CHECK(OrientedSimplex::from_sequence({1, 0}).sign == -1);
  CHECK(OrientedSimplex::from_sequence({1, 1}).sign == 0);
}

TEST_CASE("boundary matrix columns") {
  const auto edge = SimplicialComplex::from_maximal({{0, 1}});
  const auto d1 = boundary_matrix(edge, 1);
  CHECK(d1.at(0, 0) == -1);
  CHECK(d1.at(1, 0) == 1);

  const auto tri = SimplicialComplex::from_maximal({{0, 1, 2}});
  const auto d2 = boundary_matrix(tri, 2);
  // faces in order {0,1}, {0,2}, {1,2}
  CHECK(d2.at(*tri.index_of({1, 2}), 0) == 1);
  CHECK(d2.at(*tri.index_of({0, 2}), 0) == -1);
  CHECK(d2.at(*tri.index_of({0, 1}), 0) == 1);

  CHECK(code_of([&] { boundary_matrix(tri, 3); }) == ErrorCode::DegreeOutOfRange);
  CHECK(code_of([&] { boundary_matrix(tri, 0); }) == ErrorCode::DegreeOutOfRange);
}

TEST_CASE("homology examples") {
  CHECK(homology(SimplicialComplex::full({0, 1, 2, 3, 4})) == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(homology(triangle_boundary()) == std::vector<std::size_t>{1, 1});
  CHECK(homology(SimplicialComplex::from_maximal({{0}, {1}})) == std::vector<std::size_t>{2});
  CHECK(homology(SimplicialComplex::from_maximal({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})) ==
        std::vector<std::size_t>{1, 0, 1});
}

TEST_CASE("compact cochains on an edge") {
  const auto edge = SimplicialComplex::from_maximal({{0, 1}});
  const auto d0 = compact_cochain_matrix(edge, 0);
  REQUIRE(d0.rows() == 1);
  REQUIRE(d0.cols() == 2);
  CHECK(d0.at(0, 0) == -1);
  CHECK(d0.at(0, 1) == 1);
  const auto top = compact_cochain_matrix(edge, 1);
  CHECK(top.rows() == 0);
  CHECK(top.cols() == 1);
}

TEST_CASE("compact cohomology examples") {
  CHECK(cohomology_compact(SimplicialComplex::from_maximal({{7}})) == std::vector<std::size_t>{1});
  CHECK(cohomology_compact(triangle_boundary()) == std::vector<std::size_t>{1, 1});
  CHECK(cohomology_compact(SimplicialComplex::full({0, 1, 2})) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("signed sets") {
  CHECK(code_of([] { SignedSet({0, 1}); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { SignedSet({1, 2, 0}); }) == ErrorCode::InvalidInput);
  const SignedSet s({3, 2, 1, 0});
  CHECK(s.representatives() == std::vector<std::size_t>{0, 1});
  CHECK(s.coordinate(3) == std::pair<std::size_t, int>{0, -1});
  CHECK(s.evaluate(0, 3) == -1);
  CHECK(s.evaluate(0, 1) == 0);
}

TEST_CASE("property: chain and cochain identities on random complexes") {
  std::mt19937_64 rng(0x5eed01);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = fuzz::random_complex(rng, 8, 4);
    CAPTURE(trial);
    for (int q = 1; q < k.dim(); ++q) {
      const auto dd = boundary_matrix(k, static_cast<std::size_t>(q)) * boundary_matrix(k, static_cast<std::size_t>(q + 1));
      CHECK(dd.is_zero());
    }
    for (int q = 0; q + 1 <= k.dim(); ++q) {
      const auto uq = static_cast<std::size_t>(q);
      const auto delta = compact_cochain_matrix(k, uq);
      const auto d = boundary_matrix(k, uq + 1);
      CHECK(delta == d.transpose());
      CHECK(delta == signed_adjoint(d, oriented_signed_set(k, uq + 1), oriented_signed_set(k, uq)));
      if (q + 2 <= k.dim()) CHECK((compact_cochain_matrix(k, uq + 1) * delta).is_zero());
    }
    const auto h = homology(k);
    CHECK(alternating(h) == euler_by_cells(k));
    CHECK(cohomology_compact(k) == h);
  }
}

TEST_CASE("property: full complexes are acyclic") {
  for (Vertex n = 1; n <= 6; ++n) {
    std::vector<Vertex> xs;
    for (Vertex i = 0; i < n; ++i) xs.push_back(10 * i);
    std::vector<std::size_t> point(static_cast<std::size_t>(n), 0);
    point[0] = 1;
    CHECK(homology(SimplicialComplex::full(xs)) == point);
  }
}

TEST_CASE("relative cohomology") {
  const auto path = SimplicialComplex::from_maximal({{0, 1}, {1, 2}});
  CHECK(relative_cohomology(path, path) == std::vector<std::size_t>{0, 0});
  CHECK(relative_cohomology(path, SimplicialComplex::from_maximal({{0}, {2}})) == std::vector<std::size_t>{0, 1});
  CHECK(relative_cohomology(path, SimplicialComplex{}) == std::vector<std::size_t>{1, 0});
  CHECK(code_of([&] { relative_cohomology(path, SimplicialComplex::from_maximal({{0, 2}})); }) ==
        ErrorCode::NotSubcomplex);

  const auto disk = SimplicialComplex::full({0, 1, 2});
  CHECK(relative_cohomology(disk, triangle_boundary()) == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("windows") {
  const std::vector<std::size_t> radii{1, 2, 3, 4, 5, 6};
  const auto tree = ball_sphere_growth([](std::size_t r) { return regular_tree_window(3, r); }, radii);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const std::size_t r = radii[i];
    REQUIRE(tree[i].size() >= 2);
    CHECK(tree[i][1] == 3 * (std::size_t{1} << (r - 1)) - 1);
    CHECK(tree[i][0] == 0);
  }
  const auto line = ball_sphere_growth(line_window, radii);
  for (const auto& dims : line) CHECK(dims == std::vector<std::size_t>{0, 1});
  const auto pt = ball_sphere_growth(point_window, radii);
  for (const auto& dims : pt) CHECK(dims == std::vector<std::size_t>{1});
}

TEST_CASE("graph complexes") {
  const std::vector<Vertex> vs{0, 1, 2};
  const std::vector<std::pair<Vertex, Vertex>> es{{0, 1}, {1, 0}, {1, 2}, {2, 2}};
  const auto k = complex_from_graph(vs, es);
  CHECK(k.count(1) == 2);
  CHECK(homology(k) == std::vector<std::size_t>{1, 0});
}
