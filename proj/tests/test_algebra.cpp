#include <doctest.h>

#include "ihc/chains.hpp"
#include "ihc/fixtures.hpp"
#include "ihc/smith.hpp"

using namespace ihc;

namespace {

Matrix mat(std::size_t r, std::size_t c, std::initializer_list<long> v) {
  Matrix m(r, c);
  std::size_t i = 0;
  for (long x : v) {
    m(i / c, i % c) = x;
    ++i;
  }
  return m;
}

std::vector<std::string> table(const Presentation& p) {
  std::vector<std::string> out;
  for (const auto& h : homology_all(p)) out.push_back(h.to_string());
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("smith normal form invariant factors") {
  const Ring z = Ring::integers();
  auto s = smith_normal_form(mat(2, 2, {2, 0, 0, 3}), z);
  CHECK(s.rank == 2);
  CHECK(s.diagonal[0] == 1);
  CHECK(s.diagonal[1] == 6);
  CHECK(s.u * mat(2, 2, {2, 0, 0, 3}) * s.v == s.s);
  CHECK(s.u * s.u_inv == Matrix::identity(2));

  auto zero = smith_normal_form(Matrix(3, 2), z);
  CHECK(zero.rank == 0);
  CHECK(zero.s.is_zero());
}

TEST_CASE("smith form of a random integer matrix") {
  const Matrix m = mat(3, 4, {4, -6, 2, 8, 3, 9, -12, 0, 5, 1, 1, 7});
  auto s = smith_normal_form(m, Ring::integers());
  CHECK(s.u * m * s.v == s.s);
  for (std::size_t i = 1; i < s.rank; ++i) CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
}

TEST_CASE("rank over Z/p and kernel left inverse") {
  const Matrix m = mat(2, 3, {2, 4, 6, 1, 2, 3});
  CHECK(rank(m, Ring::integers()) == 1);
  CHECK(rank(m, Ring::mod(2)) == 1);
  auto k = kernel_basis(m, Ring::integers());
  CHECK(k.basis.cols() == 2);
  CHECK((m * k.basis).is_zero());
  CHECK(k.left_inverse * k.basis == Matrix::identity(2));
}

TEST_CASE("solve over Z and Q") {
  const Matrix a = mat(2, 2, {2, 0, 0, 2});
  CHECK_FALSE(solve(a, Vector{1, 0}, Ring::integers()).has_value());
  auto q = solve_rational(a, Vector{1, 0});
  REQUIRE(q.has_value());
  CHECK(q->scale == 2);
  CHECK(q->x == Vector{1, 0});
}

TEST_CASE("homology of spheres, torus and projective plane") {
  const Ring z = Ring::integers();
  CHECK(table(simplicial_chains(fixtures::sphere(2), z)) == Strings{"Z^1", "Z^1"});
  CHECK(table(simplicial_chains(fixtures::sphere(3), z)) == Strings{"Z^1", "0", "Z^1"});
  CHECK(table(simplicial_chains(fixtures::torus(), z)) == Strings{"Z^1", "Z^2", "Z^1"});
  CHECK(table(simplicial_chains(fixtures::projective_plane(), z)) == Strings{"Z^1", "Z/2", "0"});
  CHECK(table(simplicial_chains(fixtures::projective_plane(), Ring::mod(2))) ==
        Strings{"Z/2^1", "Z/2^1", "Z/2^1"});
  CHECK(table(simplicial_chains(fixtures::projective_plane(), Ring::rationals())) == Strings{"Q^1", "0", "0"});
}

TEST_CASE("universal coefficients on the projective plane cochains") {
  const auto groups = homology_all(simplicial_cochains(fixtures::projective_plane(), Ring::integers()));
  CHECK(groups[1].to_string() == "0");
  CHECK(groups[2].to_string() == "Z/2");
}

TEST_CASE("dual of a zero differential keeps ranks") {
  Presentation p;
  p.direction = Direction::Chain;
  p.labels = {{"a", "b"}, {"c"}};
  p.d = {Matrix(0, 2), Matrix(2, 1)};
  p.validate();
  const auto dual = p.dual();
  CHECK(homology(dual, 0).free_rank == 2);
  CHECK(homology(dual, 1).free_rank == 1);
}

TEST_CASE("preimage subcomplex extremes") {
  const Presentation amb = simplicial_cochains(fixtures::sphere(2), Ring::integers());
  std::vector<std::vector<bool>> all, none;
  for (int k = 0; k <= amb.top(); ++k) {
    all.emplace_back(amb.dim(k), true);
    none.emplace_back(amb.dim(k), false);
  }
  const auto full = preimage_subcomplex(amb, all);
  for (int k = 0; k <= amb.top(); ++k)
    CHECK(full.inclusion[static_cast<std::size_t>(k)] == Matrix::identity(amb.dim(k)));
  const auto empty = preimage_subcomplex(amb, none);
  for (int k = 0; k <= amb.top(); ++k) CHECK(empty.dim(k) == 0);
}

TEST_CASE("induced map of the identity is an isomorphism") {
  const Presentation p = simplicial_cochains(fixtures::torus(), Ring::integers());
  for (int k = 0; k <= p.top(); ++k) {
    auto m = induced_map(p, p, Matrix::identity(p.dim(k)), k);
    CHECK(m.iso);
    CHECK(m.rank == homology(p, k).free_rank);
  }
}

TEST_CASE("multiplication by two is not an isomorphism over Z but is over Q") {
  const Presentation z = simplicial_cochains(fixtures::sphere(2), Ring::integers());
  const Presentation q = simplicial_cochains(fixtures::sphere(2), Ring::rationals());
  const Matrix twice = Matrix::identity(z.dim(1)).scaled(2);
  CHECK_FALSE(induced_map(z, z, twice, 1).iso);
  CHECK(induced_map(q, q, twice, 1).iso);
}

TEST_CASE("coboundary witness") {
  const Presentation p = simplicial_cochains(fixtures::sphere(2), Ring::integers());
  const Vector dv = p.d[0] * Vector{1, 0, 0};
  CHECK(coboundary_witness(p, 1, dv).has_value());
  Vector generator(p.dim(1), 0);
  generator[0] = 1;
  CHECK_FALSE(coboundary_witness(p, 1, generator).has_value());
}

TEST_CASE("classification of torsion cycles") {
  const Presentation p = simplicial_chains(fixtures::projective_plane(), Ring::integers());
  const HomologyGroup h = homology(p, 1);
  REQUIRE(h.torsion.size() == 1);
  const Vector g = h.generators[0];
  Vector twice(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) twice[i] = 2 * g[i];
  CHECK(h.classify(g) == Vector{1});
  CHECK(h.classify(twice) == Vector{0});
}

TEST_CASE("sparse triplet round trip") {
  const Matrix m = mat(2, 3, {0, 5, 0, -2, 0, 7});
  CHECK(from_triplets(to_triplets(m)) == m);
}

TEST_CASE("ring parsing") {
  CHECK(Ring::parse("z") == Ring::integers());
  CHECK(Ring::parse("q") == Ring::rationals());
  CHECK(Ring::parse("zp:3") == Ring::mod(3));
  CHECK_THROWS_AS(Ring::parse("zp:4"), InputError);
  CHECK_THROWS_AS(Ring::parse("r"), InputError);
}
