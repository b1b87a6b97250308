#include <doctest.h>

#include "ihc/chains.hpp"
#include "ihc/fixtures.hpp"
#include "oracle.hpp"

using namespace ihc;

namespace {

std::vector<std::size_t> ranks(const Presentation& p) {
  std::vector<std::size_t> out;
  for (const auto& h : homology_all(p)) out.push_back(h.free_rank);
  return out;
}

using Ranks = std::vector<std::size_t>;

Simplex named(const WeightedComplex& cx, std::initializer_list<const char*> names) {
  Simplex s;
  for (const char* n : names) s.push_back(*cx.find(n));
  std::sort(s.begin(), s.end());
  return s;
}

const Stratum& singular_stratum(const WeightedComplex& cx) {
  for (const auto& s : cx.strata())
    if (s.singular()) return s;
  throw std::logic_error("no singular stratum");
}

}  // namespace

TEST_CASE("simplex perverse degree on the cone") {
  const auto cone = fixtures::by_name("cone_sphere1");
  const Stratum& apex = singular_stratum(cone);
  const Simplex top = cone.facets().front();
  CHECK(simplex_perverse_degree(cone, top, apex) == ExtInt(0));
  const Simplex base = named(cone, {cone.name(1).c_str(), cone.name(2).c_str()});
  CHECK(simplex_perverse_degree(cone, base, apex) == ExtInt::neg_inf());
}

TEST_CASE("allowable simplices") {
  const auto cone = fixtures::by_name("cone_sphere1");
  const Simplex top = cone.facets().front();
  CHECK(is_allowable(cone, top, Perversity::zero(cone)));
  CHECK_FALSE(is_allowable(cone, top, Perversity::constant(cone, ExtInt(-1))));
  const auto torus = fixtures::torus();
  for (const auto& s : torus.all_simplices())
    CHECK(is_allowable(torus, s, Perversity::constant(torus, ExtInt::neg_inf())));
}

TEST_CASE("regular boundary") {
  const auto cone = fixtures::by_name("cone_sphere1");
  const Simplex edge = named(cone, {cone.name(1).c_str(), cone.name(2).c_str()});
  CHECK(gd(cone, edge) == SimplexChain{{{edge[1]}, 1}, {{edge[0]}, -1}});
  const Simplex spoke = named(cone, {"c", cone.name(1).c_str()});
  const auto spoke_gd = gd(cone, spoke);
  REQUIRE(spoke_gd.size() == 1);
  CHECK(spoke_gd.begin()->first == Simplex{*cone.find(cone.name(1))});
  for (const auto& f : fixtures::corpus())
    for (int d = 0; d <= f.complex.top_dimension(); ++d)
      for (const auto& s : f.complex.regular_simplices(d)) CHECK(gd(f.complex, gd(f.complex, s)).empty());
}

TEST_CASE("tame homology examples") {
  const auto s2 = fixtures::sphere(3);
  const auto groups = homology_all(tame_complex(s2, Perversity::top(s2), Ring::integers()));
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].to_string() == "Z^1");
  CHECK(groups[1].to_string() == "0");
  CHECK(groups[2].to_string() == "Z^1");

  const auto cone = fixtures::by_name("cone_sphere1");
  CHECK(ranks(tame_complex(cone, Perversity::zero(cone), Ring::rationals())) == Ranks{1, 0, 0});

  const auto st = fixtures::by_name("susp_torus");
  CHECK(ranks(tame_complex(st, Perversity::zero(st).dual(), Ring::rationals())) == Ranks{1, 0, 2, 1});
}

TEST_CASE("tame cochains and chains have equal ranks over Q") {
  for (const auto& f : fixtures::corpus()) {
    const auto p = Perversity::zero(f.complex);
    CHECK_MESSAGE(ranks(tame_complex(f.complex, p, Ring::rationals())) ==
                      ranks(tame_cochains(f.complex, p, Ring::rationals())),
                  f.name);
  }
}

TEST_CASE("universal coefficients on the projective plane cone") {
  const auto cx = fixtures::by_name("cone_rp2");
  const auto p = Perversity::top(cx);
  const auto chains = homology_all(tame_complex(cx, p, Ring::integers()));
  const auto cochains = homology_all(tame_cochains(cx, p, Ring::integers()));
  for (std::size_t k = 0; k < chains.size(); ++k) {
    CHECK(chains[k].free_rank == cochains[k].free_rank);
    if (!chains[k].torsion.empty()) {
      REQUIRE(k + 1 < cochains.size());
      CHECK(cochains[k + 1].torsion == chains[k].torsion);
    }
  }
}

TEST_CASE("ordinary chains against the oracle") {
  for (const auto& f : fixtures::corpus()) {
    for (unsigned p : {0u, 2u}) {
      const Ring ring = p ? Ring::mod(p) : Ring::rationals();
      CHECK_MESSAGE(ranks(simplicial_cochains(f.complex, ring)) == oracle::betti(f.complex, p), f.name);
    }
  }
}

TEST_CASE("chain export") {
  const auto cx = fixtures::interval();
  const SimplexChain c{{{0, 1}, 2}};
  CHECK(export_chain(cx, c) == "2 a b\n");
  const Vector v = chain_to_vector(cx, c, 1, true);
  CHECK(vector_to_chain(cx, v, 1, true) == c);
}
