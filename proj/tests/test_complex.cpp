#include <doctest.h>

#include "ihc/builders.hpp"
#include "ihc/chains.hpp"
#include "ihc/fixtures.hpp"
#include "ihc/perversity.hpp"

using namespace ihc;

namespace {

Simplex named(const WeightedComplex& cx, std::initializer_list<const char*> names) {
  Simplex s;
  for (const char* n : names) s.push_back(*cx.find(n));
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::size_t> sizes(const FilteredSimplex& f) {
  std::vector<std::size_t> out;
  for (const auto& b : f.blocks) out.push_back(b.size());
  return out;
}

const Stratum& singular_stratum(const WeightedComplex& cx) {
  for (const auto& s : cx.strata())
    if (s.singular()) return s;
  throw std::logic_error("no singular stratum");
}

}  // namespace

TEST_CASE("loading a document") {
  const auto doc = load_space("dim 1; vertex a 0; vertex b 1; vertex c 1; simplex a b c");
  const auto& cx = doc.complex;
  CHECK(cx.n() == 1);
  CHECK(cx.vertex_count() == 3);
  const FilteredSimplex f = cx.decompose(named(cx, {"a", "b", "c"}));
  CHECK(f.blocks[0] == std::vector<Vertex>{*cx.find("a")});
  CHECK(f.blocks[1] == named(cx, {"b", "c"}));
  CHECK(f.dim() == 2);
  CHECK(f.regular());
  CHECK_FALSE(doc.perversity.has_value());
}

TEST_CASE("vertices are reordered by weight") {
  const auto cx = load_space("dim 2\nvertex x 2\nvertex y 0\nvertex z 1\nsimplex x y z\n").complex;
  CHECK(cx.weight(0) == 0);
  CHECK(cx.weight(1) == 1);
  CHECK(cx.weight(2) == 2);
  CHECK(cx.name(0) == "y");
  CHECK(cx.permutation() == std::vector<Vertex>{2, 0, 1});
}

TEST_CASE("document errors") {
  CHECK_THROWS_AS(load_space("dim 1; vertex a 1; vertex a 1; simplex a"), InputError);
  CHECK_THROWS_AS(load_space("dim 1; vertex a 1; vertex b 1; simplex a a b"), InputError);
  CHECK_THROWS_AS(load_space("dim 1; vertex a 2; simplex a"), InputError);
  CHECK_THROWS_AS(load_space("dim 1; vertex a 1; simplex a q"), InputError);
  CHECK_THROWS_AS(load_space("dim 1"), InputError);
  CHECK_THROWS_AS(load_space("dim 1; vertex a 0; simplex a"), InputError);  // no regular simplex
  CHECK_THROWS_AS(load_space("frobnicate"), InputError);
}

TEST_CASE("comments and perversity line") {
  const auto doc = load_space("# a cone\ndim 2\nvertex c 0\nvertex a 2\nvertex b 2\nsimplex c a b\nperversity gm 0 0 0\n");
  REQUIRE(doc.perversity.has_value());
  CHECK(*doc.perversity == "gm 0 0 0");
}

TEST_CASE("point of weight zero") {
  const auto cx = load_space("dim 0; vertex p 0; simplex p").complex;
  CHECK(cx.top_dimension() == 0);
  CHECK(cx.strata().size() == 1);
  CHECK(cx.regular({0}));
}

TEST_CASE("join decomposition examples") {
  const auto cx = load_space("dim 1; vertex a 0; vertex b 1; vertex c 1; simplex a b c").complex;
  CHECK(sizes(cx.decompose(named(cx, {"b", "c"}))) == std::vector<std::size_t>{0, 2});
  const auto c2 = load_space("dim 2; vertex a 0; vertex b 2; simplex a b").complex;
  const auto f = c2.decompose(named(c2, {"a"}));
  CHECK(sizes(f) == std::vector<std::size_t>{1, 0, 0});
  CHECK_FALSE(f.regular());
}

TEST_CASE("boundary formulas") {
  const SimplexChain d1 = boundary(Simplex{0, 1});
  CHECK(d1 == SimplexChain{{{1}, 1}, {{0}, -1}});
  const SimplexChain d2 = boundary(Simplex{0, 1, 2});
  CHECK(d2 == SimplexChain{{{1, 2}, 1}, {{0, 2}, -1}, {{0, 1}, 1}});
  CHECK(boundary(d2).empty());
}

TEST_CASE("strata of the basic fixtures") {
  const auto s2 = fixtures::sphere(3);
  REQUIRE(s2.strata().size() == 1);
  CHECK_FALSE(s2.strata()[0].singular());

  const auto cone = fixtures::by_name("cone_sphere1");
  int singular = 0;
  for (const auto& s : cone.strata())
    if (s.singular()) {
      ++singular;
      CHECK(s.codim == 2);
      CHECK(s.vertices.size() == 1);
    }
  CHECK(singular == 1);

  const auto st = fixtures::by_name("susp_torus");
  singular = 0;
  for (const auto& s : st.strata())
    if (s.singular()) {
      ++singular;
      CHECK(s.codim == 3);
    }
  CHECK(singular == 2);
}

TEST_CASE("every simplex lies in exactly one stratum") {
  for (const auto& f : fixtures::corpus()) {
    std::map<Simplex, int> seen;
    for (const auto& st : f.complex.strata())
      for (const auto& s : st.simplices) ++seen[s];
    for (const auto& s : f.complex.all_simplices()) CHECK_MESSAGE(seen[s] == 1, f.name);
  }
}

TEST_CASE("meets") {
  const auto cone = fixtures::by_name("cone_sphere1");
  const Vertex apex = *cone.find("c");
  const Stratum& s = singular_stratum(cone);
  const Simplex top = cone.facets().front();
  CHECK(std::find(top.begin(), top.end(), apex) != top.end());
  CHECK(cone.meets(top, s));
  Simplex base(top.begin() + 1, top.end());
  CHECK_FALSE(cone.meets(base, s));
  for (const auto& st : cone.strata())
    if (!st.singular()) CHECK_FALSE(cone.meets({apex}, st));
}

TEST_CASE("builders") {
  const auto cone = fixtures::by_name("cone_sphere1");
  CHECK(cone.n() == 2);
  CHECK(cone.weight(*cone.find("c")) == 0);
  for (Vertex v = 1; v < 4; ++v) CHECK(cone.weight(v) == 2);

  const auto sp = suspension(fixtures::point());
  CHECK(sp.n() == 1);
  CHECK(sp.facets().size() == 2);
  CHECK(sp.vertex_count() == 3);

  const auto pr = prism(fixtures::sphere(2));
  std::ptrdiff_t euler = 0;
  for (int k = 0; k <= pr.top_dimension(); ++k)
    euler += (k % 2 ? -1 : 1) * static_cast<std::ptrdiff_t>(pr.simplices(k).size());
  CHECK(euler == 0);
  CHECK(pr.vertex_count() == 6);
  CHECK(pr.top_dimension() == 2);

  const auto j = join(fixtures::point(), fixtures::interval());
  CHECK(j.n() == 2);
  CHECK(j.top_dimension() == 2);
}

TEST_CASE("barycentric subdivision keeps homology") {
  const auto sd = barycentric_subdivision(fixtures::sphere(3));
  const auto groups = homology_all(simplicial_chains(sd, Ring::integers()));
  CHECK(groups[0].free_rank == 1);
  CHECK(groups[1].is_zero());
  CHECK(groups[2].free_rank == 1);
}

TEST_CASE("perversity arithmetic") {
  const auto cone = fixtures::by_name("cone_sphere1");
  const Stratum& s = singular_stratum(cone);
  CHECK(Perversity::top(cone)(s) == ExtInt(0));
  const auto st = fixtures::by_name("susp_torus");
  CHECK(Perversity::zero(st).dual()(singular_stratum(st)) == ExtInt(1));
  CHECK(ExtInt::neg_inf() + ExtInt(5) == ExtInt::neg_inf());
  CHECK(Perversity::top(cone).dual() == Perversity::zero(cone));
  const auto sum = Perversity::constant(cone, ExtInt::neg_inf()) + Perversity::constant(cone, ExtInt::pos_inf());
  CHECK(sum(s) == ExtInt::neg_inf());
  for (const auto& r : cone.strata())
    if (!r.singular()) CHECK(sum(r) == ExtInt(0));
}

TEST_CASE("perversity parsing and GM growth") {
  const auto st = fixtures::by_name("susp_torus");
  CHECK(Perversity::parse(st, "gm 0 0 0 1") == Perversity::top(st));
  CHECK(Perversity::parse(st, "gm 0 0 0 0") == Perversity::zero(st));
  CHECK_THROWS_AS(Perversity::parse(st, "gm 0 0 1 1"), InputError);
  CHECK_THROWS_AS(Perversity::parse(st, "gm 0 0 0 2"), InputError);
  const auto p = Perversity::parse(st, "stratum 0:-inf");
  CHECK(p.at(0) == ExtInt::neg_inf());
  CHECK_THROWS_AS(Perversity::parse(st, "stratum 99:1"), InputError);
  CHECK_THROWS_AS(Perversity::parse(st, "bogus"), InputError);
  for (const auto& v : gm_perversities(4, 3)) {
    REQUIRE(v.size() == 5);
    CHECK(v[0] == 0);
    CHECK(v[2] == 0);
    for (std::size_t i = 2; i + 1 < v.size(); ++i) CHECK((v[i] <= v[i + 1] && v[i + 1] <= v[i] + 1));
  }
}

TEST_CASE("perversities are tied to their complex") {
  const auto a = fixtures::by_name("cone_sphere1");
  const auto b = a.shifted(1);
  const auto p = Perversity::zero(a);
  CHECK_THROWS_AS(p.pullback(b, a), InputError);
  CHECK(p.rebind(b).owner() == b.fingerprint());
}

TEST_CASE("weight shift") {
  const auto cx = fixtures::by_name("cone_sphere1");
  const auto sh = cx.shifted(2);
  CHECK(sh.n() == 4);
  CHECK(sh.weight(0) == cx.weight(0) + 2);
  CHECK(sh.strata().size() == cx.strata().size());
}
