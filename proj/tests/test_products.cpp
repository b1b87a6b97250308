#include <doctest.h>

#include "ihc/amalgam.hpp"
#include "ihc/fixtures.hpp"
#include "ihc/verify.hpp"

using namespace ihc;

namespace {

Cochain one(const Cell& c) {
  Cochain w;
  w[c] = 1;
  return w;
}

Cell cell(const WeightedComplex& cx, std::initializer_list<const char*> names, std::uint32_t cone) {
  Simplex s;
  for (const char* n : names) s.push_back(*cx.find(n));
  std::sort(s.begin(), s.end());
  return Cell{s, cone};
}

WeightedComplex unstratified_triangle() {
  return WeightedComplex::build(0, {{"e0", 0}, {"e1", 0}, {"e2", 0}}, {{0, 1, 2}});
}

const char* small_fixtures[] = {"point", "interval", "sphere1", "cone_point", "cone_interval", "cone_sphere1",
                                "susp_point", "susp_interval", "fake_sphere"};

}  // namespace

TEST_CASE("cup on a regular triangle") {
  const auto cx = unstratified_triangle();
  const auto r = cup(cx, one(cell(cx, {"e0", "e1"}, 0)), one(cell(cx, {"e1", "e2"}, 0)));
  CHECK(r == Cochain{{cell(cx, {"e0", "e1", "e2"}, 0), -1}});
  CHECK(cup(cx, one(cell(cx, {"e0", "e1"}, 0)), one(cell(cx, {"e0", "e2"}, 0))).empty());
}

TEST_CASE("cup with the cone point") {
  const auto cx = block_simplex({1, 1});
  const auto r = cup(cx, one(cell(cx, {"v0", "v1"}, 1)), one(cell(cx, {"v1"}, 1)));
  CHECK(r == one(cell(cx, {"v0", "v1"}, 1)));
}

TEST_CASE("cup laws on small fixtures") {
  PropertyResult leibniz, algebra;
  for (const char* name : small_fixtures) {
    const auto cx = fixtures::by_name(name);
    check_cup_leibniz(name, cx, leibniz);
    check_cup_algebra(name, cx, algebra);
  }
  CHECK_MESSAGE(leibniz.pass, leibniz.counterexample);
  CHECK_MESSAGE(algebra.pass, algebra.counterexample);
}

TEST_CASE("graded commutativity on the 2-sphere") {
  PropertyResult r;
  const auto cx = fixtures::sphere(3);
  check_graded_commutativity("sphere2", cx, Perversity::zero(cx), Ring::integers(), r);
  CHECK_MESSAGE(r.pass, r.counterexample);
  CHECK(r.checked > 0);
}

TEST_CASE("cup of allowable cochains on the cone is allowable") {
  const auto cx = fixtures::by_name("cone_sphere1");
  BlowupComplex b(cx);
  const Perversity p = Perversity::zero(cx), q = Perversity::top(cx);
  std::size_t tested = 0;
  for (const auto& a : b.basis(1))
    for (const auto& c : b.basis(1)) {
      const Cochain A = one(a), C = one(c);
      if (!is_allowable(cx, A, p) || !is_allowable(cx, C, q)) continue;
      CHECK(is_allowable(cx, cup(cx, A, C), p + q));
      ++tested;
    }
  CHECK(tested > 0);
}

TEST_CASE("cap on a regular triangle") {
  const auto cx = unstratified_triangle();
  const Simplex tri = cx.facets().front();
  const auto r = cap(cx, one(cell(cx, {"e0", "e1"}, 0)), SimplexChain{{tri, 1}});
  const Simplex back{*cx.find("e1"), *cx.find("e2")};
  CHECK(r == SimplexChain{{back, 1}});
  CHECK(cap(cx, unit_cochain(cx), SimplexChain{{tri, 1}}) == SimplexChain{{tri, 1}});
}

TEST_CASE("cap laws on small fixtures") {
  PropertyResult leibniz, algebra;
  for (const char* name : small_fixtures) {
    const auto cx = fixtures::by_name(name);
    check_cap_leibniz(name, cx, leibniz);
    check_cap_algebra(name, cx, algebra);
  }
  CHECK_MESSAGE(leibniz.pass, leibniz.counterexample);
  CHECK_MESSAGE(algebra.pass, algebra.counterexample);
}

TEST_CASE("hidden faces push to a prefix or vanish") {
  for (const char* name : small_fixtures) {
    const auto cx = fixtures::by_name(name);
    for (int d = 0; d <= cx.top_dimension(); ++d)
      for (const auto& s : cx.regular_simplices(d)) {
        const FilteredSimplex f = cx.decompose(s);
        for (const auto& t : hidden_faces(cx, s)) {
          int i = 0;
          while ((t.cell.cone >> i) & 1u) ++i;
          int tail = -1;
          for (int j = i + 1; j <= cx.n(); ++j) tail += static_cast<int>(f.blocks[static_cast<std::size_t>(j)].size());
          const auto pushed = mu_push(cx, t.cell);
          if (tail == 0) {
            REQUIRE(pushed.has_value());
            CHECK(*pushed == f.prefix(i));
            CHECK_FALSE(cx.regular(*pushed));
          } else {
            CHECK_FALSE(pushed.has_value());
          }
        }
      }
  }
}

TEST_CASE("prism boundary and mu_* on the cone") {
  PropertyResult r;
  check_prism_boundary("cone_sphere1", fixtures::by_name("cone_sphere1"), r);
  CHECK_MESSAGE(r.pass, r.counterexample);
}

TEST_CASE("mu_* of the all-apex cell") {
  const auto cx = block_simplex({1, 1, 2});
  const Cell c = cell(cx, {"v2", "v3"}, 3);
  const auto pushed = mu_push(cx, c);
  REQUIRE(pushed.has_value());
  CHECK(*pushed == c.simplex);
}

TEST_CASE("chi examples") {
  const auto cx = fixtures::by_name("cone_sphere1");
  const auto x = chi(cx, unit_cochain(cx));
  for (Vertex v = 0; v < static_cast<Vertex>(cx.vertex_count()); ++v)
    if (cx.weight(v) == cx.n()) CHECK(x.at({v}) == 1);
  for (const auto& [s, value] : x) CHECK(s.size() == 1);
  PropertyResult r;
  check_chi_identity("cone_sphere1", cx, r);
  CHECK_MESSAGE(r.pass, r.counterexample);
  CHECK(r.checked > 0);
}
