#include "ihc/fixtures.hpp"

#include <algorithm>

#include "ihc/builders.hpp"

namespace ihc::fixtures {

WeightedComplex point() { return WeightedComplex::build(0, {{"p", 0}}, {{0}}); }

WeightedComplex interval() { return WeightedComplex::build(1, {{"a", 1}, {"b", 1}}, {{0, 1}}); }

WeightedComplex sphere(int k) {
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip <= k; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= k; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(f);
  }
  return unstratified(k - 1, k + 1, facets);
}

WeightedComplex torus() {
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return unstratified(2, 7, facets, "t");
}

WeightedComplex projective_plane() {
  return unstratified(2, 6,
                      {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                       {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}},
                      "r");
}

WeightedComplex fake_sphere() {
  return WeightedComplex::build(2, {{"a", 0}, {"b", 2}, {"c", 2}, {"d", 2}},
                                {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
}

std::vector<int> fake_sphere_recoding() { return {2, 2, 2}; }

WeightedComplex random_complex(std::mt19937_64& rng, int max_vertices, int max_n) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = pick(0, max_n);
  const int count = pick(2, std::max(2, max_vertices));
  std::vector<VertexSpec> vs;
  for (int v = 0; v < count; ++v) vs.push_back({"x" + std::to_string(v), pick(0, n)});
  vs[static_cast<std::size_t>(pick(0, count - 1))].weight = n;
  std::vector<std::vector<int>> facets;
  std::vector<bool> used(static_cast<std::size_t>(count), false);
  const int facet_count = pick(1, 4);
  for (int f = 0; f < facet_count; ++f) {
    std::vector<int> all(static_cast<std::size_t>(count));
    for (int v = 0; v < count; ++v) all[static_cast<std::size_t>(v)] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(std::min(count, pick(1, 4))));
    for (int v : all) used[static_cast<std::size_t>(v)] = true;
    facets.push_back(all);
  }
  for (int v = 0; v < count; ++v)
    if (!used[static_cast<std::size_t>(v)]) facets.push_back({v});
  return WeightedComplex::build(n, vs, facets);
}

std::vector<Named> corpus() {
  std::vector<Named> out;
  auto add = [&](const std::string& name, WeightedComplex cx) { out.push_back({name, std::move(cx)}); };
  add("point", point());
  add("interval", interval());
  add("sphere1", sphere(2));
  add("sphere2", sphere(3));
  add("cone_point", cone(point()));
  add("cone_interval", cone(interval()));
  add("cone_sphere1", cone(sphere(2)));
  add("cone_sphere2", cone(sphere(3)));
  add("susp_point", suspension(point()));
  add("susp_interval", suspension(interval()));
  add("susp_sphere1", suspension(sphere(2)));
  add("susp_sphere2", suspension(sphere(3)));
  add("torus", torus());
  add("susp_torus", suspension(torus()));
  add("rp2", projective_plane());
  add("cone_rp2", cone(projective_plane()));
  add("fake_sphere", fake_sphere());
  add("fake_sphere_coarse", fake_sphere().recoded(fake_sphere_recoding(), 2));
  add("prism_sphere1", prism(sphere(2)));
  add("prism_cone_sphere1", prism(cone(sphere(2))));
  return out;
}

WeightedComplex by_name(const std::string& name) {
  for (auto& f : corpus())
    if (f.name == name) return f.complex;
  throw InputError("unknown fixture: " + name);
}

}  // namespace ihc::fixtures
