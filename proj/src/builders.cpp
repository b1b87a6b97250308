#include "ihc/builders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ihc {

namespace {

std::vector<VertexSpec> specs_of(const WeightedComplex& cx, int shift) {
  std::vector<VertexSpec> out;
  for (Vertex v = 0; v < static_cast<Vertex>(cx.vertex_count()); ++v) out.push_back({cx.name(v), cx.weight(v) + shift});
  return out;
}

std::string fresh(const WeightedComplex& cx, std::string name) {
  while (cx.find(name)) name += "'";
  return name;
}

}  // namespace

WeightedComplex unstratified(int n, int vertex_count, const std::vector<std::vector<int>>& facets,
                             const std::string& prefix) {
  std::vector<VertexSpec> specs;
  for (int i = 0; i < vertex_count; ++i) specs.push_back({prefix + std::to_string(i), n});
  return WeightedComplex::build(n, specs, facets);
}

WeightedComplex cone(const WeightedComplex& cx, const std::string& apex) {
  auto specs = specs_of(cx, 1);
  const int a = static_cast<int>(specs.size());
  specs.push_back({fresh(cx, apex), 0});
  std::vector<std::vector<int>> facets;
  for (const auto& f : cx.facets()) {
    std::vector<int> g(f.begin(), f.end());
    g.push_back(a);
    facets.push_back(g);
  }
  return WeightedComplex::build(cx.n() + 1, specs, facets);
}

WeightedComplex suspension(const WeightedComplex& cx) {
  auto specs = specs_of(cx, 1);
  const int north = static_cast<int>(specs.size());
  specs.push_back({fresh(cx, "n"), 0});
  specs.push_back({fresh(cx, "s"), 0});
  std::vector<std::vector<int>> facets;
  for (const auto& f : cx.facets())
    for (int apex : {north, north + 1}) {
      std::vector<int> g(f.begin(), f.end());
      g.push_back(apex);
      facets.push_back(g);
    }
  return WeightedComplex::build(cx.n() + 1, specs, facets);
}

WeightedComplex join(const WeightedComplex& a, const WeightedComplex& b) {
  auto specs = specs_of(a, 0);
  const int offset = static_cast<int>(specs.size());
  for (Vertex v = 0; v < static_cast<Vertex>(b.vertex_count()); ++v) {
    std::string name = b.name(v);
    while (a.find(name)) name = "b." + name;
    specs.push_back({name, b.weight(v) + a.n() + 1});
  }
  std::vector<std::vector<int>> facets;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) {
      std::vector<int> h(f.begin(), f.end());
      for (Vertex v : g) h.push_back(v + offset);
      facets.push_back(h);
    }
  return WeightedComplex::build(a.n() + b.n() + 1, specs, facets);
}

WeightedComplex prism(const WeightedComplex& cx) {
  std::vector<VertexSpec> specs;
  const int count = static_cast<int>(cx.vertex_count());
  for (int end = 0; end < 2; ++end)
    for (Vertex v = 0; v < count; ++v) specs.push_back({cx.name(v) + "@" + std::to_string(end), cx.weight(v)});
  std::vector<std::vector<int>> facets;
  for (const auto& f : cx.facets())
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::vector<int> s;
      for (std::size_t j = 0; j <= i; ++j) s.push_back(f[j]);
      for (std::size_t j = i; j < f.size(); ++j) s.push_back(f[j] + count);
      facets.push_back(s);
    }
  return WeightedComplex::build(cx.n(), specs, facets);
}

WeightedComplex barycentric_subdivision(const WeightedComplex& cx) {
  std::vector<Simplex> all = cx.all_simplices();
  std::map<Simplex, int> id;
  std::vector<VertexSpec> specs;
  for (const auto& s : all) {
    id[s] = static_cast<int>(specs.size());
    int w = 0;
    for (Vertex v : s) w = std::max(w, cx.weight(v));
    std::string name = "b";
    for (Vertex v : s) name += "." + cx.name(v);
    specs.push_back({name, w});
  }
  std::vector<std::vector<int>> facets;
  std::function<void(Simplex, std::vector<int>)> chains = [&](Simplex s, std::vector<int> acc) {
    acc.push_back(id[s]);
    if (s.size() == 1) {
      facets.push_back(acc);
      return;
    }
    for (std::size_t r = 0; r < s.size(); ++r) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(r));
      chains(face, acc);
    }
  };
  for (const auto& f : cx.facets()) chains(f, {});
  return WeightedComplex::build(cx.n(), specs, facets);
}

}  // namespace ihc
