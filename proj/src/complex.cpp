#include "ihc/complex.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "ihc/debug.hpp"

namespace ihc {

namespace debug {
namespace {
std::atomic<bool> g_sign_flip{false};
}
void set_sign_flip(bool on) { g_sign_flip.store(on); }
bool sign_flip() { return g_sign_flip.load(); }
}  // namespace debug

int normalize(std::vector<Vertex>& list) {
  int sign = 1;
  // insertion sort counting transpositions
  for (std::size_t i = 1; i < list.size(); ++i)
    for (std::size_t j = i; j > 0 && list[j - 1] > list[j]; --j) {
      std::swap(list[j - 1], list[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < list.size(); ++i)
    if (list[i] == list[i - 1]) return 0;
  if (debug::sign_flip()) return 1;
  return sign;
}

int FilteredSimplex::dim() const {
  int count = 0;
  for (const auto& b : blocks) count += static_cast<int>(b.size());
  return count - 1;
}

Simplex FilteredSimplex::prefix(int i) const {
  Simplex s;
  for (int k = 0; k <= i && k <= n(); ++k) s.insert(s.end(), blocks[k].begin(), blocks[k].end());
  return s;
}

struct WeightedComplex::Impl {
  int n = 0;
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<Vertex> permutation;
  std::vector<Simplex> facets;
  std::vector<std::vector<Simplex>> by_dim;
  struct Info {
    std::size_t index;
    std::size_t stratum;
  };
  std::map<Simplex, Info> info;
  std::vector<Stratum> strata;
  std::uint64_t fingerprint = 0;
};

namespace {

std::uint64_t fnv(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

int max_weight(const Simplex& s, const std::vector<int>& w) {
  int m = -1;
  for (Vertex v : s) m = std::max(m, w[v]);
  return m;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

WeightedComplex WeightedComplex::build(int n, const std::vector<VertexSpec>& vertices,
                                       const std::vector<std::vector<int>>& facets) {
  if (n < 0) throw InputError("formal dimension must be non-negative");
  if (vertices.empty()) throw InputError("complex has no vertices");
  if (facets.empty()) throw InputError("complex has no simplices");
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (!seen.insert(v.name).second) throw InputError("duplicate vertex: " + v.name);
    if (v.weight < 0 || v.weight > n)
      throw InputError("weight out of range for vertex " + v.name + ": " + std::to_string(v.weight));
  }
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return vertices[a].weight < vertices[b].weight; });
  impl->permutation.resize(vertices.size());
  for (std::size_t id = 0; id < order.size(); ++id) {
    impl->permutation[order[id]] = static_cast<Vertex>(id);
    impl->names.push_back(vertices[order[id]].name);
    impl->weights.push_back(vertices[order[id]].weight);
  }

  std::set<Simplex> closure;
  for (const auto& f : facets) {
    if (f.empty()) throw InputError("empty simplex");
    Simplex s;
    for (int idx : f) {
      if (idx < 0 || static_cast<std::size_t>(idx) >= vertices.size()) throw InputError("simplex references unknown vertex");
      s.push_back(impl->permutation[idx]);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InputError("simplex repeats vertex " + impl->names[*std::adjacent_find(s.begin(), s.end())]);
    if (s.size() > 30) throw InputError("simplex too large");
    const std::size_t k = s.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Simplex face;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (1u << b)) face.push_back(s[b]);
      closure.insert(std::move(face));
    }
  }
  int top = 0;
  for (const auto& s : closure) top = std::max(top, static_cast<int>(s.size()) - 1);
  impl->by_dim.resize(top + 1);
  for (const auto& s : closure) impl->by_dim[s.size() - 1].push_back(s);
  for (auto& layer : impl->by_dim)
    for (std::size_t i = 0; i < layer.size(); ++i) impl->info[layer[i]] = {i, 0};
  // facets = simplices that are not a face of a simplex one dimension up
  std::set<Simplex> non_maximal;
  for (int d = 1; d <= top; ++d)
    for (const auto& s : impl->by_dim[d])
      for (std::size_t r = 0; r < s.size(); ++r) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(r));
        non_maximal.insert(face);
      }
  for (const auto& s : closure)
    if (!non_maximal.count(s)) impl->facets.push_back(s);

  bool any_regular = false;
  for (Vertex v = 0; v < static_cast<Vertex>(impl->weights.size()); ++v)
    if (impl->weights[v] == n && impl->info.count(Simplex{v})) any_regular = true;
  if (!any_regular) throw InputError("complex has no regular simplex (no vertex of weight n)");
  for (Vertex v = 0; v < static_cast<Vertex>(impl->weights.size()); ++v)
    if (!impl->info.count(Simplex{v})) throw InputError("vertex not used by any simplex: " + impl->names[v]);

  std::ostringstream key;
  key << n << '|';
  for (std::size_t v = 0; v < impl->names.size(); ++v) key << impl->names[v] << ':' << impl->weights[v] << ',';
  key << '|';
  for (const auto& f : impl->facets) {
    for (Vertex v : f) key << v << ' ';
    key << ';';
  }
  impl->fingerprint = fnv(key.str());

  // strata: per index i, components of the simplices of maximal weight i joined through
  // codimension-one faces of the same maximal weight
  std::vector<Simplex> all(closure.begin(), closure.end());
  std::map<Simplex, std::size_t> pos;
  for (std::size_t i = 0; i < all.size(); ++i) pos[all[i]] = i;
  UnionFind uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Simplex& s = all[i];
    int w = max_weight(s, impl->weights);
    if (s.size() < 2) continue;
    for (std::size_t r = 0; r < s.size(); ++r) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(r));
      if (max_weight(face, impl->weights) == w) uf.unite(i, pos[face]);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < all.size(); ++i) comps[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> groups;
  for (auto& [root, members] : comps) groups.push_back(members);
  auto group_key = [&](const std::vector<std::size_t>& g) {
    return std::make_pair(max_weight(all[g.front()], impl->weights), all[g.front()]);
  };
  std::sort(groups.begin(), groups.end(),
            [&](const auto& a, const auto& b) { return group_key(a) < group_key(b); });
  for (std::size_t id = 0; id < groups.size(); ++id) {
    Stratum st;
    st.id = id;
    st.index = max_weight(all[groups[id].front()], impl->weights);
    st.codim = n - st.index;
    st.owner = impl->fingerprint;
    std::set<Vertex> verts;
    for (std::size_t i : groups[id]) {
      st.simplices.push_back(all[i]);
      verts.insert(all[i].begin(), all[i].end());
      impl->info[all[i]].stratum = id;
    }
    st.vertices.assign(verts.begin(), verts.end());
    impl->strata.push_back(std::move(st));
  }
  WeightedComplex out;
  out.impl_ = std::move(impl);
  return out;
}

int WeightedComplex::n() const { return impl_->n; }
std::size_t WeightedComplex::vertex_count() const { return impl_->names.size(); }
int WeightedComplex::weight(Vertex v) const { return impl_->weights.at(static_cast<std::size_t>(v)); }
const std::string& WeightedComplex::name(Vertex v) const { return impl_->names.at(static_cast<std::size_t>(v)); }

std::optional<Vertex> WeightedComplex::find(std::string_view name) const {
  for (std::size_t v = 0; v < impl_->names.size(); ++v)
    if (impl_->names[v] == name) return static_cast<Vertex>(v);
  return std::nullopt;
}

const std::vector<Vertex>& WeightedComplex::permutation() const { return impl_->permutation; }
const std::vector<Simplex>& WeightedComplex::facets() const { return impl_->facets; }
int WeightedComplex::top_dimension() const { return static_cast<int>(impl_->by_dim.size()) - 1; }

const std::vector<Simplex>& WeightedComplex::simplices(int dim) const {
  static const std::vector<Simplex> empty;
  if (dim < 0 || dim > top_dimension()) return empty;
  return impl_->by_dim[static_cast<std::size_t>(dim)];
}

std::vector<Simplex> WeightedComplex::all_simplices() const {
  std::vector<Simplex> out;
  for (const auto& layer : impl_->by_dim) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

bool WeightedComplex::contains(const Simplex& s) const { return impl_->info.count(s) > 0; }

std::optional<std::size_t> WeightedComplex::index(const Simplex& s) const {
  auto it = impl_->info.find(s);
  if (it == impl_->info.end()) return std::nullopt;
  return it->second.index;
}

FilteredSimplex WeightedComplex::decompose(const Simplex& s) const {
  if (!contains(s)) throw InputError("simplex not in complex: " + simplex_name(s));
  FilteredSimplex f;
  f.blocks.resize(static_cast<std::size_t>(impl_->n) + 1);
  for (Vertex v : s) f.blocks[static_cast<std::size_t>(weight(v))].push_back(v);
  return f;
}

bool WeightedComplex::regular(const Simplex& s) const {
  for (Vertex v : s)
    if (weight(v) == impl_->n) return true;
  return false;
}

std::vector<Simplex> WeightedComplex::regular_simplices(int dim) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices(dim))
    if (regular(s)) out.push_back(s);
  return out;
}

std::vector<Simplex> WeightedComplex::maximal_regular_simplices() const {
  std::vector<Simplex> out;
  for (const auto& s : impl_->facets)
    if (regular(s)) out.push_back(s);
  return out;
}

const std::vector<Stratum>& WeightedComplex::strata() const { return impl_->strata; }

const Stratum& WeightedComplex::stratum_of(const Simplex& s) const {
  auto it = impl_->info.find(s);
  if (it == impl_->info.end()) throw InputError("simplex not in complex: " + simplex_name(s));
  return impl_->strata[it->second.stratum];
}

bool WeightedComplex::meets(const Simplex& s, const Stratum& st) const {
  if (st.owner != impl_->fingerprint) throw InputError("stratum belongs to a different complex");
  FilteredSimplex f = decompose(s);
  if (f.blocks[static_cast<std::size_t>(st.index)].empty()) return false;
  return stratum_of(f.prefix(st.index)).id == st.id;
}

std::uint64_t WeightedComplex::fingerprint() const { return impl_->fingerprint; }

std::string WeightedComplex::simplex_name(const Simplex& s) const {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += (s[i] >= 0 && static_cast<std::size_t>(s[i]) < impl_->names.size()) ? impl_->names[s[i]] : "?";
  }
  return out + "]";
}

namespace {

std::vector<VertexSpec> specs_of(const WeightedComplex& cx) {
  std::vector<VertexSpec> out;
  for (Vertex v = 0; v < static_cast<Vertex>(cx.vertex_count()); ++v) out.push_back({cx.name(v), cx.weight(v)});
  return out;
}

std::vector<std::vector<int>> facet_lists(const std::vector<Simplex>& facets) {
  std::vector<std::vector<int>> out;
  for (const auto& f : facets) out.emplace_back(f.begin(), f.end());
  return out;
}

}  // namespace

WeightedComplex WeightedComplex::shifted(int m) const {
  auto specs = specs_of(*this);
  for (auto& s : specs) s.weight += m;
  return build(n() + m, specs, facet_lists(facets()));
}

WeightedComplex WeightedComplex::recoded(const std::vector<int>& phi, int n_new) const {
  if (static_cast<int>(phi.size()) != n() + 1) throw InputError("recoding must list a value for each weight 0..n");
  for (std::size_t i = 1; i < phi.size(); ++i)
    if (phi[i] < phi[i - 1]) throw InputError("recoding is not monotone");
  if (phi.back() != n_new) throw InputError("recoding must send n to the new formal dimension");
  auto specs = specs_of(*this);
  for (auto& s : specs) s.weight = phi[static_cast<std::size_t>(s.weight)];
  return build(n_new, specs, facet_lists(facets()));
}

WeightedComplex WeightedComplex::subcomplex(const std::vector<Simplex>& generators) const {
  std::set<Vertex> used;
  for (const auto& g : generators) used.insert(g.begin(), g.end());
  std::vector<VertexSpec> specs;
  std::map<Vertex, int> local;
  for (Vertex v : used) {
    local[v] = static_cast<int>(specs.size());
    specs.push_back({name(v), weight(v)});
  }
  std::vector<std::vector<int>> fl;
  for (const auto& g : generators) {
    std::vector<int> f;
    for (Vertex v : g) f.push_back(local[v]);
    fl.push_back(f);
  }
  return build(n(), specs, fl);
}

std::vector<Simplex> WeightedComplex::star_facets(Vertex v) const {
  std::vector<Simplex> out;
  for (const auto& f : facets())
    if (std::find(f.begin(), f.end(), v) != f.end()) out.push_back(f);
  return out;
}

std::string WeightedComplex::to_text() const {
  std::ostringstream out;
  out << "dim " << n() << '\n';
  for (Vertex v = 0; v < static_cast<Vertex>(vertex_count()); ++v) out << "vertex " << name(v) << ' ' << weight(v) << '\n';
  for (const auto& f : facets()) {
    out << "simplex";
    for (Vertex v : f) out << ' ' << name(v);
    out << '\n';
  }
  return out.str();
}

SpaceDocument load_space(std::string_view text) {
  int n = -1;
  std::vector<VertexSpec> vertices;
  std::map<std::string, int> by_name;
  std::vector<std::vector<int>> facets;
  std::optional<std::string> perversity;
  std::string all(text);
  for (char& c : all)
    if (c == ';') c = '\n';
  std::istringstream in(all);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "dim") {
      if (n >= 0) fail("dim given twice");
      if (!(ls >> n) || n < 0) fail("dim expects a non-negative integer");
    } else if (head == "vertex") {
      std::string name;
      int w = 0;
      if (!(ls >> name >> w)) fail("vertex expects a name and a weight");
      if (by_name.count(name)) fail("duplicate vertex: " + name);
      by_name[name] = static_cast<int>(vertices.size());
      vertices.push_back({name, w});
    } else if (head == "simplex") {
      std::vector<int> f;
      std::string name;
      std::set<std::string> local;
      while (ls >> name) {
        auto it = by_name.find(name);
        if (it == by_name.end()) fail("simplex references unknown vertex: " + name);
        if (!local.insert(name).second) fail("simplex repeats vertex: " + name);
        f.push_back(it->second);
      }
      if (f.empty()) fail("empty simplex");
      facets.push_back(std::move(f));
    } else if (head == "perversity") {
      std::string rest;
      std::getline(ls, rest);
      auto b = rest.find_first_not_of(" \t");
      perversity = b == std::string::npos ? std::string() : rest.substr(b);
    } else {
      fail("unknown directive: " + head);
    }
    std::string extra;
    if (head == "dim" || head == "vertex")
      if (ls >> extra) fail("unexpected token: " + extra);
  }
  if (n < 0) throw InputError("missing dim line");
  return SpaceDocument{WeightedComplex::build(n, vertices, facets), perversity};
}

SpaceDocument load_space_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open space file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_space(buf.str());
}

SimplexChain boundary(const Simplex& s) {
  SimplexChain out;
  if (s.size() < 2) return out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    Simplex face = s;
    face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
    out[face] += (k % 2 == 0) ? 1 : -1;
  }
  return out;
}

SimplexChain boundary(const SimplexChain& c) {
  SimplexChain out;
  for (const auto& [s, coeff] : c)
    for (const auto& [f, e] : boundary(s)) out[f] += coeff * e;
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace ihc
