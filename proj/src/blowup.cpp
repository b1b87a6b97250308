#include "ihc/blowup.hpp"

#include <algorithm>
#include <bit>

namespace ihc {

int tensor_dim(const TensorCell& c) { return tensor_dim(c, 0, static_cast<int>(c.size()) - 1); }

int tensor_dim(const TensorCell& c, int lo, int hi) {
  int d = 0;
  for (int i = std::max(lo, 0); i <= hi && i < static_cast<int>(c.size()); ++i) d += c[static_cast<std::size_t>(i)].dim();
  return d;
}

std::vector<Vertex> vertex_list(const FactorCell& f) {
  std::vector<Vertex> out = f.base;
  if (f.apex) out.push_back(kApex);
  return out;
}

FactorCell from_vertex_list(const std::vector<Vertex>& list) {
  FactorCell f;
  for (Vertex v : list) {
    if (v == kApex)
      f.apex = true;
    else
      f.base.push_back(v);
  }
  return f;
}

TensorCell factors(const WeightedComplex& cx, const Cell& c) {
  const int n = cx.n();
  TensorCell t(static_cast<std::size_t>(n) + 1);
  for (Vertex v : c.simplex) t[static_cast<std::size_t>(cx.weight(v))].base.push_back(v);
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)].apex = (c.cone >> i) & 1u;
  return t;
}

Cell from_factors(const TensorCell& t) {
  Cell c;
  for (std::size_t i = 0; i < t.size(); ++i) {
    c.simplex.insert(c.simplex.end(), t[i].base.begin(), t[i].base.end());
    if (t[i].apex) c.cone |= 1u << i;
  }
  std::sort(c.simplex.begin(), c.simplex.end());
  return c;
}

int cell_dim(const WeightedComplex& cx, const Cell& c) {
  return static_cast<int>(c.simplex.size()) - (cx.n() + 1) + std::popcount(c.cone);
}

bool valid_cell(const WeightedComplex& cx, const Cell& c) {
  const int n = cx.n();
  if (!cx.contains(c.simplex) || !cx.regular(c.simplex)) return false;
  if (n < 32 && (c.cone >> n) != 0) return false;
  FilteredSimplex f = cx.decompose(c.simplex);
  for (int i = 0; i < n; ++i)
    if (f.blocks[static_cast<std::size_t>(i)].empty() && !((c.cone >> i) & 1u)) return false;
  return true;
}

std::string cell_name(const WeightedComplex& cx, const Cell& c) {
  TensorCell t = factors(cx, c);
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += 'x';
    if (t[i].apex) out += 'c';
    out += '[';
    for (std::size_t j = 0; j < t[i].base.size(); ++j) {
      if (j) out += ',';
      out += cx.name(t[i].base[j]);
    }
    out += ']';
  }
  return out;
}

std::vector<Cell> enumerate_basis(const WeightedComplex& cx, int k) {
  const int n = cx.n();
  std::vector<Cell> out;
  for (int d = 0; d <= cx.top_dimension(); ++d)
    for (const auto& s : cx.simplices(d)) {
      if (!cx.regular(s)) continue;
      FilteredSimplex f = cx.decompose(s);
      std::uint32_t forced = 0, free = 0;
      for (int i = 0; i < n; ++i) (f.blocks[static_cast<std::size_t>(i)].empty() ? forced : free) |= 1u << i;
      const int base = static_cast<int>(s.size()) - (n + 1);
      // enumerate subsets of `free`
      std::uint32_t sub = 0;
      for (;;) {
        std::uint32_t cone = forced | sub;
        if (base + std::popcount(cone) == k) out.push_back({s, cone});
        if (sub == free) break;
        sub = (sub - free) & free;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

std::optional<Term> adjoin_vertex(const WeightedComplex& cx, const Cell& c, Vertex e) {
  if (std::binary_search(c.simplex.begin(), c.simplex.end(), e)) return std::nullopt;
  Simplex target = c.simplex;
  target.insert(std::upper_bound(target.begin(), target.end(), e), e);
  if (!cx.contains(target)) return std::nullopt;
  const int level = cx.weight(e);
  TensorCell t = factors(cx, c);
  const FactorCell& g = t[static_cast<std::size_t>(level)];
  std::vector<Vertex> list = vertex_list(g);
  list.push_back(e);
  int sign = normalize(list);
  if (sign == 0) return std::nullopt;
  sign *= parity_sign(g.dim());                                  // factor rule 1_G * e = (-1)^{|G|} 1_{[G,e]}
  sign *= parity_sign(tensor_dim(t, level + 1, cx.n()));        // global (-1)^{|(F,eps)|_{>level}}
  return Term{Cell{target, c.cone}, sign};
}

std::optional<Term> adjoin_virtual(const WeightedComplex& cx, const Cell& c, int level) {
  if (level < 0 || level >= cx.n()) throw std::out_of_range("virtual vertex level out of range");
  if ((c.cone >> level) & 1u) return std::nullopt;
  TensorCell t = factors(cx, c);
  const FactorCell& g = t[static_cast<std::size_t>(level)];
  std::vector<Vertex> list = vertex_list(g);
  list.push_back(kApex);
  int sign = normalize(list);
  if (sign == 0) return std::nullopt;
  sign *= parity_sign(g.dim());
  sign *= parity_sign(tensor_dim(t, level + 1, cx.n()));
  return Term{Cell{c.simplex, c.cone | (1u << level)}, sign};
}

void prune(Cochain& w, const Ring& ring) {
  for (auto it = w.begin(); it != w.end();) {
    ring.reduce(it->second);
    it = sgn(it->second) == 0 ? w.erase(it) : std::next(it);
  }
}

Cochain differential(const WeightedComplex& cx, const Cochain& w) {
  Cochain out;
  for (const auto& [c, coeff] : w) {
    if (sgn(coeff) == 0) continue;
    const int outer = parity_sign(cell_dim(cx, c));
    for (Vertex e = 0; e < static_cast<Vertex>(cx.vertex_count()); ++e)
      if (auto t = adjoin_vertex(cx, c, e)) out[t->cell] += coeff * (outer * t->sign);
    for (int level = 0; level < cx.n(); ++level)
      if (auto t = adjoin_virtual(cx, c, level)) out[t->cell] += coeff * (outer * t->sign);
  }
  prune(out, Ring::integers());
  return out;
}

Cochain differential_factorwise(const WeightedComplex& cx, const Cochain& w) {
  const int n = cx.n();
  Cochain out;
  for (const auto& [c, coeff] : w) {
    if (sgn(coeff) == 0) continue;
    TensorCell t = factors(cx, c);
    for (int i = 0; i <= n; ++i) {
      const int before = parity_sign(tensor_dim(t, 0, i - 1));
      std::vector<Vertex> candidates;
      for (Vertex v = 0; v < static_cast<Vertex>(cx.vertex_count()); ++v)
        if (cx.weight(v) == i) candidates.push_back(v);
      if (i < n) candidates.push_back(kApex);
      const std::vector<Vertex> g = vertex_list(t[static_cast<std::size_t>(i)]);
      for (Vertex v : candidates) {
        // delta 1_G = sum_v 1_{[G,v]} in the factor complex
        std::vector<Vertex> list = g;
        list.push_back(v);
        int s = normalize(list);
        if (s == 0) continue;
        TensorCell u = t;
        u[static_cast<std::size_t>(i)] = from_vertex_list(list);
        Cell target = from_factors(u);
        if (!cx.contains(target.simplex)) continue;
        out[target] += coeff * (before * s);
      }
    }
  }
  prune(out, Ring::integers());
  return out;
}

ExtInt perverse_degree_local(const WeightedComplex& cx, const Cell& c, int ell) {
  const int n = cx.n();
  if (ell < 1 || ell > n) throw std::out_of_range("perverse degree level out of range");
  const int pos = n - ell;
  if ((c.cone >> pos) & 1u) return ExtInt::neg_inf();
  return ExtInt(tensor_dim(factors(cx, c), pos + 1, n));
}

namespace {

bool is_face(const Simplex& f, const Simplex& s) { return std::includes(s.begin(), s.end(), f.begin(), f.end()); }

}  // namespace

ExtInt perverse_degree_global(const WeightedComplex& cx, const Cochain& w, const Stratum& s) {
  if (!s.singular()) return ExtInt(0);
  ExtInt best = ExtInt::neg_inf();
  for (const auto& delta : cx.maximal_regular_simplices()) {
    if (!cx.meets(delta, s)) continue;
    for (const auto& [c, coeff] : w) {
      if (sgn(coeff) == 0 || !is_face(c.simplex, delta)) continue;
      best = max(best, perverse_degree_local(cx, c, s.codim));
    }
  }
  return best;
}

bool is_allowable(const WeightedComplex& cx, const Cochain& w, const Perversity& p) {
  for (const auto& s : cx.strata())
    if (s.singular() && perverse_degree_global(cx, w, s) > p(s)) return false;
  return true;
}

BlowupComplex::BlowupComplex(const WeightedComplex& cx) : cx_(cx) {
  for (int k = 0; k <= cx.top_dimension(); ++k) {
    bases_.push_back(enumerate_basis(cx, k));
    for (std::size_t i = 0; i < bases_.back().size(); ++i) index_[bases_.back()[i]] = i;
  }
  for (int k = 0; k <= top(); ++k) {
    Matrix m(basis(k + 1).size(), basis(k).size());
    for (std::size_t j = 0; j < basis(k).size(); ++j) {
      Cochain one{{basis(k)[j], Integer(1)}};
      for (const auto& [c, coeff] : differential(cx_, one)) m(*index(c), j) = coeff;
    }
    d_.push_back(std::move(m));
  }
}

const std::vector<Cell>& BlowupComplex::basis(int k) const {
  static const std::vector<Cell> empty;
  if (k < 0 || k > top()) return empty;
  return bases_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> BlowupComplex::index(const Cell& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Matrix BlowupComplex::factorwise_matrix(int k) const {
  Matrix m(basis(k + 1).size(), basis(k).size());
  for (std::size_t j = 0; j < basis(k).size(); ++j) {
    Cochain one{{basis(k)[j], Integer(1)}};
    for (const auto& [c, coeff] : differential_factorwise(cx_, one)) {
      auto i = index(c);
      if (!i) throw PropertyError("factorwise differential left the basis");
      m(*i, j) = coeff;
    }
  }
  return m;
}

Presentation BlowupComplex::presentation(const Ring& ring) const {
  Presentation p;
  p.ring = ring;
  p.direction = Direction::Cochain;
  for (int k = 0; k <= top(); ++k) {
    std::vector<std::string> labels;
    for (const auto& c : basis(k)) labels.push_back(cell_name(cx_, c));
    p.labels.push_back(std::move(labels));
    Matrix m = d_[static_cast<std::size_t>(k)];
    m.reduce(ring.compute_ring());
    p.d.push_back(std::move(m));
  }
  return p;
}

Vector BlowupComplex::to_vector(const Cochain& w, int k) const {
  Vector v(basis(k).size());
  for (const auto& [c, coeff] : w) {
    auto i = index(c);
    if (!i || cell_dim(cx_, c) != k) throw std::invalid_argument("cochain term outside degree " + std::to_string(k));
    v[*i] = coeff;
  }
  return v;
}

Cochain BlowupComplex::from_vector(const Vector& v, int k) const {
  Cochain w;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) w[basis(k)[i]] = v[i];
  return w;
}

std::vector<bool> BlowupComplex::allowable(const Perversity& p, int k) const {
  std::vector<bool> sel;
  for (const auto& c : basis(k)) sel.push_back(is_allowable(cx_, Cochain{{c, Integer(1)}}, p));
  return sel;
}

Presentation intersection_subcomplex(const BlowupComplex& b, const Perversity& p, const Ring& ring) {
  if (p.owner() != b.complex().fingerprint()) throw InputError("perversity does not belong to this complex");
  std::vector<std::vector<bool>> sel;
  for (int k = 0; k <= b.top(); ++k) sel.push_back(b.allowable(p, k));
  return preimage_subcomplex(b.presentation(ring), sel);
}

}  // namespace ihc
