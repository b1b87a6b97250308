#include "ihc/products.hpp"

#include <algorithm>

namespace ihc {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

void drop_zeros(std::map<Cell, Integer>& m) {
  for (auto it = m.begin(); it != m.end();) it = sgn(it->second) == 0 ? m.erase(it) : std::next(it);
}

void drop_zeros(SimplexChain& m) {
  for (auto it = m.begin(); it != m.end();) it = sgn(it->second) == 0 ? m.erase(it) : std::next(it);
}

bool is_face(const Simplex& f, const Simplex& s) { return std::includes(s.begin(), s.end(), f.begin(), f.end()); }

}  // namespace

std::optional<Term> cup_local(const WeightedComplex& cx, const Cell& a, const Cell& b) {
  Simplex u;
  std::set_union(a.simplex.begin(), a.simplex.end(), b.simplex.begin(), b.simplex.end(), std::back_inserter(u));
  if (!cx.contains(u)) return std::nullopt;
  TensorCell ta = factors(cx, a), tb = factors(cx, b), out(ta.size());
  int sign = 1;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    std::vector<Vertex> la = vertex_list(ta[i]), lb = vertex_list(tb[i]);
    if (la.empty() || lb.empty() || la.back() != lb.front()) return std::nullopt;
    std::vector<Vertex> merged = la;
    merged.insert(merged.end(), lb.begin() + 1, lb.end());
    out[i] = from_vertex_list(merged);
    sign *= parity_sign(static_cast<long>(ta[i].dim()) * tb[i].dim());
  }
  // Koszul sign from moving the factors of b past those of a
  long koszul = 0;
  for (std::size_t i = 0; i < ta.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) koszul += static_cast<long>(ta[i].dim()) * tb[j].dim();
  sign *= parity_sign(koszul);
  return Term{from_factors(out), sign};
}

Cochain cup(const WeightedComplex& cx, const Cochain& w, const Cochain& e) {
  Cochain out;
  for (const auto& [a, x] : w) {
    if (sgn(x) == 0) continue;
    for (const auto& [b, y] : e) {
      if (sgn(y) == 0) continue;
      if (auto t = cup_local(cx, a, b)) out[t->cell] += x * y * t->sign;
    }
  }
  drop_zeros(out);
  return out;
}

Cochain unit_cochain(const WeightedComplex& cx) {
  Cochain out;
  for (const auto& c : enumerate_basis(cx, 0)) out[c] = 1;
  return out;
}

Cell top_cell(const WeightedComplex& cx, const Simplex& delta) {
  if (!cx.regular(delta)) throw InputError("prism of a non-regular simplex");
  std::uint32_t mask = cx.n() >= 32 ? 0xffffffffu : ((1u << cx.n()) - 1u);
  return Cell{delta, mask};
}

PrismChain prism_boundary(const WeightedComplex& cx, const Cell& c) {
  TensorCell t = factors(cx, c);
  PrismChain out;
  int before = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Vertex> list = vertex_list(t[i]);
    if (list.size() >= 2)
      for (std::size_t p = 0; p < list.size(); ++p) {
        std::vector<Vertex> face = list;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(p));
        TensorCell u = t;
        u[i] = from_vertex_list(face);
        out[from_factors(u)] += parity_sign(before + static_cast<long>(p));
      }
    before += t[i].dim();
  }
  drop_zeros(out);
  return out;
}

PrismChain prism_boundary(const WeightedComplex& cx, const PrismChain& c) {
  PrismChain out;
  for (const auto& [cell, x] : c)
    for (const auto& [f, y] : prism_boundary(cx, cell)) out[f] += x * y;
  drop_zeros(out);
  return out;
}

std::vector<Term> hidden_faces(const WeightedComplex& cx, const Simplex& delta) {
  FilteredSimplex f = cx.decompose(delta);
  Cell top = top_cell(cx, delta);
  std::vector<Term> out;
  for (int i = 0; i < cx.n(); ++i) {
    if (f.blocks[static_cast<std::size_t>(i)].empty()) continue;
    const long dim_le_i = static_cast<long>(f.prefix(i).size()) - 1;
    out.push_back(Term{Cell{delta, top.cone & ~(1u << i)}, parity_sign(dim_le_i + 1)});
  }
  return out;
}

std::optional<Term> cap_blowup(const WeightedComplex& cx, const Cell& a, const Simplex& delta) {
  if (!is_face(a.simplex, delta)) return std::nullopt;
  const int n = cx.n();
  FilteredSimplex blocks = cx.decompose(delta);
  TensorCell t = factors(cx, a), out(t.size());
  for (int i = 0; i <= n; ++i) {
    std::vector<Vertex> full = blocks.blocks[static_cast<std::size_t>(i)];
    if (i < n) full.push_back(kApex);
    std::vector<Vertex> front = vertex_list(t[static_cast<std::size_t>(i)]);
    if (front.empty() || front.size() > full.size() || !std::equal(front.begin(), front.end(), full.begin()))
      return std::nullopt;
    out[static_cast<std::size_t>(i)] =
        from_vertex_list(std::vector<Vertex>(full.begin() + static_cast<std::ptrdiff_t>(front.size() - 1), full.end()));
  }
  long nu = 0;
  for (int j = 0; j < n; ++j)
    nu += static_cast<long>(blocks.blocks[static_cast<std::size_t>(j)].size()) * tensor_dim(t, j + 1, n);
  return Term{from_factors(out), parity_sign(nu)};
}

std::optional<Simplex> mu_push(const WeightedComplex& cx, const Cell& c) {
  const int n = cx.n();
  int ell = n;
  for (int j = 0; j < n; ++j)
    if (!((c.cone >> j) & 1u)) {
      ell = j;
      break;
    }
  TensorCell t = factors(cx, c);
  if (tensor_dim(t, ell + 1, n) != 0) return std::nullopt;
  Simplex s;
  for (int j = 0; j <= ell; ++j)
    s.insert(s.end(), t[static_cast<std::size_t>(j)].base.begin(), t[static_cast<std::size_t>(j)].base.end());
  return s;
}

SimplexChain mu_push(const WeightedComplex& cx, const PrismChain& c) {
  SimplexChain out;
  for (const auto& [cell, x] : c)
    if (auto s = mu_push(cx, cell)) out[*s] += x;
  drop_zeros(out);
  return out;
}

SimplexChain cap(const WeightedComplex& cx, const Cochain& w, const SimplexChain& xi) {
  SimplexChain out;
  for (const auto& [sigma, x] : xi) {
    if (sgn(x) == 0) continue;
    if (!cx.regular(sigma)) throw InputError("cap with a non-regular simplex: " + cx.simplex_name(sigma));
    for (const auto& [a, y] : w) {
      if (sgn(y) == 0) continue;
      auto t = cap_blowup(cx, a, sigma);
      if (!t) continue;
      if (auto s = mu_push(cx, t->cell)) out[*s] += x * y * t->sign;
    }
  }
  drop_zeros(out);
  return out;
}

int pairing_sign(const WeightedComplex& cx, const Cell& c) {
  TensorCell t = factors(cx, c);
  long e = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) e += static_cast<long>(t[i].dim()) * t[j].dim();
  return parity_sign(e);
}

std::map<Simplex, Integer> chi(const WeightedComplex& cx, const Cochain& w) {
  std::map<Simplex, Integer> out;
  for (const auto& [c, x] : w) {
    if (sgn(x) == 0) continue;
    Cell top = top_cell(cx, c.simplex);
    if (c == top) out[c.simplex] += x * pairing_sign(cx, c);
  }
  return out;
}

}  // namespace ihc
