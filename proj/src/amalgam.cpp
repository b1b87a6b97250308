#include "ihc/amalgam.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ihc {

namespace {

int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

std::vector<Vertex> intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

struct UnionFind {
  std::map<Vertex, Vertex> parent;
  Vertex find(Vertex v) {
    auto it = parent.find(v);
    if (it == parent.end()) return parent[v] = v;
    if (it->second == v) return v;
    return it->second = find(it->second);
  }
  void unite(Vertex a, Vertex b) { parent[find(a)] = find(b); }
};

}  // namespace

WeightRecoding WeightRecoding::parse(std::string_view text, int n_fine) {
  if (n_fine < 0) throw InputError("negative formal dimension");
  std::vector<int> phi(static_cast<std::size_t>(n_fine) + 1, -1);
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string item;
  while (in >> item) {
    auto arrow = item.find("->");
    if (arrow == std::string::npos) throw InputError("recoding entry must look like a->b: " + item);
    int from = 0, to = 0;
    try {
      std::size_t used = 0;
      from = std::stoi(item.substr(0, arrow), &used);
      if (used != arrow) throw InputError("bad recoding entry: " + item);
      const std::string rhs = item.substr(arrow + 2);
      to = std::stoi(rhs, &used);
      if (used != rhs.size()) throw InputError("bad recoding entry: " + item);
    } catch (const std::logic_error&) {
      throw InputError("bad recoding entry: " + item);
    }
    if (from < 0 || from > n_fine) throw InputError("recoding source weight out of range: " + item);
    if (phi[static_cast<std::size_t>(from)] != -1) throw InputError("weight listed twice in recoding: " + item);
    phi[static_cast<std::size_t>(from)] = to;
  }
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi[i] < 0) throw InputError("recoding misses weight " + std::to_string(i));
  WeightRecoding r{phi, phi.back()};
  r.validate();
  return r;
}

WeightRecoding WeightRecoding::identity(int n) {
  WeightRecoding r;
  for (int i = 0; i <= n; ++i) r.phi.push_back(i);
  r.n_coarse = n;
  return r;
}

WeightRecoding WeightRecoding::elementary(int n, int k) {
  if (k < 0 || k > n - 1) throw std::out_of_range("amalgamation index out of range");
  const int j = n - k - 1;
  WeightRecoding r;
  for (int i = 0; i <= n; ++i) r.phi.push_back(i <= j ? i : i - 1);
  r.n_coarse = n - 1;
  return r;
}

WeightRecoding WeightRecoding::then(const WeightRecoding& next) const {
  if (next.n_fine() != n_coarse) throw InputError("recodings do not compose");
  WeightRecoding r;
  for (int v : phi) r.phi.push_back(next.phi[static_cast<std::size_t>(v)]);
  r.n_coarse = next.n_coarse;
  return r;
}

void WeightRecoding::validate() const {
  if (phi.empty()) throw InputError("empty recoding");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] < 0 || phi[i] > n_coarse) throw InputError("recoding value out of range");
    if (i > 0 && phi[i] < phi[i - 1]) throw InputError("recoding is not monotone");
  }
  if (phi.back() != n_coarse) throw InputError("recoding must send n to the new formal dimension");
}

std::string WeightRecoding::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < phi.size(); ++i) out << (i ? "," : "") << i << "->" << phi[i];
  return out.str();
}

std::optional<FactorCell> theta(const FactorCell& a, const FactorCell& b) {
  if (a.apex) {
    FactorCell out;
    out.base = a.base;
    out.base.insert(out.base.end(), b.base.begin(), b.base.end());
    out.apex = b.apex;
    return out;
  }
  if (b.dim() == 0) return a;
  return std::nullopt;
}

std::vector<XiTerm> xi(const FactorCell& merged, const std::vector<Vertex>& e0, const std::vector<Vertex>& e1,
                       bool last) {
  FactorCell f0{intersect(merged.base, e0), true};
  FactorCell f1{intersect(merged.base, e1), merged.apex && !last};
  if (f0.base.size() + f1.base.size() != merged.base.size()) throw InputError("cell is not supported on the two blocks");
  if (!f1.base.empty() || f1.apex) return {XiTerm{f0, f1, parity_sign(static_cast<long>(f0.dim()) * f1.dim())}};
  if (f0.base.empty()) throw InputError("empty factor cell without apex");
  f0.apex = false;
  std::vector<XiTerm> out;
  if (!last) out.push_back(XiTerm{f0, FactorCell{{}, true}, 1});
  for (Vertex e : e1) out.push_back(XiTerm{f0, FactorCell{{e}, false}, 1});
  return out;
}

std::optional<Cell> amalgam_push(const WeightedComplex& fine, const WeightedComplex& coarse,
                                 const WeightRecoding& r, const Cell& c) {
  if (r.n_fine() != fine.n() || r.n_coarse != coarse.n()) throw InputError("recoding does not match the complexes");
  TensorCell t = factors(fine, c);
  std::vector<std::optional<FactorCell>> acc(static_cast<std::size_t>(coarse.n()) + 1);
  for (int i = 0; i <= fine.n(); ++i) {
    auto& slot = acc[static_cast<std::size_t>(r.phi[static_cast<std::size_t>(i)])];
    if (!slot) {
      slot = t[static_cast<std::size_t>(i)];
      continue;
    }
    slot = theta(*slot, t[static_cast<std::size_t>(i)]);
    if (!slot) return std::nullopt;
  }
  TensorCell out;
  for (auto& slot : acc) out.push_back(slot ? *slot : FactorCell{{}, true});
  return from_factors(out);
}

PrismChain amalgam_push(const WeightedComplex& fine, const WeightedComplex& coarse, const WeightRecoding& r,
                        const PrismChain& c) {
  PrismChain out;
  for (const auto& [cell, x] : c)
    if (auto p = amalgam_push(fine, coarse, r, cell)) out[*p] += x;
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

// f^* is the transpose of the sign-free push for the pairing <1_c, c> = pairing_sign(c).
Cochain refinement_pullback(const BlowupComplex& fine, const WeightedComplex& coarse, const WeightRecoding& r,
                            const Cochain& w) {
  Cochain out;
  if (w.empty()) return out;
  for (int k = 0; k <= fine.top(); ++k)
    for (const auto& c : fine.basis(k)) {
      auto p = amalgam_push(fine.complex(), coarse, r, c);
      if (!p) continue;
      auto it = w.find(*p);
      if (it == w.end() || sgn(it->second) == 0) continue;
      out[c] = it->second * (pairing_sign(fine.complex(), c) * pairing_sign(coarse, *p));
    }
  return out;
}

Matrix refinement_matrix(const BlowupComplex& fine, const BlowupComplex& coarse, const WeightRecoding& r, int k) {
  const auto& rows = fine.basis(k);
  Matrix m(rows.size(), coarse.basis(k).size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto p = amalgam_push(fine.complex(), coarse.complex(), r, rows[i]);
    if (!p) continue;
    auto j = coarse.index(*p);
    if (!j) throw PropertyError("pushed cell outside the coarse blow-up: " + cell_name(coarse.complex(), *p));
    m(i, *j) = pairing_sign(fine.complex(), rows[i]) * pairing_sign(coarse.complex(), *p);
  }
  return m;
}

Refinement::Refinement(const WeightedComplex& fine, const WeightRecoding& r)
    : r_(r), fine_(fine), coarse_(fine.recoded(r.phi, r.n_coarse)) {
  for (int k = 0; k <= fine_.top(); ++k)
    for (const auto& c : fine_.basis(k))
      if (auto p = push(c))
        preimage_[*p].emplace_back(c, pairing_sign(fine, c) * pairing_sign(coarse_.complex(), *p));
}

std::optional<Cell> Refinement::push(const Cell& c) const {
  return amalgam_push(fine_.complex(), coarse_.complex(), r_, c);
}

Cochain Refinement::pullback(const Cochain& w) const {
  Cochain out;
  for (const auto& [c, x] : w) {
    auto it = preimage_.find(c);
    if (it == preimage_.end() || sgn(x) == 0) continue;
    for (const auto& [f, s] : it->second) out[f] += x * s;
  }
  return out;
}

Matrix Refinement::matrix(int k) const { return refinement_matrix(fine_, coarse_, r_, k); }

Cochain mu_pullback(const BlowupComplex& b, const std::map<Simplex, Integer>& w) {
  Cochain out;
  for (int k = 0; k <= b.top(); ++k)
    for (const auto& c : b.basis(k)) {
      auto s = mu_push(b.complex(), c);
      if (!s) continue;
      auto it = w.find(*s);
      if (it == w.end() || sgn(it->second) == 0) continue;
      out[c] = it->second * pairing_sign(b.complex(), c);
    }
  return out;
}

Matrix mu_matrix(const BlowupComplex& b, int k) {
  const auto& rows = b.basis(k);
  Matrix m(rows.size(), b.complex().simplices(k).size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (auto s = mu_push(b.complex(), rows[i])) m(i, *b.complex().index(*s)) = pairing_sign(b.complex(), rows[i]);
  return m;
}

WeightedComplex regular_part(const WeightedComplex& cx) {
  std::vector<Simplex> gens;
  for (const auto& s : cx.all_simplices())
    if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return cx.weight(v) == cx.n(); })) gens.push_back(s);
  return cx.subcomplex(gens);
}

Matrix restriction_matrix(const BlowupComplex& b, const WeightedComplex& reg, int k) {
  const auto& cols = b.basis(k);
  const auto& rows = reg.simplices(k);
  Matrix m(rows.size(), cols.size());
  const std::uint32_t all = b.complex().n() >= 32 ? 0xffffffffu : ((1u << b.complex().n()) - 1u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Simplex s;
    for (Vertex v : rows[i]) s.push_back(*b.complex().find(reg.name(v)));
    std::sort(s.begin(), s.end());
    auto j = b.index(Cell{s, all});
    if (!j) throw PropertyError("regular simplex missing from the blow-up basis");
    m(i, *j) = 1;
  }
  return m;
}

std::optional<std::string> normality_defect(const WeightedComplex& cx) {
  for (const auto& st : cx.strata()) {
    if (!st.singular()) continue;
    std::set<Simplex> own(st.simplices.begin(), st.simplices.end());
    for (const auto& tau : st.simplices) {
      bool maximal = true;
      for (const auto& other : st.simplices)
        if (other.size() > tau.size() && std::includes(other.begin(), other.end(), tau.begin(), tau.end())) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      UnionFind uf;
      std::size_t roots = 0;
      for (const auto& rho : cx.all_simplices()) {
        if (!intersect(rho, tau).empty()) continue;
        Simplex u;
        std::set_union(rho.begin(), rho.end(), tau.begin(), tau.end(), std::back_inserter(u));
        if (!cx.contains(u)) continue;
        for (Vertex v : rho) uf.unite(v, rho.front());
      }
      std::set<Vertex> reps;
      for (auto& [v, parent] : uf.parent) reps.insert(uf.find(v));
      roots = reps.size();
      if (roots != 1)
        return "stratum " + std::to_string(st.id) + " has " + (roots == 0 ? "an empty" : "a disconnected") +
               " link at " + cx.simplex_name(tau);
    }
  }
  return std::nullopt;
}

}  // namespace ihc
