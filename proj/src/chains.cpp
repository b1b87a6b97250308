#include "ihc/chains.hpp"

#include <sstream>

namespace ihc {

ExtInt simplex_perverse_degree(const WeightedComplex& cx, const Simplex& s, const Stratum& st) {
  if (!cx.meets(s, st)) return ExtInt::neg_inf();
  return ExtInt(static_cast<long>(cx.decompose(s).prefix(st.index).size()) - 1);
}

bool is_allowable(const WeightedComplex& cx, const Simplex& s, const Perversity& p) {
  const long dim = static_cast<long>(s.size()) - 1;
  for (const auto& st : cx.strata())
    if (simplex_perverse_degree(cx, s, st) > ExtInt(dim - st.codim) + p(st)) return false;
  return true;
}

bool is_tame(const WeightedComplex& cx, const Simplex& s, const Perversity& p) {
  return cx.regular(s) && is_allowable(cx, s, p);
}

bool is_allowable(const WeightedComplex& cx, const SimplexChain& c, const Perversity& p) {
  for (const auto& [s, coeff] : c)
    if (sgn(coeff) != 0 && !is_allowable(cx, s, p)) return false;
  return true;
}

SimplexChain gd(const WeightedComplex& cx, const Simplex& s) {
  if (!cx.regular(s)) throw InputError("regular boundary of a non-regular simplex: " + cx.simplex_name(s));
  SimplexChain out;
  for (const auto& [f, e] : boundary(s))
    if (cx.regular(f)) out[f] += e;
  return out;
}

SimplexChain gd(const WeightedComplex& cx, const SimplexChain& c) {
  SimplexChain out;
  for (const auto& [s, coeff] : c)
    for (const auto& [f, e] : gd(cx, s)) out[f] += coeff * e;
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace {

Presentation chain_presentation(const WeightedComplex& cx, const Ring& ring, bool regular_only) {
  Presentation p;
  p.ring = ring;
  p.direction = Direction::Chain;
  std::vector<std::vector<Simplex>> layers;
  for (int d = 0; d <= cx.top_dimension(); ++d) {
    layers.push_back(regular_only ? cx.regular_simplices(d) : cx.simplices(d));
    std::vector<std::string> labels;
    for (const auto& s : layers.back()) labels.push_back(cx.simplex_name(s));
    p.labels.push_back(std::move(labels));
  }
  for (int d = 0; d <= cx.top_dimension(); ++d) {
    const std::size_t rows = d == 0 ? 0 : layers[static_cast<std::size_t>(d - 1)].size();
    Matrix m(rows, layers[static_cast<std::size_t>(d)].size());
    if (d > 0) {
      std::map<Simplex, std::size_t> pos;
      for (std::size_t i = 0; i < layers[static_cast<std::size_t>(d - 1)].size(); ++i)
        pos[layers[static_cast<std::size_t>(d - 1)][i]] = i;
      for (std::size_t j = 0; j < layers[static_cast<std::size_t>(d)].size(); ++j) {
        const Simplex& s = layers[static_cast<std::size_t>(d)][j];
        for (const auto& [f, e] : regular_only ? gd(cx, s) : boundary(s)) m(pos.at(f), j) = e;
      }
    }
    m.reduce(ring.compute_ring());
    p.d.push_back(std::move(m));
  }
  return p;
}

}  // namespace

Presentation regular_chains(const WeightedComplex& cx, const Ring& ring) { return chain_presentation(cx, ring, true); }

Presentation simplicial_chains(const WeightedComplex& cx, const Ring& ring) {
  return chain_presentation(cx, ring, false);
}

Presentation simplicial_cochains(const WeightedComplex& cx, const Ring& ring) {
  return simplicial_chains(cx, ring).dual();
}

Presentation tame_complex(const WeightedComplex& cx, const Perversity& p, const Ring& ring) {
  if (p.owner() != cx.fingerprint()) throw InputError("perversity does not belong to this complex");
  Presentation amb = regular_chains(cx, ring);
  std::vector<std::vector<bool>> sel;
  for (int d = 0; d <= cx.top_dimension(); ++d) {
    std::vector<bool> row;
    for (const auto& s : cx.regular_simplices(d)) row.push_back(is_allowable(cx, s, p));
    sel.push_back(std::move(row));
  }
  return preimage_subcomplex(amb, sel);
}

Presentation tame_cochains(const WeightedComplex& cx, const Perversity& p, const Ring& ring) {
  return tame_complex(cx, p, ring).dual();
}

Vector chain_to_vector(const WeightedComplex& cx, const SimplexChain& c, int dim, bool regular_only) {
  const auto layer = regular_only ? cx.regular_simplices(dim) : cx.simplices(dim);
  std::map<Simplex, std::size_t> pos;
  for (std::size_t i = 0; i < layer.size(); ++i) pos[layer[i]] = i;
  Vector v(layer.size());
  for (const auto& [s, coeff] : c) {
    auto it = pos.find(s);
    if (it == pos.end()) throw std::invalid_argument("chain term outside the chosen basis: " + cx.simplex_name(s));
    v[it->second] = coeff;
  }
  return v;
}

SimplexChain vector_to_chain(const WeightedComplex& cx, const Vector& v, int dim, bool regular_only) {
  const auto layer = regular_only ? cx.regular_simplices(dim) : cx.simplices(dim);
  SimplexChain c;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) c[layer[i]] = v[i];
  return c;
}

std::string export_chain(const WeightedComplex& cx, const SimplexChain& c) {
  std::ostringstream out;
  for (const auto& [s, coeff] : c) {
    if (sgn(coeff) == 0) continue;
    out << coeff.get_str();
    for (Vertex v : s) out << ' ' << cx.name(v);
    out << '\n';
  }
  return out.str();
}

}  // namespace ihc
