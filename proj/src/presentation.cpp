#include "ihc/presentation.hpp"

#include <sstream>

#include "ihc/smith.hpp"

namespace ihc {

std::size_t Presentation::dim(int k) const {
  if (k < 0 || k > top()) return 0;
  return labels[static_cast<std::size_t>(k)].size();
}

Matrix Presentation::outgoing(int k) const {
  if (k < 0 || k > top()) return Matrix(dim(next(k)), 0);
  return d[static_cast<std::size_t>(k)];
}

Matrix Presentation::incoming(int k) const {
  int p = prev(k);
  if (p < 0 || p > top()) return Matrix(dim(k), 0);
  return d[static_cast<std::size_t>(p)];
}

void Presentation::validate() const {
  for (int k = 0; k <= top(); ++k) {
    const Matrix& a = d[static_cast<std::size_t>(k)];
    if (a.rows() != dim(next(k)) || a.cols() != dim(k))
      throw PropertyError("differential shape mismatch in degree " + std::to_string(k));
    int n = next(k);
    if (n < 0 || n > top()) continue;
    if (!is_zero_mod(d[static_cast<std::size_t>(n)] * a, ring))
      throw PropertyError("d o d is nonzero starting in degree " + std::to_string(k));
  }
}

Presentation Presentation::dual() const {
  Presentation out;
  out.ring = ring;
  out.direction = direction == Direction::Cochain ? Direction::Chain : Direction::Cochain;
  out.labels = labels;
  for (int k = 0; k <= top(); ++k) {
    // new differential leaves degree k towards out.next(k); it is the transpose of the old
    // differential arriving from that degree
    int src = out.next(k);
    Matrix m;
    if (src < 0 || src > top()) {
      m = Matrix(out.dim(src), dim(k));
    } else {
      m = d[static_cast<std::size_t>(src)].transpose();
      // sign -(-1)^{|f|}, |f| the cochain degree of the pairing
      int f_degree = out.direction == Direction::Cochain ? k : src;
      if (f_degree % 2 == 0) m = m.negated();
      m.reduce(ring);
    }
    out.d.push_back(std::move(m));
  }
  return out;
}

Vector HomologyGroup::classify(const Vector& cycle) const {
  Vector a = u * (kernel_left_inverse * cycle);
  Vector out;
  for (std::size_t t = 0; t < torsion_rows.size(); ++t) {
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), a[torsion_rows[t]].get_mpz_t(), torsion[t].get_mpz_t());
    out.push_back(c);
  }
  for (std::size_t r : free_rows) out.push_back(ring.compute_ring().reduced(a[r]));
  return out;
}

std::string HomologyGroup::to_string() const {
  std::string base = ring.name();
  std::ostringstream out;
  bool any = false;
  if (free_rank > 0) {
    out << base << '^' << free_rank;
    any = true;
  }
  for (const auto& t : torsion) {
    if (any) out << '+';
    out << "Z/" << t.get_str();
    any = true;
  }
  if (!any) out << '0';
  return out.str();
}

HomologyGroup homology(const Presentation& p, int k) {
  const Ring cr = p.ring.compute_ring();
  Matrix out = p.outgoing(k);
  Matrix in = p.incoming(k);
  if (!is_zero_mod(out * in, cr)) throw PropertyError("d o d is nonzero into degree " + std::to_string(k));
  KernelBasis kb = kernel_basis(out, cr);
  Matrix a = kb.left_inverse * in;
  a.reduce(cr);
  SmithForm f = smith_normal_form(a, cr, kSmithU | kSmithUInv);
  HomologyGroup h;
  h.degree = k;
  h.ring = p.ring;
  h.kernel_left_inverse = kb.left_inverse;
  h.u = f.u;
  const std::size_t m = kb.basis.cols();
  Matrix gens = kb.basis * f.u_inv;
  gens.reduce(cr);
  if (p.ring.kind() == RingKind::Integers) {
    for (std::size_t i = 0; i < f.rank; ++i)
      if (f.diagonal[i] != 1) {
        h.torsion_rows.push_back(i);
        h.torsion.push_back(f.diagonal[i]);
        h.generators.push_back(gens.column(i));
      }
  }
  for (std::size_t i = f.rank; i < m; ++i) {
    h.free_rows.push_back(i);
    h.generators.push_back(gens.column(i));
  }
  h.free_rank = h.free_rows.size();
  return h;
}

std::vector<HomologyGroup> homology_all(const Presentation& p) {
  std::vector<HomologyGroup> out;
  for (int k = 0; k <= p.top(); ++k) out.push_back(homology(p, k));
  return out;
}

Presentation preimage_subcomplex(const Presentation& ambient, const std::vector<std::vector<bool>>& selectors) {
  const Ring cr = ambient.ring.compute_ring();
  const int top = ambient.top();
  if (static_cast<int>(selectors.size()) != top + 1) throw std::invalid_argument("selector count mismatch");
  std::vector<std::vector<std::size_t>> in_a(top + 1), out_a(top + 1);
  for (int k = 0; k <= top; ++k) {
    if (selectors[k].size() != ambient.dim(k)) throw std::invalid_argument("selector length mismatch");
    for (std::size_t i = 0; i < selectors[k].size(); ++i) (selectors[k][i] ? in_a : out_a)[k].push_back(i);
  }
  Presentation sub;
  sub.ring = ambient.ring;
  sub.direction = ambient.direction;
  sub.labels.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    int n = ambient.next(k);
    Matrix dk = ambient.outgoing(k).select_cols(in_a[k]);
    Matrix bad = (n >= 0 && n <= top) ? dk.select_rows(out_a[n]) : Matrix(0, in_a[k].size());
    KernelBasis kb = kernel_basis(bad, cr);
    Matrix incl(ambient.dim(k), kb.basis.cols());
    Matrix retr(kb.basis.cols(), ambient.dim(k));
    for (std::size_t a = 0; a < in_a[k].size(); ++a)
      for (std::size_t j = 0; j < kb.basis.cols(); ++j) {
        incl(in_a[k][a], j) = kb.basis(a, j);
        retr(j, in_a[k][a]) = kb.left_inverse(j, a);
      }
    for (std::size_t j = 0; j < kb.basis.cols(); ++j) {
      std::string label;
      for (std::size_t a = 0; a < in_a[k].size(); ++a)
        if (sgn(kb.basis(a, j)) != 0) {
          label = ambient.labels[k][in_a[k][a]];
          break;
        }
      sub.labels[k].push_back(label + "#" + std::to_string(j));
    }
    sub.inclusion.push_back(std::move(incl));
    sub.retraction.push_back(std::move(retr));
  }
  for (int k = 0; k <= top; ++k) {
    int n = ambient.next(k);
    Matrix image = ambient.outgoing(k) * sub.inclusion[k];
    Matrix dk;
    if (n < 0 || n > top) {
      dk = Matrix(0, sub.dim(k));
    } else {
      dk = sub.retraction[n] * image;
      dk.reduce(cr);
      if (!equal_mod(sub.inclusion[n] * dk, image, cr))
        throw PropertyError("preimage subcomplex is not closed in degree " + std::to_string(k));
    }
    sub.d.push_back(std::move(dk));
  }
  return sub;
}

Matrix restrict_map(const Presentation& src, const Presentation& dst, const Matrix& ambient, int k) {
  const Ring cr = dst.ring.compute_ring();
  Matrix image = src.is_subcomplex() ? ambient * src.inclusion[k] : ambient;
  if (!dst.is_subcomplex()) {
    image.reduce(cr);
    return image;
  }
  Matrix coords = dst.retraction[k] * image;
  coords.reduce(cr);
  if (!equal_mod(dst.inclusion[k] * coords, image, cr))
    throw PropertyError("map leaves the target subcomplex in degree " + std::to_string(k));
  return coords;
}

void check_chain_map(const Presentation& src, const Presentation& dst, const std::vector<Matrix>& f) {
  const Ring cr = dst.ring.compute_ring();
  for (int k = 0; k <= src.top(); ++k) {
    int n = src.next(k);
    if (n < 0 || n > src.top()) continue;
    Matrix lhs = f[n] * src.outgoing(k);
    Matrix rhs = dst.outgoing(k) * f[k];
    if (!equal_mod(lhs, rhs, cr)) throw PropertyError("not a chain map in degree " + std::to_string(k));
  }
}

InducedMap induced_map(const Presentation& /*src*/, const Presentation& dst, const Matrix& f_k, int k,
                       const HomologyGroup& hs, const HomologyGroup& hd) {
  const Ring cr = dst.ring.compute_ring();
  InducedMap out;
  out.degree = k;
  out.matrix = Matrix(hd.coordinate_count(), hs.generators.size());
  for (std::size_t j = 0; j < hs.generators.size(); ++j) {
    Vector y = f_k * hs.generators[j];
    for (auto& e : y) cr.reduce(e);
    if (!is_zero_mod(dst.outgoing(k) * y, cr)) throw PropertyError("image of a cycle is not a cycle");
    Vector c = hd.classify(y);
    for (std::size_t i = 0; i < c.size(); ++i) out.matrix(i, j) = c[i];
  }
  std::vector<std::size_t> free_r, free_c;
  for (std::size_t i = hd.torsion.size(); i < hd.coordinate_count(); ++i) free_r.push_back(i);
  for (std::size_t j = hs.torsion.size(); j < hs.generators.size(); ++j) free_c.push_back(j);
  out.rank = rank(out.matrix.select_rows(free_r).select_cols(free_c), cr);
  if (dst.ring.kind() != RingKind::Integers) {
    out.iso = out.rank == hs.free_rank && out.rank == hd.free_rank;
    return out;
  }
  if (!(hs == hd)) return out;
  // Surjective onto Z^f + sum Z/t: the relations [A | diag(t, 0)] must have unit invariant factors.
  Matrix rel(hd.coordinate_count(), hd.torsion.size());
  for (std::size_t t = 0; t < hd.torsion.size(); ++t) rel(t, t) = hd.torsion[t];
  SmithForm f = smith_normal_form(out.matrix.hstack(rel), cr, kSmithNone);
  bool surjective = f.rank == hd.coordinate_count();
  for (const auto& s : f.diagonal) surjective = surjective && s == 1;
  out.iso = surjective;
  return out;
}

InducedMap induced_map(const Presentation& src, const Presentation& dst, const Matrix& f_k, int k) {
  return induced_map(src, dst, f_k, k, homology(src, k), homology(dst, k));
}

std::optional<Witness> coboundary_witness(const Presentation& p, int k, const Vector& v) {
  Matrix a = p.incoming(k);
  if (p.ring.kind() == RingKind::Rationals) {
    auto s = solve_rational(a, v);
    if (!s) return std::nullopt;
    return Witness{s->x, s->scale};
  }
  auto x = solve(a, v, p.ring);
  if (!x) return std::nullopt;
  return Witness{*x, Integer(1)};
}

}  // namespace ihc
