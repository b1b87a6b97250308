#include "ihc/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "ihc/builders.hpp"

namespace ihc {

namespace {

Cochain one(const Cell& c) {
  Cochain w;
  w[c] = 1;
  return w;
}

template <class Map>
Map combine(Map a, const Map& b, int sign) {
  for (const auto& [key, x] : b) a[key] += sign * x;
  for (auto it = a.begin(); it != a.end();) it = sgn(it->second) == 0 ? a.erase(it) : std::next(it);
  return a;
}

SimplexChain single(const Simplex& s) {
  SimplexChain c;
  c[s] = 1;
  return c;
}

bool face_of(const Simplex& face, const Simplex& s) {
  return std::includes(s.begin(), s.end(), face.begin(), face.end());
}

int koszul(int a, int b) { return (a * b) % 2 ? -1 : 1; }

std::string where(const std::string& name, int degree) {
  return name + " (degree " + std::to_string(degree) + ")";
}

std::vector<fixtures::Named> corpus_by_size(std::size_t max_vertices) {
  std::vector<fixtures::Named> out;
  for (auto& f : fixtures::corpus())
    if (f.complex.vertex_count() <= max_vertices) out.push_back(std::move(f));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.complex.vertex_count() < b.complex.vertex_count();
  });
  return out;
}

// Regular simplices that are tame for q and whose regular boundary is tame too.
std::vector<Simplex> tame_generators(const WeightedComplex& cx, const Perversity& q, int d) {
  std::vector<Simplex> out;
  for (const auto& s : cx.regular_simplices(d)) {
    if (!is_allowable(cx, s, q)) continue;
    if (!is_allowable(cx, gd(cx, single(s)), q)) continue;
    out.push_back(s);
  }
  return out;
}

}  // namespace

void PropertyResult::fail(const std::string& what) {
  if (pass) counterexample = what;
  pass = false;
}

void check_differentials(const std::string& name, const WeightedComplex& cx, PropertyResult& r) {
  BlowupComplex b(cx);
  for (int k = 0; k <= b.top(); ++k) {
    if (k + 1 <= b.top())
      r.check((b.differential_matrix(k + 1) * b.differential_matrix(k)).is_zero(),
              "delta^2 != 0 on " + where(name, k));
    r.check(b.factorwise_matrix(k) == b.differential_matrix(k),
            "adjunction and factor-wise differentials differ on " + where(name, k));
  }
  const Presentation chains = simplicial_chains(cx, Ring::integers());
  for (int k = 2; k <= chains.top(); ++k)
    r.check((chains.d[static_cast<std::size_t>(k - 1)] * chains.d[static_cast<std::size_t>(k)]).is_zero(),
            "boundary^2 != 0 on " + where(name, k));
  const Presentation reg = regular_chains(cx, Ring::integers());
  for (int k = 2; k <= reg.top(); ++k)
    r.check((reg.d[static_cast<std::size_t>(k - 1)] * reg.d[static_cast<std::size_t>(k)]).is_zero(),
            "regular boundary^2 != 0 on " + where(name, k));
}

void check_cup_leibniz(const std::string& name, const WeightedComplex& cx, PropertyResult& r) {
  BlowupComplex b(cx);
  for (int i = 0; i <= b.top(); ++i)
    for (int j = 0; i + j <= b.top(); ++j)
      for (const auto& a : b.basis(i))
        for (const auto& c : b.basis(j)) {
          const Cochain A = one(a), C = one(c);
          const Cochain lhs = differential(cx, cup(cx, A, C));
          const Cochain rhs =
              combine(cup(cx, differential(cx, A), C), cup(cx, A, differential(cx, C)), i % 2 ? -1 : 1);
          r.check(lhs == rhs, "cup Leibniz fails for " + cell_name(cx, a) + " u " + cell_name(cx, c) + " on " +
                                  where(name, i + j + 1));
        }
}

void check_cup_algebra(const std::string& name, const WeightedComplex& cx, PropertyResult& r) {
  BlowupComplex b(cx);
  const Cochain u = unit_cochain(cx);
  for (int i = 0; i <= b.top(); ++i)
    for (const auto& a : b.basis(i)) {
      const Cochain A = one(a);
      r.check(cup(cx, u, A) == A && cup(cx, A, u) == A, "unit law fails for " + cell_name(cx, a) + " on " + where(name, i));
    }
  for (int i = 0; i <= b.top(); ++i)
    for (int j = 0; i + j <= b.top(); ++j)
      for (int k = 0; i + j + k <= b.top(); ++k)
        for (const auto& a : b.basis(i))
          for (const auto& c : b.basis(j)) {
            const Cochain ac = cup(cx, one(a), one(c));
            for (const auto& e : b.basis(k)) {
              const Cochain E = one(e);
              r.check(cup(cx, ac, E) == cup(cx, one(a), cup(cx, one(c), E)),
                      "cup associativity fails for " + cell_name(cx, a) + ", " + cell_name(cx, c) + ", " +
                          cell_name(cx, e) + " on " + where(name, i + j + k));
            }
          }
}

void check_cap_leibniz(const std::string& name, const WeightedComplex& cx, PropertyResult& r) {
  BlowupComplex b(cx);
  for (const Perversity& p : {Perversity::zero(cx), Perversity::top(cx)}) {
    const Perversity q = p.dual();
    for (int d = 0; d <= cx.top_dimension(); ++d)
      for (const auto& s : tame_generators(cx, q, d)) {
        const SimplexChain xi = single(s);
        const SimplexChain dxi = gd(cx, xi);
        for (int i = 0; i <= d && i <= b.top(); ++i)
          for (const auto& a : b.basis(i)) {
            const Cochain A = one(a);
            const Cochain dA = differential(cx, A);
            if (!is_allowable(cx, A, p) || !is_allowable(cx, dA, p)) continue;
            const SimplexChain lhs = gd(cx, cap(cx, A, xi));
            const SimplexChain rhs = combine(cap(cx, dA, xi), cap(cx, A, dxi), i % 2 ? -1 : 1);
            r.check(lhs == rhs, "cap Leibniz fails for " + cell_name(cx, a) + " cap " + cx.simplex_name(s) + " at " +
                                    p.to_string() + " on " + where(name, d - i - 1));
          }
      }
  }
}

void check_cap_algebra(const std::string& name, const WeightedComplex& cx, PropertyResult& r) {
  BlowupComplex b(cx);
  const Cochain u = unit_cochain(cx);
  for (int d = 0; d <= cx.top_dimension(); ++d)
    for (const auto& s : cx.regular_simplices(d)) {
      const SimplexChain xi = single(s);
      r.check(cap(cx, u, xi) == xi, "unit cap fails on " + cx.simplex_name(s) + " in " + where(name, d));
      for (int i = 0; i <= d && i <= b.top(); ++i)
        for (int j = 0; i + j <= d && i + j <= b.top(); ++j)
          for (const auto& a : b.basis(i)) {
            if (!face_of(a.simplex, s)) continue;
            const Cochain A = one(a);
            const SimplexChain a_xi = cap(cx, A, xi);
            for (const auto& c : b.basis(j)) {
              if (!face_of(c.simplex, s)) continue;
              const Cochain C = one(c);
              const SimplexChain lhs = cap(cx, cup(cx, A, C), xi);
              const SimplexChain rhs = cap(cx, C, a_xi);
              r.check(lhs == combine(SimplexChain{}, rhs, koszul(i, j)),
                      "cup/cap identity fails for " + cell_name(cx, a) + ", " + cell_name(cx, c) + " on " +
                          cx.simplex_name(s) + " in " + where(name, d - i - j));
            }
          }
    }
}

void check_prism_boundary(const std::string& name, const WeightedComplex& cx, PropertyResult& r) {
  BlowupComplex b(cx);
  for (int d = 0; d <= cx.top_dimension(); ++d)
    for (const auto& s : cx.regular_simplices(d)) {
      PrismChain top;
      top[top_cell(cx, s)] = 1;
      const PrismChain bd = prism_boundary(cx, top);
      PrismChain expected;
      for (const auto& [f, e] : gd(cx, s)) expected[top_cell(cx, f)] += e;
      for (const auto& t : hidden_faces(cx, s)) expected[t.cell] += t.sign;
      expected = combine(expected, PrismChain{}, 1);
      r.check(bd == expected, "prism boundary differs from regular plus hidden faces on " + cx.simplex_name(s) +
                                  " in " + where(name, d));
    }
  for (int k = 0; k <= b.top(); ++k)
    for (const auto& c : b.basis(k)) {
      PrismChain pc;
      pc[c] = 1;
      const SimplexChain lhs = mu_push(cx, prism_boundary(cx, pc));
      const SimplexChain rhs = boundary(mu_push(cx, pc));
      r.check(lhs == rhs, "mu_* does not commute with the boundary at " + cell_name(cx, c) + " on " + where(name, k));
    }
}

void check_chi_identity(const std::string& name, const WeightedComplex& cx, PropertyResult& r) {
  BlowupComplex b(cx);
  for (const Perversity& p : {Perversity::zero(cx), Perversity::top(cx)}) {
    const Perversity q = p.dual();
    for (int d = 1; d <= cx.top_dimension(); ++d) {
      if (d - 1 > b.top()) break;
      for (const auto& s : tame_generators(cx, q, d)) {
        const SimplexChain ds = gd(cx, single(s));
        for (const auto& a : b.basis(d - 1)) {
          const Cochain A = one(a);
          const Cochain dA = differential(cx, A);
          if (!is_allowable(cx, A, p) || !is_allowable(cx, dA, p)) continue;
          const auto x1 = chi(cx, dA);
          const auto x0 = chi(cx, A);
          Integer lhs = x1.count(s) ? x1.at(s) : Integer(0);
          Integer rhs = 0;
          for (const auto& [f, e] : ds)
            if (auto it = x0.find(f); it != x0.end()) rhs += it->second * e;
          if ((d - 1) % 2 == 0) rhs = -rhs;
          r.check(lhs == rhs, "chi fails to commute with differentials at " + cell_name(cx, a) + " on " +
                                  cx.simplex_name(s) + " in " + where(name, d));
        }
      }
    }
  }
}

void check_graded_commutativity(const std::string& name, const WeightedComplex& cx, const Perversity& p,
                                const Ring& ring, PropertyResult& r) {
  BlowupComplex b(cx);
  const Perversity pp = p + p;
  const Presentation np = intersection_subcomplex(b, p, ring);
  const Presentation npp = intersection_subcomplex(b, pp, ring);
  const auto groups = homology_all(np);
  for (const auto& hi : groups)
    for (const auto& hj : groups) {
      const int i = hi.degree, j = hj.degree;
      if (i + j > npp.top()) continue;
      for (const auto& gi : hi.generators)
        for (const auto& gj : hj.generators) {
          const Cochain w = b.from_vector(np.inclusion[static_cast<std::size_t>(i)] * gi, i);
          const Cochain e = b.from_vector(np.inclusion[static_cast<std::size_t>(j)] * gj, j);
          const Cochain diff = combine(cup(cx, w, e), cup(cx, e, w), -koszul(i, j));
          const Vector amb = b.to_vector(diff, i + j);
          const Vector coords = npp.retraction[static_cast<std::size_t>(i + j)] * amb;
          const bool ok = npp.inclusion[static_cast<std::size_t>(i + j)] * coords == amb &&
                          coboundary_witness(npp, i + j, coords).has_value();
          r.check(ok, "no degree-" + std::to_string(i + j) + " witness for graded commutativity on " + name + " at " +
                          p.to_string());
        }
    }
}

WeightedComplex block_simplex(const std::vector<int>& sizes) {
  const int n = static_cast<int>(sizes.size()) - 1;
  std::vector<VertexSpec> vs;
  std::vector<int> facet;
  int id = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < sizes[static_cast<std::size_t>(i)]; ++j) {
      vs.push_back({"v" + std::to_string(id), i});
      facet.push_back(id++);
    }
  return WeightedComplex::build(n, vs, {facet});
}

std::vector<std::vector<int>> block_shapes(int max_vertices, int max_n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int n, int left) {
    if (static_cast<int>(cur.size()) == n) {
      for (int last = 1; last <= left; ++last) {
        cur.push_back(last);
        out.push_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int s = 0; s <= left - 1; ++s) {
      cur.push_back(s);
      rec(n, left - s);
      cur.pop_back();
    }
  };
  for (int n = 1; n <= max_n; ++n) rec(n, max_vertices);
  return out;
}

void check_amalgamation(const WeightedComplex& simplex, int k, PropertyResult& r) {
  const int n = simplex.n();
  const Refinement f(simplex, WeightRecoding::elementary(n, k));
  const BlowupComplex& F = f.fine();
  const BlowupComplex& C = f.coarse();
  const WeightedComplex& fine = F.complex();
  const WeightedComplex& coarse = C.complex();
  const FilteredSimplex blocks = fine.decompose(fine.facets().front());
  const int j0 = n - k - 1;
  std::ostringstream tag;
  tag << "blocks(";
  for (std::size_t i = 0; i < blocks.blocks.size(); ++i) tag << (i ? "," : "") << blocks.blocks[i].size();
  tag << ") k=" << k;
  const std::string name = tag.str();

  for (int d = 0; d + 1 <= std::min(F.top(), C.top()); ++d)
    r.check(f.matrix(d + 1) * C.differential_matrix(d) == F.differential_matrix(d) * f.matrix(d),
            "pullback is not a chain map on " + name + " in degree " + std::to_string(d));

  for (int i = 0; i <= C.top(); ++i)
    for (int j = 0; i + j <= C.top(); ++j)
      for (const auto& a : C.basis(i))
        for (const auto& c : C.basis(j))
          r.check(f.pullback(cup(coarse, one(a), one(c))) == cup(fine, f.pullback(one(a)), f.pullback(one(c))),
                  "pullback is not multiplicative for " + cell_name(coarse, a) + ", " + cell_name(coarse, c) +
                      " on " + name);

  for (int d = 0; d <= F.top(); ++d)
    for (const auto& c : F.basis(d)) {
      PrismChain pc;
      pc[c] = 1;
      r.check(amalgam_push(fine, coarse, f.recoding(), prism_boundary(fine, pc)) ==
                  prism_boundary(coarse, amalgam_push(fine, coarse, f.recoding(), pc)),
              "push does not commute with the prism boundary at " + cell_name(fine, c) + " on " + name);
    }

  for (int d = 0; d <= fine.top_dimension(); ++d)
    for (const auto& s : fine.regular_simplices(d))
      for (int i = 0; i <= C.top(); ++i)
        for (const auto& a : C.basis(i)) {
          if (!face_of(a.simplex, s)) continue;
          PrismChain lhs;
          for (const auto& [c, x] : f.pullback(one(a)))
            if (auto t = cap_blowup(fine, c, s)) lhs[t->cell] += x * t->sign;
          lhs = combine(lhs, PrismChain{}, 1);
          PrismChain rhs;
          if (auto t = cap_blowup(coarse, a, s)) rhs[t->cell] = t->sign;
          r.check(amalgam_push(fine, coarse, f.recoding(), lhs) == rhs,
                  "cap compatibility fails for " + cell_name(coarse, a) + " on " + fine.simplex_name(s) + " of " +
                      name);
        }

  // Degree bound; equality when one of the merged blocks is empty.
  const bool simple = blocks.blocks[static_cast<std::size_t>(j0)].empty() ||
                      blocks.blocks[static_cast<std::size_t>(j0 + 1)].empty();
  for (int i = 0; i <= C.top(); ++i)
    for (const auto& a : C.basis(i)) {
      const Cochain w = f.pullback(one(a));
      for (int l = 1; l <= n; ++l) {
        if (blocks.blocks[static_cast<std::size_t>(n - l)].empty()) continue;
        ExtInt lhs = ExtInt::neg_inf();
        for (const auto& [c, x] : w) lhs = max(lhs, perverse_degree_local(fine, c, l));
        const int lc = coarse.n() - f.recoding().phi[static_cast<std::size_t>(n - l)];
        const ExtInt rhs = lc == 0 ? ExtInt(0) : perverse_degree_local(coarse, a, lc);
        r.check(lhs <= rhs, "perverse degree grows under pullback of " + cell_name(coarse, a) + " at level " +
                                std::to_string(l) + " on " + name);
        if (simple)
          r.check(lhs == rhs, "perverse degree not preserved by the simple amalgamation for " + cell_name(coarse, a) +
                                  " at level " + std::to_string(l) + " on " + name);
      }
    }

  // Xi formula against the transposed push
  const auto& e0 = blocks.blocks[static_cast<std::size_t>(j0)];
  const auto& e1 = blocks.blocks[static_cast<std::size_t>(j0 + 1)];
  for (int i = 0; i <= C.top(); ++i)
    for (const auto& a : C.basis(i)) {
      const TensorCell t = factors(coarse, a);
      Cochain expected;
      for (const auto& term : xi(t[static_cast<std::size_t>(j0)], e0, e1, j0 + 1 == n)) {
        TensorCell u(t.begin(), t.begin() + j0);
        u.push_back(term.first);
        u.push_back(term.second);
        u.insert(u.end(), t.begin() + j0 + 1, t.end());
        const Cell c = from_factors(u);
        if (valid_cell(fine, c)) expected[c] += term.sign;
      }
      expected = combine(expected, Cochain{}, 1);
      r.check(f.pullback(one(a)) == expected, "Xi formula disagrees with the pullback of " + cell_name(coarse, a) +
                                                   " on " + name);
    }
}

void check_functoriality(const WeightedComplex& simplex, PropertyResult& r) {
  const int n = simplex.n();
  if (n < 2) return;
  for (int k1 = 0; k1 < n; ++k1) {
    const WeightRecoding r1 = WeightRecoding::elementary(n, k1);
    const Refinement f1(simplex, r1);
    for (int k2 = 0; k2 < n - 1; ++k2) {
      const WeightRecoding r2 = WeightRecoding::elementary(n - 1, k2);
      const Refinement f2(f1.coarse().complex(), r2);
      const Refinement f12(simplex, r1.then(r2));
      for (int i = 0; i <= f12.coarse().top(); ++i)
        for (const auto& a : f12.coarse().basis(i))
          r.check(f1.pullback(f2.pullback(one(a))) == f12.pullback(one(a)),
                  "pullbacks do not compose for " + r1.to_string() + " then " + r2.to_string() + " at " +
                      cell_name(f12.coarse().complex(), a));
    }
  }
}

void check_refinement_iso(const WeightedComplex& fine, const WeightRecoding& rec, const Ring& ring, PropertyResult& r) {
  const Refinement f(fine, rec);
  const WeightedComplex& coarse = f.coarse().complex();
  int max_codim = 0;
  for (const auto& s : coarse.strata()) max_codim = std::max(max_codim, s.codim);
  for (const auto& values : gm_perversities(max_codim, max_codim)) {
    const Perversity pc = Perversity::gm(coarse, values);
    const Perversity pf = pc.pullback(coarse, fine);
    const auto degrees = compare_homology(refinement_map(f, pc, pf, ring));
    for (const auto& d : degrees)
      r.check(d.iso, "refinement pullback is not an isomorphism in degree " + std::to_string(d.degree) + " at " +
                         pc.to_string() + " over " + ring.name());
  }
}

void check_closure(const std::string& name, const WeightedComplex& cx, std::size_t samples, std::mt19937_64& rng,
                   PropertyResult& r) {
  BlowupComplex b(cx);
  const Ring z = Ring::integers();
  const std::vector<ExtInt> pool = {ExtInt::neg_inf(), ExtInt(-1), ExtInt(0), ExtInt(1), ExtInt(2), ExtInt::pos_inf()};
  std::map<std::vector<ExtInt>, Presentation> ncache, tcache;
  auto random_perversity = [&]() {
    std::vector<ExtInt> v;
    for (const auto& s : cx.strata()) v.push_back(s.singular() ? pool[rng() % pool.size()] : ExtInt(0));
    return Perversity::with_values(cx, v);
  };
  auto npres = [&](const Perversity& p) -> const Presentation& {
    auto it = ncache.find(p.values());
    if (it == ncache.end()) it = ncache.emplace(p.values(), intersection_subcomplex(b, p, z)).first;
    return it->second;
  };
  auto tpres = [&](const Perversity& q) -> const Presentation& {
    auto it = tcache.find(q.values());
    if (it == tcache.end()) it = tcache.emplace(q.values(), tame_complex(cx, q, z)).first;
    return it->second;
  };
  auto random_element = [&](const Presentation& p, int k) {
    const Matrix& inc = p.inclusion[static_cast<std::size_t>(k)];
    Vector v(inc.rows());
    for (std::size_t c = 0; c < inc.cols(); ++c) {
      const long coeff = static_cast<long>(rng() % 5) - 2;
      if (coeff == 0) continue;
      for (std::size_t row = 0; row < inc.rows(); ++row) v[row] += coeff * inc(row, c);
    }
    return v;
  };
  const int top = b.top();
  for (std::size_t sample = 0; sample < samples; ++sample) {
    const Perversity p = random_perversity();
    const Perversity q = random_perversity();
    const Perversity pq = p + q;
    const Presentation& np = npres(p);
    const Presentation& nq = npres(q);
    const int i = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
    const int j = static_cast<int>(rng() % static_cast<unsigned>(top - i + 1));
    const Cochain w = b.from_vector(random_element(np, i), i);
    const Cochain e = b.from_vector(random_element(nq, j), j);
    const Cochain we = cup(cx, w, e);
    const std::string at = " for " + p.to_string() + " and " + q.to_string() + " on " + name;
    r.check(is_allowable(cx, we, pq) && is_allowable(cx, differential(cx, we), pq),
            "cup leaves the intersection cochains in degree " + std::to_string(i + j) + at);

    const Presentation& tq = tpres(q);
    const int m = i + static_cast<int>(rng() % static_cast<unsigned>(std::max(0, tq.top() - i) + 1));
    if (m > tq.top()) continue;
    const SimplexChain xi = vector_to_chain(cx, random_element(tq, m), m, true);
    const SimplexChain out = cap(cx, w, xi);
    bool ok = is_allowable(cx, out, pq) && is_allowable(cx, gd(cx, out), pq);
    for (const auto& [s, x] : out) ok = ok && cx.regular(s);
    r.check(ok, "cap leaves the tame chains in degree " + std::to_string(m - i) + at);
  }
}

void check_monotonicity(const std::string& name, const WeightedComplex& cx, PropertyResult& r) {
  BlowupComplex b(cx);
  const Ring z = Ring::integers();
  std::vector<Perversity> chain = {Perversity::constant(cx, ExtInt::neg_inf()), Perversity::constant(cx, ExtInt(-1)),
                                   Perversity::zero(cx), Perversity::top(cx),
                                   Perversity::constant(cx, ExtInt::pos_inf())};
  std::vector<Presentation> pres;
  for (const auto& p : chain) pres.push_back(intersection_subcomplex(b, p, z));
  for (std::size_t a = 0; a + 1 < chain.size(); ++a) {
    if (!(chain[a] <= chain[a + 1])) continue;
    for (int k = 0; k <= b.top(); ++k) {
      bool ok = true;
      try {
        restrict_map(pres[a], pres[a + 1], Matrix::identity(b.basis(k).size()), k);
      } catch (const PropertyError&) {
        ok = false;
      }
      r.check(ok, "intersection cochains of " + chain[a].to_string() + " not inside those of " +
                      chain[a + 1].to_string() + " on " + where(name, k));
    }
  }
}

std::vector<std::string> group_tables(const WeightedComplex& cx, const Perversity& p0, const Perversity& pt,
                                      const Ring& ring) {
  BlowupComplex b(cx);
  std::vector<std::string> out;
  auto table = [&](const std::string& label, const Presentation& p) {
    std::string line = label + ":";
    for (const auto& h : homology_all(p)) line += " H" + std::to_string(h.degree) + "=" + h.to_string();
    out.push_back(line);
  };
  table("N0", intersection_subcomplex(b, p0, ring));
  table("Nt", intersection_subcomplex(b, pt, ring));
  table("tame0", tame_complex(cx, p0, ring));
  table("tamet", tame_complex(cx, pt, ring));
  return out;
}

void check_shift(const std::string& name, const WeightedComplex& cx, int m, PropertyResult& r) {
  const WeightedComplex sh = cx.shifted(m);
  const Perversity p0 = Perversity::zero(cx), pt = Perversity::top(cx);
  for (const Ring& ring : {Ring::integers(), Ring::rationals()}) {
    const auto a = group_tables(cx, p0, pt, ring);
    const auto b = group_tables(sh, p0.rebind(sh), pt.rebind(sh), ring);
    for (std::size_t i = 0; i < a.size(); ++i)
      r.check(i < b.size() && a[i] == b[i], "shift by " + std::to_string(m) + " changes " + a[i] + " on " + name +
                                                " over " + ring.name());
  }
}

std::vector<std::string> verify_suites() { return {"signs", "cup", "cap", "amalgam", "closure", "shift"}; }

std::vector<PropertyResult> verify(std::string_view suite, const VerifyOptions& options) {
  if (suite == "all") {
    std::vector<PropertyResult> out;
    for (const auto& s : verify_suites()) {
      auto part = verify(s, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const auto suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw InputError("unknown verify suite: " + std::string(suite));

  std::vector<PropertyResult> out;
  out.reserve(8);
  auto property = [&](const std::string& name) -> PropertyResult& {
    out.push_back(PropertyResult{std::string(suite), name, true, 0, {}});
    return out.back();
  };
  const auto small = corpus_by_size(options.max_vertices);
  std::mt19937_64 rng(options.seed);

  if (suite == "signs") {
    PropertyResult& d = property("differentials");
    for (const auto& f : corpus_by_size(1000)) check_differentials(f.name, f.complex, d);
    for (std::size_t i = 0; i < options.samples; ++i)
      check_differentials("random#" + std::to_string(i), fixtures::random_complex(rng, 8, 3), d);
    PropertyResult& cl = property("cup Leibniz");
    for (const auto& f : small) check_cup_leibniz(f.name, f.complex, cl);
    PropertyResult& kl = property("cap Leibniz");
    for (const auto& f : small) check_cap_leibniz(f.name, f.complex, kl);
    PropertyResult& pb = property("prism boundary");
    for (const auto& f : small) check_prism_boundary(f.name, f.complex, pb);
    PropertyResult& ch = property("chi identity");
    for (const auto& f : small) check_chi_identity(f.name, f.complex, ch);
  } else if (suite == "cup") {
    PropertyResult& al = property("associativity and unit");
    for (const auto& f : small) check_cup_algebra(f.name, f.complex, al);
    PropertyResult& cl = property("Leibniz");
    for (const auto& f : small) check_cup_leibniz(f.name, f.complex, cl);
    PropertyResult& gc = property("graded commutativity");
    for (const std::string name : {"sphere2", "susp_torus"}) {
      const WeightedComplex cx = fixtures::by_name(name);
      for (const auto& p : {Perversity::zero(cx), Perversity::top(cx)})
        check_graded_commutativity(name, cx, p, Ring::integers(), gc);
    }
  } else if (suite == "cap") {
    PropertyResult& kl = property("Leibniz");
    for (const auto& f : small) check_cap_leibniz(f.name, f.complex, kl);
    PropertyResult& al = property("cup/cap identity and unit");
    for (const auto& f : small) check_cap_algebra(f.name, f.complex, al);
  } else if (suite == "amalgam") {
    PropertyResult& laws = property("amalgamation laws");
    PropertyResult& fun = property("functoriality");
    for (const auto& shape : block_shapes(options.amalgam_vertices, 3)) {
      const WeightedComplex cx = block_simplex(shape);
      for (int k = 0; k < cx.n(); ++k) check_amalgamation(cx, k, laws);
      check_functoriality(cx, fun);
    }
    PropertyResult& iso = property("fake sphere refinement");
    const WeightRecoding rec{fixtures::fake_sphere_recoding(), 2};
    for (const Ring& ring : {Ring::rationals(), Ring::integers()}) check_refinement_iso(fixtures::fake_sphere(), rec, ring, iso);
  } else if (suite == "closure") {
    PropertyResult& cl = property("allowability closure");
    for (const auto& f : small) check_closure(f.name, f.complex, options.samples, rng, cl);
    PropertyResult& mo = property("monotonicity");
    for (const auto& f : corpus_by_size(1000)) check_monotonicity(f.name, f.complex, mo);
  } else if (suite == "shift") {
    PropertyResult& sh = property("shift invariance");
    for (const auto& f : corpus_by_size(1000))
      for (int m : {1, 2}) check_shift(f.name, f.complex, m, sh);
  }
  return out;
}

}  // namespace ihc
