#include "ihc/compare.hpp"

#include <algorithm>
#include <functional>

namespace ihc {

namespace {

// Append empty degrees so the presentation reaches degree `top`.
Presentation padded(Presentation p, int top) {
  while (p.top() < top) {
    const int k = p.top() + 1;
    const std::size_t below = k == 0 ? 0 : p.dim(k - 1);
    p.labels.emplace_back();
    p.d.push_back(p.direction == Direction::Cochain ? Matrix(0, 0) : Matrix(below, 0));
    if (p.is_subcomplex()) {
      p.inclusion.emplace_back(0, 0);
      p.retraction.emplace_back(0, 0);
    }
  }
  return p;
}

void pad_pair(ChainMap& f) {
  const int top = std::max(f.source.top(), f.target.top());
  f.source = padded(std::move(f.source), top);
  f.target = padded(std::move(f.target), top);
}

Matrix ambient_or_empty(const std::function<Matrix(int)>& make, int k, int limit, std::size_t rows, std::size_t cols) {
  if (k > limit) return Matrix(rows, cols);
  return make(k);
}

void require_singular(const WeightedComplex& cx, const Perversity& p, const std::function<bool(ExtInt, int)>& ok,
                      const std::string& what) {
  for (const auto& st : cx.strata())
    if (st.singular() && !ok(p(st), st.codim))
      throw PreconditionError(what + " (stratum " + std::to_string(st.id) + " has value " + p(st).to_string() + ")");
}

}  // namespace

CompareMode parse_compare_mode(std::string_view text) {
  if (text == "ordinary") return CompareMode::Ordinary;
  if (text == "relative") return CompareMode::Relative;
  if (text == "regular") return CompareMode::Regular;
  if (text == "dual-tame") return CompareMode::DualTame;
  if (text == "refinement") return CompareMode::Refinement;
  throw InputError("unknown comparison mode: " + std::string(text));
}

std::string to_string(CompareMode mode) {
  switch (mode) {
    case CompareMode::Ordinary: return "ordinary";
    case CompareMode::Relative: return "relative";
    case CompareMode::Regular: return "regular";
    case CompareMode::DualTame: return "dual-tame";
    case CompareMode::Refinement: return "refinement";
  }
  return "?";
}

bool ComparisonReport::all_iso() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeComparison& d) { return d.iso; });
}

Presentation relative_cochains(const WeightedComplex& cx, const Ring& ring) {
  Presentation amb = simplicial_cochains(cx, ring);
  std::vector<std::vector<bool>> sel;
  for (int k = 0; k <= amb.top(); ++k) {
    std::vector<bool> row;
    for (const auto& s : cx.simplices(k)) row.push_back(cx.regular(s));
    sel.push_back(std::move(row));
  }
  return preimage_subcomplex(amb, sel);
}

ChainMap ordinary_comparison(const BlowupComplex& b, const Perversity& p, const Ring& ring, bool relative) {
  const WeightedComplex& cx = b.complex();
  ChainMap f{relative ? relative_cochains(cx, ring) : simplicial_cochains(cx, ring), intersection_subcomplex(b, p, ring),
             {}};
  pad_pair(f);
  for (int k = 0; k <= f.source.top(); ++k) {
    Matrix amb = ambient_or_empty([&](int d) { return mu_matrix(b, d); }, k, std::min(b.top(), cx.top_dimension()),
                                  k <= b.top() ? b.basis(k).size() : 0, cx.simplices(k).size());
    f.maps.push_back(restrict_map(f.source, f.target, amb, k));
  }
  return f;
}

ChainMap regular_restriction(const BlowupComplex& b, const Perversity& p, const Ring& ring) {
  const WeightedComplex reg = regular_part(b.complex());
  ChainMap f{intersection_subcomplex(b, p, ring), simplicial_cochains(reg, ring), {}};
  pad_pair(f);
  for (int k = 0; k <= f.source.top(); ++k) {
    Matrix amb = ambient_or_empty([&](int d) { return restriction_matrix(b, reg, d); }, k, b.top(),
                                  reg.simplices(k).size(), 0);
    f.maps.push_back(restrict_map(f.source, f.target, amb, k));
  }
  return f;
}

ChainMap dual_tame_comparison(const BlowupComplex& b, const Perversity& p, const Ring& ring) {
  const WeightedComplex& cx = b.complex();
  Presentation tame = tame_complex(cx, p.dual(), ring);
  ChainMap f{intersection_subcomplex(b, p, ring), tame.dual(), {}};
  const int top = std::max(f.source.top(), f.target.top());
  pad_pair(f);
  tame = padded(std::move(tame), top);
  for (int k = 0; k <= top; ++k) {
    const auto regs = cx.regular_simplices(k);
    const std::size_t cells = k <= b.top() ? b.basis(k).size() : 0;
    Matrix x(regs.size(), cells);
    for (std::size_t i = 0; i < regs.size(); ++i) {
      const Cell t = top_cell(cx, regs[i]);
      if (auto j = b.index(t)) x(i, *j) = pairing_sign(cx, t);
    }
    Matrix amb = tame.inclusion[static_cast<std::size_t>(k)].transpose() * x;
    f.maps.push_back(restrict_map(f.source, f.target, amb, k));
  }
  return f;
}

ChainMap refinement_map(const Refinement& f, const Perversity& p_coarse, const Perversity& p_fine, const Ring& ring) {
  const WeightedComplex& fine = f.fine().complex();
  const WeightedComplex& coarse = f.coarse().complex();
  Perversity pulled = p_coarse.pullback(coarse, fine);
  if (!(pulled <= p_fine))
    throw PreconditionError("fine perversity " + p_fine.to_string() + " is not above the pullback " + pulled.to_string());
  ChainMap m{intersection_subcomplex(f.coarse(), p_coarse, ring), intersection_subcomplex(f.fine(), p_fine, ring), {}};
  pad_pair(m);
  for (int k = 0; k <= m.source.top(); ++k) {
    Matrix amb = k <= std::min(f.fine().top(), f.coarse().top())
                     ? f.matrix(k)
                     : Matrix(k <= f.fine().top() ? f.fine().basis(k).size() : 0,
                              k <= f.coarse().top() ? f.coarse().basis(k).size() : 0);
    m.maps.push_back(restrict_map(m.source, m.target, amb, k));
  }
  return m;
}

std::vector<DegreeComparison> compare_homology(const ChainMap& f) {
  check_chain_map(f.source, f.target, f.maps);
  std::vector<DegreeComparison> out;
  for (int k = 0; k <= f.source.top(); ++k) {
    DegreeComparison d;
    d.degree = k;
    d.source = homology(f.source, k);
    d.target = homology(f.target, k);
    InducedMap m = induced_map(f.source, f.target, f.maps[static_cast<std::size_t>(k)], k, d.source, d.target);
    d.rank = m.rank;
    d.iso = m.iso;
    out.push_back(std::move(d));
  }
  return out;
}

ComparisonReport compare_refinement(const WeightedComplex& fine, const WeightRecoding& r, const Perversity& p,
                                    const Ring& ring) {
  const Refinement f(fine, r);
  if (p.owner() != f.coarse().complex().fingerprint())
    throw InputError("perversity does not belong to the recoded complex");
  ComparisonReport out;
  out.mode = CompareMode::Refinement;
  out.source_name = "intersection cochains of the recoded complex";
  out.target_name = "intersection cochains of the pulled-back perversity";
  out.degrees = compare_homology(refinement_map(f, p, p.pullback(f.coarse().complex(), fine), ring));
  return out;
}

ComparisonReport compare(const WeightedComplex& cx, CompareMode mode, const Perversity& p, const Ring& ring) {
  if (p.owner() != cx.fingerprint()) throw InputError("perversity does not belong to this complex");
  BlowupComplex b(cx);
  ComparisonReport r;
  r.mode = mode;
  ChainMap f;
  switch (mode) {
    case CompareMode::Ordinary:
      if (auto defect = normality_defect(cx)) throw PreconditionError("complex is not normal: " + *defect);
      require_singular(cx, p, [](ExtInt v, int) { return v == ExtInt(0); },
                       "ordinary comparison needs the zero perversity");
      f = ordinary_comparison(b, p, ring, false);
      r.source_name = "ordinary cochains";
      r.target_name = "blown-up intersection cochains";
      break;
    case CompareMode::Relative:
      require_singular(cx, p, [](ExtInt v, int) { return v < ExtInt(0); },
                       "relative comparison needs a negative perversity");
      f = ordinary_comparison(b, p, ring, true);
      r.source_name = "relative cochains of (L, singular part)";
      r.target_name = "blown-up intersection cochains";
      break;
    case CompareMode::Regular:
      require_singular(cx, p, [](ExtInt v, int codim) { return v > ExtInt(codim - 2); },
                       "regular comparison needs a perversity above the top perversity");
      f = regular_restriction(b, p, ring);
      r.source_name = "blown-up intersection cochains";
      r.target_name = "ordinary cochains of the regular part";
      break;
    case CompareMode::DualTame:
      if (!ring.is_field()) {
        Presentation tame = tame_complex(cx, p.dual(), ring);
        for (const auto& h : homology_all(tame))
          if (!h.torsion.empty())
            throw PreconditionError("dual-tame comparison over Z needs torsion-free tame homology; found " +
                                    h.to_string() + " in degree " + std::to_string(h.degree));
      }
      f = dual_tame_comparison(b, p, ring);
      r.source_name = "blown-up intersection cochains";
      r.target_name = "dual tame chains of the complementary perversity";
      break;
    case CompareMode::Refinement:
      throw InputError("refinement comparison needs a recoding");
  }
  r.degrees = compare_homology(f);
  return r;
}

}  // namespace ihc
