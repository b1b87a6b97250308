#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ihc/complex.hpp"
#include "ihc/extended.hpp"
#include "ihc/perversity.hpp"
#include "ihc/presentation.hpp"

namespace ihc {

// A cell of one factor: a simplex of the block, joined with the cone apex when `apex` is set.
// Base may be empty only together with the apex (the cone point).
struct FactorCell {
  std::vector<Vertex> base;
  bool apex = false;
  int dim() const { return static_cast<int>(base.size()) - 1 + (apex ? 1 : 0); }
  auto operator<=>(const FactorCell&) const = default;
};

// n+1 factors; the last one never carries an apex.
using TensorCell = std::vector<FactorCell>;

int tensor_dim(const TensorCell& c);
// sum of factor dimensions over [lo, hi]
int tensor_dim(const TensorCell& c, int lo, int hi);

// Apex id used inside vertex lists; larger than every vertex so it sorts last.
inline constexpr Vertex kApex = 1 << 30;
std::vector<Vertex> vertex_list(const FactorCell& f);
FactorCell from_vertex_list(const std::vector<Vertex>& list);

// Blow-up cell (F, eps): bit i of `cone` is eps_i for i < n.
struct Cell {
  Simplex simplex;
  std::uint32_t cone = 0;
  auto operator<=>(const Cell&) const = default;
};

using Cochain = std::map<Cell, Integer>;

struct Term {
  Cell cell;
  int sign = 1;
};

TensorCell factors(const WeightedComplex& cx, const Cell& c);
Cell from_factors(const TensorCell& t);
int cell_dim(const WeightedComplex& cx, const Cell& c);
// F regular, eps_n absent, eps_i = 1 on empty blocks
bool valid_cell(const WeightedComplex& cx, const Cell& c);
std::string cell_name(const WeightedComplex& cx, const Cell& c);

std::vector<Cell> enumerate_basis(const WeightedComplex& cx, int k);

// 1_{(F,eps)} * e ; nullopt when the result vanishes
std::optional<Term> adjoin_vertex(const WeightedComplex& cx, const Cell& c, Vertex e);
// 1_{(F,eps)} * v_level, level < n
std::optional<Term> adjoin_virtual(const WeightedComplex& cx, const Cell& c, int level);

// adjunction formula
Cochain differential(const WeightedComplex& cx, const Cochain& w);
// factor-by-factor tensor formula
Cochain differential_factorwise(const WeightedComplex& cx, const Cochain& w);

// 1 <= ell <= n
ExtInt perverse_degree_local(const WeightedComplex& cx, const Cell& c, int ell);
ExtInt perverse_degree_global(const WeightedComplex& cx, const Cochain& w, const Stratum& s);
bool is_allowable(const WeightedComplex& cx, const Cochain& w, const Perversity& p);

void prune(Cochain& w, const Ring& ring);

class BlowupComplex {
 public:
  explicit BlowupComplex(const WeightedComplex& cx);

  const WeightedComplex& complex() const { return cx_; }
  int top() const { return static_cast<int>(bases_.size()) - 1; }
  const std::vector<Cell>& basis(int k) const;
  std::optional<std::size_t> index(const Cell& c) const;

  // matrix of delta from degree k to k+1 (adjunction formula)
  const Matrix& differential_matrix(int k) const { return d_[static_cast<std::size_t>(k)]; }
  Matrix factorwise_matrix(int k) const;
  Presentation presentation(const Ring& ring) const;

  Vector to_vector(const Cochain& w, int k) const;
  Cochain from_vector(const Vector& v, int k) const;

  std::vector<bool> allowable(const Perversity& p, int k) const;

 private:
  WeightedComplex cx_;
  std::vector<std::vector<Cell>> bases_;
  std::map<Cell, std::size_t> index_;
  std::vector<Matrix> d_;
};

// Ñ*_p : allowable cochains with allowable coboundary, as a subcomplex of the full blow-up.
Presentation intersection_subcomplex(const BlowupComplex& b, const Perversity& p, const Ring& ring);

}  // namespace ihc
