#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ihc/products.hpp"

namespace ihc {

// Monotone weight map phi: {0..n_fine} -> {0..n_coarse} with phi(n_fine) = n_coarse.
struct WeightRecoding {
  std::vector<int> phi;
  int n_coarse = 0;

  int n_fine() const { return static_cast<int>(phi.size()) - 1; }
  // "0->2,1->2,2->2"; every weight 0..n_fine must appear exactly once
  static WeightRecoding parse(std::string_view text, int n_fine);
  static WeightRecoding identity(int n);
  // elementary k-amalgamation: merges blocks n-k-1 and n-k
  static WeightRecoding elementary(int n, int k);
  // apply this, then `next`
  WeightRecoding then(const WeightRecoding& next) const;
  void validate() const;
  std::string to_string() const;
  bool operator==(const WeightRecoding&) const = default;
};

// theta on two consecutive factors; the second one carries no apex when it is the last factor.
std::optional<FactorCell> theta(const FactorCell& a, const FactorCell& b);

struct XiTerm {
  FactorCell first;
  FactorCell second;
  int sign = 1;
};
// Xi(1_merged) for a factor cell of c(E0*E1) (or E0*E1 when `last`).
std::vector<XiTerm> xi(const FactorCell& merged, const std::vector<Vertex>& e0, const std::vector<Vertex>& e1,
                       bool last);

// A_*: the fine cell pushed to the coarse weighting (same vertex ids), nullopt when it collapses.
std::optional<Cell> amalgam_push(const WeightedComplex& fine, const WeightedComplex& coarse,
                                 const WeightRecoding& r, const Cell& c);
PrismChain amalgam_push(const WeightedComplex& fine, const WeightedComplex& coarse, const WeightRecoding& r,
                        const PrismChain& c);

// f^*: cochains of the coarse blow-up to cochains of the fine blow-up.
Cochain refinement_pullback(const BlowupComplex& fine, const WeightedComplex& coarse, const WeightRecoding& r,
                            const Cochain& w);
// degree-k matrix of f^*: rows fine basis, columns coarse basis
Matrix refinement_matrix(const BlowupComplex& fine, const BlowupComplex& coarse, const WeightRecoding& r, int k);

// A recoding with both blow-ups and the preimage table of the push, for repeated pullbacks.
class Refinement {
 public:
  Refinement(const WeightedComplex& fine, const WeightRecoding& r);

  const BlowupComplex& fine() const { return fine_; }
  const BlowupComplex& coarse() const { return coarse_; }
  const WeightRecoding& recoding() const { return r_; }
  std::optional<Cell> push(const Cell& c) const;
  Cochain pullback(const Cochain& w) const;
  Matrix matrix(int k) const;

 private:
  WeightRecoding r_;
  BlowupComplex fine_;
  BlowupComplex coarse_;
  std::map<Cell, std::vector<std::pair<Cell, int>>> preimage_;
};

// mu^*: ordinary cochains (indexed by simplices) to blown-up cochains
Cochain mu_pullback(const BlowupComplex& b, const std::map<Simplex, Integer>& w);
// degree-k matrix of mu^*: rows blow-up basis, columns simplices(k)
Matrix mu_matrix(const BlowupComplex& b, int k);

// The full subcomplex on vertices of weight n.
WeightedComplex regular_part(const WeightedComplex& cx);
// degree-k matrix of gamma: rows simplices(k) of the regular part, columns blow-up basis
Matrix restriction_matrix(const BlowupComplex& b, const WeightedComplex& reg, int k);

// Empty when normal; otherwise a description of a stratum with disconnected link.
std::optional<std::string> normality_defect(const WeightedComplex& cx);

}  // namespace ihc
