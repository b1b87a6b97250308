#pragma once

#include <map>
#include <optional>

#include "ihc/blowup.hpp"
#include "ihc/chains.hpp"

namespace ihc {

// Chains of blown-up prisms, indexed by blow-up cells.
using PrismChain = std::map<Cell, Integer>;

// Factor-wise cup with Koszul sign; nullopt when incompatible or not inside a common simplex.
std::optional<Term> cup_local(const WeightedComplex& cx, const Cell& a, const Cell& b);
Cochain cup(const WeightedComplex& cx, const Cochain& w, const Cochain& e);
// 0-cochain equal to 1 on every 0-cell
Cochain unit_cochain(const WeightedComplex& cx);

// the fundamental cell of the prism of a regular simplex
Cell top_cell(const WeightedComplex& cx, const Simplex& delta);
// boundary of a prism cell (Koszul sign on the tensor factors)
PrismChain prism_boundary(const WeightedComplex& cx, const Cell& c);
PrismChain prism_boundary(const WeightedComplex& cx, const PrismChain& c);
// hidden faces of the prism of delta with their boundary signs
std::vector<Term> hidden_faces(const WeightedComplex& cx, const Simplex& delta);

// 1_a cap [prism of delta]; a must live on a face of delta
std::optional<Term> cap_blowup(const WeightedComplex& cx, const Cell& a, const Simplex& delta);
// mu_*: nullopt when the cell collapses
std::optional<Simplex> mu_push(const WeightedComplex& cx, const Cell& c);
SimplexChain mu_push(const WeightedComplex& cx, const PrismChain& c);

SimplexChain cap(const WeightedComplex& cx, const Cochain& w, const SimplexChain& xi);

// Sign of the evaluation pairing of a cochain against a prism cell: (-1)^{sum_{i<j} |c_i||c_j|}.
int pairing_sign(const WeightedComplex& cx, const Cell& c);
// chi(w)(sigma) = <w, fundamental cell of sigma>, for regular simplices sigma of dimension k
std::map<Simplex, Integer> chi(const WeightedComplex& cx, const Cochain& w);

}  // namespace ihc
