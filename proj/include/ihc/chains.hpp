#pragma once

#include <string>

#include "ihc/complex.hpp"
#include "ihc/extended.hpp"
#include "ihc/perversity.hpp"
#include "ihc/presentation.hpp"

namespace ihc {

// -inf if the simplex misses the stratum, else dim of its part of filtration level index(s).
ExtInt simplex_perverse_degree(const WeightedComplex& cx, const Simplex& s, const Stratum& st);
bool is_allowable(const WeightedComplex& cx, const Simplex& s, const Perversity& p);
bool is_tame(const WeightedComplex& cx, const Simplex& s, const Perversity& p);
bool is_allowable(const WeightedComplex& cx, const SimplexChain& c, const Perversity& p);

// regular part of the boundary
SimplexChain gd(const WeightedComplex& cx, const Simplex& s);
SimplexChain gd(const WeightedComplex& cx, const SimplexChain& c);

// Chain presentation on regular simplices with the regular-part differential.
Presentation regular_chains(const WeightedComplex& cx, const Ring& ring);
// Tame p-intersection chains: tame simplices whose regular boundary is tame.
Presentation tame_complex(const WeightedComplex& cx, const Perversity& p, const Ring& ring);
// Dual cochain complex of the tame chains.
Presentation tame_cochains(const WeightedComplex& cx, const Perversity& p, const Ring& ring);

// Ordinary simplicial cochains (all simplices), dual differential sign convention.
Presentation simplicial_cochains(const WeightedComplex& cx, const Ring& ring);
// Simplicial chains of all simplices.
Presentation simplicial_chains(const WeightedComplex& cx, const Ring& ring);

Vector chain_to_vector(const WeightedComplex& cx, const SimplexChain& c, int dim, bool regular_only);
SimplexChain vector_to_chain(const WeightedComplex& cx, const Vector& v, int dim, bool regular_only);

// `coeff v0 v1 ...` per line
std::string export_chain(const WeightedComplex& cx, const SimplexChain& c);

}  // namespace ihc
