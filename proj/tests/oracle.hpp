#pragma once

#include <cstddef>
#include <vector>

#include "ihc/complex.hpp"

// Reference ranks computed from scratch: own boundary matrices, Gaussian elimination over
// boost rationals (modulus 0) or over Z/p. Shares nothing with the library but the simplex lists.
namespace oracle {

// dim H^k(L) for k = 0..top dimension
std::vector<std::size_t> betti(const ihc::WeightedComplex& cx, unsigned modulus = 0);
// dim H^k(L, Sigma), Sigma = simplices without a vertex of top weight
std::vector<std::size_t> relative_betti(const ihc::WeightedComplex& cx, unsigned modulus = 0);
// dim H^k of the full subcomplex on vertices of top weight
std::vector<std::size_t> regular_betti(const ihc::WeightedComplex& cx, unsigned modulus = 0);

}  // namespace oracle
