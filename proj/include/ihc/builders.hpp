#pragma once

#include <string>
#include <vector>

#include "ihc/complex.hpp"

namespace ihc {

// Apex of weight 0, existing weights raised by one.
WeightedComplex cone(const WeightedComplex& cx, const std::string& apex = "c");
// Two apexes of weight 0, existing weights raised by one.
WeightedComplex suspension(const WeightedComplex& cx);
// Weights of b are placed above those of a.
WeightedComplex join(const WeightedComplex& a, const WeightedComplex& b);
// cx x [0,1], staircase triangulation of each facet, weights copied to both ends.
WeightedComplex prism(const WeightedComplex& cx);
// First barycentric subdivision; a barycenter gets the maximal weight of its simplex.
WeightedComplex barycentric_subdivision(const WeightedComplex& cx);

// All weights equal to the formal dimension.
WeightedComplex unstratified(int n, int vertex_count, const std::vector<std::vector<int>>& facets,
                             const std::string& prefix = "v");

}  // namespace ihc
