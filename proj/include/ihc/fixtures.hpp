#pragma once

#include <random>
#include <string>
#include <vector>

#include "ihc/complex.hpp"

namespace ihc::fixtures {

WeightedComplex point();
WeightedComplex interval();
// boundary of the standard k-simplex, unstratified, formal dimension k-1
WeightedComplex sphere(int k);
// 7-vertex torus
WeightedComplex torus();
// 6-vertex projective plane
WeightedComplex projective_plane();
// boundary of the 3-simplex with one vertex of weight 0 and the others of weight 2
WeightedComplex fake_sphere();
// the recoding that forgets the fake stratum
std::vector<int> fake_sphere_recoding();

// Random weighted complex: 2..max_vertices vertices, n in 0..max_n, facets of dimension at most 3.
WeightedComplex random_complex(std::mt19937_64& rng, int max_vertices, int max_n);

struct Named {
  std::string name;
  WeightedComplex complex;
};
// The shipped corpus, in a fixed order.
std::vector<Named> corpus();
WeightedComplex by_name(const std::string& name);

}  // namespace ihc::fixtures
