#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ihc/compare.hpp"
#include "ihc/fixtures.hpp"

namespace ihc {

// Outcome of one property over a family of inputs. Only the first counterexample is kept;
// inputs are visited smallest first, so it is the minimal one found.
struct PropertyResult {
  std::string suite;
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::string counterexample;

  void fail(const std::string& what);
  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) fail(what);
  }
};

struct VerifyOptions {
  // fixtures larger than this are skipped by the pair/triple suites
  std::size_t max_vertices = 6;
  // vertex bound for the exhaustive block-simplex enumeration of the amalgam suite
  int amalgam_vertices = 5;
  std::size_t samples = 40;
  std::uint64_t seed = 1;
};

std::vector<std::string> verify_suites();
// suite is one of verify_suites() or "all"
std::vector<PropertyResult> verify(std::string_view suite, const VerifyOptions& options = {});

// Per-input checks, shared with the acceptance runner.
void check_differentials(const std::string& name, const WeightedComplex& cx, PropertyResult& r);
void check_cup_leibniz(const std::string& name, const WeightedComplex& cx, PropertyResult& r);
// associativity on all basis triples and the unit law
void check_cup_algebra(const std::string& name, const WeightedComplex& cx, PropertyResult& r);
// on p-intersection cochains against tame chains of Dp, p in {0, t}
void check_cap_leibniz(const std::string& name, const WeightedComplex& cx, PropertyResult& r);
// (w u e) cap s = (-1)^{|w||e|} e cap (w cap s) and the unit law, all basis pairs inside each simplex
void check_cap_algebra(const std::string& name, const WeightedComplex& cx, PropertyResult& r);
void check_prism_boundary(const std::string& name, const WeightedComplex& cx, PropertyResult& r);
void check_chi_identity(const std::string& name, const WeightedComplex& cx, PropertyResult& r);
// [w] u [e] - (-1)^{|w||e|} [e] u [w] is a coboundary for every pair of generators
void check_graded_commutativity(const std::string& name, const WeightedComplex& cx, const Perversity& p,
                                const Ring& ring, PropertyResult& r);
// all laws for one elementary amalgamation of a single filtered simplex
void check_amalgamation(const WeightedComplex& simplex, int k, PropertyResult& r);
// functoriality of refinement pullbacks along two consecutive amalgamations
void check_functoriality(const WeightedComplex& simplex, PropertyResult& r);
// the pullback of the fake-stratified sphere recoding is a quasi-isomorphism for each GM perversity
void check_refinement_iso(const WeightedComplex& fine, const WeightRecoding& rec, const Ring& ring, PropertyResult& r);
// random cup/cap allowability samples with random perversities
void check_closure(const std::string& name, const WeightedComplex& cx, std::size_t samples, std::mt19937_64& rng,
                   PropertyResult& r);
// Ñ_p inside Ñ_q for p <= q
void check_monotonicity(const std::string& name, const WeightedComplex& cx, PropertyResult& r);
// group tables unchanged by padding weights by m
void check_shift(const std::string& name, const WeightedComplex& cx, int m, PropertyResult& r);

// Single filtered simplex with the given block sizes (last block nonempty).
WeightedComplex block_simplex(const std::vector<int>& sizes);
// All block-size vectors with 1 <= n <= max_n and at most max_vertices vertices.
std::vector<std::vector<int>> block_shapes(int max_vertices, int max_n);

// Group tables used by the shift check: cohomology of Ñ_p and tame homology, p in {0, t}.
std::vector<std::string> group_tables(const WeightedComplex& cx, const Perversity& p0, const Perversity& pt,
                                      const Ring& ring);

}  // namespace ihc
