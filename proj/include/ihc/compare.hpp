#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ihc/amalgam.hpp"

namespace ihc {

enum class CompareMode { Ordinary, Relative, Regular, DualTame, Refinement };

CompareMode parse_compare_mode(std::string_view text);
std::string to_string(CompareMode mode);

struct DegreeComparison {
  int degree = 0;
  HomologyGroup source;
  HomologyGroup target;
  std::size_t rank = 0;
  bool iso = false;
};

struct ComparisonReport {
  CompareMode mode = CompareMode::Ordinary;
  std::string source_name;
  std::string target_name;
  std::vector<DegreeComparison> degrees;
  bool all_iso() const;
};

// A chain map between two presentations, one matrix per source degree.
struct ChainMap {
  Presentation source;
  Presentation target;
  std::vector<Matrix> maps;
};

// Relative cochains of (L, non-regular subcomplex).
Presentation relative_cochains(const WeightedComplex& cx, const Ring& ring);

// Phi into the intersection subcomplex of p (p = 0 for the absolute version).
ChainMap ordinary_comparison(const BlowupComplex& b, const Perversity& p, const Ring& ring, bool relative);
// gamma: intersection cochains of p to ordinary cochains of the regular part
ChainMap regular_restriction(const BlowupComplex& b, const Perversity& p, const Ring& ring);
// chi: intersection cochains of p to the dual of tame chains of the complementary perversity
ChainMap dual_tame_comparison(const BlowupComplex& b, const Perversity& p, const Ring& ring);

// f^*: Ñ_{p_coarse}(coarse) -> Ñ_{p_fine}(fine); needs p_fine >= pullback of p_coarse.
ChainMap refinement_map(const Refinement& f, const Perversity& p_coarse, const Perversity& p_fine, const Ring& ring);

// Checks the chain-map identity, then compares homology degree by degree.
std::vector<DegreeComparison> compare_homology(const ChainMap& f);

// f^* for a recoding of `fine`; p lives on the coarse complex and is pulled back.
ComparisonReport compare_refinement(const WeightedComplex& fine, const WeightRecoding& r, const Perversity& p,
                                    const Ring& ring);

// Validates the mode preconditions (throws PreconditionError) and runs the comparison.
ComparisonReport compare(const WeightedComplex& cx, CompareMode mode, const Perversity& p, const Ring& ring);

}  // namespace ihc
