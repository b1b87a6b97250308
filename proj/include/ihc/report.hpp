#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ihc/compare.hpp"
#include "ihc/verify.hpp"

namespace ihc {

inline constexpr int kSchemaVersion = 1;

// One CLI invocation, as parsed from flags.
struct RunRequest {
  std::string command;
  std::string space;
  std::string perversity;
  std::string ring = "q";
  std::optional<std::string> recoding;
  bool json = false;

  std::string to_json() const;
  static RunRequest from_json(std::string_view text);
  bool operator==(const RunRequest&) const = default;
};

// "H^0=Q^1, H^1=0" for cochain tables, "H_0=..." for chain tables.
std::string format_groups(const std::vector<HomologyGroup>& groups, bool chains = false);

std::string render_groups(const WeightedComplex& cx, const std::string& kind, const Perversity& p, const Ring& ring,
                          const std::vector<HomologyGroup>& groups, bool chains, bool json);
std::string render_comparison(const ComparisonReport& report, const Perversity& p, const Ring& ring, bool json);
std::string render_verify(const std::vector<PropertyResult>& results, bool json);
std::string render_strata(const WeightedComplex& cx, bool json);
// canonical export: vertices in compatible order, facets, strata
std::string render_complex(const WeightedComplex& cx);

}  // namespace ihc
