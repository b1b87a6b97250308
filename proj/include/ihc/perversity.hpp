#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ihc/complex.hpp"
#include "ihc/extended.hpp"

namespace ihc {

class Perversity {
 public:
  enum class Mode { PerStratum, GM };

  static Perversity zero(const WeightedComplex& cx);
  static Perversity top(const WeightedComplex& cx);
  // same value on every singular stratum
  static Perversity constant(const WeightedComplex& cx, ExtInt value);
  static Perversity by_codim(const WeightedComplex& cx, const std::function<ExtInt(int)>& f);
  // values[c] for codimension c; checked against the classical growth conditions
  static Perversity gm(const WeightedComplex& cx, const std::vector<long>& values);
  // one value per stratum id; regular strata must carry 0
  static Perversity with_values(const WeightedComplex& cx, std::vector<ExtInt> values);
  // "gm v0 v1 ...", "stratum id:value ...", "zero", "top", "const value"
  static Perversity parse(const WeightedComplex& cx, std::string_view spec);

  ExtInt operator()(const Stratum& s) const;
  ExtInt at(std::size_t stratum_id) const { return values_.at(stratum_id); }
  const std::vector<ExtInt>& values() const { return values_; }
  Mode mode() const { return mode_; }
  std::uint64_t owner() const { return owner_; }

  Perversity dual() const;
  Perversity operator+(const Perversity& o) const;
  bool operator<=(const Perversity& o) const;
  bool operator==(const Perversity& o) const { return owner_ == o.owner_ && values_ == o.values_; }
  // same values carried to a complex with matching strata (e.g. a weight-shifted copy)
  Perversity rebind(const WeightedComplex& other) const;
  // pull back along a recoding: `this` lives on `coarse`, result on `fine` (same simplices)
  Perversity pullback(const WeightedComplex& coarse, const WeightedComplex& fine) const;

  std::string to_string() const;

 private:
  Perversity(std::uint64_t owner, std::vector<int> codims, std::vector<ExtInt> values, Mode mode)
      : owner_(owner), codims_(std::move(codims)), values_(std::move(values)), mode_(mode) {}
  std::uint64_t owner_ = 0;
  std::vector<int> codims_;
  std::vector<ExtInt> values_;
  Mode mode_ = Mode::PerStratum;
};

// All GM perversities for the codimensions present in cx, values bounded by max_value.
std::vector<std::vector<long>> gm_perversities(int max_codim, long max_value);

}  // namespace ihc
