#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ihc {

using Integer = mpz_class;
using Vector = std::vector<Integer>;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an identity that must hold exactly does not (d^2 != 0, a map that is not a chain map).
class PropertyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RingKind { Integers, Rationals, ModP };

// Coefficient ring. Q is computed with integer matrices and saturated lattices, then
// reported by free rank only; Z/p is computed with entries reduced into [0, p).
class Ring {
 public:
  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  static Ring mod(unsigned long p);
  // "z", "q", "zp:<p>"
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  unsigned long modulus() const { return p_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  bool mod_p() const { return kind_ == RingKind::ModP; }
  // Ring the linear algebra actually runs over: Z for Z and Q, Z/p for Z/p.
  Ring compute_ring() const { return kind_ == RingKind::Rationals ? integers() : *this; }

  void reduce(Integer& x) const;
  Integer reduced(Integer x) const {
    reduce(x);
    return x;
  }
  bool is_unit(const Integer& x) const;
  Integer inverse(const Integer& x) const;

  std::string name() const;
  std::string spec() const;

  bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }

 private:
  Ring(RingKind k, unsigned long p) : kind_(k), p_(p) {}
  RingKind kind_;
  unsigned long p_;
};

}  // namespace ihc
