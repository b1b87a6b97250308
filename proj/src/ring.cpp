#include "ihc/ring.hpp"

#include <charconv>

#include "ihc/extended.hpp"

namespace ihc {

namespace {

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Ring Ring::mod(unsigned long p) {
  if (!is_prime(p)) throw InputError("ring modulus must be prime: " + std::to_string(p));
  return Ring(RingKind::ModP, p);
}

Ring Ring::parse(std::string_view text) {
  if (text == "z" || text == "Z") return integers();
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("zp:", 0) == 0 || text.rfind("Zp:", 0) == 0) {
    auto digits = text.substr(3);
    unsigned long p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw InputError("bad ring modulus: " + std::string(text));
    return mod(p);
  }
  throw InputError("unknown ring: " + std::string(text) + " (expected z, q or zp:<p>)");
}

void Ring::reduce(Integer& x) const {
  if (kind_ != RingKind::ModP) return;
  mpz_fdiv_r_ui(x.get_mpz_t(), x.get_mpz_t(), p_);
}

bool Ring::is_unit(const Integer& x) const {
  switch (kind_) {
    case RingKind::Integers:
      return x == 1 || x == -1;
    case RingKind::Rationals:
      return x != 0;
    case RingKind::ModP:
      return reduced(x) != 0;
  }
  return false;
}

Integer Ring::inverse(const Integer& x) const {
  if (kind_ == RingKind::Integers) {
    if (x == 1 || x == -1) return x;
    throw std::domain_error("not a unit in Z");
  }
  if (kind_ == RingKind::Rationals) throw std::domain_error("rational inverse is not integral");
  Integer r = reduced(x);
  if (r == 0) throw std::domain_error("zero has no inverse");
  Integer out;
  Integer m(p_);
  mpz_invert(out.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return out;
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::ModP:
      return "Z/" + std::to_string(p_);
  }
  return "?";
}

std::string Ring::spec() const {
  switch (kind_) {
    case RingKind::Integers:
      return "z";
    case RingKind::Rationals:
      return "q";
    case RingKind::ModP:
      return "zp:" + std::to_string(p_);
  }
  return "?";
}

ExtInt ExtInt::parse(const std::string& s) {
  if (s == "inf" || s == "+inf") return pos_inf();
  if (s == "-inf") return neg_inf();
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError("bad perversity value: " + s);
  return ExtInt(v);
}

}  // namespace ihc
