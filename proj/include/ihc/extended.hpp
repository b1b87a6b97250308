#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace ihc {

// Integer extended by -inf and +inf. Sums saturate, with -inf absorbing first.
class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtInt() = default;
  constexpr ExtInt(long v) : kind_(Kind::Finite), value_(v) {}  // NOLINT(implicit)
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr bool finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  constexpr long value() const { return value_; }
  constexpr Kind kind() const { return kind_; }

  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    return ExtInt(a.value_ + b.value_);
  }
  friend constexpr ExtInt operator-(ExtInt a) {
    if (a.is_neg_inf()) return pos_inf();
    if (a.is_pos_inf()) return neg_inf();
    return ExtInt(-a.value_);
  }
  // a - b as a + (-b); finite minus +inf is -inf.
  friend constexpr ExtInt operator-(ExtInt a, ExtInt b) {
    if (a.finite()) return a + (-b);
    return a;
  }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.kind_ == b.kind_ && (!a.finite() || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (!a.finite()) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "inf";
    return std::to_string(value_);
  }
  static ExtInt parse(const std::string& s);

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k) {}
  Kind kind_ = Kind::Finite;
  long value_ = 0;
};

inline ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

}  // namespace ihc
