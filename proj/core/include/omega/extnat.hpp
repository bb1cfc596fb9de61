#ifndef OMEGA_EXTNAT_HPP
#define OMEGA_EXTNAT_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "omega/errors.hpp"

namespace omega {

// An element of N ∪ {∞} with saturating addition.  The three parameters
// of a transformation (collapse, defect, infinite contraction index) all
// take values here.
class ExtNat {
 public:
  constexpr ExtNat() : value_(0) {}
  constexpr ExtNat(std::uint64_t v) : value_(v) {}

  static constexpr ExtNat infinity() { return ExtNat(kInf, Tag{}); }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr bool is_finite() const { return value_ != kInf; }

  // Finite value; calling this on infinity is a logic error.
  constexpr std::uint64_t finite_value() const {
    if (is_infinite()) throw Error("finite_value() on infinity");
    return value_;
  }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    // Values in this library stay tiny; saturate anyway.
    std::uint64_t s = a.value_ + b.value_;
    if (s < a.value_ || s == kInf) return infinity();
    return ExtNat(s);
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    // kInf is the largest uint64, so native ordering already places
    // infinity above every finite value.
    return a.value_ <=> b.value_;
  }

  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(value_);
  }

  static ExtNat parse(const std::string& s) {
    if (s == "inf") return infinity();
    if (s.empty()) throw ParseError("empty extended natural");
    for (char ch : s)
      if (ch < '0' || ch > '9') throw ParseError("bad extended natural: " + s);
    return ExtNat(std::stoull(s));
  }

 private:
  struct Tag {};
  constexpr ExtNat(std::uint64_t v, Tag) : value_(v) {}
  static constexpr std::uint64_t kInf = ~std::uint64_t{0};
  std::uint64_t value_;
};

}  // namespace omega

#endif  // OMEGA_EXTNAT_HPP
