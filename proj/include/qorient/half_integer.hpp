#pragma once

#include <compare>
#include <string>

namespace qorient {

/// Exact half-integer quantum number (j, m, ...). Stored as 2j so that
/// values like 3/2 never touch floating point.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;

  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInteger whole(int v) { return from_twice(2 * v); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * static_cast<double>(twice_); }

  /// The integer 2j/2 when j is integral; callers must check is_integer().
  constexpr int as_int() const { return twice_ / 2; }

  constexpr auto operator<=>(const HalfInteger&) const = default;

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInteger operator-(HalfInteger a, HalfInteger b) {
    return from_twice(a.twice_ - b.twice_);
  }
  constexpr HalfInteger operator-() const { return from_twice(-twice_); }

  /// Accepts "2", "3/2" or "1.5". Throws std::invalid_argument otherwise.
  static HalfInteger parse(const std::string& text);

  std::string str() const;  // "3/2", "2", "-1/2"

 private:
  int twice_ = 0;
};

/// |m| <= j with j - m integral.
bool valid_projection(HalfInteger j, HalfInteger m);

}  // namespace qorient
