// Exact half-integer arithmetic; every coordinate in the library lives in (1/2)Z.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace spinform {

// Element of (1/2)Z stored as twice its value, so all arithmetic stays integral.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int integer) : twice_(2 * integer) {}

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }
  static constexpr HalfInt half() { return from_twice(1); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr int integer() const { return twice_ / 2; }  // only valid when is_integer()

  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;

  // "3", "-1/2"; exact, never floating point.
  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  // Accepts "3", "-3", "1/2", "-3/2", "+2/2"; rejects everything else.
  static std::optional<HalfInt> parse(std::string_view s);

 private:
  int twice_ = 0;
};

}  // namespace spinform
