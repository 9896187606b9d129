#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polaris {

/// Exact half-integer (spin, projection, multipole order), stored as twice
/// its value so that arithmetic stays closed and exact.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice_(2 * whole) {}  // NOLINT(google-explicit-constructor)

  static constexpr HalfInt from_twice(int t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  [[nodiscard]] constexpr int twice() const { return twice_; }
  [[nodiscard]] constexpr bool is_integer() const { return twice_ % 2 == 0; }
  [[nodiscard]] constexpr double value() const { return 0.5 * twice_; }

  /// Valid only for integer values.
  [[nodiscard]] constexpr int as_int() const {
    if (twice_ % 2 != 0) throw std::domain_error("HalfInt::as_int on half-odd value");
    return twice_ / 2;
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice_ - b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  [[nodiscard]] constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

  /// "3", "-2" for integers, "7/2", "-5/2" otherwise.
  [[nodiscard]] std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  /// Parses "3", "-2", "7/2", "-5/2". Throws std::invalid_argument on junk.
  static HalfInt parse(std::string_view s) {
    std::string buf(s);
    char* end = nullptr;
    long num = std::strtol(buf.c_str(), &end, 10);
    if (end == buf.c_str()) throw std::invalid_argument("HalfInt: cannot parse '" + buf + "'");
    if (*end == '\0') return HalfInt(static_cast<int>(num));
    if (*end != '/') throw std::invalid_argument("HalfInt: cannot parse '" + buf + "'");
    char* end2 = nullptr;
    long den = std::strtol(end + 1, &end2, 10);
    if (end2 == end + 1 || *end2 != '\0' || den != 2)
      throw std::invalid_argument("HalfInt: cannot parse '" + buf + "'");
    return from_twice(static_cast<int>(num));
  }

 private:
  int twice_ = 0;
};

/// True when m is a valid projection of spin j: |m| <= j with matching parity.
constexpr bool valid_projection(HalfInt j, HalfInt m) {
  return m.abs() <= j && (j.twice() - m.twice()) % 2 == 0;
}

}  // namespace polaris
