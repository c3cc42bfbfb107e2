#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace striptopo {

/// A rational number or one of the two infinities. Always kept normalized
/// (positive denominator, gcd 1) so that member-wise equality is value equality.
class ExtRational {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtRational() = default;
  ExtRational(std::int64_t num, std::int64_t den = 1);

  static ExtRational neg_inf();
  static ExtRational pos_inf();
  /// Accepts "p", "p/q", decimal literals such as "-2.75", and "-inf"/"+inf"/"inf".
  static ExtRational parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept;
  /// Inverse of parse for finite values ("p" or "p/q") and the tokens "-inf"/"+inf".
  std::string to_string() const;

  ExtRational operator-() const;

  friend bool operator==(const ExtRational&, const ExtRational&) = default;
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

 private:
  Kind kind_ = Kind::Finite;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace striptopo
