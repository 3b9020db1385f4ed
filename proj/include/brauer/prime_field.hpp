#pragma once

#include <concepts>
#include <cstdint>
#include <string>

namespace brauer {

/// Element of F_p for a runtime prime p < 2^31.
///
/// Values built from plain integers (`PrimeField(3)`) carry no modulus yet;
/// they adopt the modulus of the first typed operand they meet. Mixing two
/// different moduli throws FieldModeMismatch. Untyped values only support
/// ring operations; inverting one other than +1 or -1 is a logic error.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31);

  PrimeField() = default;

  template <std::integral I>
  PrimeField(I value) : value_(static_cast<std::int64_t>(value)) {}

  /// Typed element `value mod prime`.
  PrimeField(std::int64_t value, std::uint64_t prime);

  std::uint64_t modulus() const { return modulus_; }
  bool is_typed() const { return modulus_ != 0; }

  /// Representative in [0, p) (typed) or the raw integer (untyped).
  std::int64_t value() const { return value_; }

  bool is_zero() const { return value_ == 0; }

  PrimeField inverse() const;
  PrimeField pow(std::uint64_t exponent) const;

  std::string to_string() const { return std::to_string(value_); }

  PrimeField operator-() const;
  PrimeField& operator+=(const PrimeField& o);
  PrimeField& operator-=(const PrimeField& o);
  PrimeField& operator*=(const PrimeField& o);
  PrimeField& operator/=(const PrimeField& o);

  friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
  friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
  friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
  friend PrimeField operator/(PrimeField a, const PrimeField& b) { return a /= b; }

  friend bool operator==(const PrimeField& a, const PrimeField& b);

 private:
  std::uint64_t adopt(const PrimeField& o);

  std::int64_t value_ = 0;
  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t candidate);

}  // namespace brauer
