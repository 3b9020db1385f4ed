#include "brauer/prime_field.hpp"

#include "brauer/errors.hpp"

namespace brauer {

namespace {

std::int64_t reduce(std::int64_t v, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p);
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

PrimeField::PrimeField(std::int64_t value, std::uint64_t prime) : modulus_(prime) {
  if (prime < 2 || prime >= kMaxModulus) throw FieldModeMismatch("modulus out of range");
  value_ = reduce(value, prime);
}

std::uint64_t PrimeField::adopt(const PrimeField& o) {
  if (o.modulus_ == 0) return modulus_;
  if (modulus_ == 0) {
    modulus_ = o.modulus_;
    value_ = reduce(value_, modulus_);
  } else if (modulus_ != o.modulus_) {
    throw FieldModeMismatch("mixing F_" + std::to_string(modulus_) + " and F_" +
                            std::to_string(o.modulus_));
  }
  return modulus_;
}

PrimeField PrimeField::operator-() const {
  PrimeField r = *this;
  r.value_ = modulus_ == 0 ? -value_ : (value_ == 0 ? 0 : static_cast<std::int64_t>(modulus_) - value_);
  return r;
}

PrimeField& PrimeField::operator+=(const PrimeField& o) {
  std::uint64_t p = adopt(o);
  value_ += p != 0 ? reduce(o.value_, p) : o.value_;
  if (p != 0) value_ = reduce(value_, p);
  return *this;
}

PrimeField& PrimeField::operator-=(const PrimeField& o) { return *this += -o; }

PrimeField& PrimeField::operator*=(const PrimeField& o) {
  std::uint64_t p = adopt(o);
  if (p == 0) {
    value_ *= o.value_;
  } else {
    auto a = static_cast<std::uint64_t>(value_);
    auto b = static_cast<std::uint64_t>(reduce(o.value_, p));
    value_ = static_cast<std::int64_t>((a * b) % p);
  }
  return *this;
}

PrimeField& PrimeField::operator/=(const PrimeField& o) {
  // an untyped divisor is read in this field before inverting
  if (o.modulus_ == 0 && modulus_ != 0) return *this *= PrimeField(o.value_, modulus_).inverse();
  return *this *= o.inverse();
}

PrimeField PrimeField::pow(std::uint64_t exponent) const {
  PrimeField base = *this;
  PrimeField acc = modulus_ != 0 ? PrimeField(1, modulus_) : PrimeField(1);
  while (exponent > 0) {
    if (exponent & 1U) acc *= base;
    base *= base;
    exponent >>= 1U;
  }
  return acc;
}

PrimeField PrimeField::inverse() const {
  if (modulus_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw std::logic_error("inverse of an untyped modular integer");
  }
  if (value_ == 0) throw ModularDegeneration("division by zero in F_" + std::to_string(modulus_));
  return pow(modulus_ - 2);
}

bool operator==(const PrimeField& a, const PrimeField& b) {
  if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
  if (a.modulus_ != 0 && b.modulus_ != 0) return false;
  std::uint64_t p = a.modulus_ != 0 ? a.modulus_ : b.modulus_;
  return reduce(a.value_, p) == reduce(b.value_, p);
}

bool is_prime(std::uint64_t candidate) {
  if (candidate < 2) return false;
  for (std::uint64_t d = 2; d * d <= candidate; ++d)
    if (candidate % d == 0) return false;
  return true;
}

}  // namespace brauer
