#pragma once

#include "brauer/big_rational.hpp"
#include "brauer/prime_field.hpp"
#include "brauer/rational_function.hpp"

#include <cstdint>
#include <string>

namespace brauer {

/// Q(w): scalars of the exact mode.
using QOmega = RationalFunction<BigRational>;
/// Q(w)(u): exact mode extended by the spectral variable.
using QOmegaU = RationalFunction<QOmega>;
/// F_p(u): modular mode extended by the spectral variable.
using PrimeFieldU = RationalFunction<PrimeField>;

/// Which ground field the algebra is built over.
struct FieldMode {
  enum class Kind { ExactOmega, PrimeModular };

  Kind kind = Kind::ExactOmega;
  std::uint64_t prime = 0;
  std::uint64_t omega_value = 0;

  static FieldMode exact() { return {}; }

  /// Validated modular mode; requires prime > 2n and omega in [2, p-2].
  static FieldMode modular(std::uint64_t prime, std::uint64_t omega_value, int n);

  /// Modular mode with omega drawn uniformly from [2, p-2] by a seeded generator.
  static FieldMode sample_modular(std::uint64_t prime, std::uint64_t seed, int n);

  bool is_exact() const { return kind == Kind::ExactOmega; }
  std::string describe() const;

  friend bool operator==(const FieldMode&, const FieldMode&) = default;
};

/// A few primes just below 2^31 used for probabilistic cross-checks.
std::uint64_t default_prime(int index);

/// w as an element of Q(w).
QOmega omega_symbol();

/// Image of an exact scalar under w -> omega_value, reduced mod p.
/// Throws ModularDegeneration if a denominator vanishes mod p.
PrimeField specialize(const QOmega& value, const FieldMode& mode);
PrimeField specialize(const BigRational& value, const FieldMode& mode);

/// Scalar field K together with the value of w in it.
template <class K>
struct FieldContext;

template <>
struct FieldContext<QOmega> {
  FieldMode mode = FieldMode::exact();
  QOmega omega = omega_symbol();

  QOmega from_exact(const QOmega& v) const { return v; }
  QOmega constant(const BigRational& v) const { return QOmega(v); }
};

template <>
struct FieldContext<PrimeField> {
  FieldMode mode;
  PrimeField omega;

  explicit FieldContext(const FieldMode& m)
      : mode(m), omega(static_cast<std::int64_t>(m.omega_value), m.prime) {}

  PrimeField from_exact(const QOmega& v) const { return specialize(v, mode); }
  PrimeField constant(const BigRational& v) const { return specialize(v, mode); }
};

using ExactContext = FieldContext<QOmega>;
using ModularContext = FieldContext<PrimeField>;

}  // namespace brauer
