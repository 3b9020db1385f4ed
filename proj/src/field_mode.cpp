#include "brauer/field_mode.hpp"

#include "brauer/errors.hpp"

#include <array>
#include <random>

namespace brauer {

FieldMode FieldMode::modular(std::uint64_t prime, std::uint64_t omega_value, int n) {
  if (!is_prime(prime) || prime >= PrimeField::kMaxModulus)
    throw FieldModeMismatch(std::to_string(prime) + " is not a prime below 2^31");
  if (prime <= static_cast<std::uint64_t>(2 * n))
    throw FieldModeMismatch("prime must exceed 2n = " + std::to_string(2 * n));
  if (omega_value < 2 || omega_value > prime - 2)
    throw FieldModeMismatch("omega value must lie in [2, p-2]");
  return {Kind::PrimeModular, prime, omega_value};
}

FieldMode FieldMode::sample_modular(std::uint64_t prime, std::uint64_t seed, int n) {
  if (prime < 5) throw FieldModeMismatch("prime too small to sample omega");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> dist(2, prime - 2);
  return modular(prime, dist(gen), n);
}

std::string FieldMode::describe() const {
  if (is_exact()) return "exact";
  return "modp(p=" + std::to_string(prime) + ",w=" + std::to_string(omega_value) + ")";
}

std::uint64_t default_prime(int index) {
  static constexpr std::array<std::uint64_t, 4> kPrimes = {2147483647, 2147483629, 2147483587,
                                                           2147483579};
  return kPrimes.at(static_cast<std::size_t>(index) % kPrimes.size());
}

QOmega omega_symbol() { return QOmega::variable(); }

PrimeField specialize(const BigRational& value, const FieldMode& mode) {
  auto p = mode.prime;
  mpz_class num = value.numerator() % static_cast<unsigned long>(p);
  mpz_class den = value.denominator() % static_cast<unsigned long>(p);
  if (den == 0)
    throw ModularDegeneration("denominator of " + value.to_string() + " vanishes mod " +
                              std::to_string(p));
  PrimeField n(static_cast<std::int64_t>(num.get_si()), p);
  PrimeField d(static_cast<std::int64_t>(den.get_si()), p);
  return n / d;
}

PrimeField specialize(const QOmega& value, const FieldMode& mode) {
  if (mode.is_exact()) throw FieldModeMismatch("specialize needs a modular field mode");
  PrimeField w(static_cast<std::int64_t>(mode.omega_value), mode.prime);
  auto eval = [&](const Polynomial<BigRational>& poly) {
    PrimeField acc(0, mode.prime);
    const auto& cs = poly.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * w + specialize(cs[i], mode);
    return acc;
  };
  PrimeField den = eval(value.denominator());
  if (den.is_zero())
    throw ModularDegeneration("denominator vanishes at the sampled omega mod " +
                              std::to_string(mode.prime));
  return eval(value.numerator()) / den;
}

}  // namespace brauer
