#pragma once

#include "brauer/errors.hpp"
#include "brauer/polynomial.hpp"

#include <concepts>
#include <type_traits>
#include <utility>

namespace brauer {

/// Element of the fraction field K(x), kept reduced with a monic
/// denominator so that equality is structural.
template <class K>
class RationalFunction {
 public:
  using Coefficient = K;
  using Poly = Polynomial<K>;

  RationalFunction() : den_(Poly::constant(K(1))) {}

  template <std::integral I>
  RationalFunction(I value) : RationalFunction(K(value)) {}

  RationalFunction(const K& c) : num_(Poly::constant(c)), den_(Poly::constant(K(1))) {}

  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(K(1))) {}

  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
  }

  static RationalFunction variable() { return RationalFunction(Poly::variable()); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return den_.is_constant() && num_.is_constant(); }
  K constant_value() const { return num_.coefficient(0); }

  RationalFunction inverse() const {
    if (num_.is_zero()) throw InversionOfZero("inverse of the zero rational function");
    K lc_inv = num_.leading().inverse();
    return from_reduced(den_.scaled(lc_inv), num_.scaled(lc_inv));
  }

  RationalFunction operator-() const { return from_reduced(-num_, den_); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = add(*this, o); }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = add(*this, -o); }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = mul(*this, o); }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = mul(*this, o.inverse()); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return add(a, b);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return add(a, -b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return mul(a, b);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return mul(a, b.inverse());
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Value at x = c; throws PoleAtEvaluationPoint if c is a pole.
  K operator()(const K& c) const;

  /// Builds from a pair already known to be coprime with monic denominator.
  static RationalFunction from_reduced(Poly num, Poly den) {
    RationalFunction r;
    if (num.is_zero()) return r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw InversionOfZero("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly::constant(K(1));
      return;
    }
    if (!den_.is_constant()) {
      Poly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = exact_quotient(num_, g);
        den_ = exact_quotient(den_, g);
      }
    }
    if (!(den_.leading() == K(1))) {
      K lc_inv = den_.leading().inverse();
      num_ = num_.scaled(lc_inv);
      den_ = den_.scaled(lc_inv);
    }
  }

  static RationalFunction add(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return from_reduced(a.num_ + b.num_, a.den_);
      return RationalFunction(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_one()) return from_reduced(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return from_reduced(a.num_ + b.num_ * a.den_, a.den_);
    // Henrici: only the common factor of the denominators can cancel.
    Poly g = gcd(a.den_, b.den_);
    if (g.is_one()) return from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly ad = exact_quotient(a.den_, g);
    Poly bd = exact_quotient(b.den_, g);
    Poly t = a.num_ * bd + b.num_ * ad;
    if (t.is_zero()) return {};
    Poly g2 = gcd(t, g);
    if (g2.is_one()) return from_reduced(std::move(t), ad * b.den_);
    return from_reduced(exact_quotient(t, g2), ad * exact_quotient(b.den_, g2));
  }

  static RationalFunction mul(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return from_reduced(a.num_ * b.num_, a.den_);
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly an = exact_quotient(a.num_, g1), bd = exact_quotient(b.den_, g1);
    Poly bn = exact_quotient(b.num_, g2), ad = exact_quotient(a.den_, g2);
    return from_reduced(an * bn, ad * bd);
  }

  Poly num_;
  Poly den_;
};

template <class K>
K RationalFunction<K>::operator()(const K& c) const {
  K d = den_(c);
  if (d.is_zero()) throw PoleAtEvaluationPoint("evaluation at a pole");
  return num_(c) / d;
}

/// Order of vanishing of f at x = c (negative for a pole).
template <class K>
int valuation_at(const RationalFunction<K>& f, const K& c) {
  if (f.is_zero()) throw ZeroInput("valuation of the zero rational function");
  int up = f.numerator().strip_root(c).first;
  int down = f.denominator().strip_root(c).first;
  return up - down;
}

/// ((x - c)^p * f) evaluated at x = c.
template <class K>
K shift_and_eval(const RationalFunction<K>& f, const K& c, int p) {
  if (f.is_zero()) return K(0);
  auto [up, num] = f.numerator().strip_root(c);
  auto [down, den] = f.denominator().strip_root(c);
  int v = up - down;
  if (v < -p)
    throw PoleAtEvaluationPoint("pole of order " + std::to_string(-v) + " exceeds shift " +
                                std::to_string(p));
  if (v > -p) return K(0);
  return num(c) / den(c);
}

template <class T>
struct is_rational_function : std::false_type {};
template <class K>
struct is_rational_function<RationalFunction<K>> : std::true_type {};
template <class T>
inline constexpr bool is_rational_function_v = is_rational_function<T>::value;

}  // namespace brauer
