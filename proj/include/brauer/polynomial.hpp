#pragma once

#include "brauer/errors.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace brauer {

/// Dense univariate polynomial over a field K, coefficients in ascending
/// degree order. The zero polynomial has no coefficients.
///
/// K must provide the field operations, `is_zero()`, equality and a
/// constructor from small integers.
template <class K>
class Polynomial {
 public:
  using Coefficient = K;

  Polynomial() = default;
  explicit Polynomial(std::vector<K> coefficients) : c_(std::move(coefficients)) { trim(); }

  static Polynomial constant(K c) { return Polynomial(std::vector<K>{std::move(c)}); }
  static Polynomial variable() { return Polynomial(std::vector<K>{K(0), K(1)}); }
  static Polynomial monomial(K c, std::size_t degree) {
    std::vector<K> v(degree + 1, K(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  /// x - root
  static Polynomial linear(const K& root) { return Polynomial(std::vector<K>{-root, K(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == K(1); }

  const std::vector<K>& coefficients() const { return c_; }
  const K& leading() const { return c_.back(); }
  K coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }

  /// Horner evaluation.
  K operator()(const K& x) const {
    if (c_.empty()) return K(0);
    K acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.c_.size() == 1) return b.scaled(a.c_[0]);
    if (b.c_.size() == 1) return a.scaled(b.c_[0]);
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }

  Polynomial scaled(const K& s) const {
    if (s.is_zero()) return {};
    Polynomial r = *this;
    for (auto& a : r.c_) a *= s;
    r.trim();
    return r;
  }

  Polynomial monic() const {
    if (c_.empty() || c_.back() == K(1)) return *this;
    return scaled(c_.back().inverse());
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws InversionOfZero for a zero divisor.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw InversionOfZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<K> rem = a.c_;
    std::vector<K> quot(a.c_.size() - b.c_.size() + 1, K(0));
    const bool unit_lead = b.leading() == K(1);
    K lead_inv = unit_lead ? K(1) : b.leading().inverse();
    for (std::size_t k = quot.size(); k-- > 0;) {
      K& top = rem[k + b.c_.size() - 1];
      if (top.is_zero()) continue;
      K q = unit_lead ? top : top * lead_inv;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
      quot[k] = std::move(q);
    }
    rem.resize(b.c_.size() - 1, K(0));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Division known to be exact.
  friend Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
    if (b.is_one()) return a;
    return divmod(a, b).first;
  }

  /// Monic greatest common divisor; gcd(a, 0) = monic(a).
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_zero()) return a.monic();
    if (b.is_constant() || a.is_constant()) return constant(K(1));
    b = b.monic();
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
      if (b.is_constant() && !b.is_zero()) return constant(K(1));
    }
    return a.monic();
  }

  /// Synthetic division by (x - c): quotient and the value at c.
  std::pair<Polynomial, K> divide_linear(const K& c) const {
    if (c_.empty()) return {Polynomial{}, K(0)};
    std::vector<K> q(c_.size() - 1, K(0));
    K acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      q[i] = acc;
      acc *= c;
      acc += c_[i];
    }
    return {Polynomial(std::move(q)), acc};
  }

  /// Multiplicity of c as a root, and the cofactor with that root removed.
  std::pair<int, Polynomial> strip_root(const K& c) const {
    if (c_.empty()) throw ZeroInput("root multiplicity of the zero polynomial");
    int count = 0;
    Polynomial p = *this;
    for (;;) {
      auto [q, r] = p.divide_linear(c);
      if (!r.is_zero()) return {count, std::move(p)};
      ++count;
      p = std::move(q);
    }
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<K> c_;
};

}  // namespace brauer
