#pragma once

#include "brauer/diagram.hpp"
#include "brauer/errors.hpp"
#include "brauer/field_mode.hpp"
#include "brauer/rational_function.hpp"
#include "brauer/report.hpp"

#include <map>
#include <utility>
#include <vector>

namespace brauer {

/// Sparse element of B_n(w) with coefficients in a field K.
///
/// The element remembers the value of w in K; elements built over different
/// values of w (different field modes) refuse to combine.
template <class K>
class AlgebraElement {
 public:
  using Scalar = K;
  using Terms = std::map<BrauerDiagram, K>;

  AlgebraElement(int n, K omega) : n_(n), omega_(std::move(omega)) {}

  static AlgebraElement scalar(int n, const K& omega, const K& c) {
    AlgebraElement r(n, omega);
    r.add_term(BrauerDiagram::identity(n), c);
    return r;
  }
  static AlgebraElement identity(int n, const K& omega) { return scalar(n, omega, K(1)); }
  static AlgebraElement basis(const BrauerDiagram& d, const K& omega, const K& c = K(1)) {
    AlgebraElement r(d.n(), omega);
    r.add_term(d, c);
    return r;
  }

  int n() const { return n_; }
  const K& omega() const { return omega_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  K coefficient(const BrauerDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const BrauerDiagram& d, const K& c) {
    if (d.n() != n_) throw SizeMismatch("term of wrong degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  AlgebraElement operator-() const {
    AlgebraElement r = *this;
    for (auto& [d, c] : r.terms_) c = -c;
    return r;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_compatible(o);
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
  }
  AlgebraElement& operator*=(const K& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [d, c] : terms_) c *= s;
    return *this;
  }
  AlgebraElement& operator/=(const K& s) { return *this *= s.inverse(); }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const K& s) { return a *= s; }
  friend AlgebraElement operator*(const K& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator/(AlgebraElement a, const K& s) { return a /= s; }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return element_mul(a, b);
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.n_ == b.n_ && a.omega_ == b.omega_ && a.terms_ == b.terms_;
  }

  /// this * d
  AlgebraElement times(const BrauerDiagram& d) const {
    AlgebraElement r(n_, omega_);
    auto powers = omega_powers();
    for (const auto& [t, c] : terms_) {
      auto p = multiply(t, d);
      r.add_term(p.diagram, p.loops == 0 ? c : c * powers[static_cast<std::size_t>(p.loops)]);
    }
    return r;
  }

  /// d * this
  AlgebraElement left_times(const BrauerDiagram& d) const {
    AlgebraElement r(n_, omega_);
    auto powers = omega_powers();
    for (const auto& [t, c] : terms_) {
      auto p = multiply(d, t);
      r.add_term(p.diagram, p.loops == 0 ? c : c * powers[static_cast<std::size_t>(p.loops)]);
    }
    return r;
  }

  /// Image under B_n -> B_m adding vertical strands.
  AlgebraElement embedded(int m) const {
    AlgebraElement r(m, omega_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(embed(d, m), c);
    return r;
  }

  /// Applies a coefficient map into another field L.
  template <class L, class F>
  AlgebraElement<L> map_coefficients(const L& omega, F&& f) const {
    AlgebraElement<L> r(n_, omega);
    for (const auto& [d, c] : terms_) r.add_term(d, f(c));
    return r;
  }

  void check_compatible(const AlgebraElement& o) const {
    if (n_ != o.n_) throw SizeMismatch("elements of B_" + std::to_string(n_) + " and B_" +
                                       std::to_string(o.n_));
    if (!(omega_ == o.omega_)) throw FieldModeMismatch("elements over different field modes");
  }

  std::vector<K> omega_powers() const {
    std::vector<K> p{K(1)};
    for (int i = 1; i <= n_; ++i) p.push_back(p.back() * omega_);
    return p;
  }

 private:
  int n_;
  K omega_;
  Terms terms_;
};

namespace detail {

template <class K>
AlgebraElement<K> generic_mul(const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
  AlgebraElement<K> r(a.n(), a.omega());
  auto powers = a.omega_powers();
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      auto p = multiply(da, db);
      K c = ca * cb;
      if (p.loops) c *= powers[static_cast<std::size_t>(p.loops)];
      r.add_term(p.diagram, c);
    }
  }
  return r;
}

/// Rewrites every coefficient over one common denominator.
template <class B>
std::pair<std::vector<std::pair<BrauerDiagram, Polynomial<B>>>, Polynomial<B>> common_denominator(
    const AlgebraElement<RationalFunction<B>>& a) {
  using Poly = Polynomial<B>;
  Poly den = Poly::constant(B(1));
  for (const auto& [d, c] : a.terms()) {
    const Poly& cd = c.denominator();
    if (cd.is_one() || cd == den) continue;
    den = den * exact_quotient(cd, gcd(den, cd));
  }
  std::vector<std::pair<BrauerDiagram, Poly>> out;
  out.reserve(a.size());
  for (const auto& [d, c] : a.terms())
    out.emplace_back(d, c.denominator() == den ? c.numerator()
                                               : c.numerator() * exact_quotient(den, c.denominator()));
  return {std::move(out), std::move(den)};
}

/// Products over K = B(x): accumulate numerators over a common denominator
/// and reduce once per resulting diagram.
template <class B>
AlgebraElement<RationalFunction<B>> fraction_mul(const AlgebraElement<RationalFunction<B>>& a,
                                                 const AlgebraElement<RationalFunction<B>>& b) {
  using K = RationalFunction<B>;
  using Poly = Polynomial<B>;
  auto [ta, da] = common_denominator(a);
  auto [tb, db] = common_denominator(b);
  std::vector<Poly> powers{Poly::constant(B(1))};
  for (int i = 1; i <= a.n(); ++i) powers.push_back(powers.back() * a.omega().numerator());

  std::map<BrauerDiagram, Poly> acc;
  for (const auto& [dl, pl] : ta) {
    for (const auto& [dr, pr] : tb) {
      auto p = multiply(dl, dr);
      Poly c = pl * pr;
      if (p.loops) c = c * powers[static_cast<std::size_t>(p.loops)];
      auto [it, inserted] = acc.try_emplace(p.diagram, std::move(c));
      if (!inserted) it->second += c;
    }
  }
  AlgebraElement<K> r(a.n(), a.omega());
  Poly den = da * db;
  for (auto& [d, num] : acc) {
    if (num.is_zero()) continue;
    r.add_term(d, K(std::move(num), den));
  }
  return r;
}

}  // namespace detail

/// Bilinear extension of the diagram product, each closed loop giving a factor w.
template <class K>
AlgebraElement<K> element_mul(const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return AlgebraElement<K>(a.n(), a.omega());
  if constexpr (is_rational_function_v<K>) {
    if (a.omega().is_polynomial() && a.size() * b.size() > 4) return detail::fraction_mul(a, b);
  }
  return detail::generic_mul(a, b);
}

template <class K>
bool is_idempotent(const AlgebraElement<K>& a) {
  return a * a == a;
}

template <class K>
AlgebraElement<K> commutator(const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
  return a * b - b * a;
}

/// (w - 1) / 2
template <class K>
K half_shift(const K& omega) {
  return (omega - K(1)) / K(2);
}

/// x_n^{(m)} = (w-1)/2 + sum_{k<n} (s_{km} - e_{km}) in B_m(w).
template <class K>
AlgebraElement<K> jm_variant(int n, int m, const K& omega) {
  if (n < 1 || m < n) throw IndexOutOfRange("jm_variant needs 1 <= n <= m");
  auto x = AlgebraElement<K>::scalar(m, omega, half_shift(omega));
  for (int k = 1; k < n; ++k) {
    x.add_term(BrauerDiagram::s(m, k, m), K(1));
    x.add_term(BrauerDiagram::e(m, k, m), K(-1));
  }
  return x;
}

/// Jucys-Murphy element x_r of B_n(w).
template <class K>
AlgebraElement<K> jucys_murphy(int n, int r, const K& omega) {
  if (r < 1 || r > n) throw IndexOutOfRange("jucys_murphy index out of range");
  auto x = AlgebraElement<K>::scalar(n, omega, half_shift(omega));
  for (int k = 1; k < r; ++k) {
    x.add_term(BrauerDiagram::s(n, k, r), K(1));
    x.add_term(BrauerDiagram::e(n, k, r), K(-1));
  }
  return x;
}

using ExactElement = AlgebraElement<QOmega>;

/// Checks every defining relation of the standard presentation on the
/// generators s_i, e_i of B_n(w), exactly over Q(w).
VerificationReport verify_presentation(int n);

/// x_r pairwise commute; x_n commutes with s_i, e_i for i <= n-2.
VerificationReport verify_jucys_murphy(int n);

}  // namespace brauer
