#pragma once

#include "brauer/algebra.hpp"
#include "brauer/field_mode.hpp"

#include <random>

namespace test {

using namespace brauer;

inline QOmega w() { return omega_symbol(); }
inline QOmega q(long num, long den = 1) { return QOmega(BigRational(num, den)); }

// (w - 1)/2 + k, the content of a box on diagonal k
inline QOmega content(int k) { return (w() - q(1)) / q(2) + q(k); }

inline ExactElement basis(const BrauerDiagram& d, const QOmega& c = QOmega(1)) {
  return ExactElement::basis(d, w(), c);
}
inline ExactElement one(int n) { return ExactElement::identity(n, w()); }
inline ExactElement scalar(int n, const QOmega& c) { return ExactElement::scalar(n, w(), c); }

inline BigRational random_rational(std::mt19937_64& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return BigRational(num(rng), den(rng));
}

inline Polynomial<BigRational> random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<BigRational> cs;
  for (int i = deg(rng); i >= 0; --i) cs.push_back(random_rational(rng));
  return Polynomial<BigRational>(cs);
}

// Random element of Q(w); may be zero.
inline QOmega random_qomega(std::mt19937_64& rng) {
  auto den = random_poly(rng, 2);
  if (den.is_zero()) den = Polynomial<BigRational>::constant(BigRational(1));
  return QOmega(random_poly(rng, 2), den);
}

inline QOmegaU random_qomegau(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 2);
  auto poly = [&] {
    std::vector<QOmega> cs;
    for (int i = deg(rng); i >= 0; --i) cs.push_back(random_qomega(rng));
    return Polynomial<QOmega>(cs);
  };
  auto den = poly();
  if (den.is_zero()) den = Polynomial<QOmega>::constant(QOmega(1));
  return QOmegaU(poly(), den);
}

inline ExactElement random_element(std::mt19937_64& rng, int n, int terms) {
  auto all = enumerate_diagrams(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  ExactElement a(n, w());
  for (int i = 0; i < terms; ++i) a.add_term(all[pick(rng)], random_qomega(rng));
  return a;
}

}  // namespace test
