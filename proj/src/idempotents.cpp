#include "brauer/idempotents.hpp"

namespace brauer {

namespace {

const ExactContext& exact_context() {
  static const ExactContext ctx;
  return ctx;
}

QOmega constant(const BigRational& v) { return QOmega(v); }

}  // namespace

UpdownTableau row_tableau(int n) {
  std::vector<Partition> shapes;
  for (int r = 1; r <= n; ++r) shapes.emplace_back(std::vector<int>{r});
  return UpdownTableau(std::move(shapes));
}

UpdownTableau column_tableau(int n) {
  std::vector<Partition> shapes;
  for (int r = 1; r <= n; ++r) shapes.emplace_back(std::vector<int>(static_cast<std::size_t>(r), 1));
  return UpdownTableau(std::move(shapes));
}

ProportionalProduct row_column_product(int n, RowOrColumn which) {
  if (n < 2) throw IndexOutOfRange("row/column products need n >= 2");
  const QOmega w = omega_symbol();
  auto x = ExactElement::identity(n, w);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      QOmega dist(j - i);
      auto f = ExactElement::identity(n, w);
      if (which == RowOrColumn::row) {
        f.add_term(BrauerDiagram::s(n, i, j), dist.inverse());
        f.add_term(BrauerDiagram::e(n, i, j), -(dist + w / QOmega(2) - QOmega(1)).inverse());
      } else {
        f.add_term(BrauerDiagram::s(n, i, j), -dist.inverse());
      }
      x = x * f;
    }
  }
  auto t = which == RowOrColumn::row ? row_tableau(n) : column_tableau(n);
  auto reference = recurrence_idempotent(t, exact_context()).element;
  auto ratio = proportionality_constant(x, reference);
  if (!ratio) throw NotProportional("product is not a multiple of E_T for " + t.to_string());
  return {std::move(x), *ratio};
}

ExactElement r_matrix(int n, int i, int j, const BigRational& u, bool with_s, bool with_e) {
  const QOmega w = omega_symbol();
  auto r = ExactElement::identity(n, w);
  if (with_s) r.add_term(BrauerDiagram::s(n, i, j), -constant(u).inverse());
  if (with_e) r.add_term(BrauerDiagram::e(n, i, j), (constant(u) - w / QOmega(2) + QOmega(1)).inverse());
  return r;
}

bool ybe_check(const BigRational& u, const BigRational& v, bool with_s, bool with_e) {
  if (u.is_zero() || v.is_zero() || (u + v).is_zero())
    throw DegenerateParameters("ybe_check needs u, v, u+v nonzero");
  auto r12 = r_matrix(3, 1, 2, u, with_s, with_e);
  auto r13 = r_matrix(3, 1, 3, u + v, with_s, with_e);
  auto r23 = r_matrix(3, 2, 3, v, with_s, with_e);
  return r12 * r13 * r23 == r23 * r13 * r12;
}

namespace {

// X * (1 - d / a) for a numeric a
ExactElement times_numeric_factor(const ExactElement& x, const BrauerDiagram& d, const BigRational& a) {
  return detail::times_factor(x, d, constant(a));
}

}  // namespace

bool ybetr_check(int n, int i, int j, int r, const BigRational& u, const BigRational& v) {
  if (!(i < j && j < r && r <= n)) throw IndexOutOfRange("ybetr_check needs i < j < r <= n");
  if (u.is_zero() || v.is_zero() || u == v) throw DegenerateParameters("ybetr_check needs u, v, u-v nonzero");
  const QOmega w = omega_symbol();
  const auto one = ExactElement::identity(n, w);
  const auto eir = BrauerDiagram::e(n, i, r), ejr = BrauerDiagram::e(n, j, r), sij = BrauerDiagram::s(n, i, j);
  auto lhs = times_numeric_factor(times_numeric_factor(times_numeric_factor(one, eir, u), ejr, v), sij, u - v);
  auto rhs = times_numeric_factor(times_numeric_factor(times_numeric_factor(one, sij, u - v), ejr, v), eir, u);
  return lhs == rhs;
}

namespace {

void check_points(int n, const std::vector<BigRational>& points) {
  if (points.size() < static_cast<std::size_t>(n)) throw DegeneratePoints("need n points");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto &a = points[static_cast<std::size_t>(i)], &b = points[static_cast<std::size_t>(j)];
      if (a == b || (a + b).is_zero()) throw DegeneratePoints("points must be distinct with nonzero pairwise sums");
    }
}

}  // namespace

ExactElement lexicographic_product(int n, const std::vector<BigRational>& points) {
  check_points(n, points);
  auto x = ExactElement::identity(n, omega_symbol());
  auto u = [&](int i) { return points[static_cast<std::size_t>(i - 1)]; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) x = times_numeric_factor(x, BrauerDiagram::e(n, i, j), u(i) + u(j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) x = times_numeric_factor(x, BrauerDiagram::s(n, i, j), u(i) - u(j));
  return x;
}

ExactElement factorized_product(int n, const std::vector<BigRational>& points) {
  check_points(n, points);
  auto x = ExactElement::identity(n, omega_symbol());
  auto u = [&](int i) { return points[static_cast<std::size_t>(i - 1)]; };
  for (int r = 2; r <= n; ++r) {
    for (int k = r - 1; k >= 1; --k) x = times_numeric_factor(x, BrauerDiagram::e(n, k, r), u(k) + u(r));
    for (int k = 1; k <= r - 1; ++k) x = times_numeric_factor(x, BrauerDiagram::s(n, k, r), u(k) - u(r));
  }
  return x;
}

bool factorization_check(int n, const std::vector<BigRational>& points) {
  if (!(lexicographic_product(n, points) == factorized_product(n, points))) return false;
  auto u = [&](int i) { return points[static_cast<std::size_t>(i - 1)]; };
  for (int r = 3; r <= n; ++r)
    for (int j = 2; j < r; ++j)
      for (int i = 1; i < j; ++i)
        if (!ybetr_check(n, i, j, r, u(i) + u(r), u(j) + u(r))) return false;
  return true;
}

bool jm_identity_check(const UpdownTableau& u_tab, int m) {
  const int n = u_tab.length() + 1;
  if (n < 2) throw IndexOutOfRange("jm_identity_check needs a nonempty tableau");
  if (m < n) throw IndexOutOfRange("jm_identity_check needs m >= n");
  using L = QOmegaU;
  const QOmega w = omega_symbol();
  const L lw(w);
  const L u = L::variable();
  auto e_u = lift(recurrence_idempotent(u_tab, exact_context()).element.embedded(m));
  std::vector<L> c;
  for (const auto& cs : contents(u_tab)) c.emplace_back(cs.exact());

  auto lhs = e_u;
  for (int k = n - 1; k >= 1; --k)
    lhs = detail::times_factor(lhs, BrauerDiagram::s(m, k, m), c[static_cast<std::size_t>(k - 1)] - u, L(1));
  for (int k = 1; k <= n - 1; ++k)
    lhs = detail::times_factor(lhs, BrauerDiagram::e(m, k, m), c[static_cast<std::size_t>(k - 1)] + u - lw, L(1));

  auto shifted = lift(jm_variant(n, m, w));
  auto u_minus_x = AlgebraElement<L>::scalar(m, lw, u) - shifted;
  auto rhs = (e_u * u_minus_x) / (u - c[0]);
  return lhs == rhs;
}

PsiTildeResult psi_tilde_b3(const UpdownTableau& t) {
  if (t.length() != 3) throw IndexOutOfRange("psi_tilde_b3 needs a tableau of length 3");
  // Q(w)(u3)(u2)(u1): evaluation peels off u1, then u2, then u3.
  using L3 = QOmegaU;
  using L2 = RationalFunction<L3>;
  using L1 = RationalFunction<L2>;
  const QOmega w = omega_symbol();
  const L1 u1 = L1::variable();
  const L1 u2 = L1(L2::variable());
  const L1 u3 = L1(L2(L3::variable()));
  const L1 lw = L1(L2(L3(w)));

  auto factor = [&](int i, const L1& s_coeff, const L1& e_coeff) {
    auto f = AlgebraElement<L1>::identity(3, lw);
    f.add_term(BrauerDiagram::s(3, i), s_coeff);
    f.add_term(BrauerDiagram::e(3, i), e_coeff);
    return f;
  };
  auto a = factor(1, -(u1 - u2), (u1 - u2 - L1(1)) / (u1 + u2));
  auto b = factor(2, -(u1 - u3), (u1 - u3 - L1(2)) / (u2 + u3));
  auto psi = a * b * a;

  auto cs = contents(t);
  PsiTildeResult out{{}, ExactElement(3, w), QOmega(0)};
  auto step1 = regularized_eval(psi, L2(L3(cs[0].exact())));
  out.orders.push_back(step1.order);
  auto step2 = regularized_eval(step1.value, L3(cs[1].exact()));
  out.orders.push_back(step2.order);
  auto step3 = regularized_eval(step2.value, cs[2].exact());
  out.orders.push_back(step3.order);
  out.value = std::move(step3.value);

  auto reference = recurrence_idempotent(t, exact_context()).element;
  auto ratio = proportionality_constant(out.value, reference);
  if (!ratio) throw NotProportional("psi-tilde value is not a multiple of E_T for " + t.to_string());
  out.constant = *ratio;
  return out;
}

}  // namespace brauer
