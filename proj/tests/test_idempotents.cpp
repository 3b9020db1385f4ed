#include "doctest.h"
#include "test_support.hpp"

#include "brauer/idempotents.hpp"
#include "brauer/suites.hpp"

#include <set>

using namespace test;

namespace {

const ExactContext& ctx() {
  static const ExactContext c;
  return c;
}

UpdownTableau T(const char* text) { return UpdownTableau::parse(text); }

ExactElement rec(const char* text) { return recurrence_idempotent(T(text), ctx()).element; }

// E_T from its spectral definition: the product over r of prod_{a != c_r}(x_r - a)/(c_r - a),
// with a running over the contents of all tableaux of length r.
ExactElement spectral_projector(const UpdownTableau& t) {
  const int n = t.length();
  auto e = one(n);
  for (int r = 1; r <= n; ++r) {
    const QOmega cr = contents(t)[static_cast<std::size_t>(r - 1)].exact();
    std::set<ContentSymbol> others;
    for (const auto& s : enumerate_updown(r, std::nullopt, n)) others.insert(contents(s).back());
    const auto x = jucys_murphy(n, r, w());
    for (const auto& a : others) {
      const QOmega av = a.exact();
      if (av == cr) continue;
      e = e * (x - scalar(n, av)) / (cr - av);
    }
  }
  return e;
}

}  // namespace

TEST_SUITE("idempotents") {

TEST_CASE("recurrence examples") {
  const auto e12 = basis(BrauerDiagram::e(2, 1));
  const auto s1 = basis(BrauerDiagram::s(2, 1));
  CHECK(rec("1|0") == e12 / w());
  CHECK(rec("1|11") == (one(2) - s1) / q(2));
  CHECK(rec("1|2") == (one(2) + s1) / q(2) - e12 / w());
  CHECK(rec("1") == one(1));
  auto r = recurrence_idempotent(T("1|0"), ctx());
  CHECK(r.constant == QOmega(1));
  CHECK(r.method == Method::recurrence);
  // x_2 E = c_2 E for ((1),(1,1))
  CHECK(jucys_murphy(2, 2, w()) * rec("1|11") == rec("1|11") * ((w() - q(3)) / q(2)));
}

TEST_CASE("recurrence agrees with the full spectral projector") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_updown(n, std::nullopt))
      CHECK(recurrence_idempotent(t, ctx()).element == spectral_projector(t));
}

TEST_CASE("recurrence into a larger algebra") {
  auto e = recurrence_idempotent(T("1|0"), ctx(), 3).element;
  CHECK(e == rec("1|0").embedded(3));
}

TEST_CASE("fusion examples") {
  auto one_box = fusion_idempotent(T("1"), ctx());
  CHECK(one_box.element == one(1));
  CHECK(one_box.constant == QOmega(1));

  auto t = fusion_idempotent(T("1|0"), ctx());
  const auto e12 = basis(BrauerDiagram::e(2, 1));
  CHECK(t.constant == w() * (q(2) - w()) / (w() - q(1)));
  CHECK(t.element * t.constant == e12 * ((q(2) - w()) / (w() - q(1))));
  CHECK(t.element == e12 / w());
  CHECK(t.exponents == std::vector<int>{0, 1});
  CHECK(t.detected_orders == std::vector<int>{0, 1});

  auto sym = fusion_idempotent(T("1|2"), ctx());
  const auto s1 = basis(BrauerDiagram::s(2, 1));
  CHECK(sym.constant == q(2));
  CHECK(sym.element * sym.constant == one(2) + s1 - e12 * (q(2) / w()));
}

TEST_CASE("fusion equals f(T) times the recurrence idempotent") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : enumerate_updown(n, std::nullopt)) {
      auto fused = fusion_idempotent(t, ctx());
      auto reference = recurrence_idempotent(t, ctx()).element;
      CHECK(fused.element == reference);
      CHECK(fused.element * fused.constant == reference * f_constant(t).value);
      CHECK(fused.detected_orders == exponents(t));
    }
}

TEST_CASE("regularized evaluation") {
  const QOmega c1 = content(0);
  auto x = fusion_step_product(one(2), std::vector<QOmega>{c1, -c1}, 2);
  auto fixed = regularized_eval(x, -c1, 1);
  CHECK(fixed.order == 1);
  CHECK_FALSE(fixed.value.is_zero());
  CHECK(fixed.value == basis(BrauerDiagram::e(2, 1)) * ((q(2) - w()) / (w() - q(1))));
  auto automatic = regularized_eval(x, -c1);
  CHECK(automatic.order == 1);
  CHECK(automatic.value == fixed.value);
  CHECK_THROWS_AS(regularized_eval(x, -c1, 0), PoleAtEvaluationPoint);
  CHECK(regularized_eval(x, -c1, 2).value.is_zero());

  // a regular element evaluates plainly
  auto y = fusion_step_product(one(2), std::vector<QOmega>{c1, content(1)}, 2);
  auto plain = regularized_eval(y, content(1), 0);
  CHECK(plain.order == 0);
  CHECK(regularized_eval(y, content(1)).order == 0);
  CHECK_THROWS_AS(regularized_eval(AlgebraElement<QOmegaU>(2, QOmegaU(w())), c1), ZeroInput);
}

TEST_CASE("symmetric group fusion") {
  const auto s1 = basis(BrauerDiagram::s(2, 1));
  CHECK(symmetric_phi(T("1|2"), ctx()) == one(2) + s1);
  CHECK(symmetric_phi(T("1|11"), ctx()) == one(2) - s1);
  auto phi = symmetric_phi(T("1|2|21"), ctx());
  auto e = phi / q(3);
  CHECK(is_idempotent(e));
  CHECK_FALSE(is_idempotent(phi));
  for (const auto& [d, c] : phi.terms()) CHECK(d.is_permutation());
  CHECK_THROWS_AS(symmetric_phi(T("1|0"), ctx()), NotAllAdditions);
}

TEST_CASE("row and column products") {
  const auto s1 = basis(BrauerDiagram::s(2, 1));
  const auto e1 = basis(BrauerDiagram::e(2, 1));
  auto row = row_column_product(2, RowOrColumn::row);
  CHECK(row.element == one(2) + s1 - e1 / (w() / q(2)));
  CHECK(row.constant == q(2));
  auto col = row_column_product(2, RowOrColumn::column);
  CHECK(col.element == one(2) - s1);
  CHECK(col.constant == q(2));
  auto col3 = row_column_product(3, RowOrColumn::column);
  CHECK(col3.element == rec("1|11|111") * col3.constant);
  CHECK_THROWS_AS(row_column_product(1, RowOrColumn::row), IndexOutOfRange);
}

TEST_CASE("Yang-Baxter equation") {
  CHECK(ybe_check(BigRational(2, 3), BigRational(5, 7)));
  CHECK(ybe_check(BigRational(2, 3), BigRational(5, 7), false, false));
  for (const auto& u : seeded_rationals(1, 3))
    for (const auto& v : seeded_rationals(2, 3))
      if (!(u + v).is_zero()) CHECK(ybe_check(u, v));
  // the spectral parameters must add up along the middle factor
  const BigRational u(2, 3), v(5, 7);
  auto lhs = r_matrix(3, 1, 2, u) * r_matrix(3, 1, 3, v) * r_matrix(3, 2, 3, u + v);
  auto rhs = r_matrix(3, 2, 3, u + v) * r_matrix(3, 1, 3, v) * r_matrix(3, 1, 2, u);
  CHECK_FALSE(lhs == rhs);
  CHECK_THROWS_AS(ybe_check(BigRational(1), BigRational(-1)), DegenerateParameters);
}

TEST_CASE("factorized product") {
  std::vector<BigRational> points{BigRational(1, 2), BigRational(4, 3), BigRational(9, 5)};
  CHECK(factorization_check(3, points));
  CHECK(factorization_check(2, {BigRational(1, 2), BigRational(4, 3)}));
  CHECK(ybetr_check(3, 1, 2, 3, BigRational(3, 4), BigRational(7, 11)));
  // the product depends on the order of the points
  std::vector<BigRational> swapped{points[1], points[0], points[2]};
  CHECK_FALSE(lexicographic_product(3, points) == lexicographic_product(3, swapped));
  CHECK(lexicographic_product(3, points) == factorized_product(3, points));
  CHECK_THROWS_AS(factorization_check(3, {BigRational(1), BigRational(1), BigRational(2)}), DegeneratePoints);
  CHECK_THROWS_AS(factorization_check(2, {BigRational(1), BigRational(-1)}), DegeneratePoints);
}

TEST_CASE("Jucys-Murphy identity") {
  CHECK(jm_identity_check(T("1"), 2));
  CHECK(jm_identity_check(T("1|2"), 3));
  CHECK(jm_identity_check(T("1"), 3));
  CHECK(jm_identity_check(T("1|0"), 3));
  CHECK(jm_identity_check(T("1|0"), 4));
}

TEST_CASE("alternative fusion function for B_3") {
  for (const char* text : {"1|2|3", "1|11|111", "1|0|1"}) {
    auto t = T(text);
    auto r = psi_tilde_b3(t);
    CHECK_FALSE(r.constant.is_zero());
    CHECK(r.value == recurrence_idempotent(t, ctx()).element * r.constant);
    CHECK(r.orders.size() == 3);
  }
  CHECK_THROWS_AS(psi_tilde_b3(T("1|2")), IndexOutOfRange);
}

TEST_CASE("spectral identities in B_2") {
  CHECK(rec("1|0") + rec("1|2") + rec("1|11") == one(2));
  CHECK((rec("1|2") * rec("1|11")).is_zero());
  CHECK(rec("1") == one(1));
}

TEST_CASE("modular mode") {
  const FieldMode mode = FieldMode::modular(1000003, 4321, 3);
  const ModularContext mctx(mode);
  for (const auto& t : enumerate_updown(3, std::nullopt)) {
    auto exact = recurrence_idempotent(t, ctx()).element;
    auto down = exact.map_coefficients(mctx.omega, [&](const QOmega& c) { return specialize(c, mode); });
    CHECK(recurrence_idempotent(t, mctx).element == down);
    auto fused = fusion_idempotent(t, mctx);
    CHECK(fused.element == down);
    CHECK(fused.constant == specialize(f_constant(t).value, mode));
  }
  // with w = 2 the contents of 1|11 satisfy c_1 + c_2 = 0
  const ModularContext bad(FieldMode::modular(101, 2, 2));
  CHECK_THROWS_AS(fusion_idempotent(T("1|11"), bad), ModularDegeneration);
}

TEST_CASE("suites pass at n = 3") {
  SuiteOptions o;
  o.n = 3;
  for (const auto& name : suite_names()) {
    auto report = run_suite(name, o);
    CHECK_MESSAGE(report.ok(), name);
    CHECK(report.records.size() > 0);
  }
  o.mode = FieldMode::modular(default_prime(1), 99, 3);
  o.jobs = 2;
  for (const char* name : {"spectral", "fusion", "consistency"}) CHECK_MESSAGE(run_suite(name, o).ok(), name);
  CHECK_THROWS_AS(run_suite("nope", o), std::invalid_argument);
}

TEST_CASE("suite reports are deterministic across job counts") {
  SuiteOptions a, b;
  a.n = b.n = 3;
  b.jobs = 3;
  CHECK(run_suite("fusion", a).to_text() == run_suite("fusion", b).to_text());
  CHECK(run_suite("spectral", a).to_json() == run_suite("spectral", b).to_json());
}

}  // TEST_SUITE
