#pragma once

#include "brauer/algebra.hpp"
#include "brauer/field_mode.hpp"
#include "brauer/tableau.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

enum class Method { recurrence, fusion };

inline const char* method_name(Method m) { return m == Method::recurrence ? "recurrence" : "fusion"; }

template <class K>
struct IdempotentResult {
  UpdownTableau tableau;
  AlgebraElement<K> element;
  /// f(T) for fusion, 1 for the recurrence.
  K constant;
  Method method = Method::recurrence;
  double seconds = 0.0;
  /// Regularization exponents p_r used at each fusion step.
  std::vector<int> exponents;
  /// Pole orders found by auto-regularization at each fusion step.
  std::vector<int> detected_orders;
};

/// Lifts an element into K(u), coefficients constant in u.
template <class K>
AlgebraElement<RationalFunction<K>> lift(const AlgebraElement<K>& a) {
  using L = RationalFunction<K>;
  return a.map_coefficients(L(a.omega()), [](const K& c) { return L(c); });
}

template <class K>
struct RegularizedValue {
  int order = 0;
  AlgebraElement<K> value;
};

/// Coefficient-wise ((u - c)^p X)|_{u=c}. With no p, uses the smallest p for
/// which every coefficient is regular, so the value is nonzero.
template <class K>
RegularizedValue<K> regularized_eval(const AlgebraElement<RationalFunction<K>>& x, const K& c,
                                     std::optional<int> p = std::nullopt) {
  if (x.is_zero()) throw ZeroInput("regularized evaluation of the zero element");
  int order = 0;
  if (p) {
    order = *p;
  } else {
    bool first = true;
    for (const auto& [d, coeff] : x.terms()) {
      int v = valuation_at(coeff, c);
      if (first || -v > order) order = -v;
      first = false;
    }
  }
  const K omega = x.omega().constant_value();
  AlgebraElement<K> value(x.n(), omega);
  for (const auto& [d, coeff] : x.terms()) value.add_term(d, shift_and_eval(coeff, c, order));
  return {order, std::move(value)};
}

namespace detail {

template <class K>
K exact_difference_in(const FieldContext<K>& ctx, const QOmega& diff) {
  if (diff.is_zero()) throw ContentCollision("content difference vanishes identically");
  K v = ctx.from_exact(diff);
  if (v.is_zero())
    throw ModularDegeneration("content difference vanishes in " + ctx.mode.describe());
  return v;
}

/// X * (1 - d / denom) with denom a scalar of K(u).
template <class L>
AlgebraElement<L> times_factor(const AlgebraElement<L>& x, const BrauerDiagram& d, const L& denom,
                               const L& sign = L(-1)) {
  auto moved = x.times(d);
  moved *= sign / denom;
  return x + moved;
}

}  // namespace detail

/// E_U * prod_a (x_r - a)/(c_r - a) for the step from U (length r-1) to T.
template <class K>
AlgebraElement<K> recurrence_step(const AlgebraElement<K>& e_u, const UpdownTableau& t,
                                  const FieldContext<K>& ctx) {
  const int r = t.length();
  const auto step = t.step(r);
  const QOmega c_exact = step.content().exact();
  const auto x = jucys_murphy(e_u.n(), r, ctx.omega);
  auto boxes = boxes_with_contents(t.shape(r - 1));
  std::vector<BoxContent> others;
  for (const auto& list : {boxes.addable, boxes.removable})
    for (const auto& bc : list)
      if (!(bc.box == step.box)) others.push_back(bc);

  AlgebraElement<K> e = e_u;
  for (const auto& bc : others) {
    K denom = detail::exact_difference_in(ctx, c_exact - bc.content.exact());
    K a = bc.content.value(ctx.omega);
    auto factor = x - AlgebraElement<K>::scalar(e_u.n(), ctx.omega, a);
    e = e * factor;
    e /= denom;
  }
  return e;
}

/// Primitive idempotent E_T by the Jucys-Murphy recurrence, in B_n with n = |T|
/// (or a larger `degree`).
template <class K>
IdempotentResult<K> recurrence_idempotent(const UpdownTableau& t, const FieldContext<K>& ctx,
                                          int degree = 0) {
  auto start = std::chrono::steady_clock::now();
  const int n = degree > 0 ? degree : t.length();
  auto e = AlgebraElement<K>::identity(n, ctx.omega);
  for (int r = 1; r <= t.length(); ++r) e = recurrence_step(e, t.prefix(r), ctx);
  IdempotentResult<K> out{t, std::move(e), K(1), Method::recurrence, 0.0, {}, {}};
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// E_T for every updown tableau of length <= n (the empty tableau maps to 1),
/// all as elements of B_n, sharing prefixes.
template <class K>
std::map<UpdownTableau, AlgebraElement<K>> all_recurrence_idempotents(int n,
                                                                      const FieldContext<K>& ctx) {
  std::map<UpdownTableau, AlgebraElement<K>> out;
  auto rec = [&](auto&& self, const UpdownTableau& u, const AlgebraElement<K>& e_u) -> void {
    out.emplace(u, e_u);
    if (u.length() == n) return;
    const Partition& mu = u.final_shape();
    std::vector<Partition> nexts;
    for (const Box& b : mu.addable_boxes()) nexts.push_back(mu.with_box(b));
    for (const Box& b : mu.removable_boxes()) nexts.push_back(mu.without_box(b));
    for (const auto& next : nexts) {
      auto t = u.extended(next);
      self(self, t, recurrence_step(e_u, t, ctx));
    }
  };
  rec(rec, UpdownTableau{}, AlgebraElement<K>::identity(n, ctx.omega));
  return out;
}

struct FusionOptions {
  /// Compare each partial value with f(U_r) E_{U_r} from the recurrence.
  bool cross_check = true;
};

/// One fusion step: partial * prod_{k=r-1..1}(1 - e_{kr}/(c_k+u)) *
/// prod_{k=1..r-1}(1 - s_{kr}/(c_k-u)) over K(u).
template <class K>
AlgebraElement<RationalFunction<K>> fusion_step_product(const AlgebraElement<K>& partial,
                                                        const std::vector<K>& c, int r) {
  using L = RationalFunction<K>;
  const int n = partial.n();
  auto x = lift(partial);
  const L u = L::variable();
  for (int k = r - 1; k >= 1; --k)
    x = detail::times_factor(x, BrauerDiagram::e(n, k, r), L(c[static_cast<std::size_t>(k - 1)]) + u);
  for (int k = 1; k <= r - 1; ++k)
    x = detail::times_factor(x, BrauerDiagram::s(n, k, r), L(c[static_cast<std::size_t>(k - 1)]) - u);
  return x;
}

/// f(T) E_T by regularized consecutive evaluation of the fusion function,
/// returned divided by f(T).
template <class K>
IdempotentResult<K> fusion_idempotent(const UpdownTableau& t, const FieldContext<K>& ctx,
                                      const FusionOptions& options = {}) {
  auto start = std::chrono::steady_clock::now();
  const int n = t.length();
  const auto content_symbols = contents(t);
  std::vector<K> c;
  for (const auto& cs : content_symbols) c.push_back(cs.value(ctx.omega));
  const auto p = exponents(t);
  const auto f = f_constant(t);

  IdempotentResult<K> out{t, AlgebraElement<K>(n, ctx.omega), K(1), Method::fusion, 0.0, {}, {}};
  out.exponents = p;

  // Modular runs must not create zeros that are absent over Q(w).
  for (int r = 1; r <= n; ++r)
    for (int k = 1; k < r; ++k)
      for (int sign : {1, -1}) {
        QOmega exact = content_symbols[static_cast<std::size_t>(k - 1)].exact() +
                       content_symbols[static_cast<std::size_t>(r - 1)].exact() * QOmega(sign);
        if (!exact.is_zero() && ctx.from_exact(exact).is_zero())
          throw ModularDegeneration("c_" + std::to_string(k) + (sign > 0 ? " + " : " - ") + "c_" +
                                    std::to_string(r) + " vanishes in " + ctx.mode.describe());
      }

  auto partial = AlgebraElement<K>::identity(n, ctx.omega);
  auto reference = AlgebraElement<K>::identity(n, ctx.omega);
  K f_prefix(1);
  for (int r = 1; r <= n; ++r) {
    const K& cr = c[static_cast<std::size_t>(r - 1)];
    auto x = fusion_step_product(partial, c, r);
    const int pr = p[static_cast<std::size_t>(r - 1)];
    auto regular = regularized_eval(x, cr);
    out.detected_orders.push_back(regular.order);
    if (regular.order > pr)
      throw PoleAtEvaluationPoint("step " + std::to_string(r) + " of " + t.to_string() +
                                  ": pole order " + std::to_string(regular.order) +
                                  " exceeds exponent " + std::to_string(pr));
    // A smaller detected order means (u - c_r)^{p_r} X vanishes at c_r.
    if (regular.order < pr)
      throw ZeroValue("step " + std::to_string(r) + " of " + t.to_string() + " evaluated to zero");
    partial = std::move(regular.value);
    if (options.cross_check) {
      reference = recurrence_step(reference, t.prefix(r), ctx);
      f_prefix *= ctx.from_exact(f.factors[static_cast<std::size_t>(r - 1)]);
      if (!(partial == reference * f_prefix))
        throw CrossCheckMismatch("fusion step " + std::to_string(r) + " of " + t.to_string() +
                                 " differs from f(U) E_U");
    }
  }
  K fv = ctx.from_exact(f.value);
  if (fv.is_zero()) throw ZeroValue("f(T) vanishes in " + ctx.mode.describe());
  out.constant = fv;
  out.element = partial / fv;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

/// Symmetric-group fusion: consecutive evaluation of the s-factors at the
/// integer contents j - i. Returns H(lambda) E_T, supported on permutations.
template <class K>
AlgebraElement<K> symmetric_phi(const UpdownTableau& t, const FieldContext<K>& ctx) {
  using L = RationalFunction<K>;
  if (!t.all_additions()) throw NotAllAdditions("symmetric_phi needs a standard tableau");
  const int n = t.length();
  std::vector<K> c;
  for (int r = 1; r <= n; ++r) c.push_back(ctx.constant(BigRational(t.step(r).diagonal())));
  auto partial = AlgebraElement<K>::identity(n, ctx.omega);
  const L u = L::variable();
  for (int r = 2; r <= n; ++r) {
    auto x = lift(partial);
    for (int k = 1; k <= r - 1; ++k)
      x = detail::times_factor(x, BrauerDiagram::s(n, k, r), L(c[static_cast<std::size_t>(k - 1)]) - u);
    partial = regularized_eval(x, c[static_cast<std::size_t>(r - 1)], 0).value;
  }
  return partial;
}

/// Nonzero s with candidate = s * reference, if any.
template <class K>
std::optional<K> proportionality_constant(const AlgebraElement<K>& candidate,
                                          const AlgebraElement<K>& reference) {
  if (reference.is_zero() || candidate.is_zero()) return std::nullopt;
  const auto& [d, ref_c] = *reference.terms().begin();
  K ratio = candidate.coefficient(d) / ref_c;
  if (ratio.is_zero()) return std::nullopt;
  if (!(candidate == reference * ratio)) return std::nullopt;
  return ratio;
}

// ---- exact-mode identity checks ------------------------------------------

struct ProportionalProduct {
  ExactElement element;
  QOmega constant;
};

enum class RowOrColumn { row, column };

/// Lexicographic product of the row or column factors; throws NotProportional
/// unless it is a nonzero multiple of E_(n) resp. E_(1^n).
ProportionalProduct row_column_product(int n, RowOrColumn which);

/// The unique updown tableau of the row (n) or column (1^n) shape.
UpdownTableau row_tableau(int n);
UpdownTableau column_tableau(int n);

/// 1 - s_ij/u + e_ij/(u - w/2 + 1) in B_n(w)
ExactElement r_matrix(int n, int i, int j, const BigRational& u, bool with_s = true,
                      bool with_e = true);

/// R12(u) R13(u+v) R23(v) == R23(v) R13(u+v) R12(u) in B_3(w).
bool ybe_check(const BigRational& u, const BigRational& v, bool with_s = true, bool with_e = true);

/// (1 - e_ir/u)(1 - e_jr/v)(1 - s_ij/(u-v)) == reversed product, i < j < r.
bool ybetr_check(int n, int i, int j, int r, const BigRational& u, const BigRational& v);

/// Lexicographic double product vs. the factorized incremental form at
/// numeric u_i = points[i], plus the e/e/s exchange identity at
/// (u_i + u_r, u_j + u_r) for all i < j < r.
bool factorization_check(int n, const std::vector<BigRational>& points);

ExactElement lexicographic_product(int n, const std::vector<BigRational>& points);
ExactElement factorized_product(int n, const std::vector<BigRational>& points);

/// E_U prod (1 + s_{k,m}/(c_k - u)) prod (1 + e_{k,m}/(c_k + u - w))
///   == E_U (u - x_n^{(m)}) / (u - c_1), with n = |U| + 1, in B_m over Q(w)(u).
bool jm_identity_check(const UpdownTableau& u, int m);

/// Consecutive auto-regularized evaluation of the alternative three-variable
/// function; throws NotProportional unless the value is a multiple of E_T.
struct PsiTildeResult {
  std::vector<int> orders;
  ExactElement value;
  QOmega constant;
};
PsiTildeResult psi_tilde_b3(const UpdownTableau& t);

}  // namespace brauer
