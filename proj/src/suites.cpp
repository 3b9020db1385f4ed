#include "brauer/suites.hpp"

#include "brauer/algebra.hpp"
#include "brauer/idempotents.hpp"
#include "brauer/json_io.hpp"
#include "brauer/parallel.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

namespace brauer {

namespace {

using Records = std::vector<CheckRecord>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string join(const std::vector<BigRational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_text(v[i]);
  return out + ")";
}

// Runs f on every item in parallel; an exception becomes a failing record.
template <class T, class F>
void run_checks(VerificationReport& report, const std::vector<T>& items, int jobs,
                std::function<std::string(const T&)> label, F&& f) {
  auto results = parallel_map(items, jobs, [&](const T& item) -> Records {
    try {
      return f(item);
    } catch (const std::exception& e) {
      return {CheckRecord{"error", label(item), false, e.what()}};
    }
  });
  for (auto& rs : results)
    for (auto& r : rs) report.records.push_back(std::move(r));
}

std::string tableau_label(const UpdownTableau& t) { return "T=" + t.to_string(); }

std::vector<UpdownTableau> tableaux_up_to(int n) {
  std::vector<UpdownTableau> out;
  for (int len = 1; len <= n; ++len)
    for (auto& t : enumerate_updown(len, std::nullopt, n)) out.push_back(std::move(t));
  return out;
}

template <class K>
void spectral_checks(VerificationReport& report, int n, const FieldContext<K>& ctx, int jobs) {
  using Element = AlgebraElement<K>;
  using L = RationalFunction<K>;
  const auto all = all_recurrence_idempotents(n, ctx);
  std::vector<UpdownTableau> top, lower;
  std::map<UpdownTableau, std::vector<UpdownTableau>> children;
  for (const auto& [t, e] : all) {
    (t.length() == n ? top : lower).push_back(t);
    if (t.length() > 0) children[t.prefix(t.length() - 1)].push_back(t);
  }
  std::vector<Element> x;
  for (int r = 1; r <= n; ++r) x.push_back(jucys_murphy(n, r, ctx.omega));
  const Element one = Element::identity(n, ctx.omega);

  run_checks<UpdownTableau>(report, top, jobs, tableau_label, [&](const UpdownTableau& t) {
    Records out;
    const auto label = tableau_label(t);
    const Element& e = all.at(t);
    out.push_back({"idempotent", label, e * e == e, {}});
    const auto cs = contents(t);
    bool eigen = true;
    std::string bad;
    for (int r = 1; r <= n; ++r) {
      const K c = cs[static_cast<std::size_t>(r - 1)].value(ctx.omega);
      const Element& xr = x[static_cast<std::size_t>(r - 1)];
      if (!(xr * e == e * c && e * xr == e * c)) {
        eigen = false;
        bad += " r=" + std::to_string(r);
      }
    }
    out.push_back({"eigenvalues", label, eigen, bad.empty() ? "" : "fails at" + bad});
    std::size_t nonzero = 0;
    for (const auto& other : top)
      if (!(other == t) && !(e * all.at(other)).is_zero()) ++nonzero;
    out.push_back({"orthogonal", label, nonzero == 0,
                   nonzero ? std::to_string(nonzero) + " nonzero products" : ""});

    // Spectral form of E_U (u - c_n)/(u - x_n): the sum over one-step
    // extensions has a simple pole at c_n(T) with residue E_T.
    const auto u_parent = t.prefix(n - 1);
    const L u = L::variable();
    const L omega_u(ctx.omega);
    AlgebraElement<L> y(n, omega_u);
    for (const auto& sibling : children.at(u_parent)) {
      const K c = contents(sibling).back().value(ctx.omega);
      y += lift(all.at(sibling)) * (u - L(c)).inverse();
    }
    auto lhs = y * u - lift(x.back()) * y;
    out.push_back({"resolvent", label, lhs == lift(all.at(u_parent)), {}});
    const K cn = cs.back().value(ctx.omega);
    out.push_back({"residue", label, regularized_eval(y, cn, 1).value == e, {}});
    return out;
  });

  for (const auto& u : lower) {
    Element sum(n, ctx.omega);
    for (const auto& t : children.at(u)) sum += all.at(t);
    report.add("branching", "U=" + (u.length() ? u.to_string() : std::string("empty")),
               sum == all.at(u));
  }
  Element total(n, ctx.omega);
  for (const auto& t : top) total += all.at(t);
  report.add("completeness", "n=" + std::to_string(n), total == one,
             std::to_string(top.size()) + " tableaux");
}

template <class K>
void fusion_checks(VerificationReport& report, int n, const FieldContext<K>& ctx, int jobs) {
  const auto tableaux = enumerate_updown(n, std::nullopt, n);
  const std::string mode = ctx.mode.describe();
  run_checks<UpdownTableau>(report, tableaux, jobs, tableau_label, [&](const UpdownTableau& t) {
    auto fused = fusion_idempotent(t, ctx, {true});
    auto reference = recurrence_idempotent(t, ctx);
    const bool orders = fused.detected_orders == fused.exponents;
    const std::string detail = "p=" + join(fused.exponents) + " orders=" + join(fused.detected_orders) +
                               " f=" + to_text(fused.constant);
    return Records{{"fusion=recurrence", tableau_label(t) + " " + mode, fused.element == reference.element,
                    detail},
                   {"orders=exponents", tableau_label(t) + " " + mode, orders, {}}};
  });
}

template <class F>
VerificationReport timed(const std::string& suite, F&& body) {
  auto start = Clock::now();
  VerificationReport report;
  report.suite = suite;
  body(report);
  report.wall_seconds = seconds_since(start);
  return report;
}

// Pairwise distinct rationals with pairwise nonzero sums.
std::vector<BigRational> seeded_points(std::uint64_t seed, int count) {
  std::vector<BigRational> out;
  std::uint64_t stream = seed;
  while (static_cast<int>(out.size()) < count) {
    for (const auto& q : seeded_rationals(stream++, 8)) {
      bool ok = true;
      for (const auto& p : out) ok = ok && !(p == q) && !(p + q).is_zero();
      if (ok && static_cast<int>(out.size()) < count) out.push_back(q);
    }
  }
  return out;
}

}  // namespace

std::vector<BigRational> seeded_rationals(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-30, 29);
  std::uniform_int_distribution<int> den(1, 30);
  std::vector<BigRational> out;
  for (std::size_t i = 0; i < count; ++i) {
    int a = num(rng);
    if (a >= 0) ++a;
    out.push_back(BigRational(a, den(rng)));
  }
  return out;
}

VerificationReport spectral_suite(const SuiteOptions& o) {
  return timed("spectral", [&](VerificationReport& r) {
    if (o.mode.is_exact()) spectral_checks(r, o.n, ExactContext{}, o.jobs);
    else spectral_checks(r, o.n, ModularContext(o.mode), o.jobs);
  });
}

VerificationReport fusion_suite(const SuiteOptions& o) {
  return timed("fusion", [&](VerificationReport& r) {
    if (o.mode.is_exact()) fusion_checks(r, o.n, ExactContext{}, o.jobs);
    else fusion_checks(r, o.n, ModularContext(o.mode), o.jobs);
  });
}

VerificationReport consistency_suite(const SuiteOptions& o) {
  return timed("consistency", [&](VerificationReport& r) {
    const FieldMode mode =
        o.mode.is_exact() ? FieldMode::sample_modular(default_prime(0), o.seed, o.n) : o.mode;
    const ExactContext exact;
    const ModularContext modular(mode);
    const std::string tag = " " + mode.describe();
    run_checks<UpdownTableau>(r, tableaux_up_to(o.n), o.jobs, tableau_label, [&](const UpdownTableau& t) {
      auto e = recurrence_idempotent(t, exact).element;
      auto specialized =
          e.map_coefficients(modular.omega, [&](const QOmega& c) { return specialize(c, mode); });
      auto rec = recurrence_idempotent(t, modular).element;
      auto fus = fusion_idempotent(t, modular, {false}).element;
      return Records{{"recurrence", tableau_label(t) + tag, rec == specialized, {}},
                     {"fusion", tableau_label(t) + tag, fus == specialized, {}}};
    });
  });
}

VerificationReport symmetric_suite(const SuiteOptions& o) {
  return timed("symmetric", [&](VerificationReport& r) {
    const ExactContext ctx;
    const int n = o.n;
    std::vector<UpdownTableau> standard;
    for (const auto& lambda : updown_shapes(n))
      if (lambda.size() == n)
        for (auto& t : enumerate_updown(n, lambda, n))
          if (t.all_additions()) standard.push_back(std::move(t));
    run_checks<UpdownTableau>(r, standard, o.jobs, tableau_label, [&](const UpdownTableau& t) {
      Records out;
      const auto label = tableau_label(t);
      const QOmega h(BigRational(static_cast<long>(hooks(t.final_shape()))));
      const auto p = exponents(t);
      out.push_back({"exponents=0", label, std::all_of(p.begin(), p.end(), [](int v) { return v == 0; }),
                     "p=" + join(p)});
      out.push_back({"f=H", label, f_constant(t).value == h, "H=" + to_text(h)});
      auto phi = symmetric_phi(t, ctx);
      bool perms = true;
      for (const auto& [d, c] : phi.terms()) perms = perms && d.is_permutation();
      out.push_back({"phi on permutations", label, perms, {}});
      auto e = phi / h;
      out.push_back({"phi/H idempotent", label, e * e == e, {}});
      bool eigen = true;
      for (int q = 2; q <= n; ++q) {
        ExactElement y(n, ctx.omega);
        for (int k = 1; k < q; ++k) y.add_term(BrauerDiagram::s(n, k, q), QOmega(1));
        const QOmega c(BigRational(t.step(q).diagonal()));
        eigen = eigen && y * e == e * c;
      }
      out.push_back({"symmetric eigenvalues", label, eigen, {}});
      auto fused = fusion_idempotent(t, ctx, {false});
      out.push_back({"fusion constant=H", label, fused.constant == h, "f=" + to_text(fused.constant)});
      return out;
    });
  });
}

VerificationReport ybe_suite(const SuiteOptions& o) {
  return timed("ybe", [&](VerificationReport& r) {
    auto pair_label = [](const BigRational& u, const BigRational& v) {
      return "u=" + to_text(u) + " v=" + to_text(v);
    };
    const BigRational u0(2, 3), v0(5, 7);
    r.add("ybe", pair_label(u0, v0), ybe_check(u0, v0));
    r.add("ybe identity factors", pair_label(u0, v0), ybe_check(u0, v0, false, false));
    r.add("ybe s only", pair_label(u0, v0), ybe_check(u0, v0, true, false));
    std::vector<std::pair<BigRational, BigRational>> pairs;
    auto stream = seeded_rationals(o.seed, 64);
    for (std::size_t i = 0; i + 1 < stream.size() && pairs.size() < 20; i += 2)
      if (!(stream[i] + stream[i + 1]).is_zero()) pairs.emplace_back(stream[i], stream[i + 1]);
    run_checks<std::pair<BigRational, BigRational>>(
        r, pairs, o.jobs, [&](const auto& p) { return pair_label(p.first, p.second); },
        [&](const auto& p) { return Records{{"ybe", pair_label(p.first, p.second), ybe_check(p.first, p.second), {}}}; });
  });
}

VerificationReport rowcol_suite(const SuiteOptions& o) {
  return timed("rowcol", [&](VerificationReport& r) {
    std::vector<std::pair<int, RowOrColumn>> cases;
    for (int m = 2; m <= std::max(2, o.n); ++m)
      for (auto which : {RowOrColumn::row, RowOrColumn::column}) cases.emplace_back(m, which);
    auto label = [](const std::pair<int, RowOrColumn>& c) {
      return std::string(c.second == RowOrColumn::row ? "row" : "column") + " n=" + std::to_string(c.first);
    };
    run_checks<std::pair<int, RowOrColumn>>(r, cases, o.jobs, label, [&](const auto& c) {
      auto product = row_column_product(c.first, c.second);
      return Records{{"proportional", label(c), !product.constant.is_zero(),
                      "constant=" + to_text(product.constant)}};
    });
  });
}

VerificationReport psitilde_suite(const SuiteOptions& o) {
  return timed("psitilde", [&](VerificationReport& r) {
    run_checks<UpdownTableau>(r, enumerate_updown(3, std::nullopt, 3), o.jobs, tableau_label,
                              [&](const UpdownTableau& t) {
                                auto res = psi_tilde_b3(t);
                                return Records{{"proportional", tableau_label(t), !res.constant.is_zero(),
                                                "orders=" + join(res.orders) +
                                                    " constant=" + to_text(res.constant)}};
                              });
  });
}

VerificationReport factorization_suite(const SuiteOptions& o) {
  return timed("factorization", [&](VerificationReport& r) {
    struct Case {
      std::string id;
      std::string label;
      std::function<bool()> run;
    };
    std::vector<Case> cases;
    if (o.n >= 3) {
      std::vector<BigRational> fixed{BigRational(1, 2), BigRational(4, 3), BigRational(9, 5)};
      cases.push_back({"factorization", "n=3 points=" + join(fixed), [fixed] { return factorization_check(3, fixed); }});
      cases.push_back({"exchange", "i,j,r=1,2,3 u=3/4 v=7/11",
                       [] { return ybetr_check(3, 1, 2, 3, BigRational(3, 4), BigRational(7, 11)); }});
    }
    for (int m = 2; m <= o.n; ++m) {
      auto points = seeded_points(o.seed + static_cast<std::uint64_t>(m), m);
      cases.push_back({"factorization", "n=" + std::to_string(m) + " points=" + join(points),
                       [m, points] { return factorization_check(m, points); }});
    }
    std::uint64_t stream = o.seed;
    for (int rr = 3; rr <= o.n; ++rr)
      for (int i = 1; i < rr; ++i)
        for (int j = i + 1; j < rr; ++j) {
          auto uv = seeded_points(stream++, 2);
          cases.push_back({"exchange",
                           "i,j,r=" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(rr) +
                               " u=" + to_text(uv[0]) + " v=" + to_text(uv[1]),
                           [n = o.n, i, j, rr, uv] { return ybetr_check(n, i, j, rr, uv[0], uv[1]); }});
        }
    run_checks<Case>(r, cases, o.jobs, [](const Case& c) { return c.label; },
                     [](const Case& c) { return Records{{c.id, c.label, c.run(), {}}}; });
  });
}

VerificationReport jmidentity_suite(const SuiteOptions& o) {
  return timed("jmidentity", [&](VerificationReport& r) {
    std::vector<std::pair<UpdownTableau, int>> cases;
    for (int nn = 2; nn <= o.n; ++nn) {
      for (const auto& u : enumerate_updown(nn - 1, std::nullopt, o.n))
        for (int m : {nn, nn + 1}) cases.emplace_back(u, m);
    }
    auto label = [](const std::pair<UpdownTableau, int>& c) {
      return "U=" + (c.first.length() ? c.first.to_string() : std::string("empty")) + " m=" +
             std::to_string(c.second);
    };
    run_checks<std::pair<UpdownTableau, int>>(r, cases, o.jobs, label, [&](const auto& c) {
      return Records{{"jm identity", label(c), jm_identity_check(c.first, c.second), {}}};
    });
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"presentation", "jm",       "spectral",      "fusion",
                                              "symmetric",    "ybe",      "rowcol",        "psitilde",
                                              "factorization", "jmidentity", "consistency"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "all") {
    auto start = Clock::now();
    VerificationReport report;
    report.suite = "all";
    for (const auto& s : suite_names()) report.append(run_suite(s, o));
    report.wall_seconds = seconds_since(start);
    return report;
  }
  if (name == "presentation") return verify_presentation(o.n);
  if (name == "jm") return verify_jucys_murphy(o.n);
  if (name == "spectral") return spectral_suite(o);
  if (name == "fusion") return fusion_suite(o);
  if (name == "symmetric") return symmetric_suite(o);
  if (name == "ybe") return ybe_suite(o);
  if (name == "rowcol") return rowcol_suite(o);
  if (name == "psitilde") return psitilde_suite(o);
  if (name == "factorization") return factorization_suite(o);
  if (name == "jmidentity") return jmidentity_suite(o);
  if (name == "consistency") return consistency_suite(o);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace brauer
