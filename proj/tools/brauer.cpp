#include "brauer/idempotents.hpp"
#include "brauer/json_io.hpp"
#include "brauer/parallel.hpp"
#include "brauer/suites.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

using namespace brauer;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 0;
  std::string shape;
  std::string tableau;
  std::string method = "both";
  std::string suite = "all";
  std::string mode = "exact";
  std::uint64_t prime = 0;
  std::uint64_t omega_val = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string format = "json";
  bool timing = false;

  FieldMode field_mode() const {
    if (mode == "exact") return FieldMode::exact();
    const std::uint64_t p = prime ? prime : default_prime(0);
    if (omega_val) return FieldMode::modular(p, omega_val, n);
    return FieldMode::sample_modular(p, seed, n);
  }
};

void add_common(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--n", c.n, "Number of strands / tableau length")->required()->check(CLI::Range(1, kMaxDegree));
  cmd->add_option("--shape", c.shape, "Final shape, e.g. 21, 0 for the empty partition, or 10,2");
  cmd->add_option("--tableau", c.tableau, "Updown tableau as shapes separated by |, e.g. 1|0|1");
  cmd->add_option("--mode", c.mode, "Field mode")->check(CLI::IsMember({"exact", "modp"}));
  cmd->add_option("--prime", c.prime, "Prime for modp mode");
  cmd->add_option("--omega-val", c.omega_val, "Value of omega in modp mode (sampled from the seed if absent)");
  cmd->add_option("--seed", c.seed, "Seed for sampled points and omega values");
  cmd->add_option("--jobs", c.jobs, "Worker threads for independent tableaux")->check(CLI::PositiveNumber);
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--timing", c.timing, "Include wall-clock timings in the output");
}

std::vector<UpdownTableau> selected_tableaux(const RunConfig& c) {
  if (!c.tableau.empty()) {
    auto t = UpdownTableau::parse(c.tableau);
    if (t.length() != c.n)
      throw UsageError("tableau has length " + std::to_string(t.length()) + " but --n is " +
                       std::to_string(c.n));
    return {t};
  }
  std::optional<Partition> shape;
  if (!c.shape.empty()) shape = Partition::parse(c.shape);
  return enumerate_updown(c.n, shape, kMaxDegree);
}

// ---- tableaux ---------------------------------------------------------------

int cmd_tableaux(const RunConfig& c) {
  json rows = json::array();
  std::ostringstream text;
  for (const auto& t : selected_tableaux(c)) {
    const auto cs = contents(t);
    const auto p = exponents(t);
    const auto f = f_constant(t);
    json jc = json::array();
    std::string symbols, formulas;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const QOmega v = cs[i].exact();
      jc.push_back({{"symbol", cs[i].to_string()}, {"value", to_json(v)}, {"text", to_text(v)}});
      symbols += (i ? "," : "") + cs[i].to_string();
      formulas += (i ? ", " : "") + to_text(v);
    }
    rows.push_back({{"tableau", to_json(t)},
                    {"text", t.to_string()},
                    {"contents", jc},
                    {"exponents", p},
                    {"f", {{"value", to_json(f.value)}, {"text", to_text(f.value)}}}});
    text << t.to_string() << "  c=(" << symbols << ") = (" << formulas << ")  p=(";
    for (std::size_t i = 0; i < p.size(); ++i) text << (i ? "," : "") << p[i];
    text << ")  f=" << to_text(f.value) << "\n";
  }
  if (c.format == "json") std::cout << json{{"n", c.n}, {"count", rows.size()}, {"tableaux", rows}}.dump(2) << "\n";
  else std::cout << text.str() << rows.size() << " tableaux\n";
  return 0;
}

// ---- idempotent -------------------------------------------------------------

std::optional<std::filesystem::path> cache_path(const RunConfig& c, const FieldMode& mode,
                                                const UpdownTableau& t, Method m) {
  const char* dir = std::getenv("BRAUER_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  std::string key = "n" + std::to_string(c.n) + "_" + mode.describe() + "_" + method_name(m) + "_" + t.to_string();
  for (char& ch : key)
    if (ch == '|' || ch == '(' || ch == ')' || ch == ',' || ch == '=') ch = '_';
  return std::filesystem::path(dir) / (key + ".json");
}

template <class K>
IdempotentResult<K> compute(const RunConfig& c, const FieldContext<K>& ctx, const UpdownTableau& t, Method m) {
  auto path = cache_path(c, ctx.mode, t, m);
  if (path && std::filesystem::exists(*path)) {
    std::ifstream in(*path);
    try {
      return idempotent_from_json<K>(json::parse(in), ctx.omega);
    } catch (const std::exception&) {
      // unreadable entries are recomputed and overwritten
    }
  }
  auto r = m == Method::recurrence ? recurrence_idempotent(t, ctx) : fusion_idempotent(t, ctx, {false});
  if (path) {
    std::filesystem::create_directories(path->parent_path());
    std::ofstream(*path) << to_json(r, ctx.mode, true).dump() << "\n";
  }
  return r;
}

template <class K>
int run_idempotent(const RunConfig& c, const FieldContext<K>& ctx) {
  std::vector<Method> methods;
  if (c.method != "fusion") methods.push_back(Method::recurrence);
  if (c.method != "recurrence") methods.push_back(Method::fusion);
  struct Entry {
    UpdownTableau t;
    std::vector<IdempotentResult<K>> results;
  };
  auto entries = parallel_map(selected_tableaux(c), c.jobs, [&](const UpdownTableau& t) {
    Entry e{t, {}};
    for (Method m : methods) e.results.push_back(compute(c, ctx, t, m));
    return e;
  });

  bool all_agree = true;
  json out = json::array();
  std::ostringstream text;
  for (const auto& e : entries) {
    json je = {{"tableau", to_json(e.t)}, {"text", e.t.to_string()}};
    json results = json::array();
    text << e.t.to_string() << "\n";
    for (const auto& r : e.results) {
      results.push_back(to_json(r, ctx.mode, c.timing));
      text << "  " << method_name(r.method) << ": E = " << to_text(r.element) << "\n";
      if (r.method == Method::fusion) text << "  f = " << to_text(r.constant) << "\n";
      if (c.timing) text << "  time " << r.seconds << " s\n";
    }
    je["results"] = results;
    if (e.results.size() == 2) {
      const bool agree = e.results[0].element == e.results[1].element;
      all_agree = all_agree && agree;
      je["agree"] = agree;
      text << "  " << (agree ? "methods agree" : "METHODS DISAGREE") << "\n";
    }
    out.push_back(je);
  }
  if (c.format == "json")
    std::cout << json{{"n", c.n}, {"mode", to_json(ctx.mode)}, {"idempotents", out}}.dump(2) << "\n";
  else std::cout << text.str();
  return all_agree ? 0 : kExitFailure;
}

int cmd_idempotent(const RunConfig& c) {
  if (c.tableau.empty() && c.shape.empty()) throw UsageError("idempotent needs --tableau or --shape");
  const FieldMode mode = c.field_mode();
  if (mode.is_exact()) return run_idempotent(c, ExactContext{});
  return run_idempotent(c, ModularContext(mode));
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const RunConfig& c) {
  SuiteOptions o{c.n, c.field_mode(), c.seed, c.jobs};
  auto report = run_suite(c.suite, o);
  if (c.format == "json") std::cout << report.to_json(c.timing).dump(2) << "\n";
  else std::cout << report.to_text(c.timing);
  return report.ok() ? 0 : kExitFailure;
}

// ---- bench ------------------------------------------------------------------

template <class K>
json bench_mode(const UpdownTableau& t, const FieldContext<K>& ctx) {
  auto rec = recurrence_idempotent(t, ctx);
  auto fus = fusion_idempotent(t, ctx, {false});
  return {{"recurrence", rec.seconds}, {"fusion", fus.seconds}, {"agree", rec.element == fus.element}};
}

int cmd_bench(const RunConfig& c) {
  RunConfig mc = c;
  mc.mode = "modp";
  const FieldMode modular = mc.field_mode();
  const ExactContext exact;
  const ModularContext mod(modular);
  auto rows = parallel_map(selected_tableaux(c), c.jobs, [&](const UpdownTableau& t) {
    return json{{"tableau", t.to_string()}, {"exact", bench_mode(t, exact)}, {"modp", bench_mode(t, mod)}};
  });
  json totals = {{"exact", {{"recurrence", 0.0}, {"fusion", 0.0}}}, {"modp", {{"recurrence", 0.0}, {"fusion", 0.0}}}};
  bool agree = true;
  for (const auto& r : rows)
    for (const char* m : {"exact", "modp"}) {
      agree = agree && r[m]["agree"].get<bool>();
      for (const char* k : {"recurrence", "fusion"})
        totals[m][k] = totals[m][k].get<double>() + r[m][k].get<double>();
    }
  json out = {{"n", c.n}, {"modp_mode", to_json(modular)}, {"count", rows.size()}, {"tableaux", rows}, {"totals", totals}};
  if (c.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << r["tableau"].get<std::string>() << "  exact rec " << r["exact"]["recurrence"] << " fus "
                << r["exact"]["fusion"] << "  modp rec " << r["modp"]["recurrence"] << " fus "
                << r["modp"]["fusion"] << "\n";
    std::cout << "totals " << totals.dump() << "\n";
  }
  return agree ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitive idempotents of the Brauer algebra"};
  app.require_subcommand(1);
  RunConfig config;
  auto* tableaux = app.add_subcommand("tableaux", "List updown tableaux with contents, exponents and f(T)");
  auto* idempotent = app.add_subcommand("idempotent", "Compute E_T by the recurrence and/or fusion");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  auto* bench = app.add_subcommand("bench", "Time both constructions in both field modes");
  for (auto* cmd : {tableaux, idempotent, verify, bench}) add_common(cmd, config);
  idempotent->add_option("--method", config.method, "Construction")
      ->check(CLI::IsMember({"recurrence", "fusion", "both"}));
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", config.suite, "Suite name")->check(CLI::IsMember(suites));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (tableaux->parsed()) return cmd_tableaux(config);
    if (idempotent->parsed()) return cmd_idempotent(config);
    if (verify->parsed()) return cmd_verify(config);
    return cmd_bench(config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool usage = dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidTableau*>(&e) ||
                       dynamic_cast<const ShapeParityMismatch*>(&e) || dynamic_cast<const BoundExceeded*>(&e) ||
                       dynamic_cast<const FieldModeMismatch*>(&e) || dynamic_cast<const ModularDegeneration*>(&e);
    return usage ? kExitUsage : kExitFailure;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
