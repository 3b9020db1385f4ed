#include "brauer/algebra.hpp"
#include "brauer/suites.hpp"
#include "brauer/tableau.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>

using namespace brauer;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::uint64_t double_factorial(int n) {
  std::uint64_t r = 1;
  for (int k = 1; k <= 2 * n - 1; k += 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

// Runs the suites and summarizes failures.
Outcome suites_pass(const std::vector<std::pair<std::string, SuiteOptions>>& runs) {
  std::size_t checks = 0;
  std::string failures;
  for (const auto& [name, options] : runs) {
    auto report = run_suite(name, options);
    checks += report.records.size();
    for (const auto& r : report.records)
      if (!r.pass) failures += " " + name + ":" + r.id + "[" + r.inputs + "]";
  }
  if (!failures.empty()) return {false, "failed:" + failures};
  return {checks > 0, std::to_string(checks) + " checks"};
}

SuiteOptions options(int n, FieldMode mode = FieldMode::exact(), std::uint64_t seed = 0) {
  return {n, mode, seed, jobs()};
}

Outcome presentation() {
  auto start = Clock::now();
  std::vector<std::pair<std::string, SuiteOptions>> runs;
  for (int n = 2; n <= 6; ++n) runs.emplace_back("presentation", options(n));
  auto out = suites_pass(runs);
  double s = std::chrono::duration<double>(Clock::now() - start).count();
  out.pass = out.pass && s < 5.0;
  out.detail += ", " + std::to_string(s) + " s (limit 5 s)";
  return out;
}

Outcome dimensions() {
  for (int n = 1; n <= 6; ++n) {
    const auto expected = double_factorial(n);
    if (enumerate_diagrams(n).size() != expected) return {false, "diagram count at n=" + std::to_string(n)};
    std::map<Partition, std::uint64_t> counts;
    for (const auto& t : enumerate_updown(n, std::nullopt)) ++counts[t.final_shape()];
    std::uint64_t squares = 0;
    for (const auto& [lambda, c] : counts) squares += c * c;
    if (squares != expected) return {false, "sum of squares at n=" + std::to_string(n)};
  }
  return {true, "n=1..6"};
}

Outcome worked_examples() {
  auto u = UpdownTableau::parse("1|2|21|11|1|11|21|22|21");
  auto s = tableau_statistics(u);
  const std::map<Box, int> m{{{1, 1}, 1}, {{1, 2}, 2}, {{2, 1}, 2}, {{2, 2}, 1}};
  const std::map<Box, int> mp{{{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}};
  if (s.m != m || s.m_prime != mp) return {false, "m or m' differs"};
  for (int k = -4; k <= 4; ++k) {
    const int inside = std::abs(k) <= 1;
    if (TableauStatistics::at(s.d, k) != 2 * inside || TableauStatistics::at(s.d_prime, k) != inside)
      return {false, "diagonal sums differ at k=" + std::to_string(k)};
  }
  auto p = exponents(UpdownTableau::parse("1|2|21|11|1|11"));
  if (p != std::vector<int>{0, 0, 0, 1, 1, 2}) return {false, "exponents differ"};
  return {true, "m, m', d, d', p=(0,0,0,1,1,2)"};
}

Outcome jucys_murphy_commute() {
  std::vector<std::pair<std::string, SuiteOptions>> runs;
  for (int n = 1; n <= 5; ++n) runs.emplace_back("jm", options(n));
  return suites_pass(runs);
}

Outcome spectral() {
  std::vector<std::pair<std::string, SuiteOptions>> runs;
  for (int n = 1; n <= 4; ++n) runs.emplace_back("spectral", options(n));
  return suites_pass(runs);
}

Outcome fusion() {
  std::vector<std::pair<std::string, SuiteOptions>> runs;
  for (int n = 1; n <= 4; ++n) runs.emplace_back("fusion", options(n));
  auto exact = suites_pass(runs);
  runs.clear();
  const FieldMode a = FieldMode::sample_modular(default_prime(0), 1, 5);
  const FieldMode b = FieldMode::sample_modular(default_prime(1), 2, 5);
  runs.emplace_back("fusion", options(5, a));
  runs.emplace_back("fusion", options(5, b));
  auto modular = suites_pass(runs);
  return {exact.pass && modular.pass,
          "exact n<=4: " + exact.detail + "; n=5 " + a.describe() + ", " + b.describe() + ": " + modular.detail};
}

Outcome symmetric() {
  std::vector<std::pair<std::string, SuiteOptions>> runs;
  for (int n = 1; n <= 5; ++n) runs.emplace_back("symmetric", options(n));
  return suites_pass(runs);
}

Outcome product_identities() {
  return suites_pass({{"factorization", options(5, FieldMode::exact(), 0)},
                      {"factorization", options(5, FieldMode::exact(), 1)},
                      {"jmidentity", options(4)}});
}

Outcome r_matrices() { return suites_pass({{"ybe", options(3)}, {"rowcol", options(5)}, {"psitilde", options(3)}}); }

Outcome consistency() {
  return suites_pass({{"consistency", options(4, FieldMode::sample_modular(default_prime(0), 0, 4))},
                      {"consistency", options(4, FieldMode::sample_modular(default_prime(2), 5, 4))}});
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"presentation relations, n=2..6", presentation},
      {"dimension identities, n<=6", dimensions},
      {"worked examples of the statistics and exponents", worked_examples},
      {"Jucys-Murphy commutation, n<=5", jucys_murphy_commute},
      {"spectral identities, n<=4 exact", spectral},
      {"fusion equals f(T) E_T, n<=4 exact and n=5 modular", fusion},
      {"symmetric group specialization, n<=5", symmetric},
      {"factorization, exchange and Jucys-Murphy identities", product_identities},
      {"Yang-Baxter, row/column products and the B_3 alternative", r_matrices},
      {"exact and modular modes agree, n<=4", consistency},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    failed += !o.pass;
    std::printf("%s criterion %zu: %s (%s) [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), s);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
