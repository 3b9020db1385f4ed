#include "brauer/algebra.hpp"

#include <chrono>
#include <string>

namespace brauer {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

VerificationReport verify_presentation(int n) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "presentation";
  const QOmega w = omega_symbol();
  auto s = [&](int i) { return ExactElement::basis(BrauerDiagram::s(n, i), w); };
  auto e = [&](int i) { return ExactElement::basis(BrauerDiagram::e(n, i), w); };
  const auto one = ExactElement::identity(n, w);
  const std::string inputs = "n=" + std::to_string(n);
  auto check = [&](const std::string& id, const ExactElement& lhs, const ExactElement& rhs) {
    report.add(id, inputs, lhs == rhs);
  };

  for (int i = 1; i < n; ++i) {
    auto si = s(i), ei = e(i);
    auto tag = std::to_string(i);
    check("s" + tag + "^2=1", si * si, one);
    check("e" + tag + "^2=w*e" + tag, ei * ei, ei * w);
    check("s" + tag + "e" + tag + "=e" + tag, si * ei, ei);
    check("e" + tag + "s" + tag + "=e" + tag, ei * si, ei);
  }
  for (int i = 1; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      auto ti = std::to_string(i), tj = std::to_string(j);
      check("s" + ti + "s" + tj + "=s" + tj + "s" + ti, s(i) * s(j), s(j) * s(i));
      check("e" + ti + "e" + tj + "=e" + tj + "e" + ti, e(i) * e(j), e(j) * e(i));
      check("s" + ti + "e" + tj + "=e" + tj + "s" + ti, s(i) * e(j), e(j) * s(i));
      check("e" + ti + "s" + tj + "=s" + tj + "e" + ti, e(i) * s(j), s(j) * e(i));
    }
  }
  for (int i = 1; i + 1 < n; ++i) {
    auto ti = std::to_string(i), tn = std::to_string(i + 1);
    auto si = s(i), sn = s(i + 1), ei = e(i), en = e(i + 1);
    check("braid s" + ti + "s" + tn, si * sn * si, sn * si * sn);
    check("e" + ti + "e" + tn + "e" + ti + "=e" + ti, ei * en * ei, ei);
    check("e" + tn + "e" + ti + "e" + tn + "=e" + tn, en * ei * en, en);
    check("s" + ti + "e" + tn + "e" + ti + "=s" + tn + "e" + ti, si * en * ei, sn * ei);
    check("e" + tn + "e" + ti + "s" + tn + "=e" + tn + "s" + ti, en * ei * sn, en * si);
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_jucys_murphy(int n) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = "jm";
  const QOmega w = omega_symbol();
  std::vector<ExactElement> x;
  for (int r = 1; r <= n; ++r) x.push_back(jucys_murphy(n, r, w));
  const std::string inputs = "n=" + std::to_string(n);
  for (int r = 1; r <= n; ++r)
    for (int q = r + 1; q <= n; ++q)
      report.add("[x" + std::to_string(r) + ",x" + std::to_string(q) + "]=0", inputs,
                 commutator(x[static_cast<std::size_t>(r - 1)], x[static_cast<std::size_t>(q - 1)])
                     .is_zero());
  const auto& xn = x.back();
  for (int i = 1; i + 1 < n; ++i) {
    auto si = ExactElement::basis(BrauerDiagram::s(n, i), w);
    auto ei = ExactElement::basis(BrauerDiagram::e(n, i), w);
    report.add("[x" + std::to_string(n) + ",s" + std::to_string(i) + "]=0", inputs,
               commutator(xn, si).is_zero());
    report.add("[x" + std::to_string(n) + ",e" + std::to_string(i) + "]=0", inputs,
               commutator(xn, ei).is_zero());
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

}  // namespace brauer
