#include "brauer/json_io.hpp"

namespace brauer {

std::string to_text(const BigRational& v) {
  if (v.denominator() == 1) return v.numerator().get_str();
  return v.to_string();
}

json to_json(const FieldMode& mode) {
  if (mode.is_exact()) return {{"kind", "exact"}};
  return {{"kind", "modp"}, {"prime", mode.prime}, {"omega", mode.omega_value}};
}

FieldMode field_mode_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "exact") return FieldMode::exact();
  if (kind != "modp") throw ParseError("unknown field mode '" + kind + "'");
  FieldMode m;
  m.kind = FieldMode::Kind::PrimeModular;
  m.prime = j.at("prime").get<std::uint64_t>();
  m.omega_value = j.at("omega").get<std::uint64_t>();
  return m;
}

json to_json(const BrauerDiagram& d) { return {{"n", d.n()}, {"partner", d.partners_one_based()}}; }

BrauerDiagram diagram_from_json(const json& j) {
  auto partner = j.at("partner").get<std::vector<int>>();
  for (int& p : partner) --p;
  return BrauerDiagram(j.at("n").get<int>(), partner);
}

json to_json(const Partition& p) { return p.parts(); }

json to_json(const UpdownTableau& t) {
  json shapes = json::array();
  for (const auto& s : t.shapes()) shapes.push_back(to_json(s));
  return {{"shapes", shapes}};
}

UpdownTableau tableau_from_json(const json& j) {
  std::vector<Partition> shapes;
  for (const auto& s : j.at("shapes")) shapes.emplace_back(s.get<std::vector<int>>());
  return UpdownTableau(std::move(shapes));
}

json to_json(const TableauStatistics& s) {
  auto boxes = [](const std::map<Box, int>& m) {
    json out = json::array();
    for (const auto& [b, c] : m) out.push_back({{"row", b.row}, {"col", b.col}, {"count", c}});
    return out;
  };
  auto diagonals = [](const std::map<int, int>& f) {
    json out = json::object();
    for (const auto& [k, v] : f) out[std::to_string(k)] = v;
    return out;
  };
  return {{"m", boxes(s.m)},         {"m_prime", boxes(s.m_prime)}, {"d", diagonals(s.d)},
          {"d_prime", diagonals(s.d_prime)}, {"g", diagonals(s.g)},     {"g_prime", diagonals(s.g_prime)}};
}

}  // namespace brauer
