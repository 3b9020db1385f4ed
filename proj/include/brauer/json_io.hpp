#pragma once

#include "brauer/algebra.hpp"
#include "brauer/idempotents.hpp"
#include "brauer/tableau.hpp"

#include "json.hpp"

#include <sstream>
#include <string>

namespace brauer {

using nlohmann::json;

// ---- scalars --------------------------------------------------------------

inline json to_json(const BigRational& v) { return v.to_string(); }
inline json to_json(const PrimeField& v) { return v.to_string(); }

template <class K>
json to_json(const Polynomial<K>& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

template <class K>
json to_json(const RationalFunction<K>& f) {
  return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

template <class K>
struct ScalarCodec;

template <>
struct ScalarCodec<BigRational> {
  static BigRational decode(const json& j, std::uint64_t) { return BigRational::parse(j.get<std::string>()); }
};

template <>
struct ScalarCodec<PrimeField> {
  static PrimeField decode(const json& j, std::uint64_t prime) {
    return PrimeField(std::stoll(j.get<std::string>()), prime);
  }
};

template <class K>
struct ScalarCodec<RationalFunction<K>> {
  static Polynomial<K> poly(const json& j, std::uint64_t prime) {
    std::vector<K> cs;
    for (const auto& c : j) cs.push_back(ScalarCodec<K>::decode(c, prime));
    return Polynomial<K>(std::move(cs));
  }
  static RationalFunction<K> decode(const json& j, std::uint64_t prime) {
    return RationalFunction<K>(poly(j.at("num"), prime), poly(j.at("den"), prime));
  }
};

// ---- human-readable text ----------------------------------------------------

std::string to_text(const BigRational& v);
inline std::string to_text(const PrimeField& v) { return v.to_string(); }

/// Variable printed for the outermost level of K: w over Q, u above that.
template <class K>
const char* variable_name() {
  return std::is_same_v<K, QOmega> ? "w" : "u";
}

namespace detail {

// Sums are printed with spaces around the operator.
inline bool needs_parens(const std::string& s) { return s.find(' ') != std::string::npos; }

}  // namespace detail

template <class K>
std::string to_text(const Polynomial<K>& p, const char* var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coefficients();
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (cs[i].is_zero()) continue;
    std::string c = to_text(cs[i]);
    bool negative = c[0] == '-' && !detail::needs_parens(c);
    if (negative) c.erase(0, 1);
    if (detail::needs_parens(c)) c = "(" + c + ")";
    std::string mono;
    if (i == 0) mono = c;
    else {
      mono = c == "1" ? "" : c + "*";
      mono += var;
      if (i > 1) mono += "^" + std::to_string(i);
    }
    if (out.empty()) out = (negative ? "-" : "") + mono;
    else out += (negative ? " - " : " + ") + mono;
  }
  return out;
}

template <class K>
std::string to_text(const RationalFunction<K>& f) {
  const char* var = variable_name<RationalFunction<K>>();
  std::string num = to_text(f.numerator(), var);
  if (f.denominator().is_one()) return num;
  std::string den = to_text(f.denominator(), var);
  if (detail::needs_parens(num)) num = "(" + num + ")";
  if (detail::needs_parens(den) || den.find('*') != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

// ---- field mode, diagrams, tableaux ---------------------------------------

json to_json(const FieldMode& mode);
FieldMode field_mode_from_json(const json& j);

json to_json(const BrauerDiagram& d);
BrauerDiagram diagram_from_json(const json& j);

json to_json(const Partition& p);
json to_json(const UpdownTableau& t);
UpdownTableau tableau_from_json(const json& j);

json to_json(const TableauStatistics& s);

// ---- algebra elements -----------------------------------------------------

template <class K>
json to_json(const AlgebraElement<K>& a, const FieldMode& mode) {
  json terms = json::array();
  for (const auto& [d, c] : a.terms()) terms.push_back({{"diagram", to_json(d)}, {"coeff", to_json(c)}});
  return {{"n", a.n()}, {"mode", to_json(mode)}, {"terms", terms}};
}

template <class K>
AlgebraElement<K> element_from_json(const json& j, const K& omega) {
  const FieldMode mode = field_mode_from_json(j.at("mode"));
  AlgebraElement<K> a(j.at("n").get<int>(), omega);
  for (const auto& t : j.at("terms"))
    a.add_term(diagram_from_json(t.at("diagram")), ScalarCodec<K>::decode(t.at("coeff"), mode.prime));
  return a;
}

template <class K>
std::string to_text(const AlgebraElement<K>& a) {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : a.terms()) {
    std::string cs = to_text(c);
    bool negative = cs[0] == '-' && !detail::needs_parens(cs);
    if (negative) cs.erase(0, 1);
    if (detail::needs_parens(cs)) cs = "(" + cs + ")";
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    out << (cs == "1" ? "" : cs + "*") << d.to_string();
    first = false;
  }
  return out.str();
}

template <class K>
json to_json(const IdempotentResult<K>& r, const FieldMode& mode, bool with_timing) {
  json j = {{"tableau", to_json(r.tableau)},
            {"element", to_json(r.element, mode)},
            {"constant", to_json(r.constant)},
            {"method", method_name(r.method)}};
  if (r.method == Method::fusion) {
    j["exponents"] = r.exponents;
    j["detected_orders"] = r.detected_orders;
  }
  if (with_timing) j["timing"] = r.seconds;
  return j;
}

template <class K>
IdempotentResult<K> idempotent_from_json(const json& j, const K& omega) {
  const FieldMode mode = field_mode_from_json(j.at("element").at("mode"));
  IdempotentResult<K> r{tableau_from_json(j.at("tableau")), element_from_json<K>(j.at("element"), omega),
                        ScalarCodec<K>::decode(j.at("constant"), mode.prime),
                        j.at("method").get<std::string>() == "fusion" ? Method::fusion : Method::recurrence,
                        0.0, {}, {}};
  if (j.contains("exponents")) r.exponents = j["exponents"].get<std::vector<int>>();
  if (j.contains("detected_orders")) r.detected_orders = j["detected_orders"].get<std::vector<int>>();
  if (j.contains("timing")) r.seconds = j["timing"].get<double>();
  return r;
}

}  // namespace brauer
