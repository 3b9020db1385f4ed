#include "brauer/big_rational.hpp"

#include "brauer/errors.hpp"

#include <utility>

namespace brauer {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InversionOfZero("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational::BigRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw ParseError("empty integer in rational '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad integer '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(mpq_class(parse_int(text)));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return BigRational(parse_int(text.substr(0, slash)), den);
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw InversionOfZero("inverse of rational zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return BigRational(std::move(r));
}

std::string BigRational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& o) {
  value_ += o.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  value_ -= o.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  value_ *= o.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw InversionOfZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace brauer
