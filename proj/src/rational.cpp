#include "plurival/rational.hpp"

#include <ostream>
#include <sstream>

namespace plurival {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw_validation("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  v_ = boost::multiprecision::cpp_rational(BigInt(num), BigInt(den));
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw_validation("rational with zero denominator");
  if (den < 0)
    v_ = boost::multiprecision::cpp_rational(BigInt(-num), BigInt(-den));
  else
    v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(const std::string& text) {
  auto bad = [&]() { throw_validation("malformed rational: '" + text + "'"); };
  if (text.empty()) bad();
  std::string::size_type slash = text.find('/');
  auto parse_int = [&](const std::string& s) -> BigInt {
    if (s.empty()) bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) bad();
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') bad();
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) bad();
  return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw_validation("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  std::ostringstream os;
  os << numerator();
  if (!is_integer()) os << '/' << denominator();
  return os.str();
}

BigInt Rational::floor() const {
  BigInt q = numerator() / denominator();
  if (sign() < 0 && q * denominator() != numerator()) --q;
  return q;
}

BigInt Rational::ceil() const {
  BigInt q = numerator() / denominator();
  if (sign() > 0 && q * denominator() != numerator()) ++q;
  return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

Rational dot(const RationalVec& a, const RationalVec& b) {
  if (a.size() != b.size()) throw_validation("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string vec_str(const RationalVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  s += ")";
  return s;
}

}  // namespace plurival
