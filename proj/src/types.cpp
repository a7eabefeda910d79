#include "toric/types.hpp"

#include <boost/multiprecision/integer.hpp>

namespace toric {

Integer contentOf(const VectorXz& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v[i]);
  return g;
}

VectorXz primitive(const VectorXz& v) {
  Integer g = contentOf(v);
  if (g == 0) return v;
  VectorXz out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] /= g;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] != 0) {
      if (out[i] < 0) out = -out;
      break;
    }
  }
  return out;
}

VectorXz primitive(const VectorXq& v) {
  Integer den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    den = boost::multiprecision::lcm(den, denominator(v[i]));
  VectorXz scaled(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    scaled[i] = numerator(v[i]) * (den / denominator(v[i]));
  return primitive(scaled);
}

bool lexLess(const VectorXz& a, const VectorXz& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

std::string toString(const Integer& z) { return z.str(); }

std::string toString(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parseRational(const std::string& s) {
  try {
    if (s.empty()) throw std::invalid_argument("empty");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Integer num(s.substr(0, slash));
      Integer den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rational(num, den);
    }
    auto epos = s.find_first_of("eE");
    std::string mantissa = (epos == std::string::npos) ? s : s.substr(0, epos);
    long exp10 = (epos == std::string::npos) ? 0 : std::stol(s.substr(epos + 1));
    auto dot = mantissa.find('.');
    if (dot != std::string::npos) {
      exp10 -= static_cast<long>(mantissa.size() - dot - 1);
      mantissa.erase(dot, 1);
    }
    if (mantissa.empty() || mantissa == "-" || mantissa == "+")
      throw std::invalid_argument("no digits");
    Rational r{Integer(mantissa)};
    if (exp10 > 0)
      r *= Rational(intPow(10, static_cast<unsigned long>(exp10)));
    else if (exp10 < 0)
      r /= Rational(intPow(10, static_cast<unsigned long>(-exp10)));
    return r;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("parse-error(rational)", "cannot parse rational: '" + s + "'");
  }
}

Integer intPow(const Integer& base, unsigned long exp) {
  Integer r = 1, b = base;
  while (exp) {
    if (exp & 1) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

Rational ratPow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base == 0) throw Error("zero-to-negative-power");
    return Rational(1) / ratPow(base, -exp);
  }
  Rational r = 1, b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace toric
