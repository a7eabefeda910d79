#include "toric/heights.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace toric {

namespace {

int valuation(Integer n, const Integer& p) {
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

VectorXz valuationVector(const TorusPoint& x, const Integer& p) {
  VectorXz out(static_cast<Eigen::Index>(x.size()));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) throw Error("zero-coordinate");
    out[static_cast<Eigen::Index>(i)] =
        valuation(numerator(x[i]), p) - valuation(denominator(x[i]), p);
  }
  return out;
}

Rational PrimePower::exactValue() const {
  if (!isExact()) throw Error("non-integral-exponent");
  long e = exponent.convert_to<long>();
  if (e >= 0) return Rational(intPow(p, static_cast<unsigned long>(e)));
  return Rational(1) / Rational(intPow(p, static_cast<unsigned long>(-e)));
}

double PrimePower::toDouble() const {
  return std::exp(toric::toDouble(exponent) * std::log(p.convert_to<double>()));
}

PrimePower localHeightNonarch(const TorusPoint& x, const PLFunction& phi, const Integer& p) {
  VectorXz n = valuationVector(x, p);
  return {p, evaluatePL(phi, n)};
}

std::vector<std::pair<Integer, int>> factorInteger(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> out;
  if (n <= 1) return out;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<PrimePower> finiteHeightFactors(const TorusPoint& x, const PLFunction& phi) {
  std::set<Integer> primes;
  for (const auto& c : x) {
    if (c == 0) throw Error("zero-coordinate");
    for (const auto& [p, e] : factorInteger(numerator(c))) primes.insert(p);
    for (const auto& [p, e] : factorInteger(denominator(c))) primes.insert(p);
  }
  std::vector<PrimePower> out;
  for (const auto& p : primes) {
    PrimePower pp = localHeightNonarch(x, phi, p);
    if (pp.exponent != 0) out.push_back(pp);
  }
  return out;
}

namespace {

// Sign of sum_i w_i * log|x_i|, decided exactly as a monomial comparison
// prod |x_i|^{w_i} vs 1.
int logPairingSign(const TorusPoint& x, const VectorXz& w) {
  Integer lhs = 1, rhs = 1;
  for (size_t i = 0; i < x.size(); ++i) {
    Integer num = abs(numerator(x[i]));
    Integer den = denominator(x[i]);
    long e = w[static_cast<Eigen::Index>(i)].convert_to<long>();
    if (e > 0) {
      lhs *= intPow(num, static_cast<unsigned long>(e));
      rhs *= intPow(den, static_cast<unsigned long>(e));
    } else if (e < 0) {
      lhs *= intPow(den, static_cast<unsigned long>(-e));
      rhs *= intPow(num, static_cast<unsigned long>(-e));
    }
  }
  if (lhs > rhs) return 1;
  if (lhs < rhs) return -1;
  return 0;
}

// Max cone of the fan containing (log|x_1|, ..., log|x_d|), located exactly.
int locateArchCone(const TorusPoint& x, const Fan& fan) {
  for (size_t ci = 0; ci < fan.maxCones().size(); ++ci) {
    Cone c = fan.cone(fan.maxCones()[ci]);
    bool inside = true;
    for (const auto& f : c.hrep().facets) {
      if (logPairingSign(x, f) < 0) {
        inside = false;
        break;
      }
    }
    if (inside) return static_cast<int>(ci);
  }
  throw Error("internal", "no cone contains the archimedean image");
}

}  // namespace

VectorXq archExponents(const TorusPoint& x, const PLFunction& phi) {
  int idx = locateArchCone(x, phi.fan());
  return phi.linearForm(idx);
}

double localHeightArch(const TorusPoint& x, const PLFunction& phi) {
  VectorXq m = archExponents(x, phi);
  double logv = 0;
  for (size_t i = 0; i < x.size(); ++i)
    logv += toDouble(m[static_cast<Eigen::Index>(i)]) *
            std::log(std::abs(toDouble(x[i])));
  return std::exp(logv);
}

double globalHeight(const TorusPoint& x, const PLFunction& phi) {
  double v = localHeightArch(x, phi);
  for (const auto& pp : finiteHeightFactors(x, phi)) v *= pp.toDouble();
  return v;
}

Rational globalHeightExact(const TorusPoint& x, const PLFunction& phi) {
  Rational v = 1;
  for (const auto& pp : finiteHeightFactors(x, phi)) v *= pp.exactValue();
  VectorXq m = archExponents(x, phi);
  for (size_t i = 0; i < x.size(); ++i) {
    const Rational& e = m[static_cast<Eigen::Index>(i)];
    if (!isIntegral(e)) throw Error("non-integral-exponent");
    v *= ratPow(abs(x[i]), e.convert_to<long>());
  }
  return v;
}

int compareHeight(const TorusPoint& x, const PLFunction& phi, const Rational& bound) {
  if (bound <= 0) return 1;  // heights are positive
  // Common denominator D of all exponents; compare H^D with bound^D.
  std::vector<PrimePower> finite = finiteHeightFactors(x, phi);
  VectorXq m = archExponents(x, phi);
  Integer d = 1;
  for (const auto& pp : finite) d = boost::multiprecision::lcm(d, denominator(pp.exponent));
  for (Eigen::Index i = 0; i < m.size(); ++i)
    d = boost::multiprecision::lcm(d, denominator(m[i]));
  long dl = d.convert_to<long>();

  Rational hPow = 1;
  for (const auto& pp : finite)
    hPow *= ratPow(Rational(pp.p), (pp.exponent * Rational(d)).convert_to<long>());
  for (size_t i = 0; i < x.size(); ++i)
    hPow *= ratPow(abs(x[i]), (m[static_cast<Eigen::Index>(i)] * Rational(d)).convert_to<long>());
  Rational bPow = ratPow(bound, dl);
  if (hPow > bPow) return 1;
  if (hPow < bPow) return -1;
  return 0;
}

}  // namespace toric
