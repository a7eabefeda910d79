#pragma once

#include "toric/fan.hpp"
#include "toric/types.hpp"

#include <vector>

namespace toric {

/// Rational point of the split torus: d nonzero rational coordinates.
using TorusPoint = std::vector<Rational>;

/// Componentwise p-adic valuations (the image of x in N at p).
VectorXz valuationVector(const TorusPoint& x, const Integer& p);

/// Exact local factor at a finite place, kept as p^exponent.
struct PrimePower {
  Integer p;
  Rational exponent;
  bool isExact() const { return isIntegral(exponent); }
  Rational exactValue() const;  // throws unless the exponent is integral
  double toDouble() const;
};

PrimePower localHeightNonarch(const TorusPoint& x, const PLFunction& phi, const Integer& p);

/// All finite-place factors with nonzero exponent (support primes of x).
std::vector<PrimePower> finiteHeightFactors(const TorusPoint& x, const PLFunction& phi);

/// Archimedean factor e^{phi(log|x_1|,...,log|x_d|)}.  The containing cone
/// is located exactly by monomial comparisons, so the value is the monomial
/// prod |x_i|^{m_i} with m the linear form of that cone.
double localHeightArch(const TorusPoint& x, const PLFunction& phi);

/// The archimedean exponent vector m (exact) of the located cone.
VectorXq archExponents(const TorusPoint& x, const PLFunction& phi);

double globalHeight(const TorusPoint& x, const PLFunction& phi);

/// Exact global height; requires all finite exponents and the archimedean
/// exponent vector to be integral (true for integral PL values).
Rational globalHeightExact(const TorusPoint& x, const PLFunction& phi);

/// Exact sign of H(x) - B via common-denominator powering; works for any
/// rational PL values and rational bound.
int compareHeight(const TorusPoint& x, const PLFunction& phi, const Rational& bound);

std::vector<std::pair<Integer, int>> factorInteger(Integer n);

}  // namespace toric
