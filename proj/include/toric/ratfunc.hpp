#pragma once

#include "toric/polynomial.hpp"
#include "toric/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace toric {

/// Exact rational function  scale * num / prod_j l_j^{k_j}  over the
/// variables s1..s_ns, t1..t_{nvars-ns}.  Denominator factors are pairwise
/// distinct primitive integer linear forms in the s-variables only, each
/// with its first (variable-order) nonzero coefficient positive; the
/// numerator is an integer-primitive polynomial coprime to every factor.
class RatFunc {
 public:
  RatFunc(int nvars, int ns);  // the zero function

  /// Builds and normalizes: factors are primitivized, merged, cancelled
  /// against the numerator, and deterministically ordered.
  static RatFunc fromParts(int ns, const Poly& num,
                           std::vector<std::pair<Poly, int>> den,
                           const Rational& scale = Rational(1));

  int nvars() const { return nvars_; }
  int sVars() const { return ns_; }
  int tVars() const { return nvars_ - ns_; }
  bool isZero() const { return num_.isZero(); }

  const Poly& num() const { return num_; }
  const std::vector<std::pair<Poly, int>>& den() const { return den_; }
  const Rational& scale() const { return scale_; }

  Poly denominatorPoly() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator*(const Rational& c) const;
  bool operator==(const RatFunc& o) const;

  Rational evaluate(const VectorXq& point) const;

  /// Canonical rendering, e.g. "2 / ((s2)*(2*s1 - s2))".
  std::string toString() const;

 private:
  int nvars_;
  int ns_;
  Poly num_;
  std::vector<std::pair<Poly, int>> den_;
  Rational scale_;
};

/// mu(f) = order(num) - sum k_j.  Throws Error("zero-function").
int multiplicityAtOrigin(const RatFunc& f);

/// f = r0 + r1 with r0 the minimal-order part of the numerator over the
/// same denominator and mu(r1) > mu(r0) = mu(f).
std::pair<RatFunc, RatFunc> principalPart(const RatFunc& f);

/// The exact constant C with principalPart(f).first == C * x.
/// Throws Error("not-proportional") when no such constant exists.
Rational principalCoefficient(const RatFunc& f, const RatFunc& x);

/// Descent direction gamma together with the previously used directions.
struct DescentDirection {
  VectorXz gamma;
  std::vector<VectorXz> previous;
};

/// One step of residue descent: the function
///   (1/2*pi*i) Int_{Re z = 0} f(s + z*gamma^I, t + z*gamma^J) dz
/// evaluated as the (signed) sum of residues at the poles z_j with
/// l_j(gamma^I) < 0.  Exact on this class of rational functions.
/// Throws Error("degenerate-direction") / Error("coincident-poles").
RatFunc residueDescent(const RatFunc& f, const DescentDirection& dir);

}  // namespace toric
