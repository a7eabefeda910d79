#pragma once

#include "toric/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace toric {

/// Exponent vector of a monomial.
using Exponent = std::vector<int>;

/// Graded lexicographic order: by total degree, then lexicographic.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate polynomial with rational coefficients over a fixed number
/// of variables.  Zero coefficients are never stored; terms are kept in
/// graded lexicographic order.
class Poly {
 public:
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const Rational& constant);

  static Poly variable(int nvars, int index);
  static Poly linear(int nvars, const VectorXq& coeffs);
  static Poly linear(int nvars, const VectorXz& coeffs);

  int nvars() const { return nvars_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<Exponent, Rational, GradedLexLess>& terms() const { return terms_; }

  void addTerm(const Exponent& e, const Rational& c);
  Rational coefficient(const Exponent& e) const;

  int totalDegree() const;   // -1 for the zero polynomial
  int order() const;         // minimal total degree of a term; throws on zero
  bool isHomogeneous() const;
  bool isLinearForm() const;  // homogeneous of degree 1

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Substitutes variable i by images[i]; all images share a variable count.
  Poly compose(const std::vector<Poly>& images) const;

  Poly derivative(int var) const;
  Rational evaluate(const VectorXq& point) const;

  /// Coefficients of z^j where z is variable `var`, as polynomials in all vars
  /// (the returned polys do not mention `var`).
  std::vector<Poly> coefficientsIn(int var) const;

  /// gcd of all coefficients' numerators over lcm of denominators, signed so
  /// that content * primitivePart == *this and the primitive part's first
  /// term (graded-lex least) has positive coefficient.
  Rational content() const;
  Poly primitivePart() const;

  std::string toString(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Exponent, Rational, GradedLexLess> terms_;
};

/// Sum of the minimal-order terms.  Throws Error("zero-polynomial").
Poly leadingForm(const Poly& p);

/// Exact division by a linear form; nullopt when not divisible.
std::optional<Poly> divideByLinear(const Poly& p, const Poly& linear);

/// Variable names s1..sI, t1..tJ.
std::vector<std::string> stVariableNames(int ns, int nt);

}  // namespace toric
