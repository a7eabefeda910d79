#include "toric/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace toric {

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Poly::Poly(int nvars, const Rational& constant) : nvars_(nvars) {
  if (constant != 0) terms_[Exponent(static_cast<size_t>(nvars), 0)] = constant;
}

Poly Poly::variable(int nvars, int index) {
  Poly p(nvars);
  Exponent e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(index)] = 1;
  p.terms_[e] = 1;
  return p;
}

Poly Poly::linear(int nvars, const VectorXq& coeffs) {
  if (coeffs.size() != nvars) throw Error("dimension-mismatch");
  Poly p(nvars);
  for (int i = 0; i < nvars; ++i) {
    if (coeffs[i] != 0) {
      Exponent e(static_cast<size_t>(nvars), 0);
      e[static_cast<size_t>(i)] = 1;
      p.terms_[e] = coeffs[i];
    }
  }
  return p;
}

Poly Poly::linear(int nvars, const VectorXz& coeffs) { return linear(nvars, toRational(coeffs)); }

void Poly::addTerm(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw Error("dimension-mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::totalDegree() const {
  if (terms_.empty()) return -1;
  auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::order() const {
  if (terms_.empty()) throw Error("zero-polynomial");
  auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool Poly::isHomogeneous() const {
  if (terms_.empty()) return true;
  return totalDegree() == order();
}

bool Poly::isLinearForm() const {
  return !terms_.empty() && isHomogeneous() && totalDegree() == 1;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw Error("dimension-mismatch");
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.addTerm(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw Error("dimension-mismatch");
  Poly out(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(static_cast<size_t>(nvars_));
      for (int i = 0; i < nvars_; ++i)
        e[static_cast<size_t>(i)] = e1[static_cast<size_t>(i)] + e2[static_cast<size_t>(i)];
      out.addTerm(e, c1 * c2);
    }
  }
  return out;
}

Poly Poly::operator*(const Rational& c) const {
  Poly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_[e] = coeff * c;
  return out;
}

Poly Poly::compose(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw Error("dimension-mismatch");
  int outVars = images.empty() ? 0 : images[0].nvars();
  Poly out(outVars);
  for (const auto& [e, c] : terms_) {
    Poly term(outVars, c);
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) term = term * images[static_cast<size_t>(i)];
    }
    out = out + term;
  }
  return out;
}

Poly Poly::derivative(int var) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<size_t>(var)];
    if (k == 0) continue;
    Exponent d = e;
    --d[static_cast<size_t>(var)];
    out.addTerm(d, c * k);
  }
  return out;
}

Rational Poly::evaluate(const VectorXq& point) const {
  if (point.size() != nvars_) throw Error("dimension-mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[static_cast<size_t>(i)]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::vector<Poly> Poly::coefficientsIn(int var) const {
  int maxDeg = 0;
  for (const auto& [e, c] : terms_) maxDeg = std::max(maxDeg, e[static_cast<size_t>(var)]);
  std::vector<Poly> out(static_cast<size_t>(maxDeg + 1), Poly(nvars_));
  for (const auto& [e, c] : terms_) {
    Exponent stripped = e;
    int k = stripped[static_cast<size_t>(var)];
    stripped[static_cast<size_t>(var)] = 0;
    out[static_cast<size_t>(k)].addTerm(stripped, c);
  }
  return out;
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(0);
  Integer num = 0, den = 1;
  for (const auto& [e, c] : terms_) {
    num = boost::multiprecision::gcd(num, numerator(c));
    den = boost::multiprecision::lcm(den, denominator(c));
  }
  Rational content(num, den);
  if (terms_.begin()->second < 0) content = -content;
  return content;
}

Poly Poly::primitivePart() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  Poly out(nvars_);
  for (const auto& [e, coeff] : terms_) out.terms_[e] = coeff / c;
  return out;
}

std::string Poly::toString(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = first ? c : abs(c);
    if (!first) out += (c < 0) ? " - " : " + ";
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      int k = e[static_cast<size_t>(i)];
      if (k == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[static_cast<size_t>(i)];
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty()) {
      out += toric::toString(a);
    } else {
      if (a != 1) out += toric::toString(a) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

Poly leadingForm(const Poly& p) {
  if (p.isZero()) throw Error("zero-polynomial");
  int ord = p.order();
  Poly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (std::accumulate(e.begin(), e.end(), 0) == ord) out.addTerm(e, c);
  }
  return out;
}

std::optional<Poly> divideByLinear(const Poly& p, const Poly& linear) {
  if (!linear.isLinearForm()) throw Error("not-a-linear-form");
  if (p.isZero()) return p;
  // Pivot: first variable with a nonzero coefficient in the divisor.
  int pivot = -1;
  Rational pivotCoeff;
  for (const auto& [e, c] : linear.terms()) {
    for (int i = 0; i < linear.nvars(); ++i) {
      if (e[static_cast<size_t>(i)] == 1) {
        if (pivot < 0 || i < pivot) {
          pivot = i;
          pivotCoeff = c;
        }
      }
    }
  }
  // Long division in Q[other vars][x_pivot]: the divisor's leading
  // coefficient in x_pivot is the unit pivotCoeff.
  Poly rest = linear;
  rest.addTerm([&] {
    Exponent e(static_cast<size_t>(linear.nvars()), 0);
    e[static_cast<size_t>(pivot)] = 1;
    return e;
  }(), -pivotCoeff);  // rest = linear - pivotCoeff*x_pivot

  std::vector<Poly> coeffs = p.coefficientsIn(pivot);  // p = sum coeffs[j] * x^j
  int degree = static_cast<int>(coeffs.size()) - 1;
  if (degree < 1 && !coeffs[0].isZero()) return std::nullopt;
  // Synthetic division from the top degree down.
  std::vector<Poly> quotient(static_cast<size_t>(std::max(degree, 0)), Poly(p.nvars()));
  Poly xPivot = Poly::variable(p.nvars(), pivot);
  Poly carry(p.nvars());
  for (int j = degree; j >= 1; --j) {
    Poly cur = coeffs[static_cast<size_t>(j)] + carry;
    Poly q = cur * (Rational(1) / pivotCoeff);
    quotient[static_cast<size_t>(j - 1)] = q;
    carry = -(q * rest);
    // carry is the contribution to the coefficient of x^{j-1}.
  }
  Poly remainder = coeffs[0] + carry;
  if (!remainder.isZero()) return std::nullopt;
  Poly result(p.nvars());
  Poly power(p.nvars(), Rational(1));
  for (size_t j = 0; j < quotient.size(); ++j) {
    result = result + quotient[j] * power;
    power = power * xPivot;
  }
  return result;
}

std::vector<std::string> stVariableNames(int ns, int nt) {
  std::vector<std::string> names;
  for (int i = 0; i < ns; ++i) names.push_back("s" + std::to_string(i + 1));
  for (int j = 0; j < nt; ++j) names.push_back("t" + std::to_string(j + 1));
  return names;
}

}  // namespace toric
