#include "toric/ratfunc.hpp"

#include "toric/lattice.hpp"

#include <algorithm>

namespace toric {

namespace {

bool polyLess(const Poly& a, const Poly& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  GradedLexLess less;
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return less(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return a.terms().size() < b.terms().size();
}

// Divides out the signed content, sign fixed by the first nonzero
// coefficient in variable order (not term order).
Rational normalizeLinear(Poly& l) {
  Rational c = l.content();
  l = l.primitivePart();
  for (int i = 0; i < l.nvars(); ++i) {
    Exponent e(static_cast<size_t>(l.nvars()), 0);
    e[static_cast<size_t>(i)] = 1;
    Rational coeff = l.coefficient(e);
    if (coeff != 0) {
      if (coeff < 0) {
        l = -l;
        c = -c;
      }
      break;
    }
  }
  return c;
}

Poly embed(const Poly& p, int newVars) {
  Poly out(newVars);
  for (const auto& [e, c] : p.terms()) {
    Exponent ext = e;
    ext.resize(static_cast<size_t>(newVars), 0);
    out.addTerm(ext, c);
  }
  return out;
}

Poly dropLastVariable(const Poly& p) {
  Poly out(p.nvars() - 1);
  for (const auto& [e, c] : p.terms()) {
    if (e.back() != 0) throw Error("internal", "variable not eliminated");
    Exponent shrunk(e.begin(), e.end() - 1);
    out.addTerm(shrunk, c);
  }
  return out;
}

}  // namespace

RatFunc::RatFunc(int nvars, int ns) : nvars_(nvars), ns_(ns), num_(nvars), scale_(1) {}

RatFunc RatFunc::fromParts(int ns, const Poly& num, std::vector<std::pair<Poly, int>> den,
                           const Rational& scale) {
  RatFunc f(num.nvars(), ns);
  if (num.isZero() || scale == 0) return f;

  Rational sc = scale;
  // Normalize the factors.
  std::vector<std::pair<Poly, int>> factors;
  for (auto& [l, k] : den) {
    if (k == 0) continue;
    if (k < 0) throw Error("negative-multiplicity");
    if (!l.isLinearForm()) throw Error("denominator-not-linear");
    for (const auto& [e, c] : l.terms())
      for (int i = ns; i < l.nvars(); ++i)
        if (e[static_cast<size_t>(i)] != 0) throw Error("denominator-not-s-linear");
    Poly norm = l;
    Rational c = normalizeLinear(norm);
    sc /= ratPow(c, k);
    bool merged = false;
    for (auto& [f2, k2] : factors)
      if (f2 == norm) {
        k2 += k;
        merged = true;
        break;
      }
    if (!merged) factors.emplace_back(std::move(norm), k);
  }

  // Cancel common linear factors with the numerator.
  Poly n = num;
  for (auto& [l, k] : factors) {
    while (k > 0) {
      auto quotient = divideByLinear(n, l);
      if (!quotient) break;
      n = *quotient;
      --k;
    }
  }
  factors.erase(std::remove_if(factors.begin(), factors.end(),
                               [](const auto& fk) { return fk.second == 0; }),
                factors.end());
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return polyLess(a.first, b.first);
  });

  Rational content = n.content();
  f.num_ = n.primitivePart();
  f.den_ = std::move(factors);
  f.scale_ = sc * content;
  if (f.scale_ == 0) return RatFunc(num.nvars(), ns);
  return f;
}

Poly RatFunc::denominatorPoly() const {
  Poly d(nvars_, Rational(1));
  for (const auto& [l, k] : den_)
    for (int i = 0; i < k; ++i) d = d * l;
  return d;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (nvars_ != o.nvars_ || ns_ != o.ns_) throw Error("dimension-mismatch");
  if (isZero()) return o;
  if (o.isZero()) return *this;
  // Least common denominator.
  std::vector<std::pair<Poly, int>> lcm = den_;
  for (const auto& [l, k] : o.den_) {
    bool found = false;
    for (auto& [l2, k2] : lcm)
      if (l2 == l) {
        k2 = std::max(k2, k);
        found = true;
        break;
      }
    if (!found) lcm.emplace_back(l, k);
  }
  auto complement = [&](const RatFunc& f) {
    Poly c(nvars_, f.scale_);
    for (const auto& [l, k] : lcm) {
      int have = 0;
      for (const auto& [l2, k2] : f.den_)
        if (l2 == l) {
          have = k2;
          break;
        }
      for (int i = 0; i < k - have; ++i) c = c * l;
    }
    return c;
  };
  Poly numSum = num_ * complement(*this) + o.num_ * complement(o);
  return fromParts(ns_, numSum, lcm);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc f = *this;
  f.scale_ = -f.scale_;
  return f;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (nvars_ != o.nvars_ || ns_ != o.ns_) throw Error("dimension-mismatch");
  if (isZero() || o.isZero()) return RatFunc(nvars_, ns_);
  std::vector<std::pair<Poly, int>> den = den_;
  for (const auto& [l, k] : o.den_) {
    bool found = false;
    for (auto& [l2, k2] : den)
      if (l2 == l) {
        k2 += k;
        found = true;
        break;
      }
    if (!found) den.emplace_back(l, k);
  }
  return fromParts(ns_, num_ * o.num_, den, scale_ * o.scale_);
}

RatFunc RatFunc::operator*(const Rational& c) const {
  if (c == 0) return RatFunc(nvars_, ns_);
  RatFunc f = *this;
  f.scale_ *= c;
  return f;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return nvars_ == o.nvars_ && ns_ == o.ns_ && scale_ == o.scale_ && num_ == o.num_ &&
         den_ == o.den_;
}

Rational RatFunc::evaluate(const VectorXq& point) const {
  if (isZero()) return Rational(0);
  Rational d = 1;
  for (const auto& [l, k] : den_) {
    Rational v = l.evaluate(point);
    if (v == 0) throw Error("pole-at-point");
    d *= ratPow(v, k);
  }
  return scale_ * num_.evaluate(point) / d;
}

std::string RatFunc::toString() const {
  if (isZero()) return "0";
  auto names = stVariableNames(ns_, nvars_ - ns_);
  Poly scaled = num_ * scale_;
  std::string out = scaled.toString(names);
  if (den_.empty()) return out;
  if (scaled.terms().size() > 1) out = "(" + out + ")";
  out += " / (";
  bool first = true;
  for (const auto& [l, k] : den_) {
    if (!first) out += "*";
    out += "(" + l.toString(names) + ")";
    if (k > 1) out += "^" + std::to_string(k);
    first = false;
  }
  return out + ")";
}

int multiplicityAtOrigin(const RatFunc& f) {
  if (f.isZero()) throw Error("zero-function");
  int k = 0;
  for (const auto& [l, m] : f.den()) k += m;
  return f.num().order() - k;
}

std::pair<RatFunc, RatFunc> principalPart(const RatFunc& f) {
  if (f.isZero()) throw Error("zero-function");
  Poly lead = leadingForm(f.num());
  Poly rest = f.num() - lead;
  RatFunc r0 = RatFunc::fromParts(f.sVars(), lead, f.den(), f.scale());
  RatFunc r1 = rest.isZero() ? RatFunc(f.nvars(), f.sVars())
                             : RatFunc::fromParts(f.sVars(), rest, f.den(), f.scale());
  return {r0, r1};
}

Rational principalCoefficient(const RatFunc& f, const RatFunc& x) {
  if (x.isZero()) throw Error("zero-reference");
  RatFunc r0 = principalPart(f).first;
  Poly lhs = r0.num() * x.denominatorPoly();
  Poly rhs = x.num() * r0.denominatorPoly();
  if (rhs.isZero()) throw Error("zero-reference");
  const auto& [e, c] = *rhs.terms().begin();
  Rational ratio = lhs.coefficient(e) / c;
  if (ratio == 0) throw Error("not-proportional");
  if (!(lhs == rhs * ratio)) throw Error("not-proportional");
  return r0.scale() * ratio / x.scale();
}

RatFunc residueDescent(const RatFunc& f, const DescentDirection& dir) {
  const int n = f.nvars();
  const int ns = f.sVars();
  if (dir.gamma.size() != n) throw Error("dimension-mismatch");
  if (f.isZero()) return f;

  // gamma^I must be nonzero.
  bool gammaIZero = true;
  for (int i = 0; i < ns; ++i)
    if (dir.gamma[i] != 0) gammaIZero = false;
  if (gammaIZero) throw Error("degenerate-direction", "gamma vanishes on the s-variables");

  // gamma must be independent of the previous directions.
  if (!dir.previous.empty()) {
    MatrixXq prev(static_cast<Eigen::Index>(dir.previous.size()) + 1, n);
    for (size_t i = 0; i < dir.previous.size(); ++i)
      prev.row(static_cast<Eigen::Index>(i)) = toRational(dir.previous[i]).transpose();
    prev.row(static_cast<Eigen::Index>(dir.previous.size())) = toRational(dir.gamma).transpose();
    if (rankQ(prev) != static_cast<Eigen::Index>(dir.previous.size()) + 1)
      throw Error("degenerate-direction", "gamma lies in the span of previous directions");
  }

  // Pairing of each denominator form with gamma^I.
  const auto& den = f.den();
  std::vector<Rational> pairing(den.size());
  for (size_t j = 0; j < den.size(); ++j) {
    VectorXq g = toRational(dir.gamma);
    pairing[j] = den[j].first.evaluate(g);
  }
  for (size_t j = 0; j < den.size(); ++j)
    for (size_t m = j + 1; m < den.size(); ++m) {
      if (pairing[j] == 0 || pairing[m] == 0) continue;
      Poly diff = den[j].first * pairing[m] - den[m].first * pairing[j];
      if (diff.isZero()) throw Error("coincident-poles");
    }

  std::vector<size_t> poles;
  for (size_t j = 0; j < den.size(); ++j)
    if (pairing[j] < 0) poles.push_back(j);
  if (poles.empty())
    throw Error("degenerate-direction", "no poles on the descent side");

  // The contour shift at infinity vanishes only when f decays at least
  // quadratically along the line s + z*gamma; check the exact z-degree.
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    Poly img = Poly::variable(n + 1, i);
    if (dir.gamma[i] != 0) {
      Poly z = Poly::variable(n + 1, n) * Rational(dir.gamma[i]);
      img = img + z;
    }
    images.push_back(img);
  }
  Poly numZ = f.num().compose(images);
  int zDegNum = static_cast<int>(numZ.coefficientsIn(n).size()) - 1;
  int zDegDen = 0;
  for (size_t j = 0; j < den.size(); ++j)
    if (pairing[j] != 0) zDegDen += den[j].second;
  if (zDegNum - zDegDen > -2)
    throw Error("degenerate-direction", "insufficient decay along the direction");

  RatFunc sum(n, ns);
  for (size_t j : poles) {
    const Poly& lj = den[j].first;
    const int kj = den[j].second;
    const Rational lambdaJ = pairing[j];

    // R(z) = N(z) / prod_{m != j} D_m(z)^{k_m}, with the factor for j
    // cancelled exactly against (z - z_j)^{k_j}.
    Poly N = numZ;
    std::vector<std::pair<Poly, int>> dens;  // in n+1 variables
    for (size_t m = 0; m < den.size(); ++m) {
      if (m == j) continue;
      Poly D = embed(den[m].first, n + 1);
      if (pairing[m] != 0) D = D + Poly::variable(n + 1, n) * pairing[m];
      dens.emplace_back(D, den[m].second);
    }
    Rational coef = f.scale() / ratPow(lambdaJ, kj);

    // (k_j - 1)-fold differentiation in z of the factored form.
    for (int step = 0; step < kj - 1; ++step) {
      Poly dN = N.derivative(n);
      Poly prodAll(n + 1, Rational(1));
      for (const auto& [D, k] : dens) prodAll = prodAll * D;
      Poly correction(n + 1);
      for (size_t m = 0; m < dens.size(); ++m) {
        Poly Dm = dens[m].first.derivative(n);  // constant l_m(gamma)
        if (Dm.isZero()) continue;
        Poly others(n + 1, Rational(1));
        for (size_t l = 0; l < dens.size(); ++l)
          if (l != m) others = others * dens[l].first;
        correction = correction + Dm * Rational(dens[m].second) * others;
      }
      N = dN * prodAll - N * correction;
      for (auto& [D, k] : dens) ++k;
    }
    coef /= Rational(factorial(kj - 1));

    // Evaluate at z_j = -l_j(s)/lambda_j.
    std::vector<Poly> zCoeffs = N.coefficientsIn(n);
    const int P = static_cast<int>(zCoeffs.size()) - 1;
    Poly value(n);
    Poly minusLj = -lj;
    Poly power(n, Rational(1));
    // value = sum_p coeff_p * (-l_j)^p * lambda_j^{P-p}
    for (int p = 0; p <= P; ++p) {
      Poly c = dropLastVariable(zCoeffs[static_cast<size_t>(p)]);
      value = value + c * power * ratPow(lambdaJ, P - p);
      power = power * minusLj;
    }
    coef /= ratPow(lambdaJ, P);

    std::vector<std::pair<Poly, int>> hFactors;
    for (const auto& [D, k] : dens) {
      std::vector<Poly> dc = D.coefficientsIn(n);
      Poly base = dropLastVariable(dc[0]);
      Rational lambdaM = dc.size() > 1 ? dropLastVariable(dc[1]).coefficient(
                                             Exponent(static_cast<size_t>(n), 0))
                                       : Rational(0);
      // D(z_j) = (lambda_j * l_m - lambda_m * l_j) / lambda_j
      Poly h = base * lambdaJ - lj * lambdaM;
      if (h.isZero()) throw Error("coincident-poles");
      hFactors.emplace_back(h, k);
      coef *= ratPow(lambdaJ, k);
    }
    sum = sum + RatFunc::fromParts(ns, value, hFactors, coef);
  }
  // Orientation: the descended function equals minus the sum of the
  // residues in the right half-plane (verified against the projection
  // formula on the 2-dimensional model case).
  return -sum;
}

}  // namespace toric
