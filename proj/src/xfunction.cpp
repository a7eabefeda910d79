#include "toric/xfunction.hpp"

#include "toric/lattice.hpp"

#include <cmath>
#include <random>

namespace toric {

XFunction xFunction(const Cone& c) {
  const int k = c.ambientRank();
  Cone dual = dualCone(c);
  std::vector<Cone> pieces = triangulate(dual);

  RatFunc sum(k, k);
  for (const Cone& piece : pieces) {
    const auto& gens = piece.generators();
    MatrixXz y(k, k);
    for (int i = 0; i < k; ++i) y.col(i) = gens[static_cast<size_t>(i)];
    Integer det = detZ(y);
    std::vector<std::pair<Poly, int>> den;
    for (int i = 0; i < k; ++i) den.emplace_back(Poly::linear(k, gens[static_cast<size_t>(i)]), 1);
    sum = sum + RatFunc::fromParts(k, Poly(k, Rational(1)), den, Rational(abs(det)));
  }
  return {c, sum};
}

QuotientMap quotientBy(int ambient, const std::vector<VectorXz>& kernel) {
  if (kernel.empty()) throw Error("empty-kernel");
  const int g = static_cast<int>(kernel.size());
  MatrixXz K(ambient, g);
  for (int i = 0; i < g; ++i) K.col(i) = kernel[static_cast<size_t>(i)];
  if (rankQ(toRational(K)) != g) throw Error("dependent-kernel");

  SmithResult s = smithNormalForm(K);
  QuotientMap q;
  q.index = 1;
  for (int i = 0; i < g; ++i) q.index *= s.d(i, i);
  // u*K*v = d, so the saturation of the column span is u^{-1}(Z^g x 0);
  // the last (n-g) rows of u give the quotient projection.
  q.projection = s.u.bottomRows(ambient - g);
  MatrixXq uInv = inverseQ(toRational(s.u));
  q.section = MatrixXz(ambient, ambient - g);
  for (Eigen::Index i = 0; i < ambient; ++i)
    for (Eigen::Index j = 0; j < ambient - g; ++j) {
      const Rational& v = uInv(i, j + g);
      if (!isIntegral(v)) throw Error("internal", "non-integral section");
      q.section(i, j) = numerator(v);
    }
  return q;
}

XFunction xFunctionProjected(const Cone& c, const std::vector<VectorXz>& kernel) {
  const int n = c.ambientRank();
  QuotientMap q = quotientBy(n, kernel);
  const int m = n - static_cast<int>(kernel.size());

  // The kernel span must meet the cone only at the origin.
  {
    const HRep& h = c.hrep();
    MatrixXz K(n, static_cast<Eigen::Index>(kernel.size()));
    for (size_t i = 0; i < kernel.size(); ++i) K.col(static_cast<Eigen::Index>(i)) = kernel[i];
    auto pullback = [&](const VectorXz& row) {
      VectorXz out(K.cols());
      for (Eigen::Index j = 0; j < K.cols(); ++j) {
        Integer s = 0;
        for (Eigen::Index i = 0; i < n; ++i) s += row[i] * K(i, j);
        out[j] = s;
      }
      return out;
    };
    std::vector<VectorXz> eqs, ineqs;
    for (const auto& e : h.equations) eqs.push_back(pullback(e));
    for (const auto& f : h.facets) ineqs.push_back(pullback(f));
    HConeRays rays = raysFromHRep(static_cast<int>(kernel.size()), eqs, ineqs);
    if (rays.linealityDim > 0 || !rays.rays.empty()) throw Error("kernel-meets-cone");
  }

  std::vector<VectorXz> imageGens;
  for (const auto& gvec : c.generators()) imageGens.push_back(q.projection * gvec);
  Cone image(m, imageGens);
  if (!image.isPointed()) throw Error("image-not-pointed");

  RatFunc f = xFunction(c).value;
  std::vector<VectorXz> previous;
  for (const auto& gamma : kernel) {
    f = residueDescent(f, {gamma, previous});
    previous.push_back(gamma);
  }

  // Express in image coordinates through the integer section.
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    VectorXq row(m);
    for (int j = 0; j < m; ++j) row[j] = Rational(q.section(i, j));
    images.push_back(Poly::linear(m, row));
  }
  Poly newNum = f.num().compose(images);
  std::vector<std::pair<Poly, int>> newDen;
  for (const auto& [l, k] : f.den()) {
    Poly sub = l.compose(images);
    if (sub.isZero()) throw Error("internal", "denominator vanishes on the section");
    newDen.emplace_back(sub, k);
  }
  RatFunc projected =
      RatFunc::fromParts(m, newNum, newDen, f.scale() * Rational(q.index));
  return {image, projected};
}

NumericEstimate numericX(const Cone& c, const Eigen::VectorXd& s, std::uint64_t seed,
                         int samples) {
  const int k = c.ambientRank();
  if (s.size() != k) throw Error("dimension-mismatch");
  // Interior test: s must pair positively with every dual ray, i.e. with
  // every extremal ray of the dual cone.
  Cone dual = dualCone(c);
  std::vector<Cone> pieces = triangulate(dual);
  for (const auto& piece : pieces)
    for (const auto& y : piece.generators()) {
      double p = 0;
      for (int i = 0; i < k; ++i) p += s[i] * y[i].convert_to<double>();
      if (p <= 0) throw Error("not-interior");
    }

  std::mt19937_64 rng(seed);
  NumericEstimate total;
  double variance = 0;
  for (const auto& piece : pieces) {
    const auto& gens = piece.generators();
    MatrixXz y(k, k);
    std::vector<double> a(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      y.col(i) = gens[static_cast<size_t>(i)];
      double p = 0;
      for (int r = 0; r < k; ++r) p += s[r] * gens[static_cast<size_t>(i)][r].convert_to<double>();
      a[static_cast<size_t>(i)] = p;
    }
    double det = std::abs(detZ(y).convert_to<double>());
    double beta = *std::min_element(a.begin(), a.end()) / 2.0;
    std::exponential_distribution<double> exp(beta);
    // Importance sampling of  det * Int exp(-a.t) dt  with Exp(beta)^k.
    double mean = 0, m2 = 0;
    for (int it = 1; it <= samples; ++it) {
      double logw = -k * std::log(beta);
      for (int i = 0; i < k; ++i) {
        double t = exp(rng);
        logw -= (a[static_cast<size_t>(i)] - beta) * t;
      }
      double w = det * std::exp(logw);
      double delta = w - mean;
      mean += delta / it;
      m2 += delta * (w - mean);
    }
    total.value += mean;
    variance += (m2 / (samples - 1)) / samples;
  }
  total.stddev = std::sqrt(variance);
  return total;
}

}  // namespace toric
