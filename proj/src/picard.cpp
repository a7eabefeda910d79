#include "toric/picard.hpp"

#include "toric/lattice.hpp"

#include <algorithm>

namespace toric {

PicardLattice::PicardLattice(const Fan& fan)
    : fan_(&fan), effective_(1, std::vector<VectorXz>{}) {
  const int n = fan.rayCount();
  const int d = fan.rank();
  rank_ = n - d;
  if (rank_ < 1) throw Error("internal", "complete fan needs more rays than its rank");

  // Pairing matrix of M -> Z^n, rows are the rays.
  MatrixXz pairing(n, d);
  for (int i = 0; i < n; ++i) pairing.row(i) = fan.rays()[static_cast<size_t>(i)].transpose();

  SmithResult s = smithNormalForm(pairing);
  for (int i = 0; i < d; ++i)
    if (s.d(i, i) != 1)
      throw Error("internal", "ray pairing is not saturated on a regular complete fan");

  projection_ = s.u.bottomRows(rank_);
  MatrixXq uInv = inverseQ(toRational(s.u));
  section_ = MatrixXz(n, rank_);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank_; ++j) {
      const Rational& v = uInv(i, j + d);
      if (!isIntegral(v)) throw Error("internal", "non-integral section");
      section_(i, j) = numerator(v);
    }

  std::vector<VectorXz> classes;
  for (int i = 0; i < n; ++i) {
    rayClasses_.push_back(projection_.col(i));
    classes.push_back(projection_.col(i));
  }
  effective_ = Cone(rank_, classes);
  anticanonical_ = VectorXz::Zero(rank_);
  for (const auto& c : rayClasses_) anticanonical_ += c;
}

namespace {

// All vertices of { lambda >= 0 : A lambda = target }, by brute-force
// basis enumeration at desk scale.
std::vector<VectorXq> vertexSolutions(const MatrixXq& a, const VectorXq& target) {
  const int cols = static_cast<int>(a.cols());
  const Eigen::Index r = rankQ(a);
  std::vector<VectorXq> vertices;
  std::vector<int> subset;
  std::function<void(int)> recurse = [&](int start) {
    if (static_cast<Eigen::Index>(subset.size()) == r) {
      MatrixXq sub(a.rows(), r);
      for (size_t i = 0; i < subset.size(); ++i)
        sub.col(static_cast<Eigen::Index>(i)) = a.col(subset[i]);
      if (rankQ(sub) != r) return;
      auto sol = solveQ(sub, target);
      if (!sol) return;
      VectorXq full = VectorXq::Zero(cols);
      bool nonneg = true;
      for (size_t i = 0; i < subset.size(); ++i) {
        if ((*sol)[static_cast<Eigen::Index>(i)] < 0) {
          nonneg = false;
          break;
        }
        full[subset[i]] = (*sol)[static_cast<Eigen::Index>(i)];
      }
      if (!nonneg) return;
      if (std::find(vertices.begin(), vertices.end(), full) == vertices.end())
        vertices.push_back(full);
      return;
    }
    for (int i = start; i < cols; ++i) {
      subset.push_back(i);
      recurse(i + 1);
      subset.pop_back();
    }
  };
  recurse(0);
  return vertices;
}

bool lexLessQ(const VectorXq& a, const VectorXq& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

LineBundleData lineBundleData(const Fan& fan, const PicardLattice& pic, const VectorXq& L) {
  if (L.size() != pic.rank()) throw Error("dimension-mismatch");
  if (!isProjective(fan)) throw Error("non-projective-fan");

  const Cone& eff = pic.effectiveCone();
  if (!eff.strictlyContains(L)) throw Error("L-not-interior");

  LineBundleData out;
  out.L = L;

  VectorXq K = -toRational(pic.anticanonicalClass());
  std::vector<VectorXq> gens;
  for (const auto& c : pic.rayClasses()) gens.push_back(toRational(c));
  out.a = minimalScaling(L, K, gens);

  VectorXq x = out.a * L + K;
  Face face = minimalFace(eff, x);
  out.b = face.codim;

  const int n = fan.rayCount();
  const auto& facets = eff.hrep().facets;
  for (int i = 0; i < n; ++i) {
    bool onFace = true;
    for (int fi : face.activeFacets) {
      Rational p = 0;
      const VectorXz& normal = facets[static_cast<size_t>(fi)];
      const VectorXz& cls = pic.rayClass(i);
      for (Eigen::Index t = 0; t < normal.size(); ++t) p += Rational(normal[t] * cls[t]);
      if (p != 0) {
        onFace = false;
        break;
      }
    }
    if (onFace)
      out.J.push_back(i);
    else
      out.I.push_back(i);
  }

  bool xZero = true;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] != 0) xZero = false;
  if (xZero) {
    // a[L] + [K] = 0: the minimal face is the origin and J is empty.
    out.J.clear();
    out.I.clear();
    for (int i = 0; i < n; ++i) out.I.push_back(i);
  } else if (!out.J.empty()) {
    MatrixXq a(pic.rank(), static_cast<Eigen::Index>(out.J.size()));
    for (size_t i = 0; i < out.J.size(); ++i)
      a.col(static_cast<Eigen::Index>(i)) = toRational(pic.rayClass(out.J[i]));
    std::vector<VectorXq> vertices = vertexSolutions(a, x);
    if (vertices.empty()) throw Error("internal", "no nonnegative representation on the face");
    VectorXq best = vertices[0];
    for (const auto& v : vertices)
      if (lexLessQ(v, best)) best = v;

    // Equal split over rays sharing a divisor class keeps the sum fixed.
    auto symmetrize = [&](const VectorXq& v) {
      VectorXq out2 = v;
      std::vector<bool> done(out.J.size(), false);
      for (size_t i = 0; i < out.J.size(); ++i) {
        if (done[i]) continue;
        std::vector<size_t> group = {i};
        for (size_t j = i + 1; j < out.J.size(); ++j)
          if (pic.rayClass(out.J[j]) == pic.rayClass(out.J[i])) group.push_back(j);
        Rational sum = 0;
        for (size_t g : group) sum += v[static_cast<Eigen::Index>(g)];
        Rational avg = sum / Rational(static_cast<int>(group.size()));
        for (size_t g : group) {
          out2[static_cast<Eigen::Index>(g)] = avg;
          done[g] = true;
        }
      }
      return out2;
    };
    VectorXq lambda = symmetrize(best);
    bool positive = true;
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
      if (lambda[i] <= 0) positive = false;
    if (!positive) {
      // The lex-least vertex can sit on a boundary of the solution polytope;
      // the vertex barycenter lies in its relative interior.
      VectorXq bary = VectorXq::Zero(static_cast<Eigen::Index>(out.J.size()));
      for (const auto& v : vertices) bary += v;
      bary /= Rational(static_cast<int>(vertices.size()));
      lambda = symmetrize(bary);
    }
    for (size_t i = 0; i < out.J.size(); ++i)
      out.lambda[out.J[i]] = lambda[static_cast<Eigen::Index>(i)];
  }

  // phi_L: a * phi(e_i) = 1 on I, 1 + lambda_j on J.
  out.phiValues.assign(static_cast<size_t>(n), Rational(0));
  for (int i : out.I) out.phiValues[static_cast<size_t>(i)] = Rational(1) / out.a;
  for (int j : out.J)
    out.phiValues[static_cast<size_t>(j)] = (Rational(1) + out.lambda[j]) / out.a;
  return out;
}

}  // namespace toric
