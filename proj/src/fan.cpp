#include "toric/fan.hpp"

#include "toric/lattice.hpp"
#include "toric/linprog.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace toric {

namespace {

std::string indexSetToString(const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace

std::vector<FanViolation> Fan::check(const FanData& data) {
  std::vector<FanViolation> v;
  const int d = data.rank;
  const int n = static_cast<int>(data.rays.size());
  if (d < 1) {
    v.push_back({"parse-error(rank)", "rank must be positive"});
    return v;
  }
  for (int i = 0; i < n; ++i) {
    if (data.rays[static_cast<size_t>(i)].size() != d) {
      v.push_back({"parse-error(rays)", "ray " + std::to_string(i) + " has wrong dimension"});
      return v;
    }
    if (contentOf(data.rays[static_cast<size_t>(i)]) == 0) {
      v.push_back({"parse-error(rays)", "ray " + std::to_string(i) + " is zero"});
      return v;
    }
  }
  std::vector<VectorXz> rays;
  for (const auto& r : data.rays) {
    VectorXz p = primitive(r);
    bool flip = false;
    for (Eigen::Index i = 0; i < r.size(); ++i) {
      if (r[i] != 0) {
        flip = (r[i] < 0) != (p[i] < 0);
        break;
      }
    }
    rays.push_back(flip ? VectorXz(-p) : p);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rays[static_cast<size_t>(i)] == rays[static_cast<size_t>(j)])
        v.push_back({"parse-error(rays)", "duplicate ray " + std::to_string(j)});

  std::vector<std::vector<int>> maxCones;
  for (size_t ci = 0; ci < data.maxCones.size(); ++ci) {
    std::vector<int> cone = data.maxCones[ci];
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    for (int idx : cone)
      if (idx < 0 || idx >= n) {
        v.push_back({"parse-error(max_cones)",
                     "cone " + std::to_string(ci) + " references ray " + std::to_string(idx)});
        return v;
      }
    maxCones.push_back(std::move(cone));
  }
  if (maxCones.empty()) {
    v.push_back({"not-complete", "fan has no maximal cones"});
    return v;
  }

  // Maximality of the listed cones.
  for (size_t i = 0; i < maxCones.size(); ++i)
    for (size_t j = 0; j < maxCones.size(); ++j)
      if (i != j && std::includes(maxCones[j].begin(), maxCones[j].end(), maxCones[i].begin(),
                                  maxCones[i].end()))
        v.push_back({"faces-not-closed",
                     "cone " + indexSetToString(maxCones[i]) + " is a face of " +
                         indexSetToString(maxCones[j])});

  // Axiom (v): regularity of every maximal cone (faces inherit it).
  for (size_t ci = 0; ci < maxCones.size(); ++ci) {
    std::vector<VectorXz> gens;
    for (int idx : maxCones[ci]) gens.push_back(rays[static_cast<size_t>(idx)]);
    Cone c(d, gens);
    if (!isRegular(c))
      v.push_back({"not-regular(" + std::to_string(ci) + ")",
                   "maximal cone " + indexSetToString(maxCones[ci]) +
                       " is not generated by part of a lattice basis"});
  }
  if (!v.empty()) return v;

  // Axiom (iii): pairwise intersections are common faces.
  auto coneOf = [&](const std::vector<int>& idx) {
    std::vector<VectorXz> gens;
    for (int i : idx) gens.push_back(rays[static_cast<size_t>(i)]);
    return Cone(d, gens);
  };
  for (size_t i = 0; i < maxCones.size(); ++i) {
    for (size_t j = i + 1; j < maxCones.size(); ++j) {
      Cone a = coneOf(maxCones[i]);
      Cone b = coneOf(maxCones[j]);
      std::vector<int> common;
      std::set_intersection(maxCones[i].begin(), maxCones[i].end(), maxCones[j].begin(),
                            maxCones[j].end(), std::back_inserter(common));
      std::vector<VectorXz> eqs = a.hrep().equations;
      eqs.insert(eqs.end(), b.hrep().equations.begin(), b.hrep().equations.end());
      std::vector<VectorXz> ineqs = a.hrep().facets;
      ineqs.insert(ineqs.end(), b.hrep().facets.begin(), b.hrep().facets.end());
      HConeRays inter = raysFromHRep(d, eqs, ineqs);
      bool ok = inter.linealityDim == 0;
      Cone commonCone = common.empty() ? Cone(d, std::vector<VectorXz>{}) : coneOf(common);
      if (ok) {
        for (const auto& r : inter.rays)
          if (!commonCone.contains(r)) {
            ok = false;
            break;
          }
      }
      if (!ok)
        v.push_back({"bad-intersection(" + std::to_string(i) + "," + std::to_string(j) + ")",
                     "cones " + indexSetToString(maxCones[i]) + " and " +
                         indexSetToString(maxCones[j]) + " do not meet in a common face"});
    }
  }
  if (!v.empty()) return v;

  // Completeness: all maximal cones are d-dimensional, every facet is shared
  // by exactly two of them, and the wall graph is connected.
  for (size_t ci = 0; ci < maxCones.size(); ++ci)
    if (static_cast<int>(maxCones[ci].size()) != d) {
      v.push_back({"not-complete",
                   "maximal cone " + indexSetToString(maxCones[ci]) + " has dimension " +
                       std::to_string(maxCones[ci].size())});
    }
  if (!v.empty()) return v;

  std::map<std::vector<int>, std::vector<int>> facetToCones;
  for (size_t ci = 0; ci < maxCones.size(); ++ci) {
    for (size_t skip = 0; skip < maxCones[ci].size(); ++skip) {
      std::vector<int> facet;
      for (size_t t = 0; t < maxCones[ci].size(); ++t)
        if (t != skip) facet.push_back(maxCones[ci][t]);
      facetToCones[facet].push_back(static_cast<int>(ci));
    }
  }
  std::vector<std::vector<int>> adjacency(maxCones.size());
  for (const auto& [facet, owners] : facetToCones) {
    if (owners.size() != 2) {
      v.push_back({"not-complete", "facet " + indexSetToString(facet) + " lies in " +
                                       std::to_string(owners.size()) + " maximal cones"});
      continue;
    }
    adjacency[static_cast<size_t>(owners[0])].push_back(owners[1]);
    adjacency[static_cast<size_t>(owners[1])].push_back(owners[0]);
  }
  if (v.empty()) {
    std::vector<bool> visited(maxCones.size(), false);
    std::queue<int> q;
    q.push(0);
    visited[0] = true;
    while (!q.empty()) {
      int c = q.front();
      q.pop();
      for (int nb : adjacency[static_cast<size_t>(c)])
        if (!visited[static_cast<size_t>(nb)]) {
          visited[static_cast<size_t>(nb)] = true;
          q.push(nb);
        }
    }
    if (std::find(visited.begin(), visited.end(), false) != visited.end())
      v.push_back({"not-complete", "maximal cones do not form a connected complex"});
  }
  return v;
}

Fan Fan::validate(const FanData& data) {
  auto violations = check(data);
  if (!violations.empty())
    throw Error(violations.front().code, violations.front().message);

  Fan fan;
  fan.rank_ = data.rank;
  for (const auto& r : data.rays) {
    VectorXz p = primitive(r);
    bool flip = false;
    for (Eigen::Index i = 0; i < r.size(); ++i) {
      if (r[i] != 0) {
        flip = (r[i] < 0) != (p[i] < 0);
        break;
      }
    }
    fan.rays_.push_back(flip ? VectorXz(-p) : p);
  }
  for (const auto& mc : data.maxCones) {
    std::vector<int> cone = mc;
    std::sort(cone.begin(), cone.end());
    fan.maxCones_.push_back(std::move(cone));
  }

  // Face closure (cones are simplicial: faces = subsets).
  std::set<std::vector<int>> faces;
  for (const auto& mc : fan.maxCones_) {
    const size_t k = mc.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      std::vector<int> face;
      for (size_t t = 0; t < k; ++t)
        if (mask & (size_t{1} << t)) face.push_back(mc[t]);
      faces.insert(face);
    }
  }
  fan.allCones_.assign(faces.begin(), faces.end());

  // Walls.
  std::map<std::vector<int>, std::vector<int>> facetToCones;
  for (size_t ci = 0; ci < fan.maxCones_.size(); ++ci)
    for (size_t skip = 0; skip < fan.maxCones_[ci].size(); ++skip) {
      std::vector<int> facet;
      for (size_t t = 0; t < fan.maxCones_[ci].size(); ++t)
        if (t != skip) facet.push_back(fan.maxCones_[ci][t]);
      facetToCones[facet].push_back(static_cast<int>(ci));
    }
  for (const auto& [facet, owners] : facetToCones)
    fan.walls_.push_back({owners[0], owners[1], facet});

  // Ray-matrix inverses for PL evaluation.
  for (const auto& mc : fan.maxCones_) {
    MatrixXq rayRows(static_cast<Eigen::Index>(mc.size()), fan.rank_);
    for (size_t i = 0; i < mc.size(); ++i)
      rayRows.row(static_cast<Eigen::Index>(i)) =
          toRational(fan.rays_[static_cast<size_t>(mc[i])]).transpose();
    fan.inverses_.push_back(inverseQ(rayRows));
  }
  return fan;
}

Cone Fan::cone(const std::vector<int>& rayIndices) const {
  std::vector<VectorXz> gens;
  for (int i : rayIndices) gens.push_back(rays_[static_cast<size_t>(i)]);
  return Cone(rank_, gens);
}

VectorXq Fan::coneCoordinates(int idx, const VectorXq& x) const {
  // x = sum c_i e_i  <=>  c = (R^T)^{-1} x with R the ray-row matrix.
  return inverses_[static_cast<size_t>(idx)].transpose() * x;
}

int Fan::locateMaxCone(const VectorXq& x) const {
  for (size_t ci = 0; ci < maxCones_.size(); ++ci) {
    VectorXq c = coneCoordinates(static_cast<int>(ci), x);
    bool inside = true;
    for (Eigen::Index i = 0; i < c.size(); ++i)
      if (c[i] < 0) {
        inside = false;
        break;
      }
    if (inside) return static_cast<int>(ci);
  }
  return -1;
}

FanData Fan::data() const {
  FanData d;
  d.rank = rank_;
  d.rays = rays_;
  d.maxCones = maxCones_;
  return d;
}

PLFunction::PLFunction(const Fan& fan, std::vector<Rational> values) : fan_(&fan) {
  if (static_cast<int>(values.size()) != fan.rayCount())
    throw Error("dimension-mismatch", "one value per ray required");
  values_ = std::move(values);
  for (size_t ci = 0; ci < fan.maxCones().size(); ++ci) {
    const auto& mc = fan.maxCones()[ci];
    VectorXq u(static_cast<Eigen::Index>(mc.size()));
    for (size_t i = 0; i < mc.size(); ++i) u[static_cast<Eigen::Index>(i)] = values_[static_cast<size_t>(mc[i])];
    // Solve <e_i, m> = u_i; rows are the rays, so m = R^{-1} u.
    forms_.push_back(fan.rayMatrixInverse(static_cast<int>(ci)) * u);
  }
}

Rational evaluatePL(const PLFunction& phi, const VectorXq& x) {
  int idx = phi.fan().locateMaxCone(x);
  if (idx < 0) throw Error("point-not-in-fan", "fan is not complete at the point");
  const VectorXq& m = phi.linearForm(idx);
  Rational s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += x[i] * m[i];
  return s;
}

Rational evaluatePL(const PLFunction& phi, const VectorXz& x) {
  return evaluatePL(phi, toRational(x));
}

double evaluatePLReal(const PLFunction& phi, const Eigen::VectorXd& x) {
  const Fan& fan = phi.fan();
  // Locate with a small tolerance; values agree across overlapping cones.
  int best = -1;
  double bestMin = -1e300;
  for (size_t ci = 0; ci < fan.maxCones().size(); ++ci) {
    const MatrixXq& invQ = fan.rayMatrixInverse(static_cast<int>(ci));
    Eigen::MatrixXd inv(invQ.rows(), invQ.cols());
    for (Eigen::Index i = 0; i < invQ.rows(); ++i)
      for (Eigen::Index j = 0; j < invQ.cols(); ++j) inv(i, j) = toDouble(invQ(i, j));
    Eigen::VectorXd c = inv.transpose() * x;
    double mn = c.minCoeff();
    if (mn > bestMin) {
      bestMin = mn;
      best = static_cast<int>(ci);
    }
    if (mn >= 0) break;
  }
  const VectorXq& m = phi.linearForm(best);
  double s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += x[i] * toDouble(m[i]);
  return s;
}

PLFunction anticanonicalFunction(const Fan& fan) {
  return PLFunction(fan, std::vector<Rational>(static_cast<size_t>(fan.rayCount()), Rational(1)));
}

bool isProjective(const Fan& fan) {
  const int n = fan.rayCount();
  // Variables u_0..u_{n-1}, slack z at index n.  For every wall between
  // sigma and sigma', the linear form of sigma must undercut u on the
  // opposite ray of sigma' by at least z.
  LinearSystem sys(n + 1);
  for (const auto& wall : fan.walls()) {
    for (int dir = 0; dir < 2; ++dir) {
      int from = dir == 0 ? wall.coneA : wall.coneB;
      int to = dir == 0 ? wall.coneB : wall.coneA;
      const auto& toCone = fan.maxCones()[static_cast<size_t>(to)];
      int opposite = -1;
      for (int r : toCone)
        if (std::find(wall.facetRays.begin(), wall.facetRays.end(), r) == wall.facetRays.end()) {
          opposite = r;
          break;
        }
      // <e_opp, m_from(u)> = w·u_{sigma_from} with w = e_opp^T R^{-1}.
      const auto& fromCone = fan.maxCones()[static_cast<size_t>(from)];
      VectorXq eOpp = toRational(fan.rays()[static_cast<size_t>(opposite)]);
      VectorXq w = fan.rayMatrixInverse(from).transpose() * eOpp;
      VectorXq row = VectorXq::Zero(n + 1);
      row[opposite] += 1;
      for (size_t i = 0; i < fromCone.size(); ++i)
        row[fromCone[i]] -= w[static_cast<Eigen::Index>(i)];
      row[n] = -1;  // u_opp - <e_opp, m_from> - z >= 0
      sys.addInequality(row, Rational(0));
    }
  }
  // Box to keep the supremum finite; convexity is scale-invariant.
  for (int i = 0; i < n; ++i) {
    VectorXq lo = VectorXq::Zero(n + 1), hi = VectorXq::Zero(n + 1);
    lo[i] = 1;
    sys.addInequality(lo, Rational(-1));  // u_i >= -1
    hi[i] = -1;
    sys.addInequality(hi, Rational(-1));  // u_i <= 1
  }
  VectorXq zrow = VectorXq::Zero(n + 1);
  zrow[n] = -1;
  sys.addInequality(zrow, Rational(-1));  // z <= 1
  Bound b = supremumOf(sys, n);
  return b.feasible && b.bounded && b.value > 0;
}

}  // namespace toric
