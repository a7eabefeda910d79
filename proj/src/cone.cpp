#include "toric/cone.hpp"

#include "toric/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

MatrixXq rowsToMatrix(const std::vector<VectorXz>& rows, int cols) {
  MatrixXq m(static_cast<Eigen::Index>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = toRational(rows[i]).transpose();
  return m;
}

Rational dot(const VectorXz& a, const VectorXq& b) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

Integer dotZ(const VectorXz& a, const VectorXz& b) {
  Integer s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Enumerates all k-subsets of {0..n-1} in lexicographic order.
void forEachSubset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

Cone::Cone(int ambientRank, std::vector<VectorXz> generators) : ambient_(ambientRank) {
  if (ambientRank < 1) throw Error("bad-ambient-rank");
  std::vector<VectorXz> normalized;
  for (auto& g : generators) {
    if (g.size() != ambientRank) throw Error("dimension-mismatch");
    VectorXz p = primitive(g);
    if (contentOf(p) == 0) continue;  // drop zero generators
    // primitive() fixes the sign of mixed-sign vectors; restore direction.
    bool flipped = false;
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      if (g[i] != 0) {
        flipped = (g[i] < 0) != (p[i] < 0);
        break;
      }
    }
    if (flipped) p = -p;
    normalized.push_back(std::move(p));
  }
  std::sort(normalized.begin(), normalized.end(), lexLess);
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  gens_ = std::move(normalized);
}

Cone::Cone(int ambientRank, const std::vector<VectorXq>& generators)
    : Cone(ambientRank, [&] {
        std::vector<VectorXz> out;
        for (const auto& g : generators) {
          VectorXz p = primitive(g);
          bool flipped = false;
          for (Eigen::Index i = 0; i < g.size(); ++i) {
            if (g[i] != 0) {
              flipped = (g[i] < 0) != (p[i] < 0);
              break;
            }
          }
          out.push_back(flipped ? VectorXz(-p) : p);
        }
        return out;
      }()) {}

int Cone::dim() const {
  if (dim_ < 0) {
    if (gens_.empty())
      dim_ = 0;
    else
      dim_ = static_cast<int>(rankQ(rowsToMatrix(gens_, ambient_)));
  }
  return dim_;
}

const HRep& Cone::hrep() const {
  if (hrepDone_) return hrep_;

  // Equations: integer basis of the orthogonal complement of the span.
  if (gens_.empty()) {
    MatrixXz id = MatrixXz::Identity(ambient_, ambient_);
    for (Eigen::Index i = 0; i < id.cols(); ++i) hrep_.equations.push_back(id.col(i));
    hrepDone_ = true;
    return hrep_;
  }
  MatrixXz genRows(static_cast<Eigen::Index>(gens_.size()), ambient_);
  for (size_t i = 0; i < gens_.size(); ++i) genRows.row(static_cast<Eigen::Index>(i)) = gens_[i].transpose();
  MatrixXz eqBasis = kernelBasis(genRows);
  for (Eigen::Index j = 0; j < eqBasis.cols(); ++j) hrep_.equations.push_back(eqBasis.col(j));

  const int s = dim();
  // Every facet normal is orthogonal to s-1 independent generators and to
  // the complement of the span; enumerate (s-1)-subsets of generators.
  std::set<std::vector<Integer>> seen;
  const int n = static_cast<int>(gens_.size());
  forEachSubset(n, s - 1, [&](const std::vector<int>& subset) {
    std::vector<VectorXz> rows = hrep_.equations;
    for (int i : subset) rows.push_back(gens_[static_cast<size_t>(i)]);
    MatrixXq stacked = rowsToMatrix(rows, ambient_);
    MatrixXq null = nullspaceQ(stacked);
    if (null.cols() != 1) return;
    VectorXz cand = primitive(VectorXq(null.col(0)));
    // Orient so all generators pair >= 0; reject if mixed.
    int sign = 0;
    for (const auto& g : gens_) {
      Integer p = dotZ(cand, g);
      if (p > 0) {
        if (sign < 0) return;
        sign = 1;
      } else if (p < 0) {
        if (sign > 0) return;
        sign = -1;
      }
    }
    if (sign < 0) cand = -cand;
    // Facet test: active generators must span an (s-1)-dimensional set.
    std::vector<VectorXz> active;
    for (const auto& g : gens_)
      if (dotZ(cand, g) == 0) active.push_back(g);
    int activeRank = active.empty() ? 0 : static_cast<int>(rankQ(rowsToMatrix(active, ambient_)));
    if (activeRank != s - 1) return;
    std::vector<Integer> key(cand.data(), cand.data() + cand.size());
    seen.insert(std::move(key));
  });
  for (const auto& key : seen) {
    VectorXz f(ambient_);
    for (int i = 0; i < ambient_; ++i) f[i] = key[static_cast<size_t>(i)];
    hrep_.facets.push_back(std::move(f));
  }
  hrepDone_ = true;
  return hrep_;
}

bool Cone::isPointed() const {
  const HRep& h = hrep();
  std::vector<VectorXz> all = h.equations;
  all.insert(all.end(), h.facets.begin(), h.facets.end());
  if (all.empty()) return ambient_ == 0;
  return rankQ(rowsToMatrix(all, ambient_)) == ambient_;
}

bool Cone::contains(const VectorXq& x) const {
  if (x.size() != ambient_) throw Error("dimension-mismatch");
  const HRep& h = hrep();
  for (const auto& e : h.equations)
    if (dot(e, x) != 0) return false;
  for (const auto& f : h.facets)
    if (dot(f, x) < 0) return false;
  return true;
}

bool Cone::strictlyContains(const VectorXq& x) const {
  if (x.size() != ambient_) throw Error("dimension-mismatch");
  const HRep& h = hrep();
  for (const auto& e : h.equations)
    if (dot(e, x) != 0) return false;
  for (const auto& f : h.facets)
    if (dot(f, x) <= 0) return false;
  return true;
}

std::vector<VectorXz> Cone::extremalRays() const {
  const HRep& h = hrep();
  std::vector<VectorXz> out;
  for (const auto& g : gens_) {
    std::vector<VectorXz> active = h.equations;
    for (const auto& f : h.facets)
      if (dotZ(f, g) == 0) active.push_back(f);
    if (active.empty()) continue;
    if (rankQ(rowsToMatrix(active, ambient_)) == ambient_ - 1) out.push_back(g);
  }
  return out;
}

Cone dualCone(const Cone& c) {
  if (!c.isFullDimensional()) throw Error("not-full-dimensional");
  if (!c.isPointed()) throw Error("not-pointed");
  return Cone(c.ambientRank(), c.hrep().facets);
}

bool isRegular(const Cone& c) {
  const auto& gens = c.generators();
  if (gens.empty()) return true;  // the zero cone
  MatrixXz m(c.ambientRank(), static_cast<Eigen::Index>(gens.size()));
  for (size_t i = 0; i < gens.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = gens[i];
  if (rankQ(toRational(m)) != static_cast<Eigen::Index>(gens.size())) return false;
  SmithResult s = smithNormalForm(m);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(gens.size()); ++i)
    if (s.d(i, i) != 1) return false;
  return true;
}

namespace {

// Inner normal of the facet spanned by `facetGens` inside the simplicial
// full-dimensional cone with generator set `pieceGens`.
VectorXz innerFacetNormal(int ambient, const std::vector<VectorXz>& facetGens,
                          const VectorXz& opposite) {
  MatrixXq stacked(static_cast<Eigen::Index>(facetGens.size()), ambient);
  for (size_t i = 0; i < facetGens.size(); ++i)
    stacked.row(static_cast<Eigen::Index>(i)) = toRational(facetGens[i]).transpose();
  MatrixXq null = nullspaceQ(stacked);
  if (null.cols() != 1) throw Error("internal", "facet normal not unique");
  VectorXz n = primitive(VectorXq(null.col(0)));
  if (dotZ(n, opposite) < 0) n = -n;
  return n;
}

}  // namespace

std::vector<Cone> triangulate(const Cone& c) {
  if (!c.isFullDimensional()) throw Error("not-full-dimensional");
  if (!c.isPointed()) throw Error("not-pointed");
  const int n = c.ambientRank();
  std::vector<VectorXz> rays = c.extremalRays();

  // Greedy independent seed in canonical order.
  std::vector<VectorXz> seed;
  std::vector<VectorXz> rest;
  for (const auto& r : rays) {
    if (static_cast<int>(seed.size()) < n) {
      std::vector<VectorXz> trial = seed;
      trial.push_back(r);
      if (rankQ(rowsToMatrix(trial, n)) == static_cast<Eigen::Index>(trial.size())) {
        seed = std::move(trial);
        continue;
      }
    }
    rest.push_back(r);
  }
  if (static_cast<int>(seed.size()) != n) throw Error("internal", "seed not full rank");

  // Pieces as index sets into `rays` would be cleaner, but vectors are few.
  std::vector<std::vector<VectorXz>> pieces = {seed};

  for (const auto& v : rest) {
    // Boundary facets: (n-1)-subsets of a piece that belong to exactly one piece.
    std::map<std::vector<std::vector<Integer>>, std::vector<size_t>> facetOwners;
    for (size_t p = 0; p < pieces.size(); ++p) {
      for (size_t skip = 0; skip < pieces[p].size(); ++skip) {
        std::vector<std::vector<Integer>> key;
        for (size_t i = 0; i < pieces[p].size(); ++i) {
          if (i == skip) continue;
          const VectorXz& g = pieces[p][i];
          key.emplace_back(g.data(), g.data() + g.size());
        }
        std::sort(key.begin(), key.end());
        facetOwners[key].push_back(p);
      }
    }
    std::vector<std::vector<VectorXz>> newPieces;
    for (const auto& [key, owners] : facetOwners) {
      if (owners.size() != 1) continue;
      std::vector<VectorXz> facetGens;
      for (const auto& k : key) {
        VectorXz g(n);
        for (int i = 0; i < n; ++i) g[i] = k[static_cast<size_t>(i)];
        facetGens.push_back(std::move(g));
      }
      // The piece generator not on the facet.
      const auto& piece = pieces[owners[0]];
      VectorXz opposite;
      for (const auto& g : piece) {
        std::vector<Integer> gk(g.data(), g.data() + g.size());
        if (std::find(key.begin(), key.end(), gk) == key.end()) {
          opposite = g;
          break;
        }
      }
      VectorXz normal = innerFacetNormal(n, facetGens, opposite);
      if (dotZ(normal, v) < 0) {
        std::vector<VectorXz> fresh = facetGens;
        fresh.push_back(v);
        newPieces.push_back(std::move(fresh));
      }
    }
    for (auto& p : newPieces) pieces.push_back(std::move(p));
  }

  std::vector<Cone> out;
  for (auto& p : pieces) out.emplace_back(n, std::move(p));
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    const auto& ga = a.generators();
    const auto& gb = b.generators();
    for (size_t i = 0; i < ga.size() && i < gb.size(); ++i) {
      if (!(ga[i] == gb[i])) return lexLess(ga[i], gb[i]);
    }
    return ga.size() < gb.size();
  });
  return out;
}

Face minimalFace(const Cone& c, const VectorXq& x) {
  if (!c.contains(x)) throw Error("point-not-in-cone");
  const HRep& h = c.hrep();
  Face face;
  for (size_t i = 0; i < h.facets.size(); ++i)
    if (dot(h.facets[i], x) == 0) face.activeFacets.push_back(static_cast<int>(i));
  for (const auto& g : c.generators()) {
    bool onFace = true;
    for (int i : face.activeFacets)
      if (dotZ(h.facets[static_cast<size_t>(i)], g) != 0) {
        onFace = false;
        break;
      }
    if (onFace) face.generators.push_back(g);
  }
  face.dim = face.generators.empty()
                 ? 0
                 : static_cast<int>(rankQ(rowsToMatrix(face.generators, c.ambientRank())));
  face.codim = c.ambientRank() - face.dim;
  return face;
}

HConeRays raysFromHRep(int ambient, const std::vector<VectorXz>& equations,
                       const std::vector<VectorXz>& inequalities) {
  HConeRays result;
  std::vector<VectorXz> all = equations;
  all.insert(all.end(), inequalities.begin(), inequalities.end());
  if (all.empty()) {
    result.linealityDim = ambient;
    return result;
  }
  result.linealityDim = ambient - static_cast<int>(rankQ(rowsToMatrix(all, ambient)));
  if (result.linealityDim > 0) return result;  // rays of non-pointed H-cones unused here

  int eqRank = equations.empty() ? 0 : static_cast<int>(rankQ(rowsToMatrix(equations, ambient)));
  int subsetSize = ambient - eqRank - 1;
  const int m = static_cast<int>(inequalities.size());
  std::set<std::vector<Integer>> seen;
  forEachSubset(m, subsetSize, [&](const std::vector<int>& subset) {
    std::vector<VectorXz> rows = equations;
    for (int i : subset) rows.push_back(inequalities[static_cast<size_t>(i)]);
    if (rows.empty()) return;
    MatrixXq null = nullspaceQ(rowsToMatrix(rows, ambient));
    if (null.cols() != 1) return;
    VectorXz cand = primitive(VectorXq(null.col(0)));
    for (int dir = 0; dir < 2; ++dir) {
      VectorXz r = dir == 0 ? cand : VectorXz(-cand);
      bool ok = true;
      int activeRank = 0;
      std::vector<VectorXz> active = equations;
      for (const auto& ineq : inequalities) {
        Integer p = dotZ(ineq, r);
        if (p < 0) {
          ok = false;
          break;
        }
        if (p == 0) active.push_back(ineq);
      }
      if (!ok) continue;
      activeRank = active.empty() ? 0 : static_cast<int>(rankQ(rowsToMatrix(active, ambient)));
      if (activeRank != ambient - 1) continue;
      std::vector<Integer> key(r.data(), r.data() + r.size());
      seen.insert(std::move(key));
    }
  });
  for (const auto& key : seen) {
    VectorXz r(ambient);
    for (int i = 0; i < ambient; ++i) r[i] = key[static_cast<size_t>(i)];
    result.rays.push_back(std::move(r));
  }
  return result;
}

}  // namespace toric
