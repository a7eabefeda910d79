#pragma once

#include "toric/types.hpp"

#include <vector>

namespace toric {

/// Facet description of a rational cone: the cone is
/// { x : e·x = 0 for e in equations, f·x >= 0 for f in facets }.
/// All normals are primitive integer vectors in deterministic order.
struct HRep {
  std::vector<VectorXz> equations;
  std::vector<VectorXz> facets;
};

/// Finitely generated rational polyhedral cone.  Generators are stored
/// primitive, deduplicated and lexicographically sorted, so equal cones
/// given by scaled/permuted generator lists compare equal.
class Cone {
 public:
  Cone(int ambientRank, std::vector<VectorXz> generators);
  Cone(int ambientRank, const std::vector<VectorXq>& generators);

  int ambientRank() const { return ambient_; }
  const std::vector<VectorXz>& generators() const { return gens_; }

  int dim() const;
  bool isFullDimensional() const { return dim() == ambient_; }
  bool isPointed() const;

  const HRep& hrep() const;
  bool contains(const VectorXq& x) const;
  bool contains(const VectorXz& x) const { return contains(toRational(x)); }
  bool strictlyContains(const VectorXq& x) const;  // relative interior

  /// Generators that span 1-dimensional faces, in stored order.
  std::vector<VectorXz> extremalRays() const;

  bool operator==(const Cone& other) const {
    return ambient_ == other.ambient_ && gens_ == other.gens_;
  }

 private:
  int ambient_;
  std::vector<VectorXz> gens_;
  mutable bool hrepDone_ = false;
  mutable HRep hrep_;
  mutable int dim_ = -1;
};

/// Face of a cone cut out by a set of facet normals.
struct Face {
  std::vector<int> activeFacets;      // indices into hrep().facets
  std::vector<VectorXz> generators;   // generators of the cone lying on the face
  int dim = 0;
  int codim = 0;                      // ambientRank - dim
};

/// { y : <x, y> >= 0 for all x in c } for a full-dimensional pointed cone.
/// Throws Error("not-full-dimensional") / Error("not-pointed").
Cone dualCone(const Cone& c);

/// True iff the generators extend to a Z-basis of the ambient lattice.
bool isRegular(const Cone& c);

/// Placing triangulation with respect to the canonical generator order.
/// Non-extremal generators are discarded first.  Requires a pointed,
/// full-dimensional cone.
std::vector<Cone> triangulate(const Cone& c);

/// Smallest face of c containing x.  Throws Error("point-not-in-cone").
Face minimalFace(const Cone& c, const VectorXq& x);

/// Extremal rays of { x : eq·x = 0, ineq·x >= 0 } by brute-force
/// active-set enumeration; also reports the lineality dimension.
struct HConeRays {
  std::vector<VectorXz> rays;
  int linealityDim = 0;
};
HConeRays raysFromHRep(int ambient, const std::vector<VectorXz>& equations,
                       const std::vector<VectorXz>& inequalities);

}  // namespace toric
