#pragma once

#include "toric/cone.hpp"
#include "toric/types.hpp"

#include <string>
#include <vector>

namespace toric {

/// Raw fan data as parsed from a fan file: rays in file order plus the
/// index sets of the maximal cones.
struct FanData {
  int rank = 0;
  std::vector<VectorXz> rays;
  std::vector<std::vector<int>> maxCones;
};

struct FanViolation {
  std::string code;     // "not-complete", "not-regular(2)", ...
  std::string message;
};

/// Complete regular fan.  Construction validates the fan axioms:
///   - every maximal cone is regular,
///   - pairwise intersections are common faces,
///   - the fan is complete (every facet of a maximal cone is shared by
///     exactly two maximal cones and the adjacency graph is connected).
/// Faces are closed off on construction.
class Fan {
 public:
  /// Throws Error with the first violation code; use check() for all of them.
  static Fan validate(const FanData& data);
  static std::vector<FanViolation> check(const FanData& data);

  int rank() const { return rank_; }
  const std::vector<VectorXz>& rays() const { return rays_; }
  int rayCount() const { return static_cast<int>(rays_.size()); }
  const std::vector<std::vector<int>>& maxCones() const { return maxCones_; }

  /// All cones of the fan as sorted ray-index sets, including the zero cone {}.
  const std::vector<std::vector<int>>& cones() const { return allCones_; }

  Cone cone(const std::vector<int>& rayIndices) const;

  /// Index of the first maximal cone containing x (deterministic scan).
  int locateMaxCone(const VectorXq& x) const;

  /// Coordinates of x in the ray basis of max cone `idx` (cone is regular).
  VectorXq coneCoordinates(int idx, const VectorXq& x) const;

  /// Pairs of adjacent maximal cones together with the shared facet rays.
  struct Wall {
    int coneA, coneB;
    std::vector<int> facetRays;
  };
  const std::vector<Wall>& walls() const { return walls_; }

  const MatrixXq& rayMatrixInverse(int maxConeIdx) const {
    return inverses_[static_cast<size_t>(maxConeIdx)];
  }

  FanData data() const;

 private:
  Fan() = default;
  int rank_ = 0;
  std::vector<VectorXz> rays_;
  std::vector<std::vector<int>> maxCones_;
  std::vector<std::vector<int>> allCones_;
  std::vector<Wall> walls_;
  std::vector<MatrixXq> inverses_;  // per max cone: inverse of the ray-row matrix
};

/// Piecewise linear function on a fan, determined by its values on the rays.
class PLFunction {
 public:
  PLFunction(const Fan& fan, std::vector<Rational> values);

  const Fan& fan() const { return *fan_; }
  const std::vector<Rational>& values() const { return values_; }
  Rational value(int ray) const { return values_[static_cast<size_t>(ray)]; }

  /// The linear form m with <e_i, m> = u_i on the rays of max cone `idx`.
  const VectorXq& linearForm(int idx) const { return forms_[static_cast<size_t>(idx)]; }

 private:
  const Fan* fan_;
  std::vector<Rational> values_;
  std::vector<VectorXq> forms_;
};

Rational evaluatePL(const PLFunction& phi, const VectorXq& x);
Rational evaluatePL(const PLFunction& phi, const VectorXz& x);
double evaluatePLReal(const PLFunction& phi, const Eigen::VectorXd& x);

PLFunction anticanonicalFunction(const Fan& fan);

/// True iff the fan carries a strictly convex support function
/// (exact LP feasibility with a maximized slack).
bool isProjective(const Fan& fan);

}  // namespace toric
