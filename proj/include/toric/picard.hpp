#pragma once

#include "toric/cone.hpp"
#include "toric/fan.hpp"
#include "toric/types.hpp"

#include <map>
#include <vector>

namespace toric {

/// Picard lattice of a split toric variety: the cokernel of the pairing
/// map M -> Z^rays, with a fixed integral projection and section.
class PicardLattice {
 public:
  explicit PicardLattice(const Fan& fan);

  const Fan& fan() const { return *fan_; }
  int rank() const { return rank_; }                        // rho = n - d
  const MatrixXz& projection() const { return projection_; }  // rho x n
  const MatrixXz& section() const { return section_; }        // n x rho

  /// Class of the ray divisor D_i.
  const VectorXz& rayClass(int i) const { return rayClasses_[static_cast<size_t>(i)]; }
  const std::vector<VectorXz>& rayClasses() const { return rayClasses_; }

  const Cone& effectiveCone() const { return effective_; }
  const VectorXz& anticanonicalClass() const { return anticanonical_; }

 private:
  const Fan* fan_;
  int rank_;
  MatrixXz projection_;
  MatrixXz section_;
  std::vector<VectorXz> rayClasses_;
  Cone effective_;
  VectorXz anticanonical_;
};

/// The geometric invariants of a line bundle class in the interior of the
/// effective cone: the growth exponent a, the log exponent b, the
/// supporting coefficients lambda_j on the minimal face, the index split
/// I/J, and the adapted support function phi_L.
struct LineBundleData {
  VectorXq L;
  Rational a;
  int b = 0;
  std::map<int, Rational> lambda;  // ray index -> lambda_j, for j in J
  std::vector<int> I;
  std::vector<int> J;
  std::vector<Rational> phiValues;  // values of phi_L on the rays
};

/// Throws Error("L-not-interior") / Error("non-projective-fan").
LineBundleData lineBundleData(const Fan& fan, const PicardLattice& pic, const VectorXq& L);

}  // namespace toric
