#pragma once

#include "toric/cone.hpp"
#include "toric/ratfunc.hpp"

#include <cstdint>
#include <vector>

namespace toric {

/// The X-function of a pointed full-dimensional cone: the Laplace
/// transform of the indicator of the dual cone, as an exact rational
/// function homogeneous of degree -k.
struct XFunction {
  Cone cone;
  RatFunc value;
};

XFunction xFunction(const Cone& c);

/// X-function of the image of c under the quotient by the lattice spanned
/// by `kernel`, computed by iterated residue descent along the kernel basis
/// and corrected by the index of the spanned lattice in its saturation.
/// Equals xFunction(image cone) in the Smith-normalized image coordinates.
/// Throws Error("kernel-meets-cone") / Error("image-not-pointed").
XFunction xFunctionProjected(const Cone& c, const std::vector<VectorXz>& kernel);

/// The quotient map and image data used by xFunctionProjected.
struct QuotientMap {
  MatrixXz projection;  // (n-g) x n, kernel = saturation of the input lattice
  MatrixXz section;     // n x (n-g), projection * section = identity
  Integer index;        // [saturation : input lattice]
};
QuotientMap quotientBy(int ambient, const std::vector<VectorXz>& kernel);

/// Monte-Carlo estimate of the defining integral, with a reported error
/// bound; the independent numeric oracle for the symbolic route.
struct NumericEstimate {
  double value = 0;
  double stddev = 0;  // standard error of the estimate
};
NumericEstimate numericX(const Cone& c, const Eigen::VectorXd& s, std::uint64_t seed,
                         int samples = 200000);

}  // namespace toric
