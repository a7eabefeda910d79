#pragma once

#include "toric/types.hpp"

#include <optional>
#include <vector>

namespace toric {

// ---------------------------------------------------------------------------
// Exact rational elimination. Pivoting is deterministic (first nonzero).
// ---------------------------------------------------------------------------

Eigen::Index rankQ(MatrixXq m);

/// Determinant of a square rational matrix.
Rational detQ(MatrixXq m);
Integer detZ(const MatrixXz& m);

/// Solves a·x = b exactly; empty when inconsistent.
std::optional<VectorXq> solveQ(const MatrixXq& a, const VectorXq& b);

/// Basis of {x : m·x = 0}, columns of the result.
MatrixXq nullspaceQ(const MatrixXq& m);

/// Inverse of a nonsingular rational matrix.
MatrixXq inverseQ(const MatrixXq& m);

// ---------------------------------------------------------------------------
// Integer lattice normal forms.
// ---------------------------------------------------------------------------

/// u·m = h with u unimodular and h in row-echelon Hermite form:
/// pivots positive, entries below a pivot zero, entries above reduced
/// into [0, pivot).  The convention is fixed so outputs are golden-testable.
struct HermiteResult {
  MatrixXz h;
  MatrixXz u;
};
HermiteResult hermiteNormalForm(const MatrixXz& m);

/// u·m·v = d with u, v unimodular, d diagonal, d1 | d2 | ..., entries >= 0.
struct SmithResult {
  MatrixXz d;
  MatrixXz u;
  MatrixXz v;
};
SmithResult smithNormalForm(const MatrixXz& m);

/// Basis of the saturated integer kernel {x in Z^cols : m·x = 0};
/// columns of the result, deterministically normalized and ordered.
MatrixXz kernelBasis(const MatrixXz& m);

/// Order of Z^rows / m·Z^cols: product of the Smith invariants when the
/// map is surjective over Q, nullopt ("infinite") otherwise.
std::optional<Integer> cokernelOrder(const MatrixXz& m);

/// Index [sat(L) : L] of the lattice L spanned by the columns of m inside
/// its saturation; requires the columns to be independent.
Integer saturationIndex(const MatrixXz& m);

// ---------------------------------------------------------------------------
// Exact scaling LP.
// ---------------------------------------------------------------------------

/// inf { a : a·c + k in cone(gens) }, exact.  Throws Error("unbounded-below")
/// when no finite infimum exists and Error("infeasible") when no a works at
/// all (bad input; cannot happen when c lies in the relative interior).
Rational minimalScaling(const VectorXq& c, const VectorXq& k,
                        const std::vector<VectorXq>& gens);

}  // namespace toric
