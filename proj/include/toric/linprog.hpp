#pragma once

#include "toric/types.hpp"

#include <vector>

namespace toric {

/// A system of exact linear constraints a·x >= rhs and a·x = rhs,
/// solved by Fourier-Motzkin elimination.  Desk scale only: the method
/// is doubly exponential in the number of eliminated variables.
class LinearSystem {
 public:
  explicit LinearSystem(int nvars) : nvars_(nvars) {}

  void addInequality(const VectorXq& coeffs, const Rational& rhs);  // coeffs·x >= rhs
  void addEquality(const VectorXq& coeffs, const Rational& rhs);    // coeffs·x  = rhs

  int variableCount() const { return nvars_; }

  struct Row {
    VectorXq a;
    Rational rhs;
    bool equality;
  };
  const std::vector<Row>& rows() const { return rows_; }

 private:
  int nvars_;
  std::vector<Row> rows_;
};

struct Bound {
  bool feasible = false;
  bool bounded = false;
  Rational value;  // valid when feasible && bounded
};

bool isFeasible(const LinearSystem& sys);

/// Projects the system onto variable `target` and reads off inf/sup of x_target.
Bound infimumOf(const LinearSystem& sys, int target);
Bound supremumOf(const LinearSystem& sys, int target);

}  // namespace toric
