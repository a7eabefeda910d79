#pragma once

#include "toric/fan.hpp"
#include "toric/heights.hpp"
#include "toric/types.hpp"

#include <functional>
#include <vector>

namespace toric {

/// Exact local height integral at a good prime:
///   sum over cones sigma of prod_{rays j in sigma} 1/(p^{u_j} - 1).
/// Requires integral exponents u_j > 0.
/// Throws Error("divergent") / Error("non-integral-exponents").
Rational localZetaFactor(const Fan& fan, const std::vector<Rational>& u, const Integer& p);

/// Brute-force lattice truncation sum_{|n|_inf <= radius} p^{-phi_u(n)};
/// the oracle the closed form is checked against.
Rational localZetaTruncated(const Fan& fan, const std::vector<Rational>& u, const Integer& p,
                            int radius);

struct CountRow {
  Rational B;
  long long N = 0;
  long long ties = 0;
};

/// Exact bounded-height point counts for every threshold (one enumeration
/// pass at the largest).  Heights are compared exactly; the ties column is
/// retained for the CSV contract and is zero under exact comparison.
/// Throws Error("dimension-unsupported") for rank > 2 and
/// Error("count-infinite-risk") when the PL function is not positive.
std::vector<CountRow> countPoints(const Fan& fan, const PLFunction& phi,
                                  std::vector<Rational> thresholds, int threads = 1);

/// Streams every torus point with H(x) <= bound to the callback along with
/// its height.  Same enumeration core as countPoints.
void enumerateBoundedPoints(const Fan& fan, const PLFunction& phi, const Rational& bound,
                            const std::function<void(const TorusPoint&, double)>& fn);

struct FitResult {
  double a = 0;      // exponent of B
  double b = 0;      // 1 + exponent of log B
  double c = 0;      // leading constant
  double residual = 0;  // rms residual of the log-log regression
};

/// Least-squares fit of log N against (log B, log log B, 1).
/// Throws Error("insufficient-data") for fewer than four usable rows or
/// a B-range narrower than two decades.
FitResult fitExponents(const std::vector<CountRow>& table);

/// g / (a * (b-1)!), the Tauberian leading constant.
/// Throws Error("bad-pole-order") for b < 1.
Rational tauberianConstant(const Rational& a, int b, const Rational& g);

/// Truncated height zeta sum  sum_{H(x) <= bound} H(x)^{-s}.
double zetaPartialSum(const Fan& fan, const PLFunction& phi, double s, const Rational& bound);

}  // namespace toric
