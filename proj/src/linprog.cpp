#include "toric/linprog.hpp"

#include <algorithm>
#include <set>

namespace toric {

void LinearSystem::addInequality(const VectorXq& coeffs, const Rational& rhs) {
  if (coeffs.size() != nvars_) throw Error("dimension-mismatch");
  rows_.push_back({coeffs, rhs, false});
}

void LinearSystem::addEquality(const VectorXq& coeffs, const Rational& rhs) {
  if (coeffs.size() != nvars_) throw Error("dimension-mismatch");
  rows_.push_back({coeffs, rhs, true});
}

namespace {

using Row = LinearSystem::Row;

// Normalizes an inequality so its leading nonzero coefficient is +-1;
// used only for duplicate pruning.
Row normalized(Row r) {
  for (Eigen::Index i = 0; i < r.a.size(); ++i) {
    if (r.a[i] != 0) {
      Rational s = abs(r.a[i]);
      r.a /= s;
      r.rhs /= s;
      return r;
    }
  }
  return r;
}

struct RowLess {
  bool operator()(const Row& x, const Row& y) const {
    if (x.equality != y.equality) return x.equality < y.equality;
    for (Eigen::Index i = 0; i < x.a.size(); ++i) {
      if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
    }
    return x.rhs < y.rhs;
  }
};

// Eliminates all variables except `keep` (or all, when keep < 0).
// Returns false as soon as an inconsistent constant row 0 >= pos appears.
bool eliminate(std::vector<Row>& rows, int nvars, int keep) {
  for (int v = nvars - 1; v >= 0; --v) {
    if (v == keep) continue;

    // Prefer substitution through an equality that mentions v.
    int eqIdx = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].equality && rows[i].a[v] != 0) {
        eqIdx = static_cast<int>(i);
        break;
      }
    }
    if (eqIdx >= 0) {
      Row eq = rows[static_cast<size_t>(eqIdx)];
      std::vector<Row> next;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(i) == eqIdx) continue;
        Row r = rows[i];
        if (r.a[v] != 0) {
          Rational f = r.a[v] / eq.a[v];
          r.a -= f * eq.a;
          r.rhs -= f * eq.rhs;
        }
        next.push_back(std::move(r));
      }
      rows = std::move(next);
    } else {
      std::vector<Row> pos, neg, zero;
      for (auto& r : rows) {
        if (r.a[v] > 0)
          pos.push_back(r);
        else if (r.a[v] < 0)
          neg.push_back(r);
        else
          zero.push_back(r);
      }
      if (!pos.empty() && !neg.empty()) {
        for (const auto& p : pos) {
          for (const auto& n : neg) {
            // p: a_p·x >= r_p with a_p[v] > 0;  n likewise with a_n[v] < 0.
            Row comb;
            comb.a = (-n.a[v]) * p.a + p.a[v] * n.a;
            comb.rhs = (-n.a[v]) * p.rhs + p.a[v] * n.rhs;
            comb.equality = false;
            zero.push_back(std::move(comb));
          }
        }
      }
      rows = std::move(zero);
    }

    // Prune: drop trivial rows, detect contradictions, dedup.
    std::set<Row, RowLess> seen;
    std::vector<Row> pruned;
    for (auto& r : rows) {
      bool allZero = true;
      for (Eigen::Index i = 0; i < r.a.size(); ++i)
        if (r.a[i] != 0) {
          allZero = false;
          break;
        }
      if (allZero) {
        if (r.equality ? (r.rhs != 0) : (r.rhs > 0)) return false;
        continue;
      }
      Row n = normalized(r);
      if (seen.insert(n).second) pruned.push_back(std::move(n));
    }
    rows = std::move(pruned);
  }
  return true;
}

Bound boundsAfterProjection(const LinearSystem& sys, int target, bool wantInf) {
  std::vector<Row> rows = sys.rows();
  if (!eliminate(rows, sys.variableCount(), target)) return {false, false, Rational(0)};

  bool hasLo = false, hasHi = false;
  Rational lo = 0, hi = 0;
  for (const auto& r : rows) {
    Rational c = r.a[target];
    if (c == 0) continue;  // pruned constants already checked
    Rational bound = r.rhs / c;
    if (r.equality) {
      if (!hasLo || bound > lo) lo = bound;
      if (!hasHi || bound < hi) hi = bound;
      hasLo = hasHi = true;
    } else if (c > 0) {
      if (!hasLo || bound > lo) lo = bound;
      hasLo = true;
    } else {
      if (!hasHi || bound < hi) hi = bound;
      hasHi = true;
    }
  }
  if (hasLo && hasHi && lo > hi) return {false, false, Rational(0)};
  if (wantInf) {
    if (!hasLo) return {true, false, Rational(0)};
    return {true, true, lo};
  }
  if (!hasHi) return {true, false, Rational(0)};
  return {true, true, hi};
}

}  // namespace

bool isFeasible(const LinearSystem& sys) {
  std::vector<Row> rows = sys.rows();
  return eliminate(rows, sys.variableCount(), -1);
}

Bound infimumOf(const LinearSystem& sys, int target) {
  return boundsAfterProjection(sys, target, true);
}

Bound supremumOf(const LinearSystem& sys, int target) {
  return boundsAfterProjection(sys, target, false);
}

}  // namespace toric
