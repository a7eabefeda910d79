#include "toric/lattice.hpp"

#include "toric/linprog.hpp"

#include <algorithm>

namespace toric {

namespace {

// Row-echelon reduction in place; returns pivot (row, col) pairs.
std::vector<std::pair<Eigen::Index, Eigen::Index>> echelonQ(MatrixXq& m) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(row).swap(m.row(pivot));
    Rational inv = Rational(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i != row && m(i, col) != 0) m.row(i) -= m(i, col) * m.row(row);
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace

Eigen::Index rankQ(MatrixXq m) { return static_cast<Eigen::Index>(echelonQ(m).size()); }

Rational detQ(MatrixXq m) {
  if (m.rows() != m.cols()) throw Error("not-square");
  Rational det = 1;
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = col; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      m.row(col).swap(m.row(pivot));
      det = -det;
    }
    det *= m(col, col);
    Rational inv = Rational(1) / m(col, col);
    for (Eigen::Index i = col + 1; i < m.rows(); ++i) {
      if (m(i, col) != 0) m.row(i) -= m(i, col) * inv * m.row(col);
    }
  }
  return det;
}

Integer detZ(const MatrixXz& m) {
  Rational d = detQ(toRational(m));
  return numerator(d);
}

std::optional<VectorXq> solveQ(const MatrixXq& a, const VectorXq& b) {
  MatrixXq aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  auto pivots = echelonQ(aug);
  VectorXq x = VectorXq::Zero(a.cols());
  for (const auto& [row, col] : pivots) {
    if (col == a.cols()) return std::nullopt;  // 0 = 1
    x[col] = aug(row, a.cols());
  }
  return x;
}

MatrixXq nullspaceQ(const MatrixXq& m) {
  MatrixXq work = m;
  auto pivots = echelonQ(work);
  std::vector<bool> isPivot(m.cols(), false);
  for (const auto& [row, col] : pivots) isPivot[col] = true;
  Eigen::Index freeCount = m.cols() - static_cast<Eigen::Index>(pivots.size());
  MatrixXq basis = MatrixXq::Zero(m.cols(), freeCount);
  Eigen::Index k = 0;
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    if (isPivot[col]) continue;
    basis(col, k) = 1;
    for (const auto& [prow, pcol] : pivots) basis(pcol, k) = -work(prow, col);
    ++k;
  }
  return basis;
}

MatrixXq inverseQ(const MatrixXq& m) {
  if (m.rows() != m.cols()) throw Error("not-square");
  MatrixXq aug(m.rows(), 2 * m.cols());
  aug.leftCols(m.cols()) = m;
  aug.rightCols(m.cols()) = MatrixXq::Identity(m.rows(), m.cols());
  auto pivots = echelonQ(aug);
  for (const auto& [row, col] : pivots)
    if (row != col) throw Error("singular-matrix");
  if (static_cast<Eigen::Index>(pivots.size()) != m.rows()) throw Error("singular-matrix");
  return aug.rightCols(m.cols());
}

namespace {

// Floor division on Integers.
Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteResult hermiteNormalForm(const MatrixXz& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("empty-matrix");
  MatrixXz h = m;
  MatrixXz u = MatrixXz::Identity(m.rows(), m.rows());
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Clear the column below `row` by gcd reduction.
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = row; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (best < 0 || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best < 0) break;
      if (best != row) {
        h.row(row).swap(h.row(best));
        u.row(row).swap(u.row(best));
      }
      bool clean = true;
      for (Eigen::Index i = row + 1; i < h.rows(); ++i) {
        if (h(i, col) != 0) {
          Integer q = floorDiv(h(i, col), h(row, col));
          h.row(i) -= q * h.row(row);
          u.row(i) -= q * u.row(row);
          if (h(i, col) != 0) clean = false;
        }
      }
      if (clean) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.row(row) = -h.row(row);
      u.row(row) = -u.row(row);
    }
    for (Eigen::Index i = 0; i < row; ++i) {
      Integer q = floorDiv(h(i, col), h(row, col));
      if (q != 0) {
        h.row(i) -= q * h.row(row);
        u.row(i) -= q * u.row(row);
      }
    }
    ++row;
  }
  return {h, u};
}

SmithResult smithNormalForm(const MatrixXz& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("empty-matrix");
  MatrixXz d = m;
  MatrixXz u = MatrixXz::Identity(m.rows(), m.rows());
  MatrixXz v = MatrixXz::Identity(m.cols(), m.cols());
  Eigen::Index n = std::min(d.rows(), d.cols());

  for (Eigen::Index t = 0; t < n; ++t) {
    // Find the entry of least absolute value in the trailing block.
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index i = t; i < d.rows(); ++i)
      for (Eigen::Index j = t; j < d.cols(); ++j)
        if (d(i, j) != 0 && (pr < 0 || abs(d(i, j)) < abs(d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    if (pr != t) {
      d.row(t).swap(d.row(pr));
      u.row(t).swap(u.row(pr));
    }
    if (pc != t) {
      d.col(t).swap(d.col(pc));
      v.col(t).swap(v.col(pc));
    }

    bool again = true;
    while (again) {
      again = false;
      for (Eigen::Index i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) != 0) {
          Integer q = floorDiv(d(i, t), d(t, t));
          d.row(i) -= q * d.row(t);
          u.row(i) -= q * u.row(t);
          if (d(i, t) != 0) {
            d.row(t).swap(d.row(i));
            u.row(t).swap(u.row(i));
            again = true;
          }
        }
      }
      for (Eigen::Index j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) != 0) {
          Integer q = floorDiv(d(t, j), d(t, t));
          d.col(j) -= q * d.col(t);
          v.col(j) -= q * v.col(t);
          if (d(t, j) != 0) {
            d.col(t).swap(d.col(j));
            v.col(t).swap(v.col(j));
            again = true;
          }
        }
      }
      if (again) continue;
      // Enforce divisibility of the trailing block by the pivot.
      for (Eigen::Index i = t + 1; i < d.rows() && !again; ++i)
        for (Eigen::Index j = t + 1; j < d.cols() && !again; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.row(t) += d.row(i);
            u.row(t) += u.row(i);
            again = true;
          }
    }
    if (d(t, t) < 0) {
      d.row(t) = -d.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return {d, u, v};
}

MatrixXz kernelBasis(const MatrixXz& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("empty-matrix");
  SmithResult s = smithNormalForm(m);
  Eigen::Index n = std::min(s.d.rows(), s.d.cols());
  std::vector<Eigen::Index> zeroCols;
  for (Eigen::Index j = 0; j < s.d.cols(); ++j) {
    if (j >= n || s.d(j, j) == 0) zeroCols.push_back(j);
  }
  MatrixXz basis(m.cols(), static_cast<Eigen::Index>(zeroCols.size()));
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    VectorXz col = s.v.col(zeroCols[static_cast<size_t>(k)]);
    basis.col(k) = primitive(col);
  }
  // Deterministic order.
  std::vector<VectorXz> cols;
  for (Eigen::Index k = 0; k < basis.cols(); ++k) cols.push_back(basis.col(k));
  std::sort(cols.begin(), cols.end(), lexLess);
  for (Eigen::Index k = 0; k < basis.cols(); ++k) basis.col(k) = cols[static_cast<size_t>(k)];
  return basis;
}

std::optional<Integer> cokernelOrder(const MatrixXz& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("empty-matrix");
  SmithResult s = smithNormalForm(m);
  Eigen::Index n = std::min(s.d.rows(), s.d.cols());
  Integer order = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (s.d(i, i) != 0) {
      order *= s.d(i, i);
      ++rank;
    }
  }
  if (rank < m.rows()) return std::nullopt;
  return order;
}

Integer saturationIndex(const MatrixXz& m) {
  SmithResult s = smithNormalForm(m);
  Eigen::Index n = std::min(s.d.rows(), s.d.cols());
  Integer idx = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (s.d(i, i) != 0) {
      idx *= s.d(i, i);
      ++rank;
    }
  }
  if (rank != m.cols()) throw Error("dependent-columns");
  return idx;
}

Rational minimalScaling(const VectorXq& c, const VectorXq& k,
                        const std::vector<VectorXq>& gens) {
  const Eigen::Index dim = c.size();
  if (k.size() != dim) throw Error("dimension-mismatch");
  const int m = static_cast<int>(gens.size());
  // Variables: x0 = a, x1..xm = cone coefficients.
  LinearSystem sys(1 + m);
  for (Eigen::Index j = 0; j < dim; ++j) {
    VectorXq row = VectorXq::Zero(1 + m);
    row[0] = c[j];
    for (int i = 0; i < m; ++i) row[1 + i] = -gens[static_cast<size_t>(i)][j];
    sys.addEquality(row, -k[j]);
  }
  for (int i = 0; i < m; ++i) {
    VectorXq row = VectorXq::Zero(1 + m);
    row[1 + i] = 1;
    sys.addInequality(row, Rational(0));
  }
  Bound b = infimumOf(sys, 0);
  if (!b.feasible) throw Error("infeasible", "no scaling puts the point in the cone");
  if (!b.bounded) throw Error("unbounded-below", "scaling objective has no finite infimum");
  return b.value;
}

}  // namespace toric
