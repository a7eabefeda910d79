#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric/lattice.hpp"
#include "toric/linprog.hpp"

#include <random>

using namespace toric;

namespace {

MatrixXz makeZ(std::initializer_list<std::initializer_list<long>> rows) {
  MatrixXz m(static_cast<Eigen::Index>(rows.size()),
             static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

VectorXq makeQ(std::initializer_list<Rational> vals) {
  VectorXq v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (const auto& x : vals) v[i++] = x;
  return v;
}

bool isUnimodular(const MatrixXz& u) {
  Integer d = detZ(u);
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("hermite normal form on the examples") {
  SUBCASE("identity stays put") {
    MatrixXz id = MatrixXz::Identity(3, 3);
    auto [h, u] = hermiteNormalForm(id);
    CHECK(h == id);
    CHECK(u == id);
  }
  SUBCASE("upper triangular with reduced off-diagonal") {
    auto [h, u] = hermiteNormalForm(makeZ({{2, 4}, {0, 3}}));
    CHECK(h(0, 0) == 2);
    CHECK(h(1, 1) == 3);
    CHECK(h(1, 0) == 0);
    CHECK(h(0, 1) >= 0);
    CHECK(h(0, 1) < 3);
    CHECK(isUnimodular(u));
    CHECK(u * makeZ({{2, 4}, {0, 3}}) == h);
  }
  SUBCASE("zero matrix") {
    MatrixXz z = MatrixXz::Zero(2, 2);
    auto [h, u] = hermiteNormalForm(z);
    CHECK(h == z);
    CHECK(u == MatrixXz::Identity(2, 2));
  }
}

TEST_CASE("hermite reconstruction on random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 6), entry(-100, 100);
  for (int trial = 0; trial < 50; ++trial) {
    MatrixXz m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    auto [h, u] = hermiteNormalForm(m);
    REQUIRE(isUnimodular(u));
    REQUIRE(u * m == h);
    // Echelon shape: pivot columns strictly increase, entries below are zero.
    Eigen::Index lastPivot = -1;
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
      Eigen::Index p = -1;
      for (Eigen::Index j = 0; j < h.cols(); ++j)
        if (h(i, j) != 0) {
          p = j;
          break;
        }
      if (p < 0) continue;
      CHECK(p > lastPivot);
      CHECK(h(i, p) > 0);
      lastPivot = p;
    }
  }
}

TEST_CASE("smith normal form") {
  SUBCASE("diag(2,3) -> diag(1,6)") {
    auto s = smithNormalForm(makeZ({{2, 0}, {0, 3}}));
    CHECK(s.d(0, 0) == 1);
    CHECK(s.d(1, 1) == 6);
  }
  SUBCASE("[[4,6],[2,2]] -> diag(2,2)") {
    auto m = makeZ({{4, 6}, {2, 2}});
    auto s = smithNormalForm(m);
    CHECK(s.d(0, 0) == 2);
    CHECK(s.d(1, 1) == 2);
    CHECK(isUnimodular(s.u));
    CHECK(isUnimodular(s.v));
    CHECK(s.u * m * s.v == s.d);
  }
  SUBCASE("zero matrix") {
    auto s = smithNormalForm(MatrixXz::Zero(2, 2));
    CHECK(s.d(0, 0) == 0);
    CHECK(s.d(1, 1) == 0);
  }
}

TEST_CASE("smith reconstruction and divisibility on random matrices") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dim(1, 6), entry(-100, 100);
  for (int trial = 0; trial < 50; ++trial) {
    MatrixXz m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    auto s = smithNormalForm(m);
    REQUIRE(isUnimodular(s.u));
    REQUIRE(isUnimodular(s.v));
    REQUIRE(s.u * m * s.v == s.d);
    Eigen::Index n = std::min(s.d.rows(), s.d.cols());
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      CHECK(s.d(i, i) >= 0);
      if (s.d(i, i) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
      if (s.d(i, i) == 0) CHECK(s.d(i + 1, i + 1) == 0);
    }
  }
}

TEST_CASE("kernel basis") {
  SUBCASE("row [1,1]") {
    MatrixXz k = kernelBasis(makeZ({{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(((k(0, 0) == 1 && k(1, 0) == -1) || (k(0, 0) == -1 && k(1, 0) == 1)));
  }
  SUBCASE("identity has trivial kernel") {
    CHECK(kernelBasis(MatrixXz::Identity(2, 2)).cols() == 0);
  }
  SUBCASE("row [2,4] gives the primitive (2,-1)") {
    MatrixXz k = kernelBasis(makeZ({{2, 4}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) * 2 + k(1, 0) * 4 == 0);
    CHECK(boost::multiprecision::gcd(k(0, 0), k(1, 0)) == 1);
  }
}

TEST_CASE("kernel vectors solve exactly and span a saturated lattice") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dim(1, 5), entry(-30, 30);
  for (int trial = 0; trial < 40; ++trial) {
    MatrixXz m(dim(rng), dim(rng));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    MatrixXz k = kernelBasis(m);
    if (k.cols() == 0) continue;
    MatrixXz prod = m * k;
    for (Eigen::Index i = 0; i < prod.rows(); ++i)
      for (Eigen::Index j = 0; j < prod.cols(); ++j) REQUIRE(prod(i, j) == 0);
    CHECK(saturationIndex(k) == 1);
  }
}

TEST_CASE("cokernel order") {
  CHECK(cokernelOrder(MatrixXz::Identity(2, 2)) == Integer(1));
  CHECK(cokernelOrder(makeZ({{2, 0}, {0, 3}})) == Integer(6));
  CHECK(!cokernelOrder(makeZ({{0, 0}})).has_value());
}

TEST_CASE("minimal scaling on the worked examples") {
  SUBCASE("coordinatewise constraints") {
    auto a = minimalScaling(makeQ({1, 2}), makeQ({-2, -2}),
                            {makeQ({1, 0}), makeQ({0, 1})});
    CHECK(a == Rational(2));
  }
  SUBCASE("one dimensional") {
    auto a = minimalScaling(makeQ({1}), makeQ({-3}), {makeQ({1})});
    CHECK(a == Rational(3));
  }
  SUBCASE("slanted cone") {
    auto a = minimalScaling(makeQ({1, 1}), makeQ({-1, -3}),
                            {makeQ({1, 0}), makeQ({1, 2})});
    CHECK(a == Rational(3));
  }
  SUBCASE("unbounded below") {
    // gens span the whole line; every a works.
    CHECK_THROWS_WITH_AS(minimalScaling(makeQ({1}), makeQ({0}), {makeQ({1}), makeQ({-1})}),
                         doctest::Contains("infimum"), Error);
  }
}

TEST_CASE("minimal scaling agrees with a membership-bisection oracle") {
  std::mt19937 rng(999);
  std::uniform_int_distribution<int> entry(-5, 5), pos(1, 5);
  int done = 0;
  while (done < 100) {
    // Random full-dimensional pointed cone in dim 2 containing c strictly.
    VectorXq g1 = makeQ({Rational(pos(rng)), Rational(entry(rng))});
    VectorXq g2 = makeQ({Rational(entry(rng)), Rational(pos(rng))});
    if (g1[0] * g2[1] - g1[1] * g2[0] == 0) continue;
    VectorXq c = g1 + g2;  // interior
    VectorXq k = makeQ({Rational(entry(rng)), Rational(entry(rng))});
    Rational a;
    try {
      a = minimalScaling(c, k, {g1, g2});
    } catch (const Error&) {
      continue;
    }
    // Membership at a, none strictly below.
    auto member = [&](const Rational& t) {
      // x = t*c + k in cone(g1,g2): solve the 2x2 system exactly.
      VectorXq x = c * t + k;
      Rational det = g1[0] * g2[1] - g1[1] * g2[0];
      Rational u = (x[0] * g2[1] - x[1] * g2[0]) / det;
      Rational v = (g1[0] * x[1] - g1[1] * x[0]) / det;
      return u >= 0 && v >= 0;
    };
    REQUIRE(member(a));
    REQUIRE(!member(a - Rational(1, 1000000000)));
    // Rational bisection refines to the same value.
    Rational lo = a - 1, hi = a;
    REQUIRE(!member(lo));
    for (int it = 0; it < 60; ++it) {
      Rational mid = (lo + hi) / 2;
      (member(mid) ? hi : lo) = mid;
    }
    CHECK(abs(toDouble(hi - a)) < 1e-12);
    ++done;
  }
}

TEST_CASE("fourier-motzkin feasibility") {
  LinearSystem sys(2);
  sys.addInequality(makeQ({1, 0}), Rational(0));
  sys.addInequality(makeQ({0, 1}), Rational(0));
  sys.addInequality(makeQ({-1, -1}), Rational(-1));  // x + y <= 1
  CHECK(isFeasible(sys));
  sys.addInequality(makeQ({1, 1}), Rational(2));  // x + y >= 2
  CHECK(!isFeasible(sys));
}
