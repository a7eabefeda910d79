#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

// Exact arbitrary-precision scalars (GMP-backed).
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Dense exact types, following the MatrixXd naming scheme:
// z = integer lattice data, q = rational data.
using MatrixXz = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXz = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Error with a stable machine-readable code ("not-pointed", "parse-error(rays)", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  explicit Error(const std::string& code) : std::runtime_error(code), code_(code) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline VectorXq toRational(const VectorXz& v) {
  VectorXq out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

inline MatrixXq toRational(const MatrixXz& m) {
  MatrixXq out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

inline double toDouble(const Rational& q) { return q.convert_to<double>(); }

/// gcd of all entries; 0 for the zero vector.
Integer contentOf(const VectorXz& v);

/// v / content, sign fixed so the first nonzero entry is positive; zero stays zero.
VectorXz primitive(const VectorXz& v);

/// Clears denominators and primitivizes.
VectorXz primitive(const VectorXq& v);

bool lexLess(const VectorXz& a, const VectorXz& b);

std::string toString(const Integer& z);
std::string toString(const Rational& q);

/// Parses "-3", "5/7", "2.5", "1e6". Throws Error("parse-error(rational)").
Rational parseRational(const std::string& s);

Integer intPow(const Integer& base, unsigned long exp);
Rational ratPow(const Rational& base, long exp);
Integer factorial(int n);

inline bool isIntegral(const Rational& q) { return denominator(q) == 1; }

}  // namespace toric
