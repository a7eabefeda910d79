#include "toric/zeta.hpp"

#include "toric/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace toric {

Rational localZetaFactor(const Fan& fan, const std::vector<Rational>& u, const Integer& p) {
  if (static_cast<int>(u.size()) != fan.rayCount()) throw Error("dimension-mismatch");
  for (const auto& ui : u) {
    if (ui <= 0) throw Error("divergent", "all ray exponents must be positive");
    if (!isIntegral(ui))
      throw Error("non-integral-exponents", "exact local factors need integral exponents");
  }
  Rational total = 0;
  for (const auto& cone : fan.cones()) {
    Rational term = 1;
    for (int j : cone) {
      unsigned long e = u[static_cast<size_t>(j)].convert_to<unsigned long>();
      term /= Rational(intPow(p, e) - 1);
    }
    total += term;
  }
  return total;
}

Rational localZetaTruncated(const Fan& fan, const std::vector<Rational>& u, const Integer& p,
                            int radius) {
  if (static_cast<int>(u.size()) != fan.rayCount()) throw Error("dimension-mismatch");
  for (const auto& ui : u) {
    if (ui <= 0) throw Error("divergent");
    if (!isIntegral(ui)) throw Error("non-integral-exponents");
  }
  const int d = fan.rank();
  if (d > 3) throw Error("dimension-unsupported");
  PLFunction phi(fan, u);
  Rational total = 0;
  std::vector<int> n(static_cast<size_t>(d), -radius);
  while (true) {
    VectorXz v(d);
    for (int i = 0; i < d; ++i) v[i] = n[static_cast<size_t>(i)];
    Rational e = evaluatePL(phi, v);
    long el = e.convert_to<long>();
    total += el >= 0 ? Rational(1) / Rational(intPow(p, static_cast<unsigned long>(el)))
                     : Rational(intPow(p, static_cast<unsigned long>(-el)));
    int i = 0;
    while (i < d && n[static_cast<size_t>(i)] == radius) {
      n[static_cast<size_t>(i)] = -radius;
      ++i;
    }
    if (i == d) break;
    ++n[static_cast<size_t>(i)];
  }
  return total;
}

namespace {

// Smallest-prime-factor sieve for fast factorization of enumeration bounds.
std::vector<int32_t> spfSieve(long limit) {
  std::vector<int32_t> spf(static_cast<size_t>(limit + 1), 0);
  for (long i = 2; i <= limit; ++i) {
    if (spf[static_cast<size_t>(i)] == 0) {
      for (long j = i; j <= limit; j += i)
        if (spf[static_cast<size_t>(j)] == 0) spf[static_cast<size_t>(j)] = static_cast<int32_t>(i);
    }
  }
  return spf;
}

struct PrimeVal {
  long p;
  int v;
};

void factorize(long n, const std::vector<int32_t>& spf, std::vector<PrimeVal>& out) {
  while (n > 1) {
    long p = spf[static_cast<size_t>(n)];
    int v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    out.push_back({p, v});
  }
}

// Precomputed per-fan data for the enumeration fast path (rank <= 2).
struct FastFan {
  int d = 0;
  long scaleD = 1;  // common denominator of all PL linear forms
  // Per max cone: adjugate rows for containment (sign of adj*x vs detSign)
  // and the D-scaled linear form.
  struct ConeData {
    std::array<std::array<long, 2>, 2> adj;  // adj * x >= 0 componentwise <=> x in cone
    std::array<long, 2> form;                // D * m_sigma
    std::array<std::array<long, 2>, 2> facets;  // facet normals (d=2); d=1: 1 facet
    int facetCount = 0;
  };
  std::vector<ConeData> cones;

  long scaledValue(const std::array<long, 2>& n) const {
    for (const auto& c : cones) {
      bool inside = true;
      for (int r = 0; r < d; ++r) {
        long s = 0;
        for (int t = 0; t < d; ++t) s += c.adj[static_cast<size_t>(r)][static_cast<size_t>(t)] * n[static_cast<size_t>(t)];
        if (s < 0) {
          inside = false;
          break;
        }
      }
      if (inside) {
        long v = 0;
        for (int t = 0; t < d; ++t) v += c.form[static_cast<size_t>(t)] * n[static_cast<size_t>(t)];
        return v;
      }
    }
    throw Error("internal", "lattice point not located in the fan");
  }
};

FastFan buildFastFan(const Fan& fan, const PLFunction& phi) {
  FastFan ff;
  ff.d = fan.rank();
  Integer D = 1;
  for (size_t ci = 0; ci < fan.maxCones().size(); ++ci) {
    const VectorXq& m = phi.linearForm(static_cast<int>(ci));
    for (Eigen::Index i = 0; i < m.size(); ++i)
      D = boost::multiprecision::lcm(D, denominator(m[i]));
  }
  ff.scaleD = D.convert_to<long>();
  for (size_t ci = 0; ci < fan.maxCones().size(); ++ci) {
    FastFan::ConeData cd{};
    const auto& mc = fan.maxCones()[ci];
    if (ff.d == 1) {
      long ray = fan.rays()[static_cast<size_t>(mc[0])][0].convert_to<long>();
      cd.adj[0][0] = ray;  // x in cone <=> ray * x >= 0 (ray = +-1)
      cd.facets[0][0] = ray;
      cd.facetCount = 1;
    } else {
      long r0x = fan.rays()[static_cast<size_t>(mc[0])][0].convert_to<long>();
      long r0y = fan.rays()[static_cast<size_t>(mc[0])][1].convert_to<long>();
      long r1x = fan.rays()[static_cast<size_t>(mc[1])][0].convert_to<long>();
      long r1y = fan.rays()[static_cast<size_t>(mc[1])][1].convert_to<long>();
      long det = r0x * r1y - r0y * r1x;
      // x = a*r0 + b*r1 with a = (r1y*x1 - r1x*x2)/det, b = (-r0y*x1 + r0x*x2)/det.
      long sgn = det > 0 ? 1 : -1;
      cd.adj[0] = {sgn * r1y, -sgn * r1x};
      cd.adj[1] = {-sgn * r0y, sgn * r0x};
      cd.facets[0] = cd.adj[0];
      cd.facets[1] = cd.adj[1];
      cd.facetCount = 2;
    }
    const VectorXq& m = phi.linearForm(static_cast<int>(ci));
    for (int t = 0; t < ff.d; ++t)
      cd.form[static_cast<size_t>(t)] = (m[t] * Rational(D)).convert_to<long>();
    ff.cones.push_back(cd);
  }
  return ff;
}

// Exact minimum of phi over the 1-norm unit sphere: candidates are the
// normalized rays and the axis points contained in each max cone.
Rational oneNormConstant(const Fan& fan, const PLFunction& phi) {
  const int d = fan.rank();
  Rational best;
  bool haveBest = false;
  auto consider = [&](const VectorXq& pt, size_t coneIdx) {
    Cone c = fan.cone(fan.maxCones()[coneIdx]);
    if (!c.contains(pt)) return;
    Rational v = 0;
    const VectorXq& m = phi.linearForm(static_cast<int>(coneIdx));
    for (Eigen::Index i = 0; i < pt.size(); ++i) v += pt[i] * m[i];
    if (!haveBest || v < best) {
      best = v;
      haveBest = true;
    }
  };
  for (size_t ci = 0; ci < fan.maxCones().size(); ++ci) {
    for (int r : fan.maxCones()[ci]) {
      VectorXq ray = toRational(fan.rays()[static_cast<size_t>(r)]);
      Rational norm = 0;
      for (Eigen::Index i = 0; i < ray.size(); ++i) norm += abs(ray[i]);
      consider(ray / norm, ci);
    }
    for (int axis = 0; axis < d; ++axis) {
      for (int sign = -1; sign <= 1; sign += 2) {
        VectorXq pt = VectorXq::Zero(d);
        pt[axis] = sign;
        consider(pt, ci);
      }
    }
  }
  if (!haveBest) throw Error("internal", "no candidate vertices");
  return best;
}

// Largest integer M with M^num <= B^den (c1 = num/den > 0).
long productBound(const Rational& B, const Rational& c1) {
  if (B < 1) return 0;
  double guess = std::pow(toDouble(B), 1.0 / toDouble(c1));
  long m = static_cast<long>(guess);
  unsigned long num = numerator(c1).convert_to<unsigned long>();
  unsigned long den = denominator(c1).convert_to<unsigned long>();
  Rational bPow = ratPow(B, static_cast<long>(den));
  auto ok = [&](long cand) {
    return cand >= 1 && Rational(intPow(Integer(cand), num)) <= bPow;
  };
  while (!ok(m) && m > 0) --m;
  while (ok(m + 1)) ++m;
  return m;
}

struct Enumerator {
  const Fan& fan;
  const PLFunction& phi;
  FastFan ff;
  std::vector<int32_t> spf;
  long bound = 0;  // product bound M

  // log-threshold data, D-scaled: accept iff D*log H <= logThresh.
  std::vector<long double> logThresholds;
  std::vector<Rational> thresholds;

  Enumerator(const Fan& f, const PLFunction& p) : fan(f), phi(p), ff(buildFastFan(f, p)) {}

  // D-scaled log of the height of (a1/b1 [, a2/b2]); coordinates positive.
  // Borderline decisions fall back to the exact comparator.
  long double scaledLogHeight(const std::array<std::array<long, 2>, 2>& coords,
                              std::vector<PrimeVal>* scratch) const {
    const int d = ff.d;
    long double logH = 0;
    // Finite places.
    std::vector<PrimeVal> fac[2][2];
    for (int i = 0; i < d; ++i) {
      factorize(coords[static_cast<size_t>(i)][0], spf, fac[i][0]);
      factorize(coords[static_cast<size_t>(i)][1], spf, fac[i][1]);
    }
    scratch->clear();
    auto addPrime = [&](long p, int v, int coordIdx) {
      for (auto& pv : *scratch)
        if (pv.p == p) {
          // encode valuations of both coordinates in one pass below
          (void)coordIdx;
          return;
        }
      scratch->push_back({p, 0});
    };
    for (int i = 0; i < d; ++i) {
      for (const auto& pv : fac[i][0]) addPrime(pv.p, pv.v, i);
      for (const auto& pv : fac[i][1]) addPrime(pv.p, pv.v, i);
    }
    for (auto& pv : *scratch) {
      std::array<long, 2> n = {0, 0};
      for (int i = 0; i < d; ++i) {
        for (const auto& f : fac[i][0])
          if (f.p == pv.p) n[static_cast<size_t>(i)] += f.v;
        for (const auto& f : fac[i][1])
          if (f.p == pv.p) n[static_cast<size_t>(i)] -= f.v;
      }
      if (n[0] == 0 && n[1] == 0) continue;
      long e = ff.scaledValue(n);
      logH += static_cast<long double>(e) * std::log(static_cast<long double>(pv.p));
    }
    // Archimedean place: locate the cone of (log|x_i|) by facet signs.
    std::array<long double, 2> logx = {0, 0};
    for (int i = 0; i < d; ++i)
      logx[static_cast<size_t>(i)] =
          std::log(static_cast<long double>(coords[static_cast<size_t>(i)][0])) -
          std::log(static_cast<long double>(coords[static_cast<size_t>(i)][1]));
    for (const auto& c : ff.cones) {
      bool inside = true;
      for (int r = 0; r < d; ++r) {
        long double s = 0;
        for (int t = 0; t < d; ++t) s += static_cast<long double>(c.adj[static_cast<size_t>(r)][static_cast<size_t>(t)]) * logx[static_cast<size_t>(t)];
        if (s < -1e-15L) {
          inside = false;
          break;
        }
      }
      if (inside) {
        for (int t = 0; t < d; ++t)
          logH += static_cast<long double>(c.form[static_cast<size_t>(t)]) * logx[static_cast<size_t>(t)];
        return logH;
      }
    }
    throw Error("internal", "archimedean cone location failed");
  }

  TorusPoint makePoint(const std::array<std::array<long, 2>, 2>& coords,
                       const std::array<int, 2>& signs) const {
    TorusPoint x;
    for (int i = 0; i < ff.d; ++i)
      x.push_back(Rational(signs[static_cast<size_t>(i)] * coords[static_cast<size_t>(i)][0],
                           coords[static_cast<size_t>(i)][1]));
    return x;
  }
};

}  // namespace

std::vector<CountRow> countPoints(const Fan& fan, const PLFunction& phi,
                                  std::vector<Rational> thresholds, int threads) {
  const int d = fan.rank();
  if (d > 2) throw Error("dimension-unsupported", "enumeration supports rank <= 2");
  if (thresholds.empty()) throw Error("empty-thresholds");
  std::sort(thresholds.begin(), thresholds.end());

  Rational c1 = oneNormConstant(fan, phi);
  if (c1 <= 0)
    throw Error("count-infinite-risk", "PL function is not positive; the count diverges");

  Enumerator en(fan, phi);
  Rational bMax = thresholds.back();
  en.bound = productBound(bMax, c1);
  en.thresholds = thresholds;
  const long double scaleD = static_cast<long double>(en.ff.scaleD);
  for (const auto& b : thresholds)
    en.logThresholds.push_back(scaleD * std::log(static_cast<long double>(toDouble(b))));
  if (en.bound >= 1) en.spf = spfSieve(en.bound);

  const size_t nt = thresholds.size();
  const int nThreads = std::max(1, threads);
  std::vector<std::vector<long long>> buckets(static_cast<size_t>(nThreads),
                                              std::vector<long long>(nt, 0));

  // Assigns a point (with multiplicity 2^d for the sign choices) to the
  // smallest threshold that admits it; borderline via the exact comparator.
  auto record = [&](Enumerator& e, const std::array<std::array<long, 2>, 2>& coords,
                    std::vector<PrimeVal>* scratch, std::vector<long long>& bucket) {
    long double logH = e.scaledLogHeight(coords, scratch);
    const long double margin = 1e-9L * std::max(1.0L, std::abs(e.logThresholds.back()));
    size_t lo = 0;
    // Find first threshold with logH <= logThresh (monotone).
    while (lo < nt && logH > e.logThresholds[lo] + margin) ++lo;
    if (lo < nt && logH > e.logThresholds[lo] - margin) {
      // Unclear at float precision: decide exactly.
      TorusPoint x = e.makePoint(coords, {1, 1});
      while (lo < nt && compareHeight(x, phi, e.thresholds[lo]) > 0) ++lo;
    }
    if (lo < nt) bucket[lo] += (e.ff.d == 1) ? 2 : 4;
  };

  auto worker = [&](int tid) {
    std::vector<PrimeVal> scratch;
    const long M = en.bound;
    if (d == 1) {
      for (long b = 1 + tid; b <= M; b += nThreads) {
        long aMax = M / b;
        for (long a = 1; a <= aMax; ++a) {
          if (std::gcd(a, b) != 1) continue;
          record(en, {{{a, b}, {0, 1}}}, &scratch, buckets[static_cast<size_t>(tid)]);
        }
      }
    } else {
      for (long b1 = 1 + tid; b1 <= M; b1 += nThreads) {
        for (long a1 = 1; a1 <= M / b1; ++a1) {
          if (std::gcd(a1, b1) != 1) continue;
          long m1 = a1 * b1;
          long M2 = M / m1;
          for (long b2 = 1; b2 <= M2; ++b2) {
            long a2Max = M2 / b2;
            for (long a2 = 1; a2 <= a2Max; ++a2) {
              if (std::gcd(a2, b2) != 1) continue;
              record(en, {{{a1, b1}, {a2, b2}}}, &scratch, buckets[static_cast<size_t>(tid)]);
            }
          }
        }
      }
    }
  };

  if (nThreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nThreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  std::vector<CountRow> rows;
  long long acc = 0;
  for (size_t j = 0; j < nt; ++j) {
    for (int t = 0; t < nThreads; ++t) acc += buckets[static_cast<size_t>(t)][j];
    rows.push_back({thresholds[j], acc, 0});
  }
  return rows;
}

void enumerateBoundedPoints(const Fan& fan, const PLFunction& phi, const Rational& bound,
                            const std::function<void(const TorusPoint&, double)>& fn) {
  const int d = fan.rank();
  if (d > 2) throw Error("dimension-unsupported");
  Rational c1 = oneNormConstant(fan, phi);
  if (c1 <= 0) throw Error("count-infinite-risk");

  Enumerator en(fan, phi);
  en.bound = productBound(bound, c1);
  if (en.bound >= 1) en.spf = spfSieve(en.bound);
  const long double logB = static_cast<long double>(en.ff.scaleD) *
                           std::log(static_cast<long double>(toDouble(bound)));
  const long double margin = 1e-9L * std::max(1.0L, std::abs(logB));

  std::vector<PrimeVal> scratch;
  auto visit = [&](const std::array<std::array<long, 2>, 2>& coords) {
    long double logH = en.scaledLogHeight(coords, &scratch);
    bool accept;
    if (logH <= logB - margin)
      accept = true;
    else if (logH > logB + margin)
      accept = false;
    else
      accept = compareHeight(en.makePoint(coords, {1, 1}), phi, bound) <= 0;
    if (!accept) return;
    double h = static_cast<double>(std::exp(logH / en.ff.scaleD));
    if (d == 1) {
      fn(en.makePoint(coords, {1, 1}), h);
      fn(en.makePoint(coords, {-1, 1}), h);
    } else {
      for (int s1 = -1; s1 <= 1; s1 += 2)
        for (int s2 = -1; s2 <= 1; s2 += 2) fn(en.makePoint(coords, {s1, s2}), h);
    }
  };

  const long M = en.bound;
  if (d == 1) {
    for (long b = 1; b <= M; ++b)
      for (long a = 1; a <= M / b; ++a) {
        if (std::gcd(a, b) != 1) continue;
        visit({{{a, b}, {0, 1}}});
      }
  } else {
    for (long b1 = 1; b1 <= M; ++b1)
      for (long a1 = 1; a1 <= M / b1; ++a1) {
        if (std::gcd(a1, b1) != 1) continue;
        long M2 = M / (a1 * b1);
        for (long b2 = 1; b2 <= M2; ++b2)
          for (long a2 = 1; a2 <= M2 / b2; ++a2) {
            if (std::gcd(a2, b2) != 1) continue;
            visit({{{a1, b1}, {a2, b2}}});
          }
      }
  }
}

FitResult fitExponents(const std::vector<CountRow>& table) {
  std::vector<std::pair<double, double>> usable;  // (B, N)
  for (const auto& row : table) {
    double b = toDouble(row.B);
    if (row.N > 0 && b > std::exp(1.0)) usable.emplace_back(b, static_cast<double>(row.N));
  }
  if (usable.size() < 4) throw Error("insufficient-data", "need at least four usable rows");
  double bMin = usable.front().first, bMax = usable.front().first;
  for (const auto& [b, n] : usable) {
    bMin = std::min(bMin, b);
    bMax = std::max(bMax, b);
  }
  if (bMax < 100.0 * bMin)
    throw Error("insufficient-data", "need at least two decades of B");

  Eigen::MatrixXd A(static_cast<Eigen::Index>(usable.size()), 3);
  Eigen::VectorXd y(static_cast<Eigen::Index>(usable.size()));
  for (size_t i = 0; i < usable.size(); ++i) {
    double lb = std::log(usable[i].first);
    A(static_cast<Eigen::Index>(i), 0) = lb;
    A(static_cast<Eigen::Index>(i), 1) = std::log(lb);
    A(static_cast<Eigen::Index>(i), 2) = 1.0;
    y(static_cast<Eigen::Index>(i)) = std::log(usable[i].second);
  }
  Eigen::VectorXd sol = A.colPivHouseholderQr().solve(y);
  FitResult fit;
  fit.a = sol(0);
  fit.b = sol(1) + 1.0;
  fit.c = std::exp(sol(2));
  fit.residual = std::sqrt((A * sol - y).squaredNorm() / static_cast<double>(usable.size()));
  return fit;
}

Rational tauberianConstant(const Rational& a, int b, const Rational& g) {
  if (b < 1) throw Error("bad-pole-order", "pole order must be a positive integer");
  if (a <= 0) throw Error("bad-pole-order", "abscissa must be positive");
  return g / (a * Rational(factorial(b - 1)));
}

double zetaPartialSum(const Fan& fan, const PLFunction& phi, double s, const Rational& bound) {
  if (s <= 0) throw Error("bad-exponent", "s must be positive");
  double total = 0;
  enumerateBoundedPoints(fan, phi, bound,
                         [&](const TorusPoint&, double h) { total += std::pow(h, -s); });
  return total;
}

}  // namespace toric
