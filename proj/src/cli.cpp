#include "toric/cli.hpp"

#include "toric/io.hpp"
#include "toric/picard.hpp"
#include "toric/xfunction.hpp"
#include "toric/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace toric {

using nlohmann::json;

namespace {

std::vector<std::string> splitOn(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

VectorXq parseRationalVector(const std::string& s) {
  auto toks = splitOn(s, ',');
  VectorXq v(static_cast<Eigen::Index>(toks.size()));
  for (size_t i = 0; i < toks.size(); ++i) v[static_cast<Eigen::Index>(i)] = parseRational(toks[i]);
  return v;
}

VectorXz parseIntegerVector(const std::string& s) {
  auto toks = splitOn(s, ',');
  VectorXz v(static_cast<Eigen::Index>(toks.size()));
  for (size_t i = 0; i < toks.size(); ++i) v[static_cast<Eigen::Index>(i)] = Integer(toks[i]);
  return v;
}

std::vector<VectorXz> parseVectorList(const std::string& s) {
  std::vector<VectorXz> out;
  for (const auto& part : splitOn(s, ';')) out.push_back(parseIntegerVector(part));
  return out;
}

json vectorToJson(const VectorXz& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i].convert_to<long long>());
  return a;
}

json ratFuncToJson(const RatFunc& f) {
  auto names = stVariableNames(f.sVars(), f.tVars());
  json j;
  j["scalar"] = toString(f.scale());
  j["num"] = f.num().toString(names);
  json den = json::array();
  for (const auto& [l, k] : f.den()) {
    json factor;
    factor["form"] = l.toString(names);
    factor["power"] = k;
    den.push_back(factor);
  }
  j["den_factors"] = den;
  j["rendered"] = f.toString();
  return j;
}

std::vector<Rational> resolvePL(const FanFile& file, const Fan& fan, const std::string& spec) {
  auto named = file.plFunctions.find(spec);
  if (named != file.plFunctions.end()) return named->second;
  if (spec == "anticanonical")
    return std::vector<Rational>(static_cast<size_t>(fan.rayCount()), Rational(1));
  auto toks = splitOn(spec, ',');
  if (static_cast<int>(toks.size()) != fan.rayCount())
    throw Error("parse-error(pl)", "expected a named PL function or one value per ray");
  std::vector<Rational> u;
  for (const auto& t : toks) u.push_back(parseRational(t));
  return u;
}

int runValidate(const std::string& path, const std::string& format, std::ostream& out) {
  FanFile file = parseFanFile(path);
  auto violations = Fan::check(file.fan);
  if (violations.empty()) {
    Fan fan = Fan::validate(file.fan);
    if (format == "json") {
      json j;
      j["valid"] = true;
      j["rank"] = fan.rank();
      j["rays"] = fan.rayCount();
      j["max_cones"] = fan.maxCones().size();
      j["cones"] = fan.cones().size();
      j["projective"] = isProjective(fan);
      out << j.dump(2) << "\n";
    } else {
      out << "valid: rank " << fan.rank() << ", " << fan.rayCount() << " rays, "
          << fan.maxCones().size() << " maximal cones, "
          << (isProjective(fan) ? "projective" : "not projective") << "\n";
    }
    return 0;
  }
  if (format == "json") {
    json j;
    j["valid"] = false;
    json v = json::array();
    for (const auto& viol : violations) {
      json one;
      one["code"] = viol.code;
      one["message"] = viol.message;
      v.push_back(one);
    }
    j["violations"] = v;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& viol : violations) out << viol.code << ": " << viol.message << "\n";
  }
  return 2;
}

int runXfun(const std::string& coneSpec, const std::string& numericAt, std::uint64_t seed,
            int samples, const std::string& format, std::ostream& out) {
  auto gens = parseVectorList(coneSpec);
  if (gens.empty()) throw Error("parse-error(cone)", "no generators given");
  Cone c(static_cast<int>(gens[0].size()), gens);
  XFunction x = xFunction(c);
  json j;
  j["x_function"] = ratFuncToJson(x.value);
  if (!numericAt.empty()) {
    VectorXq s = parseRationalVector(numericAt);
    Eigen::VectorXd sd(s.size());
    for (Eigen::Index i = 0; i < s.size(); ++i) sd[i] = toDouble(s[i]);
    NumericEstimate est = numericX(c, sd, seed, samples);
    Rational symbolic = x.value.evaluate(s);
    j["numeric_check"] = {{"estimate", est.value},
                          {"stderr", est.stddev},
                          {"symbolic", toDouble(symbolic)},
                          {"seed", seed}};
  }
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "X(s) = " << x.value.toString() << "\n";
    if (!numericAt.empty()) {
      out << "numeric check at s=(" << numericAt << "): " << j["numeric_check"]["estimate"]
          << " +- " << j["numeric_check"]["stderr"]
          << " (symbolic " << j["numeric_check"]["symbolic"] << ")\n";
    }
  }
  return 0;
}

int runPicard(const std::string& path, const std::string& lSpec, const std::string& format,
              std::ostream& out) {
  FanFile file = parseFanFile(path);
  Fan fan = Fan::validate(file.fan);
  PicardLattice pic(fan);
  json j;
  j["rank"] = pic.rank();
  json gens = json::array();
  for (const auto& g : pic.effectiveCone().generators()) gens.push_back(vectorToJson(g));
  j["effective_cone_generators"] = gens;
  j["anticanonical"] = vectorToJson(pic.anticanonicalClass());
  json classes = json::array();
  for (const auto& c : pic.rayClasses()) classes.push_back(vectorToJson(c));
  j["ray_classes"] = classes;
  if (!lSpec.empty()) {
    VectorXq L = parseRationalVector(lSpec);
    LineBundleData data = lineBundleData(fan, pic, L);
    j["a"] = toString(data.a);
    j["b"] = data.b;
    json lambda = json::object();
    for (const auto& [ray, value] : data.lambda) lambda[std::to_string(ray)] = toString(value);
    j["lambda"] = lambda;
    j["I"] = data.I;
    j["J"] = data.J;
    json phi = json::array();
    for (const auto& v : data.phiValues) phi.push_back(toString(v));
    j["phi_L"] = phi;
  }
  if (format == "text") {
    out << "Picard rank: " << pic.rank() << "\n";
    out << "anticanonical class: " << j["anticanonical"].dump() << "\n";
    if (!lSpec.empty())
      out << "a(L) = " << j["a"].get<std::string>() << ", b(L) = " << j["b"].get<int>() << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return 0;
}

int runHeight(const std::string& path, const std::string& plSpec, const std::string& pointSpec,
              const std::string& format, std::ostream& out) {
  FanFile file = parseFanFile(path);
  Fan fan = Fan::validate(file.fan);
  PLFunction phi(fan, resolvePL(file, fan, plSpec));
  TorusPoint x;
  for (const auto& tok : splitOn(pointSpec, ',')) x.push_back(parseRational(tok));
  if (static_cast<int>(x.size()) != fan.rank())
    throw Error("parse-error(point)", "expected one coordinate per torus dimension");
  auto finite = finiteHeightFactors(x, phi);
  double arch = localHeightArch(x, phi);
  double total = globalHeight(x, phi);
  json j;
  json places = json::array();
  for (const auto& pp : finite) {
    json one;
    one["p"] = toString(pp.p);
    one["exponent"] = toString(pp.exponent);
    one["value"] = pp.toDouble();
    places.push_back(one);
  }
  j["finite_places"] = places;
  j["archimedean"] = arch;
  j["height"] = total;
  bool exact = true;
  for (const auto& pp : finite)
    if (!pp.isExact()) exact = false;
  VectorXq m = archExponents(x, phi);
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!isIntegral(m[i])) exact = false;
  if (exact) j["height_exact"] = toString(globalHeightExact(x, phi));
  if (format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "H(x) = " << total;
    if (exact) out << " = " << j["height_exact"].get<std::string>() << " exactly";
    out << "\n";
    for (const auto& pp : finite)
      out << "  p=" << toString(pp.p) << ": exponent " << toString(pp.exponent) << "\n";
    out << "  archimedean: " << arch << "\n";
  }
  return 0;
}

int runCount(const std::string& path, const std::string& lSpec, const std::string& grid,
             const std::string& outPath, int threads, std::ostream& out) {
  FanFile file = parseFanFile(path);
  Fan fan = Fan::validate(file.fan);
  PicardLattice pic(fan);
  VectorXq L = parseRationalVector(lSpec);
  LineBundleData data = lineBundleData(fan, pic, L);
  PLFunction phi(fan, data.phiValues);
  std::vector<Rational> thresholds;
  for (const auto& tok : splitOn(grid, ',')) thresholds.push_back(parseRational(tok));
  auto rows = countPoints(fan, phi, thresholds, threads);
  if (outPath.empty()) {
    emitCsv(rows, out);
  } else {
    std::ofstream f(outPath);
    if (!f) throw Error("io-error", "cannot write '" + outPath + "'");
    emitCsv(rows, f);
  }
  return 0;
}

int runFit(const std::string& path, const std::string& format, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw Error("io-error", "cannot open '" + path + "'");
  auto rows = parseCsv(in);
  FitResult fit = fitExponents(rows);
  if (format == "json") {
    json j;
    j["a_est"] = fit.a;
    j["b_est"] = fit.b;
    j["c_est"] = fit.c;
    j["residual"] = fit.residual;
    out << j.dump(2) << "\n";
  } else {
    out << "a_est = " << fit.a << ", b_est = " << fit.b << ", c_est = " << fit.c
        << " (rms residual " << fit.residual << ")\n";
  }
  return 0;
}

int runZetaLocal(const std::string& path, long p, const std::string& uSpec,
                 const std::string& format, std::ostream& out) {
  FanFile file = parseFanFile(path);
  Fan fan = Fan::validate(file.fan);
  std::vector<Rational> u;
  for (const auto& tok : splitOn(uSpec, ',')) u.push_back(parseRational(tok));
  Rational value = localZetaFactor(fan, u, Integer(p));
  if (format == "json") {
    json j;
    j["p"] = p;
    j["value"] = toString(value);
    j["value_double"] = toDouble(value);
    out << j.dump(2) << "\n";
  } else {
    out << toString(value) << "\n";
  }
  return 0;
}

int runTauberian(const std::string& a, int b, const std::string& g, const std::string& format,
                 std::ostream& out) {
  Rational value = tauberianConstant(parseRational(a), b, parseRational(g));
  if (format == "json") {
    json j;
    j["constant"] = toString(value);
    j["constant_double"] = toDouble(value);
    out << j.dump(2) << "\n";
  } else {
    out << toString(value) << "\n";
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact heights, X-functions and point counts on split toric varieties"};
  app.require_subcommand(1);
  std::string format;

  auto* validate = app.add_subcommand("validate", "check the fan axioms on a fan file");
  std::string validatePath;
  validate->add_option("fan", validatePath, "fan JSON file")->required();
  std::string validateFormat = "text";
  validate->add_option("--format", validateFormat, "json|text");

  auto* xfun = app.add_subcommand("xfun", "X-function of a cone");
  std::string coneSpec, numericAt;
  std::uint64_t seed = 1;
  int samples = 200000;
  std::string xfunFormat = "text";
  xfun->add_option("--cone", coneSpec, "generators, e.g. \"1,0;1,2\"")->required();
  xfun->add_option("--numeric", numericAt, "also Monte-Carlo check at this point");
  xfun->add_option("--seed", seed, "RNG seed for the numeric check");
  xfun->add_option("--samples", samples, "Monte-Carlo sample count");
  xfun->add_option("--format", xfunFormat, "json|text");

  auto* picard = app.add_subcommand("picard", "Picard lattice and line bundle invariants");
  std::string picardPath, lSpec;
  std::string picardFormat = "json";
  picard->add_option("fan", picardPath, "fan JSON file")->required();
  picard->add_option("-L,--line-bundle", lSpec, "divisor class in Picard coordinates");
  picard->add_option("--format", picardFormat, "json|text");

  auto* height = app.add_subcommand("height", "height of a rational torus point");
  std::string heightPath, plSpec, pointSpec;
  std::string heightFormat = "text";
  height->add_option("fan", heightPath, "fan JSON file")->required();
  height->add_option("--pl", plSpec, "PL function: name, 'anticanonical', or values")->required();
  height->add_option("--point", pointSpec, "rational coordinates, e.g. \"2/3,5\"")->required();
  height->add_option("--format", heightFormat, "json|text");

  auto* count = app.add_subcommand("count", "count rational points of bounded height");
  std::string countPath, countL, grid, outPath;
  int threads = 1;
  count->add_option("fan", countPath, "fan JSON file")->required();
  count->add_option("-L,--line-bundle", countL, "divisor class in Picard coordinates")->required();
  count->add_option("-B,--bounds", grid, "height bounds, e.g. \"1e3,1e4,1e5\"")->required();
  count->add_option("--out", outPath, "write CSV here instead of stdout");
  count->add_option("--threads", threads, "partitioned enumeration");

  auto* fit = app.add_subcommand("fit", "fit N(B) ~ c B^a (log B)^{b-1} to a count CSV");
  std::string fitPath;
  std::string fitFormat = "text";
  fit->add_option("csv", fitPath, "CSV file with header B,N,ties")->required();
  fit->add_option("--format", fitFormat, "json|text");

  auto* zetaLocal = app.add_subcommand("zeta-local", "exact local height integral");
  std::string zetaPath, uSpec;
  long prime = 0;
  std::string zetaFormat = "text";
  zetaLocal->add_option("fan", zetaPath, "fan JSON file")->required();
  zetaLocal->add_option("-p,--prime", prime, "prime")->required();
  zetaLocal->add_option("-u,--exponents", uSpec, "ray exponents, e.g. \"2,2\"")->required();
  zetaLocal->add_option("--format", zetaFormat, "json|text");

  auto* tauberian = app.add_subcommand("tauberian", "leading constant g/(a (b-1)!)");
  std::string ta, tg;
  int tb = 1;
  std::string tauberianFormat = "text";
  tauberian->add_option("-a", ta, "pole location")->required();
  tauberian->add_option("-b", tb, "pole order")->required();
  tauberian->add_option("-g", tg, "g(a)")->required();
  tauberian->add_option("--format", tauberianFormat, "json|text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) return runValidate(validatePath, validateFormat, out);
    if (xfun->parsed()) return runXfun(coneSpec, numericAt, seed, samples, xfunFormat, out);
    if (picard->parsed()) return runPicard(picardPath, lSpec, picardFormat, out);
    if (height->parsed()) return runHeight(heightPath, plSpec, pointSpec, heightFormat, out);
    if (count->parsed()) return runCount(countPath, countL, grid, outPath, threads, out);
    if (fit->parsed()) return runFit(fitPath, fitFormat, out);
    if (zetaLocal->parsed()) return runZetaLocal(zetaPath, prime, uSpec, zetaFormat, out);
    if (tauberian->parsed()) return runTauberian(ta, tb, tg, tauberianFormat, out);
  } catch (const Error& e) {
    err << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace toric
