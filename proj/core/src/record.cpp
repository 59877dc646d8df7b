#include "twocenter/record.hpp"

#include "twocenter/errors.hpp"

#include <json.hpp>

#include <utility>

namespace twocenter {

namespace {

using Json = nlohmann::ordered_json;

Json rationalToJson(const Rational& x) {
  return Json{{"num", boost::multiprecision::numerator(x).str()},
              {"den", boost::multiprecision::denominator(x).str()}};
}

Rational rationalFromJson(const Json& j) {
  return Rational(BigInt(j.at("num").get<std::string>()),
                  BigInt(j.at("den").get<std::string>()));
}

const char* axisName(Axis a) { return a == Axis::Radial ? "radial" : "angular"; }

Axis axisFromName(const std::string& s) {
  if (s == "radial") return Axis::Radial;
  if (s == "angular") return Axis::Angular;
  throw DomainError("unknown axis tag: " + s);
}

template <class S>
Json factorToJson(const SeparatedFactor<S>& f, bool exact) {
  Json j;
  j["axis"] = axisName(f.axis);
  j["type"] = std::string(1, typeLabel(f.type));
  j["level"] = f.n;
  j["branch"] = f.branch;
  auto scalar = [exact](const S& x) -> Json {
    if constexpr (std::is_same_v<S, Rational>) {
      (void)exact;
      return rationalToJson(x);
    } else {
      (void)exact;
      return x;
    }
  };
  j["zeta"] = scalar(f.zeta);
  j["r"] = scalar(f.r);
  j["q"] = scalar(f.q);
  j["energy"] = scalar(f.energy);
  j["epsilon"] = scalar(f.epsilon);
  j["lambda"] = scalar(f.lambda);
  Json poly = Json::array();
  for (const auto& c : f.poly.coeffs()) poly.push_back(scalar(c));
  j["poly"] = std::move(poly);  // coefficients of u in powers of (x+1)
  return j;
}

template <class S>
SeparatedFactor<S> factorFromJson(const Json& j) {
  SeparatedFactor<S> f;
  f.axis = axisFromName(j.at("axis").get<std::string>());
  const std::string type = j.at("type").get<std::string>();
  const auto decoded = type.size() == 1 ? typeFromLabel(type[0]) : std::nullopt;
  if (!decoded) throw DomainError("unknown solution type tag: " + type);
  f.type = *decoded;
  f.n = j.at("level").get<int>();
  f.branch = j.at("branch").get<int>();
  auto scalar = [](const Json& v) -> S {
    if constexpr (std::is_same_v<S, Rational>) {
      return rationalFromJson(v);
    } else {
      return v.get<double>();
    }
  };
  f.zeta = scalar(j.at("zeta"));
  f.r = scalar(j.at("r"));
  f.q = scalar(j.at("q"));
  f.energy = scalar(j.at("energy"));
  f.epsilon = scalar(j.at("epsilon"));
  f.lambda = scalar(j.at("lambda"));
  std::vector<S> coeffs;
  for (const auto& c : j.at("poly")) coeffs.push_back(scalar(c));
  f.poly = Polynomial<S>(std::move(coeffs));
  return f;
}

Json mathieuToJson(const MathieuFactor& m) {
  const auto& c = m.characteristic;
  Json j;
  j["parity"] = c.parity == MathieuParity::Cosine ? "cosine" : "sine";
  j["order"] = c.order;
  j["p"] = c.p;
  j["value"] = c.value;
  j["fourier"] = c.fourier;
  j["truncation"] = c.truncation;
  return j;
}

MathieuFactor mathieuFromJson(const Json& j) {
  MathieuCharacteristic c;
  const std::string parity = j.at("parity").get<std::string>();
  if (parity == "cosine") c.parity = MathieuParity::Cosine;
  else if (parity == "sine") c.parity = MathieuParity::Sine;
  else throw DomainError("unknown parity tag: " + parity);
  c.order = j.at("order").get<int>();
  c.p = j.at("p").get<double>();
  c.value = j.at("value").get<double>();
  c.fourier = j.at("fourier").get<std::vector<double>>();
  c.truncation = j.at("truncation").get<int>();
  return MathieuFactor{std::move(c)};
}

Json solutionToJson(const ElementaryEigenfunction& sol) {
  Json j;
  j["z1"] = sol.z1;
  j["z2"] = sol.z2;
  j["r"] = sol.r;
  j["energy"] = sol.energy;
  j["lambda"] = sol.lambda;
  if (sol.z1Exact) j["z1_exact"] = rationalToJson(*sol.z1Exact);
  if (sol.z2Exact) j["z2_exact"] = rationalToJson(*sol.z2Exact);
  if (sol.rExact) j["r_exact"] = rationalToJson(*sol.rExact);
  if (sol.energyExact) j["energy_exact"] = rationalToJson(*sol.energyExact);
  if (sol.lambdaExact) j["lambda_exact"] = rationalToJson(*sol.lambdaExact);
  if (sol.normalization) j["normalization"] = *sol.normalization;
  j["radial"] = factorToJson(sol.radial, false);
  if (sol.radialExact) j["radial_exact"] = factorToJson(*sol.radialExact, true);
  if (sol.angularPoly) j["angular"] = factorToJson(*sol.angularPoly, false);
  if (sol.angularExact) j["angular_exact"] = factorToJson(*sol.angularExact, true);
  if (sol.angularMathieu) j["mathieu"] = mathieuToJson(*sol.angularMathieu);
  j["provenance"] = sol.provenance;
  return j;
}

ElementaryEigenfunction solutionFromJson(const Json& j) {
  ElementaryEigenfunction sol;
  sol.z1 = j.at("z1").get<double>();
  sol.z2 = j.at("z2").get<double>();
  sol.r = j.at("r").get<double>();
  sol.energy = j.at("energy").get<double>();
  sol.lambda = j.at("lambda").get<double>();
  if (j.contains("z1_exact")) sol.z1Exact = rationalFromJson(j.at("z1_exact"));
  if (j.contains("z2_exact")) sol.z2Exact = rationalFromJson(j.at("z2_exact"));
  if (j.contains("r_exact")) sol.rExact = rationalFromJson(j.at("r_exact"));
  if (j.contains("energy_exact")) sol.energyExact = rationalFromJson(j.at("energy_exact"));
  if (j.contains("lambda_exact")) sol.lambdaExact = rationalFromJson(j.at("lambda_exact"));
  if (j.contains("normalization")) sol.normalization = j.at("normalization").get<double>();
  sol.radial = factorFromJson<double>(j.at("radial"));
  if (j.contains("radial_exact")) sol.radialExact = factorFromJson<Rational>(j.at("radial_exact"));
  if (j.contains("angular")) sol.angularPoly = factorFromJson<double>(j.at("angular"));
  if (j.contains("angular_exact"))
    sol.angularExact = factorFromJson<Rational>(j.at("angular_exact"));
  if (j.contains("mathieu")) sol.angularMathieu = mathieuFromJson(j.at("mathieu"));
  if (j.contains("provenance")) sol.provenance = j.at("provenance").get<std::string>();
  return sol;
}

} // namespace

std::string solutionsToJson(const std::vector<ElementaryEigenfunction>& sols) {
  Json doc;
  doc["schema_version"] = 1;
  Json list = Json::array();
  for (const auto& sol : sols) list.push_back(solutionToJson(sol));
  doc["solutions"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::vector<ElementaryEigenfunction> solutionsFromJson(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed solution document: ") + e.what());
  }
  try {
    if (!doc.is_object() || doc.at("schema_version").get<int>() != 1)
      throw DomainError("unsupported solution document schema");
    std::vector<ElementaryEigenfunction> sols;
    for (const auto& s : doc.at("solutions")) sols.push_back(solutionFromJson(s));
    return sols;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed solution document: ") + e.what());
  }
}

} // namespace twocenter
