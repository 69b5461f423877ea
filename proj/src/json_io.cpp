#include "witt/json_io.hpp"

#include <string>

#include "witt/text.hpp"

namespace witt {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object", j.dump(), 0);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'", key, 0);
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field '") + key + "' must be an array", a.dump(), 0);
  return a;
}

std::vector<Rational> rationals(const Json& a) {
  if (!a.is_array()) throw ParseError("expected an array of rationals", a.dump(), 0);
  std::vector<Rational> out;
  for (const auto& v : a) out.push_back(rational_from_json(v));
  return out;
}

Json rational_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(to_json(r));
  return a;
}

std::string string_field(const Json& j, const char* key) {
  const Json& s = field(j, key);
  if (!s.is_string()) throw ParseError(std::string("field '") + key + "' must be a string", s.dump(), 0);
  return s.get<std::string>();
}

Json optional_rational(const std::optional<Rational>& r) { return r ? to_json(*r) : Json(nullptr); }

}  // namespace

Json parse_json(std::string_view s) {
  try {
    return Json::parse(s);
  } catch (const Json::parse_error& e) {
    std::size_t pos = e.byte > 0 ? e.byte - 1 : 0;
    std::string token = pos < s.size() ? std::string(1, s[pos]) : std::string("<end>");
    throw ParseError("malformed JSON", token, pos);
  }
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational string", j.dump(), 0);
}

Json to_json(const OnePointLocal& p) { return Json{{"x", to_json(p.x)}, {"coeffs", rational_array(p.coeffs)}}; }

Json to_json(const LocalFunction& chi) {
  Json pts = Json::array();
  for (const auto& p : chi.points()) pts.push_back(to_json(p));
  return Json{{"tag", to_string(chi.tag())}, {"points", pts}, {"central", "0"}};
}

LocalFunction local_function_from_json(const Json& j) {
  AlgebraTag tag = parse_tag(string_field(j, "tag"));
  std::vector<OnePointLocal> pts;
  for (const auto& p : array_field(j, "points"))
    pts.emplace_back(rational_from_json(field(p, "x")), rationals(field(p, "coeffs")));
  Rational central(0);
  if (j.contains("central")) central = rational_from_json(j.at("central"));
  return LocalFunction(tag, std::move(pts), central);
}

Json to_json(const FactoredPoly& f) {
  Json roots = Json::array();
  for (const auto& [x, m] : f.roots()) roots.push_back(Json::array({to_json(x), m}));
  Json j{{"roots", roots}};
  if (f.scalar() != Rational(1)) j["scalar"] = to_json(f.scalar());
  if (f.t_power() != 0) j["t_power"] = f.t_power();
  return j;
}

FactoredPoly factored_from_json(const Json& j) {
  std::vector<FactoredPoly::Root> roots;
  for (const auto& r : array_field(j, "roots")) {
    if (!r.is_array() || r.size() != 2 || !r[1].is_number_integer())
      throw ParseError("a root is [\"x\", multiplicity]", r.dump(), 0);
    roots.emplace_back(rational_from_json(r[0]), r[1].get<int>());
  }
  Rational scalar(1);
  int tp = 0;
  if (j.contains("scalar")) scalar = rational_from_json(j.at("scalar"));
  if (j.contains("t_power")) tp = j.at("t_power").get<int>();
  return FactoredPoly(std::move(roots), scalar, tp);
}

Json to_json(const SubalgebraPresentation& k) {
  Json gens = Json::array();
  for (const auto& g : k.generators) gens.push_back(format_vir_element(g));
  return Json{{"f0", to_json(k.f0)}, {"generators", gens}, {"tag", to_string(k.tag)}};
}

SubalgebraPresentation presentation_from_json(const Json& j) {
  SubalgebraPresentation k;
  k.tag = j.contains("tag") ? parse_tag(string_field(j, "tag")) : AlgebraTag::W;
  k.f0 = factored_from_json(field(j, "f0"));
  if (j.contains("generators"))
    for (const auto& g : array_field(j, "generators")) {
      if (!g.is_string()) throw ParseError("generators are strings", g.dump(), 0);
      k.generators.push_back(parse_vir_element(g.get<std::string>(), k.tag));
    }
  return k;
}

Json to_json(const ClassificationCode& c) {
  return Json{{"code", c.code},          {"f", to_json(c.f)},
              {"x", optional_rational(c.x)}, {"y", optional_rational(c.y)},
              {"alpha", optional_rational(c.alpha)}, {"beta", optional_rational(c.beta)}};
}

ClassificationCode classification_from_json(const Json& j) {
  ClassificationCode c;
  c.code = string_field(j, "code");
  if (j.contains("f")) c.f = factored_from_json(j.at("f"));
  auto opt = [&](const char* key, std::optional<Rational>& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = rational_from_json(j.at(key));
  };
  opt("x", c.x);
  opt("y", c.y);
  opt("alpha", c.alpha);
  opt("beta", c.beta);
  return c;
}

Json to_json(const NVector& v) { return Json{{"x", to_json(v.x)}, {"coeffs", rational_array(v.coeffs)}}; }

NVector nvector_from_json(const Json& j) {
  return NVector(rational_from_json(field(j, "x")), rationals(field(j, "coeffs")));
}

Json to_json(const JetQ& s) {
  std::vector<Rational> c;
  for (int k = 0; k <= s.order(); ++k) c.push_back(s[k]);
  return Json{{"x", to_json(s.base())}, {"coeffs", rational_array(c)}};
}

Json to_json(const CanonicalForm& cf) {
  const char* parity = cf.parity == CanonicalForm::Case::Even ? "even" : cf.parity == CanonicalForm::Case::Odd ? "odd" : "one";
  return Json{{"order", cf.order}, {"case", parity},
              {"c", to_json(cf.c)}, {"b", optional_rational(cf.b)},
              {"form", to_json(cf.form)}, {"witness", to_json(cf.witness.jet())}};
}

Json to_json(const OrbitInvariant& inv) {
  Json comps = Json::array();
  for (const auto& c : inv.components)
    comps.push_back(Json{{"order", c.order},
                         {"at_origin", c.at_origin},
                         {"value", optional_rational(c.value)},
                         {"leading", optional_rational(c.leading)}});
  return Json{{"tag", to_string(inv.tag)}, {"components", comps}};
}

Json to_json(const ZExpression& e) {
  Json terms = Json::array();
  for (const auto& t : e.terms) terms.push_back(Json{{"coeff", to_json(t.coeff)}, {"p", t.p}, {"q", t.q}});
  return Json{{"f", format_laurent(e.f)}, {"d", e.d}, {"q1", e.q1}, {"q2", e.q2}, {"terms", terms}};
}

}  // namespace witt
