// Copyright 2026 The Inose-MWL Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "inose/serialization.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "inose/errors.hpp"

namespace inose {
namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, std::string("json: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::ParseError, std::string("json: missing \"") + key + "\"");
  return j.at(key);
}

std::string str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(ErrorCode::ParseError, "json: expected an integer or string, got " + j.dump());
}

Json rational_json(const BigRational& q) {
  return Json::array({q.get_num().get_str(), q.get_den().get_str()});
}

BigRational rational_from(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    fail(ErrorCode::ParseError, "json: expected [num, den], got " + j.dump());
  BigInt num, den;
  if (num.set_str(str(j[0]), 10) != 0 || den.set_str(str(j[1]), 10) != 0)
    fail(ErrorCode::ParseError, "json: bad integer in " + j.dump());
  if (den == 0) fail(ErrorCode::ParseError, "json: zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

Json coords_json(const NFElement& x) {
  Json out = Json::array();
  for (const auto& q : x.coeffs()) out.push_back(rational_json(q));
  return out;
}

NFElement coords_from(const Json& j, const FieldTower& tower) {
  if (j.is_string()) return parse_element(tower, j.get<std::string>());
  if (!j.is_array() || j.size() != tower.degree())
    fail(ErrorCode::ParseError, "json: expected " + std::to_string(tower.degree()) +
                                    " coordinates, got " + j.dump());
  std::vector<BigRational> c;
  for (const auto& q : j) c.push_back(rational_from(q));
  return NFElement(tower, std::move(c));
}

Json tower_json(const FieldTower& tower) {
  Json out = Json::array();
  for (std::size_t s = 0; s < tower.num_steps(); ++s) {
    Json mp = Json::array();
    for (const auto& c : tower.minpoly(s)) mp.push_back(coords_json(c));
    out.push_back(Json{{"name", tower.generator_name(s)}, {"minpoly", mp}});
  }
  return out;
}

FieldTower tower_from(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "json: a tower is an array of steps");
  FieldTower tower;
  for (const auto& step : j) {
    const std::string name = str(field(step, "name"));
    const Json& mp = field(step, "minpoly");
    if (!mp.is_array() || mp.size() < 2)
      fail(ErrorCode::ParseError, "json: minpoly of " + name + " needs degree >= 1");
    std::vector<NFElement> coeffs;
    for (const auto& c : mp) coeffs.push_back(coords_from(c, tower));
    if (!coeffs.back().is_one())
      fail(ErrorCode::ParseError, "json: minpoly of " + name + " is not monic");
    tower = tower.extend(name, coeffs);
  }
  return tower;
}

Json poly_json(const UPoly& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(coords_json(x));
  return Json{{"var", p.var()}, {"coeffs", c}};
}

UPoly poly_from(const Json& j, const FieldTower& tower) {
  std::vector<NFElement> c;
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) fail(ErrorCode::ParseError, "json: coeffs must be an array");
  for (const auto& x : cs) c.push_back(coords_from(x, tower));
  return UPoly(tower, str(field(j, "var")), std::move(c));
}

Json ratfunc_json(const RatFunc& f) {
  return Json{{"num", poly_json(f.num())}, {"den", poly_json(f.den())}};
}

RatFunc ratfunc_from(const Json& j, const FieldTower& tower) {
  UPoly den = poly_from(field(j, "den"), tower);
  if (den.is_zero()) fail(ErrorCode::ParseError, "json: zero denominator");
  return RatFunc(poly_from(field(j, "num"), tower), std::move(den));
}

template <class F, class Enc>
Json curve_coeffs(const WeierstrassCurve<F>& e, Json out, Enc enc) {
  out["a1"] = enc(e.a1());
  out["a2"] = enc(e.a2());
  out["a3"] = enc(e.a3());
  out["a4"] = enc(e.a4());
  out["a6"] = enc(e.a6());
  return out;
}

Json curve_json(const Curve& e) {
  return curve_coeffs(e, Json{{"field", tower_json(e.a6().tower())}}, coords_json);
}

Curve curve_from(const Json& j) {
  const FieldTower tower = tower_from(field(j, "field"));
  auto get = [&](const char* k) { return coords_from(field(j, k), tower); };
  return Curve(get("a1"), get("a2"), get("a3"), get("a4"), get("a6"));
}

Json section_json(const Section& p) {
  if (p.is_infinity()) return Json{{"inf", true}};
  return Json{{"X", ratfunc_json(p.x())}, {"Y", ratfunc_json(p.y())}};
}

Section section_from(const Json& j, const FieldTower& tower) {
  if (j.is_object() && j.contains("inf") && j.at("inf").is_boolean() && j.at("inf").get<bool>())
    return Section::infinity();
  return Section::affine(ratfunc_from(field(j, "X"), tower), ratfunc_from(field(j, "Y"), tower));
}

Json surface_json(const SurfaceModel& s) {
  const FieldTower& tower = s.lambda.tower();
  Json curve = curve_coeffs(s.curve, Json{{"field", tower_json(tower)}}, ratfunc_json);
  return Json{{"n", s.n},
              {"variable", s.var},
              {"curve", curve},
              {"rescale", Json{{"lambda", coords_json(s.lambda)}, {"mu", coords_json(s.mu)}}}};
}

SurfaceModel surface_from(const Json& j) {
  const Json& c = field(j, "curve");
  const FieldTower tower = tower_from(field(c, "field"));
  auto get = [&](const char* k) { return ratfunc_from(field(c, k), tower); };
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) fail(ErrorCode::ParseError, "json: n must be an integer");
  const Json& r = field(j, "rescale");
  return SurfaceModel{n.get<int>(), str(field(j, "variable")),
                      FunctionCurve(get("a1"), get("a2"), get("a3"), get("a4"), get("a6")),
                      coords_from(field(r, "lambda"), tower), coords_from(field(r, "mu"), tower)};
}

std::string equation(const SurfaceModel& s) {
  return "Y^2 = X^3 + (" + s.curve.a4().to_string() + ") X + " + s.curve.a6().to_string();
}

Json matrix_json(const Matrix<BigRational>& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    out.push_back(r);
  }
  return out;
}

Json record_json(const SurfaceRecord& r) {
  Json fibers = Json::array();
  for (const auto& f : r.fibers)
    fibers.push_back(Json{{"place", f.place.to_string()},
                          {"degree", f.degree},
                          {"type", f.name()},
                          {"v_disc", f.v_disc}});
  Json sections = Json::array();
  for (const auto& b : r.basis) {
    Json s{{"name", b.name}, {"surface", r.label}};
    if (b.point.is_infinity()) {
      s["inf"] = true;
    } else {
      s["X"] = ratfunc_json(b.point.x());
      s["Y"] = ratfunc_json(b.point.y());
      s["text"] = "(" + b.point.x().to_string() + ", " + b.point.y().to_string() + ")";
    }
    s["provenance"] = b.provenance;
    sections.push_back(std::move(s));
  }
  Json out{{"label", r.label},
           {"equation", equation(r.model)},
           {"model", surface_json(r.model)},
           {"fibers", fibers},
           {"fiber_types", fiber_summary(r.fibers)},
           {"sections", sections}};
  if (!r.gram.empty()) {
    out["gram"] = matrix_json(r.gram);
    out["det"] = to_string(r.det);
  }
  return out;
}

std::string matrix_rows(const Matrix<BigRational>& m, const char* sep, const char* eol, const char* indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << indent;
    for (std::size_t k = 0; k < m[i].size(); ++k) os << (k ? sep : "") << to_string(m[i][k]);
    os << eol;
  }
  return os.str();
}

}  // namespace

std::string tower_to_json(const FieldTower& tower) { return tower_json(tower).dump(); }
FieldTower tower_from_json(const std::string& text) { return tower_from(parse(text)); }

std::string element_to_json(const NFElement& x) {
  return Json{{"tower", tower_json(x.tower())}, {"coeffs", coords_json(x)}}.dump();
}

NFElement element_from_json(const std::string& text) {
  const Json j = parse(text);
  return coords_from(field(j, "coeffs"), tower_from(field(j, "tower")));
}

std::string poly_to_json(const UPoly& p) { return poly_json(p).dump(); }
UPoly poly_from_json(const std::string& text, const FieldTower& tower) {
  return poly_from(parse(text), tower);
}

std::string ratfunc_to_json(const RatFunc& f) { return ratfunc_json(f).dump(); }
RatFunc ratfunc_from_json(const std::string& text, const FieldTower& tower) {
  return ratfunc_from(parse(text), tower);
}

std::string curve_to_json(const Curve& e) { return curve_json(e).dump(); }
Curve curve_from_json(const std::string& text) { return curve_from(parse(text)); }

std::string section_to_json(const Section& p) { return section_json(p).dump(); }
Section section_from_json(const std::string& text, const FieldTower& tower) {
  return section_from(parse(text), tower);
}

std::string surface_to_json(const SurfaceModel& s) { return surface_json(s).dump(); }
SurfaceModel surface_from_json(const std::string& text) { return surface_from(parse(text)); }

std::string family_to_json(const ThreeIsogenyFamily& fam) {
  return Json{{"a", coords_json(fam.a)},
              {"b", coords_json(fam.b)},
              {"E1", curve_json(fam.E1)},
              {"E2", curve_json(fam.E2)},
              {"phi_x", ratfunc_json(fam.phi.phi_x)},
              {"phi_y", ratfunc_json(fam.phi.phi_y)}}
      .dump();
}

std::string report_to_json(const ExampleReport& report) {
  Json facts = Json::array();
  for (const auto& [k, v] : report.facts) facts.push_back(Json{{"name", k}, {"value", v}});
  Json surfaces = Json::array();
  for (const auto& r : report.surfaces) surfaces.push_back(record_json(r));
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back(Json{{"id", c.id}, {"description", c.description}, {"pass", c.pass}, {"detail", c.detail}});
  Json out{{"example", report.name},
           {"field", report.field},
           {"facts", facts},
           {"surfaces", surfaces},
           {"checks", checks},
           {"passed", report.passed()}};
  return out.dump(2) + "\n";
}

std::string report_to_text(const ExampleReport& report) {
  std::ostringstream os;
  os << report.name << " over " << report.field << "\n";
  for (const auto& [k, v] : report.facts) os << "  " << k << ": " << v << "\n";
  for (const auto& r : report.surfaces) {
    os << "\n" << r.label << ": " << equation(r.model) << "\n";
    os << "  fibers: " << fiber_summary(r.fibers) << " (sum v(Delta) = " << discriminant_degree(r.fibers)
       << ")\n";
    for (const auto& f : r.fibers)
      os << "    " << f.name() << " at " << f.place.to_string()
         << (f.degree > 1 ? " (degree " + std::to_string(f.degree) + ")" : "") << "\n";
    for (const auto& b : r.basis) {
      os << "  " << b.name << " [" << b.provenance << "]";
      if (b.point.is_infinity())
        os << " O\n";
      else
        os << "\n    X = " << b.point.x().to_string() << "\n    Y = " << b.point.y().to_string() << "\n";
    }
    if (!r.gram.empty()) {
      os << "  Gram:\n" << matrix_rows(r.gram, "  ", "\n", "    ");
      os << "  det = " << to_string(r.det) << "\n";
    }
  }
  os << "\nchecks:\n";
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    passed += c.pass;
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << ": " << c.description;
    if (!c.pass && !c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  os << passed << "/" << report.checks.size() << " checks passed in " << std::fixed << std::setprecision(2)
     << report.seconds << " s\n";
  return os.str();
}

std::string report_to_latex(const ExampleReport& report) {
  std::ostringstream os;
  for (const auto& r : report.surfaces) {
    if (r.gram.empty()) continue;
    BigInt den = 1;
    for (const auto& row : r.gram)
      for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    os << "% " << report.name << " " << r.label << ", det = " << to_string(r.det) << "\n";
    if (den != 1) os << "\\frac{1}{" << den.get_str() << "}";
    os << "\\begin{pmatrix}\n";
    for (std::size_t i = 0; i < r.gram.size(); ++i) {
      os << "  ";
      for (std::size_t k = 0; k < r.gram[i].size(); ++k) {
        const BigRational q = r.gram[i][k] * den;
        os << (k ? " & " : "") << q.get_num().get_str();
      }
      os << (i + 1 < r.gram.size() ? " \\\\\n" : "\n");
    }
    os << "\\end{pmatrix}\n";
  }
  return os.str();
}

}  // namespace inose
