#include "conclab/json.hpp"

#include <algorithm>
#include <sstream>

#include "conclab/error.hpp"
#include "conclab/parse.hpp"

namespace conclab {
namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Schema, path + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string child(const std::string& path, const char* key) { return path + "." + key; }
std::string child(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

long long_from_json(const Json& j, const std::string& path) {
  Integer z = integer_from_json(j, path);
  auto v = to_int64(z);
  if (!v) schema_error(path, "integer out of range");
  return static_cast<long>(*v);
}

// Errors raised while decoding carry the path of the offending value.
template <class F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Schema) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

}  // namespace

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return with_path(path, [&] { return parse_rational(j.get<std::string>()); });
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(Integer(std::to_string(j.get<std::uint64_t>())))
                                  : Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  schema_error(path, "expected a rational as a \"p/q\" string or an integer");
}

Json integer_to_json(const Integer& z) {
  if (auto v = to_int64(z)) return *v;
  return z.get_str();
}

Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return with_path(path, [&] { return parse_integer(j.get<std::string>()); });
  schema_error(path, "expected an integer");
}

Json to_json(const LaurentPoly& f) {
  Json coeffs = Json::array();
  for (const auto& [e, c] : f.terms()) coeffs.push_back(Json::array({e, integer_to_json(c)}));
  return Json{{"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return with_path(path, [&] { return resolve_polynomial(j.get<std::string>()); });
  const Json& coeffs = expect_array(field(j, "coeffs", path), child(path, "coeffs"));
  LaurentPoly::Terms terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string p = child(child(path, "coeffs"), i);
    const Json& pair = coeffs[i];
    if (!pair.is_array() || pair.size() != 2) schema_error(p, "expected [exponent, coefficient]");
    long e = long_from_json(pair[0], child(p, std::size_t{0}));
    if (e > (1L << 20) || e < -(1L << 20)) schema_error(child(p, std::size_t{0}), "exponent out of range");
    if (terms.count(static_cast<int>(e)) != 0) schema_error(p, "duplicate exponent");
    terms[static_cast<int>(e)] = integer_from_json(pair[1], child(p, 1));
  }
  return LaurentPoly(std::move(terms));
}

AlexanderPolynomial alexander_from_json(const Json& j, const std::string& path) {
  LaurentPoly raw = laurent_from_json(j, path);
  auto a = normalize_alexander(raw).alexander();
  if (!a) throw Error(ErrorCode::NotNormalized, path + ": '" + to_string(raw) + "' is not an Alexander polynomial");
  return *a;
}

Json to_json(const PolySet& d) {
  Json polys = Json::array();
  for (const auto& f : d.polys()) polys.push_back(to_json(f.poly()));
  return Json{{"polys", polys}};
}

PolySet polyset_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return with_path(path, [&] { return parse_polyset(j.get<std::string>()); });
  const Json& polys = expect_array(field(j, "polys", path), child(path, "polys"));
  std::vector<AlexanderPolynomial> out;
  for (std::size_t i = 0; i < polys.size(); ++i) out.push_back(alexander_from_json(polys[i], child(child(path, "polys"), i)));
  return with_path(path, [&] { return PolySet(std::move(out)); });
}

Json to_json(const PrimeSetComplement& p) {
  Json excluded = Json::array();
  for (const auto& q : p.excluded) excluded.push_back(integer_to_json(q));
  Json orders = Json::array();
  for (const auto& r : p.orders) orders.push_back(integer_to_json(r));
  return Json{{"d", p.d}, {"excluded", excluded}, {"orders", orders}};
}

Json to_json(const SeifertMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.size(); ++k) row.push_back(rational_to_json(a.matrix()(i, k)));
    rows.push_back(row);
  }
  return Json{{"label", a.label()}, {"matrix", rows}};
}

SeifertMatrix seifert_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) return with_path(path, [&] { return parse_knot(j.get<std::string>()); });
  const std::string mp = child(path, "matrix");
  const Json& rows = expect_array(field(j, "matrix", path), mp);
  const std::size_t n = rows.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = expect_array(rows[i], child(mp, i));
    if (row.size() != n) schema_error(child(mp, i), "matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(row[k], child(child(mp, i), k));
  }
  std::string label;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) schema_error(child(path, "label"), "expected a string");
    label = it->get<std::string>();
  }
  return SeifertMatrix(std::move(m), std::move(label));
}

Json to_json(const Position& p) {
  if (p.is_exact()) return rational_to_json(p.lo);
  return Json{{"lo", rational_to_json(p.lo)}, {"hi", rational_to_json(p.hi)}};
}

Position position_from_json(const Json& j, const std::string& path) {
  if (j.is_object()) {
    Position p{rational_from_json(field(j, "lo", path), child(path, "lo")),
               rational_from_json(field(j, "hi", path), child(path, "hi"))};
    if (p.hi < p.lo) schema_error(path, "lo exceeds hi");
    return p;
  }
  return Position::exact_at(rational_from_json(j, path));
}

Json to_json(const JumpFunction& f) {
  Json jumps = Json::array();
  for (const auto& j : f.jumps) jumps.push_back(Json{{"position", to_json(j.position)}, {"value", j.value}});
  return Json{{"ambient_period", rational_to_json(f.ambient_period)},
              {"exactness", f.exact ? "exact" : "numeric"},
              {"jumps", jumps},
              {"precision", f.precision}};
}

JumpFunction jump_function_from_json(const Json& j, const std::string& path) {
  JumpFunction f;
  f.ambient_period = rational_from_json(field(j, "ambient_period", path), child(path, "ambient_period"));
  if (f.ambient_period <= 0) schema_error(child(path, "ambient_period"), "must be positive");
  const std::string jp = child(path, "jumps");
  const Json& jumps = expect_array(field(j, "jumps", path), jp);
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    const std::string p = child(jp, i);
    Jump jump;
    jump.position = position_from_json(field(jumps[i], "position", p), child(p, "position"));
    jump.value = long_from_json(field(jumps[i], "value", p), child(p, "value"));
    if (jump.position.lo < 0 || jump.position.hi > f.ambient_period) {
      schema_error(child(p, "position"), "outside [0, ambient_period)");
    }
    f.jumps.push_back(std::move(jump));
  }
  std::sort(f.jumps.begin(), f.jumps.end(), [](const Jump& a, const Jump& b) {
    return a.position.lo != b.position.lo ? a.position.lo < b.position.lo : a.position.hi < b.position.hi;
  });
  f.exact = std::all_of(f.jumps.begin(), f.jumps.end(), [](const Jump& x) { return x.position.is_exact(); });
  if (auto it = j.find("exactness"); it != j.end()) {
    if (!it->is_string() || (*it != "exact" && *it != "numeric")) {
      schema_error(child(path, "exactness"), "expected \"exact\" or \"numeric\"");
    }
    if (*it == "numeric") f.exact = false;
  }
  if (auto it = j.find("precision"); it != j.end()) {
    f.precision = static_cast<unsigned>(long_from_json(*it, child(path, "precision")));
  }
  return f;
}

Json to_json(const PeriodResult& p) {
  Json out{{"kind", to_string(p.kind)}};
  switch (p.kind) {
    case PeriodResult::Kind::Exact: out["minimal_period"] = rational_to_json(p.c0); break;
    case PeriodResult::Kind::ZeroFunction: out["minimal_period"] = nullptr; break;
    case PeriodResult::Kind::NumericUnknown:
      out["minimal_period"] = nullptr;
      out["estimate"] = rational_to_json(p.c0);
      break;
  }
  return out;
}

Json to_json(const FiniteAbelianGroup& g) { return Json{{"invariant_factors", g.invariant_factors()}}; }

FiniteAbelianGroup group_from_json(const Json& j, const std::string& path) {
  const std::string fp = child(path, "invariant_factors");
  const Json& f = expect_array(field(j, "invariant_factors", path), fp);
  std::vector<long> factors;
  for (std::size_t i = 0; i < f.size(); ++i) factors.push_back(long_from_json(f[i], child(fp, i)));
  return with_path(fp, [&] { return FiniteAbelianGroup(std::move(factors)); });
}

Json element_to_json(const Element& e) { return Json(e); }

Element element_from_json(const Json& j, const FiniteAbelianGroup& g, const std::string& path) {
  Element e;
  if (j.is_number_integer() && g.rank() == 1) {
    e.push_back(long_from_json(j, path));
  } else {
    const Json& arr = expect_array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) e.push_back(long_from_json(arr[i], child(path, i)));
  }
  if (e.size() != g.rank()) schema_error(path, "element has " + std::to_string(e.size()) + " coordinates, group rank is " + std::to_string(g.rank()));
  return g.reduce(std::move(e));
}

std::string element_key(const Element& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(e[i]);
  }
  return out;
}

Element element_from_key(const std::string& key, const FiniteAbelianGroup& g, const std::string& path) {
  Element e;
  if (!key.empty()) {
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        long v = std::stol(part, &used);
        if (used != part.size()) schema_error(path, "malformed element key \"" + key + "\"");
        e.push_back(v);
      } catch (const std::logic_error&) {
        schema_error(path, "malformed element key \"" + key + "\"");
      }
    }
  }
  if (e.size() != g.rank()) schema_error(path, "element key \"" + key + "\" does not match the group rank");
  if (!g.contains(e)) schema_error(path, "element key \"" + key + "\" has a coordinate outside [0, d_i)");
  return e;
}

Json to_json(const Subgroup& s) {
  Json gens = Json::array();
  for (const auto& e : s.generators) gens.push_back(element_to_json(e));
  Json elems = Json::array();
  for (const auto& e : s.elements) elems.push_back(element_to_json(e));
  return Json{{"elements", elems}, {"generators", gens}, {"order", s.order}};
}

Json to_json(const VSequence& v) { return Json{{"values", v.values()}}; }

VSequence vsequence_from_json(const Json& j, const std::string& path) {
  const Json& arr = j.is_array() ? j : field(j, "values", path);
  const std::string vp = j.is_array() ? path : child(path, "values");
  expect_array(arr, vp);
  std::vector<long> v;
  for (std::size_t i = 0; i < arr.size(); ++i) v.push_back(long_from_json(arr[i], child(vp, i)));
  return with_path(vp, [&] { return VSequence(std::move(v)); });
}

Json to_json(const DTable& t) {
  Json values = Json::object();
  for (const auto& [e, v] : t.values) values[element_key(e)] = rational_to_json(v);
  return Json{{"group", to_json(t.group)}, {"provenance", t.provenance}, {"values", values}};
}

DTable dtable_from_json(const Json& j, const std::string& path) {
  DTable t;
  t.group = group_from_json(field(j, "group", path), child(path, "group"));
  const std::string vp = child(path, "values");
  const Json& values = field(j, "values", path);
  if (!values.is_object()) schema_error(vp, "expected an object keyed by element");
  for (const auto& [key, v] : values.items()) {
    const std::string p = vp + "[\"" + key + "\"]";
    Element e = element_from_key(key, t.group, p);
    if (t.values.count(e) != 0) schema_error(p, "duplicate element");
    t.values[e] = rational_from_json(v, p);
  }
  if (auto it = j.find("provenance"); it != j.end()) {
    if (!it->is_string()) schema_error(child(path, "provenance"), "expected a string");
    t.provenance = it->get<std::string>();
  }
  return t;
}

Json to_json(const VanishingResult& r) {
  Json candidates = Json::array();
  for (const auto& s : r.candidates) candidates.push_back(to_json(s));
  Json failures = Json::array();
  for (const auto& [idx, e] : r.failures) failures.push_back(Json{{"candidate", idx}, {"element", element_to_json(e)}});
  Json missing = Json::array();
  for (const auto& e : r.missing) missing.push_back(element_to_json(e));
  return Json{{"candidates", candidates},
              {"failures", failures},
              {"missing", missing},
              {"order_is_square", r.order_is_square},
              {"outcome", to_string(r.outcome)},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
}

Json to_json(const PeriodCheck& c) {
  Json escaping = Json::array();
  for (const auto& p : c.escaping_primes) escaping.push_back(integer_to_json(p));
  return Json{{"escaping_primes", escaping},
              {"smallest_integer_period", integer_to_json(c.smallest_integer_period)},
              {"verdict", to_string(c.verdict)},
              {"witness", c.witness ? integer_to_json(*c.witness) : Json(nullptr)}};
}

Json to_json(const TopologicalReport& r) {
  return Json{{"check", r.check ? to_json(*r.check) : Json(nullptr)},
              {"covering_jump_function", to_json(r.covering)},
              {"d", r.d},
              {"excluded_primes", to_json(r.excluded)},
              {"m", r.m},
              {"minimal_period", to_json(r.period)},
              {"q", r.q},
              {"reason", r.reason},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const SurgeryModel& m) {
  return Json{{"core_polynomial", to_json(m.core_polynomial.poly())},
              {"h1_M", to_json(m.h1_M)},
              {"h1_M0_order", integer_to_json(m.h1_M0_order)},
              {"n", m.n},
              {"q", m.q}};
}

Json to_json(const SmoothReport& r) {
  return Json{{"dbar_mode", r.dbar_mode},
              {"dbar_table", r.dbar_table ? to_json(*r.dbar_table) : Json(nullptr)},
              {"excluded_primes", to_json(r.excluded)},
              {"metabolizer_test", to_json(r.vanishing)},
              {"reason", r.reason},
              {"surgery_model", to_json(r.model)},
              {"verdict", to_string(r.verdict)}};
}

PipelineInput pipeline_input_from_json(const Json& j, const std::string& path) {
  PipelineInput in;
  long m = long_from_json(field(j, "m", path), child(path, "m"));
  if (m < 1) schema_error(child(path, "m"), "m must be a positive integer");
  in.spec.m = static_cast<unsigned long>(m);
  if (auto it = j.find("J"); it != j.end()) in.spec.J = seifert_from_json(*it, child(path, "J"));
  if (auto it = j.find("J0_alexander"); it != j.end() && !it->is_null()) {
    in.spec.J0_alexander = alexander_from_json(*it, child(path, "J0_alexander"));
  }
  if (auto it = j.find("D"); it != j.end() && !it->is_null()) in.D = polyset_from_json(*it, child(path, "D"));
  if (auto it = j.find("dbar"); it != j.end() && !it->is_null()) in.dbar = dtable_from_json(*it, child(path, "dbar"));
  return in;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace conclab
