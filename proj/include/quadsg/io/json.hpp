#pragma once

// JSON encoding of scalars, forms, polynomials, instances, circuits and
// reports. Rationals travel as "p/q" strings.

#include <quadsg/pit.hpp>
#include <quadsg/sg.hpp>
#include <quadsg/structure.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace quadsg::io {

using json = nlohmann::json;

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

// ---- scalars ----

inline json to_json(const Rational& q) { return q.get_str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw FormatError("expected a rational string, got " + j.dump());
}

inline json to_json(const QuadExt& x) {
  return json{{"a", to_json(x.rational_part())}, {"b", to_json(x.irrational_part())}, {"m", x.m()}};
}

inline QuadExt quadext_from_json(const json& j) {
  if (!j.is_object()) return QuadExt(rational_from_json(j));
  return QuadExt(rational_from_json(field(j, "a")), rational_from_json(field(j, "b")), field(j, "m").get<long>());
}

// ---- polynomials ----

inline json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(json::array({m.exponents(p.n()), to_json(c)}));
  return json{{"n", p.n()}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const json& j) {
  std::size_t n = field(j, "n").get<std::size_t>();
  MultiPoly p(n);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw FormatError("'terms' must be an array");
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2) throw FormatError("term must be [exponents, coefficient]");
    auto e = t[0].get<std::vector<unsigned>>();
    if (e.size() != n) throw FormatError("exponent vector length differs from n");
    for (auto x : e)
      if (x > 255) throw FormatError("exponent too large");
    p.add_term(Monomial(e), rational_from_json(t[1]));
  }
  return p;
}

inline json to_json(const QuadraticForm& q) { return to_json(MultiPoly::from_quadratic(q)); }

inline QuadraticForm quadratic_from_json(const json& j) {
  if (j.is_object() && j.contains("gram")) {
    const json& g = j.at("gram");
    std::size_t n = g.size();
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!g[i].is_array() || g[i].size() != n) throw FormatError("'gram' must be square");
      for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from_json(g[i][k]);
    }
    try {
      return QuadraticForm(std::move(m));
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
  }
  MultiPoly p = poly_from_json(j);
  for (const auto& [m, c] : p.terms())
    if (m.degree() != 2) throw FormatError("quadratic form has a term of degree " + std::to_string(m.degree()));
  return p.to_quadratic();
}

inline std::vector<QuadraticForm> quadratics_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of quadratic forms");
  std::vector<QuadraticForm> out;
  for (const auto& q : j) out.push_back(quadratic_from_json(q));
  for (const auto& q : out)
    if (q.n() != out.front().n()) throw FormatError("quadratic forms differ in variable count");
  return out;
}

inline json to_json(const std::vector<QuadraticForm>& qs) {
  json a = json::array();
  for (const auto& q : qs) a.push_back(to_json(q));
  return a;
}

// ---- linear forms and spaces ----

inline json to_json(const LinearForm& f) { return to_json(MultiPoly::from_linear(f)); }

/// A linear form is a polynomial object of degree 1 or a plain coefficient array.
inline LinearForm linear_from_json(const json& j) {
  if (j.is_array()) {
    LinearForm f(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) f[i] = rational_from_json(j[i]);
    return f;
  }
  MultiPoly p = poly_from_json(j);
  for (const auto& [m, c] : p.terms())
    if (m.degree() != 1) throw FormatError("linear form has a term of degree " + std::to_string(m.degree()));
  return to_linear(p);
}

inline json to_json(const ExtLinearForm& f) {
  json c = json::array();
  for (const auto& x : f.coeffs()) c.push_back(to_json(x));
  return json{{"coeffs", c}, {"str", f.str()}};
}

inline ExtLinearForm ext_linear_from_json(const json& j) {
  const json& c = field(j, "coeffs");
  std::vector<QuadExt> v;
  for (const auto& x : c) v.push_back(quadext_from_json(x));
  return ExtLinearForm(std::move(v));
}

inline json to_json(const LinearSpace& v) {
  json b = json::array();
  for (const auto& f : v.basis()) b.push_back(to_json(f));
  return json{{"n", v.n()}, {"basis", b}};
}

inline LinearSpace space_from_json(const json& j) {
  std::size_t n = field(j, "n").get<std::size_t>();
  std::vector<LinearForm> forms;
  for (const auto& f : field(j, "basis")) {
    forms.push_back(linear_from_json(f));
    if (forms.back().n() != n) throw FormatError("basis form differs from n");
  }
  return LinearSpace(n, forms);
}

inline PointConfig<Rational> points_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of linear forms");
  PointConfig<Rational> pts;
  for (const auto& f : j) pts.push_back(linear_from_json(f));
  for (const auto& p : pts)
    if (p.n() != pts.front().n()) throw FormatError("points differ in variable count");
  return pts;
}

// ---- instances and circuits ----

inline json to_json(const Instance& inst) {
  json forms = json::array();
  for (const auto& f : inst.forms) forms.push_back(to_json(f));
  return json{{"kind", to_string(inst.kind)}, {"n", inst.n},           {"seed", inst.seed},
              {"homogenized", inst.homogenized}, {"A", to_json(inst.a)}, {"B", to_json(inst.b)},
              {"Q", to_json(inst.qs)},          {"forms", forms}};
}

inline Instance instance_from_json(const json& j) {
  Instance inst;
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "ii") inst.kind = InstanceCase::ii;
  else if (kind == "iii") inst.kind = InstanceCase::iii;
  else throw FormatError("unknown instance kind '" + kind + "'");
  inst.n = field(j, "n").get<std::size_t>();
  inst.seed = field(j, "seed").get<std::uint64_t>();
  inst.homogenized = field(j, "homogenized").get<bool>();
  inst.a = quadratic_from_json(field(j, "A"));
  inst.b = quadratic_from_json(field(j, "B"));
  inst.qs = quadratics_from_json(field(j, "Q"));
  for (const auto& f : field(j, "forms")) inst.forms.push_back(linear_from_json(f));
  return inst;
}

inline json to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates()) gates.push_back(to_json(g));
  return json{{"n", c.n()}, {"gates", gates}};
}

inline Circuit circuit_from_json(const json& j) {
  std::size_t n = field(j, "n").get<std::size_t>();
  std::vector<Gate> gates;
  const json& g = field(j, "gates");
  if (!g.is_array()) throw FormatError("'gates' must be an array");
  for (const auto& gate : g) gates.push_back(quadratics_from_json(gate));
  try {
    return Circuit(n, std::move(gates));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

// ---- reports ----

inline json to_json(const ReducibleMembers& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) {
    json e{{"alpha", to_json(x.alpha)}, {"beta", to_json(x.beta)}};
    if (x.factors) e["factors"] = json::array({to_json(x.factors->first), to_json(x.factors->second)});
    w.push_back(e);
  }
  json out{{"exists", r.exists}, {"all_minors_zero", r.all_minors_zero}, {"witnesses", w}};
  if (r.gcd) out["gcd"] = r.gcd->str();
  return out;
}

inline json to_json(const IsotropicPlaneResult& r) {
  json out{{"exists", r.exists}, {"method", r.method}};
  if (r.plane) out["plane"] = json::array({to_json(r.plane->first), to_json(r.plane->second)});
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline json to_json(const StructureReport& r) {
  json out;
  if (r.case_i) out["case_i"] = json{{"k", r.case_i->k}, {"alpha", to_json(r.case_i->alpha)}, {"beta", to_json(r.case_i->beta)}};
  else out["case_i"] = nullptr;
  out["case_ii"] = to_json(r.pencil);
  out["case_iii"] = to_json(r.plane);
  if (r.vanishing_k) out["case_iii"]["vanishing_k"] = *r.vanishing_k;
  out["any_case"] = r.any_case();
  out["oracle_confirmed"] = r.oracle_confirmed ? json(*r.oracle_confirmed) : json(nullptr);
  return out;
}

inline json to_json(const SGReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json e{{"i", p.i}, {"j", p.j}, {"status", to_string(p.status)}};
    if (!p.detail.empty()) e["detail"] = p.detail;
    auto it = r.per_pair_subsets.find({p.i, p.j});
    if (it != r.per_pair_subsets.end()) e["subset"] = it->second;
    pairs.push_back(e);
  }
  json failing = json::array();
  for (const auto& p : r.failing_pairs) failing.push_back(json::array({p.i, p.j}));
  return json{{"condition_holds", r.condition_holds ? json(*r.condition_holds) : json(nullptr)},
              {"pairs", pairs},
              {"failing_pairs", failing},
              {"span_dimension", r.span_dimension},
              {"irreducible_or_square", r.irreducible_or_square}};
}

inline json to_json(const QoSet& s) {
  json clauses = json::array();
  for (const auto& c : s.clauses)
    clauses.push_back(json{{"clause", c.clause}, {"verified", c.verified}, {"satisfied", c.satisfied}, {"detail", c.detail}});
  json prods = json::array();
  for (const auto& [a, b] : s.products) prods.push_back(json::array({to_json(a), to_json(b)}));
  return json{{"Q_o", to_json(s.q_o)}, {"seed", s.seed},        {"m1", s.m1},          {"m2", s.m2},
              {"forms", to_json(s.forms)}, {"products", prods}, {"clauses", clauses}};
}

inline json to_json(const SZResult& r) {
  json out{{"probably_nonzero", r.probably_nonzero},
           {"trials_run", r.trials_run},
           {"seed", r.seed},
           {"sample_size", r.sample_size.get_str()}};
  if (r.witness) {
    json w = json::array();
    for (const auto& x : *r.witness) w.push_back(to_json(x));
    out["witness"] = w;
  }
  return out;
}

inline json to_json(const std::vector<GatePairEntry>& table) {
  json out = json::array();
  for (const auto& e : table) out.push_back(json{{"j", e.j}, {"jp", e.jp}, {"member", e.member}, {"subset", e.subset}});
  return out;
}

inline json to_json(const ReducedCircuit& r) {
  json change = json::array();
  for (std::size_t i = 0; i < r.change.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < r.change.cols(); ++k) row.push_back(to_json(r.change(i, k)));
    change.push_back(row);
  }
  return json{{"delta", r.delta}, {"circuit", to_json(r.circuit)}, {"change", change}};
}

}  // namespace quadsg::io
