// quadsg: command-line front end.
//
//   quadsg classify   --input file.json   {"A": q, "B": q, "Q": [q, ...]}
//   quadsg radical    --input file.json   {"f": p, "gens": [p, ...]}
//   quadsg sg-verify  --input file.json   {"quadratics": [...]} | {"points": [...]} | {"T1","T2","T3"}
//   quadsg dim        --input file.json   {"quadratics": [...]} | {"points": [...]}
//   quadsg pit        --input file.json   {"circuit": {"n", "gates": [[q, ...], ...]}}
//   quadsg generate   --case ii|iii|qo|circuit ...
//
// Exit codes: 0 decided, 1 input error, 2 undecided (resource cap).

#include <quadsg/io/json.hpp>
#include <quadsg/quadsg.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

using quadsg::io::json;
namespace io = quadsg::io;

struct Options {
  std::string input = "-";
  std::uint64_t seed = 1;
  std::size_t max_terms = 200000;
  std::size_t max_pairs = 200000;
  std::string format = "json";
  std::string oracle = "on";
  // generate
  std::string gen_case = "iii";
  std::size_t n = 6;
  bool homogenized = false;
  std::size_t m1 = 8, m2 = 1;
  std::string circuit_kind = "zero_squares";
  std::size_t degree = 2;
  // sg-verify / pit
  bool gupta = false;
  std::size_t trials = 10;
};

struct Undecided : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw io::FormatError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw io::FormatError(std::string("malformed JSON: ") + e.what());
  }
}

quadsg::GroebnerLimits limits_of(const Options& o) {
  quadsg::GroebnerLimits l;
  l.max_terms = o.max_terms;
  l.max_pairs = o.max_pairs;
  return l;
}

quadsg::QuadraticForm parse_named_quadratic(const std::string& name, std::size_t n) {
  // "x0*x1+x2*x3+x4*x5" style, products of two variables with unit coefficients
  quadsg::QuadraticForm q(n);
  std::stringstream ss(name);
  std::string term;
  while (std::getline(ss, term, '+')) {
    unsigned i = 0, j = 0;
    if (std::sscanf(term.c_str(), "x%u*x%u", &i, &j) != 2 || i >= n || j >= n)
      throw io::FormatError("cannot parse Q_o term '" + term + "'");
    q.set_monomial(i, j, q.monomial(i, j) + 1);
  }
  return q;
}

std::string human_structure(const quadsg::StructureReport& r) {
  std::ostringstream os;
  if (r.case_i) os << "case i: Q_" << r.case_i->k << " = " << r.case_i->alpha << "*A + " << r.case_i->beta << "*B\n";
  else os << "case i: no\n";
  os << "case ii: " << (r.pencil.exists ? "yes" : "no");
  if (r.pencil.gcd) os << " (minor gcd " << r.pencil.gcd->str() << ")";
  os << "\n";
  for (const auto& w : r.pencil.witnesses) {
    os << "  (" << w.alpha.str() << ")*A + (" << w.beta.str() << ")*B";
    if (w.factors) os << " = (" << w.factors->first.str() << ") * (" << w.factors->second.str() << ")";
    os << "\n";
  }
  os << "case iii: " << (r.plane.exists ? "yes" : "no") << " [" << r.plane.method << "]\n";
  if (r.plane.plane) os << "  plane: " << r.plane.plane->first.str() << " = " << r.plane.plane->second.str() << " = 0\n";
  if (!r.plane.note.empty()) os << "  note: " << r.plane.note << "\n";
  if (r.oracle_confirmed) os << "oracle: product " << (*r.oracle_confirmed ? "in" : "not in") << " sqrt<A, B>\n";
  return os.str();
}

int emit(const Options& o, const std::string& command, json result, const std::string& human, int code = 0) {
  if (o.format == "json") {
    json out{{"command", command}, {"seed", o.seed}, {"result", std::move(result)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << human;
  }
  return code;
}

int run_classify(const Options& o) {
  json in = read_input(o.input);
  auto a = io::quadratic_from_json(io::field(in, "A"));
  auto b = io::quadratic_from_json(io::field(in, "B"));
  auto qs = io::quadratics_from_json(io::field(in, "Q"));
  auto r = quadsg::classify(a, b, qs, o.oracle == "on", limits_of(o));
  return emit(o, "classify", io::to_json(r), human_structure(r));
}

int run_radical(const Options& o) {
  json in = read_input(o.input);
  auto f = io::poly_from_json(io::field(in, "f"));
  std::vector<quadsg::MultiPoly> gens;
  for (const auto& g : io::field(in, "gens")) gens.push_back(io::poly_from_json(g));
  bool member = quadsg::radical_member(f, gens, limits_of(o));
  return emit(o, "radical", json{{"member", member}}, std::string("member: ") + (member ? "true" : "false") + "\n");
}

int run_sg_verify(const Options& o) {
  json in = read_input(o.input);
  if (in.contains("quadratics")) {
    auto r = quadsg::check_main_condition(io::quadratics_from_json(in.at("quadratics")), o.gupta, limits_of(o));
    std::ostringstream os;
    os << "condition: " << (r.condition_holds ? (*r.condition_holds ? "holds" : "fails") : "undecided") << "\n";
    for (const auto& p : r.pairs) os << "  (" << p.i << ", " << p.j << "): " << quadsg::to_string(p.status) << "\n";
    os << "span dimension: " << r.span_dimension << "\n";
    return emit(o, "sg-verify", io::to_json(r), os.str(), r.condition_holds ? 0 : 2);
  }
  if (in.contains("points")) {
    auto pts = io::points_from_json(in.at("points"));
    json out{{"dimension", quadsg::config_dimension(pts)}};
    auto d = quadsg::check_delta_sg(pts);
    out["delta"] = io::to_json(d.delta);
    out["counts"] = d.counts;
    if (pts.size() >= 3) out["sg"] = quadsg::check_sg_linear(pts);
    std::ostringstream os;
    os << "dimension: " << out["dimension"] << "\ndelta: " << d.delta << "\n";
    if (out.contains("sg")) os << "sg: " << out["sg"] << "\n";
    return emit(o, "sg-verify", out, os.str());
  }
  if (in.contains("T1")) {
    auto t1 = io::points_from_json(in.at("T1"));
    auto t2 = io::points_from_json(io::field(in, "T2"));
    auto t3 = io::points_from_json(io::field(in, "T3"));
    bool ek = quadsg::check_ek(t1, t2, t3);
    quadsg::PointConfig<quadsg::Rational> all = t1;
    all.insert(all.end(), t2.begin(), t2.end());
    all.insert(all.end(), t3.begin(), t3.end());
    std::size_t dim = quadsg::config_dimension(all);
    return emit(o, "sg-verify", json{{"ek", ek}, {"dimension", dim}},
                std::string("ek: ") + (ek ? "true" : "false") + "\ndimension: " + std::to_string(dim) + "\n");
  }
  throw io::FormatError("sg-verify: expected 'quadratics', 'points' or 'T1'/'T2'/'T3'");
}

int run_dim(const Options& o) {
  json in = read_input(o.input);
  if (in.contains("points")) {
    std::size_t d = quadsg::config_dimension(io::points_from_json(in.at("points")));
    return emit(o, "dim", json{{"dimension", d}}, "dimension: " + std::to_string(d) + "\n");
  }
  auto qs = io::quadratics_from_json(io::field(in, "quadratics"));
  json forms = json::array();
  std::ostringstream os;
  for (const auto& q : qs) {
    forms.push_back(json{{"gram_rank", q.gram_rank()}, {"rank_s", quadsg::rank_s(q)}, {"ms_dim", quadsg::minimal_space(q).dim()}});
    os << q.str() << ": rank_s " << quadsg::rank_s(q) << ", dim MS " << quadsg::minimal_space(q).dim() << "\n";
  }
  std::size_t span = quadsg::span_dimension(qs);
  std::size_t ms = quadsg::minimal_space(qs, qs.front().n()).dim();
  os << "span dimension: " << span << "\ncombined MS dimension: " << ms << "\n";
  return emit(o, "dim", json{{"forms", forms}, {"span_dimension", span}, {"ms_dimension", ms}}, os.str());
}

int run_pit(const Options& o) {
  json in = read_input(o.input);
  auto c = io::circuit_from_json(in.contains("circuit") ? in.at("circuit") : in);
  bool zero = quadsg::expand_zero_test(c, o.max_terms);
  auto sz = quadsg::schwartz_zippel_test(c, o.trials, o.seed);
  auto red = quadsg::variable_reduction(c);
  json out{{"expand_zero", zero},
           {"schwartz_zippel", io::to_json(sz)},
           {"variable_reduction", io::to_json(red)},
           {"procedure", "deterministic expansion after variable reduction; cost grows with delta"}};
  std::ostringstream os;
  os << "zero (expansion): " << (zero ? "yes" : "no") << "\n";
  os << "schwartz-zippel: " << (sz.probably_nonzero ? "probably nonzero" : "consistent with zero") << " after "
     << sz.trials_run << " trials\n";
  os << "delta: " << red.delta << "\n";
  if (zero && c.gates().size() == 3) {
    auto table = quadsg::gate_radical_report(c, limits_of(o), o.max_terms);
    out["gate_radical_report"] = io::to_json(table);
    for (const auto& e : table) os << "  (" << e.j << ", " << e.jp << "): " << (e.member ? "member" : "not member") << "\n";
  }
  return emit(o, "pit", out, os.str());
}

int run_generate(const Options& o) {
  if (o.gen_case == "ii" || o.gen_case == "iii") {
    auto kind = o.gen_case == "ii" ? quadsg::InstanceCase::ii : quadsg::InstanceCase::iii;
    auto inst = quadsg::make_instance(kind, o.n, o.seed, o.homogenized);
    // instance files are fed straight back to classify, so no envelope
    std::cout << io::to_json(inst).dump(2) << "\n";
    return 0;
  }
  if (o.gen_case == "qo") {
    std::string def;
    for (std::size_t i = 0; i + 1 < o.n; i += 2) def += (def.empty() ? "" : "+") + ("x" + std::to_string(i) + "*x" + std::to_string(i + 1));
    auto s = quadsg::make_qo_dominated(parse_named_quadratic(def, o.n), o.m1, o.m2, o.seed, 1000, limits_of(o));
    std::ostringstream os;
    for (const auto& c : s.clauses)
      os << "clause " << c.clause << ": " << (c.verified ? (c.satisfied ? "verified" : "violated") : "not verified") << " ("
         << c.detail << ")\n";
    return emit(o, "generate", io::to_json(s), os.str());
  }
  if (o.gen_case == "circuit") {
    static const std::map<std::string, quadsg::CircuitKind> kinds{
        {"zero_squares", quadsg::CircuitKind::zero_squares},     {"zero_split", quadsg::CircuitKind::zero_split},
        {"zero_monomial", quadsg::CircuitKind::zero_monomial},   {"nonzero_random", quadsg::CircuitKind::nonzero_random},
        {"nonzero_perturbed", quadsg::CircuitKind::nonzero_perturbed}};
    auto it = kinds.find(o.circuit_kind);
    if (it == kinds.end()) throw io::FormatError("unknown circuit kind '" + o.circuit_kind + "'");
    auto c = quadsg::make_circuit(it->second, o.n, o.degree, o.seed);
    std::cout << json{{"circuit", io::to_json(c)}, {"kind", o.circuit_kind}, {"seed", o.seed}}.dump(2) << "\n";
    return 0;
  }
  throw io::FormatError("unknown case '" + o.gen_case + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure of quadratic sets with radical conditions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--input", o.input, "input JSON file, - for stdin")->capture_default_str();
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--max-terms", o.max_terms, "largest intermediate polynomial")->capture_default_str();
  app.add_option("--max-pairs", o.max_pairs, "longest Groebner pair queue")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"human", "json"}))->capture_default_str();
  app.add_option("--oracle", o.oracle, "run the radical oracle in classify")
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "which structure case holds for A, B, {Q_k}");
  auto* radical = app.add_subcommand("radical", "is f in the radical of <gens>");
  auto* sg = app.add_subcommand("sg-verify", "SG, delta-SG, colored, or main radical condition");
  sg->add_flag("--gupta", o.gupta, "record a subset of size <= 4 per pair");
  auto* dim = app.add_subcommand("dim", "ranks, minimal spaces and span dimension");
  auto* pit = app.add_subcommand("pit", "zero test for sums of products of quadratics");
  pit->add_option("--trials", o.trials, "Schwartz-Zippel trials")->capture_default_str();
  auto* gen = app.add_subcommand("generate", "seeded instances");
  gen->add_option("--case", o.gen_case, "ii | iii | qo | circuit")->capture_default_str();
  gen->add_option("--n", o.n, "number of variables")->capture_default_str();
  gen->add_flag("--homogenized", o.homogenized, "case iii with a^2 + A, b^2 + B");
  gen->add_option("--m1", o.m1, "qo: forms of shape Q_o + a b")->capture_default_str();
  gen->add_option("--m2", o.m2, "qo: other forms")->capture_default_str();
  gen->add_option("--kind", o.circuit_kind, "circuit kind")->capture_default_str();
  gen->add_option("--d", o.degree, "circuit: factors per gate")->capture_default_str();
  // global options may follow the subcommand
  for (auto* sub : {classify, radical, sg, dim, pit, gen}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*classify) return run_classify(o);
    if (*radical) return run_radical(o);
    if (*sg) return run_sg_verify(o);
    if (*dim) return run_dim(o);
    if (*pit) return run_pit(o);
    return run_generate(o);
  } catch (const quadsg::ResourceLimitExceeded& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    if (o.format == "json") std::cout << json{{"status", "undecided"}, {"reason", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  }
}
