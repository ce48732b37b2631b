#include <dtoric/cli.hpp>
#include <dtoric/dring.hpp>
#include <dtoric/error.hpp>
#include <dtoric/oracle.hpp>
#include <dtoric/tfr.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace dtoric::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr long kDefaultNormalityBound = 10;
constexpr long kDefaultOracleBound = 8;
constexpr long kDefaultSrBound = 6;

// ------------------------------------------------------------------ parsing

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw validation_error(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!ok) throw validation_error("unknown field '" + key + "' in " + where);
  }
}

Int parse_int(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Int out;
    if (out.set_str(v.get<std::string>(), 10) != 0) throw validation_error(what + ": not an integer");
    return out;
  }
  throw validation_error(what + ": expected an integer");
}

long parse_small(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw validation_error(what + ": expected an integer");
  return v.get<long>();
}

Rational parse_coefficient(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Rational(parse_int(v, what));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
      throw validation_error(what + ": not a rational number");
    }
  }
  throw validation_error(what + ": expected an integer or a rational string");
}

LatticePoint parse_point(const json& v, std::optional<std::size_t> dim, const std::string& what) {
  if (!v.is_array()) throw validation_error(what + " must be a list of integers");
  std::vector<Int> c;
  for (const json& x : v) c.push_back(parse_int(x, what));
  if (dim && c.size() != *dim)
    throw validation_error(what + " has " + std::to_string(c.size()) + " entries, expected " + std::to_string(*dim));
  return LatticePoint(std::move(c));
}

IntMatrix parse_matrix(const json& v, std::optional<std::size_t> rows, const std::string& what) {
  if (!v.is_array() || v.empty()) throw validation_error(what + " must be a nonempty list of rows");
  std::vector<LatticePoint> r;
  for (const json& row : v) r.push_back(parse_point(row, std::nullopt, what));
  const std::size_t cols = r.front().dim();
  for (const LatticePoint& x : r)
    if (x.dim() != cols) throw validation_error(what + " has rows of different lengths");
  if (rows && r.size() != *rows)
    throw validation_error(what + " has " + std::to_string(r.size()) + " rows, expected " + std::to_string(*rows));
  return IntMatrix::from_rows(r, cols);
}

LatticePoint parse_degree_text(const std::string& text, std::size_t dim) {
  std::vector<Int> c;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    Int v;
    if (part.empty() || v.set_str(part, 10) != 0) throw validation_error("bad degree '" + text + "'");
    c.push_back(v);
  }
  if (c.size() != dim)
    throw validation_error("degree '" + text + "' has " + std::to_string(c.size()) + " entries, expected " +
                           std::to_string(dim));
  return LatticePoint(std::move(c));
}

std::pair<long, long> parse_box_text(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw validation_error("box must look like lo:hi");
  try {
    std::size_t p1 = 0, p2 = 0;
    long lo = std::stol(text.substr(0, colon), &p1);
    long hi = std::stol(text.substr(colon + 1), &p2);
    if (p1 != colon || p2 != text.size() - colon - 1) throw std::invalid_argument("trailing");
    if (lo > hi) throw validation_error("box lower end exceeds upper end");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw validation_error("box must look like lo:hi");
  } catch (const std::out_of_range&) {
    throw validation_error("box bounds out of range");
  }
}

// {"terms": [{"exponent": [...], "coefficient": c}]} or
// {"factors": [{"form": [...], "shift": c, "count": n}], "scalar": s}.
// A factor with count n stands for (f - c)(f - c - 1)...(f - c - n + 1).
ThetaPolynomial parse_polynomial(const json& v, std::size_t dim, const std::string& what) {
  check_keys(v, {"terms", "factors", "scalar"}, what);
  const bool has_terms = v.contains("terms"), has_factors = v.contains("factors");
  if (has_terms == has_factors) throw validation_error(what + " needs exactly one of 'terms' or 'factors'");
  if (has_terms) {
    if (v.contains("scalar")) throw validation_error(what + ": 'scalar' only applies to 'factors'");
    ThetaPolynomial p(dim);
    for (const json& t : v.at("terms")) {
      check_keys(t, {"exponent", "coefficient"}, what + " term");
      if (!t.contains("exponent") || !t.contains("coefficient"))
        throw validation_error(what + " term needs 'exponent' and 'coefficient'");
      Exponent e;
      for (const json& x : t.at("exponent")) {
        long k = parse_small(x, what + " exponent");
        if (k < 0) throw validation_error(what + ": negative exponent");
        e.push_back(static_cast<unsigned>(k));
      }
      if (e.size() != dim) throw validation_error(what + ": exponent has the wrong length");
      p.add_term(e, parse_coefficient(t.at("coefficient"), what + " coefficient"));
    }
    return p;
  }
  ThetaPolynomial p = ThetaPolynomial::constant(dim, v.contains("scalar") ? parse_coefficient(v.at("scalar"), what) : 1);
  for (const json& f : v.at("factors")) {
    check_keys(f, {"form", "shift", "count"}, what + " factor");
    if (!f.contains("form")) throw validation_error(what + " factor needs 'form'");
    LatticePoint form = parse_point(f.at("form"), dim, what + " form");
    Int shift = f.contains("shift") ? parse_int(f.at("shift"), what + " shift") : Int(0);
    long count = f.contains("count") ? parse_small(f.at("count"), what + " count") : 1;
    if (count < 0) throw validation_error(what + ": negative factor count");
    for (long i = 0; i < count; ++i) p = p * ThetaPolynomial::linear(form, shift + i);
  }
  return p;
}

json point_json(const LatticePoint& p) {
  json a = json::array();
  for (const Int& x : p) {
    if (x.fits_slong_p())
      a.push_back(x.get_si());
    else
      a.push_back(x.get_str());
  }
  return a;
}

json rational_point_json(const std::vector<Rational>& p) {
  json a = json::array();
  for (const Rational& x : p) a.push_back(to_string(x));
  return a;
}

// ------------------------------------------------------------ document model

struct Document {
  json raw;
  Options options;

  bool has(const char* key) const { return raw.contains(key); }
  bool strict() const {
    if (options.strict_normality) return *options.strict_normality;
    if (raw.contains("strict_normality")) {
      if (!raw.at("strict_normality").is_boolean()) throw validation_error("strict_normality must be a boolean");
      return raw.at("strict_normality").get<bool>();
    }
    return true;
  }
  long bound(long fallback) const {
    long b = fallback;
    if (options.bound)
      b = *options.bound;
    else if (raw.contains("bound"))
      b = parse_small(raw.at("bound"), "bound");
    if (b < 0) throw validation_error("bound must be nonnegative");
    return b;
  }
  std::pair<long, long> box(long lo, long hi) const {
    if (options.box) return parse_box_text(*options.box);
    if (raw.contains("box")) {
      const json& b = raw.at("box");
      if (!b.is_array() || b.size() != 2) throw validation_error("box must be [lo, hi]");
      long l = parse_small(b[0], "box"), h = parse_small(b[1], "box");
      if (l > h) throw validation_error("box lower end exceeds upper end");
      return {l, h};
    }
    return {lo, hi};
  }
  std::optional<LatticePoint> degree(std::size_t dim) const {
    if (options.degree) return parse_degree_text(*options.degree, dim);
    if (raw.contains("degree")) return parse_point(raw.at("degree"), dim, "degree");
    return std::nullopt;
  }
  LatticePoint require_degree(std::size_t dim) const {
    auto m = degree(dim);
    if (!m) throw validation_error("this command needs a degree (--degree or \"degree\")");
    return *m;
  }
};

Document parse_document(const std::string& text, const Options& options) {
  Document d;
  try {
    d.raw = json::parse(text);
  } catch (const json::parse_error& e) {
    throw validation_error(std::string("malformed document: ") + e.what());
  }
  check_keys(d.raw,
             {"name", "description", "matrix", "grading", "normality", "strict_normality", "ideal", "complex", "tuple",
              "order", "simplicial", "operator", "degree", "box", "bound", "result"},
             "document");
  d.options = options;
  return d;
}

struct Semigroup {
  SemigroupPresentation P;
  DringOptions opt;
  std::vector<std::string> warnings;
};

Semigroup load_semigroup(const Document& d) {
  if (!d.has("matrix")) throw validation_error("document has no 'matrix'");
  IntMatrix A = parse_matrix(d.raw.at("matrix"), std::nullopt, "matrix");
  PresentationOptions po;
  if (d.has("grading")) po.grading = parse_point(d.raw.at("grading"), A.rows(), "grading");
  Semigroup s{validate_presentation(A, po), {}, {}};
  s.opt.strict_normality = d.strict();
  const json* normality = d.has("normality") ? &d.raw.at("normality") : nullptr;
  if (normality && normality->is_string()) {
    if (normality->get<std::string>() != "assume") throw validation_error("normality must be \"assume\" or a bound");
    s.P.set_normality({NormalityStatus::Kind::Assumed, 0, std::nullopt});
  } else if (s.opt.strict_normality) {
    long nb = normality ? parse_small(*normality, "normality") : kDefaultNormalityBound;
    record_normality(s.P, nb);
  } else {
    s.warnings.push_back("normality not checked");
  }
  return s;
}

RadicalMonomialIdealSpec load_ideal(const Document& d, const SemigroupPresentation& P) {
  if (!d.has("ideal")) return RadicalMonomialIdealSpec::omega(P);
  const json& v = d.raw.at("ideal");
  if (v.is_string()) {
    if (v.get<std::string>() != "omega") throw validation_error("ideal must be \"omega\" or a list of faces");
    return RadicalMonomialIdealSpec::omega(P);
  }
  if (!v.is_array()) throw validation_error("ideal must be a list of faces");
  std::vector<std::set<std::size_t>> faces;
  for (const json& f : v) {
    if (!f.is_array()) throw validation_error("each face is a list of facet indices");
    std::set<std::size_t> ids;
    for (const json& x : f) {
      long k = parse_small(x, "facet index");
      if (k < 1) throw validation_error("facet indices start at 1");
      ids.insert(static_cast<std::size_t>(k - 1));
    }
    faces.push_back(std::move(ids));
  }
  return RadicalMonomialIdealSpec(P, faces);
}

json ideal_json(const RadicalMonomialIdealSpec& J) {
  json a = json::array();
  for (const FaceDescriptor& f : J.faces()) {
    json face = json::array();
    for (std::size_t i : f.vanishing_facets) face.push_back(i + 1);
    a.push_back(face);
  }
  return a;
}

MonoidalComplex load_complex(const Document& d) {
  if (!d.has("complex")) throw validation_error("document has no 'complex'");
  const json& c = d.raw.at("complex");
  check_keys(c, {"dim", "cones", "containments", "grading", "window"}, "complex");
  if (!c.contains("dim") || !c.contains("cones")) throw validation_error("complex needs 'dim' and 'cones'");
  long dim = parse_small(c.at("dim"), "complex dim");
  if (dim < 1) throw validation_error("complex dim must be positive");
  const std::size_t n = static_cast<std::size_t>(dim);
  std::vector<ConeInput> cones;
  for (const json& cone : c.at("cones")) {
    check_keys(cone, {"name", "generators"}, "cone");
    if (!cone.contains("name") || !cone.at("name").is_string() || !cone.contains("generators"))
      throw validation_error("cone needs a string 'name' and 'generators'");
    std::string name = cone.at("name").get<std::string>();
    const json& g = cone.at("generators");
    IntMatrix m(n, 0);
    if (!(g.is_array() && g.empty())) m = parse_matrix(g, n, "generators of '" + name + "'");
    cones.push_back({name, m});
  }
  auto index = [&](const json& v) {
    if (!v.is_string()) throw validation_error("containments refer to cones by name");
    for (std::size_t i = 0; i < cones.size(); ++i)
      if (cones[i].name == v.get<std::string>()) return i;
    throw validation_error("unknown cone '" + v.get<std::string>() + "'");
  };
  std::vector<std::pair<std::size_t, std::size_t>> containments;
  if (c.contains("containments")) {
    for (const json& p : c.at("containments")) {
      if (!p.is_array() || p.size() != 2) throw validation_error("containment must be [smaller, larger]");
      containments.emplace_back(index(p[0]), index(p[1]));
    }
  }
  std::optional<LatticePoint> grading;
  if (c.contains("grading")) grading = parse_point(c.at("grading"), n, "complex grading");
  long window = c.contains("window") ? parse_small(c.at("window"), "complex window") : 6;
  return MonoidalComplex(n, std::move(cones), containments, grading, window);
}

OperatorTuple load_tuple(const Document& d, const MonoidalComplex& C) {
  OperatorTuple t = OperatorTuple::zero(C);
  if (!d.has("tuple")) return t;
  const json& v = d.raw.at("tuple");
  if (!v.is_object()) throw validation_error("tuple maps maximal cone names to term lists");
  for (const auto& [name, terms] : v.items()) {
    auto idx = C.index_of(name);
    if (!idx) throw validation_error("tuple names unknown cone '" + name + "'");
    auto pos = std::find(C.maximal().begin(), C.maximal().end(), *idx);
    if (pos == C.maximal().end()) throw validation_error("tuple component '" + name + "' is not a maximal cone");
    auto& comp = t.components[static_cast<std::size_t>(pos - C.maximal().begin())];
    if (!terms.is_array()) throw validation_error("tuple component '" + name + "' must be a list of terms");
    for (const json& term : terms) {
      check_keys(term, {"b", "q"}, "tuple term");
      if (!term.contains("b") || !term.contains("q")) throw validation_error("tuple term needs 'b' and 'q'");
      comp.push_back({parse_point(term.at("b"), C.ambient_dim(), "tuple b"),
                      parse_polynomial(term.at("q"), C.ambient_dim(), "tuple q")});
    }
  }
  return t;
}

SimplicialComplex load_simplicial(const Document& d) {
  if (!d.has("simplicial")) throw validation_error("document has no 'simplicial'");
  const json& s = d.raw.at("simplicial");
  check_keys(s, {"vertices", "facets"}, "simplicial");
  if (!s.contains("vertices") || !s.contains("facets")) throw validation_error("simplicial needs 'vertices' and 'facets'");
  long n = parse_small(s.at("vertices"), "vertices");
  if (n < 1) throw validation_error("vertices must be positive");
  std::vector<std::set<std::size_t>> facets;
  for (const json& f : s.at("facets")) {
    std::set<std::size_t> F;
    if (!f.is_array()) throw validation_error("facet must be a list of vertices");
    for (const json& x : f) {
      long v = parse_small(x, "vertex");
      if (v < 1 || v > n) throw validation_error("vertex " + std::to_string(v) + " out of range");
      F.insert(static_cast<std::size_t>(v - 1));
    }
    facets.push_back(std::move(F));
  }
  return SimplicialComplex(static_cast<std::size_t>(n), std::move(facets));
}

// --------------------------------------------------------------- reporting

struct Report {
  json result = json::object();
  std::vector<std::string> lines;
  bool negative = false;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json piece_json(const GradedOperatorPiece& p) {
  json gens = json::array(), expanded = json::array();
  for (std::size_t k = 0; k < p.ideal.generators().size(); ++k) {
    if (p.ideal.has_factored()) gens.push_back(p.ideal.factored()[k].to_string());
    expanded.push_back(p.ideal.generators()[k].to_string());
  }
  json out = {{"m", point_json(p.m)}, {"expanded", expanded}};
  if (p.ideal.has_factored()) out["generators"] = gens;
  return out;
}

void piece_lines(Report& r, const std::string& label, const GradedOperatorPiece& p) {
  r.line(label + p.to_string(true));
  r.line(std::string(label.size(), ' ') + "expanded: " + p.ideal.to_string(false));
}

void warnings_into(Report& r, const std::vector<std::string>& warnings) {
  if (warnings.empty()) return;
  json w = json::array();
  for (const auto& s : warnings) {
    w.push_back(s);
    r.line("warning: " + s);
  }
  r.result["warnings"] = w;
}

std::string normality_text(const SemigroupPresentation& P) { return P.normality().describe(); }

// ---------------------------------------------------------------- commands

Report cmd_facets(const Document& d) {
  Semigroup s = load_semigroup(d);
  Report r;
  json forms = json::array(), normals = json::array();
  std::string text;
  for (std::size_t i = 0; i < s.P.facets().size(); ++i) {
    const SupportForm& F = s.P.facets()[i];
    forms.push_back(format_linear_form(F.normal));
    normals.push_back(point_json(F.normal));
    text += (i ? ", F" : "F") + std::to_string(i + 1) + " = " + format_linear_form(F.normal);
  }
  r.line(text);
  r.line("grading: " + s.P.grading().to_string());
  r.line("normality: " + normality_text(s.P));
  r.result = {{"facets", forms}, {"normals", normals}, {"grading", point_json(s.P.grading())},
              {"normality", normality_text(s.P)}};
  warnings_into(r, s.warnings);
  return r;
}

Report cmd_faces(const Document& d) {
  Semigroup s = load_semigroup(d);
  Report r;
  json faces = json::array();
  auto lattice = face_lattice(s.P);
  for (const FaceDescriptor& f : lattice) {
    json ids = json::array();
    std::string text = "{";
    bool first = true;
    for (std::size_t i : f.vanishing_facets) {
      ids.push_back(i + 1);
      text += (first ? "F" : ",F") + std::to_string(i + 1);
      first = false;
    }
    faces.push_back(ids);
    r.line(text + "}");
  }
  r.lines.insert(r.lines.begin(), std::to_string(lattice.size()) + " faces");
  r.result = {{"count", lattice.size()}, {"faces", faces}};
  return r;
}

Report cmd_dpiece(const Document& d) {
  Semigroup s = load_semigroup(d);
  LatticePoint m = d.require_degree(s.P.dim());
  GradedOperatorPiece p = d_piece(s.P, m, s.opt);
  Report r;
  piece_lines(r, "D(R)_m = ", p);
  r.result = piece_json(p);
  warnings_into(r, s.warnings);
  return r;
}

Report cmd_ipiece(const Document& d) {
  Semigroup s = load_semigroup(d);
  LatticePoint m = d.require_degree(s.P.dim());
  RadicalMonomialIdealSpec J = load_ideal(d, s.P);
  GradedOperatorPiece num = idealizer_piece(s.P, J, m, s.opt);
  GradedOperatorPiece den = d_into_piece(s.P, J, m, s.opt);
  Report r;
  piece_lines(r, "I(J)_m = ", num);
  piece_lines(r, "D(R,J)_m = ", den);
  r.result = {{"ideal", ideal_json(J)}, {"idealizer", piece_json(num)}, {"into", piece_json(den)}};
  warnings_into(r, s.warnings);
  return r;
}

Report cmd_quotient(const Document& d) {
  Semigroup s = load_semigroup(d);
  LatticePoint m = d.require_degree(s.P.dim());
  RadicalMonomialIdealSpec J = load_ideal(d, s.P);
  QuotientPiece q = quotient_piece(s.P, J, m, s.opt);
  Report r;
  piece_lines(r, "numerator: ", q.numerator);
  piece_lines(r, "denominator: ", q.denominator);
  r.line("nonzero: " + std::string(q.nonzero ? "true" : "false"));
  r.result = {{"ideal", ideal_json(J)},
              {"numerator", piece_json(q.numerator)},
              {"denominator", piece_json(q.denominator)},
              {"nonzero", q.nonzero}};
  if (q.witness_factored) {
    r.line("witness: " + q.witness_factored->to_string());
    r.result["witness"] = q.witness_factored->to_string();
  }
  if (q.certificate) {
    r.line("certificate: denominator vanishes at " + format_point(*q.certificate) + ", witness does not");
    r.result["certificate"] = rational_point_json(*q.certificate);
  }
  r.negative = !q.nonzero;
  warnings_into(r, s.warnings);
  return r;
}

Report cmd_gorenstein(const Document& d) {
  Semigroup s = load_semigroup(d);
  auto [lo, hi] = d.box(-2, 2);
  GorensteinReport g = gorenstein_report(s.P, lo, hi, s.opt);
  Report r;
  if (g.certificate)
    r.line("Gorenstein: c = " + g.certificate->to_string());
  else
    r.line("not Gorenstein");
  std::string omega;
  json og = json::array();
  for (const LatticePoint& c : g.omega_generators) {
    omega += (omega.empty() ? "" : ", ") + c.to_string();
    og.push_back(point_json(c));
  }
  r.line("omega generators: " + omega);
  std::vector<std::string> warnings = s.warnings;
  if (!g.omega_complete)
    warnings.push_back("omega generators found up to degree " + to_string(g.omega_bound) +
                       " with generators in the top shell; the list may be incomplete");
  const std::string box = "[" + std::to_string(lo) + "," + std::to_string(hi) + "]^" + std::to_string(s.P.dim());
  r.line("operator check over " + box + " plus m = 0:");
  json table = json::array();
  for (const DegreeComparison& c : g.operator_check) {
    json row = {{"m", point_json(c.m)}, {"equal", c.equal}, {"contained", c.contained}};
    std::string text = "  m = " + c.m.to_string() + ": ";
    if (c.equal) {
      text += "equal";
    } else {
      text += c.contained ? "strict inclusion" : "NOT CONTAINED";
      if (c.witness) {
        text += ", witness " + c.witness->to_string();
        row["witness"] = c.witness->to_string();
      }
      if (c.certificate) {
        text += " nonzero at " + format_point(*c.certificate);
        row["certificate"] = rational_point_json(*c.certificate);
      }
    }
    r.line(text);
    table.push_back(row);
  }
  r.line("operator test: " + std::string(g.box_equal() ? "equal on the box" : "unequal on the box"));
  r.line("consistent: " + yes_no(g.consistent()));
  r.result = {{"gorenstein", g.is_gorenstein}, {"omega_generators", og}, {"omega_bound", g.omega_bound.get_si()},
              {"box", {lo, hi}}, {"operator_check", table}, {"box_equal", g.box_equal()},
              {"consistent", g.consistent()}};
  if (g.certificate) r.result["certificate"] = point_json(*g.certificate);
  r.negative = !g.is_gorenstein;
  warnings_into(r, warnings);
  return r;
}

Report cmd_tfr_verify(const Document& d) {
  MonoidalComplex C = load_complex(d);
  OperatorTuple t = load_tuple(d, C);
  long bound = d.bound(kDefaultOracleBound);
  TupleCheckResult check = tuple_check(C, t, bound);
  Report r;
  r.line("condition (a), agreement on shared faces: " + std::string(check.condition_a ? "pass" : "fail"));
  r.line("condition (b), admissible components: " + std::string(check.condition_b ? "pass" : "fail"));
  json diags = json::array();
  for (const auto& s : check.diagnostics) {
    r.line("  " + s);
    diags.push_back(s);
  }
  r.line("tuple: " + std::string(check.passed ? "accepted" : "rejected") + " (checked to degree " +
         std::to_string(bound) + ")");
  r.result = {{"accepted", check.passed}, {"condition_a", check.condition_a}, {"condition_b", check.condition_b},
              {"bound", bound}, {"diagnostics", diags}};
  r.negative = !check.passed;
  return r;
}

std::string operator_text(const LatticePoint& a, const LatticePoint& b) {
  std::string s;
  auto put = [&](const char* var, const LatticePoint& e) {
    for (std::size_t i = 0; i < e.dim(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += var + std::to_string(i + 1);
      if (e[i] != 1) s += "^" + e[i].get_str();
    }
  };
  put("x", a);
  put("d", b);
  return s.empty() ? "1" : s;
}

std::set<std::size_t> support(const LatticePoint& v) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v[i] != 0) s.insert(i);
  return s;
}

std::string sr_reason(const SimplicialComplex& D, const LatticePoint& a, const LatticePoint& b) {
  const auto sa = support(a), sb = support(b);
  for (const auto& F : D.facets()) {
    if (std::includes(F.begin(), F.end(), sa.begin(), sa.end()) &&
        !std::includes(F.begin(), F.end(), sb.begin(), sb.end()))
      return "supp(a) = " + format_vertex_set(sa) + " lies in facet " + format_vertex_set(F) + " but supp(b) = " +
             format_vertex_set(sb) + " does not";
  }
  return {};
}

Report cmd_sr(const Document& d) {
  SimplicialComplex D = load_simplicial(d);
  const std::size_t n = D.vertices();
  Report r;
  if (d.has("operator")) {
    const json& op = d.raw.at("operator");
    check_keys(op, {"a", "b"}, "operator");
    if (!op.contains("a") || !op.contains("b")) throw validation_error("operator needs 'a' and 'b'");
    LatticePoint a = parse_point(op.at("a"), n, "operator a"), b = parse_point(op.at("b"), n, "operator b");
    bool ok = sr_generator_admissible(D, a, b);
    const std::string name = operator_text(a, b);
    r.line(name + ": " + (ok ? "admissible" : "rejected"));
    r.result = {{"operator", name}, {"admissible", ok}};
    if (!ok) {
      r.line("  " + sr_reason(D, a, b));
      r.result["reason"] = sr_reason(D, a, b);
    }
    // Cross-check on the truncated face ring.
    MonoidalComplex C = sr_to_complex(D);
    long bound = d.bound(kDefaultSrBound);
    TruncatedAlgebra T = TruncatedAlgebra::complex(C, bound);
    MonomialOperator mo = sr_operator(D, a, b);
    TruncatedAction act = realize(T, mo.degree, mo.symbol);
    unsigned order = 0;
    for (const Int& x : b) order += static_cast<unsigned>(x.get_ui());
    RetractCheck rc = retract_condition_check(C, T, act, order);
    // Images outside |M| are zero in the face ring, so escapes are not failures here.
    const bool oracle_ok = rc.passed();
    std::string text = "oracle at bound " + std::to_string(bound) + ": " + (oracle_ok ? "admissible" : "rejected");
    if (!rc.diagnostic.empty()) text += ", " + rc.diagnostic;
    r.line(text);
    r.result["oracle"] = {{"bound", bound}, {"admissible", oracle_ok}, {"diagnostic", rc.diagnostic}};
    r.negative = !ok;
    return r;
  }
  auto [lo, hi] = d.box(0, 3);
  if (lo < 0) throw validation_error("exponent box must be nonnegative");
  json admissible = json::array();
  std::size_t total = 0;
  const auto pts = degree_box(n, lo, hi);
  for (const LatticePoint& a : pts) {
    for (const LatticePoint& b : pts) {
      ++total;
      if (!sr_generator_admissible(D, a, b)) continue;
      admissible.push_back(operator_text(a, b));
    }
  }
  r.line(std::to_string(admissible.size()) + " of " + std::to_string(total) + " operators x^a d^b with a, b in [" +
         std::to_string(lo) + "," + std::to_string(hi) + "]^" + std::to_string(n) + " are admissible:");
  for (const auto& s : admissible) r.line("  " + s.get<std::string>());
  r.result = {{"box", {lo, hi}}, {"total", total}, {"admissible", admissible}};
  return r;
}

unsigned tuple_order(const Document& d, const OperatorTuple& t) {
  if (d.has("order")) {
    long o = parse_small(d.raw.at("order"), "order");
    if (o < 0) throw validation_error("order must be nonnegative");
    return static_cast<unsigned>(o);
  }
  unsigned o = 0;
  for (const auto& comp : t.components)
    for (const HomogeneousTerm& h : comp) o = std::max(o, h.symbol.total_degree());
  return o;
}

Report oracle_semigroup(const Document& d) {
  Semigroup s = load_semigroup(d);
  LatticePoint m = d.require_degree(s.P.dim());
  long bound = d.bound(kDefaultOracleBound);
  TruncatedAlgebra T = TruncatedAlgebra::semigroup(s.P.monoid(), bound);
  Report r;
  bool all_ok = true;

  const LinearFactorProduct G = g_product(s.P, m);
  const unsigned i = static_cast<unsigned>(G.degree());
  TruncatedAction act = realize(T, m, expand(G));
  const bool in_order = order_check(T, act, i);
  const bool below = i == 0 ? false : order_check(T, act, i - 1);
  all_ok = all_ok && !act.escaped() && in_order && !below;
  r.line("G_m = " + G.to_string() + ", degree " + std::to_string(i));
  r.line("  escapes: " + std::string(act.escaped() ? "t^" + act.escapes.front().to_string() : "none"));
  r.line("  order " + std::to_string(i) + ": " + (in_order ? "pass" : "fail"));
  if (i > 0) r.line("  order " + std::to_string(i - 1) + ": " + (below ? "pass (unexpected)" : "fail (as expected)"));
  r.line("  certified for source degrees <= " + to_string(certified_degree(T, act, i)));
  r.result = {{"m", point_json(m)},
              {"bound", bound},
              {"g", {{"generator", G.to_string()},
                     {"degree", i},
                     {"escapes", act.escaped()},
                     {"order_pass", in_order},
                     {"lower_order_pass", below},
                     {"certified_degree", certified_degree(T, act, i).get_si()}}}};

  if (d.has("ideal")) {
    RadicalMonomialIdealSpec J = load_ideal(d, s.P);
    auto inJ = [&](const LatticePoint& a) { return J.contains(s.P, a); };
    auto all = [](const LatticePoint&) { return true; };
    json contracts = json::array();
    auto check = [&](const char* label, const GradedOperatorPiece& p, bool from_j) {
      for (std::size_t k = 0; k < p.ideal.generators().size(); ++k) {
        TruncatedAction a = realize(T, m, p.ideal.generators()[k]);
        bool ok = maps_into(T, a, from_j ? std::function<bool(const LatticePoint&)>(inJ) : all, inJ);
        all_ok = all_ok && ok;
        std::string name = p.ideal.has_factored() ? p.ideal.factored()[k].to_string() : p.ideal.generators()[k].to_string();
        r.line(std::string("  ") + label + " " + name + ": " + (ok ? "pass" : "fail"));
        contracts.push_back({{"kind", label}, {"generator", name}, {"pass", ok}});
      }
    };
    r.line("maps_into contracts for J = " + ideal_json(J).dump() + ":");
    check("I(J) maps J into J", idealizer_piece(s.P, J, m, s.opt), true);
    check("D(R,J) maps R into J", d_into_piece(s.P, J, m, s.opt), false);
    r.result["contracts"] = contracts;
  }
  r.line(std::string("oracle: ") + (all_ok ? "agrees" : "disagrees"));
  r.result["agrees"] = all_ok;
  r.negative = !all_ok;
  warnings_into(r, s.warnings);
  return r;
}

Report oracle_complex(const Document& d) {
  MonoidalComplex C = load_complex(d);
  OperatorTuple t = load_tuple(d, C);
  long bound = d.bound(kDefaultOracleBound);
  TruncatedAlgebra T = TruncatedAlgebra::complex(C, bound);
  const unsigned order = tuple_order(d, t);
  TruncatedAction act = lift_tuple(C, T, t, bound);
  RetractCheck rc = retract_condition_check(C, T, act, order);
  Report r;
  r.line("lift on the face ring truncated at degree " + std::to_string(bound) + ", order " + std::to_string(order));
  r.line("  retract condition (1): " + std::string(rc.condition1 ? "pass" : "fail"));
  r.line("  retract condition (2): " + std::string(rc.condition2 ? "pass" : "fail"));
  if (!rc.diagnostic.empty()) r.line("  " + rc.diagnostic);
  r.line("  certified for source degrees <= " + to_string(certified_degree(T, act, order)));
  r.result = {{"bound", bound},
              {"order", order},
              {"condition1", rc.condition1},
              {"condition2", rc.condition2},
              {"diagnostic", rc.diagnostic},
              {"certified_degree", certified_degree(T, act, order).get_si()}};
  r.negative = !rc.passed();
  return r;
}

Report cmd_oracle(const Document& d) {
  if (d.has("matrix")) return oracle_semigroup(d);
  if (d.has("complex")) return oracle_complex(d);
  if (d.has("simplicial")) return cmd_sr(d);
  throw validation_error("oracle needs a 'matrix', 'complex' or 'simplicial' document");
}

using Handler = Report (*)(const Document&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h = {
      {"facets", cmd_facets},         {"faces", cmd_faces},   {"dpiece", cmd_dpiece},
      {"ipiece", cmd_ipiece},         {"quotient", cmd_quotient}, {"gorenstein", cmd_gorenstein},
      {"tfr-verify", cmd_tfr_verify}, {"sr", cmd_sr},         {"oracle", cmd_oracle},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, h] : handlers()) n.push_back(name);
    return n;
  }();
  return names;
}

Outcome run_command(const std::string& command, const std::string& document, const Options& options) {
  try {
    auto it = std::find_if(handlers().begin(), handlers().end(), [&](const auto& p) { return p.first == command; });
    if (it == handlers().end()) throw validation_error("unknown command '" + command + "'");
    Document d = parse_document(document, options);
    Report r = it->second(d);
    Outcome out;
    out.exit_code = r.negative ? kNegative : kOk;
    if (options.json) {
      json doc = d.raw;
      r.result["command"] = command;
      doc["result"] = r.result;
      out.output = doc.dump(2) + "\n";
    } else {
      for (const auto& l : r.lines) out.output += l + "\n";
    }
    return out;
  } catch (const Error& e) {
    return {e.kind() == ErrorKind::Resource ? kResource : kValidation, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kValidation, std::string("error: ") + e.what() + "\n"};
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential operators on semigroup rings and toric face rings"};
  app.require_subcommand(1, 1);
  std::string input, format = "text", strict;
  Options opt;
  bool allow_negative = false;

  static const std::map<std::string, std::string> blurb{
      {"facets", "primitive support forms, grading and normality"},
      {"faces", "face lattice of the cone"},
      {"dpiece", "graded piece of D(R) at --degree"},
      {"ipiece", "idealizer piece I(J)_m"},
      {"quotient", "whether I(J)_m / D(R,J)_m is nonzero"},
      {"gorenstein", "canonical-module certificate and operator comparison"},
      {"tfr-verify", "admissibility of an operator tuple on a monoidal complex"},
      {"sr", "generator criterion on a Stanley-Reisner ring"},
      {"oracle", "check an operator on a truncated ring"},
  };
  for (const std::string& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, blurb.count(name) ? blurb.at(name) : "");
    sub->add_option("--input,-i", input, "problem document (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--degree", opt.degree, "multidegree m as \"m1,m2,...\"");
    sub->add_option("--box", opt.box, "degree box as lo:hi");
    sub->add_option("--bound", opt.bound, "degree bound for truncated checks");
    sub->add_option("--strict-normality", strict, "on or off")->check(CLI::IsMember({"on", "off"}));
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--allow-negative", allow_negative, "exit 0 on negative answers");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidation;
  }
  if (!strict.empty()) opt.strict_normality = strict == "on";
  opt.json = format == "json";

  std::ifstream f(input);
  if (!f) {
    err << "error: cannot read " << input << "\n";
    return kValidation;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  Outcome o = run_command(app.get_subcommands().front()->get_name(), buf.str(), opt);
  (o.exit_code >= kValidation ? err : out) << o.output;
  if (o.exit_code == kNegative && allow_negative) return kOk;
  return o.exit_code;
}

}  // namespace dtoric::cli
