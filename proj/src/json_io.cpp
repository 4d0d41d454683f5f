#include "symjet/json_io.hpp"

#include <fstream>
#include <sstream>

namespace symjet {

namespace {

[[noreturn]] void bad(const std::string& what) { throw IoError("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw IoError("cannot parse '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

Json rational_json(const Rational& r) { return rational_to_string(r); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) bad("rational values must be strings like \"3/4\"");
  return rational_from_string(j.get<std::string>());
}

Json poly_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [mon, c] : p.terms()) {
    Json t;
    t["exps"] = mon.e;
    t["coef"] = rational_json(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["nvars"] = p.nvars();
  j["terms"] = std::move(terms);
  return j;
}

Poly poly_from_json(const Json& j) {
  Poly p(int_field(j, "nvars"));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("'terms' must be an array");
  for (const Json& t : terms) {
    const Json& exps = field(t, "exps");
    if (!exps.is_array()) bad("'exps' must be an array");
    std::vector<int> e;
    for (const Json& x : exps) {
      if (!x.is_number_integer() || x.get<int>() < 0) bad("exponents must be non-negative integers");
      e.push_back(x.get<int>());
    }
    p.add_term(Monomial{std::move(e)}, rational_from_json(field(t, "coef")));
  }
  return p;
}

Json hompoly_json(const HomPoly& h) {
  Json j = poly_json(h.poly());
  j["degree"] = h.declared_degree();
  return j;
}

HomPoly hompoly_from_json(const Json& j) {
  return HomPoly(poly_from_json(j), int_field(j, "degree"));
}

Json polymap_json(const PolyMap& f) {
  Json comps = Json::array();
  for (const Poly& c : f.comps) comps.push_back(poly_json(c));
  Json j;
  j["nvars"] = f.nvars;
  j["comps"] = std::move(comps);
  return j;
}

PolyMap polymap_from_json(const Json& j) {
  PolyMap f(int_field(j, "nvars"), 0);
  const Json& comps = field(j, "comps");
  if (!comps.is_array()) bad("'comps' must be an array");
  for (const Json& c : comps) {
    Poly p = poly_from_json(c);
    if (p.nvars() != f.nvars) bad("component variable count differs from the map's");
    f.comps.push_back(std::move(p));
  }
  return f;
}

Json jet_json(const Jet& jet) {
  Json j;
  j["order"] = jet.order;
  j["map"] = polymap_json(jet.map);
  return j;
}

Jet jet_from_json(const Json& j) {
  int order = int_field(j, "order");
  if (order < 1) bad("'order' must be >= 1");
  return Jet(polymap_from_json(field(j, "map")), order);
}

Json rat_vector_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const Rational& x : v) j.push_back(rational_json(x));
  return j;
}

std::vector<Rational> rat_vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rational> v;
  for (const Json& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json rat_matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix rat_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<int>(row.size()) != cols) bad("ragged matrix rows");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = rational_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return m;
}

std::string triplet_dump(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << " " << m.cols() << "\n";
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0)
        out << (r + 1) << " " << (c + 1) << " " << m.at(r, c).get_str() << "\n";
  out << "0 0 0\n";
  return out.str();
}

IntMatrix triplet_parse(const std::string& text) {
  std::istringstream in(text);
  int rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 1 || cols < 1) throw IoError("triplet header must be 'rows cols'");
  IntMatrix m(rows, cols);
  for (;;) {
    long r = 0, c = 0;
    std::string value;
    if (!(in >> r >> c >> value)) throw IoError("triplet stream ended without the 0 0 0 terminator");
    if (r == 0 && c == 0) {
      if (value != "0") throw IoError("triplet terminator must be '0 0 0'");
      break;
    }
    if (r < 1 || r > rows || c < 1 || c > cols) throw IoError("triplet index out of range");
    m.at(static_cast<int>(r - 1), static_cast<int>(c - 1)) = BigInt(value);
  }
  return m;
}

Json line_json(const ProjLine& l) {
  Json j;
  j["p"] = rat_vector_json(l.p);
  j["q"] = rat_vector_json(l.q);
  return j;
}

ProjLine line_from_json(const Json& j) {
  ProjLine l{rat_vector_from_json(field(j, "p")), rat_vector_from_json(field(j, "q"))};
  if (l.p.size() != 4 || l.q.size() != 4) bad("line points must have 4 coordinates");
  return l;
}

Json lines_json(const std::vector<ProjLine>& ls) {
  Json j = Json::array();
  for (const ProjLine& l : ls) j.push_back(line_json(l));
  return j;
}

std::vector<ProjLine> lines_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array of lines");
  std::vector<ProjLine> out;
  for (const Json& l : j) out.push_back(line_from_json(l));
  return out;
}

Json factored_json(const FactoredMap& f) {
  Json factors = Json::array();
  for (const Factor& fac : f.factors) {
    Json j;
    if (const auto* m = std::get_if<RatMatrix>(&fac)) {
      j["kind"] = "linear";
      j["matrix"] = rat_matrix_json(*m);
    } else if (const auto* s = std::get_if<Shear>(&fac)) {
      j["kind"] = "shear";
      j["a"] = rat_vector_json(s->a);
      j["c"] = rational_json(s->c);
      j["m"] = s->m;
    } else {
      const auto& k = std::get<KickMap>(fac);
      j["kind"] = "kick";
      j["g"] = poly_json(k.g);
      j["l"] = rat_matrix_json(k.l);
    }
    factors.push_back(std::move(j));
  }
  Json j;
  j["nvars"] = f.nvars;
  j["factors"] = std::move(factors);
  return j;
}

FactoredMap factored_from_json(const Json& j) {
  FactoredMap f{int_field(j, "nvars"), {}};
  const Json& factors = field(j, "factors");
  if (!factors.is_array()) bad("'factors' must be an array");
  for (const Json& fac : factors) {
    const Json& kind = field(fac, "kind");
    if (!kind.is_string()) bad("'kind' must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "linear") {
      f.factors.emplace_back(rat_matrix_from_json(field(fac, "matrix")));
    } else if (k == "shear") {
      Shear s{rat_vector_from_json(field(fac, "a")), rational_from_json(field(fac, "c")),
              int_field(fac, "m")};
      if (s.m < 1) bad("shear exponent must be >= 1");
      f.factors.emplace_back(std::move(s));
    } else if (k == "kick") {
      f.factors.emplace_back(
          kick_from_potential(poly_from_json(field(fac, "g")), rat_matrix_from_json(field(fac, "l"))));
    } else {
      bad("unknown factor kind '" + k + "'");
    }
  }
  return f;
}

}  // namespace symjet
