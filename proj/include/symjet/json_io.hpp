#pragma once

// JSON (de)serialization for the library types plus the plain-text triplet
// matrix dump. All object serializers emit nlohmann::ordered_json so a fixed
// config yields byte-identical files; numbers that can exceed 2^53 travel as
// strings.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "symjet/completion.hpp"
#include "symjet/lagrangian.hpp"
#include "symjet/poly.hpp"
#include "symjet/spanning.hpp"
#include "symjet/symplectic.hpp"

namespace symjet {

using Json = nlohmann::ordered_json;

// --- files ---
Json read_json_file(const std::string& path);          // throws Error on I/O or parse
void write_json_file(const std::string& path, const Json& j);  // dump(2) + '\n'
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// --- scalars ---
Json rational_json(const Rational& r);                 // "p/q" (or "p" when q = 1)
Rational rational_from_json(const Json& j);

// --- polynomials: {"nvars": n, "terms": [{"exps": [...], "coef": "p/q"}, ...]}
// terms in graded-lex order
Json poly_json(const Poly& p);
Poly poly_from_json(const Json& j);
Json hompoly_json(const HomPoly& h);                   // adds "degree"
HomPoly hompoly_from_json(const Json& j);

// --- maps ---
Json polymap_json(const PolyMap& f);                   // {"nvars": n, "comps": [...]}
PolyMap polymap_from_json(const Json& j);
Json jet_json(const Jet& jet);                         // {"order": d, "map": {...}}
Jet jet_from_json(const Json& j);

// --- matrices and vectors ---
Json rat_vector_json(const std::vector<Rational>& v);
std::vector<Rational> rat_vector_from_json(const Json& j);
Json rat_matrix_json(const RatMatrix& m);              // row-major array of arrays
RatMatrix rat_matrix_from_json(const Json& j);

// Plain-text triplet dump: "rows cols", one "r c value" line per nonzero
// (1-based indices), terminated by "0 0 0".
std::string triplet_dump(const IntMatrix& m);
IntMatrix triplet_parse(const std::string& text);

// --- geometry ---
Json line_json(const ProjLine& l);                     // {"p": [...], "q": [...]}
ProjLine line_from_json(const Json& j);
Json lines_json(const std::vector<ProjLine>& ls);
std::vector<ProjLine> lines_from_json(const Json& j);

// --- factored maps: {"nvars": n, "factors": [...]}, first factor acts first.
// Factors are tagged: {"kind": "linear", "matrix": ...},
// {"kind": "shear", "a": [...], "c": "p/q", "m": m},
// {"kind": "kick", "g": {...}, "l": ...}.
Json factored_json(const FactoredMap& f);
FactoredMap factored_from_json(const Json& j);

}  // namespace symjet
