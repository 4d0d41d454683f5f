#pragma once

// Exact sparse multivariate polynomials and polynomial maps: monomials under
// a single global graded-lex order, homogeneous pieces, power expansion,
// evaluation, truncated composition and inversion of jets.
//
// The graded-lex order (degree first, then lexicographic with z1 > z2 > ...)
// is fixed once here; every dense vector and matrix column in the project
// uses the enumeration monomials_of_degree() so serialized output is
// byte-reproducible.

#include <map>
#include <vector>

#include "symjet/linalg.hpp"
#include "symjet/scalar.hpp"

namespace symjet {

struct Monomial {
  std::vector<int> e;  // exponents, one per variable

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const {
    int d = 0;
    for (int k : e) d += k;
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded-lex: lower total degree first; within a degree, higher power of the
// earliest variable first (so z1^d precedes z1^{d-1}z2, ..., precedes zn^d).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;  // lexicographically larger exponent vector comes first
  }
};

// All monomials of total degree d in `nvars` variables, in graded-lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// d! / prod(alpha_i!)
BigInt multinomial(int d, const std::vector<int>& alpha);

class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  // Degree of the lowest-degree term; -1 for zero.
  int low_degree() const;

  const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  // Product discarding every term of total degree > maxdeg.
  Poly mul_trunc(const Poly& o, int maxdeg) const;
  Poly truncate(int maxdeg) const;
  Poly homogeneous_part(int k) const;
  Poly derivative(int var) const;
  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  int nvars_;
  std::map<Monomial, Rational, GrlexLess> terms_;  // no zero coefficients stored
};

// A polynomial that is homogeneous of a declared degree (possibly zero).
class HomPoly {
 public:
  HomPoly() : deg_(0) {}
  HomPoly(int nvars, int degree) : p_(nvars), deg_(degree) {}
  // Throws DegreeMismatch unless every term of p has total degree `degree`.
  HomPoly(Poly p, int degree);

  int nvars() const { return p_.nvars(); }
  int declared_degree() const { return deg_; }
  const Poly& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }

  void add_term(const Monomial& m, const Rational& c);
  HomPoly operator+(const HomPoly& o) const;
  HomPoly operator-(const HomPoly& o) const;
  HomPoly operator*(const Rational& c) const;
  bool operator==(const HomPoly& o) const { return deg_ == o.deg_ && p_ == o.p_; }

  // Coefficient vector against monomials_of_degree(nvars, degree).
  std::vector<Rational> dense_coeffs() const;
  static HomPoly from_dense(int nvars, int degree, const std::vector<Rational>& coeffs);

 private:
  Poly p_;
  int deg_;
};

// Tuple of polynomials in a common set of variables.
struct PolyMap {
  int nvars = 0;  // domain dimension
  std::vector<Poly> comps;

  PolyMap() = default;
  PolyMap(int nvars_, int ncomps) : nvars(nvars_), comps(static_cast<std::size_t>(ncomps), Poly(nvars_)) {}

  int ncomps() const { return static_cast<int>(comps.size()); }
  static PolyMap identity(int nvars);
  static PolyMap from_matrix(const RatMatrix& a);
  // Max component degree (-1 if all components vanish).
  int degree() const;
  bool fixes_origin() const;
  // Degree-1 coefficients as a matrix (component i, variable j).
  RatMatrix linear_part() const;
  PolyMap truncate(int maxdeg) const;
  bool operator==(const PolyMap& o) const { return nvars == o.nvars && comps == o.comps; }
};

// A polynomial map considered only up to the given total degree.
struct Jet {
  PolyMap map;
  int order = 0;

  Jet() = default;
  Jet(PolyMap m, int d) : map(m.truncate(d)), order(d) {}
};

// (a . z)^d expanded in the monomial basis.
HomPoly expand_power(const std::vector<Rational>& a, int d);
HomPoly expand_power(const std::vector<BigInt>& a, int d);

Rational evaluate(const HomPoly& p, const std::vector<Rational>& point);
Rational evaluate(const Poly& p, const std::vector<Rational>& point);
std::vector<Rational> evaluate(const PolyMap& f, const std::vector<Rational>& point);

// Jet of F(G(z)) truncated at total degree d. Requires G(0)=0 unless the
// truncation order covers the full composition (deg F * deg G <= d).
Jet compose_jet(const PolyMap& f, const PolyMap& g, int d);

// Jet G with F(G(z)) = z + O(degree d+1) = G(F(z)). Fixed-point iteration
// G <- A^{-1}(z - (F - A)(G)), one pass per degree, exactly d iterations.
Jet invert_jet(const PolyMap& f, int d);

std::vector<HomPoly> homogeneous_component(const PolyMap& f, int k);

// (dQ/dz1, ..., dQ/dzn), each homogeneous of degree deg(Q)-1.
std::vector<HomPoly> gradient(const HomPoly& q);

}  // namespace symjet
