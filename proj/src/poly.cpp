#include "symjet/poly.hpp"

#include <algorithm>

namespace symjet {

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  if (nvars < 1 || d < 0) throw Error("monomials_of_degree: bad arguments");
  std::vector<Monomial> out;
  Monomial cur;
  cur.e.assign(static_cast<std::size_t>(nvars), 0);
  // Recursive enumeration emits exponent vectors in decreasing lex order,
  // which is exactly the graded-lex order within one degree.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      cur.e[static_cast<std::size_t>(var)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      cur.e[static_cast<std::size_t>(var)] = k;
      self(self, var + 1, remaining - k);
    }
    cur.e[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, d);
  return out;
}

BigInt multinomial(int d, const std::vector<int>& alpha) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(d));
  for (int a : alpha) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(a));
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.get_mpz_t());
  }
  return r;
}

// --- Poly ---------------------------------------------------------------------

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  Monomial one;
  one.e.assign(static_cast<std::size_t>(nvars), 0);
  p.add_term(one, c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Monomial m;
  m.e.assign(static_cast<std::size_t>(nvars), 0);
  m.e[static_cast<std::size_t>(i)] = 1;
  p.add_term(m, Rational(1));
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Poly::low_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();  // grlex order: lowest degree first
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_) throw DimensionMismatch("add_term: wrong variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw DimensionMismatch("poly addition variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw DimensionMismatch("poly subtraction variable counts");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const { return mul_trunc(o, -1); }

Poly Poly::operator*(const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::mul_trunc(const Poly& o, int maxdeg) const {
  if (nvars_ != o.nvars_) throw DimensionMismatch("poly product variable counts");
  Poly r(nvars_);
  Monomial prod;
  prod.e.assign(static_cast<std::size_t>(nvars_), 0);
  for (const auto& [ma, ca] : terms_) {
    int da = ma.degree();
    if (maxdeg >= 0 && da > maxdeg) break;  // grlex: all later terms are bigger
    for (const auto& [mb, cb] : o.terms_) {
      if (maxdeg >= 0 && da + mb.degree() > maxdeg) break;
      for (int i = 0; i < nvars_; ++i)
        prod.e[static_cast<std::size_t>(i)] = ma.e[static_cast<std::size_t>(i)] + mb.e[static_cast<std::size_t>(i)];
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Poly Poly::truncate(int maxdeg) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > maxdeg) break;
    r.terms_.emplace(m, c);
  }
  return r;
}

Poly Poly::homogeneous_part(int k) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    int d = m.degree();
    if (d > k) break;
    if (d == k) r.terms_.emplace(m, c);
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    int k = m.e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Monomial d = m;
    d.e[static_cast<std::size_t>(var)] = k - 1;
    r.add_term(d, c * k);
  }
  return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw DimensionMismatch("evaluate point size");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < m.e[static_cast<std::size_t>(i)]; ++k) t *= point[static_cast<std::size_t>(i)];
    }
    total += t;
  }
  return total;
}

// --- HomPoly ------------------------------------------------------------------

HomPoly::HomPoly(Poly p, int degree) : p_(std::move(p)), deg_(degree) {
  for (const auto& [m, c] : p_.terms()) {
    (void)c;
    if (m.degree() != deg_) throw DegreeMismatch("HomPoly: term of degree " + std::to_string(m.degree()) +
                                                 " in a declared degree-" + std::to_string(deg_) + " polynomial");
  }
}

void HomPoly::add_term(const Monomial& m, const Rational& c) {
  if (m.degree() != deg_) throw DegreeMismatch("HomPoly::add_term degree");
  p_.add_term(m, c);
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
  if (deg_ != o.deg_) throw DegreeMismatch("HomPoly addition degrees");
  return HomPoly(p_ + o.p_, deg_);
}

HomPoly HomPoly::operator-(const HomPoly& o) const {
  if (deg_ != o.deg_) throw DegreeMismatch("HomPoly subtraction degrees");
  return HomPoly(p_ - o.p_, deg_);
}

HomPoly HomPoly::operator*(const Rational& c) const { return HomPoly(p_ * c, deg_); }

std::vector<Rational> HomPoly::dense_coeffs() const {
  std::vector<Monomial> basis = monomials_of_degree(nvars(), deg_);
  std::vector<Rational> out(basis.size(), Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = p_.coeff(basis[i]);
  return out;
}

HomPoly HomPoly::from_dense(int nvars, int degree, const std::vector<Rational>& coeffs) {
  std::vector<Monomial> basis = monomials_of_degree(nvars, degree);
  if (coeffs.size() != basis.size()) throw DimensionMismatch("from_dense coefficient count");
  HomPoly q(nvars, degree);
  for (std::size_t i = 0; i < basis.size(); ++i) q.add_term(basis[i], coeffs[i]);
  return q;
}

// --- PolyMap ------------------------------------------------------------------

PolyMap PolyMap::identity(int nvars) {
  PolyMap f(nvars, nvars);
  for (int i = 0; i < nvars; ++i) f.comps[static_cast<std::size_t>(i)] = Poly::variable(nvars, i);
  return f;
}

PolyMap PolyMap::from_matrix(const RatMatrix& a) {
  PolyMap f(a.cols(), a.rows());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) {
      if (a.at(r, c) == 0) continue;
      Monomial m;
      m.e.assign(static_cast<std::size_t>(a.cols()), 0);
      m.e[static_cast<std::size_t>(c)] = 1;
      f.comps[static_cast<std::size_t>(r)].add_term(m, a.at(r, c));
    }
  return f;
}

int PolyMap::degree() const {
  int d = -1;
  for (const Poly& p : comps) d = std::max(d, p.degree());
  return d;
}

bool PolyMap::fixes_origin() const {
  for (const Poly& p : comps) {
    if (!p.is_zero() && p.low_degree() == 0) return false;
  }
  return true;
}

RatMatrix PolyMap::linear_part() const {
  RatMatrix a(ncomps(), nvars);
  for (int i = 0; i < ncomps(); ++i) {
    Monomial m;
    m.e.assign(static_cast<std::size_t>(nvars), 0);
    for (int j = 0; j < nvars; ++j) {
      m.e[static_cast<std::size_t>(j)] = 1;
      a.at(i, j) = comps[static_cast<std::size_t>(i)].coeff(m);
      m.e[static_cast<std::size_t>(j)] = 0;
    }
  }
  return a;
}

PolyMap PolyMap::truncate(int maxdeg) const {
  PolyMap f(nvars, ncomps());
  for (int i = 0; i < ncomps(); ++i) f.comps[static_cast<std::size_t>(i)] = comps[static_cast<std::size_t>(i)].truncate(maxdeg);
  return f;
}

// --- free functions -------------------------------------------------------------

HomPoly expand_power(const std::vector<Rational>& a, int d) {
  int n = static_cast<int>(a.size());
  if (n < 1 || d < 0) throw Error("expand_power: bad arguments");
  HomPoly out(n, d);
  std::vector<Monomial> basis = monomials_of_degree(n, d);
  for (const Monomial& m : basis) {
    Rational c(multinomial(d, m.e));
    bool zero = false;
    for (int i = 0; i < n && !zero; ++i) {
      for (int k = 0; k < m.e[static_cast<std::size_t>(i)]; ++k) {
        if (a[static_cast<std::size_t>(i)] == 0) {
          zero = true;
          break;
        }
        c *= a[static_cast<std::size_t>(i)];
      }
    }
    if (!zero) out.add_term(m, c);
  }
  return out;
}

HomPoly expand_power(const std::vector<BigInt>& a, int d) {
  std::vector<Rational> ar(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) ar[i] = Rational(a[i]);
  return expand_power(ar, d);
}

Rational evaluate(const HomPoly& p, const std::vector<Rational>& point) { return p.poly().evaluate(point); }
Rational evaluate(const Poly& p, const std::vector<Rational>& point) { return p.evaluate(point); }

std::vector<Rational> evaluate(const PolyMap& f, const std::vector<Rational>& point) {
  std::vector<Rational> out;
  out.reserve(f.comps.size());
  for (const Poly& p : f.comps) out.push_back(p.evaluate(point));
  return out;
}

Jet compose_jet(const PolyMap& f, const PolyMap& g, int d) {
  if (f.nvars != g.ncomps()) throw DimensionMismatch("compose_jet: inner/outer dimensions");
  if (d < 0) throw Error("compose_jet: negative truncation order");
  bool g_fixes_origin = g.fixes_origin();
  if (!g_fixes_origin) {
    // Truncated composition is only degree-consistent when the inner map
    // kills the origin; otherwise insist on a full (untruncated) composite.
    int full = std::max(0, f.degree()) * std::max(0, g.degree());
    if (d < full) throw Error("compose_jet: inner map has a constant term; request order >= " + std::to_string(full));
  }

  // Powers of the components of g, truncated at degree d, built on demand.
  std::vector<std::vector<Poly>> pow(static_cast<std::size_t>(g.ncomps()));
  for (int j = 0; j < g.ncomps(); ++j)
    pow[static_cast<std::size_t>(j)].push_back(Poly::constant(g.nvars, Rational(1)));
  auto power = [&](int j, int k) -> const Poly& {
    auto& column = pow[static_cast<std::size_t>(j)];
    while (static_cast<int>(column.size()) <= k)
      column.push_back(column.back().mul_trunc(g.comps[static_cast<std::size_t>(j)], d));
    return column[static_cast<std::size_t>(k)];
  };

  PolyMap out(g.nvars, f.ncomps());
  for (int i = 0; i < f.ncomps(); ++i) {
    Poly acc(g.nvars);
    for (const auto& [m, c] : f.comps[static_cast<std::size_t>(i)].terms()) {
      if (g_fixes_origin && m.degree() > d) break;  // cannot contribute below the cut
      Poly term = Poly::constant(g.nvars, c);
      for (int j = 0; j < f.nvars; ++j) {
        int k = m.e[static_cast<std::size_t>(j)];
        if (k > 0) term = term.mul_trunc(power(j, k), d);
      }
      acc += term;
    }
    out.comps[static_cast<std::size_t>(i)] = acc;
  }
  return Jet(out, d);
}

Jet invert_jet(const PolyMap& f, int d) {
  if (f.nvars != f.ncomps()) throw DimensionMismatch("invert_jet: map must be an endomorphism");
  if (!f.fixes_origin()) throw Error("invert_jet: map must fix the origin");
  RatMatrix a = f.linear_part();
  std::optional<RatMatrix> ainv = inverse(a);
  if (!ainv) throw SingularLinearPart("invert_jet: linear part is singular");
  PolyMap ainv_map = PolyMap::from_matrix(*ainv);

  // nonlinear part N = f - A
  PolyMap nonlinear(f.nvars, f.nvars);
  PolyMap a_map = PolyMap::from_matrix(a);
  for (int i = 0; i < f.nvars; ++i)
    nonlinear.comps[static_cast<std::size_t>(i)] =
        f.comps[static_cast<std::size_t>(i)] - a_map.comps[static_cast<std::size_t>(i)];

  // G <- A^{-1}(z - N(G)); each iteration fixes one more degree.
  PolyMap g = ainv_map;
  for (int it = 1; it < d; ++it) {
    PolyMap n_of_g = compose_jet(nonlinear, g, d).map;
    PolyMap z_minus(f.nvars, f.nvars);
    for (int i = 0; i < f.nvars; ++i)
      z_minus.comps[static_cast<std::size_t>(i)] = Poly::variable(f.nvars, i) - n_of_g.comps[static_cast<std::size_t>(i)];
    g = compose_jet(ainv_map, z_minus, d).map;
  }
  return Jet(g, d);
}

std::vector<HomPoly> homogeneous_component(const PolyMap& f, int k) {
  std::vector<HomPoly> out;
  out.reserve(f.comps.size());
  for (const Poly& p : f.comps) out.emplace_back(p.homogeneous_part(k), k);
  return out;
}

std::vector<HomPoly> gradient(const HomPoly& q) {
  std::vector<HomPoly> out;
  out.reserve(static_cast<std::size_t>(q.nvars()));
  int d = std::max(q.declared_degree() - 1, 0);
  for (int i = 0; i < q.nvars(); ++i) out.emplace_back(q.poly().derivative(i), d);
  return out;
}

}  // namespace symjet
