#include "doctest.h"
#include "symjet/poly.hpp"
#include "symjet/rng.hpp"

namespace {

using namespace symjet;

// Independent count of degree-d monomials in n variables by direct recursion.
long count_monomials(int nvars, int d) {
  if (nvars == 1) return 1;
  long total = 0;
  for (int first = 0; first <= d; ++first) total += count_monomials(nvars - 1, d - first);
  return total;
}

Poly var(int nvars, int i) { return Poly::variable(nvars, i); }

HomPoly random_hompoly(int nvars, int d, SplitMix64& rng) {
  HomPoly q(nvars, d);
  for (const Monomial& m : monomials_of_degree(nvars, d))
    q.add_term(m, Rational(static_cast<long>(rng.uniform(0, 12)) - 6));
  return q;
}

// mpq_class's two-argument constructor does not reduce the fraction, so
// canonicalize explicitly (the library relies on reduced inputs).
Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Rational> random_point(int nvars, SplitMix64& rng) {
  std::vector<Rational> p;
  for (int i = 0; i < nvars; ++i) p.push_back(frac(static_cast<long>(rng.uniform(0, 10)) - 5, 1 + static_cast<long>(rng.uniform(0, 3))));
  return p;
}

}  // namespace

TEST_CASE("monomial enumeration is graded-lex and complete") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) {
      std::vector<Monomial> ms = monomials_of_degree(n, d);
      CHECK(static_cast<long>(ms.size()) == count_monomials(n, d));
      GrlexLess less;
      for (std::size_t i = 0; i + 1 < ms.size(); ++i) CHECK(less(ms[i], ms[i + 1]));
      for (const Monomial& m : ms) CHECK(m.degree() == d);
    }
  std::vector<Monomial> deg2 = monomials_of_degree(2, 2);
  CHECK(deg2.front() == Monomial{{2, 0}});
  CHECK(deg2.back() == Monomial{{0, 2}});
}

TEST_CASE("multinomial coefficients") {
  CHECK(multinomial(3, {1, 1, 1}) == 6);
  CHECK(multinomial(4, {2, 2}) == 6);
  CHECK(multinomial(5, {5, 0}) == 1);
  // sum over all exponent patterns of degree d equals n^d
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 5; ++d) {
      BigInt total = 0;
      for (const Monomial& m : monomials_of_degree(n, d)) total += multinomial(d, m.e);
      BigInt want = 1;
      for (int k = 0; k < d; ++k) want *= n;
      CHECK(total == want);
    }
}

TEST_CASE("polynomial arithmetic identities") {
  const int n = 2;
  Poly x = var(n, 0), y = var(n, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  Poly p = x * x * y - y * y * Rational(2);
  CHECK(p.degree() == 3);
  CHECK(p.low_degree() == 2);
  CHECK(p.coeff(Monomial{{2, 1}}) == 1);
  CHECK(p.derivative(1) == x * x - y * Rational(4));
  CHECK(p.homogeneous_part(3) == x * x * y);
  CHECK(p.homogeneous_part(1).is_zero());
  CHECK((-p) + p == Poly(n));

  // mul_trunc == multiply then truncate
  Poly q = (x + y + Poly::constant(n, Rational(1)));
  CHECK(p.mul_trunc(q, 3) == (p * q).truncate(3));
}

TEST_CASE("evaluation is a ring morphism") {
  SplitMix64 rng(3);
  const int n = 3;
  Poly x = var(n, 0), y = var(n, 1), z = var(n, 2);
  Poly a = x * y - z * Rational(3) + Poly::constant(n, Rational(1, 2));
  Poly b = z * z + x;
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> pt = random_point(n, rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST_CASE("expand_power matches pointwise powers") {
  std::vector<Rational> b = {Rational(1), Rational(2)};
  HomPoly sq = expand_power(b, 2);
  Poly x = var(2, 0), y = var(2, 1);
  CHECK(sq.poly() == x * x + x * y * Rational(4) + y * y * Rational(4));

  SplitMix64 rng(17);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> dir = random_point(3, rng);
    std::vector<Rational> pt = random_point(3, rng);
    for (int d = 1; d <= 4; ++d) {
      Rational dot(0);
      for (int i = 0; i < 3; ++i) dot += dir[static_cast<std::size_t>(i)] * pt[static_cast<std::size_t>(i)];
      Rational want(1);
      for (int k = 0; k < d; ++k) want *= dot;
      CHECK(evaluate(expand_power(dir, d), pt) == want);
    }
  }
}

TEST_CASE("homogeneous wrapper validates and round-trips densely") {
  Poly x = var(2, 0), y = var(2, 1);
  CHECK_THROWS_AS(HomPoly(x * x + y, 2), DegreeMismatch);
  HomPoly h(x * x - y * y * Rational(5), 2);
  std::vector<Rational> dense = h.dense_coeffs();
  REQUIRE(dense.size() == 3);  // x^2, xy, y^2
  CHECK(dense[0] == 1);
  CHECK(dense[1] == 0);
  CHECK(dense[2] == -5);
  CHECK(HomPoly::from_dense(2, 2, dense) == h);
}

TEST_CASE("gradient satisfies the Euler identity") {
  SplitMix64 rng(9);
  for (int d = 2; d <= 4; ++d) {
    HomPoly q = random_hompoly(3, d, rng);
    std::vector<HomPoly> g = gradient(q);
    REQUIRE(g.size() == 3);
    Poly euler(3);
    for (int i = 0; i < 3; ++i) euler += var(3, i) * g[static_cast<std::size_t>(i)].poly();
    CHECK(euler == q.poly() * Rational(d));
  }
}

TEST_CASE("jet composition and inversion") {
  const int n = 2;
  Poly x = var(n, 0), y = var(n, 1);

  // f(x,y) = (x + y^2, y), g = f^{-1} = (x - y^2, y): exact inverse pair.
  PolyMap f(n, 0);
  f.comps = {x + y * y, y};
  Jet finv = invert_jet(f, 4);
  PolyMap want(n, 0);
  want.comps = {x - y * y, y};
  CHECK(finv.map == want);
  CHECK(compose_jet(f, finv.map, 4).map == PolyMap::identity(n));
  CHECK(compose_jet(f, PolyMap::identity(n), 3).map == f.truncate(3));

  // Inversion of a jet with non-identity linear part round-trips to order d.
  PolyMap g(n, 0);
  g.comps = {x * Rational(2) + y + x * y, y - x + y * y * Rational(3)};
  for (int d = 1; d <= 4; ++d) {
    Jet ginv = invert_jet(g, d);
    CHECK(compose_jet(g, ginv.map, d).map == PolyMap::identity(n));
    CHECK(compose_jet(ginv.map, g, d).map == PolyMap::identity(n));
  }
  PolyMap sing(n, 0);
  sing.comps = {x + y, x + y};
  CHECK_THROWS_AS(invert_jet(sing, 2), SingularLinearPart);
}

TEST_CASE("polymap helpers") {
  const int n = 2;
  Poly x = var(n, 0), y = var(n, 1);
  PolyMap f(n, 0);
  f.comps = {x + y * y, y * Rational(3)};
  CHECK(f.fixes_origin());
  CHECK(f.degree() == 2);
  RatMatrix lin = f.linear_part();
  CHECK(lin.at(0, 0) == 1);
  CHECK(lin.at(0, 1) == 0);
  CHECK(lin.at(1, 1) == 3);
  CHECK(PolyMap::from_matrix(lin).comps[0] == x);

  Jet j(f, 1);
  CHECK(j.map.comps[0] == x);

  std::vector<HomPoly> quad = homogeneous_component(f, 2);
  CHECK(quad[0].poly() == y * y);
  CHECK(quad[1].is_zero());
}
