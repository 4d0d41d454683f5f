#include "doctest.h"
#include "symjet/linalg.hpp"
#include "symjet/rng.hpp"

namespace {

using namespace symjet;

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

// Independent determinant oracle: cofactor expansion.
BigInt det_cofactor(const IntMatrix& m) {
  const int n = m.rows();
  if (n == 1) return m.at(0, 0);
  BigInt acc = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int cc = 0, k = 0; cc < n; ++cc) {
        if (cc == c) continue;
        minor.at(r - 1, k++) = m.at(r, cc);
      }
    BigInt term = m.at(0, c) * det_cofactor(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

IntMatrix random_int_matrix(int rows, int cols, SplitMix64& rng, long lo = -9, long hi = 9) {
  IntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = static_cast<long>(rng.uniform(0, static_cast<std::uint64_t>(hi - lo))) + lo;
  return m;
}

}  // namespace

TEST_CASE("matrix product and apply") {
  IntMatrix a = int_matrix({{1, 2}, {3, 4}});
  IntMatrix b = int_matrix({{0, 1}, {1, 0}});
  CHECK(a * b == int_matrix({{2, 1}, {4, 3}}));
  RatMatrix ra = to_rational(a);
  std::vector<Rational> v = ra.apply({Rational(1), Rational(1)});
  CHECK(v == std::vector<Rational>{Rational(3), Rational(7)});
  CHECK(a.transpose() == int_matrix({{1, 3}, {2, 4}}));
}

TEST_CASE("determinant matches cofactor expansion") {
  CHECK(det_exact(int_matrix({{2, 0}, {0, 3}})) == 6);
  CHECK(det_exact(int_matrix({{1, 2}, {2, 4}})) == 0);
  SplitMix64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix m = random_int_matrix(4, 4, rng);
    CHECK(det_exact(m) == det_cofactor(m));
  }
}

TEST_CASE("exact rank and modular rank") {
  IntMatrix m = int_matrix({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}});
  CHECK(rank_exact(m) == 2);
  const std::uint64_t p = prime_stream(30, 1)[0];
  CHECK(rank_mod(m, p) == 2);

  // A matrix that drops rank mod 2 but not over Q (and not mod a 31-bit
  // prime): modular rank can only undershoot.
  IntMatrix drop = int_matrix({{2, 0}, {0, 1}});
  CHECK(rank_exact(drop) == 2);
  CHECK(rank_mod(drop, p) == 2);

  SplitMix64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix r = random_int_matrix(5, 7, rng);
    CHECK(rank_mod(r, p) <= rank_exact(r));
    ModMatrix mm = reduce_matrix_mod(r, p);
    CHECK(rank_mod(r, p) == rank_destructive(mm));
  }
}

TEST_CASE("independent_rows_mod finds a row basis") {
  IntMatrix m = int_matrix({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {2, 3, 0}, {0, 0, 5}});
  const std::uint64_t p = prime_stream(30, 1)[0];
  std::vector<int> sel = independent_rows_mod(m, p);
  REQUIRE(sel.size() == 3);
  CHECK(sel == std::vector<int>{0, 2, 4});
  std::vector<int> two = independent_rows_mod(m, p, 2);
  CHECK(two == std::vector<int>{0, 2});
}

TEST_CASE("rref, rank and nullspace over Q") {
  RatMatrix m = to_rational(int_matrix({{1, 2, 0, 1}, {0, 0, 1, 2}, {1, 2, 1, 3}}));
  CHECK(rank_rational(m) == 2);
  std::vector<std::vector<Rational>> ns = nullspace(m);
  REQUIRE(ns.size() == 2);  // 4 cols - rank 2
  for (const auto& v : ns) {
    std::vector<Rational> image = m.apply(v);
    for (const Rational& x : image) CHECK(x == 0);
  }

  RatMatrix e = to_rational(int_matrix({{0, 1}, {1, 0}}));
  std::vector<int> pivots = rref(e);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(e == RatMatrix::identity(2));
}

TEST_CASE("inverse") {
  RatMatrix a = to_rational(int_matrix({{2, 1}, {1, 1}}));
  std::optional<RatMatrix> inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == RatMatrix::identity(2));
  CHECK_FALSE(inverse(to_rational(int_matrix({{1, 2}, {2, 4}}))).has_value());
}

TEST_CASE("solve_exact on both code paths") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    // Build an invertible 6x6 system with a known rational solution.
    IntMatrix a(6, 6);
    do {
      a = random_int_matrix(6, 6, rng);
    } while (det_exact(a) == 0);
    std::vector<Rational> x;
    for (int i = 0; i < 6; ++i) {
      // reduce explicitly: the two-argument mpq constructor does not
      Rational xi(static_cast<long>(rng.uniform(0, 40)) - 20, 1 + static_cast<long>(rng.uniform(0, 6)));
      xi.canonicalize();
      x.push_back(xi);
    }
    std::vector<Rational> b(6, Rational(0));
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) b[static_cast<std::size_t>(r)] += Rational(a.at(r, c)) * x[static_cast<std::size_t>(c)];

    // Bareiss path (below the threshold) and the forced multimodular path
    // must agree with the planted solution exactly.
    CHECK(solve_exact(a, b) == x);
    CHECK(solve_exact(a, b, 0) == x);
  }
}

TEST_CASE("solve_exact rejects singular systems") {
  IntMatrix a = int_matrix({{1, 2}, {2, 4}});
  std::vector<Rational> b = {Rational(1), Rational(2)};
  CHECK_THROWS_AS(solve_exact(a, b), Error);
}

TEST_CASE("clear_denominators_rows scales each row by its denominator lcm") {
  RatMatrix m(2, 2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = Rational(1, 3);
  m.at(1, 0) = Rational(4);
  m.at(1, 1) = Rational(6);
  IntMatrix cleared = clear_denominators_rows(m);
  CHECK(cleared == int_matrix({{3, 2}, {4, 6}}));
}

TEST_CASE("ceil_sqrt") {
  CHECK(ceil_sqrt(BigInt(0)) == 0);
  CHECK(ceil_sqrt(BigInt(1)) == 1);
  CHECK(ceil_sqrt(BigInt(2)) == 2);
  CHECK(ceil_sqrt(BigInt(4)) == 2);
  CHECK(ceil_sqrt(BigInt(17)) == 5);
}
