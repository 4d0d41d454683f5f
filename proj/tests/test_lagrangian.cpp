#include "doctest.h"
#include "symjet/lagrangian.hpp"

namespace {

using namespace symjet;

RatMatrix mat(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rational(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

LagrangianFrame frame(const std::vector<std::vector<long>>& rows) {
  return LagrangianFrame{static_cast<int>(rows.size()), mat(rows)};
}

LagrangianFrame graph_frame(const RatMatrix& a) {
  int n = a.rows();
  RatMatrix rows(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    rows.at(i, i) = Rational(1);
    for (int j = 0; j < n; ++j) rows.at(i, n + j) = a.at(i, j);
  }
  return LagrangianFrame{n, rows};
}

}  // namespace

TEST_CASE("lagrangian recognition") {
  CHECK(is_lagrangian(frame({{1, 0, 0, 0}, {0, 1, 0, 0}})));
  CHECK(is_lagrangian(frame({{0, 0, 1, 0}, {0, 0, 0, 1}})));
  CHECK(is_lagrangian(frame({{1, 0, 2, 1}, {0, 1, 1, 3}})));   // graph of symmetric A
  CHECK_FALSE(is_lagrangian(frame({{1, 0, 2, 5}, {0, 1, 1, 3}})));  // A not symmetric
  CHECK_FALSE(is_lagrangian(frame({{1, 0, 0, 0}, {2, 0, 0, 0}})));  // rank deficient
  CHECK_FALSE(is_lagrangian(frame({{1, 0, 0, 0}, {0, 0, 1, 0}})));  // omega(e1,e3)=1
}

TEST_CASE("pairwise transversality reports the first offending pair") {
  LagrangianFrame horiz = frame({{1, 0, 0, 0}, {0, 1, 0, 0}});
  LagrangianFrame vert = frame({{0, 0, 1, 0}, {0, 0, 0, 1}});
  LagrangianFrame graph = frame({{1, 0, 2, 1}, {0, 1, 1, 3}});

  TransversalityResult ok = pairwise_transverse({horiz, vert, graph});
  CHECK(ok.ok);

  // graphs of A and B intersect iff det(A - B) = 0
  RatMatrix a = mat({{2, 1}, {1, 3}});
  RatMatrix b = mat({{5, 1}, {1, 6}});  // A - B = [[-3,0],[0,-3]], invertible
  CHECK(pairwise_transverse({graph_frame(a), graph_frame(b)}).ok);
  RatMatrix c = mat({{2, 1}, {1, 6}});  // A - C = [[0,0],[0,-3]], singular
  TransversalityResult bad = pairwise_transverse({vert, graph_frame(a), graph_frame(c)});
  CHECK_FALSE(bad.ok);
  CHECK(bad.offending == std::pair<int, int>{1, 2});
}

TEST_CASE("random normal families respect their invariants and the seed") {
  NormalFamily fam = random_normal_family(3, 6, 20, 42);
  CHECK(fam.count() == 6);
  CHECK(fam.a.size() == 4);
  std::vector<LagrangianFrame> fr = fam.frames();
  REQUIRE(fr.size() == 6);
  for (const LagrangianFrame& f : fr) CHECK(is_lagrangian(f));
  CHECK(pairwise_transverse(fr).ok);
  for (const RatMatrix& a : fam.a) {
    CHECK(a.rows() == 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(a.at(i, j) == a.at(j, i));
        CHECK(a.at(i, j).get_den() == 1);
        CHECK(a.at(i, j) >= 1);
        CHECK(a.at(i, j) <= 20);
      }
  }

  // determinism per seed, sensitivity to it
  NormalFamily again = random_normal_family(3, 6, 20, 42);
  REQUIRE(again.a.size() == fam.a.size());
  for (std::size_t k = 0; k < fam.a.size(); ++k) CHECK(again.a[k] == fam.a[k]);
  NormalFamily other = random_normal_family(3, 6, 20, 43);
  bool all_same = true;
  for (std::size_t k = 0; k < fam.a.size(); ++k) all_same = all_same && other.a[k] == fam.a[k];
  CHECK_FALSE(all_same);

  // a two-frame family carries no graph matrices at all
  CHECK(random_normal_family(2, 2, 1, 7).a.empty());
}

TEST_CASE("normal form reduction canonicalizes an arbitrary transverse family") {
  // start from a normal family, scramble it by a symplectic matrix, reduce back
  NormalFamily fam = random_normal_family(2, 4, 9, 5);
  std::vector<LagrangianFrame> fr = fam.frames();

  RatMatrix l = mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {3, 1, 1, 0}, {1, -2, 0, 1}});
  REQUIRE(is_symplectic_matrix(l));
  std::vector<LagrangianFrame> moved;
  for (const LagrangianFrame& f : fr) {
    // rows transform by L^T on the right when points transform by L
    moved.push_back(LagrangianFrame{f.n, f.rows * l.transpose()});
    CHECK(is_lagrangian(moved.back()));
  }

  NormalFormResult res = normal_form_reduce(moved);
  CHECK(is_symplectic_matrix(res.c));
  CHECK(res.family.count() == 4);
  std::vector<LagrangianFrame> canon = res.family.frames();

  // frame j of the reduced family spans the same subspace as the original
  // frame mapped through the change of coordinates C^{-1}
  RatMatrix cinvt = inverse(res.c).value().transpose();
  for (std::size_t j = 0; j < moved.size(); ++j) {
    RatMatrix mapped = moved[j].rows * cinvt;
    RatMatrix stacked(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 4; ++k) {
        stacked.at(i, k) = mapped.at(i, k);
        stacked.at(2 + i, k) = canon[j].rows.at(i, k);
      }
    CHECK(rank_rational(stacked) == 2);
  }

  CHECK_THROWS_AS(normal_form_reduce({fr[0], frame({{1, 0, 0, 0}, {0, 0, 1, 0}})}), NotLagrangian);
  CHECK_THROWS_AS(normal_form_reduce({fr[0]}), InvalidFamily);
  CHECK_THROWS_AS(normal_form_reduce({fr[0], fr[0]}), InvalidFamily);
}

TEST_CASE("frame sampling stays in the span") {
  LagrangianFrame f = frame({{1, 0, 2, 1}, {0, 1, 1, 3}});
  std::vector<std::vector<Rational>> pts = sample_vectors(f, 5, 10, 99);
  REQUIRE(pts.size() == 5);
  for (const std::vector<Rational>& p : pts) {
    RatMatrix stacked(3, 4);
    for (int k = 0; k < 4; ++k) {
      stacked.at(0, k) = f.rows.at(0, k);
      stacked.at(1, k) = f.rows.at(1, k);
      stacked.at(2, k) = p[static_cast<std::size_t>(k)];
    }
    CHECK(rank_rational(stacked) == 2);
  }

  // simplex samples: one per degree-d exponent, N(2,3) = 4 of them
  std::vector<std::vector<Rational>> simplex = simplex_samples(f, 3);
  REQUIRE(simplex.size() == 4);
  // first exponent (3,0): 3*row0; last (0,3): 3*row1
  CHECK(simplex.front()[0] == 3);
  CHECK(simplex.back()[3] == 9);
}

TEST_CASE("lines in P^3 and their Lagrangian cones") {
  LagrangianFrame f = frame({{1, 0, 2, 1}, {0, 1, 1, 3}});
  ProjLine line = line_of(f);
  CHECK(line.p == std::vector<Rational>{Rational(1), Rational(0), Rational(2), Rational(1)});
  LagrangianFrame back = frame_of(line);
  CHECK(is_lagrangian(back));
  CHECK(rank_rational(back.rows) == 2);

  ProjLine noninv{{Rational(1), Rational(0), Rational(0), Rational(0)},
                  {Rational(0), Rational(0), Rational(1), Rational(0)}};
  CHECK_THROWS_AS(frame_of(noninv), NotInvolutive);
  ProjLine degenerate{{Rational(1), Rational(0), Rational(0), Rational(0)},
                      {Rational(2), Rational(0), Rational(0), Rational(0)}};
  CHECK_THROWS_AS(frame_of(degenerate), Error);

  ProjLine horiz = line_of(frame({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  ProjLine vert = line_of(frame({{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(lines_disjoint(horiz, vert));
  CHECK_FALSE(lines_disjoint(horiz, horiz));
}

TEST_CASE("random disjoint involutive lines") {
  std::vector<ProjLine> lines = random_disjoint_involutive_lines(7, 20, 2024);
  REQUIRE(lines.size() == 7);
  for (const ProjLine& l : lines) {
    CHECK(omega(l.p, l.q) == 0);
    CHECK(is_lagrangian(frame_of(l)));
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) CHECK(lines_disjoint(lines[i], lines[j]));

  std::vector<ProjLine> again = random_disjoint_involutive_lines(7, 20, 2024);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CHECK(again[i].p == lines[i].p);
    CHECK(again[i].q == lines[i].q);
  }
}

TEST_CASE("point sampling along a line") {
  ProjLine line{{Rational(1), Rational(0), Rational(2), Rational(1)},
                {Rational(0), Rational(1), Rational(1), Rational(3)}};

  std::vector<std::vector<Rational>> pts = sample_points_on_line(line, 4, 31);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0] == line.p);
  CHECK(pts[1] == line.q);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK(pts[i] != pts[j]);

  std::vector<std::vector<Rational>> fixed = fixed_points_on_line(line, 5);
  REQUIRE(fixed.size() == 5);
  CHECK(fixed[0] == line.p);
  CHECK(fixed[1] == line.q);
  for (int k = 2; k < 5; ++k) {
    long t = k - 1;  // parameters (1,1), (1,2), ...
    for (int c = 0; c < 4; ++c)
      CHECK(fixed[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] ==
            line.p[static_cast<std::size_t>(c)] + line.q[static_cast<std::size_t>(c)] * Rational(t));
  }
}
