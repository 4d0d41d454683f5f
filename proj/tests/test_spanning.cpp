#include "doctest.h"
#include "symjet/spanning.hpp"

namespace {

using namespace symjet;

RatMatrix sym2(long a11, long a12, long a22) {
  RatMatrix m(2, 2);
  m.at(0, 0) = Rational(a11);
  m.at(0, 1) = Rational(a12);
  m.at(1, 0) = Rational(a12);
  m.at(1, 1) = Rational(a22);
  return m;
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

LagrangianFrame horizontal(int n) { return graph_frame(RatMatrix(n, n)); }

LagrangianFrame vertical(int n) {
  RatMatrix rows(n, 2 * n);
  for (int i = 0; i < n; ++i) rows.at(i, n + i) = Rational(1);
  return LagrangianFrame{n, rows};
}

// Oracle for the C^4 degree-3 criterion: the exact rank of the simplex power
// matrix of the full five-frame family, computed by Bareiss elimination with
// no modular shortcuts.
int c4_d3_rank_oracle(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c) {
  std::vector<LagrangianFrame> frames = {horizontal(2), vertical(2), graph_frame(a),
                                         graph_frame(b), graph_frame(c)};
  SampledFamily fam = simplex_sampled_family(frames, 3);
  return rank_exact(build_power_matrix(fam, 3).dense_exact());
}

}  // namespace

TEST_CASE("dimension bookkeeping") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 7) == 0);

  CHECK(small_n(4, 3) == 20);
  CHECK(small_n(6, 12) == 6188);
  CHECK(small_n(3, 12) == 91);
  CHECK(small_m(4, 3) == 5);
  CHECK(small_m(4, 4) == 7);
  CHECK(small_m(6, 12) == 68);

  Dims d = dims(6, 12);
  CHECK(d.big_n == 6188);
  REQUIRE(d.m.has_value());
  CHECK(*d.m == 68);
  Dims odd = dims(3, 12);
  CHECK(odd.big_n == 91);
  CHECK_FALSE(odd.m.has_value());
}

TEST_CASE("power matrices hold expanded sample powers") {
  // single horizontal frame in C^4 with simplex samples at d = 2
  SampledFamily fam = simplex_sampled_family({horizontal(2)}, 2);
  REQUIRE(fam.frames.size() == 1);
  REQUIRE(fam.samples[0].size() == 3);  // N(2,2) = 3 samples

  PowerMatrix pm = build_power_matrix(fam, 2);
  CHECK(pm.rows() == 3);
  CHECK(pm.cols() == 10);  // N(4,2)
  CHECK(pm.frame_of_row == std::vector<int>{0, 0, 0});

  IntMatrix dense = pm.dense_exact();
  // first sample is the (2,0) lattice node 2*row0, stored primitive as e1,
  // so its power row is z1^2: 1 on the first grlex monomial, 0 elsewhere
  CHECK(dense.at(0, 0) == 1);
  for (int c = 1; c < 10; ++c) CHECK(dense.at(0, c) == 0);
  // every row must match expand_power of its direction
  for (int r = 0; r < pm.rows(); ++r) {
    std::vector<Rational> dir;
    for (const BigInt& x : pm.row_dirs[static_cast<std::size_t>(r)]) dir.emplace_back(x);
    std::vector<Rational> want = expand_power(dir, 2).dense_coeffs();
    for (int c = 0; c < 10; ++c) CHECK(Rational(dense.at(r, c)) == want[static_cast<std::size_t>(c)]);
  }

  // the modular reduction agrees with the exact matrix entrywise
  std::uint64_t p = 1000003;
  ModMatrix dm = pm.dense_mod(p);
  for (int r = 0; r < pm.rows(); ++r)
    for (int c = 0; c < pm.cols(); ++c) CHECK(dm.at(r, c) == reduce_mod(dense.at(r, c), p));
}

TEST_CASE("degree-3 spanning criterion in C^4 against the exact rank oracle") {
  RatMatrix a = RatMatrix::identity(2);
  RatMatrix b = sym2(2, 0, 3);
  RatMatrix good_c = sym2(3, 1, 5);

  // oracle first: the determinant criterion must match full-rank power spans
  CHECK(c4_d3_rank_oracle(a, b, good_c) == 20);
  CHECK(span_criterion_c4_d3(a, b, good_c));

  RatMatrix bad_c = sym2(3, 0, 5);  // det [[1,2,3],[0,0,0],[1,3,5]] = 0
  CHECK(c4_d3_rank_oracle(a, b, bad_c) < 20);
  CHECK_FALSE(span_criterion_c4_d3(a, b, bad_c));

  // malformed inputs are rejected, not silently classified
  RatMatrix nonsym(2, 2);
  nonsym.at(0, 0) = Rational(1);
  nonsym.at(0, 1) = Rational(2);
  nonsym.at(1, 0) = Rational(3);
  nonsym.at(1, 1) = Rational(4);
  CHECK_THROWS_AS(span_criterion_c4_d3(nonsym, b, good_c), InvalidFamily);
  CHECK_THROWS_AS(span_criterion_c4_d3(sym2(0, 0, 0), b, good_c), InvalidFamily);
  CHECK_THROWS_AS(span_criterion_c4_d3(a, a, good_c), InvalidFamily);

  // the criterion matches the oracle on seeded random symmetric triples
  SplitMix64 rng(77);
  int agree_true = 0, agree_false = 0;
  for (int t = 0; t < 12; ++t) {
    RatMatrix ra = sym2(1 + static_cast<long>(rng.uniform(0, 5)), static_cast<long>(rng.uniform(0, 5)),
                        1 + static_cast<long>(rng.uniform(0, 5)));
    RatMatrix rb = sym2(1 + static_cast<long>(rng.uniform(0, 5)), static_cast<long>(rng.uniform(0, 5)),
                        1 + static_cast<long>(rng.uniform(0, 5)));
    RatMatrix rc = sym2(1 + static_cast<long>(rng.uniform(0, 5)), static_cast<long>(rng.uniform(0, 5)),
                        1 + static_cast<long>(rng.uniform(0, 5)));
    // skip triples that break the family preconditions
    std::vector<LagrangianFrame> fr = {horizontal(2), vertical(2), graph_frame(ra),
                                       graph_frame(rb), graph_frame(rc)};
    if (!pairwise_transverse(fr).ok) continue;
    if (det_exact(clear_denominators_rows(ra)) == 0 || det_exact(clear_denominators_rows(rb)) == 0 ||
        det_exact(clear_denominators_rows(rc)) == 0)
      continue;
    bool crit = span_criterion_c4_d3(ra, rb, rc);
    bool full = c4_d3_rank_oracle(ra, rb, rc) == 20;
    CHECK(crit == full);
    (crit ? agree_true : agree_false)++;
  }
  CHECK(agree_true > 0);  // the sample must exercise the spanning branch
}

TEST_CASE("spanning certification") {
  // C^6, degree 3: M(6,3) = 6 generic frames span all 56 cubic monomials
  NormalFamily nf = random_normal_family(3, 6, 50, 11);
  SampledFamily fam = simplex_sampled_family(nf.frames(), 3);
  SpanReport rep = certify_span(fam, 3, 6);
  CHECK(rep.nvars == 6);
  CHECK(rep.degree == 3);
  CHECK(rep.cols == 56);
  CHECK(rep.rows == 60);  // 6 frames x N(3,3) = 10 samples
  CHECK(rep.target_rank == 56);
  CHECK(rep.certified);
  CHECK(rep.verdict == "CERTIFIED_MAX_RANK");
  CHECK(rep.failure_kind.empty());
  REQUIRE_FALSE(rep.ranks.empty());
  CHECK(rep.ranks.back() == 56);

  // duplicate frames are rejected structurally before any rank work
  std::vector<LagrangianFrame> dup = {nf.frames()[0], nf.frames()[0], nf.frames()[2]};
  SpanReport drep = certify_span(simplex_sampled_family(dup, 3), 3, 2);
  CHECK_FALSE(drep.certified);
  CHECK(drep.failure_kind == "structural:duplicate_frames");

  // C^4, degree 4 with M(4,4) = 7 frames: obstructed, never certifies
  NormalFamily nf4 = random_normal_family(2, 7, 50, 13);
  SpanReport rep4 = certify_span(simplex_sampled_family(nf4.frames(), 4), 4, 4);
  CHECK_FALSE(rep4.certified);
  CHECK(rep4.verdict == "INCONCLUSIVE");
  CHECK(rep4.failure_kind == "generic_rank");
  CHECK(rep4.target_rank == 35);
  for (int r : rep4.ranks) CHECK(r <= 34);
}

TEST_CASE("quartic obstruction scan stays below full rank") {
  ToddStats stats = todd_scan(25, 20, 1);
  CHECK(stats.trials == 25);
  CHECK(stats.max_rank <= 34);
  CHECK(stats.counterexample_seeds.empty());
  int total = 0;
  for (const auto& [rank, count] : stats.histogram) {
    CHECK(rank <= stats.max_rank);
    total += count;
  }
  CHECK(total == 25);

  // six frames leave at least 35 - 30 = 5 quartics uncovered
  NormalFamily six = random_normal_family(2, 6, 20, 3);
  SampledFamily fam = simplex_sampled_family(six.frames(), 4);
  CHECK(rank_exact(build_power_matrix(fam, 4).dense_exact()) <= 30);
}

TEST_CASE("contact quartic vanishes on all seven lines") {
  std::vector<ProjLine> lines = random_disjoint_involutive_lines(7, 20, 91);
  HomPoly q = quartic_from_contact(lines);
  CHECK_FALSE(q.is_zero());
  CHECK(q.declared_degree() == 4);
  CHECK(q.nvars() == 4);
  for (const ProjLine& line : lines)
    for (const std::vector<Rational>& pt : fixed_points_on_line(line, 5)) CHECK(evaluate(q, pt) == 0);

  // determinism: the same lines give the same quartic
  HomPoly q2 = quartic_from_contact(random_disjoint_involutive_lines(7, 20, 91));
  CHECK(q2 == q);

  // membership in the restriction-matrix kernel, stated with exact arithmetic
  IntMatrix t = restriction_matrix(lines, {}, 4);
  std::vector<Rational> coeffs = q.dense_coeffs();
  for (int r = 0; r < t.rows(); ++r) {
    Rational acc(0);
    for (int c = 0; c < t.cols(); ++c) acc += Rational(t.at(r, c)) * coeffs[static_cast<std::size_t>(c)];
    CHECK(acc == 0);
  }
}

TEST_CASE("restriction matrices and their evaluation duality") {
  // 3 lines at degree 2: 9 rows, N(4,2) = 10 columns, a 1-dimensional kernel
  std::vector<ProjLine> three = random_disjoint_involutive_lines(3, 20, 8);
  IntMatrix t = restriction_matrix(three, {}, 2);
  CHECK(t.rows() == 9);
  CHECK(t.cols() == 10);
  RatMatrix tq = to_rational(t);
  CHECK(nullspace(tq).size() == static_cast<std::size_t>(10 - rank_exact(t)));

  // degree 0: a single point gives the single row [1]
  ProjLine l0 = three[0];
  IntMatrix pt_row = restriction_matrix({}, {fixed_points_on_line(l0, 1)[0]}, 0);
  CHECK(pt_row.rows() == 1);
  CHECK(pt_row.cols() == 1);
  CHECK(pt_row.at(0, 0) != 0);

  // rank of the restriction matrix equals the rank of the brute-force
  // evaluation matrix at the same points (oracle: direct monomial evaluation)
  std::vector<std::vector<Rational>> pts;
  for (const ProjLine& line : three)
    for (const std::vector<Rational>& p : fixed_points_on_line(line, 3)) pts.push_back(p);
  std::vector<Monomial> mons = monomials_of_degree(4, 2);
  RatMatrix ev(static_cast<int>(pts.size()), static_cast<int>(mons.size()));
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < mons.size(); ++c) {
      Rational v(1);
      for (int k = 0; k < 4; ++k)
        for (int e = 0; e < mons[c].e[static_cast<std::size_t>(k)]; ++e) v *= pts[r][static_cast<std::size_t>(k)];
      ev.at(static_cast<int>(r), static_cast<int>(c)) = v;
    }
  CHECK(rank_exact(t) == rank_rational(ev));
}

TEST_CASE("maximal-rank interpolation checks") {
  CHECK(hd_parameters(3).r == 5);
  CHECK(hd_parameters(3).q == 0);
  CHECK(hd_parameters(4).r == 7);
  CHECK(hd_parameters(4).q == 0);
  CHECK(hd_parameters(2).r == 3);
  CHECK(hd_parameters(2).q == 1);

  // d = 2: 3 lines + 1 point, 10x10, bijective for generic positions
  RankReport r2 = hd_check(2, 20, 5, 4);
  CHECK(r2.rows == 10);
  CHECK(r2.cols == 10);
  CHECK(r2.maximal);
  CHECK(r2.verdict == "MAXIMAL");

  // d = 4: the contact quartic forces singularity for every position
  RankReport r4 = hd_check(4, 20, 5, 4);
  CHECK(r4.rows == 35);
  CHECK_FALSE(r4.maximal);
  CHECK(r4.verdict == "NOT_MAXIMAL");
  CHECK(r4.exact_rank == 34);
  CHECK_FALSE(r4.certified_mod);

  // direct check_maximal_rank agrees on the 7-line quartic case
  std::vector<ProjLine> seven = random_disjoint_involutive_lines(7, 20, 5);
  RankReport direct = check_maximal_rank(seven, {}, 4, 4);
  CHECK_FALSE(direct.maximal);
  CHECK(direct.exact_rank == 34);
  for (int rk : direct.ranks) CHECK(rk <= 34);
}
