#pragma once

// The rank-certification engine: dimension bookkeeping, power matrices of
// sampled Lagrangian families, modular certification of spanning, the
// 7-plane quartic obstruction scan, the constructive contact quartic, and
// restriction matrices for lines and points in P^3.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symjet/lagrangian.hpp"

namespace symjet {

// N(n,d) = C(n+d-1,d), the number of degree-d monomials in n variables;
// for even n also M(n,d) = ceil(N(n,d) / N(n/2,d)), the minimal number of
// Lagrangian subspaces whose power spaces could fill degree d.
struct Dims {
  int n = 0, d = 0;
  BigInt big_n;
  std::optional<BigInt> m;
};

Dims dims(int n, int d);

BigInt binomial(int n, int k);

// M(n,d) as an int (requires even n; guards against overflow).
int small_m(int n, int d);
// N(n,d) as an int (guards against overflow).
int small_n(int n, int d);

// Frames plus explicit per-frame sample vectors, scaled to primitive integer
// vectors (scaling a sample scales its power row, so every rank statement
// and every decomposition against the stored rows is unaffected).
struct SampledFamily {
  int two_n = 0;
  std::vector<LagrangianFrame> frames;
  std::vector<std::vector<std::vector<BigInt>>> samples;  // [frame][sample][coord]
};

SampledFamily simplex_sampled_family(const std::vector<LagrangianFrame>& frames, int d);
// count = N(n,d) seeded integer samples per frame.
SampledFamily random_sampled_family(const std::vector<LagrangianFrame>& frames, int d,
                                    std::uint64_t max_coeff, std::uint64_t seed);

// Rows are the coefficient vectors of (a.z)^d in graded-lex monomial order,
// one per sample; the dense forms are materialized on demand (the d=12
// instance only ever exists modulo a prime).
struct PowerMatrix {
  int nvars = 0;
  int degree = 0;
  std::vector<std::vector<BigInt>> row_dirs;  // sample vectors, row order
  std::vector<int> frame_of_row;

  int rows() const { return static_cast<int>(row_dirs.size()); }
  int cols() const;

  IntMatrix dense_exact() const;
  ModMatrix dense_mod(std::uint64_t p) const;
};

PowerMatrix build_power_matrix(const SampledFamily& fam, int d);

struct SpanReport {
  int nvars = 0, degree = 0;
  int rows = 0, cols = 0, target_rank = 0;
  std::vector<std::uint64_t> primes;
  std::vector<int> ranks;  // rank mod primes[i]
  bool certified = false;
  std::string verdict;       // CERTIFIED_MAX_RANK | INCONCLUSIVE
  std::string failure_kind;  // "", structural:..., generic_rank
};

// Tries primes until one reaches rank = min(rows, cols). A certificate is a
// proof (rank mod p <= rank over Q); INCONCLUSIVE is not a refutation.
SpanReport certify_span(const SampledFamily& fam, int d, int prime_count);

// Degree-3 spanning criterion in C^4 for the family [I,0],[0,I],[I,A],[I,B],[I,C]:
// true iff det[[a11,b11,c11],[a12,b12,c12],[a22,b22,c22]] != 0.
bool span_criterion_c4_d3(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c);

struct ToddStats {
  int trials = 0;
  int max_rank = 0;
  std::map<int, int> histogram;  // exact rank -> count
  std::vector<std::uint64_t> counterexample_seeds;  // rank-35 trials (must stay empty)
};

// For each trial: a random transverse 7-frame family in C^4, the exact rank
// of its 35-column degree-4 power matrix. Rank 35 would put seven pairwise
// transverse Lagrangian planes on no common quartic - a counterexample.
ToddStats todd_scan(int trials, std::uint64_t max_coeff, std::uint64_t seed);

// The quartic containing seven disjoint involutive lines, built from the
// contact structure: quadratic vector fields V with omega(z, V(z)) = 0 that
// are tangent to every line's Lagrangian plane form a solution space of
// dimension >= 2 modulo the radial fields {f(z) z : f linear}; for two
// independent such fields the form q = omega(V1, V2) is a nonzero quartic
// vanishing on every line (asserted at 5 points per line before returning).
HomPoly quartic_from_contact(const std::vector<ProjLine>& lines);

// Rows = evaluations of the N(4,d) degree-d monomials at d+1 fixed points
// per line plus one row per extra point; denominators cleared per row.
IntMatrix restriction_matrix(const std::vector<ProjLine>& lines,
                             const std::vector<std::vector<Rational>>& extra_points, int d);

struct RankReport {
  int rows = 0, cols = 0, target_rank = 0;
  std::vector<std::uint64_t> primes;
  std::vector<int> ranks;
  bool maximal = false;
  bool certified_mod = false;  // a modular rank reached the target
  int exact_rank = -1;         // computed only when no prime certified
  std::string verdict;         // MAXIMAL | NOT_MAXIMAL
};

// Maximal rank <=> rank = min(N(4,d), r(d+1)+q): certified modularly,
// refuted (or confirmed) exactly when no prime reaches the target.
RankReport check_maximal_rank(const std::vector<ProjLine>& lines,
                              const std::vector<std::vector<Rational>>& extra_points, int d,
                              int prime_count);

struct HdParameters {
  int r = 0;  // floor(C(d+3,3) / (d+1)) lines
  int q = 0;  // leftover points on one more line, so r(d+1)+q = C(d+3,3)
};

HdParameters hd_parameters(int d);

// Builds r random disjoint involutive lines plus q points on a further
// disjoint involutive line and checks bijectivity of the square restriction
// matrix. Expected maximal for every d != 4; always singular at d = 4.
RankReport hd_check(int d, std::uint64_t max_coeff, std::uint64_t seed, int prime_count);

}  // namespace symjet
