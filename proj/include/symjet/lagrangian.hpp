#pragma once

// Lagrangian subspaces of C^{2n} and involutive lines in P^3: frames,
// transversality, the graph normal form [I,0],[0,I],[I,A_j], seeded random
// generation, and the n=2 dictionary between Lagrangian planes and lines.

#include <cstdint>
#include <utility>
#include <vector>

#include "symjet/rng.hpp"
#include "symjet/symplectic.hpp"

namespace symjet {

// An n-dimensional omega-isotropic subspace of C^{2n}, spanned by the rows.
struct LagrangianFrame {
  int n = 0;
  RatMatrix rows;  // n x 2n, rank n
};

// Rank n and all pairwise omega products of rows zero.
bool is_lagrangian(const LagrangianFrame& frame);

struct TransversalityResult {
  bool ok = true;
  std::pair<int, int> offending{-1, -1};  // first failing pair when !ok
};

// True iff every pair of frames meets only at the origin, i.e. every stacked
// 2n x 2n matrix is nonsingular.
TransversalityResult pairwise_transverse(const std::vector<LagrangianFrame>& frames);

// The transverse family [I,0], [0,I], [I,A_3], ..., [I,A_k]: the A_j are
// symmetric with det(A_j) != 0 and det(A_i - A_j) != 0 for i != j.
struct NormalFamily {
  int n = 0;
  std::vector<RatMatrix> a;  // A_3..A_k; may be empty (count 2)
  int retries = 0;           // generation retries, recorded for reports

  int count() const { return 2 + static_cast<int>(a.size()); }
  std::vector<LagrangianFrame> frames() const;
};

// Entries drawn uniformly from the integers [1, max_coeff]; each candidate
// A_j is retried until the family invariants hold. Deterministic per seed.
NormalFamily random_normal_family(int n, int count, std::uint64_t max_coeff,
                                  std::uint64_t seed);

// Canonicalization of an arbitrary pairwise-transverse Lagrangian family:
// a symplectic change of basis C (columns = new basis) sending the first
// frame to [I,0], the second to [0,I], and the rest to graphs [I,A_j].
struct NormalFormResult {
  RatMatrix c;  // 2n x 2n symplectic; new coordinates are C^{-1} z
  NormalFamily family;
};

NormalFormResult normal_form_reduce(const std::vector<LagrangianFrame>& frames);

// Seeded samples: integer row (entries in [1, max_coeff]) times the frame.
std::vector<std::vector<Rational>> sample_vectors(const LagrangianFrame& frame, int count,
                                                  std::uint64_t max_coeff, std::uint64_t seed);

// Deterministic samples: one vector per exponent beta in N^n with |beta| = d
// (graded-lex order), namely sum_i beta_i row_i. The degree-d powers of these
// N(n,d) vectors span the same space as the powers of generic samples, so
// they derandomize every rank statement about one frame.
std::vector<std::vector<Rational>> simplex_samples(const LagrangianFrame& frame, int d);

// Validating wrapper around lagrangian_symplectic_from_rows.
RatMatrix lagrangian_to_symplectic_matrix(const LagrangianFrame& frame);

// A projective line in P^3 through two independent points of Q^4. The line
// is involutive iff omega(p,q) = 0, i.e. iff its affine cone is Lagrangian.
struct ProjLine {
  std::vector<Rational> p, q;
};

// The two frame rows as points (requires n = 2).
ProjLine line_of(const LagrangianFrame& frame);
// Inverse up to row operations; throws NotInvolutive when omega(p,q) != 0.
LagrangianFrame frame_of(const ProjLine& line);

// Disjoint in P^3 iff the stacked 4x4 matrix of both frames is nonsingular.
bool lines_disjoint(const ProjLine& a, const ProjLine& b);

// r pairwise disjoint involutive lines, deterministic per seed.
std::vector<ProjLine> random_disjoint_involutive_lines(int r, std::uint64_t max_coeff,
                                                       std::uint64_t seed);

// count distinct points s p + t q with distinct parameters [s:t]: first
// (1,0) and (0,1), then seed-drawn (1,t) with pairwise distinct t.
std::vector<std::vector<Rational>> sample_points_on_line(const ProjLine& line, int count,
                                                         std::uint64_t seed);

// Deterministic variant used by restriction matrices and vanishing checks:
// parameters (1,0), (0,1), (1,1), (1,2), ..., (1,count-2). Any set of
// distinct parameters induces the same rank data (evaluation of binary
// degree-d forms at d+1 distinct points is an isomorphism).
std::vector<std::vector<Rational>> fixed_points_on_line(const ProjLine& line, int count);

}  // namespace symjet
