#pragma once

// Jet completion: factoring a symplectic d-jet into an exactly symplectic
// polynomial map. The naive strategy appends one shear per power of the
// per-level potential; the grouped strategy accumulates each level into
// frames_for_level(2n,k+1) kick maps conjugated by one fixed Lagrangian
// family, which keeps the expanded degree of the composition at most
// d^(max level frame count) - this is d^{M(2n,d+1)} except in C^4 when a
// degree-4 level occurs (see frames_for_level).

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "symjet/spanning.hpp"

namespace symjet {

// A decomposition of a degree-D form as sum_i gamma_i (b_i . z)^D.
using PowerDecomposition = std::vector<std::pair<std::vector<Rational>, Rational>>;
using BasisSupplier = std::function<PowerDecomposition(const HomPoly&)>;

// Explicit decomposition over the simplex lattice {beta in N^n : |beta| = D}:
// the powers (beta . z)^D form a basis, and the coefficient of each one is an
// apolar pairing with the lattice's Lagrange-style dual polynomial, so no
// linear solve is needed.
PowerDecomposition simplex_power_decomposition(const HomPoly& q);

// Completion into [linear part, shears...]: level k = 2..d appends shears
// whose fields sum to the degree-k residual. `basis` defaults to the simplex
// decomposition; a custom supplier is validated before use.
FactoredMap complete_jet_naive(const Jet& p, const BasisSupplier& basis = BasisSupplier());

// Frames needed to decompose degree-`degree` potentials in C^{two_n}.
// M(2n,degree) everywhere except (2n,degree) = (4,4): any 7 involutive
// frames fail there (disjoint lines lie on a quartic, so their powers stop
// at rank 34 of 35; intersecting lines share a power), hence one extra
// frame. Every other pair is generically spanned by M frames.
int frames_for_level(int two_n, int degree);

// max of frames_for_level over potential degrees 3..d+1 (at least 2): the
// kick-factor count of a grouped completion of a d-jet, and the exponent of
// its degree bound d^max_frames.
int max_frames(int two_n, int d);

// Certified decomposition data for the grouped strategy, shared by every
// completion of the same shape: one transverse family of max_frames(2n,d)
// Lagrangians (level k uses the first frames_for_level(2n,k+1) of them), and
// per potential degree D = 3..d+1 a spanning certificate plus N(2n,D)
// selected power rows to decompose against.
struct GroupedFamilies {
  // One potential degree's certificate and decomposition basis.
  struct LevelBasis {
    int degree = 0;       // potential degree D
    int frame_count = 0;  // M(2n,D) frames in play at this degree
    std::vector<std::uint64_t> primes;
    std::vector<int> ranks;
    std::vector<int> row_frame;                 // frame index of each selected row
    std::vector<std::vector<BigInt>> row_dir;   // sample vector of each selected row
    IntMatrix basis_rows;                       // N(2n,D) x N(2n,D), rows = power rows
  };

  int two_n = 0;
  int max_potential_degree = 0;  // d+1
  std::uint64_t seed = 0;
  int retries = 0;  // family regenerations forced by a failed certificate
  NormalFamily family;
  std::vector<LagrangianFrame> frames;
  std::vector<RatMatrix> conjugators;       // L_j per frame
  std::vector<RatMatrix> conjugators_tinv;  // (L_j^T)^{-1}: frame span -> {z'=0}
  std::map<int, LevelBasis> levels;         // keyed by potential degree
};

GroupedFamilies make_grouped_families(int two_n, int d, std::uint64_t max_coeff,
                                      std::uint64_t seed, int prime_count = 8);

// Completion into [linear part, kicks...] with at most M(2n,d+1) kicks; a
// jet that already is a single kick map (conjugated by the identity or by
// one of the family's matrices) is returned as that one factor.
FactoredMap complete_jet_grouped(const Jet& p, const GroupedFamilies& fams);

struct CompletionReport {
  bool jet_matches = false;
  bool factors_symplectic = false;
  bool pass = false;
  int factor_count = 0;
  BigInt degree_bound;         // product of factor degrees >= the true degree
  std::string first_mismatch;  // first differing coefficient when jets differ
};

// Asserts jet_d(F) = jet_d(P) and exact symplecticity of every factor;
// reports the expanded-degree bound. Carries pass/fail instead of throwing.
CompletionReport verify_completion(const FactoredMap& f, const Jet& p, int d);

// Seeded generators for property tests and demos: a random symplectic
// matrix (product of graph shears and a block-diagonal invertible factor),
// a random exactly symplectic map in factored form, and its d-jet.
RatMatrix random_symplectic_matrix(int two_n, std::uint64_t max_coeff, std::uint64_t seed);
FactoredMap random_symplectic_factored(int two_n, int max_degree, int factor_count,
                                       std::uint64_t max_coeff, std::uint64_t seed);
Jet random_symplectic_jet(int two_n, int d, std::uint64_t max_coeff, std::uint64_t seed);

}  // namespace symjet
