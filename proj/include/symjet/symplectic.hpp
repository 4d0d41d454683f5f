#pragma once

// The symplectic core: the standard form omega, the involution J,
// symplecticity checks (exact, with witnesses), the Hamiltonian criterion
// and potentials, shears and kick maps, and factored symplectic maps.
//
// Conventions (fixed once):
//   omega(u,v) = sum_{j<=n} (u_j v_{n+j} - u_{n+j} v_j),  Omega = [[0,I],[-I,0]]
//   J(z) = (-z_{n+1},...,-z_{2n}, z_1,...,z_n),            J = -Omega as a matrix
//   (Ju).v = omega(u,v)
//   A linear map L is symplectic iff L^T Omega L = Omega.

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "symjet/poly.hpp"

namespace symjet {

// Matrix of omega in the standard basis (2n x 2n).
RatMatrix omega_matrix(int two_n);

Rational omega(const std::vector<Rational>& u, const std::vector<Rational>& v);

// omega applied to vectors of polynomials (used for contact-field pairings).
Poly omega(const std::vector<Poly>& u, const std::vector<Poly>& v);

template <class T>
std::vector<T> apply_J(const std::vector<T>& z) {
  if (z.size() % 2 != 0) throw OddDimension("apply_J needs an even-dimensional vector");
  std::size_t n = z.size() / 2;
  std::vector<T> out(z.size());
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = -z[n + i];
    out[n + i] = z[i];
  }
  return out;
}

bool is_symplectic_matrix(const RatMatrix& l);

// --- symplecticity of polynomial maps -----------------------------------------

// A 2-form with polynomial coefficients: sum_{p<q} comps[{p,q}] dz_p ^ dz_q.
struct TwoForm {
  int nvars = 0;
  std::map<std::pair<int, int>, Poly> comps;

  bool is_zero() const { return comps.empty(); }
};

struct DefectResult {
  bool ok = false;
  // When !ok: the lowest offending homogeneous piece of F*omega - omega.
  int witness_degree = -1;
  TwoForm witness;
};

// True iff (F*omega - omega)(z) = O(|z|^d) at the origin, computed exactly
// from the Jacobian of the d-jet. Requires F(0)=0 and an even number of
// components matching the variable count.
DefectResult symplectic_defect(const PolyMap& f, int d);

// Complete certificate: the defect coefficients of a degree-D map have
// degree <= 2(D-1), so vanishing to order 2D-1 proves F*omega = omega
// as a polynomial identity.
bool is_exactly_symplectic(const PolyMap& f);

// True iff the 1-form P -| omega is closed (all mixed partials agree).
// P must have 2n components, all homogeneous of one degree.
bool is_hamiltonian(const std::vector<HomPoly>& p);

// The degree-(m+1) potential Q with J grad Q = P, via the Euler formula
// Q = -(1/(m+1)) (JP).z. Throws NotHamiltonian.
HomPoly potential(const std::vector<HomPoly>& p);

// J grad Q.
std::vector<HomPoly> hamiltonian_from_potential(const HomPoly& q);

// --- shears and kicks -----------------------------------------------------------

// S(z) = z + c (Ja.z)^m a; exactly symplectic; inverse is weight -c.
struct Shear {
  std::vector<Rational> a;
  Rational c;
  int m = 2;
};

PolyMap shear_apply(const Shear& s);
std::vector<HomPoly> shear_field(const Shear& s);
Shear shear_inverse(const Shear& s);

// L^{-1} o G o L with G(z',z'') = (z' + grad g(z''), z''); exactly symplectic.
// g lives in the last n coordinates; every term must have degree >= 2 so the
// kick fixes the origin with identity linear part. The potential is allowed
// to be inhomogeneous (completions accumulate one homogeneous piece per
// level into a single kick).
struct KickMap {
  Poly g;      // potential, n variables
  RatMatrix l; // 2n x 2n symplectic conjugator
};

KickMap kick_from_potential(const Poly& g, const RatMatrix& l);
PolyMap kick_apply(const KickMap& k);

// Symplectic matrix L such that (L^{-1})^T maps the row span of `rows`
// (an n x 2n Lagrangian frame) onto {z_1 = ... = z_n = 0}; the contract is
// verified by assertion before returning.
RatMatrix lagrangian_symplectic_from_rows(const RatMatrix& rows);

// --- factored maps ---------------------------------------------------------------

// Ordered list of exactly-symplectic factors; factors[0] acts first, so the
// composition is factors[r-1] o ... o factors[0].
using Factor = std::variant<RatMatrix, Shear, KickMap>;

struct FactoredMap {
  int nvars = 0;
  std::vector<Factor> factors;
};

PolyMap factor_to_map(const Factor& f, int nvars);
// Composition degree of one factor (1 for linear, m for a shear,
// deg(g)-1 for a kick).
int factor_degree(const Factor& f);
bool factor_is_symplectic(const Factor& f, int nvars);

// d-jet of the composition.
Jet factored_jet(const FactoredMap& f, int d);
// Full expansion; degree can reach the product of factor degrees, so this is
// opt-in and should only be used when factored_degree_bound() is small.
PolyMap factored_expand(const FactoredMap& f);
// Product of factor degrees: an upper bound for the composition degree.
BigInt factored_degree_bound(const FactoredMap& f);

}  // namespace symjet
