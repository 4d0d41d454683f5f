#include "symjet/symplectic.hpp"

#include <algorithm>

namespace symjet {

RatMatrix omega_matrix(int two_n) {
  if (two_n % 2 != 0) throw OddDimension("omega_matrix dimension");
  int n = two_n / 2;
  RatMatrix o(two_n, two_n);
  for (int i = 0; i < n; ++i) {
    o.at(i, n + i) = 1;
    o.at(n + i, i) = -1;
  }
  return o;
}

Rational omega(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  if (u.size() != v.size()) throw DimensionMismatch("omega argument sizes");
  if (u.size() % 2 != 0) throw OddDimension("omega needs even-dimensional vectors");
  std::size_t n = u.size() / 2;
  Rational s(0);
  for (std::size_t j = 0; j < n; ++j) s += u[j] * v[n + j] - u[n + j] * v[j];
  return s;
}

Poly omega(const std::vector<Poly>& u, const std::vector<Poly>& v) {
  if (u.size() != v.size() || u.empty()) throw DimensionMismatch("omega argument sizes");
  if (u.size() % 2 != 0) throw OddDimension("omega needs even-dimensional vectors");
  std::size_t n = u.size() / 2;
  Poly s(u[0].nvars());
  for (std::size_t j = 0; j < n; ++j) s += u[j] * v[n + j] - u[n + j] * v[j];
  return s;
}

bool is_symplectic_matrix(const RatMatrix& l) {
  if (l.rows() != l.cols() || l.rows() % 2 != 0) return false;
  RatMatrix o = omega_matrix(l.rows());
  return l.transpose() * o * l == o;
}

// --- symplectic defect --------------------------------------------------------

DefectResult symplectic_defect(const PolyMap& f, int d) {
  const int two_n = f.nvars;
  if (two_n % 2 != 0) throw OddDimension("symplectic_defect dimension");
  if (f.ncomps() != two_n) throw DimensionMismatch("symplectic_defect component count");
  if (!f.fixes_origin()) throw Error("symplectic_defect: map must fix the origin");
  const int n = two_n / 2;

  // (F*omega - omega)_{pq} = sum_j (dF_j/dz_p dF_{n+j}/dz_q
  //                                 - dF_j/dz_q dF_{n+j}/dz_p) - Omega_{pq}.
  // Vanishing to order d constrains the coefficient terms of degree < d,
  // so all products are truncated at degree d-1.
  const int cut = d - 1;
  std::vector<std::vector<Poly>> partial(static_cast<std::size_t>(two_n));
  for (int j = 0; j < two_n; ++j) {
    partial[static_cast<std::size_t>(j)].reserve(static_cast<std::size_t>(two_n));
    for (int p = 0; p < two_n; ++p)
      partial[static_cast<std::size_t>(j)].push_back(
          f.comps[static_cast<std::size_t>(j)].derivative(p).truncate(std::max(cut, 0)));
  }

  DefectResult res;
  res.ok = true;
  int lowest_bad = d;
  std::map<std::pair<int, int>, Poly> defect;
  for (int p = 0; p < two_n; ++p) {
    for (int q = p + 1; q < two_n; ++q) {
      Poly g(two_n);
      for (int j = 0; j < n; ++j) {
        g += partial[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)].mul_trunc(
            partial[static_cast<std::size_t>(n + j)][static_cast<std::size_t>(q)], cut);
        g -= partial[static_cast<std::size_t>(j)][static_cast<std::size_t>(q)].mul_trunc(
            partial[static_cast<std::size_t>(n + j)][static_cast<std::size_t>(p)], cut);
      }
      if (q == p + n) g -= Poly::constant(two_n, Rational(1));  // Omega_{p,p+n} = 1
      if (!g.is_zero()) {
        res.ok = false;
        lowest_bad = std::min(lowest_bad, g.low_degree());
        defect.emplace(std::make_pair(p, q), std::move(g));
      }
    }
  }
  if (!res.ok) {
    res.witness_degree = lowest_bad;
    res.witness.nvars = two_n;
    for (const auto& [pq, g] : defect) {
      Poly piece = g.homogeneous_part(lowest_bad);
      if (!piece.is_zero()) res.witness.comps.emplace(pq, std::move(piece));
    }
  }
  return res;
}

bool is_exactly_symplectic(const PolyMap& f) {
  int deg = std::max(f.degree(), 1);
  return symplectic_defect(f, 2 * deg - 1).ok;
}

// --- Hamiltonian criterion -------------------------------------------------------

namespace {

void check_field_shape(const std::vector<HomPoly>& p, int* two_n_out, int* m_out) {
  if (p.empty() || p.size() % 2 != 0) throw OddDimension("Hamiltonian field needs 2n components");
  int two_n = static_cast<int>(p.size());
  int m = p[0].declared_degree();
  for (const HomPoly& c : p) {
    if (c.nvars() != two_n) throw DimensionMismatch("Hamiltonian field variable count");
    if (c.declared_degree() != m) throw DegreeMismatch("Hamiltonian field component degrees differ");
  }
  *two_n_out = two_n;
  *m_out = m;
}

}  // namespace

bool is_hamiltonian(const std::vector<HomPoly>& p) {
  int two_n = 0, m = 0;
  check_field_shape(p, &two_n, &m);
  int n = two_n / 2;
  // alpha = P -| omega has alpha_p = -P_{n+p} (p <= n) and alpha_{n+i} = P_i;
  // closedness: d(alpha_p)/dz_q = d(alpha_q)/dz_p for all p < q.
  auto alpha = [&](int idx) -> Poly {
    if (idx < n) return -p[static_cast<std::size_t>(n + idx)].poly();
    return p[static_cast<std::size_t>(idx - n)].poly();
  };
  for (int a = 0; a < two_n; ++a) {
    Poly pa = alpha(a);
    for (int b = a + 1; b < two_n; ++b) {
      if (!(pa.derivative(b) == alpha(b).derivative(a))) return false;
    }
  }
  return true;
}

HomPoly potential(const std::vector<HomPoly>& p) {
  int two_n = 0, m = 0;
  check_field_shape(p, &two_n, &m);
  if (!is_hamiltonian(p)) throw NotHamiltonian("potential: field is not Hamiltonian");
  // Q = -(1/(m+1)) (JP).z
  std::vector<Poly> comps;
  comps.reserve(p.size());
  for (const HomPoly& c : p) comps.push_back(c.poly());
  std::vector<Poly> jp = apply_J(comps);
  Poly q(two_n);
  for (int i = 0; i < two_n; ++i) q += jp[static_cast<std::size_t>(i)] * Poly::variable(two_n, i);
  q = q * Rational(-1, m + 1);
  HomPoly out(std::move(q), m + 1);
  // Euler-formula round trip is an internal identity; guard it.
  if (!(hamiltonian_from_potential(out) == p)) throw Error("potential: round-trip check failed");
  return out;
}

std::vector<HomPoly> hamiltonian_from_potential(const HomPoly& q) {
  std::vector<HomPoly> grad = gradient(q);
  std::vector<Poly> comps;
  comps.reserve(grad.size());
  for (const HomPoly& g : grad) comps.push_back(g.poly());
  std::vector<Poly> field = apply_J(comps);
  std::vector<HomPoly> out;
  out.reserve(field.size());
  int d = std::max(q.declared_degree() - 1, 0);
  for (Poly& c : field) out.emplace_back(std::move(c), d);
  return out;
}

// --- shears ---------------------------------------------------------------------

PolyMap shear_apply(const Shear& s) {
  const int two_n = static_cast<int>(s.a.size());
  if (two_n % 2 != 0) throw OddDimension("shear dimension");
  if (s.m < 1) throw Error("shear power must be >= 1");
  std::vector<Rational> ja = apply_J(s.a);
  Poly ell(two_n);
  for (int i = 0; i < two_n; ++i) {
    if (ja[static_cast<std::size_t>(i)] != 0)
      ell += Poly::variable(two_n, i) * ja[static_cast<std::size_t>(i)];
  }
  Poly pw = Poly::constant(two_n, Rational(1));
  for (int k = 0; k < s.m; ++k) pw = pw * ell;
  PolyMap f = PolyMap::identity(two_n);
  for (int i = 0; i < two_n; ++i) {
    if (s.a[static_cast<std::size_t>(i)] != 0)
      f.comps[static_cast<std::size_t>(i)] += pw * (s.c * s.a[static_cast<std::size_t>(i)]);
  }
  return f;
}

std::vector<HomPoly> shear_field(const Shear& s) {
  PolyMap f = shear_apply(s);
  PolyMap id = PolyMap::identity(f.nvars);
  std::vector<HomPoly> out;
  out.reserve(static_cast<std::size_t>(f.nvars));
  for (int i = 0; i < f.nvars; ++i)
    out.emplace_back(f.comps[static_cast<std::size_t>(i)] - id.comps[static_cast<std::size_t>(i)], s.m);
  return out;
}

Shear shear_inverse(const Shear& s) { return Shear{s.a, -s.c, s.m}; }

// --- kicks ----------------------------------------------------------------------

KickMap kick_from_potential(const Poly& g, const RatMatrix& l) {
  const int n = g.nvars();
  if (l.rows() != 2 * n || l.cols() != 2 * n)
    throw DimensionMismatch("kick conjugator must be 2n x 2n for a potential in n variables");
  if (!g.is_zero() && g.low_degree() < 2)
    throw Error("kick potential must have every term of degree >= 2");
  if (!is_symplectic_matrix(l)) throw NotSymplecticConjugator("kick conjugator is not symplectic");
  return KickMap{g, l};
}

PolyMap kick_apply(const KickMap& k) {
  const int n = k.g.nvars();
  const int two_n = 2 * n;
  // w = L z as linear polynomials
  std::vector<Poly> w;
  w.reserve(static_cast<std::size_t>(two_n));
  for (int i = 0; i < two_n; ++i) {
    Poly row(two_n);
    for (int j = 0; j < two_n; ++j) {
      if (k.l.at(i, j) != 0) row += Poly::variable(two_n, j) * k.l.at(i, j);
    }
    w.push_back(std::move(row));
  }
  // grad g evaluated at w'' = (w_{n+1},...,w_{2n})
  PolyMap tail(two_n, n);
  for (int i = 0; i < n; ++i) tail.comps[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(n + i)];
  PolyMap grad_map(n, n);
  for (int i = 0; i < n; ++i) grad_map.comps[static_cast<std::size_t>(i)] = k.g.derivative(i);
  int full_degree = std::max(k.g.degree() - 1, 1);
  PolyMap grad_at_tail = compose_jet(grad_map, tail, full_degree).map;

  // G(Lz) = (w' + grad g(w''), w'')
  std::vector<Poly> gl;
  gl.reserve(static_cast<std::size_t>(two_n));
  for (int i = 0; i < n; ++i) gl.push_back(w[static_cast<std::size_t>(i)] + grad_at_tail.comps[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i) gl.push_back(w[static_cast<std::size_t>(n + i)]);

  // multiply by L^{-1} on the left
  std::optional<RatMatrix> linv = inverse(k.l);
  if (!linv) throw Error("kick conjugator is singular");  // unreachable: symplectic => invertible
  PolyMap out(two_n, two_n);
  for (int i = 0; i < two_n; ++i) {
    Poly acc(two_n);
    for (int j = 0; j < two_n; ++j) {
      if (linv->at(i, j) != 0) acc += gl[static_cast<std::size_t>(j)] * linv->at(i, j);
    }
    out.comps[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

// --- Lagrangian frame -> symplectic conjugator -----------------------------------

RatMatrix lagrangian_symplectic_from_rows(const RatMatrix& v) {
  const int n = v.rows();
  const int two_n = v.cols();
  if (two_n != 2 * n) throw DimensionMismatch("frame must be n x 2n");

  // Solve omega(r_j, v_i) = delta_ij: with M = V Omega^T, the r_j are
  // preimages M r_j = e_j (V has rank n, omega is nondegenerate).
  RatMatrix m = v * omega_matrix(two_n).transpose();
  RatMatrix aug(n, two_n + n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < two_n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, two_n + r) = 1;
  }
  std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n) - 1] >= two_n)
    throw NotLagrangian("frame rows are not independent");
  std::vector<std::vector<Rational>> r(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(two_n), Rational(0)));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j)
      r[static_cast<std::size_t>(j)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(k)])] =
          aug.at(k, two_n + j);
  }

  // Correct u_j = r_j + sum_k (s_jk / 2) v_k to make span(u) Lagrangian,
  // where s_jk = omega(r_j, r_k); this keeps omega(u_j, v_i) = delta_ij.
  std::vector<std::vector<Rational>> vrows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    vrows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(two_n));
    for (int c = 0; c < two_n; ++c) vrows[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = v.at(i, c);
  }
  std::vector<std::vector<Rational>> u = r;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Rational s = omega(r[static_cast<std::size_t>(j)], r[static_cast<std::size_t>(k)]);
      if (s == 0) continue;
      Rational half = s / 2;
      for (int c = 0; c < two_n; ++c)
        u[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] +=
            half * vrows[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
    }
  }

  // C = [u_1 .. u_n, v_1 .. v_n] as columns is symplectic and maps
  // span(e_{n+1..2n}) to the frame span; L = C^T satisfies the contract.
  RatMatrix cmat(two_n, two_n);
  for (int i = 0; i < n; ++i) {
    for (int row = 0; row < two_n; ++row) {
      cmat.at(row, i) = u[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)];
      cmat.at(row, n + i) = vrows[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)];
    }
  }
  if (!is_symplectic_matrix(cmat)) throw NotLagrangian("frame is not Lagrangian");
  RatMatrix l = cmat.transpose();

  // Contract assertion: (L^{-1})^T v_i has vanishing first block.
  std::optional<RatMatrix> cinv = inverse(cmat);
  if (!cinv) throw Error("internal: symplectic matrix must be invertible");
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> img = cinv->apply(vrows[static_cast<std::size_t>(i)]);
    for (int c = 0; c < n; ++c) {
      if (img[static_cast<std::size_t>(c)] != 0)
        throw Error("internal: conjugator contract violated");
    }
  }
  return l;
}

// --- factored maps ----------------------------------------------------------------

PolyMap factor_to_map(const Factor& f, int nvars) {
  if (std::holds_alternative<RatMatrix>(f)) {
    const RatMatrix& m = std::get<RatMatrix>(f);
    if (m.rows() != nvars || m.cols() != nvars) throw DimensionMismatch("linear factor shape");
    return PolyMap::from_matrix(m);
  }
  if (std::holds_alternative<Shear>(f)) {
    const Shear& s = std::get<Shear>(f);
    if (static_cast<int>(s.a.size()) != nvars) throw DimensionMismatch("shear factor dimension");
    return shear_apply(s);
  }
  const KickMap& k = std::get<KickMap>(f);
  if (2 * k.g.nvars() != nvars) throw DimensionMismatch("kick factor dimension");
  return kick_apply(k);
}

int factor_degree(const Factor& f) {
  if (std::holds_alternative<RatMatrix>(f)) return 1;
  if (std::holds_alternative<Shear>(f)) return std::get<Shear>(f).m;
  const KickMap& k = std::get<KickMap>(f);
  return std::max(k.g.degree() - 1, 1);
}

bool factor_is_symplectic(const Factor& f, int nvars) {
  if (std::holds_alternative<RatMatrix>(f)) return is_symplectic_matrix(std::get<RatMatrix>(f));
  return is_exactly_symplectic(factor_to_map(f, nvars));
}

Jet factored_jet(const FactoredMap& f, int d) {
  PolyMap acc = PolyMap::identity(f.nvars);
  for (const Factor& factor : f.factors)
    acc = compose_jet(factor_to_map(factor, f.nvars), acc, d).map;
  return Jet(acc, d);
}

PolyMap factored_expand(const FactoredMap& f) {
  PolyMap acc = PolyMap::identity(f.nvars);
  int deg = 1;
  for (const Factor& factor : f.factors) {
    deg = std::max(deg * factor_degree(factor), 1);
    acc = compose_jet(factor_to_map(factor, f.nvars), acc, deg).map;
  }
  return acc;
}

BigInt factored_degree_bound(const FactoredMap& f) {
  BigInt b(1);
  for (const Factor& factor : f.factors) b *= factor_degree(factor);
  return b;
}

}  // namespace symjet
