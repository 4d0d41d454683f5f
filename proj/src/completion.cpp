#include "symjet/completion.hpp"

#include <algorithm>
#include <optional>

namespace symjet {

namespace {

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.nvars(); ++i) {
    int e = m.e[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(i + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

BigInt factorial(int k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

}  // namespace

PowerDecomposition simplex_power_decomposition(const HomPoly& q) {
  const int n = q.nvars();
  const int d = q.declared_degree();
  if (d < 1) throw Error("power decomposition needs degree >= 1");
  PowerDecomposition out;
  if (q.is_zero()) return out;

  // With s = z_1 + ... + z_n, the form L_mu = prod_{i, j < mu_i}
  // (d z_i - j s) / (d (mu_i - j)) is 1 at the lattice node mu and 0 at every
  // other node |nu| = d, so <q, L_mu> / d! (apolar pairing) is the
  // coefficient of (mu.z)^d in the unique expansion over the node powers.
  Poly s(n);
  for (int i = 0; i < n; ++i) s += Poly::variable(n, i);
  const BigInt dfac = factorial(d);

  for (const Monomial& mu : monomials_of_degree(n, d)) {
    Poly l = Poly::constant(n, Rational(1));
    Rational denom(1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < mu.e[static_cast<std::size_t>(i)]; ++j) {
        l = l * (Poly::variable(n, i) * Rational(d) - s * Rational(j));
        denom *= Rational(d * (mu.e[static_cast<std::size_t>(i)] - j));
      }
    Rational gamma(0);
    for (const auto& [alpha, qa] : q.poly().terms()) {
      Rational la = l.coeff(alpha);
      if (la == 0) continue;
      BigInt afac(1);
      for (int e : alpha.e) afac *= factorial(e);
      gamma += qa * la * Rational(afac);
    }
    gamma /= denom * Rational(dfac);
    if (gamma == 0) continue;
    std::vector<Rational> b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = mu.e[static_cast<std::size_t>(i)];
    out.emplace_back(std::move(b), std::move(gamma));
  }
  return out;
}

// --- shared completion plumbing ---------------------------------------------------

namespace {

struct TargetSetup {
  RatMatrix a;
  PolyMap target;  // jet_d(P o A^{-1}); linear part is the identity
};

TargetSetup split_linear(const Jet& p) {
  const PolyMap& f = p.map;
  if (f.nvars % 2 != 0) throw OddDimension("jets live in even dimension");
  if (f.ncomps() != f.nvars) throw DimensionMismatch("jet component count");
  if (!f.fixes_origin()) throw Error("jet must fix the origin");
  RatMatrix a = f.linear_part();
  if (!is_symplectic_matrix(a)) throw LinearPartNotSymplectic("the jet's linear part is not symplectic");
  std::optional<RatMatrix> ainv = inverse(a);
  if (!ainv) throw Error("internal: symplectic matrix must be invertible");
  PolyMap target = compose_jet(f, PolyMap::from_matrix(*ainv), p.order).map;
  return TargetSetup{std::move(a), std::move(target)};
}

std::vector<HomPoly> residual_at(const PolyMap& target, const PolyMap& cur, int k) {
  std::vector<HomPoly> r;
  r.reserve(static_cast<std::size_t>(target.ncomps()));
  for (int i = 0; i < target.ncomps(); ++i)
    r.emplace_back(target.comps[static_cast<std::size_t>(i)].homogeneous_part(k) -
                       cur.comps[static_cast<std::size_t>(i)].homogeneous_part(k),
                   k);
  return r;
}

bool all_zero(const std::vector<HomPoly>& v) {
  return std::all_of(v.begin(), v.end(), [](const HomPoly& h) { return h.is_zero(); });
}

// S o g for a shear S(z) = z + c (Ja.z)^m a, truncated at degree d.
PolyMap shear_after(const Shear& s, const PolyMap& g, int d) {
  std::vector<Rational> ja = apply_J(s.a);
  Poly ell(g.nvars);
  for (int i = 0; i < g.ncomps(); ++i)
    if (ja[static_cast<std::size_t>(i)] != 0)
      ell += g.comps[static_cast<std::size_t>(i)] * ja[static_cast<std::size_t>(i)];
  Poly pw = Poly::constant(g.nvars, Rational(1));
  for (int k = 0; k < s.m; ++k) pw = pw.mul_trunc(ell, d);
  PolyMap out = g;
  for (int i = 0; i < g.ncomps(); ++i)
    if (s.a[static_cast<std::size_t>(i)] != 0)
      out.comps[static_cast<std::size_t>(i)] += (pw * (s.c * s.a[static_cast<std::size_t>(i)])).truncate(d);
  return out;
}

}  // namespace

FactoredMap complete_jet_naive(const Jet& p, const BasisSupplier& basis) {
  TargetSetup ts = split_linear(p);
  const int d = p.order;
  const int two_n = p.map.nvars;

  FactoredMap f{two_n, {Factor(ts.a)}};
  PolyMap cur = PolyMap::identity(two_n);
  for (int k = 2; k <= d; ++k) {
    std::vector<HomPoly> r = residual_at(ts.target, cur, k);
    if (all_zero(r)) continue;
    if (!is_hamiltonian(r)) throw JetNotSymplecticToOrder(k);
    HomPoly q = potential(r);
    const int dd = k + 1;

    PowerDecomposition decomp = basis ? basis(q) : simplex_power_decomposition(q);
    Poly check(two_n);
    for (const auto& [b, gamma] : decomp) check += expand_power(b, dd).poly() * gamma;
    if (!(check == q.poly())) throw Error("basis supplier returned an invalid decomposition");

    for (const auto& [b, gamma] : decomp) {
      // gamma J grad (b.z)^{k+1} is the field of the shear with a = Jb,
      // c = (-1)^k (k+1) gamma, m = k, because (Ja.z) = -(b.z).
      Shear s{apply_J(b), gamma * Rational(k % 2 == 0 ? dd : -dd), k};
      f.factors.emplace_back(s);
      cur = shear_after(s, cur, d);
    }
  }
  if (!(cur == ts.target)) throw Error("internal: completion failed to reproduce the jet");
  return f;
}

// --- grouped strategy ---------------------------------------------------------------

int frames_for_level(int two_n, int degree) {
  // The one exceptional pair: in C^4 no 7 involutive frames span degree 4,
  // so the decomposition level needs an 8th.
  return small_m(two_n, degree) + (two_n == 4 && degree == 4 ? 1 : 0);
}

int max_frames(int two_n, int d) {
  int count = 2;
  for (int dd = 3; dd <= d + 1; ++dd) count = std::max(count, frames_for_level(two_n, dd));
  return count;
}

GroupedFamilies make_grouped_families(int two_n, int d, std::uint64_t max_coeff,
                                      std::uint64_t seed, int prime_count) {
  if (two_n < 2 || two_n % 2 != 0) throw OddDimension("grouped families need even dimension");
  if (d < 1) throw Error("jet degree must be >= 1");
  if (prime_count < 1) throw Error("need at least one prime");
  const int n = two_n / 2;
  const int family_count = max_frames(two_n, d);

  GroupedFamilies gf;
  gf.two_n = two_n;
  gf.max_potential_degree = d + 1;
  gf.seed = seed;

  SplitMix64 rng(seed);
  const int max_attempts = 32;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    NormalFamily fam = random_normal_family(n, std::max(family_count, 2), max_coeff, rng.next());
    std::vector<LagrangianFrame> frames = fam.frames();
    std::map<int, GroupedFamilies::LevelBasis> levels;
    int failed_level = -1;

    for (int dd = 3; dd <= d + 1; ++dd) {
      const int m_d = frames_for_level(two_n, dd);
      const int n_d = small_n(two_n, dd);
      if (m_d > static_cast<int>(frames.size()))
        throw Error("internal: level frame counts must be monotone in D");
      std::vector<LagrangianFrame> sub(frames.begin(), frames.begin() + m_d);
      PowerMatrix pm = build_power_matrix(simplex_sampled_family(sub, dd), dd);

      GroupedFamilies::LevelBasis lb;
      lb.degree = dd;
      lb.frame_count = m_d;
      std::uint64_t good_prime = 0;
      for (std::uint64_t p : prime_stream(30, prime_count)) {
        ModMatrix mm = pm.dense_mod(p);
        int rank = rank_destructive(mm);
        lb.primes.push_back(p);
        lb.ranks.push_back(rank);
        if (rank == n_d) {
          good_prime = p;
          break;
        }
      }
      if (good_prime == 0) {
        failed_level = dd - 1;
        break;
      }
      // Rows independent mod p are independent over Q, so these N(2n,D) rows
      // form an exact decomposition basis.
      IntMatrix dense = pm.dense_exact();
      std::vector<int> sel = independent_rows_mod(dense, good_prime, n_d);
      if (static_cast<int>(sel.size()) != n_d) {
        failed_level = dd - 1;
        break;
      }
      lb.basis_rows = IntMatrix(n_d, n_d);
      for (int i = 0; i < n_d; ++i) {
        lb.row_frame.push_back(pm.frame_of_row[static_cast<std::size_t>(sel[static_cast<std::size_t>(i)])]);
        lb.row_dir.push_back(pm.row_dirs[static_cast<std::size_t>(sel[static_cast<std::size_t>(i)])]);
        for (int c = 0; c < n_d; ++c)
          lb.basis_rows.at(i, c) = dense.at(sel[static_cast<std::size_t>(i)], c);
      }
      levels.emplace(dd, std::move(lb));
    }

    if (failed_level >= 0) {
      ++gf.retries;
      if (attempt + 1 == max_attempts) throw FamilyNotSpanning(failed_level);
      continue;
    }
    gf.family = std::move(fam);
    gf.frames = std::move(frames);
    gf.levels = std::move(levels);
    for (const LagrangianFrame& fr : gf.frames) {
      RatMatrix l = lagrangian_symplectic_from_rows(fr.rows);
      std::optional<RatMatrix> ti = inverse(l.transpose());
      if (!ti) throw Error("internal: symplectic conjugator must be invertible");
      gf.conjugators.push_back(std::move(l));
      gf.conjugators_tinv.push_back(std::move(*ti));
    }
    return gf;
  }
  throw FamilyNotSpanning(d);  // not reached: the last attempt throws above
}

namespace {

// Read the map as one kick conjugated by l: w = l o f o l^{-1} must have the
// shape (z' + grad g(z''), z'') for a potential g recovered via Euler's
// identity and verified exactly.
std::optional<KickMap> try_single_kick(const PolyMap& f, const RatMatrix& l) {
  const int two_n = f.nvars;
  const int n = two_n / 2;
  std::optional<RatMatrix> linv = inverse(l);
  if (!linv) return std::nullopt;
  const int deg = std::max(f.degree(), 1);
  PolyMap inner = compose_jet(f, PolyMap::from_matrix(*linv), deg).map;
  PolyMap w = compose_jet(PolyMap::from_matrix(l), inner, deg).map;

  for (int i = 0; i < n; ++i)
    if (!(w.comps[static_cast<std::size_t>(n + i)] == Poly::variable(two_n, n + i)))
      return std::nullopt;
  std::vector<Poly> u(static_cast<std::size_t>(n), Poly(n));
  bool any = false;
  for (int i = 0; i < n; ++i) {
    Poly diff = w.comps[static_cast<std::size_t>(i)] - Poly::variable(two_n, i);
    for (const auto& [mon, c] : diff.terms()) {
      for (int v = 0; v < n; ++v)
        if (mon.e[static_cast<std::size_t>(v)] != 0) return std::nullopt;
      Monomial tail{std::vector<int>(mon.e.begin() + n, mon.e.end())};
      u[static_cast<std::size_t>(i)].add_term(tail, c);
      any = true;
    }
  }
  if (!any) return std::nullopt;

  // If u = grad g then k g_k = sum_i w_i (u_i)_{k-1} per homogeneous piece.
  Poly g(n);
  int umax = 0;
  for (const Poly& ui : u) umax = std::max(umax, ui.degree());
  for (int k = 1; k <= umax; ++k) {
    Poly piece(n);
    for (int i = 0; i < n; ++i)
      piece += Poly::variable(n, i) * u[static_cast<std::size_t>(i)].homogeneous_part(k);
    g += piece * Rational(1, k + 1);
  }
  for (int i = 0; i < n; ++i)
    if (!(g.derivative(i) == u[static_cast<std::size_t>(i)])) return std::nullopt;
  if (g.is_zero() || g.low_degree() < 2) return std::nullopt;
  return kick_from_potential(g, l);
}

}  // namespace

FactoredMap complete_jet_grouped(const Jet& p, const GroupedFamilies& fams) {
  TargetSetup ts = split_linear(p);
  const int d = p.order;
  const int two_n = p.map.nvars;
  const int n = two_n / 2;
  if (fams.two_n != two_n) throw DimensionMismatch("family dimension differs from the jet's");
  if (d >= 2 && fams.max_potential_degree < d + 1)
    throw Error("families were built for a lower jet degree");

  // A jet that already is one kick map stays one factor.
  if (ts.a == RatMatrix::identity(two_n)) {
    if (std::optional<KickMap> k = try_single_kick(p.map, RatMatrix::identity(two_n)))
      return FactoredMap{two_n, {Factor(std::move(*k))}};
    for (const RatMatrix& l : fams.conjugators)
      if (std::optional<KickMap> k = try_single_kick(p.map, l))
        return FactoredMap{two_n, {Factor(std::move(*k))}};
  }

  const int fam_count = static_cast<int>(fams.frames.size());
  std::vector<Poly> gpots(static_cast<std::size_t>(fam_count), Poly(n));

  auto product_jet = [&](int order) {
    PolyMap prod = PolyMap::identity(two_n);
    for (int j = 0; j < fam_count; ++j) {
      if (gpots[static_cast<std::size_t>(j)].is_zero()) continue;
      PolyMap km = kick_apply(KickMap{gpots[static_cast<std::size_t>(j)],
                                      fams.conjugators[static_cast<std::size_t>(j)]});
      prod = compose_jet(km, prod, order).map;
    }
    return prod;
  };

  for (int k = 2; k <= d; ++k) {
    std::vector<HomPoly> r = residual_at(ts.target, product_jet(k), k);
    if (all_zero(r)) continue;
    if (!is_hamiltonian(r)) throw JetNotSymplecticToOrder(k);
    HomPoly q = potential(r);
    const int dd = k + 1;
    auto it = fams.levels.find(dd);
    if (it == fams.levels.end()) throw FamilyNotSpanning(k);
    const GroupedFamilies::LevelBasis& lb = it->second;

    std::vector<Rational> rhs = q.dense_coeffs();
    const int n_d = static_cast<int>(rhs.size());
    std::vector<Rational> gamma = solve_exact(lb.basis_rows.transpose(), rhs);
    std::vector<Rational> replay(static_cast<std::size_t>(n_d), Rational(0));
    for (int i = 0; i < n_d; ++i) {
      if (gamma[static_cast<std::size_t>(i)] == 0) continue;
      for (int c = 0; c < n_d; ++c)
        replay[static_cast<std::size_t>(c)] += gamma[static_cast<std::size_t>(i)] * Rational(lb.basis_rows.at(i, c));
    }
    if (replay != rhs) throw Error("internal: decomposition replay failed");

    // Fold gamma_i (a_i.z)^D = gamma_i (b_i.w'')^D into frame j's potential:
    // the kick field of -g adds J grad g, so the potential accumulates the
    // negated coefficients.
    for (int i = 0; i < n_d; ++i) {
      const Rational& gi = gamma[static_cast<std::size_t>(i)];
      if (gi == 0) continue;
      int j = lb.row_frame[static_cast<std::size_t>(i)];
      std::vector<Rational> av;
      av.reserve(static_cast<std::size_t>(two_n));
      for (const BigInt& x : lb.row_dir[static_cast<std::size_t>(i)]) av.emplace_back(x);
      std::vector<Rational> img = fams.conjugators_tinv[static_cast<std::size_t>(j)].apply(av);
      for (int c = 0; c < n; ++c)
        if (img[static_cast<std::size_t>(c)] != 0)
          throw Error("internal: conjugator does not straighten its frame");
      std::vector<Rational> b(img.begin() + n, img.end());
      gpots[static_cast<std::size_t>(j)] -= expand_power(b, dd).poly() * gi;
    }
  }

  FactoredMap f{two_n, {Factor(ts.a)}};
  for (int j = 0; j < fam_count; ++j)
    if (!gpots[static_cast<std::size_t>(j)].is_zero())
      f.factors.emplace_back(kick_from_potential(gpots[static_cast<std::size_t>(j)],
                                                 fams.conjugators[static_cast<std::size_t>(j)]));
  if (!(factored_jet(f, d).map == p.map)) throw Error("internal: completion failed to reproduce the jet");
  return f;
}

// --- verification -------------------------------------------------------------------

CompletionReport verify_completion(const FactoredMap& f, const Jet& p, int d) {
  CompletionReport rep;
  rep.factor_count = static_cast<int>(f.factors.size());
  rep.degree_bound = factored_degree_bound(f);

  PolyMap got = factored_jet(f, d).map;
  PolyMap want = p.map.truncate(d);
  if (got.nvars != want.nvars || got.ncomps() != want.ncomps()) {
    rep.first_mismatch = "map shapes differ";
  } else {
    for (int i = 0; i < got.ncomps() && rep.first_mismatch.empty(); ++i) {
      const auto& a = got.comps[static_cast<std::size_t>(i)].terms();
      const auto& b = want.comps[static_cast<std::size_t>(i)].terms();
      auto ia = a.begin();
      auto ib = b.begin();
      GrlexLess less;
      while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && less(ia->first, ib->first))) {
          rep.first_mismatch = "component " + std::to_string(i + 1) + ", " + monomial_str(ia->first) +
                               ": got " + rational_to_string(ia->second) + ", want 0";
          break;
        }
        if (ia == a.end() || less(ib->first, ia->first)) {
          rep.first_mismatch = "component " + std::to_string(i + 1) + ", " + monomial_str(ib->first) +
                               ": got 0, want " + rational_to_string(ib->second);
          break;
        }
        if (ia->second != ib->second) {
          rep.first_mismatch = "component " + std::to_string(i + 1) + ", " + monomial_str(ia->first) +
                               ": got " + rational_to_string(ia->second) + ", want " +
                               rational_to_string(ib->second);
          break;
        }
        ++ia;
        ++ib;
      }
    }
  }
  rep.jet_matches = rep.first_mismatch.empty();

  rep.factors_symplectic = true;
  for (const Factor& fac : f.factors)
    if (!factor_is_symplectic(fac, f.nvars)) {
      rep.factors_symplectic = false;
      break;
    }
  rep.pass = rep.jet_matches && rep.factors_symplectic;
  return rep;
}

// --- seeded generators ----------------------------------------------------------------

RatMatrix random_symplectic_matrix(int two_n, std::uint64_t max_coeff, std::uint64_t seed) {
  if (two_n < 2 || two_n % 2 != 0) throw OddDimension("symplectic matrices have even size");
  if (max_coeff < 1) throw Error("max_coeff must be >= 1");
  const int n = two_n / 2;
  SplitMix64 rng(seed);

  RatMatrix a(n, n);
  for (int tries = 0;; ++tries) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        a.at(r, c) = Rational(static_cast<unsigned long>(rng.uniform(1, max_coeff)));
    if (det_exact(clear_denominators_rows(a)) != 0) break;
    if (tries > 1000) throw RetryLimitExceeded("no invertible block found");
  }
  RatMatrix b(n, n), c(n, n);
  for (int r = 0; r < n; ++r)
    for (int col = r; col < n; ++col) {
      Rational vb(static_cast<unsigned long>(rng.uniform(1, max_coeff)));
      Rational vc(static_cast<unsigned long>(rng.uniform(1, max_coeff)));
      b.at(r, col) = b.at(col, r) = vb;
      c.at(r, col) = c.at(col, r) = vc;
    }

  std::optional<RatMatrix> at_inv = inverse(a.transpose());
  if (!at_inv) throw Error("internal: invertible block lost its inverse");
  RatMatrix l1(two_n, two_n), l2(two_n, two_n), l3(two_n, two_n);
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col) {
      l1.at(r, col) = a.at(r, col);             // [[A, 0], [0, A^{-T}]]
      l1.at(n + r, n + col) = at_inv->at(r, col);
      l2.at(r, n + col) = b.at(r, col);         // [[I, B], [0, I]]
      l3.at(n + r, col) = c.at(r, col);         // [[I, 0], [C, I]]
    }
  for (int i = 0; i < two_n; ++i) {
    l2.at(i, i) = 1;
    l3.at(i, i) = 1;
  }
  RatMatrix l = l1 * l2 * l3;
  if (!is_symplectic_matrix(l)) throw Error("internal: symplectic construction failed");
  return l;
}

FactoredMap random_symplectic_factored(int two_n, int max_degree, int factor_count,
                                       std::uint64_t max_coeff, std::uint64_t seed) {
  if (max_degree < 2) throw Error("nonlinear factors need max_degree >= 2");
  if (factor_count < 0) throw Error("factor_count must be >= 0");
  const int n = two_n / 2;
  SplitMix64 rng(seed);
  FactoredMap f{two_n, {}};
  f.factors.emplace_back(random_symplectic_matrix(two_n, max_coeff, rng.next()));
  for (int t = 0; t < factor_count; ++t) {
    if (t % 2 == 0) {
      std::vector<Rational> a(static_cast<std::size_t>(two_n));
      for (Rational& x : a) x = Rational(static_cast<unsigned long>(rng.uniform(1, max_coeff)));
      Rational c(static_cast<unsigned long>(rng.uniform(1, max_coeff)));
      if (rng.next() & 1) c = -c;
      int m = static_cast<int>(rng.uniform(2, static_cast<std::uint64_t>(max_degree)));
      f.factors.emplace_back(Shear{std::move(a), c, m});
    } else {
      Poly g(n);
      int terms = 1 + static_cast<int>(rng.uniform(0, 2));
      for (int s = 0; s < terms; ++s) {
        int deg = static_cast<int>(rng.uniform(2, static_cast<std::uint64_t>(max_degree + 1)));
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < deg; ++j) ++e[rng.uniform(0, static_cast<std::uint64_t>(n - 1))];
        Rational c(static_cast<unsigned long>(rng.uniform(1, max_coeff)));
        if (rng.next() & 1) c = -c;
        g.add_term(Monomial{std::move(e)}, c);
      }
      if (g.is_zero()) g = Poly::variable(n, 0) * Poly::variable(n, 0);
      f.factors.emplace_back(kick_from_potential(g, random_symplectic_matrix(two_n, max_coeff, rng.next())));
    }
  }
  return f;
}

Jet random_symplectic_jet(int two_n, int d, std::uint64_t max_coeff, std::uint64_t seed) {
  FactoredMap f = random_symplectic_factored(two_n, std::max(d, 2), 3, max_coeff, seed);
  return factored_jet(f, d);
}

}  // namespace symjet
