#include "symjet/spanning.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace symjet {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Dims dims(int n, int d) {
  if (n < 1 || d < 0) throw Error("dims: need n >= 1, d >= 0");
  Dims out;
  out.n = n;
  out.d = d;
  out.big_n = binomial(n + d - 1, d);
  if (n % 2 == 0) {
    BigInt half = binomial(n / 2 + d - 1, d);
    out.m = (out.big_n + half - 1) / half;  // ceil
  }
  return out;
}

namespace {

int to_small(const BigInt& x, const char* what) {
  if (!x.fits_sint_p()) throw Error(std::string(what) + " is too large for this build");
  return static_cast<int>(x.get_si());
}

}  // namespace

int small_n(int n, int d) { return to_small(dims(n, d).big_n, "N(n,d)"); }

int small_m(int n, int d) {
  Dims ds = dims(n, d);
  if (!ds.m) throw OddDimension("M(n,d) needs even n");
  return to_small(*ds.m, "M(n,d)");
}

// --- sampled families -------------------------------------------------------------

namespace {

// Scale a rational vector to a primitive integer one (rank statements and
// row-space decompositions are invariant under row scaling).
std::vector<BigInt> primitive_integer(const std::vector<Rational>& v) {
  BigInt l(1);
  for (const Rational& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), denominator(x).get_mpz_t());
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g(0);
  for (const Rational& x : v) {
    BigInt e = numerator(x) * (l / denominator(x));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    out.push_back(std::move(e));
  }
  if (g > 1)
    for (BigInt& e : out) e /= g;
  return out;
}

SampledFamily pack_family(const std::vector<LagrangianFrame>& frames,
                          const std::vector<std::vector<std::vector<Rational>>>& raw) {
  if (frames.empty()) throw Error("family needs at least one frame");
  SampledFamily fam;
  fam.two_n = 2 * frames[0].n;
  fam.frames = frames;
  fam.samples.resize(frames.size());
  for (std::size_t j = 0; j < frames.size(); ++j)
    for (const std::vector<Rational>& v : raw[j]) fam.samples[j].push_back(primitive_integer(v));
  return fam;
}

}  // namespace

SampledFamily simplex_sampled_family(const std::vector<LagrangianFrame>& frames, int d) {
  std::vector<std::vector<std::vector<Rational>>> raw;
  raw.reserve(frames.size());
  for (const LagrangianFrame& f : frames) raw.push_back(simplex_samples(f, d));
  return pack_family(frames, raw);
}

SampledFamily random_sampled_family(const std::vector<LagrangianFrame>& frames, int d,
                                    std::uint64_t max_coeff, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::vector<std::vector<Rational>>> raw;
  raw.reserve(frames.size());
  for (const LagrangianFrame& f : frames) {
    int count = small_n(f.n, d);
    raw.push_back(sample_vectors(f, count, max_coeff, rng.next()));
  }
  return pack_family(frames, raw);
}

// --- power matrices ----------------------------------------------------------------

int PowerMatrix::cols() const { return small_n(nvars, degree); }

PowerMatrix build_power_matrix(const SampledFamily& fam, int d) {
  PowerMatrix pm;
  pm.nvars = fam.two_n;
  pm.degree = d;
  for (std::size_t j = 0; j < fam.samples.size(); ++j)
    for (const std::vector<BigInt>& v : fam.samples[j]) {
      if (static_cast<int>(v.size()) != fam.two_n)
        throw DimensionMismatch("sample vector dimension");
      pm.row_dirs.push_back(v);
      pm.frame_of_row.push_back(static_cast<int>(j));
    }
  return pm;
}

IntMatrix PowerMatrix::dense_exact() const {
  const std::vector<Monomial> mons = monomials_of_degree(nvars, degree);
  std::vector<BigInt> multi;
  multi.reserve(mons.size());
  for (const Monomial& m : mons) multi.push_back(multinomial(degree, m.e));

  IntMatrix out(rows(), static_cast<int>(mons.size()));
  for (int r = 0; r < rows(); ++r) {
    const std::vector<BigInt>& a = row_dirs[static_cast<std::size_t>(r)];
    // a_i^k for 0 <= k <= degree
    std::vector<std::vector<BigInt>> pw(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
      pw[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(degree) + 1);
      pw[static_cast<std::size_t>(i)][0] = 1;
      for (int k = 1; k <= degree; ++k)
        pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] * a[static_cast<std::size_t>(i)];
    }
    for (std::size_t c = 0; c < mons.size(); ++c) {
      BigInt e = multi[c];
      for (int i = 0; i < nvars; ++i) {
        int k = mons[c].e[static_cast<std::size_t>(i)];
        if (k > 0) e *= pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      }
      out.at(r, static_cast<int>(c)) = std::move(e);
    }
  }
  return out;
}

ModMatrix PowerMatrix::dense_mod(std::uint64_t p) const {
  const std::vector<Monomial> mons = monomials_of_degree(nvars, degree);
  std::vector<std::uint64_t> multi;
  multi.reserve(mons.size());
  for (const Monomial& m : mons) multi.push_back(reduce_mod(multinomial(degree, m.e), p));

  ModMatrix out(rows(), static_cast<int>(mons.size()), p);
  for (int r = 0; r < rows(); ++r) {
    const std::vector<BigInt>& a = row_dirs[static_cast<std::size_t>(r)];
    std::vector<std::vector<std::uint64_t>> pw(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) {
      std::uint64_t ai = reduce_mod(a[static_cast<std::size_t>(i)], p);
      pw[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(degree) + 1);
      pw[static_cast<std::size_t>(i)][0] = 1;
      for (int k = 1; k <= degree; ++k)
        pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            mul_mod(pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)], ai, p);
    }
    for (std::size_t c = 0; c < mons.size(); ++c) {
      std::uint64_t e = multi[c];
      for (int i = 0; i < nvars && e != 0; ++i) {
        int k = mons[c].e[static_cast<std::size_t>(i)];
        if (k > 0) e = mul_mod(e, pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)], p);
      }
      out.at(r, static_cast<int>(c)) = static_cast<std::uint32_t>(e);
    }
  }
  return out;
}

// --- spanning certification --------------------------------------------------------

SpanReport certify_span(const SampledFamily& fam, int d, int prime_count) {
  if (prime_count < 1) throw Error("certify_span: need at least one prime");
  PowerMatrix pm = build_power_matrix(fam, d);
  SpanReport rep;
  rep.nvars = fam.two_n;
  rep.degree = d;
  rep.rows = pm.rows();
  rep.cols = pm.cols();
  rep.target_rank = std::min(rep.rows, rep.cols);

  for (std::uint64_t p : prime_stream(30, prime_count)) {
    ModMatrix mm = pm.dense_mod(p);
    int r = rank_destructive(mm);
    rep.primes.push_back(p);
    rep.ranks.push_back(r);
    if (r == rep.target_rank) {
      rep.certified = true;
      break;
    }
  }
  rep.verdict = rep.certified ? "CERTIFIED_MAX_RANK" : "INCONCLUSIVE";

  if (!rep.certified) {
    // Distinguish structural failures (they make the deficiency certain)
    // from an unlucky generic-rank run.
    rep.failure_kind = "generic_rank";
    for (std::size_t i = 0; i < fam.frames.size() && rep.failure_kind == "generic_rank"; ++i)
      for (std::size_t j = i + 1; j < fam.frames.size(); ++j)
        if (fam.frames[i].rows == fam.frames[j].rows) {
          rep.failure_kind = "structural:duplicate_frames";
          break;
        }
    if (rep.failure_kind == "generic_rank" && !pairwise_transverse(fam.frames).ok)
      rep.failure_kind = "structural:not_transverse";
  }
  return rep;
}

bool span_criterion_c4_d3(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c) {
  const RatMatrix* ms[3] = {&a, &b, &c};
  for (const RatMatrix* m : ms) {
    if (m->rows() != 2 || m->cols() != 2) throw InvalidFamily("criterion matrices must be 2x2");
    if (m->at(0, 1) != m->at(1, 0)) throw InvalidFamily("criterion matrices must be symmetric");
    if (m->at(0, 0) * m->at(1, 1) - m->at(0, 1) * m->at(1, 0) == 0)
      throw InvalidFamily("criterion matrices must be nonsingular");
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Rational d00 = ms[i]->at(0, 0) - ms[j]->at(0, 0);
      Rational d01 = ms[i]->at(0, 1) - ms[j]->at(0, 1);
      Rational d11 = ms[i]->at(1, 1) - ms[j]->at(1, 1);
      if (d00 * d11 - d01 * d01 == 0)
        throw InvalidFamily("criterion matrices must have nonsingular differences");
    }
  Rational det = a.at(0, 0) * (b.at(0, 1) * c.at(1, 1) - c.at(0, 1) * b.at(1, 1)) -
                 b.at(0, 0) * (a.at(0, 1) * c.at(1, 1) - c.at(0, 1) * a.at(1, 1)) +
                 c.at(0, 0) * (a.at(0, 1) * b.at(1, 1) - b.at(0, 1) * a.at(1, 1));
  return det != 0;
}

// --- Todd obstruction scan ----------------------------------------------------------

namespace {

int thread_budget() {
  if (const char* s = std::getenv("SYMJET_THREADS")) {
    int v = std::atoi(s);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Run body(0..count-1) on a small pool; each index is pure, so the result is
// schedule-independent. The first exception (if any) is rethrown.
void parallel_trials(int count, const std::function<void(int)>& body) {
  int nt = std::min(thread_budget(), count);
  if (nt <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nt));
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  for (std::thread& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

ToddStats todd_scan(int trials, std::uint64_t max_coeff, std::uint64_t seed) {
  if (trials < 1) throw Error("todd_scan: need at least one trial");
  SplitMix64 master(seed);
  std::vector<std::uint64_t> trial_seeds(static_cast<std::size_t>(trials));
  for (std::uint64_t& s : trial_seeds) s = master.next();

  std::vector<int> rank_of(static_cast<std::size_t>(trials), 0);
  parallel_trials(trials, [&](int i) {
    NormalFamily fam = random_normal_family(2, 7, max_coeff, trial_seeds[static_cast<std::size_t>(i)]);
    SampledFamily sf = simplex_sampled_family(fam.frames(), 4);
    rank_of[static_cast<std::size_t>(i)] = rank_exact(build_power_matrix(sf, 4).dense_exact());
  });

  ToddStats st;
  st.trials = trials;
  for (int i = 0; i < trials; ++i) {
    int r = rank_of[static_cast<std::size_t>(i)];
    st.max_rank = std::max(st.max_rank, r);
    ++st.histogram[r];
    if (r >= 35) st.counterexample_seeds.push_back(trial_seeds[static_cast<std::size_t>(i)]);
  }
  return st;
}

// --- the contact quartic ------------------------------------------------------------

namespace {

// omega(e_c, w) for the standard basis of C^4.
Rational omega_basis(int c, const std::vector<Rational>& w) {
  switch (c) {
    case 0: return w[2];
    case 1: return w[3];
    case 2: return -w[0];
    default: return -w[1];
  }
}

void validate_line_set(const std::vector<ProjLine>& lines) {
  for (const ProjLine& line : lines) frame_of(line);  // throws NotInvolutive / shape errors
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (!lines_disjoint(lines[i], lines[j]))
        throw LinesNotDisjoint("lines " + std::to_string(i) + " and " + std::to_string(j) + " meet");
}

// Eliminate `v` against echelon `rows` (each with a leading 1 at lead[i]).
void reduce_against(std::vector<Rational>& v, const std::vector<std::vector<Rational>>& rows,
                    const std::vector<int>& lead) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational& f = v[static_cast<std::size_t>(lead[i])];
    if (f == 0) continue;
    Rational scale = f;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] -= scale * rows[i][c];
  }
}

// Insert into an echelon basis; returns false when v is dependent.
bool echelon_insert(std::vector<Rational> v, std::vector<std::vector<Rational>>& rows,
                    std::vector<int>& lead) {
  reduce_against(v, rows, lead);
  int l = -1;
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) {
      l = static_cast<int>(c);
      break;
    }
  if (l < 0) return false;
  Rational inv = Rational(1) / v[static_cast<std::size_t>(l)];
  for (Rational& x : v) x *= inv;
  rows.push_back(std::move(v));
  lead.push_back(l);
  return true;
}

}  // namespace

HomPoly quartic_from_contact(const std::vector<ProjLine>& lines) {
  if (lines.size() != 7) throw Error("the contact construction needs exactly 7 lines");
  validate_line_set(lines);

  const std::vector<Monomial> quad = monomials_of_degree(4, 2);   // 10
  const std::vector<Monomial> cubic = monomials_of_degree(4, 3);  // 20
  std::map<Monomial, int, GrlexLess> cubic_index;
  for (std::size_t i = 0; i < cubic.size(); ++i) cubic_index.emplace(cubic[i], static_cast<int>(i));
  auto col_of = [&](int comp, int mono) { return comp * 10 + mono; };

  // 20 rows omega(z, V(z)) = 0 plus 6 tangency rows per line: 62 x 40.
  RatMatrix sys(20 + 6 * 7, 40);
  for (int comp = 0; comp < 4; ++comp)
    for (int mi = 0; mi < 10; ++mi) {
      // omega(z, e_comp z^m) = -omega(e_comp, z) z^m: the monomial z_s z^m
      // with a sign, where omega(e_comp, .) pairs with z_s, s = (comp+2)%4.
      Monomial m = quad[static_cast<std::size_t>(mi)];
      int s = (comp + 2) % 4;
      Rational signed_coeff = comp < 2 ? Rational(-1) : Rational(1);
      ++m.e[static_cast<std::size_t>(s)];
      sys.at(cubic_index.at(m), col_of(comp, mi)) += signed_coeff;
    }
  for (int li = 0; li < 7; ++li) {
    const ProjLine& line = lines[static_cast<std::size_t>(li)];
    for (int comp = 0; comp < 4; ++comp)
      for (int mi = 0; mi < 10; ++mi) {
        const Monomial& m = quad[static_cast<std::size_t>(mi)];
        int i = -1, j = -1;
        for (int v = 0; v < 4; ++v)
          for (int k = 0; k < m.e[static_cast<std::size_t>(v)]; ++k) (i < 0 ? i : j) = v;
        // z^m at s p + t q = k20 s^2 + k11 st + k02 t^2
        Rational k20 = line.p[static_cast<std::size_t>(i)] * line.p[static_cast<std::size_t>(j)];
        Rational k02 = line.q[static_cast<std::size_t>(i)] * line.q[static_cast<std::size_t>(j)];
        Rational k11 = line.p[static_cast<std::size_t>(i)] * line.q[static_cast<std::size_t>(j)] +
                       line.p[static_cast<std::size_t>(j)] * line.q[static_cast<std::size_t>(i)];
        const Rational* parts[3] = {&k20, &k11, &k02};
        // V(sp+tq) must stay in the plane Lambda = span(p,q); since Lambda is
        // Lagrangian this is omega(., p) = omega(., q) = 0 per (s,t) part.
        for (int part = 0; part < 3; ++part) {
          sys.at(20 + 6 * li + 2 * part, col_of(comp, mi)) += *parts[part] * omega_basis(comp, line.p);
          sys.at(20 + 6 * li + 2 * part + 1, col_of(comp, mi)) += *parts[part] * omega_basis(comp, line.q);
        }
      }
  }

  std::vector<std::vector<Rational>> kernel = nullspace(sys);

  // The radial fields f(z) z (f linear) always solve the system; quotient
  // them out and keep a basis of what remains.
  std::vector<std::vector<Rational>> echelon;
  std::vector<int> lead;
  for (int f = 0; f < 4; ++f) {
    std::vector<Rational> fx(40, Rational(0));
    for (int comp = 0; comp < 4; ++comp) {
      Monomial m{std::vector<int>(4, 0)};
      ++m.e[static_cast<std::size_t>(f)];
      ++m.e[static_cast<std::size_t>(comp)];
      int mi = -1;
      for (std::size_t k = 0; k < quad.size(); ++k)
        if (quad[k] == m) mi = static_cast<int>(k);
      fx[static_cast<std::size_t>(col_of(comp, mi))] += 1;
    }
    echelon_insert(std::move(fx), echelon, lead);
  }
  std::vector<std::vector<Rational>> reduced;
  for (const std::vector<Rational>& v : kernel)
    if (echelon_insert(v, echelon, lead)) reduced.push_back(echelon.back());
  if (reduced.size() < 2)
    throw SolutionSpaceTooSmall("contact fields span only " + std::to_string(reduced.size()) +
                                " dimensions modulo the radial fields");

  auto field_component = [&](const std::vector<Rational>& v, int comp) {
    Poly out(4);
    for (int mi = 0; mi < 10; ++mi) {
      const Rational& c = v[static_cast<std::size_t>(col_of(comp, mi))];
      if (c != 0) out.add_term(quad[static_cast<std::size_t>(mi)], c);
    }
    return out;
  };
  auto pairing = [&](const std::vector<Rational>& v1, const std::vector<Rational>& v2) {
    Poly q(4);
    for (int j = 0; j < 2; ++j) {
      q += field_component(v1, j) * field_component(v2, 2 + j);
      q -= field_component(v1, 2 + j) * field_component(v2, j);
    }
    return q;
  };

  Poly q(4);
  for (std::size_t i = 0; i < reduced.size() && q.is_zero(); ++i)
    for (std::size_t j = i + 1; j < reduced.size() && q.is_zero(); ++j)
      q = pairing(reduced[i], reduced[j]);
  if (q.is_zero())
    throw Error("every pair of contact fields pairs to zero - an invariant violation");

  // Normalize to primitive integer coefficients with positive leading term.
  BigInt den_lcm(1), num_gcd(0);
  for (const auto& [m, c] : q.terms()) {
    (void)m;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), denominator(c).get_mpz_t());
  }
  Poly scaled = q * Rational(den_lcm);
  for (const auto& [m, c] : scaled.terms()) {
    (void)m;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), numerator(c).get_mpz_t());
  }
  if (scaled.terms().begin()->second < 0) num_gcd = -num_gcd;
  scaled = scaled * (Rational(1) / Rational(num_gcd));

  HomPoly out(scaled, 4);
  for (const ProjLine& line : lines)
    for (const std::vector<Rational>& pt : fixed_points_on_line(line, 5))
      if (evaluate(out, pt) != 0) throw Error("internal: quartic fails to vanish on an input line");
  return out;
}

// --- restriction matrices -----------------------------------------------------------

IntMatrix restriction_matrix(const std::vector<ProjLine>& lines,
                             const std::vector<std::vector<Rational>>& extra_points, int d) {
  if (d < 0) throw Error("restriction needs d >= 0");
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (!lines_disjoint(lines[i], lines[j]))
        throw LinesNotDisjoint("lines " + std::to_string(i) + " and " + std::to_string(j) + " meet");

  std::vector<std::vector<Rational>> points;
  for (const ProjLine& line : lines)
    for (std::vector<Rational>& pt : fixed_points_on_line(line, d + 1)) points.push_back(std::move(pt));
  for (const std::vector<Rational>& pt : extra_points) {
    if (pt.size() != 4) throw DimensionMismatch("extra points must lie in Q^4");
    points.push_back(pt);
  }

  const std::vector<Monomial> mons = monomials_of_degree(4, d);
  RatMatrix rows(static_cast<int>(points.size()), static_cast<int>(mons.size()));
  for (std::size_t r = 0; r < points.size(); ++r) {
    std::vector<std::vector<Rational>> pw(4);
    for (int i = 0; i < 4; ++i) {
      pw[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(d) + 1, Rational(1));
      for (int k = 1; k <= d; ++k)
        pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] * points[r][static_cast<std::size_t>(i)];
    }
    for (std::size_t c = 0; c < mons.size(); ++c) {
      Rational e(1);
      for (int i = 0; i < 4; ++i) {
        int k = mons[c].e[static_cast<std::size_t>(i)];
        if (k > 0) e *= pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      }
      rows.at(static_cast<int>(r), static_cast<int>(c)) = std::move(e);
    }
  }
  return clear_denominators_rows(rows);
}

RankReport check_maximal_rank(const std::vector<ProjLine>& lines,
                              const std::vector<std::vector<Rational>>& extra_points, int d,
                              int prime_count) {
  IntMatrix m = restriction_matrix(lines, extra_points, d);
  RankReport rep;
  rep.rows = m.rows();
  rep.cols = m.cols();
  rep.target_rank = std::min(rep.rows, rep.cols);
  for (std::uint64_t p : prime_stream(30, std::max(prime_count, 1))) {
    int r = rank_mod(m, p);
    rep.primes.push_back(p);
    rep.ranks.push_back(r);
    if (r == rep.target_rank) {
      rep.maximal = rep.certified_mod = true;
      break;
    }
  }
  if (!rep.certified_mod) {
    rep.exact_rank = rank_exact(m);
    rep.maximal = rep.exact_rank == rep.target_rank;
  }
  rep.verdict = rep.maximal ? "MAXIMAL" : "NOT_MAXIMAL";
  return rep;
}

HdParameters hd_parameters(int d) {
  if (d < 1) throw Error("statement (H_d) needs d >= 1");
  int n = small_n(4, d);
  HdParameters hp;
  hp.r = n / (d + 1);
  hp.q = n - hp.r * (d + 1);
  return hp;
}

RankReport hd_check(int d, std::uint64_t max_coeff, std::uint64_t seed, int prime_count) {
  HdParameters hp = hd_parameters(d);
  int line_count = hp.r + (hp.q > 0 ? 1 : 0);
  std::vector<ProjLine> all = random_disjoint_involutive_lines(line_count, max_coeff, seed);
  std::vector<ProjLine> scheme(all.begin(), all.begin() + hp.r);
  std::vector<std::vector<Rational>> extra;
  if (hp.q > 0) extra = fixed_points_on_line(all.back(), hp.q);
  return check_maximal_rank(scheme, extra, d, prime_count);
}

}  // namespace symjet
