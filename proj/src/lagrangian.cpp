#include "symjet/lagrangian.hpp"

#include <algorithm>

#include "symjet/poly.hpp"

namespace symjet {

namespace {

std::vector<Rational> row_of(const RatMatrix& m, int r) {
  std::vector<Rational> v(static_cast<std::size_t>(m.cols()));
  for (int c = 0; c < m.cols(); ++c) v[static_cast<std::size_t>(c)] = m.at(r, c);
  return v;
}

// det of the 2n x 2n stack of two n x 2n frames; nonzero iff transverse.
BigInt stacked_det(const LagrangianFrame& a, const LagrangianFrame& b) {
  RatMatrix s(2 * a.n, 2 * a.n);
  for (int r = 0; r < a.n; ++r)
    for (int c = 0; c < 2 * a.n; ++c) {
      s.at(r, c) = a.rows.at(r, c);
      s.at(a.n + r, c) = b.rows.at(r, c);
    }
  return det_exact(clear_denominators_rows(s));
}

bool is_symmetric(const RatMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r + 1; c < m.cols(); ++c)
      if (m.at(r, c) != m.at(c, r)) return false;
  return true;
}

}  // namespace

bool is_lagrangian(const LagrangianFrame& frame) {
  const int n = frame.n;
  if (frame.rows.rows() != n || frame.rows.cols() != 2 * n)
    throw DimensionMismatch("Lagrangian frame must be n x 2n");
  if (rank_rational(frame.rows) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (omega(row_of(frame.rows, i), row_of(frame.rows, j)) != 0) return false;
  return true;
}

TransversalityResult pairwise_transverse(const std::vector<LagrangianFrame>& frames) {
  for (std::size_t i = 1; i < frames.size(); ++i)
    if (frames[i].n != frames[0].n) throw DimensionMismatch("frames of mixed dimension");
  TransversalityResult res;
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = i + 1; j < frames.size(); ++j)
      if (stacked_det(frames[i], frames[j]) == 0) {
        res.ok = false;
        res.offending = {static_cast<int>(i), static_cast<int>(j)};
        return res;
      }
  return res;
}

std::vector<LagrangianFrame> NormalFamily::frames() const {
  std::vector<LagrangianFrame> out;
  out.reserve(static_cast<std::size_t>(count()));
  RatMatrix first(n, 2 * n), second(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    first.at(i, i) = 1;       // [I, 0]
    second.at(i, n + i) = 1;  // [0, I]
  }
  out.push_back({n, first});
  out.push_back({n, second});
  for (const RatMatrix& aj : a) {
    RatMatrix rows(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      rows.at(i, i) = 1;
      for (int j = 0; j < n; ++j) rows.at(i, n + j) = aj.at(i, j);
    }
    out.push_back({n, rows});  // [I, A_j]
  }
  return out;
}

NormalFamily random_normal_family(int n, int count, std::uint64_t max_coeff,
                                  std::uint64_t seed) {
  if (n < 1 || count < 2 || max_coeff < 1)
    throw Error("random_normal_family: need n >= 1, count >= 2, max_coeff >= 1");
  SplitMix64 rng(seed);
  NormalFamily fam;
  fam.n = n;
  const int limit = 1000 * count;
  while (fam.count() < count) {
    RatMatrix aj(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = r; c < n; ++c) {
        Rational v(static_cast<unsigned long>(rng.uniform(1, max_coeff)));
        aj.at(r, c) = v;
        aj.at(c, r) = v;
      }
    // Invariants: det(A_j) != 0 keeps [I,A_j] transverse to [I,0]; pairwise
    // difference determinants keep the graphs transverse to each other.
    bool ok = det_exact(clear_denominators_rows(aj)) != 0;
    for (std::size_t i = 0; ok && i < fam.a.size(); ++i) {
      RatMatrix diff(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) diff.at(r, c) = aj.at(r, c) - fam.a[i].at(r, c);
      ok = det_exact(clear_denominators_rows(diff)) != 0;
    }
    if (ok) {
      fam.a.push_back(std::move(aj));
    } else if (++fam.retries > limit) {
      throw RetryLimitExceeded("random_normal_family: retry budget exhausted (parameters too tight?)");
    }
  }
  return fam;
}

NormalFormResult normal_form_reduce(const std::vector<LagrangianFrame>& frames) {
  if (frames.size() < 2) throw InvalidFamily("normal form needs at least two frames");
  const int n = frames[0].n;
  const int two_n = 2 * n;
  for (const LagrangianFrame& f : frames)
    if (!is_lagrangian(f)) throw NotLagrangian("normal form input frame is not Lagrangian");
  TransversalityResult tv = pairwise_transverse(frames);
  if (!tv.ok)
    throw InvalidFamily("frames " + std::to_string(tv.offending.first) + " and " +
                        std::to_string(tv.offending.second) + " are not transverse");

  // Dual basis: v_j in the second frame with omega(u_i, v_j) = delta_ij.
  // The pairing G = U Omega W^T is nonsingular exactly because the two
  // Lagrangian frames are transverse.
  const RatMatrix& u = frames[0].rows;
  const RatMatrix& w = frames[1].rows;
  RatMatrix g = u * omega_matrix(two_n) * w.transpose();
  std::optional<RatMatrix> ginv = inverse(g);
  if (!ginv) throw InvalidFamily("first two frames are not transverse");
  RatMatrix v = ginv->transpose() * w;

  RatMatrix c(two_n, two_n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < two_n; ++r) {
      c.at(r, i) = u.at(i, r);
      c.at(r, n + i) = v.at(i, r);
    }
  if (!is_symplectic_matrix(c)) throw Error("internal: dual-basis matrix must be symplectic");
  std::optional<RatMatrix> cinv = inverse(c);
  if (!cinv) throw Error("internal: symplectic matrix must be invertible");

  NormalFormResult res{c, NormalFamily{n, {}, 0}};
  RatMatrix cinv_t = cinv->transpose();
  for (std::size_t j = 2; j < frames.size(); ++j) {
    RatMatrix rows = frames[j].rows * cinv_t;  // frame in the new coordinates
    RatMatrix b(n, n), dmat(n, n);
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) {
        b.at(r, col) = rows.at(r, col);
        dmat.at(r, col) = rows.at(r, n + col);
      }
    std::optional<RatMatrix> binv = inverse(b);
    if (!binv) throw Error("internal: transverse frame must be a graph over [I,0]");
    RatMatrix aj = *binv * dmat;
    if (!is_symmetric(aj)) throw Error("internal: graph matrix of a Lagrangian must be symmetric");
    res.family.a.push_back(std::move(aj));
  }
  return res;
}

std::vector<std::vector<Rational>> sample_vectors(const LagrangianFrame& frame, int count,
                                                  std::uint64_t max_coeff, std::uint64_t seed) {
  if (count < 1 || max_coeff < 1) throw Error("sample_vectors: need count >= 1, max_coeff >= 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<Rational>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    std::vector<Rational> x(static_cast<std::size_t>(frame.n));
    for (int i = 0; i < frame.n; ++i)
      x[static_cast<std::size_t>(i)] = Rational(static_cast<unsigned long>(rng.uniform(1, max_coeff)));
    out.push_back(frame.rows.transpose().apply(x));
  }
  return out;
}

std::vector<std::vector<Rational>> simplex_samples(const LagrangianFrame& frame, int d) {
  RatMatrix rows_t = frame.rows.transpose();
  std::vector<std::vector<Rational>> out;
  for (const Monomial& beta : monomials_of_degree(frame.n, d)) {
    std::vector<Rational> x(static_cast<std::size_t>(frame.n));
    for (int i = 0; i < frame.n; ++i) x[static_cast<std::size_t>(i)] = beta.e[static_cast<std::size_t>(i)];
    out.push_back(rows_t.apply(x));
  }
  return out;
}

RatMatrix lagrangian_to_symplectic_matrix(const LagrangianFrame& frame) {
  if (!is_lagrangian(frame)) throw NotLagrangian("frame is not Lagrangian");
  return lagrangian_symplectic_from_rows(frame.rows);
}

ProjLine line_of(const LagrangianFrame& frame) {
  if (frame.n != 2) throw DimensionMismatch("lines live in P^3: frame must have n = 2");
  return ProjLine{row_of(frame.rows, 0), row_of(frame.rows, 1)};
}

LagrangianFrame frame_of(const ProjLine& line) {
  if (line.p.size() != 4 || line.q.size() != 4)
    throw DimensionMismatch("line points must lie in Q^4");
  if (omega(line.p, line.q) != 0) throw NotInvolutive("omega(p,q) != 0: line is not involutive");
  RatMatrix rows(2, 4);
  for (int c = 0; c < 4; ++c) {
    rows.at(0, c) = line.p[static_cast<std::size_t>(c)];
    rows.at(1, c) = line.q[static_cast<std::size_t>(c)];
  }
  LagrangianFrame frame{2, rows};
  if (rank_rational(rows) != 2) throw Error("line points are proportional");
  return frame;
}

bool lines_disjoint(const ProjLine& a, const ProjLine& b) {
  RatMatrix s(4, 4);
  const std::vector<Rational>* pts[4] = {&a.p, &a.q, &b.p, &b.q};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s.at(r, c) = (*pts[r])[static_cast<std::size_t>(c)];
  return det_exact(clear_denominators_rows(s)) != 0;
}

std::vector<ProjLine> random_disjoint_involutive_lines(int r, std::uint64_t max_coeff,
                                                       std::uint64_t seed) {
  if (r < 1) throw Error("need at least one line");
  NormalFamily fam = random_normal_family(2, std::max(r, 2), max_coeff, seed);
  std::vector<LagrangianFrame> frames = fam.frames();
  frames.resize(static_cast<std::size_t>(r));
  std::vector<ProjLine> lines;
  lines.reserve(frames.size());
  for (const LagrangianFrame& f : frames) lines.push_back(line_of(f));
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (!lines_disjoint(lines[i], lines[j])) throw Error("internal: transverse frames gave meeting lines");
  return lines;
}

namespace {

std::vector<Rational> point_at(const ProjLine& line, const Rational& s, const Rational& t) {
  std::vector<Rational> pt(4);
  for (int c = 0; c < 4; ++c)
    pt[static_cast<std::size_t>(c)] =
        s * line.p[static_cast<std::size_t>(c)] + t * line.q[static_cast<std::size_t>(c)];
  return pt;
}

}  // namespace

std::vector<std::vector<Rational>> sample_points_on_line(const ProjLine& line, int count,
                                                         std::uint64_t seed) {
  if (count < 1) throw Error("need at least one point");
  SplitMix64 rng(seed);
  std::vector<std::vector<Rational>> pts;
  pts.push_back(point_at(line, 1, 0));
  if (count >= 2) pts.push_back(point_at(line, 0, 1));
  std::vector<std::uint64_t> used;
  while (static_cast<int>(pts.size()) < count) {
    std::uint64_t t = rng.uniform(1, 1000000);
    if (std::find(used.begin(), used.end(), t) != used.end()) continue;
    used.push_back(t);
    pts.push_back(point_at(line, 1, Rational(static_cast<unsigned long>(t))));
  }
  return pts;
}

std::vector<std::vector<Rational>> fixed_points_on_line(const ProjLine& line, int count) {
  if (count < 1) throw Error("need at least one point");
  std::vector<std::vector<Rational>> pts;
  pts.push_back(point_at(line, 1, 0));
  if (count >= 2) pts.push_back(point_at(line, 0, 1));
  for (int t = 1; static_cast<int>(pts.size()) < count; ++t)
    pts.push_back(point_at(line, 1, t));
  return pts;
}

}  // namespace symjet
