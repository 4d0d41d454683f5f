#include "symjet/linalg.hpp"

#include <algorithm>

namespace symjet {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = Rational(m.at(r, c));
  return out;
}

IntMatrix clear_denominators_rows(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    BigInt l(1);
    for (int c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
    for (int c = 0; c < m.cols(); ++c) {
      Rational scaled = m.at(r, c) * Rational(l);
      out.at(r, c) = scaled.get_num();  // den is 1 after scaling by the lcm
    }
  }
  return out;
}

// --- mod-p elimination --------------------------------------------------------

namespace {

// Shoup's trick: for a fixed multiplier w < p, precompute floor(w*2^64/p);
// then w*x mod p costs two multiplies and a conditional subtract.
struct ShoupMul {
  std::uint64_t w, w_shoup, p;
  ShoupMul(std::uint64_t w_, std::uint64_t p_)
      : w(w_), w_shoup(static_cast<std::uint64_t>((static_cast<unsigned __int128>(w_) << 64) / p_)), p(p_) {}
  std::uint64_t operator()(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(w_shoup) * x) >> 64);
    std::uint64_t r = w * x - q * p;  // in [0, 2p)
    return r >= p ? r - p : r;
  }
};

// row_i[c..] += w * pivot[c..] (mod p), all entries already reduced.
inline void row_addmul(std::uint32_t* row, const std::uint32_t* pivot, int from, int cols,
                       std::uint64_t w, std::uint64_t p) {
  if (w == 0) return;
  ShoupMul mul(w, p);
  for (int j = from; j < cols; ++j) {
    std::uint64_t v = row[j] + mul(pivot[j]);
    row[j] = static_cast<std::uint32_t>(v >= p ? v - p : v);
  }
}

inline void row_scale(std::uint32_t* row, int from, int cols, std::uint64_t w, std::uint64_t p) {
  ShoupMul mul(w, p);
  for (int j = from; j < cols; ++j) row[j] = static_cast<std::uint32_t>(mul(row[j]));
}

}  // namespace

ModMatrix reduce_matrix_mod(const IntMatrix& m, std::uint64_t p) {
  if (p >= (1ULL << 31)) throw Error("modular elimination requires p < 2^31");
  ModMatrix out(m.rows(), m.cols(), p);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = static_cast<std::uint32_t>(reduce_mod(m.at(r, c), p));
  return out;
}

int rank_destructive(ModMatrix& m) {
  const std::uint64_t p = m.p;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      std::swap_ranges(&m.at(pivot, 0), &m.at(pivot, 0) + m.cols, &m.at(rank, 0));
    std::uint32_t* prow = &m.at(rank, 0);
    row_scale(prow, col, m.cols, mod_inverse(prow[col], p), p);
    for (int r = rank + 1; r < m.rows; ++r) {
      std::uint32_t* row = &m.at(r, 0);
      std::uint64_t f = row[col];
      if (f == 0) continue;
      row_addmul(row, prow, col, m.cols, p - f, p);
    }
    ++rank;
  }
  return rank;
}

int rank_mod(const IntMatrix& m, std::uint64_t p) {
  ModMatrix mm = reduce_matrix_mod(m, p);
  return rank_destructive(mm);
}

std::vector<int> independent_rows_mod(const IntMatrix& m, std::uint64_t p, int want) {
  if (p >= (1ULL << 31)) throw Error("modular elimination requires p < 2^31");
  const int cols = m.cols();
  if (want < 0) want = std::min(m.rows(), cols);
  std::vector<int> chosen;
  // echelon[c] = reduced row with leading 1 at column c (empty if none yet)
  std::vector<std::vector<std::uint32_t>> echelon(static_cast<std::size_t>(cols));
  std::vector<std::uint32_t> v(static_cast<std::size_t>(cols));
  for (int r = 0; r < m.rows() && static_cast<int>(chosen.size()) < want; ++r) {
    for (int c = 0; c < cols; ++c) v[c] = static_cast<std::uint32_t>(reduce_mod(m.at(r, c), p));
    int c = 0;
    while (c < cols) {
      if (v[c] == 0) {
        ++c;
        continue;
      }
      if (echelon[c].empty()) break;
      row_addmul(v.data(), echelon[c].data(), c, cols, p - v[c], p);
      // v[c] is now zero; continue scanning from the same column
    }
    if (c >= cols) continue;  // dependent on earlier rows
    row_scale(v.data(), c, cols, mod_inverse(v[c], p), p);
    echelon[c] = v;
    chosen.push_back(r);
  }
  return chosen;
}

ModSolveResult solve_mod(const ModMatrix& a, const std::vector<std::uint64_t>& b) {
  if (a.rows != a.cols) throw DimensionMismatch("solve_mod needs a square matrix");
  if (static_cast<int>(b.size()) != a.rows) throw DimensionMismatch("solve_mod rhs size");
  const int n = a.rows;
  const std::uint64_t p = a.p;
  ModMatrix m = a;
  std::vector<std::uint64_t> rhs(b);
  for (auto& x : rhs) x %= p;

  std::uint64_t det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return {};  // singular mod p
    if (pivot != col) {
      std::swap_ranges(&m.at(pivot, 0), &m.at(pivot, 0) + n, &m.at(col, 0));
      std::swap(rhs[pivot], rhs[col]);
      det = p - det;  // row swap flips the sign
    }
    std::uint32_t* prow = &m.at(col, 0);
    det = mul_mod(det, prow[col], p);
    std::uint64_t inv = mod_inverse(prow[col], p);
    row_scale(prow, col, n, inv, p);
    rhs[col] = mul_mod(rhs[col], inv, p);
    for (int r = col + 1; r < n; ++r) {
      std::uint32_t* row = &m.at(r, 0);
      std::uint64_t f = row[col];
      if (f == 0) continue;
      row_addmul(row, prow, col, n, p - f, p);
      rhs[r] = (rhs[r] + mul_mod(p - f, rhs[col], p)) % p;
    }
  }
  // back substitution on the unit-diagonal echelon form
  std::vector<std::uint64_t> x(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t s = rhs[i];
    for (int j = i + 1; j < n; ++j) {
      std::uint64_t t = mul_mod(m.at(i, j), x[j], p);
      s = (s + p - t) % p;
    }
    x[i] = s;
  }
  return {std::move(x), det % p};
}

// --- Bareiss ------------------------------------------------------------------

namespace {

// Fraction-free elimination in place. Returns rank; sign/pivot give the
// determinant of square full-rank inputs as sign * last pivot.
struct BareissResult {
  int rank = 0;
  int sign = 1;
  BigInt last_pivot = 1;
};

BareissResult bareiss_destructive(IntMatrix& m) {
  BareissResult res;
  BigInt prev(1);
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
      res.sign = -res.sign;
    }
    for (int i = r + 1; i < m.rows(); ++i) {
      for (int j = c + 1; j < m.cols(); ++j) {
        BigInt t = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

int rank_exact(const IntMatrix& m) {
  IntMatrix copy = m;
  return bareiss_destructive(copy).rank;
}

BigInt det_exact(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("det of a non-square matrix");
  if (m.rows() == 0) return BigInt(1);
  IntMatrix copy = m;
  BareissResult res = bareiss_destructive(copy);
  if (res.rank < m.rows()) return BigInt(0);
  return res.sign > 0 ? res.last_pivot : BigInt(-res.last_pivot);
}

// --- rational elimination -------------------------------------------------------

std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    Rational inv = 1 / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

int rank_rational(const RatMatrix& m) {
  RatMatrix copy = m;
  return static_cast<int>(rref(copy).size());
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
  RatMatrix e = m;
  std::vector<int> pivots = rref(e);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free_c = 0; free_c < m.cols(); ++free_c) {
    if (is_pivot[static_cast<std::size_t>(free_c)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(m.cols()), Rational(0));
    v[static_cast<std::size_t>(free_c)] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      // row k of the rref has leading 1 at pivots[k]
      v[static_cast<std::size_t>(pivots[k])] = -e.at(static_cast<int>(k), free_c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  // [m | I] always has row rank n, so rref finds n pivots; m is invertible
  // exactly when they all land in the left block, i.e. pivots = 0..n-1.
  std::vector<int> pivots = rref(aug);
  for (int k = 0; k < n; ++k)
    if (k >= static_cast<int>(pivots.size()) || pivots[static_cast<std::size_t>(k)] != k)
      return std::nullopt;
  RatMatrix inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

// --- exact solve ----------------------------------------------------------------

BigInt ceil_sqrt(const BigInt& x) {
  if (x < 0) throw Error("ceil_sqrt of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  if (r * r < x) r += 1;
  return r;
}

namespace {

std::vector<Rational> solve_bareiss(const IntMatrix& a, const std::vector<BigInt>& b) {
  const int n = a.rows();
  IntMatrix aug(n, n + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, n) = b[static_cast<std::size_t>(r)];
  }
  // forward fraction-free elimination (row swaps only; a is nonsingular)
  BigInt prev(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (aug.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw Error("solve_bareiss: matrix is singular");
    if (pivot != c)
      for (int j = 0; j <= n; ++j) std::swap(aug.at(pivot, j), aug.at(c, j));
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j <= n; ++j) {
        BigInt t = aug.at(c, c) * aug.at(i, j) - aug.at(i, c) * aug.at(c, j);
        mpz_divexact(aug.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      aug.at(i, c) = 0;
    }
    prev = aug.at(c, c);
  }
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    Rational s(aug.at(i, n));
    for (int j = i + 1; j < n; ++j) s -= Rational(aug.at(i, j)) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s / Rational(aug.at(i, i));
    x[static_cast<std::size_t>(i)].canonicalize();
  }
  return x;
}

std::vector<Rational> solve_crt(const IntMatrix& a, const std::vector<BigInt>& b) {
  const int n = a.rows();
  // Hadamard bounds by columns: |det| <= prod ||col_j||, and each Cramer
  // numerator (one column replaced by b) is <= (prod without the smallest
  // column factor) * ||b||.
  std::vector<BigInt> colnorm(static_cast<std::size_t>(n));
  BigInt prod(1);
  for (int c = 0; c < n; ++c) {
    BigInt s(0);
    for (int r = 0; r < n; ++r) s += a.at(r, c) * a.at(r, c);
    colnorm[static_cast<std::size_t>(c)] = ceil_sqrt(s);
    if (colnorm[static_cast<std::size_t>(c)] == 0) colnorm[static_cast<std::size_t>(c)] = 1;
    prod *= colnorm[static_cast<std::size_t>(c)];
  }
  BigInt bs(0);
  for (const BigInt& v : b) bs += v * v;
  BigInt bnorm = ceil_sqrt(bs);
  if (bnorm == 0) bnorm = 1;
  BigInt min_col = *std::min_element(colnorm.begin(), colnorm.end());
  BigInt num_bound;
  mpz_divexact(num_bound.get_mpz_t(), prod.get_mpz_t(), min_col.get_mpz_t());
  num_bound *= bnorm;
  BigInt target = 2 * std::max(prod, num_bound) + 1;

  CrtVector acc(static_cast<std::size_t>(n) + 1);  // det*x_1..det*x_n, det
  int singular_streak = 0;
  std::uint64_t next_prime = 1ULL << 30;
  while (acc.modulus() < target) {
    while (!is_prime_u64(next_prime)) ++next_prime;
    std::uint64_t p = next_prime++;
    ModMatrix am = reduce_matrix_mod(a, p);
    std::vector<std::uint64_t> bm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) bm[static_cast<std::size_t>(i)] = reduce_mod(b[static_cast<std::size_t>(i)], p);
    ModSolveResult sol = solve_mod(am, bm);
    if (sol.det == 0) {
      // only finitely many primes divide a nonzero determinant
      if (++singular_streak > 64) throw Error("solve_exact: matrix appears singular");
      continue;
    }
    singular_streak = 0;
    std::vector<std::uint64_t> folded(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) folded[static_cast<std::size_t>(i)] = mul_mod(sol.x[static_cast<std::size_t>(i)], sol.det, p);
    folded[static_cast<std::size_t>(n)] = sol.det;
    acc.fold(folded, p);
  }
  BigInt det = acc.signed_entry(static_cast<std::size_t>(n));
  if (det == 0) throw Error("solve_exact: matrix is singular");
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = Rational(acc.signed_entry(static_cast<std::size_t>(i)), det);
    x[static_cast<std::size_t>(i)].canonicalize();
  }
  return x;
}

}  // namespace

std::vector<Rational> solve_exact(const IntMatrix& a, const std::vector<Rational>& b,
                                  int bareiss_threshold) {
  if (a.rows() != a.cols()) throw DimensionMismatch("solve_exact needs a square matrix");
  if (static_cast<int>(b.size()) != a.rows()) throw DimensionMismatch("solve_exact rhs size");
  // clear rhs denominators: solve A y = l*b, then x = y / l
  BigInt l(1);
  for (const Rational& v : b) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<BigInt> bi(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    Rational scaled = b[i] * Rational(l);
    bi[i] = scaled.get_num();
  }
  std::vector<Rational> y = a.rows() < bareiss_threshold ? solve_bareiss(a, bi) : solve_crt(a, bi);
  Rational inv_l(1, l);
  inv_l.canonicalize();
  for (Rational& v : y) {
    v *= inv_l;
    v.canonicalize();
  }
  return y;
}

}  // namespace symjet
