#pragma once

// Dense exact linear algebra:
//   - Matrix<T> storage shared by BigInt / Rational / word-sized matrices,
//   - row elimination mod word-sized primes (rank, row selection, solve),
//   - fraction-free Bareiss elimination over BigInt (rank, det, solve),
//   - reduced row echelon / nullspace over Q for small systems,
//   - an exact rational solver that picks Bareiss for small systems and
//     multi-modular CRT (with the determinant folded in alongside det*x)
//     for large ones.
//
// rank_mod(M, p) <= rank_exact(M) for every prime: a full modular rank is a
// certificate, a deficient one is not a refutation.

#include <cstdint>
#include <optional>
#include <vector>

#include "symjet/scalar.hpp"

namespace symjet {

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
    Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k) {
        const T& x = at(r, k);
        if (x == T(0)) continue;
        for (int c = 0; c < o.cols_; ++c) out.at(r, c) += x * o.at(k, c);
      }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix apply shape");
    std::vector<T> out(static_cast<std::size_t>(rows_), T(0));
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<T> a_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
// Clears denominators row by row (each row scaled by the lcm of its
// denominators); preserves row span and hence every rank statement.
IntMatrix clear_denominators_rows(const RatMatrix& m);

// --- arithmetic mod word-sized primes ----------------------------------------

// Dense matrix over Z/p, p < 2^31, entries stored reduced in uint32.
struct ModMatrix {
  int rows = 0, cols = 0;
  std::uint64_t p = 0;
  std::vector<std::uint32_t> a;

  ModMatrix() = default;
  ModMatrix(int r, int c, std::uint64_t prime)
      : rows(r), cols(c), p(prime), a(static_cast<std::size_t>(r) * c, 0) {}
  std::uint32_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::uint32_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

ModMatrix reduce_matrix_mod(const IntMatrix& m, std::uint64_t p);

// In-place row echelon; returns the rank.
int rank_destructive(ModMatrix& m);
int rank_mod(const IntMatrix& m, std::uint64_t p);

// Greedy insertion in row order: returns original indices of the first
// maximal independent row subset (stops early once `want` rows are found,
// want < 0 means "all"). Deterministic; used for pivot selection.
std::vector<int> independent_rows_mod(const IntMatrix& m, std::uint64_t p, int want = -1);

// Gaussian solve of a square system mod p. Returns x and the determinant
// mod p (0 means singular mod p, x empty).
struct ModSolveResult {
  std::vector<std::uint64_t> x;
  std::uint64_t det = 0;
};
ModSolveResult solve_mod(const ModMatrix& a, const std::vector<std::uint64_t>& b);

// --- fraction-free (Bareiss) elimination over BigInt --------------------------

int rank_exact(const IntMatrix& m);
// Determinant of a square matrix (Bareiss; exact).
BigInt det_exact(const IntMatrix& m);

// --- rational elimination (small systems) -------------------------------------

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m);
int rank_rational(const RatMatrix& m);
// Basis of {x : m x = 0}.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);
// Inverse of a square rational matrix; nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

// --- exact solve of a nonsingular integer system ------------------------------

// ceil(sqrt(x key)) for Hadamard bounds.
BigInt ceil_sqrt(const BigInt& x);

// Solve A x = b exactly over Q. A must be square and nonsingular (callers
// guarantee this by selecting rows that are independent mod a prime, which
// already proves nonsingularity over Q). Systems below `bareiss_threshold`
// unknowns use fraction-free elimination; larger ones use per-prime Gaussian
// solves combined by CRT, folding the determinant in next to det*x so no
// per-entry rational reconstruction is ever needed.
std::vector<Rational> solve_exact(const IntMatrix& a, const std::vector<Rational>& b,
                                  int bareiss_threshold = 200);

}  // namespace symjet
