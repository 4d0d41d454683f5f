#pragma once

// Exact coefficient arithmetic: arbitrary-precision integers and rationals
// (GMP-backed), word-sized prime fields, and the multi-modular machinery
// (CRT, rational reconstruction) everything else builds on.
//
// The coefficient field of the geometry is modeled by Q throughout: every
// construction uses only rational data and rank arguments valid over any
// infinite field.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symjet/errors.hpp"

namespace symjet {

// mpz_class/mpq_class already guarantee the invariants we need:
// canonical zero, reduced fractions, positive denominators.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt numerator(const Rational& x) { return x.get_num(); }
inline BigInt denominator(const Rational& x) { return x.get_den(); }

// Parse/print rationals as "num/den" decimal strings (the JSON wire format).
std::string rational_to_string(const Rational& x);
Rational rational_from_string(const std::string& s);

// Deterministic primality for 64-bit integers (Miller–Rabin with a witness
// set that is exact for the full uint64 range).
bool is_prime_u64(std::uint64_t n);

// The first `count` primes >= 2^min_bits, deterministic for fixed inputs.
// Certification defaults to 31-bit primes: word arithmetic stays fast and a
// rank obtained mod any prime lower-bounds the rank over Q.
std::vector<std::uint64_t> prime_stream(int min_bits, int count);

// --- prime field ------------------------------------------------------------

// Residue in [0,p); p prime and small enough that products fit in 128 bits.
struct PrimeFieldElem {
  std::uint64_t residue = 0;
  std::uint64_t p = 0;
};

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t reduce_mod(const BigInt& x, std::uint64_t p);

// residue = num * den^{-1} (mod p); throws DenominatorDivisibleByP.
PrimeFieldElem reduce_mod(const Rational& x, std::uint64_t p);

// --- rational reconstruction and CRT ----------------------------------------

// The unique n/d with |n|, d <= sqrt(modulus/2) and d*residue = n (mod
// modulus), if it exists (half-extended Euclid). Ambiguous or out-of-bound
// cases return nullopt: the caller must add more primes.
std::optional<Rational> rational_reconstruct(const BigInt& residue, const BigInt& modulus);

// x = crt_pair(r1 mod m1, r2 mod m2), the unique residue mod m1*m2.
// Moduli must be coprime.
BigInt crt_pair(const BigInt& r1, const BigInt& m1, const BigInt& r2, const BigInt& m2);

// Incremental CRT over a vector of values: fold in one word-sized prime at a
// time; signed() maps residues to the symmetric range (-M/2, M/2].
class CrtVector {
 public:
  explicit CrtVector(std::size_t size) : modulus_(1), residues_(size, BigInt(0)) {}

  const BigInt& modulus() const { return modulus_; }
  std::size_t size() const { return residues_.size(); }

  // residues_new[i] mod p joins the accumulated system.
  void fold(const std::vector<std::uint64_t>& residues_new, std::uint64_t p);

  // Symmetric representative of entry i modulo the accumulated modulus.
  BigInt signed_entry(std::size_t i) const;

 private:
  BigInt modulus_;
  std::vector<BigInt> residues_;
};

// FNV-1a 64-bit hash; used to fingerprint run configurations in reports.
std::uint64_t fnv1a64(const std::string& data);

}  // namespace symjet
