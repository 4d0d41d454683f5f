#include "symjet/scalar.hpp"

#include <stdexcept>

namespace symjet {

std::string rational_to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  // Accept "num/den" and bare integers "num".
  Rational x;
  if (x.set_str(s, 10) != 0) throw Error("malformed rational: '" + s + "'");
  if (x.get_den() == 0) throw Error("zero denominator in rational: '" + s + "'");
  x.canonicalize();
  return x;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This witness set decides primality exactly for all n < 3.3e24 > 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_stream(int min_bits, int count) {
  if (min_bits < 1 || min_bits > 62) throw Error("prime_stream: min_bits out of range");
  if (count < 1) throw Error("prime_stream: count must be >= 1");
  std::vector<std::uint64_t> primes;
  primes.reserve(static_cast<std::size_t>(count));
  std::uint64_t candidate = 1ULL << min_bits;
  while (primes.size() < static_cast<std::size_t>(count)) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    ++candidate;
  }
  return primes;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 128-bit accumulators.
  a %= p;
  if (a == 0) throw Error("mod_inverse of zero");
  __int128 t = 0, new_t = 1;
  std::uint64_t r = p, new_r = a;
  while (new_r != 0) {
    std::uint64_t q = r / new_r;
    __int128 tmp_t = t - static_cast<__int128>(q) * new_t;
    t = new_t;
    new_t = tmp_t;
    std::uint64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) throw Error("mod_inverse: arguments not coprime");
  __int128 res = t % static_cast<__int128>(p);
  if (res < 0) res += p;
  return static_cast<std::uint64_t>(res);
}

std::uint64_t reduce_mod(const BigInt& x, std::uint64_t p) {
  BigInt r;
  mpz_mod_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

PrimeFieldElem reduce_mod(const Rational& x, std::uint64_t p) {
  std::uint64_t den = reduce_mod(BigInt(x.get_den()), p);
  if (den == 0) throw DenominatorDivisibleByP("denominator divisible by p=" + std::to_string(p));
  std::uint64_t num = reduce_mod(BigInt(x.get_num()), p);
  return PrimeFieldElem{mul_mod(num, mod_inverse(den, p), p), p};
}

std::optional<Rational> rational_reconstruct(const BigInt& residue, const BigInt& modulus) {
  if (modulus <= 1 || residue < 0 || residue >= modulus) {
    throw Error("rational_reconstruct: need 0 <= residue < modulus, modulus > 1");
  }
  // Half-extended Euclid: stop as soon as the remainder drops to the bound
  // sqrt(m/2); then n = +/-r, d = |t| is the unique candidate.
  BigInt bound_sq = modulus / 2;  // compare r^2 <= m/2 to avoid square roots
  BigInt r0 = modulus, r1 = residue;
  BigInt t0 = 0, t1 = 1;
  while (r1 * r1 > bound_sq) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    BigInt t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0) return std::nullopt;
  BigInt n = r1, d = t1;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (d * d > bound_sq) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) return std::nullopt;  // ambiguous: refuse rather than guess
  Rational x(n, d);
  x.canonicalize();
  return x;
}

BigInt crt_pair(const BigInt& r1, const BigInt& m1, const BigInt& r2, const BigInt& m2) {
  BigInt g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  if (g != 1) throw Error("crt_pair: moduli not coprime");
  BigInt m = m1 * m2;
  BigInt x = r1 + m1 * (((r2 - r1) * s) % m2);
  x %= m;
  if (x < 0) x += m;
  return x;
}

void CrtVector::fold(const std::vector<std::uint64_t>& residues_new, std::uint64_t p) {
  if (residues_new.size() != residues_.size()) throw DimensionMismatch("CrtVector::fold size");
  BigInt bp(static_cast<unsigned long>(p));
  if (modulus_ == 1) {
    for (std::size_t i = 0; i < residues_.size(); ++i) {
      residues_[i] = BigInt(static_cast<unsigned long>(residues_new[i] % p));
    }
    modulus_ = bp;
    return;
  }
  // x' = x + M * ((r - x) * M^{-1} mod p), the standard incremental step.
  std::uint64_t m_mod_p = reduce_mod(modulus_, p);
  std::uint64_t m_inv = mod_inverse(m_mod_p, p);
  for (std::size_t i = 0; i < residues_.size(); ++i) {
    std::uint64_t x_mod_p = reduce_mod(residues_[i], p);
    std::uint64_t delta = (residues_new[i] % p + p - x_mod_p) % p;
    std::uint64_t k = mul_mod(delta, m_inv, p);
    residues_[i] += modulus_ * BigInt(static_cast<unsigned long>(k));
  }
  modulus_ *= bp;
}

BigInt CrtVector::signed_entry(std::size_t i) const {
  BigInt x = residues_[i];
  if (2 * x > modulus_) x -= modulus_;
  return x;
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace symjet
