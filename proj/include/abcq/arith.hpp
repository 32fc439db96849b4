#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace abcq {

using BigInt = mpz_class;
using Rational = mpq_class;

inline constexpr std::uint32_t kSmallPrimeLimit = 1'000'000;

struct PrimePower {
    BigInt prime;
    unsigned long exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Exact factorization of a positive integer.  Primes strictly increasing,
// exponents >= 1, product equals value.
struct Factorization {
    BigInt value = 1;
    std::vector<PrimePower> prime_powers;

    BigInt radical() const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// A finite place of Q with its log weight mu = log p.
struct PrimePlace {
    BigInt p;
    double mu = 0.0;
};

struct FactorOptions {
    // Trial division bound (clamped to kSmallPrimeLimit).
    std::uint32_t trial_cutoff = 1'000'000;
    // Total Pollard-Brent iterations allowed across all splits of one call.
    // Exhausting it raises ResourceError instead of looping on hard composites.
    std::uint64_t rho_budget = 20'000'000;
};

Factorization factorize(const BigInt& n, const FactorOptions& opts = {});

BigInt radical(const BigInt& n);

// Largest e with p^e | n.
unsigned long valuation(const BigInt& n, const BigInt& p);

// Deterministic below 2^64 (Miller-Rabin with a fixed witness set that is
// proven sufficient there).  Above 2^64 this is BPSW followed by random-base
// Miller-Rabin rounds; the error probability is below 2^-128.
bool is_prime(const BigInt& n);
bool is_prime_u64(std::uint64_t n);

// Least r >= 1 with a^r == 1 (mod p).
BigInt mult_order(const BigInt& a, const BigInt& p);

bool pairwise_coprime(std::span<const BigInt> xs);

PrimePlace prime_place(const BigInt& p);

// Natural log of |n|; n != 0.  Values below 2^53 go through std::log on the
// exactly converted double so small inputs agree with plain double code.
double log_abs(const BigInt& n);
double log_abs(unsigned __int128 n);

// True iff every prime dividing x also divides m (x, m nonzero).  Decided by
// repeated gcd stripping, without factoring either argument.
bool radical_divides(const BigInt& x, const BigInt& m);

// True iff x and y have the same set of prime divisors.
bool same_radical(const BigInt& x, const BigInt& y);

// Primes below kSmallPrimeLimit, ascending.  Built once per process.
const std::vector<std::uint32_t>& small_primes();

}  // namespace abcq
