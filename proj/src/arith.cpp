#include "abcq/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "abcq/errors.hpp"

namespace abcq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool fits_u64(const BigInt& n) { return mpz_sgn(n.get_mpz_t()) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const BigInt& n) {
    u64 out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
    return out;
}

BigInt from_u64(u64 v) {
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

struct RhoBudget {
    u64 remaining;
    void spend(u64 steps) {
        if (steps > remaining) throw ResourceError("factorize: Pollard-rho iteration budget exhausted");
        remaining -= steps;
    }
};

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Brent's variant with batched gcds.  Returns a nontrivial divisor of the
// odd composite n.
u64 rho_u64(u64 n, RhoBudget& budget) {
    constexpr u64 kBatch = 128;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const u64 steps = std::min(kBatch, r - k);
                budget.spend(steps);
                for (u64 i = 0; i < steps; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

BigInt rho_big(const BigInt& n, RhoBudget& budget) {
    constexpr u64 kBatch = 128;
    BigInt y, x, ys, q, g, diff;
    for (unsigned long c = 1;; ++c) {
        y = 2;
        q = 1;
        g = 1;
        auto f = [&](BigInt& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) f(y);
            for (u64 k = 0; k < r && g == 1; k += kBatch) {
                ys = y;
                const u64 steps = std::min(kBatch, r - k);
                budget.spend(steps);
                for (u64 i = 0; i < steps; ++i) {
                    f(y);
                    diff = x - y;
                    q = q * abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g == n) {
            do {
                f(ys);
                diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

using FactorMap = std::map<BigInt, unsigned long>;

void split_composite(const BigInt& m, FactorMap& out, RhoBudget& budget);

void add_cofactor(const BigInt& m, FactorMap& out, RhoBudget& budget) {
    if (m == 1) return;
    if (is_prime(m)) {
        out[m] += 1;
        return;
    }
    split_composite(m, out, budget);
}

void split_composite(const BigInt& m, FactorMap& out, RhoBudget& budget) {
    BigInt root;
    if (mpz_perfect_square_p(m.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
        FactorMap sub;
        add_cofactor(root, sub, budget);
        for (const auto& [p, e] : sub) out[p] += 2 * e;
        return;
    }
    BigInt d;
    if (fits_u64(m)) {
        d = from_u64(rho_u64(to_u64(m), budget));
    } else {
        d = rho_big(m, budget);
    }
    add_cofactor(d, out, budget);
    add_cofactor(BigInt(m / d), out, budget);
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kSmallPrimeLimit, false);
        std::vector<std::uint32_t> ps;
        for (std::uint32_t i = 2; i < kSmallPrimeLimit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (u64 j = static_cast<u64>(i) * i; j < kSmallPrimeLimit; j += i) composite[j] = true;
        }
        return ps;
    }();
    return primes;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : kWitnesses) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    // GMP runs BPSW and then (reps - 24) Miller-Rabin rounds with random
    // bases; 88 leaves 64 rounds, i.e. error below 4^-64 = 2^-128.
    return mpz_probab_prime_p(n.get_mpz_t(), 88) != 0;
}

BigInt Factorization::radical() const {
    BigInt r = 1;
    for (const auto& pp : prime_powers) r *= pp.prime;
    return r;
}

Factorization factorize(const BigInt& n, const FactorOptions& opts) {
    if (n == 0) throw DomainError("factorize: argument must be nonzero");
    Factorization result;
    result.value = abs(n);
    BigInt m = result.value;
    FactorMap found;
    RhoBudget budget{opts.rho_budget};

    const std::uint32_t cutoff = std::min(opts.trial_cutoff, kSmallPrimeLimit);
    if (fits_u64(m)) {
        u64 v = to_u64(m);
        for (std::uint32_t p : small_primes()) {
            if (p >= cutoff || static_cast<u128>(p) * p > v) break;
            if (v % p) continue;
            unsigned long e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            found[p] = e;
        }
        m = from_u64(v);
    } else {
        BigInt pz;
        for (std::uint32_t p : small_primes()) {
            if (p >= cutoff) break;
            if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
            pz = p;
            found[pz] = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t());
            if (m == 1) break;
        }
    }
    add_cofactor(m, found, budget);

    result.prime_powers.reserve(found.size());
    for (auto& [p, e] : found) result.prime_powers.push_back({p, e});
    return result;
}

BigInt radical(const BigInt& n) { return factorize(n).radical(); }

unsigned long valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw DomainError("valuation: argument must be nonzero");
    if (!is_prime(p)) throw DomainError("valuation: modulus is not prime");
    BigInt rest = n;
    return mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
}

BigInt mult_order(const BigInt& a, const BigInt& p) {
    if (!is_prime(p)) throw DomainError("mult_order: modulus is not prime");
    BigInt base;
    mpz_mod(base.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (base == 0) throw DomainError("mult_order: p divides a");
    BigInt order = p - 1;
    BigInt t, r;
    for (const auto& pp : factorize(order).prime_powers) {
        for (unsigned long i = 0; i < pp.exponent; ++i) {
            t = order / pp.prime;
            mpz_powm(r.get_mpz_t(), base.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
            if (r != 1) break;
            order = t;
        }
    }
    return order;
}

bool pairwise_coprime(std::span<const BigInt> xs) {
    BigInt g;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            mpz_gcd(g.get_mpz_t(), xs[i].get_mpz_t(), xs[j].get_mpz_t());
            if (g != 1) return false;
        }
    }
    return true;
}

PrimePlace prime_place(const BigInt& p) {
    if (!is_prime(p)) throw DomainError("prime_place: not a prime");
    return {p, log_abs(p)};
}

double log_abs(const BigInt& n) {
    if (n == 0) throw DomainError("log_abs: argument must be nonzero");
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 53) return std::log(std::fabs(mpz_get_d(n.get_mpz_t())));
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::numbers::ln2;
}

double log_abs(unsigned __int128 n) {
    if (n == 0) throw DomainError("log_abs: argument must be nonzero");
    if (n < (static_cast<u128>(1) << 53)) return std::log(static_cast<double>(n));
    BigInt big;
    const u64 words[2] = {static_cast<u64>(n), static_cast<u64>(n >> 64)};
    mpz_import(big.get_mpz_t(), 2, -1, sizeof(u64), 0, 0, words);
    return log_abs(big);
}

bool radical_divides(const BigInt& x, const BigInt& m) {
    if (x == 0 || m == 0) throw DomainError("radical_divides: arguments must be nonzero");
    BigInt rest = abs(x), g;
    // g only ever holds primes common to x and m; squaring it doubles the
    // exponent stripped per round, so high prime powers cost log(e) gcds.
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), m.get_mpz_t());
    while (g != 1) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), g.get_mpz_t());
        g *= g;
        mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), g.get_mpz_t());
    }
    return rest == 1;
}

bool same_radical(const BigInt& x, const BigInt& y) { return radical_divides(x, y) && radical_divides(y, x); }

}  // namespace abcq
