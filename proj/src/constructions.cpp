#include "abcq/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include <mpfr.h>

#include "abcq/contfrac.hpp"

namespace abcq {

namespace {

BigInt pow_ui(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

std::size_t decimal_digits(const BigInt& x) { return mpz_sizeinbase(x.get_mpz_t(), 10); }

// Decimal digits of base^e, rounded up.
double estimated_digits(const BigInt& base, double e) { return e * log_abs(base) / std::log(10.0) + 1.0; }

BigInt floor_q(const Rational& x) {
    BigInt out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

BigInt ceil_q(const Rational& x) {
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

void require_eps(const Rational& eps) {
    if (eps <= 0 || eps > 1) throw DomainError("epsilon must lie in (0, 1]");
}

// Exact: 0 < a - b < eps * a
bool gap_certified(const BigInt& a, const BigInt& b, const Rational& eps) {
    if (b >= a) return false;
    return BigInt(a - b) * eps.get_den() < eps.get_num() * a;
}

// Upper bound on -log(1 - eps) / log(q2); nullopt means unbounded (eps = 1).
std::optional<Rational> window_width(const BigInt& q2, const Rational& eps) {
    if (eps == 1) return std::nullopt;
    constexpr unsigned kBits = 256;
    mpfr_t num, den;
    mpfr_init2(num, kBits);
    mpfr_init2(den, kBits);
    const Rational one_minus = 1 - eps;
    mpfr_set_q(num, one_minus.get_mpq_t(), MPFR_RNDD);
    mpfr_log(num, num, MPFR_RNDD);
    mpfr_neg(num, num, MPFR_RNDU);
    mpfr_set_z(den, q2.get_mpz_t(), MPFR_RNDD);
    mpfr_log(den, den, MPFR_RNDD);
    mpfr_div(num, num, den, MPFR_RNDU);
    Rational w;
    mpfr_get_q(w.get_mpq_t(), num);
    mpfr_clear(num);
    mpfr_clear(den);
    return w;
}

// Walks e1 = 1, 2, ... and yields every certified (e1, e2) in order.
class LogRatioScanner {
public:
    LogRatioScanner(BigInt q1, BigInt q2, Rational eps, Parity parity, const ConstructionOptions& opts)
        : q1_(std::move(q1)), q2_(std::move(q2)), eps_(std::move(eps)), parity_(parity), opts_(opts) {
        if (q1_ < 2 || q2_ < 2) throw DomainError("log_ratio_solutions: bases must be >= 2");
        require_eps(eps_);
        const auto terms = log_ratio_partial_quotients(q1_, q2_, 400, 1024);
        const auto conv = convergents(terms);
        if (conv.empty() || mpz_sizeinbase(conv.back().q.get_mpz_t(), 2) < 128) {
            throw DomainError("log_ratio_solutions: log q1 / log q2 is rational or not resolvable");
        }
        beta_ = Rational(conv.back().p, conv.back().q);
        beta_.canonicalize();
        // |beta - p/q| < 1/q^2
        inv_q2_ = Rational(1, conv.back().q * conv.back().q);
        inv_q2_.canonicalize();
        width_ = window_width(q2_, eps_);
        power_ = 1;
    }

    std::optional<std::pair<LogRatioSolution, std::pair<BigInt, BigInt>>> next() {
        for (;;) {
            if (!pending_.empty()) {
                auto out = std::move(pending_.front());
                pending_.erase(pending_.begin());
                return out;
            }
            advance();
        }
    }

private:
    void advance() {
        ++e1_;
        power_ *= q1_;
        if (decimal_digits(power_) > opts_.digit_budget) {
            throw ResourceError("log_ratio_solutions: q1^e1 exceeded the digit budget of " +
                                std::to_string(opts_.digit_budget) + " at e1 = " + std::to_string(e1_));
        }
        if (parity_ == Parity::e1_odd && e1_ % 2 == 0) return;
        const Rational t = beta_ * e1_;
        const Rational slack = inv_q2_ * e1_ + Rational(1, BigInt(1) << 64);
        const BigInt hi = floor_q(t + slack);
        BigInt lo = width_ ? ceil_q(t - slack - *width_) : BigInt(1);
        if (lo < 1) lo = 1;
        for (BigInt e2 = lo; e2 <= hi; ++e2) {
            const unsigned long e2u = e2.get_ui();
            BigInt other = pow_ui(q2_, e2u);
            if (!gap_certified(power_, other, eps_)) continue;
            Rational rel(power_ - other, power_);
            rel.canonicalize();
            pending_.push_back({LogRatioSolution{e1_, e2u, rel}, {power_, std::move(other)}});
        }
    }

    BigInt q1_, q2_;
    Rational eps_;
    Parity parity_;
    ConstructionOptions opts_;
    Rational beta_, inv_q2_;
    std::optional<Rational> width_;
    unsigned long e1_ = 0;
    BigInt power_;
    std::vector<std::pair<LogRatioSolution, std::pair<BigInt, BigInt>>> pending_;
};

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform on [0, bound] by rejection.
unsigned long uniform_upto(std::uint64_t& state, unsigned long bound) {
    const std::uint64_t range = static_cast<std::uint64_t>(bound) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    for (;;) {
        const std::uint64_t v = splitmix64(state);
        if (v < limit) return static_cast<unsigned long>(v % range);
    }
}

TuplePoint point_from(std::vector<BigInt> coords, const char* what) {
    try {
        return TuplePoint::make(std::move(coords));
    } catch (const ValidationError& e) {
        throw PostconditionError(std::string(what) + ": " + e.what());
    }
}

void enforce(const std::vector<std::string>& failures, const char* what) {
    if (failures.empty()) return;
    std::string msg = std::string(what) + " postcondition failed:";
    for (const auto& f : failures) msg += " " + f + ";";
    throw PostconditionError(msg);
}

BigInt raw_gcd(std::span<const BigInt> xs) {
    BigInt g = 0;
    for (const auto& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

}  // namespace

std::string to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::doubling: return "double";
        case ConstructionKind::family2k: return "family2k";
        case ConstructionKind::p26_n4: return "p26-n4";
        case ConstructionKind::p26_general: return "p26-general";
    }
    return "?";
}

std::vector<BigInt> ConstructionPlan::q() const {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < primes.size() && i < orders.size(); ++i) out.push_back(pow_ui(primes[i], orders[i]));
    return out;
}

std::vector<std::string> verify_doubling(const TuplePoint& parent, const TuplePoint& doubled) {
    std::vector<std::string> failures;
    if (parent.n() != 3 || doubled.n() != 4) return {"dimension"};
    const BigInt &a = parent[0], &b = parent[1], &c = parent[2];
    const std::vector<BigInt> raw{a * a, 2 * a * b, b * b, -(c * c)};
    if (raw[0] + raw[1] + raw[2] + raw[3] != 0) failures.push_back("sum");
    if (raw_gcd(raw) != 1) failures.push_back("gcd");
    if (doubled.coords() != raw) failures.push_back("coordinates");
    if (!same_radical(doubled.abs_product(), parent.abs_product())) failures.push_back("radical");
    // |h' - 2h| <= log 2  <=>  max^2 <= 2 max'  and  max' <= 2 max^2
    const BigInt m = parent.max_abs(), m2 = doubled.max_abs();
    if (m * m > 2 * m2 || m2 > 2 * m * m) failures.push_back("height");
    if (doubled[1] * doubled[1] != 4 * doubled[0] * doubled[2]) failures.push_back("quadric");
    return failures;
}

TuplePoint double_triple(const TuplePoint& t) {
    if (t.n() != 3) throw DomainError("double_triple: expects a triple");
    const BigInt &a = t[0], &b = t[1], &c = t[2];
    TuplePoint out = point_from({a * a, 2 * a * b, b * b, -(c * c)}, "double_triple");
    enforce(verify_doubling(t, out), "double_triple");
    return out;
}

std::vector<std::string> verify_family_2k(unsigned long k, const TuplePoint& t) {
    std::vector<std::string> failures;
    const BigInt top = pow_ui(BigInt(3), 1UL << k);
    if (t.n() != 3 || t[0] != 1 || t[1] != top - 1 || t[2] != -top) return {"coordinates"};
    const BigInt m = top - 1;
    if (valuation(m, 2) != k + 2) failures.push_back("2-adic valuation");
    // rad(abc) = 3 rad(m) and rad(m) | 2 m / 2^{k+2}
    const BigInt bound = 6 * (m >> (k + 2));
    if (!radical_divides(t.abs_product(), bound)) failures.push_back("radical bound");
    if (k >= 2 && bound >= top) failures.push_back("radical below max");
    return failures;
}

bool family_2k_ratio_decreases(unsigned long k) {
    if (k < 1 || k >= 62) throw DomainError("family_2k_ratio_decreases: k out of range");
    const BigInt top = pow_ui(BigInt(3), 1UL << k);
    const BigInt m = top - 1, next = top * top - 1;
    const BigInt f = (top + 1) / 2;
    // next = m * 2f with 2 | m and gcd(f, m) = 1, so rad(next) = rad(m) rad(f)
    // while max grows by the factor top > f >= rad(f).
    BigInt g;
    mpz_gcd(g.get_mpz_t(), f.get_mpz_t(), m.get_mpz_t());
    return next == m * 2 * f && mpz_even_p(m.get_mpz_t()) && g == 1 && f < top;
}

TuplePoint family_2k(unsigned long k, const ConstructionOptions& opts) {
    if (k < 1) throw DomainError("family_2k: k must be >= 1");
    if (k >= 63 || estimated_digits(BigInt(3), std::ldexp(1.0, static_cast<int>(k))) > opts.digit_budget) {
        ConstructionPlan plan;
        plan.kind = ConstructionKind::family2k;
        plan.n = 3;
        plan.k = k;
        throw DigitBudgetExceeded("family_2k: 3^(2^" + std::to_string(k) + ") exceeds the digit budget", plan);
    }
    const BigInt top = pow_ui(BigInt(3), 1UL << k);
    TuplePoint out = point_from({BigInt(1), top - 1, -top}, "family_2k");
    enforce(verify_family_2k(k, out), "family_2k");
    return out;
}

std::vector<LogRatioSolution> log_ratio_solutions(const BigInt& q1, const BigInt& q2, const Rational& eps,
                                                  Parity parity, std::size_t count,
                                                  const ConstructionOptions& opts) {
    std::vector<LogRatioSolution> out;
    if (count == 0) return out;
    LogRatioScanner scan(q1, q2, eps, parity, opts);
    while (out.size() < count) out.push_back(scan.next()->first);
    return out;
}

std::vector<std::string> verify_n4(const Constructed& c) {
    std::vector<std::string> failures;
    const auto& p = c.plan;
    const auto& x = c.point;
    if (x.n() != 4) return {"dimension"};
    if (p.e1 % 2 != 1) failures.push_back("e1 odd");
    const BigInt a = pow_ui(BigInt(9), p.e1), b = pow_ui(BigInt(25), p.e2);
    if (x[1] != -a || x[2] != b || x[3] != 1) failures.push_back("coordinates");
    if (x[0] < 1 || x[0] != a - b - 1) failures.push_back("x0");
    if (!pairwise_coprime(x.coords())) failures.push_back("pairwise coprime");
    if (!gap_certified(a, b, p.eps)) failures.push_back("gap");
    // rad(prod) = 15 rad(x0) <= 15 x0
    BigInt g;
    mpz_gcd_ui(g.get_mpz_t(), x[0].get_mpz_t(), 15);
    if (g != 1 || !same_radical(x.abs_product(), 15 * x[0])) failures.push_back("radical");
    return failures;
}

std::vector<Constructed> construct_n4(const Rational& eps, std::size_t count, const ConstructionOptions& opts) {
    require_eps(eps);
    std::vector<Constructed> out;
    if (count == 0) return out;
    LogRatioScanner scan(BigInt(9), BigInt(25), eps, Parity::e1_odd, opts);
    while (out.size() < count) {
        auto [sol, powers] = *scan.next();
        const auto& [a, b] = powers;
        const BigInt x0 = a - b - 1;
        if (x0 == 0) continue;
        ConstructionPlan plan;
        plan.kind = ConstructionKind::p26_n4;
        plan.n = 4;
        plan.eps = eps;
        plan.e1 = sol.e1;
        plan.e2 = sol.e2;
        plan.primes = {BigInt(3), BigInt(5)};
        plan.orders = {2, 2};
        Constructed c{point_from({x0, -a, b, BigInt(1)}, "construct_n4"), std::move(plan)};
        enforce(verify_n4(c), "construct_n4");
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<unsigned long> order_exponents(std::span<const BigInt> primes) {
    std::set<BigInt> seen;
    for (const auto& p : primes) {
        if (!is_prime(p)) throw DomainError("order_exponents: " + p.get_str() + " is not prime");
        if (!seen.insert(p).second) throw DomainError("order_exponents: repeated prime " + p.get_str());
    }
    std::vector<unsigned long> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        unsigned long r = 1;
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (i == j) continue;
            const BigInt ord = mult_order(primes[i], primes[j]);
            r = std::lcm(r, ord.get_ui());
        }
        out.push_back(r);
    }
    return out;
}

std::vector<BigInt> default_primes(std::size_t n) {
    std::vector<BigInt> out;
    BigInt p = static_cast<unsigned long>(n);
    while (out.size() + 1 < n) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        out.push_back(p);
    }
    return out;
}

std::vector<std::string> verify_general(const Constructed& c) {
    std::vector<std::string> failures;
    const auto& p = c.plan;
    const auto& x = c.point;
    const std::size_t n = p.n;
    if (n < 5 || x.n() != n || p.primes.size() != n - 1 || p.orders.size() != n - 1 ||
        p.extra_exponents.size() != n - 3) {
        return {"plan shape"};
    }
    std::set<BigInt> distinct(p.primes.begin(), p.primes.end());
    if (distinct.size() != p.primes.size()) failures.push_back("distinct primes");
    BigInt prime_product = 1;
    for (const auto& pr : p.primes) {
        if (!is_prime(pr) || pr <= static_cast<unsigned long>(n)) failures.push_back("prime > n");
        prime_product *= pr;
    }
    BigInt r;
    for (std::size_t i = 0; i < n - 1; ++i) {
        for (std::size_t j = 0; j < n - 1; ++j) {
            if (i == j) continue;
            const BigInt e = p.orders[i];
            mpz_powm(r.get_mpz_t(), p.primes[i].get_mpz_t(), e.get_mpz_t(), p.primes[j].get_mpz_t());
            if (r != 1) failures.push_back("order condition");
        }
    }
    const auto q = p.q();
    const BigInt a = pow_ui(q[0], p.e1), b = pow_ui(q[1], p.e2);
    if (!gap_certified(a, b, p.eps)) failures.push_back("gap");
    if (x[1] != -a || x[2] != b) failures.push_back("coordinates");
    BigInt tail = 0;
    for (std::size_t i = 2; i < n - 1; ++i) {
        const BigInt term = pow_ui(q[i], p.extra_exponents[i - 2]);
        if (x[i + 1] != term) failures.push_back("coordinates");
        tail += term;
    }
    if (tail >= a - b) failures.push_back("tail below gap");
    if (x[0] < 1 || x[0] != a - b - tail) failures.push_back("x0");
    if (!pairwise_coprime(x.coords())) failures.push_back("pairwise coprime");
    if (!radical_divides(x.abs_product(), prime_product * x[0])) failures.push_back("radical");
    if (x[0] * p.eps.get_den() >= p.eps.get_num() * x.max_abs()) failures.push_back("x0 < eps max");
    return failures;
}

std::vector<Constructed> construct_general(std::size_t n, const Rational& eps,
                                           const std::optional<std::vector<BigInt>>& primes_in, std::size_t count,
                                           std::uint64_t seed, const ConstructionOptions& opts) {
    if (n < 5) throw DomainError("construct_general: n must be >= 5");
    require_eps(eps);
    const std::vector<BigInt> primes = primes_in ? *primes_in : default_primes(n);
    if (primes.size() != n - 1) throw DomainError("construct_general: need exactly n - 1 primes");
    for (const auto& p : primes) {
        if (p <= static_cast<unsigned long>(n)) throw DomainError("construct_general: primes must exceed n");
    }
    ConstructionPlan base;
    base.kind = ConstructionKind::p26_general;
    base.n = n;
    base.eps = eps;
    base.primes = primes;
    base.orders = order_exponents(primes);
    base.seed = seed;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (estimated_digits(primes[i], static_cast<double>(base.orders[i])) > opts.digit_budget) {
            throw DigitBudgetExceeded("construct_general: q_" + std::to_string(i + 1) + " exceeds the digit budget",
                                      base);
        }
    }
    const auto q = base.q();

    constexpr int kMaxResamples = 16;
    std::vector<Constructed> out;
    if (count == 0) return out;
    LogRatioScanner scan(q[0], q[1], eps, Parity::none, opts);
    while (out.size() < count) {
        auto [sol, powers] = *scan.next();
        const auto& [a, b] = powers;
        const BigInt gap = a - b;
        for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
            std::uint64_t state = seed;
            state ^= splitmix64(state) + sol.e1;
            state ^= splitmix64(state) + sol.e2;
            state ^= splitmix64(state) + static_cast<std::uint64_t>(attempt);
            // Leave room for x0 >= 1 and a 1 for every later term.
            BigInt budget = gap - 1;
            std::vector<unsigned long> extra;
            std::vector<BigInt> coords{BigInt(0), -a, b};
            bool feasible = true;
            for (std::size_t i = 2; i < n - 1; ++i) {
                const BigInt room = budget - static_cast<unsigned long>(n - 2 - i);
                if (room < 1) {
                    feasible = false;
                    break;
                }
                unsigned long max_e = 0;
                BigInt pw = 1;
                while (pw * q[i] <= room) {
                    pw *= q[i];
                    ++max_e;
                }
                const unsigned long e = uniform_upto(state, max_e);
                BigInt term = pow_ui(q[i], e);
                budget -= term;
                extra.push_back(e);
                coords.push_back(std::move(term));
            }
            if (!feasible) break;
            BigInt tail = 0;
            for (std::size_t i = 3; i < coords.size(); ++i) tail += coords[i];
            coords[0] = gap - tail;
            if (!pairwise_coprime(coords)) continue;
            ConstructionPlan plan = base;
            plan.e1 = sol.e1;
            plan.e2 = sol.e2;
            plan.extra_exponents = std::move(extra);
            Constructed c{point_from(std::move(coords), "construct_general"), std::move(plan)};
            enforce(verify_general(c), "construct_general");
            out.push_back(std::move(c));
            break;
        }
    }
    return out;
}

}  // namespace abcq
