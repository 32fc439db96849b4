#include "abcq/counting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "abcq/errors.hpp"

namespace abcq {

HyperplaneContext::HyperplaneContext(std::size_t n_) : n(n_) {
    if (n < 3) throw ValidationError("hyperplane context requires n >= 3");
}

TuplePoint TuplePoint::make(std::vector<BigInt> coords) {
    if (coords.size() < 3) throw ValidationError("tuple point needs at least 3 coordinates");
    BigInt sum = 0, g = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) throw ValidationError("coordinate " + std::to_string(i) + " is zero", i);
        sum += coords[i];
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), coords[i].get_mpz_t());
    }
    if (sum != 0) {
        throw ValidationError("coordinates sum to " + sum.get_str() + ", not zero", coords.size() - 1);
    }
    if (coords.front() < 0) g = -g;
    if (g != 1) {
        for (auto& x : coords) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return TuplePoint(std::move(coords));
}

TuplePoint make_point(std::initializer_list<long> coords) {
    std::vector<BigInt> v;
    v.reserve(coords.size());
    for (long c : coords) v.emplace_back(c);
    return TuplePoint::make(std::move(v));
}

std::strong_ordering operator<=>(const TuplePoint& a, const TuplePoint& b) {
    if (auto c = a.n() <=> b.n(); c != 0) return c;
    for (std::size_t i = 0; i < a.n(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

BigInt TuplePoint::max_abs() const {
    BigInt m = 0;
    for (const auto& x : coords_) {
        if (mpz_cmpabs(x.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(x);
    }
    return m;
}

BigInt TuplePoint::abs_product() const {
    BigInt prod = 1;
    for (const auto& x : coords_) prod *= abs(x);
    return prod;
}

std::string to_string(const TuplePoint& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.n(); ++i) os << (i ? ", " : "") << p[i].get_str();
    os << ")";
    return os.str();
}

BigInt conductor(const TuplePoint& p, const FactorOptions& opts) {
    std::set<BigInt> primes;
    for (const auto& x : p.coords()) {
        for (const auto& pp : factorize(x, opts).prime_powers) primes.insert(pp.prime);
    }
    BigInt r = 1;
    for (const auto& q : primes) r *= q;
    return r;
}

double height(const TuplePoint& p) { return log_abs(p.max_abs()); }

double counting_full(const TuplePoint& p) {
    double total = 0.0;
    for (const auto& x : p.coords()) total += log_abs(x);
    return total;
}

double counting_trunc(const TuplePoint& p) { return log_abs(conductor(p)); }

double proximity(const TuplePoint& p) { return static_cast<double>(p.n()) * height(p) - counting_full(p); }

double discriminant_term(const TuplePoint&) { return 0.0; }

double quality_from_logs(double log_max, double log_rad) {
    if (log_rad == 0.0) return std::numeric_limits<double>::infinity();
    return log_max / log_rad;
}

double certified_quality(const BigInt& max_abs, const BigInt& rad) {
    if (rad == 1) return std::numeric_limits<double>::infinity();
    const double q = quality_from_logs(log_abs(max_abs), log_abs(rad));
    const double j = std::round(q);
    if (j >= 1.0 && std::fabs(q - j) < 1e-9) {
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), rad.get_mpz_t(), static_cast<unsigned long>(j));
        if (power == max_abs) return j;
    }
    return q;
}

double quality(const TuplePoint& p) { return certified_quality(p.max_abs(), conductor(p)); }

double excess_from_logs(double h, double trunc, const Rational& eps, ExcessForm form) {
    if (eps < 0) throw DomainError("excess: epsilon must be nonnegative");
    const double e = eps.get_d();
    if (form == ExcessForm::vojta) return (1.0 - e) * h - trunc;
    return h - (1.0 + e) * trunc;
}

double excess(const TuplePoint& p, const Rational& eps, ExcessForm form) {
    if (eps < 0) throw DomainError("excess: epsilon must be nonnegative");
    return excess_from_logs(height(p), counting_trunc(p), eps, form);
}

FFTriple FFTriple::make(UniPoly a, UniPoly b, UniPoly c) {
    if (a.is_zero() || b.is_zero() || c.is_zero()) throw ValidationError("function-field triple has a zero entry");
    if (!(a + b + c).is_zero()) throw ValidationError("function-field triple does not sum to zero");
    if (a.is_constant() && b.is_constant() && c.is_constant()) {
        throw ValidationError("function-field triple is constant");
    }
    // a + b + c = 0 makes gcd(a, b) = gcd(b, c) = gcd(a, c).
    if (poly_gcd(a, b).degree() != 0) throw ValidationError("function-field triple is not coprime");
    return FFTriple(std::move(a), std::move(b), std::move(c));
}

FFTriple FFTriple::from_pair(UniPoly a, UniPoly b) {
    UniPoly c = -(a + b);
    return make(std::move(a), std::move(b), std::move(c));
}

int ff_height(const FFTriple& t) { return std::max({t.a().degree(), t.b().degree(), t.c().degree()}); }

int ff_counting_trunc(const FFTriple& t) {
    return poly_radical(t.a()).degree() + poly_radical(t.b()).degree() + poly_radical(t.c()).degree();
}

bool ff_abc_check(const FFTriple& t) { return ff_height(t) <= ff_counting_trunc(t) - 1; }

}  // namespace abcq
