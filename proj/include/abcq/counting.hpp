#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "abcq/arith.hpp"
#include "abcq/poly.hpp"

namespace abcq {

// The hyperplane X: x_0 + ... + x_{n-1} = 0 in P^{n-1}, with D the
// restriction of the coordinate hyperplanes.
struct HyperplaneContext {
    explicit HyperplaneContext(std::size_t n);
    std::size_t n;
};

// A rational point of X in reduced integer coordinates: all nonzero, sum
// zero, overall gcd 1, first coordinate positive.
class TuplePoint {
public:
    // Divides out the overall gcd and fixes the sign.  Throws
    // ValidationError (with the entry index when one entry is at fault).
    static TuplePoint make(std::vector<BigInt> coords);

    std::size_t n() const { return coords_.size(); }
    const std::vector<BigInt>& coords() const { return coords_; }
    const BigInt& operator[](std::size_t i) const { return coords_[i]; }
    HyperplaneContext context() const { return HyperplaneContext(n()); }
    BigInt max_abs() const;
    // Product of |x_i|.
    BigInt abs_product() const;

    friend bool operator==(const TuplePoint& a, const TuplePoint& b) { return a.coords_ == b.coords_; }
    // Length first, then lexicographic on coordinates.
    friend std::strong_ordering operator<=>(const TuplePoint& a, const TuplePoint& b);

private:
    explicit TuplePoint(std::vector<BigInt> coords) : coords_(std::move(coords)) {}
    std::vector<BigInt> coords_;
};

inline TuplePoint make_point(std::vector<BigInt> coords) { return TuplePoint::make(std::move(coords)); }
TuplePoint make_point(std::initializer_list<long> coords);

// "(1, 8, -9)"
std::string to_string(const TuplePoint& p);

// rad(prod |x_i|).  Requires factoring every coordinate.
BigInt conductor(const TuplePoint& p, const FactorOptions& opts = {});

// h(P) = log max |x_i|.
double height(const TuplePoint& p);
// N(D, P) = sum of log |x_i|.
double counting_full(const TuplePoint& p);
// N^(1)(D, P) = log rad(prod |x_i|).
double counting_trunc(const TuplePoint& p);
// m(D, P) = n h(P) - N(D, P); nonnegative.
double proximity(const TuplePoint& p);
// Always 0: rational points have trivial discriminant.
double discriminant_term(const TuplePoint& p);

// h / N^(1); +infinity when every coordinate is a unit.
double quality(const TuplePoint& p);
// log max / log rad.  A squarefree rad > 1 can only have an exact rational
// log ratio with max when max = rad^j; that case returns the integer j
// exactly, so equal qualities always compare equal.
double certified_quality(const BigInt& max_abs, const BigInt& rad);
// Same ratio from precomputed logs; shared by every code path that reports
// a quality so values agree bit for bit.
double quality_from_logs(double log_max, double log_rad);

enum class ExcessForm { masser, vojta };

// vojta: (1 - eps) h - N^(1);  masser: h - (1 + eps) N^(1).
double excess(const TuplePoint& p, const Rational& eps, ExcessForm form);
double excess_from_logs(double h, double trunc, const Rational& eps, ExcessForm form);

// a + b + c = 0 over Q(t): pairwise coprime, nonzero, not all constant.
class FFTriple {
public:
    static FFTriple make(UniPoly a, UniPoly b, UniPoly c);
    // c := -(a + b)
    static FFTriple from_pair(UniPoly a, UniPoly b);

    const UniPoly& a() const { return a_; }
    const UniPoly& b() const { return b_; }
    const UniPoly& c() const { return c_; }

private:
    FFTriple(UniPoly a, UniPoly b, UniPoly c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
    UniPoly a_, b_, c_;
};

// max degree
int ff_height(const FFTriple& t);
// deg rad(abc); computed as the sum of deg rad over the three coprime factors.
int ff_counting_trunc(const FFTriple& t);
// ff_height <= ff_counting_trunc - 1 (Mason-Stothers).
bool ff_abc_check(const FFTriple& t);

}  // namespace abcq
