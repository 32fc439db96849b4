#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abcq/counting.hpp"
#include "abcq/errors.hpp"

namespace abcq {

enum class ConstructionKind { doubling, family2k, p26_n4, p26_general };

std::string to_string(ConstructionKind kind);

// Parameters of one generated point.  q_i = p_i^{r_i} is derived.
struct ConstructionPlan {
    ConstructionKind kind = ConstructionKind::doubling;
    std::size_t n = 0;
    Rational eps = 0;
    unsigned long e1 = 0;
    unsigned long e2 = 0;
    unsigned long k = 0;
    std::vector<BigInt> primes;
    std::vector<unsigned long> orders;
    // e_3 .. e_{n-1}
    std::vector<unsigned long> extra_exponents;
    std::uint64_t seed = 0;

    std::vector<BigInt> q() const;
};

struct Constructed {
    TuplePoint point;
    ConstructionPlan plan;
};

struct ConstructionOptions {
    // Largest decimal size of any integer a generator will materialize.
    std::size_t digit_budget = 100'000;
};

// Raised instead of building an oversized point; carries what would have
// been built.
class DigitBudgetExceeded : public ResourceError {
public:
    DigitBudgetExceeded(const std::string& what, ConstructionPlan plan)
        : ResourceError(what), plan_(std::move(plan)) {}
    const ConstructionPlan& plan() const { return plan_; }

private:
    ConstructionPlan plan_;
};

// (a, b, c) -> (a^2, 2ab, b^2, -c^2).  Same radical, twice the height,
// and every image lies on the quadric x_1^2 = 4 x_0 x_2.
TuplePoint double_triple(const TuplePoint& t);

// (1, 3^{2^k} - 1, -3^{2^k}) for k >= 1.
TuplePoint family_2k(unsigned long k, const ConstructionOptions& opts = {});

// Exact certificate that rad/max of family_2k(k + 1) is strictly below that
// of family_2k(k), without factoring either point.
bool family_2k_ratio_decreases(unsigned long k);

enum class Parity { none, e1_odd };

struct LogRatioSolution {
    unsigned long e1 = 0;
    unsigned long e2 = 0;
    // (q1^e1 - q2^e2) / q1^e1
    Rational relative_gap;
};

// Pairs with 0 < q1^e1 - q2^e2 < eps q1^e1, ordered by (e1, e2).  Candidates
// come from a deep convergent of log q1 / log q2; each one is then certified
// with exact integer powers.  eps in (0, 1].
std::vector<LogRatioSolution> log_ratio_solutions(const BigInt& q1, const BigInt& q2, const Rational& eps,
                                                  Parity parity, std::size_t count,
                                                  const ConstructionOptions& opts = {});

// (x0, -9^e1, 25^e2, 1) with e1 odd and 9^e1 - 25^e2 < eps 9^e1.
std::vector<Constructed> construct_n4(const Rational& eps, std::size_t count, const ConstructionOptions& opts = {});

// r_i = lcm_{j != i} ord_{p_j}(p_i): the least exponents with
// p_i^{r_i} == 1 mod p_j for every j != i.
std::vector<unsigned long> order_exponents(std::span<const BigInt> primes);

// First n - 1 primes greater than n.
std::vector<BigInt> default_primes(std::size_t n);

// (x0, -q1^e1, q2^e2, q3^e3, ..., q_{n-1}^e_{n-1}) for n >= 5.  The free
// exponents e3.. are drawn from `seed`.
std::vector<Constructed> construct_general(std::size_t n, const Rational& eps,
                                           const std::optional<std::vector<BigInt>>& primes, std::size_t count,
                                           std::uint64_t seed, const ConstructionOptions& opts = {});

// Exact postcondition checks.  Each returns the list of failed conditions;
// empty means the output is certified.
std::vector<std::string> verify_doubling(const TuplePoint& parent, const TuplePoint& doubled);
std::vector<std::string> verify_family_2k(unsigned long k, const TuplePoint& t);
std::vector<std::string> verify_n4(const Constructed& c);
std::vector<std::string> verify_general(const Constructed& c);

}  // namespace abcq
