#include "abcq/contfrac.hpp"

#include <mpfr.h>

#include "abcq/errors.hpp"

namespace abcq {

namespace {

// Minimal RAII holder; the library only needs a handful of mpfr calls.
class Mpfr {
public:
    explicit Mpfr(unsigned bits) { mpfr_init2(v_, bits); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace

std::vector<BigInt> log_ratio_partial_quotients(const BigInt& num_base, const BigInt& den_base,
                                                std::size_t max_terms, unsigned bits) {
    if (num_base < 2 || den_base < 2) throw DomainError("log ratio: bases must be >= 2");
    Mpfr num_lo(bits), num_hi(bits), den_lo(bits), den_hi(bits), lo(bits), hi(bits);
    mpfr_set_z(num_lo.get(), num_base.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(num_hi.get(), num_base.get_mpz_t(), MPFR_RNDU);
    mpfr_set_z(den_lo.get(), den_base.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(den_hi.get(), den_base.get_mpz_t(), MPFR_RNDU);
    mpfr_log(num_lo.get(), num_lo.get(), MPFR_RNDD);
    mpfr_log(num_hi.get(), num_hi.get(), MPFR_RNDU);
    mpfr_log(den_lo.get(), den_lo.get(), MPFR_RNDD);
    mpfr_log(den_hi.get(), den_hi.get(), MPFR_RNDU);
    mpfr_div(lo.get(), num_lo.get(), den_hi.get(), MPFR_RNDD);
    mpfr_div(hi.get(), num_hi.get(), den_lo.get(), MPFR_RNDU);

    std::vector<BigInt> terms;
    BigInt a_lo, a_hi;
    Mpfr tmp(bits);
    while (terms.size() < max_terms) {
        mpfr_get_z(a_lo.get_mpz_t(), lo.get(), MPFR_RNDD);
        mpfr_get_z(a_hi.get_mpz_t(), hi.get(), MPFR_RNDD);
        if (a_lo != a_hi) break;
        terms.push_back(a_lo);
        // x -> 1 / (x - a); the map is decreasing, so the ends swap.
        mpfr_sub_z(lo.get(), lo.get(), a_lo.get_mpz_t(), MPFR_RNDD);
        mpfr_sub_z(hi.get(), hi.get(), a_lo.get_mpz_t(), MPFR_RNDU);
        if (mpfr_sgn(lo.get()) <= 0) break;
        mpfr_ui_div(tmp.get(), 1, lo.get(), MPFR_RNDU);
        mpfr_ui_div(lo.get(), 1, hi.get(), MPFR_RNDD);
        mpfr_set(hi.get(), tmp.get(), MPFR_RNDU);
    }
    return terms;
}

std::vector<Convergent> convergents(std::span<const BigInt> partial_quotients) {
    std::vector<Convergent> out;
    out.reserve(partial_quotients.size());
    BigInt p_prev = 1, q_prev = 0, p = 0, q = 1;
    bool first = true;
    for (const auto& a : partial_quotients) {
        if (first) {
            p = a;
            q = 1;
            p_prev = 1;
            q_prev = 0;
            first = false;
        } else {
            BigInt p_next = a * p + p_prev;
            BigInt q_next = a * q + q_prev;
            p_prev = p;
            q_prev = q;
            p = p_next;
            q = q_next;
        }
        out.push_back({p, q});
    }
    return out;
}

}  // namespace abcq
