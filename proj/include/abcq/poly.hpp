#pragma once

#include <string>
#include <vector>

#include "abcq/arith.hpp"

namespace abcq {

// Univariate polynomial in t over Q.  coeffs[i] is the coefficient of t^i;
// trailing zeros are always trimmed, so the zero polynomial has no
// coefficients and degree() == -1 stands in for -infinity.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);
    // t - r
    static UniPoly linear_root(const Rational& r);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    Rational leading() const;

    UniPoly derivative() const;
    UniPoly monic() const;
    Rational evaluate(const Rational& t) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    UniPoly quotient;
    UniPoly remainder;
};

PolyDivision divmod(const UniPoly& f, const UniPoly& g);

UniPoly power(const UniPoly& f, unsigned e);

// Monic gcd over Q.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

// Monic squarefree part f / gcd(f, f').  Its degree counts the distinct
// roots of f over an algebraic closure.
UniPoly poly_radical(const UniPoly& f);

}  // namespace abcq
