#include "abcq/poly.hpp"

#include <sstream>
#include <utility>

#include "abcq/errors.hpp"

namespace abcq {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    const Rational lc = leading();
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) c /= lc;
    return UniPoly(std::move(v));
}

Rational UniPoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a) {
    std::vector<Rational> v(a.coeffs_);
    for (auto& c : v) c = -c;
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a) { return UniPoly::constant(c) * a; }

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = c == 1;
        if (!unit || i == 0) os << c.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyDivision divmod(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw DomainError("divmod: division by the zero polynomial");
    if (f.degree() < g.degree()) return {UniPoly{}, f};
    std::vector<Rational> rem(f.coeffs());
    std::vector<Rational> quot(static_cast<std::size_t>(f.degree() - g.degree()) + 1, Rational(0));
    const auto& gc = g.coeffs();
    const Rational lc = g.leading();
    const std::size_t gd = gc.size() - 1;
    for (std::size_t top = rem.size(); top-- > gd;) {
        if (rem[top] == 0) continue;
        const Rational factor = rem[top] / lc;
        quot[top - gd] = factor;
        for (std::size_t j = 0; j <= gd; ++j) rem[top - gd + j] -= factor * gc[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly power(const UniPoly& f, unsigned e) {
    UniPoly result = UniPoly::constant(1);
    UniPoly base = f;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) throw DomainError("poly_gcd: both arguments are zero");
    UniPoly a = f.monic();
    UniPoly b = g.monic();
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

UniPoly poly_radical(const UniPoly& f) {
    if (f.is_zero()) throw DomainError("poly_radical: zero polynomial");
    if (f.is_constant()) return UniPoly::constant(1);
    return divmod(f, poly_gcd(f, f.derivative())).quotient.monic();
}

}  // namespace abcq
