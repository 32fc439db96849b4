#include "abcq/degeneracy.hpp"

#include <sstream>

namespace abcq {

namespace {

void fill_monomials(std::size_t var, std::size_t vars, unsigned remaining, Monomial& cur, std::vector<Monomial>& out) {
    if (var + 1 == vars) {
        cur[var] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[var] = e;
        fill_monomials(var + 1, vars, remaining - e, cur, out);
    }
}

BigInt monomial_value(const Monomial& m, const std::vector<BigInt>& point) {
    BigInt v = 1, pw;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), m[i]);
        v *= pw;
    }
    return v;
}

// In-place fraction-free (Bareiss) elimination to row echelon form.
// Returns the pivot column of each nonzero row.
std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<BigInt>>& a) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    BigInt prev = 1, t;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

std::vector<BigInt> primitive(const std::vector<Rational>& v) {
    BigInt den = 1;
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> out;
    BigInt g = 0;
    for (const auto& x : v) {
        out.push_back(x.get_num() * (den / x.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g == 0) return out;
    BigInt sign_fix = 1;
    for (const auto& x : out) {
        if (x != 0) {
            sign_fix = x < 0 ? -1 : 1;
            break;
        }
    }
    for (auto& x : out) x = x / g * sign_fix;
    return out;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t vars, unsigned degree) {
    std::vector<Monomial> out;
    if (vars == 0) return out;
    Monomial cur(vars, 0);
    fill_monomials(0, vars, degree, cur, out);
    return out;
}

BigInt evaluate_form(const std::vector<BigInt>& coeffs, const std::vector<Monomial>& basis,
                     const std::vector<BigInt>& point) {
    BigInt total = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coeffs[k] != 0) total += coeffs[k] * monomial_value(basis[k], point);
    }
    return total;
}

DegeneracyReport find_degeneracy(const std::vector<std::vector<BigInt>>& points, unsigned degree) {
    if (degree < 1) throw DomainError("find_degeneracy: degree must be >= 1");
    if (points.empty()) throw ValidationError("find_degeneracy: no points");
    const std::size_t n = points.front().size();
    if (n < 3) throw ValidationError("find_degeneracy: points need at least 3 coordinates");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != n) throw ValidationError("find_degeneracy: points differ in dimension", i);
    }
    DegeneracyReport rep;
    rep.degree = degree;
    rep.n = n;
    rep.n_points = points.size();
    rep.monomial_basis = monomial_basis(n - 1, degree);
    const std::size_t cols = rep.monomial_basis.size();
    rep.underdetermined = points.size() < cols;

    std::vector<std::vector<BigInt>> m;
    m.reserve(points.size());
    for (const auto& p : points) {
        std::vector<BigInt> row;
        row.reserve(cols);
        for (const auto& mono : rep.monomial_basis) row.push_back(monomial_value(mono, p));
        m.push_back(std::move(row));
    }
    const auto pivots = bareiss_echelon(m);
    rep.rank = pivots.size();

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t i = pivots.size(); i-- > 0;) {
            const std::size_t pc = pivots[i];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (v[j] != 0 && m[i][j] != 0) acc += Rational(m[i][j]) * v[j];
            }
            v[pc] = -acc / Rational(m[i][pc]);
            v[pc].canonicalize();
        }
        rep.kernel_basis.push_back(primitive(v));
    }
    return rep;
}

DegeneracyReport find_degeneracy(const std::vector<TupleRecord>& records, unsigned degree) {
    std::vector<std::vector<BigInt>> pts;
    pts.reserve(records.size());
    for (const auto& r : records) pts.push_back(r.point.coords());
    return find_degeneracy(pts, degree);
}

bool kernel_vanishes(const DegeneracyReport& report, const std::vector<std::vector<BigInt>>& points) {
    for (const auto& v : report.kernel_basis) {
        for (const auto& p : points) {
            if (evaluate_form(v, report.monomial_basis, p) != 0) return false;
        }
    }
    return true;
}

std::string form_to_string(const std::vector<BigInt>& coeffs, const std::vector<Monomial>& basis) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        BigInt c = coeffs[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        bool constant = true;
        for (unsigned e : basis[k]) constant = constant && e == 0;
        bool need_star = false;
        if (c != 1 || constant) {
            os << c.get_str();
            need_star = true;
        }
        for (std::size_t i = 0; i < basis[k].size(); ++i) {
            if (basis[k][i] == 0) continue;
            os << (need_star ? "*" : "") << "x" << i;
            if (basis[k][i] > 1) os << "^" << basis[k][i];
            need_star = true;
        }
    }
    return first ? "0" : os.str();
}

nlohmann::ordered_json DegeneracyReport::to_json() const {
    nlohmann::ordered_json j;
    j["degree"] = degree;
    j["n"] = n;
    j["n_points"] = n_points;
    j["rank"] = rank;
    j["underdetermined"] = underdetermined;
    nlohmann::ordered_json basis = nlohmann::ordered_json::array();
    for (const auto& m : monomial_basis) basis.push_back(m);
    j["monomial_basis"] = std::move(basis);
    nlohmann::ordered_json kernel = nlohmann::ordered_json::array();
    for (const auto& v : kernel_basis) {
        nlohmann::ordered_json entry;
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const auto& c : v) coeffs.push_back(c.get_str());
        entry["coefficients"] = std::move(coeffs);
        entry["form"] = form_to_string(v, monomial_basis);
        kernel.push_back(std::move(entry));
    }
    j["kernel_basis"] = std::move(kernel);
    return j;
}

}  // namespace abcq
