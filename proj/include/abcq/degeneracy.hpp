#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "abcq/records.hpp"

namespace abcq {

using Monomial = std::vector<unsigned>;  // exponent of x_0 .. x_{m-1}

// Degree-d monomials in `vars` variables, exponent vectors in descending
// lexicographic order (x0^2, x0 x1, x0 x2, x1^2, ...).
std::vector<Monomial> monomial_basis(std::size_t vars, unsigned degree);

// Forms of degree d in x_0 .. x_{n-2} vanishing on every input point, after
// eliminating x_{n-1} through the hyperplane equation.  Kernel vectors are
// primitive integer vectors with first nonzero entry positive, in reduced
// echelon order.  The tested degree is part of the report: an empty kernel
// says nothing about other degrees.
struct DegeneracyReport {
    unsigned degree = 0;
    std::size_t n = 0;
    std::size_t n_points = 0;
    std::vector<Monomial> monomial_basis;
    std::size_t rank = 0;
    std::vector<std::vector<BigInt>> kernel_basis;
    bool underdetermined = false;

    nlohmann::ordered_json to_json() const;
};

// `points` are raw homogeneous coordinates (any common scale, including
// non-reduced ones); all must have the same length n >= 3.
DegeneracyReport find_degeneracy(const std::vector<std::vector<BigInt>>& points, unsigned degree);
DegeneracyReport find_degeneracy(const std::vector<TupleRecord>& records, unsigned degree);

// Value of sum c_k m_k at the point's first n - 1 coordinates.
BigInt evaluate_form(const std::vector<BigInt>& coeffs, const std::vector<Monomial>& basis,
                     const std::vector<BigInt>& point);

// Every kernel vector vanishes exactly on every point.
bool kernel_vanishes(const DegeneracyReport& report, const std::vector<std::vector<BigInt>>& points);

// "4*x0*x2 - x1^2"
std::string form_to_string(const std::vector<BigInt>& coeffs, const std::vector<Monomial>& basis);

}  // namespace abcq
