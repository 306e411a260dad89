#pragma once

#include <string>
#include <vector>

#include "canonical.hpp"
#include "coefficient_map.hpp"
#include "convolution.hpp"
#include "error.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace treealg {

// Product over the vertices of the tree of the derivative of the field taken
// to the vertex's out-degree: the density the tree contributes to a series.
inline rational elementary_differential(const unlabeled_tree& t, const derivative_jet& beta) {
    if (t.size() - 1 > beta.order())
        fail("OrderExceeded", "jet carries " + std::to_string(beta.order()) + " derivatives, tree needs " +
                                  std::to_string(t.size() - 1));
    std::vector<int> profile = degree_profile(t);
    rational r = 1;
    for (std::size_t k = 0; k < profile.size(); ++k)
        if (profile[k] > 0) r *= rat_pow(beta.at(static_cast<int>(k)), profile[k]);
    return r;
}

// f_tau as a polynomial in the base point: the product of derivatives of
// beta dictated by the degree profile.
inline rational_poly elementary_differential_poly(const unlabeled_tree& t, const rational_poly& beta) {
    std::vector<rational_poly> derivs{beta};
    for (int k = 1; k < t.size(); ++k) derivs.push_back(derivs.back().derivative());
    rational_poly r = rational_poly::constant(1);
    std::vector<int> profile = degree_profile(t);
    for (std::size_t k = 0; k < profile.size(); ++k)
        for (int i = 0; i < profile[k]; ++i) r = r * derivs[k];
    return r;
}

// n-th coefficient of the fixed-point expansion g = a(t*beta(a)):
// (d/dg)^(n-1) beta(g)^n, equivalently the sum of n!/sigma over the order-n
// trees' densities.
inline rational fixed_point_coeff(const rational_poly& beta, const rational& point, int n) {
    if (n < 1) fail("DomainMismatch", "coefficient index must be positive");
    rational_poly p = beta.pow(n);
    for (int k = 1; k < n; ++k) p = p.derivative();
    return p.eval(point);
}

// n-th derivative of the solution of g' = beta(g): iterate the generator
// beta d/dg on the identity.  The tree route weights densities by
// n!/(sigma * tree factorial).
inline rational ode_coeff(const rational_poly& beta, const rational& point, int n) {
    if (n < 0) fail("DomainMismatch", "coefficient index must be nonnegative");
    rational_poly h = rational_poly::variable();
    for (int k = 0; k < n; ++k) h = h.derivative() * beta;
    return h.eval(point);
}

// The series the coefficients stand for: coefficient of t^m collects
// c(tau)/sigma(tau) times the density, over the order-m classes; the empty
// object contributes the base point itself.
inline truncated_series bseries_eval(const coefficient_map& c, const rational_poly& beta, const rational& point,
                                     int order) {
    if (c.order() < order) fail("OrderExceeded", "coefficient map must carry at least the requested order");
    derivative_jet jet = jet_of(beta, point, order);
    truncated_series s(order);
    s.set_coeff(0, c.empty_coeff() * point);
    for (const auto& [t, v] : c.coeffs()) {
        if (t.size() > order) continue;
        if (v == 0) continue;
        s.add_coeff(t.size(), v / rational(symmetry_factor(t)) * elementary_differential(t, jet));
    }
    return s;
}

struct verification_report {
    truncated_series lhs;
    truncated_series rhs;
    bool pass;
};

// Left side: the series of compose(a, b).  Right side: the series of b
// evaluated along the series of a, every derivative of beta re-expanded at
// the moving point by exact polynomial evaluation at a truncated series.
inline verification_report verify_composition(const coefficient_map& a, const coefficient_map& b,
                                              const rational_poly& beta, const rational& point, int order) {
    truncated_series lhs = bseries_eval(compose(a, b, order), beta, point, order);

    truncated_series inner = bseries_eval(a, beta, point, order);
    std::vector<rational_poly> derivs{beta};
    for (int k = 1; k < order; ++k) derivs.push_back(derivs.back().derivative());
    std::vector<truncated_series> along;  // derivs of beta evaluated along the inner series
    along.reserve(derivs.size());
    for (const auto& d : derivs) along.push_back(eval_poly_at_series(d, inner));

    truncated_series rhs = b.empty_coeff() * inner;
    for (const auto& [t, v] : b.coeffs()) {
        if (t.size() > order || v == 0) continue;
        truncated_series term(order);
        term.set_coeff(0, v / rational(symmetry_factor(t)));
        std::vector<int> profile = degree_profile(t);
        for (std::size_t k = 0; k < profile.size(); ++k)
            for (int i = 0; i < profile[k]; ++i) term = term * along[k];
        rhs = rhs + term.shift(t.size());
    }
    return {lhs, rhs, lhs == rhs};
}

// Derivatives of the field the a-series is the flow of, expanded at the base
// point: entry k is a series in t collecting a(tau)/sigma(tau) times the
// k-th g-derivative of the density polynomial.
inline std::vector<truncated_series> modified_field_jets(const coefficient_map& a, const rational_poly& beta,
                                                         const rational& point, int order) {
    if (a.order() < order) fail("OrderExceeded", "coefficient map must carry at least the requested order");
    if (a.empty_coeff() != 0) fail("NotSubstitutable", "field coefficients must vanish on the empty object");
    std::vector<truncated_series> jets(static_cast<std::size_t>(order) + 1, truncated_series(order));
    for (const auto& [t, v] : a.coeffs()) {
        if (t.size() > order || v == 0) continue;
        rational_poly density = elementary_differential_poly(t, beta);
        rational weight = v / rational(symmetry_factor(t));
        for (int k = 0; k <= order; ++k) {
            jets[static_cast<std::size_t>(k)].add_coeff(t.size(), weight * density.eval(point));
            density = density.derivative();
        }
    }
    return jets;
}

// Left side: the series of substitute(a, b).  Right side: the b-series run
// on the modified field, its derivatives taken from the jets above.
inline verification_report verify_substitution(const coefficient_map& a, const coefficient_map& b,
                                               const rational_poly& beta, const rational& point, int order) {
    truncated_series lhs = bseries_eval(substitute(a, b, order), beta, point, order);

    std::vector<truncated_series> jets = modified_field_jets(a, beta, point, order);
    truncated_series rhs(order);
    rhs.set_coeff(0, b.empty_coeff() * point);
    for (const auto& [t, v] : b.coeffs()) {
        if (t.size() > order || v == 0) continue;
        truncated_series term(order);
        term.set_coeff(0, v / rational(symmetry_factor(t)));
        std::vector<int> profile = degree_profile(t);
        for (std::size_t k = 0; k < profile.size(); ++k)
            for (int i = 0; i < profile[k]; ++i) term = term * jets[k];
        rhs = rhs + term;
    }
    return {lhs, rhs, lhs == rhs};
}

// Coefficients of the explicit two-stage scheme
//   g + (1 - 1/(2 alpha)) t beta(g) + (1/(2 alpha)) t beta(g + alpha t beta(g)):
// 1 on the empty object and the single vertex, alpha^(n-2)/2 on the order-n
// bushy trees, 0 on everything branching deeper.  Order two for every alpha.
inline coefficient_map rk2_coeffs(const rational& alpha, int order) {
    if (alpha == 0) fail("ZeroParameter", "stage parameter must be nonzero");
    coefficient_map c(order, 1);
    c.set(unlabeled_tree::leaf(), 1);
    for (int n = 2; n <= order; ++n) c.set(bushy_tree(n), rat_pow(alpha, n - 2) / 2);
    return c;
}

}  // namespace treealg
