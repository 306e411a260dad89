#pragma once

#include <map>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace treealg {

// Rational coefficients indexed by tree classes, dense through a fixed
// truncation order, plus a separate coefficient for the empty object.
// Reading past the order is an error rather than a silent zero: extending a
// truncated map would fabricate information.
class coefficient_map {
public:
    explicit coefficient_map(int order, rational empty = 0) : order_(order), empty_(std::move(empty)) {
        if (order < 1) fail("DomainMismatch", "truncation order must be positive");
        for (int n = 1; n <= order; ++n)
            for (const auto& t : enumerate_unlabeled(n)) coeffs_[t] = 0;
    }

    int order() const { return order_; }

    const rational& empty_coeff() const { return empty_; }
    void set_empty_coeff(rational v) { empty_ = std::move(v); }

    const rational& at(const unlabeled_tree& t) const {
        auto it = coeffs_.find(t);
        if (it == coeffs_.end())
            fail("OrderExceeded", "tree " + print_unlabeled(t) + " beyond truncation order " + std::to_string(order_));
        return it->second;
    }

    void set(const unlabeled_tree& t, rational v) {
        auto it = coeffs_.find(t);
        if (it == coeffs_.end())
            fail("OrderExceeded", "tree " + print_unlabeled(t) + " beyond truncation order " + std::to_string(order_));
        it->second = std::move(v);
    }

    // canonical iteration order
    const std::map<unlabeled_tree, rational>& coeffs() const { return coeffs_; }

    bool in_composition_group() const { return empty_ == 1; }
    bool in_substitution_group() const { return empty_ == 0; }
    bool in_substitution_group_invertible() const { return empty_ == 0 && at(unlabeled_tree::leaf()) != 0; }
    bool in_substitution_group_normalized() const { return empty_ == 0 && at(unlabeled_tree::leaf()) == 1; }

    bool operator==(const coefficient_map&) const = default;

private:
    int order_;
    rational empty_;
    std::map<unlabeled_tree, rational> coeffs_;
};

// Identity for the subtree product: 1 on the empty object, 0 elsewhere.
inline coefficient_map empty_delta(int order) { return coefficient_map(order, 1); }

// Identity for the quotient product: 1 on the single vertex, 0 elsewhere.
inline coefficient_map vertex_delta(int order) {
    coefficient_map d(order, 0);
    d.set(unlabeled_tree::leaf(), 1);
    return d;
}

// Coefficients of the exact flow: 1 on the empty object, reciprocal tree
// factorial elsewhere.
inline coefficient_map exact_coeffs(int order) {
    coefficient_map e(order, 1);
    for (const auto& [t, v] : e.coeffs()) e.set(t, rational(1, tree_factorial(t)));
    return e;
}

// Scale every coefficient by its tree factorial; in these coordinates the
// exact flow becomes the all-ones map and composition picks up binomial
// weights.
inline coefficient_map bar_transform(const coefficient_map& c) {
    coefficient_map out(c.order(), c.empty_coeff());
    for (const auto& [t, v] : c.coeffs()) out.set(t, v * rational(tree_factorial(t)));
    return out;
}

}  // namespace treealg
