#pragma once

#include <cstdint>
#include <random>

#include "coefficient_map.hpp"
#include "rational.hpp"

namespace treealg {

// Small rationals drawn from the raw engine words so the stream is identical
// on every platform: numerators in [-3,3], denominators in [1,4].
inline rational small_random_rational(std::mt19937& rng) {
    int num = static_cast<int>(rng() % 7u) - 3;
    int den = static_cast<int>(rng() % 4u) + 1;
    return rational(num, den);
}

inline coefficient_map random_composition_map(int order, std::mt19937& rng) {
    coefficient_map m(order, 1);
    for (const auto& [t, v] : m.coeffs()) m.set(t, small_random_rational(rng));
    return m;
}

// Empty coefficient 0; the single-vertex coefficient is pinned to 1 when
// normalized (the subgroup closed under the quotient product), otherwise
// drawn nonzero.
inline coefficient_map random_substitution_map(int order, std::mt19937& rng, bool normalized = true) {
    coefficient_map m(order, 0);
    for (const auto& [t, v] : m.coeffs()) m.set(t, small_random_rational(rng));
    if (normalized) {
        m.set(unlabeled_tree::leaf(), 1);
    } else {
        while (m.at(unlabeled_tree::leaf()) == 0) m.set(unlabeled_tree::leaf(), small_random_rational(rng));
    }
    return m;
}

}  // namespace treealg
