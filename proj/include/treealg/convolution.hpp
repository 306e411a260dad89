#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "coefficient_map.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "trees.hpp"

namespace treealg {

inline constexpr int default_pair_cap = 8;

// A root-containing predecessor-closed vertex subset (possibly empty), the
// tree it induces, and the forest of components hanging off it.
struct subtree_pair {
    std::vector<label> subtree_vertices;    // original labels, ascending
    std::optional<labeled_tree> subtree;    // relabeled; absent for the empty subset
    forest difference;                      // complement relabeled onto {0..m-1}
};

// Every way to cut a tree below the root.  First the empty subset, then the
// root-containing subsets in ascending bitmask order over the non-root
// vertices.
inline std::vector<subtree_pair> subtree_pairs(const labeled_tree& t, int cap = default_pair_cap) {
    int n = t.size();
    if (n > cap) fail("CapExceeded", "tree size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<label> others;  // vertices except the root, ascending
    for (label v = 0; v < n; ++v)
        if (v != t.root()) others.push_back(v);

    std::vector<subtree_pair> out;
    {
        std::vector<label> all_roots{t.root()};
        std::vector<label> all_parents = t.parents();
        out.push_back(subtree_pair{{}, std::nullopt,
                                   forest::from_parents(n, std::move(all_roots), std::move(all_parents))});
    }
    for (unsigned long mask = 0; mask < (1ul << others.size()); ++mask) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        in[static_cast<std::size_t>(t.root())] = 1;
        std::vector<label> members{t.root()};
        for (std::size_t i = 0; i < others.size(); ++i)
            if (mask >> i & 1) {
                in[static_cast<std::size_t>(others[i])] = 1;
                members.push_back(others[i]);
            }
        bool closed = true;
        for (label v : members)
            if (v != t.root() && !in[static_cast<std::size_t>(t.parent_of(v))]) {
                closed = false;
                break;
            }
        if (!closed) continue;

        std::sort(members.begin(), members.end());
        labeled_tree sub = restrict_to(t, members, t.root());

        std::vector<label> rest;
        std::vector<label> index(static_cast<std::size_t>(n), -1);
        for (label v = 0; v < n; ++v)
            if (!in[static_cast<std::size_t>(v)]) {
                index[static_cast<std::size_t>(v)] = static_cast<label>(rest.size());
                rest.push_back(v);
            }
        std::vector<label> fparent(rest.size(), -1);
        std::vector<label> froots;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            label p = t.parent_of(rest[i]);
            if (in[static_cast<std::size_t>(p)])
                froots.push_back(static_cast<label>(i));
            else
                fparent[i] = index[static_cast<std::size_t>(p)];
        }
        out.push_back(subtree_pair{std::move(members), std::move(sub),
                                   forest::from_parents(static_cast<int>(rest.size()), std::move(froots), std::move(fparent))});
    }
    return out;
}

// A root set R containing the tree root, the forest of blocks it induces
// (each vertex joins the block of its nearest root at or below it), and the
// quotient tree on R.
struct subforest_pair {
    std::vector<label> roots;   // original labels, ascending
    forest blocks;              // on the full vertex set, original labels
    labeled_tree quotient;      // on {0..|R|-1} via ascending relabeling of R
};

inline std::vector<subforest_pair> subforest_pairs(const labeled_tree& t, int cap = default_pair_cap) {
    int n = t.size();
    if (n > cap) fail("CapExceeded", "tree size " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<label> others;
    for (label v = 0; v < n; ++v)
        if (v != t.root()) others.push_back(v);

    std::vector<subforest_pair> out;
    for (unsigned long mask = 0; mask < (1ul << others.size()); ++mask) {
        std::vector<char> is_root(static_cast<std::size_t>(n), 0);
        is_root[static_cast<std::size_t>(t.root())] = 1;
        std::vector<label> roots{t.root()};
        for (std::size_t i = 0; i < others.size(); ++i)
            if (mask >> i & 1) {
                is_root[static_cast<std::size_t>(others[i])] = 1;
                roots.push_back(others[i]);
            }
        std::sort(roots.begin(), roots.end());

        std::vector<label> fparent(static_cast<std::size_t>(n), -1);
        for (label v = 0; v < n; ++v)
            if (!is_root[static_cast<std::size_t>(v)]) fparent[static_cast<std::size_t>(v)] = t.parent_of(v);
        forest blocks = forest::from_parents(n, roots, std::move(fparent));

        std::vector<label> rindex(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < roots.size(); ++i) rindex[static_cast<std::size_t>(roots[i])] = static_cast<label>(i);
        std::vector<label> qparent(roots.size(), -1);
        for (label rt : roots)
            if (rt != t.root())
                qparent[static_cast<std::size_t>(rindex[static_cast<std::size_t>(rt)])] =
                    rindex[static_cast<std::size_t>(blocks.block_root_of(t.parent_of(rt)))];
        labeled_tree quotient = labeled_tree::from_parents(
            static_cast<int>(roots.size()), rindex[static_cast<std::size_t>(t.root())], std::move(qparent));

        out.push_back(subforest_pair{std::move(roots), std::move(blocks), std::move(quotient)});
    }
    return out;
}

// c(T) = sum over subtrees T0 of b(T0) times the a-product over the hanging
// forest; the empty subtree contributes b(empty)*a(T) and the full one
// b(T).  Models running method a, then method b from where a landed.
inline coefficient_map compose(const coefficient_map& a, const coefficient_map& b, int order) {
    if (a.order() < order || b.order() < order)
        fail("OrderExceeded", "operands must carry at least the requested order");
    if (a.empty_coeff() != 1) fail("NotComposable", "left operand must have empty coefficient 1");
    coefficient_map c(order, b.empty_coeff());
    for (const auto& [t, unused] : c.coeffs()) {
        labeled_tree rep = representative(t);
        rational acc = 0;
        for (const auto& pair : subtree_pairs(rep)) {
            rational term = pair.subtree ? b.at(canonicalize(*pair.subtree)) : b.empty_coeff();
            for (const auto& block : pair.difference.blocks()) term *= a.at(canonicalize(block));
            acc += term;
        }
        c.set(t, acc);
    }
    return c;
}

// Inverse for the subtree product, solved order by order: the only pair
// contributing x(T) itself is the full subtree, everything else is known
// from lower orders.
inline coefficient_map compose_inverse(const coefficient_map& a, int order) {
    if (a.order() < order) fail("OrderExceeded", "operand must carry at least the requested order");
    if (!a.in_composition_group()) fail("NotInGroup", "inverse requires empty coefficient 1");
    coefficient_map x(order, 1);
    for (const auto& [t, unused] : x.coeffs()) {
        labeled_tree rep = representative(t);
        rational acc = 0;
        for (const auto& pair : subtree_pairs(rep)) {
            if (pair.subtree && static_cast<int>(pair.subtree_vertices.size()) == t.size()) continue;
            rational term = pair.subtree ? x.at(canonicalize(*pair.subtree)) : x.empty_coeff();
            for (const auto& block : pair.difference.blocks()) term *= a.at(canonicalize(block));
            acc += term;
        }
        x.set(t, -acc);
    }
    return x;
}

// Number of subtrees of (any labeling of) t whose class is t0.
inline integer multiplicity(const unlabeled_tree& t, const unlabeled_tree& t0, int cap = default_pair_cap) {
    if (t.size() > cap) fail("CapExceeded", "tree size " + std::to_string(t.size()) + " exceeds cap " + std::to_string(cap));
    if (t0.size() > t.size()) return 0;
    integer count = 0;
    for (const auto& pair : subtree_pairs(representative(t)))
        if (pair.subtree && canonicalize(*pair.subtree) == t0) ++count;
    return count;
}

// c(T) = sum over subforests F of b(T/F) times the a-product over the
// blocks.  Models grafting the a-series in as the vector field that b runs
// on.
inline coefficient_map substitute(const coefficient_map& a, const coefficient_map& b, int order) {
    if (a.order() < order || b.order() < order)
        fail("OrderExceeded", "operands must carry at least the requested order");
    if (a.empty_coeff() != 0) fail("NotSubstitutable", "left operand must have empty coefficient 0");
    coefficient_map c(order, b.empty_coeff());
    for (const auto& [t, unused] : c.coeffs()) {
        labeled_tree rep = representative(t);
        rational acc = 0;
        for (const auto& pair : subforest_pairs(rep)) {
            rational term = b.at(canonicalize(pair.quotient));
            for (const auto& block : pair.blocks.blocks()) term *= a.at(canonicalize(block));
            acc += term;
        }
        c.set(t, acc);
    }
    return c;
}

// Solve result * b = target for the quotient product, order by order: the
// all-roots subforest contributes a(T) * b(vertex), every other subforest
// only uses a at strictly smaller trees.
inline coefficient_map solve_substitution(const coefficient_map& target, const coefficient_map& b, int order) {
    if (target.order() < order || b.order() < order)
        fail("OrderExceeded", "operands must carry at least the requested order");
    const unlabeled_tree vertex = unlabeled_tree::leaf();
    if (b.at(vertex) == 0 || target.at(vertex) == 0)
        fail("NonInvertible", "single-vertex coefficients must be nonzero");
    if (target.empty_coeff() != b.empty_coeff())
        fail("NonInvertible", "empty coefficients of target and right operand must agree");
    coefficient_map x(order, 0);
    for (const auto& [t, unused] : x.coeffs()) {
        labeled_tree rep = representative(t);
        rational acc = 0;
        for (const auto& pair : subforest_pairs(rep)) {
            if (static_cast<int>(pair.roots.size()) == 1) continue;  // the a(T)*b(vertex) term
            rational term = b.at(canonicalize(pair.quotient));
            for (const auto& block : pair.blocks.blocks()) term *= x.at(canonicalize(block));
            acc += term;
        }
        x.set(t, (target.at(t) - acc) / b.at(vertex));
    }
    return x;
}

// Inverse for the quotient product on maps with nonzero single-vertex
// coefficient; verified by substituting back.
inline coefficient_map substitute_inverse(const coefficient_map& a, int order) {
    if (a.order() < order) fail("OrderExceeded", "operand must carry at least the requested order");
    if (a.empty_coeff() != 0 || a.at(unlabeled_tree::leaf()) == 0)
        fail("NonInvertible", "inverse requires empty coefficient 0 and nonzero single-vertex coefficient");
    return solve_substitution(vertex_delta(order), a, order);
}

// (T over T0) = T! / (T0! * product of the factorials of the hanging trees).
// Chains reproduce the classical binomial coefficients.
inline rational tree_binomial(const labeled_tree& t, const std::vector<label>& subtree_vertices) {
    std::vector<char> in(static_cast<std::size_t>(t.size()), 0);
    integer denom = 1;
    if (!subtree_vertices.empty()) {
        for (label v : subtree_vertices) {
            if (v < 0 || v >= t.size()) fail("UnknownVertex", "vertex " + std::to_string(v) + " not in tree");
            in[static_cast<std::size_t>(v)] = 1;
        }
        if (!in[static_cast<std::size_t>(t.root())]) fail("NotASubtree", "subset does not contain the root");
        for (label v : subtree_vertices)
            if (v != t.root() && !in[static_cast<std::size_t>(t.parent_of(v))])
                fail("NotASubtree", "subset is not predecessor-closed");
        denom *= tree_factorial(restrict_to(t, subtree_vertices, t.root()));
    }
    for (label v = 0; v < t.size(); ++v)
        if (!in[static_cast<std::size_t>(v)] && (v == t.root() || in[static_cast<std::size_t>(t.parent_of(v))]))
            denom *= tree_factorial(subtree_above(t, v));
    return rational(tree_factorial(t), denom);
}

inline rational tree_binomial(const labeled_tree& t, const subtree_pair& pair) {
    return tree_binomial(t, pair.subtree_vertices);
}

}  // namespace treealg
