#pragma once

#include <algorithm>
#include <vector>

#include "error.hpp"
#include "prufer.hpp"
#include "trees.hpp"

namespace treealg {

// Permutation of {1..n-1} coding an increasing tree (root 0, parents smaller
// than children): vertex k was inserted at the position equal to its parent,
// shifting later entries right.
using perm_code = std::vector<label>;

inline perm_code perm_encode(const labeled_tree& t) {
    if (!is_increasing(t)) fail("NotIncreasing", "tree is not increasing");
    int n = t.size();
    perm_code code;
    for (label v = 1; v < n; ++v)
        code.insert(code.begin() + t.parent_of(v), v);
    return code;
}

// Undo the insertions largest-vertex-first: the position of v in the current
// list is its parent; removing it exposes the list for v-1.
inline labeled_tree perm_decode(int n, const perm_code& code) {
    if (n < 1) fail("DomainMismatch", "vertex count must be positive");
    if (static_cast<int>(code.size()) != n - 1)
        fail("LengthMismatch", "expected " + std::to_string(n - 1) + " entries, got " + std::to_string(code.size()));
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (label v : code) {
        if (v < 1 || v >= n || used[static_cast<std::size_t>(v)])
            fail("InvalidPermutation", "entries must be a permutation of 1.." + std::to_string(n - 1));
        used[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<label> parent(static_cast<std::size_t>(n), -1);
    std::vector<label> list = code;
    for (label v = n - 1; v >= 1; --v) {
        auto it = std::find(list.begin(), list.end(), v);
        parent[static_cast<std::size_t>(v)] = static_cast<label>(it - list.begin());
        list.erase(it);
    }
    return labeled_tree::from_parents(n, 0, std::move(parent));
}

// All (n-1)! increasing trees on {0..n-1}, ordered by permutation code.
inline std::vector<labeled_tree> enumerate_increasing(int n, int cap = default_enumeration_cap) {
    if (n < 1) fail("DomainMismatch", "vertex count must be positive");
    if (n > cap)
        fail("CapExceeded", "n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    perm_code code(static_cast<std::size_t>(n - 1));
    for (label v = 1; v < n; ++v) code[static_cast<std::size_t>(v - 1)] = v;
    std::vector<labeled_tree> out;
    do {
        out.push_back(perm_decode(n, code));
    } while (std::next_permutation(code.begin(), code.end()));
    return out;
}

}  // namespace treealg
