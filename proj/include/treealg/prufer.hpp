#pragma once

#include <string>
#include <vector>

#include "error.hpp"
#include "trees.hpp"

namespace treealg {

inline constexpr int default_enumeration_cap = 7;

// Sequence of n-1 labels; the multiplicity of j equals the degree of j in the
// encoded tree and the last entry is the root.  Bijective with rooted trees
// on {0..n-1}, which is Cayley's n^(n-1) count.
using prufer_sequence = std::vector<label>;

// Peel the smallest leaf, record its parent, repeat.
inline prufer_sequence prufer_encode(const labeled_tree& t) {
    int n = t.size();
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (label v = 0; v < n; ++v)
        if (v != t.root()) ++degree[static_cast<std::size_t>(t.parent_of(v))];
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    prufer_sequence seq;
    seq.reserve(static_cast<std::size_t>(n - 1));
    for (int step = 0; step < n - 1; ++step) {
        label leaf = -1;
        for (label v = 0; v < n; ++v) {
            if (!removed[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 0 && v != t.root()) {
                leaf = v;
                break;
            }
        }
        label par = t.parent_of(leaf);
        seq.push_back(par);
        removed[static_cast<std::size_t>(leaf)] = 1;
        --degree[static_cast<std::size_t>(par)];
    }
    return seq;
}

// Rebuild the edges in the order the encoder removed them: the next child is
// the smallest vertex not yet attached and absent from the rest of the
// sequence; it attaches to the current entry.  The vertex left over is the
// root, which is also the final entry.
inline labeled_tree prufer_decode(int n, const prufer_sequence& seq) {
    if (n < 1) fail("DomainMismatch", "vertex count must be positive");
    if (static_cast<int>(seq.size()) != n - 1)
        fail("LengthMismatch", "expected " + std::to_string(n - 1) + " entries, got " + std::to_string(seq.size()));
    std::vector<int> remaining(static_cast<std::size_t>(n), 0);
    for (label j : seq) {
        if (j < 0 || j >= n) fail("EntryOutOfRange", "entry " + std::to_string(j) + " not a vertex");
        ++remaining[static_cast<std::size_t>(j)];
    }
    std::vector<char> attached(static_cast<std::size_t>(n), 0);
    std::vector<label> parent(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n - 1; ++i) {
        label child = -1;
        for (label v = 0; v < n; ++v) {
            if (!attached[static_cast<std::size_t>(v)] && remaining[static_cast<std::size_t>(v)] == 0) {
                child = v;
                break;
            }
        }
        parent[static_cast<std::size_t>(child)] = seq[static_cast<std::size_t>(i)];
        attached[static_cast<std::size_t>(child)] = 1;
        --remaining[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])];
    }
    label root = 0;
    while (attached[static_cast<std::size_t>(root)]) ++root;
    return labeled_tree::from_parents(n, root, std::move(parent));
}

// All rooted trees on {0..n-1}, ordered by Prüfer sequence.  The count grows
// as n^(n-1), hence the cap.
inline std::vector<labeled_tree> enumerate_labeled(int n, int cap = default_enumeration_cap) {
    if (n < 1) fail("DomainMismatch", "vertex count must be positive");
    if (n > cap)
        fail("CapExceeded", "n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<labeled_tree> out;
    prufer_sequence code(static_cast<std::size_t>(n - 1), 0);
    while (true) {
        out.push_back(prufer_decode(n, code));
        int pos = n - 2;
        while (pos >= 0 && code[static_cast<std::size_t>(pos)] == n - 1) {
            code[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++code[static_cast<std::size_t>(pos)];
    }
    return out;
}

inline std::string format_sequence(const std::vector<label>& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(seq[i]);
    }
    return out;
}

inline std::vector<label> parse_sequence(const std::string& text) {
    std::vector<label> out;
    std::size_t pos = 0;
    if (text.empty()) return out;
    while (true) {
        out.push_back(detail::parse_label(text, pos));
        detail::skip_ws(text, pos);
        if (pos == text.size()) break;
        if (text[pos] != ',') fail("SyntaxError", "expected ',' at position " + std::to_string(pos) + " in '" + text + "'");
        ++pos;
    }
    return out;
}

}  // namespace treealg
