#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"

namespace treealg {

using label = int;

// Rooted tree on vertex set {0..n-1}: a parent map defined everywhere except
// the root, with every vertex reaching the root.  Validated on construction,
// immutable afterwards.
class labeled_tree {
public:
    labeled_tree() : n_(1), root_(0), parent_{-1} {}

    static labeled_tree build(int n, label root, const std::map<label, label>& parent) {
        if (n < 1) fail("DomainMismatch", "vertex count must be positive");
        if (root < 0 || root >= n) fail("DomainMismatch", "root label out of range");
        std::vector<label> p(static_cast<std::size_t>(n), -1);
        for (const auto& [child, par] : parent) {
            if (child < 0 || child >= n || par < 0 || par >= n)
                fail("DomainMismatch", "parent map label out of range");
            if (child == root) fail("DomainMismatch", "parent map defined on the root");
            p[static_cast<std::size_t>(child)] = par;
        }
        for (label v = 0; v < n; ++v)
            if (v != root && p[static_cast<std::size_t>(v)] < 0)
                fail("DomainMismatch", "parent map missing vertex " + std::to_string(v));
        return from_parents(n, root, std::move(p));
    }

    // parents[root] must be -1, every other entry a valid label.
    static labeled_tree from_parents(int n, label root, std::vector<label> parents) {
        labeled_tree t;
        t.n_ = n;
        t.root_ = root;
        t.parent_ = std::move(parents);
        t.validate();
        return t;
    }

    int size() const { return n_; }
    label root() const { return root_; }

    // v must not be the root
    label parent_of(label v) const {
        check_vertex(v);
        if (v == root_) fail("DomainMismatch", "root has no parent");
        return parent_[static_cast<std::size_t>(v)];
    }

    std::vector<label> children_of(label v) const {
        check_vertex(v);
        std::vector<label> out;
        for (label u = 0; u < n_; ++u)
            if (u != root_ && parent_[static_cast<std::size_t>(u)] == v) out.push_back(u);
        return out;
    }

    int degree_of(label v) const {
        check_vertex(v);
        int d = 0;
        for (label u = 0; u < n_; ++u)
            if (u != root_ && parent_[static_cast<std::size_t>(u)] == v) ++d;
        return d;
    }

    const std::vector<label>& parents() const { return parent_; }

    bool operator==(const labeled_tree&) const = default;

private:
    void check_vertex(label v) const {
        if (v < 0 || v >= n_) fail("UnknownVertex", "vertex " + std::to_string(v) + " not in tree");
    }

    void validate() const {
        if (n_ < 1 || static_cast<int>(parent_.size()) != n_ || root_ < 0 || root_ >= n_)
            fail("DomainMismatch", "inconsistent tree data");
        if (parent_[static_cast<std::size_t>(root_)] != -1)
            fail("DomainMismatch", "parent map defined on the root");
        std::vector<char> reaches(static_cast<std::size_t>(n_), 0);
        reaches[static_cast<std::size_t>(root_)] = 1;
        for (label v = 0; v < n_; ++v) {
            std::vector<label> path;
            label u = v;
            int steps = 0;
            while (!reaches[static_cast<std::size_t>(u)]) {
                path.push_back(u);
                label p = parent_[static_cast<std::size_t>(u)];
                if (p < 0 || p >= n_) fail("DomainMismatch", "parent map label out of range");
                u = p;
                if (++steps > n_) fail("CycleDetected", "vertex " + std::to_string(v) + " does not reach the root");
            }
            for (label w : path) reaches[static_cast<std::size_t>(w)] = 1;
        }
    }

    int n_;
    label root_;
    std::vector<label> parent_;
};

// Disjoint union of rooted trees ("blocks") on {0..n-1}; n may be 0.
class forest {
public:
    forest() = default;

    static forest build(int n, std::vector<label> roots, const std::map<label, label>& parent) {
        if (n < 0) fail("DomainMismatch", "vertex count must be nonnegative");
        std::vector<label> p(static_cast<std::size_t>(n), -1);
        for (const auto& [child, par] : parent) {
            if (child < 0 || child >= n || par < 0 || par >= n)
                fail("DomainMismatch", "parent map label out of range");
            p[static_cast<std::size_t>(child)] = par;
        }
        return from_parents(n, std::move(roots), std::move(p));
    }

    // parents[r] == -1 exactly for roots
    static forest from_parents(int n, std::vector<label> roots, std::vector<label> parents) {
        forest f;
        f.n_ = n;
        f.roots_ = std::move(roots);
        f.parent_ = std::move(parents);
        f.validate();
        return f;
    }

    int size() const { return n_; }
    const std::vector<label>& roots() const { return roots_; }
    int block_count() const { return static_cast<int>(roots_.size()); }

    // Root of the block containing v.
    label block_root_of(label v) const {
        if (v < 0 || v >= n_) fail("UnknownVertex", "vertex " + std::to_string(v) + " not in forest");
        label u = v;
        while (parent_[static_cast<std::size_t>(u)] != -1) u = parent_[static_cast<std::size_t>(u)];
        return u;
    }

    // One tree per block, each relabeled onto a contiguous range
    // order-preservingly; blocks come in ascending root order.
    std::vector<labeled_tree> blocks() const;

    bool operator==(const forest&) const = default;

private:
    void validate() {
        if (static_cast<int>(parent_.size()) != n_)
            fail("DomainMismatch", "inconsistent forest data");
        std::sort(roots_.begin(), roots_.end());
        for (std::size_t i = 0; i + 1 < roots_.size(); ++i)
            if (roots_[i] == roots_[i + 1]) fail("DomainMismatch", "duplicate forest root");
        std::vector<char> is_root(static_cast<std::size_t>(n_), 0);
        for (label r : roots_) {
            if (r < 0 || r >= n_) fail("DomainMismatch", "forest root out of range");
            is_root[static_cast<std::size_t>(r)] = 1;
        }
        for (label v = 0; v < n_; ++v)
            if ((parent_[static_cast<std::size_t>(v)] == -1) != (is_root[static_cast<std::size_t>(v)] == 1))
                fail("DomainMismatch", "roots and parent map disagree at vertex " + std::to_string(v));
        std::vector<char> reaches(static_cast<std::size_t>(n_), 0);
        for (label r : roots_) reaches[static_cast<std::size_t>(r)] = 1;
        for (label v = 0; v < n_; ++v) {
            std::vector<label> path;
            label u = v;
            int steps = 0;
            while (!reaches[static_cast<std::size_t>(u)]) {
                path.push_back(u);
                u = parent_[static_cast<std::size_t>(u)];
                if (u < 0 || u >= n_ || ++steps > n_)
                    fail("CycleDetected", "vertex " + std::to_string(v) + " does not reach a root");
            }
            for (label w : path) reaches[static_cast<std::size_t>(w)] = 1;
        }
    }

    int n_ = 0;
    std::vector<label> roots_;
    std::vector<label> parent_;
};

// Restriction of t to a vertex subset that is closed under taking parents
// within itself except at new_root; relabels onto {0..k-1} preserving the
// relative order of the original labels.
inline labeled_tree restrict_to(const labeled_tree& t, std::vector<label> vertices, label new_root) {
    std::sort(vertices.begin(), vertices.end());
    std::map<label, label> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<label>(i);
    std::vector<label> p(vertices.size(), -1);
    for (label v : vertices) {
        if (v == new_root) continue;
        label par = t.parent_of(v);
        auto it = index.find(par);
        if (it == index.end()) fail("DomainMismatch", "vertex subset not parent-closed");
        p[static_cast<std::size_t>(index.at(v))] = it->second;
    }
    return labeled_tree::from_parents(static_cast<int>(vertices.size()), index.at(new_root), std::move(p));
}

inline std::vector<labeled_tree> forest::blocks() const {
    std::vector<std::vector<label>> members(roots_.size());
    std::map<label, std::size_t> root_index;
    for (std::size_t i = 0; i < roots_.size(); ++i) root_index[roots_[i]] = i;
    for (label v = 0; v < n_; ++v) members[root_index.at(block_root_of(v))].push_back(v);
    std::vector<labeled_tree> out;
    out.reserve(roots_.size());
    for (std::size_t i = 0; i < roots_.size(); ++i) {
        std::map<label, label> index;
        for (std::size_t k = 0; k < members[i].size(); ++k) index[members[i][k]] = static_cast<label>(k);
        std::vector<label> p(members[i].size(), -1);
        for (label v : members[i])
            if (v != roots_[i]) p[static_cast<std::size_t>(index.at(v))] = index.at(parent_[static_cast<std::size_t>(v)]);
        out.push_back(labeled_tree::from_parents(static_cast<int>(members[i].size()), index.at(roots_[i]), std::move(p)));
    }
    return out;
}

// Subtree hanging at v (v and everything above it), relabeled contiguously.
inline labeled_tree subtree_above(const labeled_tree& t, label v) {
    if (v < 0 || v >= t.size()) fail("UnknownVertex", "vertex " + std::to_string(v) + " not in tree");
    std::vector<char> in(static_cast<std::size_t>(t.size()), 0);
    in[static_cast<std::size_t>(v)] = 1;
    // parents precede children under repeated sweeps; t.size() passes suffice
    bool grew = true;
    while (grew) {
        grew = false;
        for (label u = 0; u < t.size(); ++u) {
            if (u == t.root() || in[static_cast<std::size_t>(u)]) continue;
            if (in[static_cast<std::size_t>(t.parent_of(u))]) {
                in[static_cast<std::size_t>(u)] = 1;
                grew = true;
            }
        }
    }
    std::vector<label> vertices;
    for (label u = 0; u < t.size(); ++u)
        if (in[static_cast<std::size_t>(u)]) vertices.push_back(u);
    return restrict_to(t, std::move(vertices), v);
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
}

inline label parse_label(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail("SyntaxError", "expected a label at position " + std::to_string(start) + " in '" + s + "'");
    return std::stoi(s.substr(start, pos - start));
}

inline void parse_tree_node(const std::string& s, std::size_t& pos,
                            std::vector<std::pair<label, label>>& edges, std::vector<label>& seen) {
    label v = parse_label(s, pos);
    seen.push_back(v);
    skip_ws(s, pos);
    if (pos < s.size() && s[pos] == '[') {
        ++pos;
        while (true) {
            std::size_t mark = pos;
            skip_ws(s, pos);
            std::size_t child_at = seen.size();
            parse_tree_node(s, pos, edges, seen);
            edges.emplace_back(seen[child_at], v);
            skip_ws(s, pos);
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < s.size() && s[pos] == ']') {
                ++pos;
                break;
            }
            fail("SyntaxError", "expected ',' or ']' at position " + std::to_string(mark) + " in '" + s + "'");
        }
    }
}

}  // namespace detail

// Bracket notation: "root[child,child,...]" with each child a tree again;
// a bare label is a single vertex.  Labels must be exactly {0..n-1}.
inline labeled_tree parse_tree(const std::string& text) {
    std::size_t pos = 0;
    std::vector<std::pair<label, label>> edges;
    std::vector<label> seen;
    detail::parse_tree_node(text, pos, edges, seen);
    detail::skip_ws(text, pos);
    if (pos != text.size()) fail("SyntaxError", "trailing input at position " + std::to_string(pos) + " in '" + text + "'");

    std::vector<label> sorted = seen;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1]) fail("DuplicateLabel", "label " + std::to_string(sorted[i]) + " appears twice");
    int n = static_cast<int>(sorted.size());
    for (int i = 0; i < n; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i)
            fail("NonContiguousLabels", "labels must be exactly 0.." + std::to_string(n - 1));

    std::map<label, label> parent;
    for (const auto& [c, p] : edges) parent[c] = p;
    return labeled_tree::build(n, seen.front(), parent);
}

namespace detail {

inline std::string render_tree(const labeled_tree& t, label v, const std::vector<int>& sizes) {
    std::vector<label> kids = t.children_of(v);
    if (kids.empty()) return std::to_string(v);
    std::vector<std::string> parts;
    parts.reserve(kids.size());
    for (label c : kids) parts.push_back(render_tree(t, c, sizes));
    std::vector<std::size_t> order(parts.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int sa = sizes[static_cast<std::size_t>(kids[a])], sb = sizes[static_cast<std::size_t>(kids[b])];
        if (sa != sb) return sa < sb;
        return parts[a] < parts[b];
    });
    std::string out = std::to_string(v) + "[";
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) out += ",";
        out += parts[order[i]];
    }
    return out + "]";
}

inline std::vector<int> subtree_sizes(const labeled_tree& t) {
    std::vector<int> sz(static_cast<std::size_t>(t.size()), 1);
    // children have larger depth; accumulate leaf-upwards by repeated sweeps
    std::vector<label> order;
    std::vector<label> stack{t.root()};
    while (!stack.empty()) {
        label v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (label c : t.children_of(v)) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != t.root()) sz[static_cast<std::size_t>(t.parent_of(*it))] += sz[static_cast<std::size_t>(*it)];
    return sz;
}

}  // namespace detail

// Deterministic rendering: children ordered by subtree size, then by their
// own rendered text.  parse_tree(print_tree(t)) == t.
inline std::string print_tree(const labeled_tree& t) {
    return detail::render_tree(t, t.root(), detail::subtree_sizes(t));
}

inline bool is_increasing(const labeled_tree& t) {
    if (t.root() != 0) return false;
    for (label v = 0; v < t.size(); ++v)
        if (v != t.root() && t.parent_of(v) >= v) return false;
    return true;
}

}  // namespace treealg
