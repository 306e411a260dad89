#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "trees.hpp"

namespace treealg {

// Isomorphism class of rooted trees, kept in a canonical form: the children
// are a multiset of classes, stored as (child, count) groups in ascending
// canonical order.  Total order: smaller trees first, ties broken by
// comparing the children sequences largest-child-first.
class unlabeled_tree {
public:
    struct group;

    unlabeled_tree() = default;  // the single-vertex tree

    static unlabeled_tree leaf() { return unlabeled_tree(); }
    static unlabeled_tree with_children(std::vector<unlabeled_tree> kids);
    static unlabeled_tree from_groups(std::vector<group> groups);

    int size() const { return size_; }
    const std::vector<group>& children() const { return children_; }
    int root_degree() const;

    bool operator==(const unlabeled_tree& o) const;
    bool operator!=(const unlabeled_tree& o) const { return !(*this == o); }
    bool operator<(const unlabeled_tree& o) const;

private:
    std::vector<group> children_;
    int size_ = 1;
};

struct unlabeled_tree::group {
    unlabeled_tree child;
    int count = 1;
    bool operator==(const group&) const = default;
};

inline bool unlabeled_tree::operator==(const unlabeled_tree& o) const {
    return size_ == o.size_ && children_ == o.children_;
}

inline int compare(const unlabeled_tree& a, const unlabeled_tree& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    const auto& ga = a.children();
    const auto& gb = b.children();
    std::size_t ia = ga.size(), ib = gb.size();
    int ra = 0, rb = 0;  // repeats left in the current group
    while (true) {
        bool a_done = ra == 0 && ia == 0;
        bool b_done = rb == 0 && ib == 0;
        if (a_done || b_done) return a_done ? (b_done ? 0 : -1) : 1;
        if (ra == 0) ra = ga[--ia].count;
        if (rb == 0) rb = gb[--ib].count;
        int c = compare(ga[ia].child, gb[ib].child);
        if (c != 0) return c;
        int skip = std::min(ra, rb);
        ra -= skip;
        rb -= skip;
    }
}

inline bool unlabeled_tree::operator<(const unlabeled_tree& o) const { return compare(*this, o) < 0; }

inline unlabeled_tree unlabeled_tree::from_groups(std::vector<group> groups) {
    std::sort(groups.begin(), groups.end(),
              [](const group& x, const group& y) { return compare(x.child, y.child) < 0; });
    unlabeled_tree t;
    for (auto& g : groups) {
        if (g.count < 1) fail("ZeroCount", "child multiplicities must be positive");
        t.size_ += g.count * g.child.size();
        if (!t.children_.empty() && t.children_.back().child == g.child)
            t.children_.back().count += g.count;
        else
            t.children_.push_back(std::move(g));
    }
    return t;
}

inline unlabeled_tree unlabeled_tree::with_children(std::vector<unlabeled_tree> kids) {
    std::vector<group> groups;
    groups.reserve(kids.size());
    for (auto& k : kids) groups.push_back(group{std::move(k), 1});
    return from_groups(std::move(groups));
}

inline int unlabeled_tree::root_degree() const {
    int d = 0;
    for (const auto& g : children_) d += g.count;
    return d;
}

inline unlabeled_tree canonicalize(const labeled_tree& t, label v) {
    std::vector<unlabeled_tree> kids;
    for (label c : t.children_of(v)) kids.push_back(canonicalize(t, c));
    return unlabeled_tree::with_children(std::move(kids));
}

inline unlabeled_tree canonicalize(const labeled_tree& t) { return canonicalize(t, t.root()); }

namespace detail {

inline std::string render_unlabeled(const unlabeled_tree& t, bool commas) {
    if (t.children().empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& g : t.children()) {
        if (!first && commas) out += ",";
        first = false;
        out += std::to_string(g.count);
        if (!(g.child == unlabeled_tree::leaf())) out += "[" + render_unlabeled(g.child, commas) + "]";
    }
    return out;
}

}  // namespace detail

// Multiset notation "N1[d1],N2[d2],...": Nk copies of the child described by
// dk, a bare count meaning that many single-vertex children; "0" is the
// single-vertex tree itself.
inline std::string print_unlabeled(const unlabeled_tree& t) { return detail::render_unlabeled(t, true); }

// Same notation without the separating commas, as the tables render it.
inline std::string print_unlabeled_compact(const unlabeled_tree& t) { return detail::render_unlabeled(t, false); }

namespace detail {

inline unlabeled_tree parse_unlabeled_desc(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    std::vector<unlabeled_tree::group> groups;
    while (true) {
        int count = parse_label(s, pos);
        skip_ws(s, pos);
        if (count == 0) {
            if (!groups.empty() || (pos < s.size() && s[pos] != ']'))
                fail("ZeroCount", "zero multiplicity in '" + s + "'");
            return unlabeled_tree::leaf();
        }
        unlabeled_tree child = unlabeled_tree::leaf();
        if (pos < s.size() && s[pos] == '[') {
            ++pos;
            child = parse_unlabeled_desc(s, pos);
            if (pos >= s.size() || s[pos] != ']')
                fail("SyntaxError", "expected ']' at position " + std::to_string(pos) + " in '" + s + "'");
            ++pos;
            skip_ws(s, pos);
        }
        groups.push_back({std::move(child), count});
        if (pos < s.size() && s[pos] == ',') {
            ++pos;
            continue;
        }
        return unlabeled_tree::from_groups(std::move(groups));
    }
}

}  // namespace detail

inline unlabeled_tree parse_unlabeled(const std::string& text) {
    std::size_t pos = 0;
    unlabeled_tree t = detail::parse_unlabeled_desc(text, pos);
    detail::skip_ws(text, pos);
    if (pos != text.size())
        fail("SyntaxError", "trailing input at position " + std::to_string(pos) + " in '" + text + "'");
    return t;
}

// All classes with n vertices in canonical order.  A tree is the root plus a
// multiset of smaller trees; multisets are drawn with non-increasing canonical
// rank so each one appears exactly once.
inline std::vector<unlabeled_tree> enumerate_unlabeled(int n) {
    if (n < 1) fail("DomainMismatch", "vertex count must be positive");
    std::vector<std::vector<unlabeled_tree>> by_size(static_cast<std::size_t>(n) + 1);
    by_size[1] = {unlabeled_tree::leaf()};
    for (int m = 2; m <= n; ++m) {
        std::vector<unlabeled_tree> pool;  // all smaller trees, canonical order
        for (int k = 1; k < m; ++k)
            pool.insert(pool.end(), by_size[static_cast<std::size_t>(k)].begin(), by_size[static_cast<std::size_t>(k)].end());
        std::vector<unlabeled_tree> chosen;
        std::vector<unlabeled_tree>& out = by_size[static_cast<std::size_t>(m)];
        auto rec = [&](auto&& self, std::size_t max_rank, int remaining) -> void {
            if (remaining == 0) {
                out.push_back(unlabeled_tree::with_children(chosen));
                return;
            }
            for (std::size_t idx = max_rank + 1; idx-- > 0;) {
                if (pool[idx].size() > remaining) continue;
                chosen.push_back(pool[idx]);
                self(self, idx, remaining - pool[idx].size());
                chosen.pop_back();
            }
        };
        rec(rec, pool.size() - 1, m - 1);
        std::sort(out.begin(), out.end());
    }
    return by_size[static_cast<std::size_t>(n)];
}

// Class count by the generating-function recurrence: with c_j = sum over
// d | j of d*r_d, (k-1) r_k = sum_{j=1}^{k-1} c_j r_{k-j}.  Matches the
// enumeration cardinalities.
inline integer count_unlabeled(int n) {
    if (n < 1) fail("DomainMismatch", "vertex count must be positive");
    std::vector<integer> r(static_cast<std::size_t>(n) + 1, 0);
    r[1] = 1;
    for (int k = 2; k <= n; ++k) {
        integer acc = 0;
        for (int j = 1; j < k; ++j) {
            integer c = 0;
            for (int d = 1; d <= j; ++d)
                if (j % d == 0) c += d * r[static_cast<std::size_t>(d)];
            acc += c * r[static_cast<std::size_t>(k - j)];
        }
        r[static_cast<std::size_t>(k)] = exact_div(acc, k - 1);
    }
    return r[static_cast<std::size_t>(n)];
}

// Order of the stabilizer of any labeling: permuting equal children freely,
// independently inside each child.
inline integer symmetry_factor(const unlabeled_tree& t) {
    integer s = 1;
    for (const auto& g : t.children()) s *= factorial(g.count) * int_pow(symmetry_factor(g.child), g.count);
    return s;
}

inline integer tree_factorial(const unlabeled_tree& t) {
    integer f = t.size();
    for (const auto& g : t.children()) f *= int_pow(tree_factorial(g.child), g.count);
    return f;
}

// Product of the subtree sizes; agrees with the recursive form on the class.
inline integer tree_factorial(const labeled_tree& t) {
    integer f = 1;
    for (int s : detail::subtree_sizes(t)) f *= s;
    return f;
}

// Labelings of the class = orbit size n!/sigma.
inline integer labeled_count(const unlabeled_tree& t) {
    return exact_div(factorial(t.size()), symmetry_factor(t));
}

// Labelings increasing toward the leaves: n!/(sigma * factorial of the tree).
inline integer increasing_count(const unlabeled_tree& t) {
    return exact_div(factorial(t.size()), symmetry_factor(t) * tree_factorial(t));
}

using tree_multiset = std::map<unlabeled_tree, int>;

struct multiset_counts {
    integer labelings;  // ways to spread {0..m-1} over the shapes
    integer forests;    // labeled forests with these blocks
    integer symmetry;   // product of the per-tree stabilizers and shape permutations
};

inline multiset_counts multiset_stats(const tree_multiset& shapes) {
    int m = 0;
    for (const auto& [t, c] : shapes) {
        if (c < 1) fail("ZeroCount", "multiplicities must be positive");
        m += c * t.size();
    }
    integer labelings = factorial(m);
    integer sym = 1;
    integer orbit_product = 1;
    for (const auto& [t, c] : shapes) {
        labelings = exact_div(labelings, int_pow(factorial(t.size()), c) * factorial(c));
        sym *= factorial(c) * int_pow(symmetry_factor(t), c);
        orbit_product *= int_pow(labeled_count(t), c);
    }
    multiset_counts out{labelings, labelings * orbit_product, sym};
    if (out.forests != exact_div(factorial(m), out.symmetry))
        throw std::logic_error("multiset_stats: forest count mismatch");
    return out;
}

// Number of vertices of each out-degree; entry k counts degree k, and the
// degrees sum to size-1.
inline std::vector<int> degree_profile(const unlabeled_tree& t) {
    std::vector<int> v(static_cast<std::size_t>(t.size()), 0);
    auto walk = [&](auto&& self, const unlabeled_tree& u, int copies) -> void {
        v[static_cast<std::size_t>(u.root_degree())] += copies;
        for (const auto& g : u.children()) self(self, g.child, copies * g.count);
    };
    walk(walk, t, 1);
    return v;
}

// A concrete labeling of the class: labels assigned depth-first, children in
// ascending canonical order.
inline labeled_tree representative(const unlabeled_tree& t) {
    std::vector<label> parents;
    auto place = [&](auto&& self, const unlabeled_tree& u, label parent) -> void {
        label me = static_cast<label>(parents.size());
        parents.push_back(parent);
        for (const auto& g : u.children())
            for (int i = 0; i < g.count; ++i) self(self, g.child, me);
    };
    place(place, t, -1);
    return labeled_tree::from_parents(t.size(), 0, std::move(parents));
}

// A second labeling of the same class, breadth-first with children in
// descending canonical order; results never depend on which one is used.
inline labeled_tree representative_alt(const unlabeled_tree& t) {
    std::vector<label> parents{-1};
    std::vector<std::pair<const unlabeled_tree*, label>> queue{{&t, 0}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [node, me] = queue[head];
        const auto& groups = node->children();
        for (auto it = groups.rbegin(); it != groups.rend(); ++it)
            for (int i = 0; i < it->count; ++i) {
                queue.emplace_back(&it->child, static_cast<label>(parents.size()));
                parents.push_back(me);
            }
    }
    return labeled_tree::from_parents(t.size(), 0, std::move(parents));
}

inline unlabeled_tree bushy_tree(int n) {
    if (n < 1) fail("DomainMismatch", "vertex count must be positive");
    if (n == 1) return unlabeled_tree::leaf();
    return unlabeled_tree::from_groups({{unlabeled_tree::leaf(), n - 1}});
}

inline unlabeled_tree chain_tree(int n) {
    if (n < 1) fail("DomainMismatch", "vertex count must be positive");
    unlabeled_tree t = unlabeled_tree::leaf();
    for (int k = 1; k < n; ++k) t = unlabeled_tree::from_groups({{std::move(t), 1}});
    return t;
}

}  // namespace treealg
