#include <treealg/canonical.hpp>
#include <treealg/prufer.hpp>

#include <catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

using namespace treealg;

namespace {

// every labeled forest on {0..n-1}: a root set plus any parent assignment
// on the rest that reaches the roots
int count_forests_with_blocks(int n, const tree_multiset& wanted) {
    int hits = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<label> roots;
        std::vector<label> rest;
        for (label v = 0; v < n; ++v)
            if (mask >> v & 1)
                roots.push_back(v);
            else
                rest.push_back(v);
        if (roots.empty() && n > 0) continue;
        std::vector<label> assign(rest.size(), 0);
        while (true) {
            std::map<label, label> parent;
            for (std::size_t i = 0; i < rest.size(); ++i) parent[rest[i]] = assign[i];
            bool valid = true;
            tree_multiset blocks;
            try {
                forest f = forest::build(n, roots, parent);
                for (const auto& b : f.blocks()) ++blocks[canonicalize(b)];
            } catch (const error&) {
                valid = false;
            }
            if (valid && blocks == wanted) ++hits;
            if (rest.empty()) break;
            std::size_t pos = 0;
            while (pos < assign.size() && assign[pos] == n - 1) assign[pos++] = 0;
            if (pos == assign.size()) break;
            ++assign[pos];
        }
        if (rest.empty() && n == 0) break;
    }
    return hits;
}

}  // namespace

TEST_CASE("classes of the nine three-vertex trees", "[canonical]") {
    std::map<std::string, int> orbit;
    for (const auto& t : enumerate_labeled(3)) ++orbit[print_unlabeled(canonicalize(t))];
    REQUIRE(orbit.size() == 2);
    CHECK(orbit["2"] == 3);
    CHECK(orbit["1[1]"] == 6);
}

TEST_CASE("enumeration order and cardinalities", "[canonical]") {
    auto names = [](int n) {
        std::vector<std::string> out;
        for (const auto& t : enumerate_unlabeled(n)) out.push_back(print_unlabeled_compact(t));
        return out;
    };
    CHECK(names(1) == std::vector<std::string>{"0"});
    CHECK(names(2) == std::vector<std::string>{"1"});
    CHECK(names(3) == std::vector<std::string>{"2", "1[1]"});
    CHECK(names(4) == std::vector<std::string>{"3", "11[1]", "1[2]", "1[1[1]]"});
    CHECK(names(5) == std::vector<std::string>{"4", "21[1]", "2[1]", "11[2]", "11[1[1]]", "1[3]", "1[11[1]]",
                                               "1[1[2]]", "1[1[1[1]]]"});
    for (int n = 1; n <= 10; ++n)
        CHECK(integer(enumerate_unlabeled(n).size()) == count_unlabeled(n));
    // the recurrence pins the small values on its own
    std::vector<integer> small{1, 1, 2, 4, 9};
    for (int n = 1; n <= 5; ++n) CHECK(count_unlabeled(n) == small[static_cast<std::size_t>(n - 1)]);
}

TEST_CASE("canonical order is strict and stable under printing", "[canonical]") {
    for (int n = 1; n <= 7; ++n) {
        std::vector<unlabeled_tree> all = enumerate_unlabeled(n);
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            CHECK(compare(all[i], all[i + 1]) < 0);
            CHECK(compare(all[i + 1], all[i]) > 0);
        }
        for (const auto& t : all) {
            CHECK(compare(t, t) == 0);
            CHECK(parse_unlabeled(print_unlabeled(t)) == t);
        }
    }
}

TEST_CASE("notation parser", "[canonical]") {
    CHECK(parse_unlabeled("0") == unlabeled_tree::leaf());
    CHECK(parse_unlabeled("2") == bushy_tree(3));
    CHECK(parse_unlabeled("1[1]") == chain_tree(3));
    CHECK(parse_unlabeled("1[0]") == chain_tree(2));
    CHECK(print_unlabeled(parse_unlabeled("1[1],1")) == "1,1[1]");   // groups come out sorted
    CHECK(print_unlabeled(parse_unlabeled("1,1")) == "2");           // duplicates merge
    CHECK(print_unlabeled(parse_unlabeled("1,1[2]")) == "1,1[2]");
    CHECK(print_unlabeled_compact(parse_unlabeled("1,1[2]")) == "11[2]");
    CHECK_THROWS_WITH(parse_unlabeled("0[1]"), Catch::Matchers::StartsWith("ZeroCount"));
    CHECK_THROWS_WITH(parse_unlabeled("1,0"), Catch::Matchers::StartsWith("ZeroCount"));
    CHECK_THROWS_WITH(parse_unlabeled("2["), Catch::Matchers::StartsWith("SyntaxError"));
    CHECK_THROWS_WITH(parse_unlabeled("2]"), Catch::Matchers::StartsWith("SyntaxError"));
    CHECK_THROWS_WITH(parse_unlabeled(""), Catch::Matchers::StartsWith("SyntaxError"));
}

TEST_CASE("four-vertex invariants", "[canonical]") {
    std::vector<std::string> taus{"3", "1,1[1]", "1[2]", "1[1[1]]"};
    std::vector<integer> sigma{6, 1, 2, 1};
    std::vector<integer> fact{4, 8, 12, 24};
    for (std::size_t i = 0; i < taus.size(); ++i) {
        unlabeled_tree t = parse_unlabeled(taus[i]);
        CHECK(symmetry_factor(t) == sigma[i]);
        CHECK(tree_factorial(t) == fact[i]);
    }
}

TEST_CASE("five-vertex table", "[canonical]") {
    std::vector<std::string> rows{"4",      "21[1]",   "2[1]",    "11[2]",     "11[1[1]]",
                                  "1[3]",   "1[11[1]]", "1[1[2]]", "1[1[1[1]]]"};
    std::vector<integer> sigma{24, 2, 2, 2, 1, 6, 1, 2, 1};
    std::vector<integer> r{5, 60, 60, 60, 120, 20, 120, 60, 120};
    std::vector<integer> fact{5, 10, 20, 15, 30, 20, 40, 60, 120};
    std::vector<integer> incr{1, 6, 3, 4, 4, 1, 3, 1, 1};
    std::vector<unlabeled_tree> all = enumerate_unlabeled(5);
    REQUIRE(all.size() == rows.size());
    integer r_sum = 0, i_sum = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(print_unlabeled_compact(all[i]) == rows[i]);
        CHECK(symmetry_factor(all[i]) == sigma[i]);
        CHECK(labeled_count(all[i]) == r[i]);
        CHECK(tree_factorial(all[i]) == fact[i]);
        CHECK(increasing_count(all[i]) == incr[i]);
        r_sum += labeled_count(all[i]);
        i_sum += increasing_count(all[i]);
    }
    CHECK(r_sum == 625);
    CHECK(i_sum == 24);
}

TEST_CASE("partition of the labeled and increasing counts", "[canonical]") {
    for (int n = 1; n <= 8; ++n) {
        integer labeled_sum = 0, incr_sum = 0;
        for (const auto& t : enumerate_unlabeled(n)) {
            labeled_sum += labeled_count(t);
            incr_sum += increasing_count(t);
        }
        CHECK(labeled_sum == int_pow(integer(n), n - 1));
        CHECK(incr_sum == factorial(n - 1));
    }
}

TEST_CASE("orbit sizes match the counting formula", "[canonical]") {
    for (int n = 1; n <= 6; ++n) {
        std::map<std::string, integer> orbit;
        for (const auto& t : enumerate_labeled(n)) ++orbit[print_unlabeled(canonicalize(t))];
        for (const auto& t : enumerate_unlabeled(n)) CHECK(orbit[print_unlabeled(t)] == labeled_count(t));
    }
}

TEST_CASE("both factorial routes agree", "[canonical]") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : enumerate_unlabeled(n)) {
            CHECK(tree_factorial(t) == tree_factorial(representative(t)));
            CHECK(tree_factorial(t) == tree_factorial(representative_alt(t)));
        }
}

TEST_CASE("stabilizer as a per-vertex product", "[canonical]") {
    // product over the vertices of the factorials of the child-class
    // multiplicities, off any labeling
    for (int n = 1; n <= 8; ++n)
        for (const auto& t : enumerate_unlabeled(n)) {
            labeled_tree rep = representative(t);
            integer prod = 1;
            for (label v = 0; v < rep.size(); ++v) {
                tree_multiset kinds;
                for (label c : rep.children_of(v)) ++kinds[canonicalize(subtree_above(rep, c))];
                for (const auto& [kind, count] : kinds) prod *= factorial(count);
            }
            CHECK(prod == symmetry_factor(t));
        }
}

TEST_CASE("representatives land back in their class", "[canonical]") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : enumerate_unlabeled(n)) {
            CHECK(canonicalize(representative(t)) == t);
            CHECK(canonicalize(representative_alt(t)) == t);
        }
}

TEST_CASE("degree profile sums to size minus one", "[canonical]") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : enumerate_unlabeled(n)) {
            std::vector<int> profile = degree_profile(t);
            int vertices = 0, edges = 0;
            for (std::size_t k = 0; k < profile.size(); ++k) {
                vertices += profile[k];
                edges += static_cast<int>(k) * profile[k];
            }
            CHECK(vertices == n);
            CHECK(edges == n - 1);
        }
}

TEST_CASE("multiset statistics", "[canonical]") {
    tree_multiset shapes;
    ++shapes[unlabeled_tree::leaf()];
    ++shapes[chain_tree(2)];
    multiset_counts stats = multiset_stats(shapes);
    CHECK(stats.labelings == 3);
    CHECK(stats.symmetry == 1);
    CHECK(stats.forests == 6);
    CHECK(stats.forests == count_forests_with_blocks(3, shapes));

    tree_multiset pair_of_leaves;
    pair_of_leaves[unlabeled_tree::leaf()] = 2;
    multiset_counts leaves = multiset_stats(pair_of_leaves);
    CHECK(leaves.labelings == 1);
    CHECK(leaves.symmetry == 2);
    CHECK(leaves.forests == 1);
    CHECK(leaves.forests == count_forests_with_blocks(2, pair_of_leaves));

    tree_multiset two_chains;
    two_chains[chain_tree(2)] = 2;
    multiset_counts chains = multiset_stats(two_chains);
    CHECK(chains.labelings == 3);
    CHECK(chains.symmetry == 2);
    CHECK(chains.forests == 12);
    CHECK(chains.forests == count_forests_with_blocks(4, two_chains));

    CHECK_THROWS_WITH(multiset_stats(tree_multiset{{unlabeled_tree::leaf(), 0}}),
                      Catch::Matchers::StartsWith("ZeroCount"));
}

TEST_CASE("helper shapes", "[canonical]") {
    CHECK(print_unlabeled(bushy_tree(1)) == "0");
    CHECK(print_unlabeled(bushy_tree(4)) == "3");
    CHECK(print_unlabeled(chain_tree(4)) == "1[1[1]]");
    CHECK(bushy_tree(2) == chain_tree(2));
}
