#include <treealg/poly.hpp>

#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

using namespace treealg;

namespace {

integer binom(int n, int k) { return exact_div(factorial(n), factorial(k) * factorial(n - k)); }

// all set partitions of {0..n-1} as restricted growth strings
std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(rgs);
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, rgs[static_cast<std::size_t>(j)]);
            if (rgs[static_cast<std::size_t>(i)] <= cap) break;
        }
        if (i == 0) break;
        ++rgs[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
    }
    return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic", "[series]") {
    rational_poly x = rational_poly::variable();
    rational_poly p = (rational_poly::constant(1) + x).pow(2);
    CHECK(p == parse_poly("1+2x+x^2"));
    CHECK(p.degree() == 2);
    CHECK(p.eval(rational(3)) == 16);
    CHECK(p.derivative() == parse_poly("2+2x"));
    CHECK((p - p).is_zero());
    CHECK(rational(2) * x == parse_poly("2x"));
    CHECK(p.compose(x + rational_poly::constant(1)) == parse_poly("4+4x+x^2"));
    CHECK(rational_poly{}.degree() == -1);
    CHECK(rational_poly{0, 0}.is_zero());
}

TEST_CASE("polynomial notation", "[series]") {
    CHECK(parse_poly("1+x^2/2") == rational_poly{1, 0, rational(1, 2)});
    CHECK(parse_poly("2-x+x^3/6") == rational_poly{2, -1, 0, rational(1, 6)});
    CHECK(parse_poly("1/2*x^2") == rational_poly{0, 0, rational(1, 2)});
    CHECK(parse_poly("3x^2") == rational_poly{0, 0, 3});
    CHECK(parse_poly("-x") == rational_poly{0, -1});
    CHECK(parse_poly("x^2-x^2").is_zero());
    CHECK(parse_poly(" 1 + 2 x ") == rational_poly{1, 2});
    CHECK(print_poly(parse_poly("2-x+x^3/6")) == "2 - x + 1/6*x^3");
    CHECK(print_poly(rational_poly{}) == "0");
    CHECK(print_poly(parse_poly("-1-x")) == "-1 - x");
    for (const char* text : {"", "x^", "2//3", "x+", "x y", "^2"})
        CHECK_THROWS_WITH(parse_poly(text), Catch::Matchers::StartsWith("SyntaxError"));
    for (const char* text : {"1+x^2/2", "x", "0", "5 - 3/4*x^2 + x^5"})
        CHECK(parse_poly(print_poly(parse_poly(text))) == parse_poly(text));
}

TEST_CASE("truncated series arithmetic", "[series]") {
    truncated_series s(4);
    s.set_coeff(1, 1);  // t
    truncated_series u = s * s;
    CHECK(u.coeff(2) == 1);
    CHECK(u.coeff(0) == 0);
    truncated_series geom(4);
    for (int k = 0; k <= 4; ++k) geom.set_coeff(k, 1);
    truncated_series one_minus_t(4);
    one_minus_t.set_coeff(0, 1);
    one_minus_t.set_coeff(1, -1);
    truncated_series prod = geom * one_minus_t;  // telescopes to 1
    truncated_series one(4);
    one.set_coeff(0, 1);
    CHECK(prod == one);
    CHECK(geom.shift(2).coeff(2) == 1);
    CHECK(geom.shift(2).coeff(1) == 0);
    CHECK(geom.pow(2).coeff(3) == 4);  // (1+t+t^2+...)^2 has k+1 at t^k
    CHECK((rational(3) * geom).coeff(4) == 3);
    CHECK((geom - geom).coeff(0) == 0);
    CHECK_THROWS_WITH(geom.coeff(5), Catch::Matchers::StartsWith("OrderExceeded"));
    CHECK_THROWS_WITH(geom + truncated_series(3), Catch::Matchers::StartsWith("OrderExceeded"));
}

TEST_CASE("series composition", "[series]") {
    // 1/(1-u) at u = t/(1-t) gives 1 + t/(1-2t)... check against known coefficients
    truncated_series geom(5);
    for (int k = 0; k <= 5; ++k) geom.set_coeff(k, 1);
    truncated_series inner(5);
    for (int k = 1; k <= 5; ++k) inner.set_coeff(k, 1);  // t + t^2 + ...
    truncated_series composed = geom.compose(inner);
    CHECK(composed.coeff(0) == 1);
    CHECK(composed.coeff(1) == 1);
    for (int k = 2; k <= 5; ++k) CHECK(composed.coeff(k) == int_pow(integer(2), k - 1));
    CHECK_THROWS_WITH(geom.compose(geom), Catch::Matchers::StartsWith("NonzeroConstantTerm"));

    truncated_series f(5), g(5), h(5);
    f.set_coeff(0, 2);
    f.set_coeff(1, -1);
    f.set_coeff(3, rational(1, 3));
    g.set_coeff(1, 1);
    g.set_coeff(2, rational(5, 2));
    h.set_coeff(1, -2);
    h.set_coeff(4, 7);
    CHECK(f.compose(g).compose(h) == f.compose(g.compose(h)));
}

TEST_CASE("polynomial evaluated at a series", "[series]") {
    rational_poly p = parse_poly("x^2");
    truncated_series x(3);
    x.set_coeff(0, 1);
    x.set_coeff(1, 1);  // 1 + t
    truncated_series r = eval_poly_at_series(p, x);
    CHECK(r.coeff(0) == 1);
    CHECK(r.coeff(1) == 2);
    CHECK(r.coeff(2) == 1);
    CHECK(r.coeff(3) == 0);
    // constant series reduces to plain evaluation
    truncated_series c(2);
    c.set_coeff(0, rational(7, 2));
    CHECK(eval_poly_at_series(parse_poly("2-x+x^3/6"), c).coeff(0) == parse_poly("2-x+x^3/6").eval(rational(7, 2)));
}

TEST_CASE("derivative jets", "[series]") {
    derivative_jet j = jet_of(parse_poly("x^3"), rational(2), 4);
    CHECK(j.values == std::vector<rational>{8, 12, 12, 6, 0});
    CHECK(j.order() == 4);
    CHECK(j.at(3) == 6);
    CHECK_THROWS_WITH(j.at(5), Catch::Matchers::StartsWith("OrderExceeded"));
}

TEST_CASE("product rule across jets", "[series]") {
    rational_poly p = parse_poly("1+x^2/2");
    rational_poly q = parse_poly("2-x+x^3/6");
    rational point(3, 2);
    derivative_jet jp = jet_of(p, point, 5);
    derivative_jet jq = jet_of(q, point, 5);
    derivative_jet jpq = jet_of(p * q, point, 5);
    for (int k = 0; k <= 5; ++k) {
        rational sum = 0;
        for (int j = 0; j <= k; ++j) sum += rational(binom(k, j)) * jp.at(j) * jq.at(k - j);
        CHECK(jpq.at(k) == sum);
    }
}

TEST_CASE("chain rule across jets", "[series]") {
    rational_poly p = parse_poly("1+3x+x^2/2");
    rational_poly q = parse_poly("2-x+x^3/6");
    rational point(-1, 2);
    derivative_jet outer = jet_of(p, q.eval(point), 5);
    derivative_jet inner = jet_of(q, point, 5);
    derivative_jet direct = jet_of(p.compose(q), point, 5);
    CHECK(direct.at(0) == outer.at(0));
    for (int k = 1; k <= 5; ++k) {
        rational sum = 0;
        for (const auto& rgs : partitions_of(k)) {
            int block_count = 0;
            std::vector<int> block_size(static_cast<std::size_t>(k), 0);
            for (int b : rgs) {
                block_count = std::max(block_count, b + 1);
                ++block_size[static_cast<std::size_t>(b)];
            }
            rational term = outer.at(block_count);
            for (int b = 0; b < block_count; ++b) term *= inner.at(block_size[static_cast<std::size_t>(b)]);
            sum += term;
        }
        CHECK(direct.at(k) == sum);
    }
}
