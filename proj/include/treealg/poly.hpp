#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "trees.hpp"

namespace treealg {

// Polynomial in one variable with rational coefficients, ascending powers,
// no trailing zeros.
class rational_poly {
public:
    rational_poly() = default;
    rational_poly(std::initializer_list<rational> coeffs) : c_(coeffs) { trim(); }
    explicit rational_poly(std::vector<rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static rational_poly constant(rational v) { return rational_poly{std::move(v)}; }
    static rational_poly variable() { return rational_poly{0, 1}; }

    const std::vector<rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : rational(0); }

    rational eval(const rational& x) const {
        rational r = 0;
        for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
        return r;
    }

    rational_poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<int>(k);
        return rational_poly(std::move(d));
    }

    friend rational_poly operator+(const rational_poly& a, const rational_poly& b) {
        std::vector<rational> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return rational_poly(std::move(r));
    }

    friend rational_poly operator-(const rational_poly& a, const rational_poly& b) {
        std::vector<rational> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
        return rational_poly(std::move(r));
    }

    friend rational_poly operator*(const rational_poly& a, const rational_poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<rational> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return rational_poly(std::move(r));
    }

    friend rational_poly operator*(const rational& s, const rational_poly& p) {
        std::vector<rational> r = p.c_;
        for (auto& v : r) v *= s;
        return rational_poly(std::move(r));
    }

    rational_poly pow(int e) const {
        rational_poly r = constant(1);
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    // this(inner(x)), plain polynomial composition
    rational_poly compose(const rational_poly& inner) const {
        rational_poly r;
        for (std::size_t k = c_.size(); k-- > 0;) r = r * inner + constant(c_[k]);
        return r;
    }

    bool operator==(const rational_poly&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<rational> c_;
};

// Power series in t cut off after t^order; arithmetic stays inside the
// truncation.
class truncated_series {
public:
    explicit truncated_series(int order) : c_(static_cast<std::size_t>(order) + 1, 0) {
        if (order < 0) fail("DomainMismatch", "series order must be nonnegative");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const rational& coeff(int k) const { return c_[check(k)]; }
    void set_coeff(int k, rational v) { c_[check(k)] = std::move(v); }
    void add_coeff(int k, const rational& v) { c_[check(k)] += v; }

    const std::vector<rational>& coeffs() const { return c_; }

    friend truncated_series operator+(const truncated_series& a, const truncated_series& b) {
        truncated_series r(a.match(b));
        for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
        return r;
    }

    friend truncated_series operator-(const truncated_series& a, const truncated_series& b) {
        truncated_series r(a.match(b));
        for (int k = 0; k <= r.order(); ++k) r.c_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
        return r;
    }

    friend truncated_series operator*(const truncated_series& a, const truncated_series& b) {
        truncated_series r(a.match(b));
        for (int i = 0; i <= r.order(); ++i)
            for (int j = 0; i + j <= r.order(); ++j)
                r.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        return r;
    }

    friend truncated_series operator*(const rational& s, const truncated_series& a) {
        truncated_series r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    // multiply by t^k
    truncated_series shift(int k) const {
        truncated_series r(order());
        for (int j = 0; j + k <= order(); ++j) r.c_[static_cast<std::size_t>(j + k)] = c_[static_cast<std::size_t>(j)];
        return r;
    }

    truncated_series pow(int e) const {
        truncated_series r(order());
        r.set_coeff(0, 1);
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    // this(inner(t)); meaningful only when inner has no constant term
    truncated_series compose(const truncated_series& inner) const {
        if (inner.coeff(0) != 0)
            fail("NonzeroConstantTerm", "series composition needs a zero constant term inside");
        truncated_series r(match(inner));
        for (int k = order(); k >= 0; --k) {
            r = r * inner;
            r.c_[0] += c_[static_cast<std::size_t>(k)];
        }
        return r;
    }

    bool operator==(const truncated_series&) const = default;

private:
    int match(const truncated_series& o) const {
        if (order() != o.order()) fail("OrderExceeded", "series orders differ");
        return order();
    }

    std::size_t check(int k) const {
        if (k < 0 || k > order()) fail("OrderExceeded", "coefficient index " + std::to_string(k) + " out of range");
        return static_cast<std::size_t>(k);
    }

    std::vector<rational> c_;
};

// Polynomial evaluated at a truncated series (finite Horner, any constant
// term is fine).
inline truncated_series eval_poly_at_series(const rational_poly& p, const truncated_series& x) {
    truncated_series r(x.order());
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        r = r * x;
        r.add_coeff(0, p.coeffs()[k]);
    }
    return r;
}

// Derivatives of a polynomial at a point: entry k is the k-th derivative.
struct derivative_jet {
    rational point;
    std::vector<rational> values;

    int order() const { return static_cast<int>(values.size()) - 1; }

    const rational& at(int k) const {
        if (k < 0 || k >= static_cast<int>(values.size()))
            fail("OrderExceeded", "derivative index " + std::to_string(k) + " out of range");
        return values[static_cast<std::size_t>(k)];
    }
};

inline derivative_jet jet_of(const rational_poly& p, const rational& point, int order) {
    derivative_jet j{point, {}};
    j.values.reserve(static_cast<std::size_t>(order) + 1);
    rational_poly d = p;
    for (int k = 0; k <= order; ++k) {
        j.values.push_back(d.eval(point));
        d = d.derivative();
    }
    return j;
}

namespace detail {

inline rational parse_poly_number(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) fail("SyntaxError", "expected a number at position " + std::to_string(start) + " in '" + s + "'");
    return rational(integer(s.substr(start, pos - start)));
}

}  // namespace detail

// Sum of terms like "2", "x", "3x^2", "x^3/6", "1/2*x^2"; '+' and '-'
// separate terms.
inline rational_poly parse_poly(const std::string& text) {
    std::size_t pos = 0;
    rational_poly p;
    bool expect_term = true;
    rational sign = 1;
    detail::skip_ws(text, pos);
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    while (true) {
        detail::skip_ws(text, pos);
        if (pos >= text.size()) {
            if (expect_term) fail("SyntaxError", "dangling sign in '" + text + "'");
            break;
        }
        // one term: [number] [/ number] [* ] [x [^ number]] [/ number]
        rational coeff = 1;
        bool saw_anything = false;
        if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            coeff = detail::parse_poly_number(text, pos);
            saw_anything = true;
            detail::skip_ws(text, pos);
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                detail::skip_ws(text, pos);
                rational den = detail::parse_poly_number(text, pos);
                if (den == 0) fail("SyntaxError", "division by zero in '" + text + "'");
                coeff /= den;
                detail::skip_ws(text, pos);
            }
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                detail::skip_ws(text, pos);
            }
        }
        int exp = 0;
        if (pos < text.size() && text[pos] == 'x') {
            ++pos;
            exp = 1;
            saw_anything = true;
            detail::skip_ws(text, pos);
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                detail::skip_ws(text, pos);
                exp = static_cast<int>(numerator(detail::parse_poly_number(text, pos)));
                detail::skip_ws(text, pos);
            }
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                detail::skip_ws(text, pos);
                rational den = detail::parse_poly_number(text, pos);
                if (den == 0) fail("SyntaxError", "division by zero in '" + text + "'");
                coeff /= den;
                detail::skip_ws(text, pos);
            }
        }
        if (!saw_anything) fail("SyntaxError", "expected a term at position " + std::to_string(pos) + " in '" + text + "'");
        std::vector<rational> mono(static_cast<std::size_t>(exp) + 1, 0);
        mono[static_cast<std::size_t>(exp)] = sign * coeff;
        p = p + rational_poly(std::move(mono));
        expect_term = false;
        detail::skip_ws(text, pos);
        if (pos >= text.size()) break;
        if (text[pos] == '+')
            sign = 1;
        else if (text[pos] == '-')
            sign = -1;
        else
            fail("SyntaxError", "expected '+' or '-' at position " + std::to_string(pos) + " in '" + text + "'");
        ++pos;
        expect_term = true;
    }
    return p;
}

inline std::string print_poly(const rational_poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const rational& c = p.coeffs()[k];
        if (c == 0) continue;
        rational mag = c < 0 ? rational(-c) : c;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        std::string body;
        if (k == 0)
            body = format_rational(mag);
        else {
            if (mag != 1) body = format_rational(mag) + "*";
            body += "x";
            if (k > 1) body += "^" + std::to_string(k);
        }
        out += body;
    }
    return out;
}

}  // namespace treealg
