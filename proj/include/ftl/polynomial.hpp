#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ftl/rational.hpp"

namespace ftl {

namespace detail {

// Joins rendered "coefficient * monomial" pieces into a signed sum.
// A coefficient whose text contains a space is a sum and gets parenthesized.
inline void append_term(std::string& out, std::string coeff, const std::string& monomial) {
    bool negative = false;
    if (coeff.find(' ') != std::string::npos) {
        coeff = "(" + coeff + ")";
    } else if (!coeff.empty() && coeff.front() == '-') {
        negative = true;
        coeff.erase(0, 1);
    }
    std::string body;
    if (monomial.empty()) {
        body = coeff;
    } else if (coeff == "1") {
        body = monomial;
    } else {
        body = coeff + "*" + monomial;
    }
    if (out.empty()) {
        out = negative ? "-" + body : body;
    } else {
        out += negative ? " - " : " + ";
        out += body;
    }
}

inline std::string power_text(const std::string& var, long long k) {
    if (k == 0) return "";
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

}  // namespace detail

/// Dense univariate polynomial over a field F, coefficients stored low to high.
/// The zero polynomial has no coefficients; otherwise the top coefficient is nonzero.
template <class F>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(const F& constant) : c_{constant} { trim(); }  // NOLINT: implicit scalar embedding

    static Polynomial monomial(const F& coeff, std::size_t k) {
        std::vector<F> c(k + 1, F(0));
        c[k] = coeff;
        return Polynomial(std::move(c));
    }
    static Polynomial x() { return monomial(F(1), 1); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
    const F& leading() const { return c_.back(); }

    F operator()(const F& at) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == F(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    Polynomial scaled(const F& s) const {
        Polynomial r = *this;
        for (auto& a : r.c_) a = a * s;
        r.trim();
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(F(1) / leading());
    }

    /// Quotient and remainder; throws on division by the zero polynomial.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial(), a};
        std::vector<F> rem = a.c_;
        std::vector<F> quo(a.c_.size() - b.c_.size() + 1, F(0));
        const F inv_lead = F(1) / b.leading();
        for (long k = static_cast<long>(quo.size()) - 1; k >= 0; --k) {
            const F q = rem[k + b.degree()] * inv_lead;
            quo[k] = q;
            if (q == F(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] = rem[k + j] - q * b.c_[j];
        }
        rem.resize(b.c_.size() - 1);
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    /// Exact quotient; throws if b does not divide a.
    friend Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
        return q;
    }

    /// Monic gcd (zero when both are zero).
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a % b;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    /// Returns (g, s, t) with s*a + t*b = g, g monic.
    friend std::tuple<Polynomial, Polynomial, Polynomial> xgcd(const Polynomial& a, const Polynomial& b) {
        Polynomial r0 = a, r1 = b, s0(F(1)), s1, t0, t1(F(1));
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = std::move(r1);
            r1 = std::move(r);
            Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.is_zero()) return {r0, s0, t0};
        const F inv = F(1) / r0.leading();
        return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
    }

    /// Highest power first, e.g. "u^2 - 1/2*u + 3".
    std::string to_string(const std::string& var) const {
        if (is_zero()) return "0";
        std::string out;
        for (long k = degree(); k >= 0; --k) {
            if (c_[k] == F(0)) continue;
            using ftl::to_string;
            detail::append_term(out, to_string(c_[k]), detail::power_text(var, k));
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }

    std::vector<F> c_;
};

using QPolynomial = Polynomial<Rational>;

}  // namespace ftl
