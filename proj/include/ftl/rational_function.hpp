#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "ftl/cyclotomic.hpp"
#include "ftl/polynomial.hpp"
#include "ftl/uscalar.hpp"

namespace ftl {

/// Univariate rational function num(v)/den(v) over a field F.
/// Normalized: den monic, gcd(num, den) = 1, zero is 0/1.
template <class F>
class RationalFunction {
public:
    using Poly = Polynomial<F>;

    RationalFunction() : den_(F(1)) {}
    RationalFunction(int c) : RationalFunction(F(c)) {}      // NOLINT
    RationalFunction(const F& c) : num_(c), den_(F(1)) {}    // NOLINT
    RationalFunction(Poly num) : num_(std::move(num)), den_(F(1)) {}  // NOLINT
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction v() { return RationalFunction(Poly::x()); }
    /// u = v^2.
    static RationalFunction u() { return RationalFunction(Poly::monomial(F(1), 2)); }
    static RationalFunction v_power(int k) {
        if (k >= 0) return RationalFunction(Poly::monomial(F(1), k));
        return RationalFunction(Poly(F(1)), Poly::monomial(F(1), -k));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    F constant_value() const {
        if (!is_constant()) throw std::domain_error("rational function is not constant");
        return num_.coeff(0);
    }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, Normalized{}); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("rational function inverse of zero");
        return RationalFunction(den_, num_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    RationalFunction pow(int k) const {
        if (k < 0) return inverse().pow(-k);
        RationalFunction r(1), base = *this;
        while (k > 0) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::string to_string(const RationalFunction& a) {
        std::string n = a.num_.to_string("v");
        if (a.den_.degree() == 0) return n;
        std::string d = a.den_.to_string("v");
        if (n.find_first_of(" /") != std::string::npos) n = "(" + n + ")";
        if (d.find(' ') != std::string::npos || d.find('*') != std::string::npos) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    struct Normalized {};
    RationalFunction(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(F(1));
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        const F lead = den_.leading();
        if (!(lead == F(1))) {
            const F inv = F(1) / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly num_;
    Poly den_;
};

template <class F>
bool is_zero(const RationalFunction<F>& a) {
    return a.is_zero();
}

/// The scalar field for specialized traces and invariant values: Q(zeta_d)(v).
using CyclotomicRF = RationalFunction<Cyclotomic>;

/// Maps a coefficient of Q[u, 1/u, 1/(u+1)] into Q(zeta_d)(v) via u = v^2.
inline CyclotomicRF to_rational_function(const UScalar& s) {
    if (s.is_zero()) return {};
    std::vector<Cyclotomic> num;
    const auto& c = s.coeffs();
    num.reserve(2 * c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) num.emplace_back(0);
        num.emplace_back(c[i]);
    }
    Polynomial<Cyclotomic> n(std::move(num));
    Polynomial<Cyclotomic> d(Cyclotomic(1));
    const int low = s.low();
    if (low > 0) n = n * Polynomial<Cyclotomic>::monomial(Cyclotomic(1), 2 * low);
    if (low < 0) d = Polynomial<Cyclotomic>::monomial(Cyclotomic(1), -2 * low);
    const Polynomial<Cyclotomic> u_plus_one(std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(0), Cyclotomic(1)});
    for (int k = 0; k < s.den(); ++k) d = d * u_plus_one;
    return CyclotomicRF(std::move(n), std::move(d));
}

}  // namespace ftl
