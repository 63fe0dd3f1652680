#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftl/polynomial.hpp"
#include "ftl/rational.hpp"

namespace ftl {

/// Element of Q[u, 1/u, 1/(u+1)], the coefficient ring of the algebra.
///
/// Stored as u^low * p(u) / (u+1)^den with p(0) != 0, p(-1) != 0 when den > 0.
/// The form is canonical, so equality is structural.
class UScalar {
public:
    UScalar() = default;
    UScalar(int value) : UScalar(Rational(value)) {}  // NOLINT
    UScalar(const Rational& value) {                   // NOLINT
        if (sgn(value) != 0) c_.push_back(value);
    }
    UScalar(int low, std::vector<Rational> coeffs, int den = 0) : low_(low), c_(std::move(coeffs)), den_(den) {
        normalize();
    }

    static UScalar u_power(int k) { return UScalar(k, {Rational(1)}); }
    static UScalar u() { return u_power(1); }
    /// 1/(u+1)^k.
    static UScalar inv_u_plus_one(int k = 1) { return UScalar(0, {Rational(1)}, k); }

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int den() const { return den_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_laurent() const { return den_ == 0; }

    UScalar operator-() const {
        UScalar r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    friend UScalar operator+(const UScalar& a, const UScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int den = std::max(a.den_, b.den_);
        std::vector<Rational> pa = lift(a.c_, den - a.den_), pb = lift(b.c_, den - b.den_);
        const int low = std::min(a.low_, b.low_);
        std::vector<Rational> c(std::max(pa.size() + (a.low_ - low), pb.size() + (b.low_ - low)), Rational(0));
        for (std::size_t i = 0; i < pa.size(); ++i) c[i + (a.low_ - low)] += pa[i];
        for (std::size_t i = 0; i < pb.size(); ++i) c[i + (b.low_ - low)] += pb[i];
        return UScalar(low, std::move(c), den);
    }
    friend UScalar operator-(const UScalar& a, const UScalar& b) { return a + (-b); }
    friend UScalar operator*(const UScalar& a, const UScalar& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UScalar(a.low_ + b.low_, std::move(c), a.den_ + b.den_);
    }
    UScalar& operator+=(const UScalar& o) { return *this = *this + o; }
    UScalar& operator-=(const UScalar& o) { return *this = *this - o; }
    UScalar& operator*=(const UScalar& o) { return *this = *this * o; }

    friend bool operator==(const UScalar& a, const UScalar& b) {
        return a.low_ == b.low_ && a.den_ == b.den_ && a.c_ == b.c_;
    }

    /// Polynomial numerator as a Q[u] polynomial times u^low; callers clearing
    /// denominators use this together with den().
    QPolynomial numerator_polynomial() const { return QPolynomial(c_); }

    friend std::string to_string(const UScalar& a) {
        if (a.is_zero()) return "0";
        std::string num;
        for (long k = static_cast<long>(a.c_.size()) - 1; k >= 0; --k) {
            if (sgn(a.c_[k]) == 0) continue;
            detail::append_term(num, a.c_[k].get_str(), detail::power_text("u", a.low_ + k));
        }
        if (a.den_ == 0) return num;
        const bool compound = num.find(' ') != std::string::npos;
        std::string out = compound ? "(" + num + ")" : num;
        out += "/(u + 1)";
        if (a.den_ > 1) out += "^" + std::to_string(a.den_);
        return out;
    }

private:
    // Multiplies p by (u+1)^k.
    static std::vector<Rational> lift(std::vector<Rational> p, int k) {
        for (int r = 0; r < k; ++r) {
            p.emplace_back(0);
            for (std::size_t i = p.size() - 1; i > 0; --i) p[i] += p[i - 1];
        }
        return p;
    }

    void normalize() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
        std::size_t lead = 0;
        while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            low_ += static_cast<int>(lead);
        }
        if (c_.empty()) {
            low_ = 0;
            den_ = 0;
            return;
        }
        if (den_ < 0) throw std::invalid_argument("UScalar: negative denominator power");
        while (den_ > 0 && c_.size() > 1) {
            Rational at_minus_one = 0;
            for (std::size_t i = 0; i < c_.size(); ++i) at_minus_one += (i % 2 == 0) ? c_[i] : Rational(-c_[i]);
            if (sgn(at_minus_one) != 0) break;
            // Synthetic division by (u + 1).
            std::vector<Rational> q(c_.size() - 1);
            q.back() = c_.back();
            for (std::size_t i = q.size() - 1; i > 0; --i) q[i - 1] = c_[i] - q[i];
            c_ = std::move(q);
            --den_;
        }
    }

    int low_ = 0;
    std::vector<Rational> c_;
    int den_ = 0;
};

inline bool is_zero(const UScalar& a) { return a.is_zero(); }

}  // namespace ftl
