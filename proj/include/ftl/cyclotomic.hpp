#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftl/polynomial.hpp"
#include "ftl/rational.hpp"

namespace ftl {

/// Integer coefficients of the d-th cyclotomic polynomial, low degree first.
inline std::vector<Integer> cyclotomic_polynomial(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d must be positive");
    // X^d - 1 divided by every Phi_k with k | d, k < d.
    std::vector<Rational> xd(d + 1, Rational(0));
    xd[0] = -1;
    xd[d] = 1;
    QPolynomial p(std::move(xd));
    for (int k = 1; k < d; ++k) {
        if (d % k != 0) continue;
        std::vector<Rational> phi_k;
        for (const auto& c : cyclotomic_polynomial(k)) phi_k.emplace_back(c);
        p = exact_div(p, QPolynomial(std::move(phi_k)));
    }
    std::vector<Integer> out;
    for (const auto& c : p.coeffs()) out.push_back(c.get_num());
    return out;
}

namespace detail {

inline const QPolynomial& cached_cyclotomic(int d) {
    static std::mutex mutex;
    static std::map<int, QPolynomial> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it == cache.end()) {
        std::vector<Rational> c;
        for (const auto& a : cyclotomic_polynomial(d)) c.emplace_back(a);
        it = cache.emplace(d, QPolynomial(std::move(c))).first;
    }
    return it->second;
}

}  // namespace detail

/// Exact element of Q(zeta_d), stored as a polynomial in zeta_d reduced modulo Phi_d.
///
/// Rational values are always stored with degree 1, so the same number has one
/// representation no matter which field it was computed in. Arithmetic between
/// two non-rational values of different degree is rejected.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(int value) : Cyclotomic(Rational(value)) {}  // NOLINT
    Cyclotomic(const Rational& value) {                      // NOLINT
        if (sgn(value) != 0) c_.push_back(value);
    }
    Cyclotomic(int d, std::vector<Rational> powers) : d_(d), c_(std::move(powers)) { reduce(); }

    /// zeta_d^k.
    static Cyclotomic root_of_unity(int d, long long k) {
        if (d < 1) throw std::invalid_argument("root_of_unity: d must be positive");
        long long e = ((k % d) + d) % d;
        std::vector<Rational> c(e + 1, Rational(0));
        c[e] = 1;
        return Cyclotomic(d, std::move(c));
    }

    int degree() const { return d_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return d_ == 1; }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
        return c_.empty() ? Rational(0) : c_[0];
    }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        const int d = common_degree(a, b);
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Cyclotomic(d, std::move(c));
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.is_zero() || b.is_zero()) return {};
        const int d = common_degree(a, b);
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Cyclotomic(d, std::move(c));
    }
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
        if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
        auto [g, s, t] = xgcd(QPolynomial(c_), detail::cached_cyclotomic(d_));
        (void)t;
        // Phi_d is irreducible, so a nonzero reduced element is coprime to it.
        return Cyclotomic(d_, s.coeffs());
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.d_ == b.d_ && a.c_ == b.c_; }
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.d_ != b.d_) return a.d_ < b.d_;
        return a.c_ < b.c_;
    }

    /// Polynomial in "zeta", highest power first; rationals as "p/q".
    friend std::string to_string(const Cyclotomic& a) {
        if (a.is_rational()) return a.rational_value().get_str();
        return QPolynomial(a.c_).to_string("zeta");
    }

private:
    static int common_degree(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.d_ == 1) return b.d_;
        if (b.d_ == 1 || a.d_ == b.d_) return a.d_;
        throw std::invalid_argument("cyclotomic values from different fields: " + std::to_string(a.d_) +
                                    " vs " + std::to_string(b.d_));
    }

    void reduce() {
        if (d_ < 1) throw std::invalid_argument("cyclotomic degree must be positive");
        if (d_ > 1) {
            const QPolynomial& phi = detail::cached_cyclotomic(d_);
            if (static_cast<long>(c_.size()) > phi.degree()) c_ = (QPolynomial(std::move(c_)) % phi).coeffs();
        }
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
        if (c_.size() <= 1) d_ = 1;
    }

    int d_ = 1;
    std::vector<Rational> c_;
};

/// chi_k(m) = zeta_d^{km}.
inline Cyclotomic character_value(int d, long long k, long long m) { return Cyclotomic::root_of_unity(d, k * m); }

inline bool is_zero(const Cyclotomic& a) { return a.is_zero(); }

}  // namespace ftl
