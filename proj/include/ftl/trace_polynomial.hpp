#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftl/uscalar.hpp"

namespace ftl {

/// Sparse polynomial in z, x_1, ..., x_{d-1} with coefficients in Q[u, 1/u, 1/(u+1)].
///
/// Exponent vectors have length d: slot 0 is z, slot s is x_s. x_0 is the constant 1.
/// No zero coefficients are stored.
class TracePolynomial {
public:
    using Exponents = std::vector<int>;

    TracePolynomial() = default;
    explicit TracePolynomial(int d) : d_(check_d(d)) {}
    TracePolynomial(int d, const UScalar& constant) : d_(check_d(d)) {
        if (!constant.is_zero()) terms_.emplace(Exponents(d, 0), constant);
    }

    static TracePolynomial z(int d) {
        Exponents e(d, 0);
        e[0] = 1;
        return monomial(d, std::move(e), UScalar(1));
    }
    /// x_s with s taken mod d; x_0 = 1.
    static TracePolynomial x(int d, long long s) {
        const long long k = ((s % d) + d) % d;
        if (k == 0) return TracePolynomial(d, UScalar(1));
        Exponents e(d, 0);
        e[k] = 1;
        return monomial(d, std::move(e), UScalar(1));
    }
    static TracePolynomial monomial(int d, Exponents e, const UScalar& c) {
        TracePolynomial p(d);
        if (static_cast<int>(e.size()) != d) throw std::invalid_argument("exponent vector length must equal d");
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    int d() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, UScalar>& terms() const { return terms_; }
    int z_degree() const {
        int m = 0;
        for (const auto& [e, c] : terms_) m = std::max(m, e[0]);
        return m;
    }

    TracePolynomial& operator+=(const TracePolynomial& o) {
        adopt(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    TracePolynomial& operator-=(const TracePolynomial& o) {
        adopt(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
    friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
    TracePolynomial operator-() const {
        TracePolynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
        TracePolynomial r(a.d_ ? a.d_ : b.d_);
        if (a.d_ && b.d_ && a.d_ != b.d_) throw std::invalid_argument("trace polynomials over different d");
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    TracePolynomial& operator*=(const TracePolynomial& o) { return *this = *this * o; }
    friend TracePolynomial operator*(const UScalar& s, const TracePolynomial& p) {
        TracePolynomial r(p.d_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
        return r;
    }
    /// Adds s * p without forming the intermediate product.
    void add_scaled(const UScalar& s, const TracePolynomial& p) {
        adopt(p);
        for (const auto& [e, c] : p.terms_) add_term(e, s * c);
    }

    friend bool operator==(const TracePolynomial& a, const TracePolynomial& b) {
        return a.terms_ == b.terms_ && (a.d_ == b.d_ || a.is_zero());
    }

    /// Canonical text: terms by ascending total degree, ties broken by descending
    /// exponent vector (z before x_1 before x_2 ...).
    friend std::string to_string(const TracePolynomial& p) {
        if (p.is_zero()) return "0";
        std::vector<const std::pair<const Exponents, UScalar>*> order;
        for (const auto& t : p.terms_) order.push_back(&t);
        std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
            const int da = std::accumulate(a->first.begin(), a->first.end(), 0);
            const int db = std::accumulate(b->first.begin(), b->first.end(), 0);
            if (da != db) return da < db;
            return a->first > b->first;
        });
        std::string out;
        for (const auto* t : order) {
            std::string mono;
            for (std::size_t i = 0; i < t->first.size(); ++i) {
                if (t->first[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += detail::power_text(i == 0 ? "z" : "x_" + std::to_string(i), t->first[i]);
            }
            detail::append_term(out, to_string(t->second), mono);
        }
        return out;
    }

private:
    static int check_d(int d) {
        if (d < 1) throw std::invalid_argument("d must be positive");
        return d;
    }
    void adopt(const TracePolynomial& o) {
        if (d_ == 0) d_ = o.d_;
        else if (o.d_ != 0 && o.d_ != d_) throw std::invalid_argument("trace polynomials over different d");
    }
    void add_term(const Exponents& e, const UScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    int d_ = 0;
    std::map<Exponents, UScalar> terms_;
};

}  // namespace ftl
