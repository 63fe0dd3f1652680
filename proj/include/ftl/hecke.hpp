#pragma once

#include <map>
#include <stdexcept>

#include "ftl/permutation.hpp"
#include "ftl/trace_polynomial.hpp"
#include "ftl/uscalar.hpp"

namespace ftl {

/// Element of the Iwahori-Hecke algebra H_n(u) in the basis h_w, built from the left rule
/// h_i h_w = h_{s_i w} if l(s_i w) > l(w), else (u-1) h_w + u h_{s_i w}.
class HeckeElement {
public:
    explicit HeckeElement(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("H_n needs n >= 1");
    }
    static HeckeElement unit(int n) {
        HeckeElement h(n);
        h.add(Permutation::identity(n), UScalar(1));
        return h;
    }

    int n() const { return n_; }
    const std::map<Permutation, UScalar>& terms() const { return terms_; }

    /// h_i * this.
    HeckeElement left_generator(int i) const {
        if (i < 1 || i >= n_) throw std::out_of_range("generator index out of range");
        HeckeElement r(n_);
        const Permutation s = Permutation::simple(n_, i);
        for (const auto& [w, c] : terms_) {
            const Permutation sw = s * w;
            if (sw.length() > w.length()) {
                r.add(sw, c);
            } else {
                r.add(w, c * (UScalar::u() - UScalar(1)));
                r.add(sw, c * UScalar::u());
            }
        }
        return r;
    }
    /// h_i^{-1} * this, with h_i^{-1} = u^{-1} h_i + (u^{-1} - 1).
    HeckeElement left_inverse_generator(int i) const {
        HeckeElement r = left_generator(i).scaled(UScalar::u_power(-1));
        r += scaled(UScalar::u_power(-1) - UScalar(1));
        return r;
    }
    HeckeElement scaled(const UScalar& s) const {
        HeckeElement r(n_);
        for (const auto& [w, c] : terms_) r.add(w, c * s);
        return r;
    }
    HeckeElement& operator+=(const HeckeElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }

    void add(const Permutation& w, const UScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

private:
    int n_;
    std::map<Permutation, UScalar> terms_;
};

/// Ocneanu trace tau on H_n(u) with tau(a h_{n-1}) = zeta tau(a); values as polynomials in zeta
/// (stored in the z slot of a d = 1 TracePolynomial).
class OcneanuTrace {
public:
    TracePolynomial operator()(const HeckeElement& h) {
        TracePolynomial r(1);
        for (const auto& [w, c] : h.terms()) r.add_scaled(c, word(w));
        return r;
    }

    const TracePolynomial& word(const Permutation& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        TracePolynomial value = compute(w);
        return memo_.emplace(w, std::move(value)).first->second;
    }

private:
    TracePolynomial compute(const Permutation& w) {
        const int n = w.size();
        if (n == 1) return TracePolynomial(1, UScalar(1));
        const auto [head, j] = coset_decompose(w);
        if (!j) return word(head);
        // h_w = h_{w'} h_{n-1} b with b = h_{n-2} ... h_j; tau = zeta tau(b h_{w'}).
        HeckeElement prod(n - 1);
        prod.add(head, UScalar(1));
        for (int i = *j; i <= n - 2; ++i) prod = prod.left_generator(i);
        return TracePolynomial::z(1) * (*this)(prod);
    }

    std::map<Permutation, TracePolynomial> memo_;
};

}  // namespace ftl
