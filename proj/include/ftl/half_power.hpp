#pragma once

#include <map>
#include <string>

#include "ftl/rational_function.hpp"

namespace ftl {

/// Laurent polynomial in a formal symbol W over Q(zeta_d)(v). Canonical: no zero coefficients.
class WLaurent {
public:
    WLaurent() = default;
    WLaurent(const CyclotomicRF& c) { add(0, c); }  // NOLINT
    static WLaurent monomial(int k, const CyclotomicRF& c = CyclotomicRF(1)) {
        WLaurent r;
        r.add(k, c);
        return r;
    }

    const std::map<int, CyclotomicRF>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CyclotomicRF coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? CyclotomicRF() : it->second;
    }

    friend WLaurent operator+(WLaurent a, const WLaurent& b) {
        for (const auto& [k, c] : b.terms_) a.add(k, c);
        return a;
    }
    friend WLaurent operator-(WLaurent a, const WLaurent& b) {
        for (const auto& [k, c] : b.terms_) a.add(k, -c);
        return a;
    }
    friend WLaurent operator*(const WLaurent& a, const WLaurent& b) {
        WLaurent r;
        for (const auto& [i, x] : a.terms_)
            for (const auto& [j, y] : b.terms_) r.add(i + j, x * y);
        return r;
    }
    WLaurent pow(int k) const {
        WLaurent r(CyclotomicRF(1));
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }
    friend bool operator==(const WLaurent& a, const WLaurent& b) { return a.terms_ == b.terms_; }

    /// Substitutes W := value.
    CyclotomicRF evaluate(const CyclotomicRF& value) const {
        CyclotomicRF acc;
        for (const auto& [k, c] : terms_) acc += c * value.pow(k);
        return acc;
    }

    /// Terms by descending W power, e.g. "(v^2)*W^3 + (-1)*W^-1".
    friend std::string to_string(const WLaurent& a) {
        if (a.is_zero()) return "0";
        std::string out;
        for (auto it = a.terms_.rbegin(); it != a.terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + to_string(it->second) + ")";
            if (it->first != 0) out += "*W" + (it->first == 1 ? std::string() : "^" + std::to_string(it->first));
        }
        return out;
    }

private:
    void add(int k, const CyclotomicRF& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<int, CyclotomicRF> terms_;
};

/// even + odd * W in the ring Q(zeta_d)(v)[W]/(W^2 - w).
class HalfPowerValue {
public:
    explicit HalfPowerValue(CyclotomicRF w, CyclotomicRF even = {}, CyclotomicRF odd = {})
        : w_(std::move(w)), even_(std::move(even)), odd_(std::move(odd)) {
        if (w_.is_zero()) throw std::invalid_argument("HalfPowerValue needs w != 0");
    }
    /// Reduces a Laurent polynomial in W using W^2 = w.
    static HalfPowerValue reduce(const WLaurent& value, const CyclotomicRF& w) {
        HalfPowerValue r(w);
        for (const auto& [k, c] : value.terms()) {
            const int half = k >= 0 ? k / 2 : -((-k + 1) / 2);
            const CyclotomicRF scaled = c * w.pow(half);
            if (k - 2 * half == 0) r.even_ += scaled;
            else r.odd_ += scaled;
        }
        return r;
    }

    const CyclotomicRF& w() const { return w_; }
    const CyclotomicRF& even() const { return even_; }
    const CyclotomicRF& odd() const { return odd_; }

    friend HalfPowerValue operator+(const HalfPowerValue& a, const HalfPowerValue& b) {
        a.same(b);
        return HalfPowerValue(a.w_, a.even_ + b.even_, a.odd_ + b.odd_);
    }
    friend HalfPowerValue operator*(const HalfPowerValue& a, const HalfPowerValue& b) {
        a.same(b);
        return HalfPowerValue(a.w_, a.even_ * b.even_ + a.odd_ * b.odd_ * a.w_, a.even_ * b.odd_ + a.odd_ * b.even_);
    }
    friend bool operator==(const HalfPowerValue& a, const HalfPowerValue& b) {
        return a.w_ == b.w_ && a.even_ == b.even_ && a.odd_ == b.odd_;
    }

    friend std::string to_string(const HalfPowerValue& a) {
        return "(" + to_string(a.even_) + ") + (" + to_string(a.odd_) + ")*W";
    }

private:
    void same(const HalfPowerValue& o) const {
        if (!(w_ == o.w_)) throw std::invalid_argument("HalfPowerValue over different w");
    }

    CyclotomicRF w_;
    CyclotomicRF even_;
    CyclotomicRF odd_;
};

}  // namespace ftl
