#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftl/cyclotomic.hpp"
#include "ftl/rational_function.hpp"

namespace ftl {

/// Function Z/dZ -> F, identified with sum_k y(k) t^k in the group algebra of C_d.
template <class F>
class CdFunction {
public:
    CdFunction() = default;
    explicit CdFunction(int d) : values_(check(d), F(0)) {}
    explicit CdFunction(std::vector<F> values) : values_(std::move(values)) { check(size()); }

    /// delta_a.
    static CdFunction delta(int d, long long a) {
        CdFunction y(d);
        y[a] = F(1);
        return y;
    }
    /// i_a = sum_k chi_a(k) t^k.
    static CdFunction character(int d, long long a) {
        CdFunction y(d);
        for (int k = 0; k < d; ++k) y.values_[k] = F(character_value(d, a, k));
        return y;
    }

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<F>& values() const { return values_; }
    const F& operator[](long long k) const { return values_[wrap(k)]; }
    F& operator[](long long k) { return values_[wrap(k)]; }

    friend CdFunction operator+(const CdFunction& a, const CdFunction& b) {
        a.same(b);
        CdFunction r = a;
        for (int k = 0; k < a.size(); ++k) r.values_[k] = a.values_[k] + b.values_[k];
        return r;
    }
    friend CdFunction operator-(const CdFunction& a, const CdFunction& b) {
        a.same(b);
        CdFunction r = a;
        for (int k = 0; k < a.size(); ++k) r.values_[k] = a.values_[k] - b.values_[k];
        return r;
    }
    CdFunction scaled(const F& s) const {
        CdFunction r = *this;
        for (auto& v : r.values_) v = v * s;
        return r;
    }
    friend bool operator==(const CdFunction& a, const CdFunction& b) { return a.values_ == b.values_; }

    friend std::string to_string(const CdFunction& y) {
        std::string s = "[";
        for (int k = 0; k < y.size(); ++k) {
            if (k) s += ", ";
            s += to_string(y.values_[k]);
        }
        return s + "]";
    }

private:
    static int check(int d) {
        if (d < 1) throw std::invalid_argument("CdFunction needs d >= 1");
        return d;
    }
    std::size_t wrap(long long k) const {
        const long long d = size();
        return static_cast<std::size_t>(((k % d) + d) % d);
    }
    void same(const CdFunction& o) const {
        if (size() != o.size()) throw std::invalid_argument("CdFunction size mismatch");
    }

    std::vector<F> values_;
};

/// (y * y')(r) = sum_s y(s) y'(r - s).
template <class F>
CdFunction<F> convolve(const CdFunction<F>& y, const CdFunction<F>& yp) {
    if (y.size() != yp.size()) throw std::invalid_argument("CdFunction size mismatch");
    const int d = y.size();
    CdFunction<F> r(d);
    for (int s = 0; s < d; ++s) {
        if (y[s] == F(0)) continue;
        for (int t = 0; t < d; ++t) r[s + t] = r[s + t] + y[s] * yp[t];
    }
    return r;
}

template <class F>
CdFunction<F> pointwise(const CdFunction<F>& y, const CdFunction<F>& yp) {
    if (y.size() != yp.size()) throw std::invalid_argument("CdFunction size mismatch");
    CdFunction<F> r(y.size());
    for (int k = 0; k < y.size(); ++k) r[k] = y[k] * yp[k];
    return r;
}

/// yhat(s) = (y * i_s)(0) = sum_r y(r) chi_s(-r).
template <class F>
CdFunction<F> fourier(const CdFunction<F>& y) {
    const int d = y.size();
    CdFunction<F> r(d);
    for (int s = 0; s < d; ++s) {
        F acc(0);
        for (int k = 0; k < d; ++k)
            if (!(y[k] == F(0))) acc = acc + y[k] * F(character_value(d, s, d - k));
        r[s] = acc;
    }
    return r;
}

/// E = (1/d) sum_s x_s x_{d-s}.
template <class F>
F shifted_e(const CdFunction<F>& x, long long m) {
    const int d = x.size();
    F acc(0);
    for (int s = 0; s < d; ++s) acc = acc + x[m + s] * x[d - s];
    return acc * F(Rational(1, d));
}

/// E^{(m)} = x_m E for 1 <= m <= d-1.
template <class F>
bool esystem_verify(const CdFunction<F>& x) {
    const F e = shifted_e(x, 0);
    for (int m = 1; m < x.size(); ++m)
        if (!(shifted_e(x, m) == x[m] * e)) return false;
    return true;
}

struct ESystemSolution {
    std::vector<int> D;
    CdFunction<Cyclotomic> x;
    Rational E;
};

inline std::vector<int> subset_from_mask(int d, unsigned mask) {
    std::vector<int> out;
    for (int k = 0; k < d; ++k)
        if (mask & (1u << k)) out.push_back(k);
    return out;
}

/// x_D = (1/|D|) sum_{m in D} i_m.
inline CdFunction<Cyclotomic> esystem_solution_vector(int d, const std::vector<int>& D) {
    if (D.empty()) throw std::invalid_argument("D must be non-empty");
    CdFunction<Cyclotomic> x(d);
    for (int m : D) x = x + CdFunction<Cyclotomic>::character(d, m);
    return x.scaled(Cyclotomic(Rational(1, static_cast<long>(D.size()))));
}

/// One solution per non-empty D, in ascending bitmask order.
inline std::vector<ESystemSolution> solve_esystem(int d) {
    if (d < 1 || d > 20) throw std::invalid_argument("solve_esystem supports 1 <= d <= 20");
    std::vector<ESystemSolution> out;
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        auto D = subset_from_mask(d, mask);
        auto x = esystem_solution_vector(d, D);
        out.push_back({D, x, Rational(1, static_cast<long>(D.size()))});
    }
    return out;
}

inline std::string set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
    return out + "}";
}

/// "D={0,1}: x=[1, 0] E=1/2".
inline std::string to_string(const ESystemSolution& s) {
    return "D=" + set_text(s.D) + ": x=" + to_string(s.x) + " E=" + s.E.get_str();
}

struct SupSplitParams {
    std::vector<int> sup1;
    std::vector<int> sup2;
    CdFunction<CyclotomicRF> x;
    CyclotomicRF z;
};

/// z = -1/(|S1| + (u+1)|S2|), x_k = -z (sum_{S1} chi(km) + (u+1) sum_{S2} chi(km)).
inline SupSplitParams sup_split_params(int d, std::vector<int> sup1, std::vector<int> sup2) {
    std::sort(sup1.begin(), sup1.end());
    std::sort(sup2.begin(), sup2.end());
    for (int m : sup1)
        if (std::binary_search(sup2.begin(), sup2.end(), m)) throw std::invalid_argument("Sup_1 and Sup_2 overlap");
    if (sup1.empty() && sup2.empty()) throw std::invalid_argument("Sup_1 and Sup_2 are both empty");
    for (int m : sup1)
        if (m < 0 || m >= d) throw std::out_of_range("support element outside Z/dZ");
    for (int m : sup2)
        if (m < 0 || m >= d) throw std::out_of_range("support element outside Z/dZ");

    const CyclotomicRF u1 = CyclotomicRF::u() + CyclotomicRF(1);
    const CyclotomicRF z = -(CyclotomicRF(static_cast<int>(sup1.size())) + u1 * CyclotomicRF(static_cast<int>(sup2.size())))
                                .inverse();
    CdFunction<CyclotomicRF> x(d);
    for (int k = 0; k < d; ++k) {
        Cyclotomic s1(0), s2(0);
        for (int m : sup1) s1 = s1 + character_value(d, k, m);
        for (int m : sup2) s2 = s2 + character_value(d, k, m);
        x[k] = -z * (CyclotomicRF(s1) + u1 * CyclotomicRF(s2));
    }
    return {std::move(sup1), std::move(sup2), std::move(x), z};
}

}  // namespace ftl
