#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftl/permutation.hpp"
#include "ftl/uscalar.hpp"

namespace ftl {

inline constexpr int kMaxStrands = 8;

/// Y_{d,n}(u): framing modulus d and strand count n.
struct AlgebraContext {
    int d = 1;
    int n = 1;

    AlgebraContext() = default;
    AlgebraContext(int d_, int n_) : d(d_), n(n_) {
        if (d < 1) throw std::invalid_argument("framing modulus d must be >= 1");
        if (n < 1 || n > kMaxStrands) throw std::invalid_argument("strand count n must be in [1, 8]");
    }
    friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;

    /// d^n * n!.
    long long dimension() const {
        long long dim = 1;
        for (int k = 0; k < n; ++k) dim *= d;
        for (int k = 2; k <= n; ++k) dim *= k;
        return dim;
    }
};

/// Standard basis word t_1^{a_1} ... t_n^{a_n} g_w.
/// Orders by framing vector, then by permutation images.
struct BasisWord {
    std::uint8_t n = 0;
    std::array<std::uint8_t, kMaxStrands> framing{};
    std::array<std::uint8_t, kMaxStrands> perm{};  // 1-based images

    static BasisWord identity(int n) {
        BasisWord b;
        b.n = static_cast<std::uint8_t>(n);
        for (int k = 0; k < n; ++k) b.perm[k] = static_cast<std::uint8_t>(k + 1);
        return b;
    }
    static BasisWord from(const std::vector<int>& framings, const Permutation& w) {
        BasisWord b = identity(w.size());
        if (static_cast<int>(framings.size()) != w.size()) throw std::invalid_argument("framing length mismatch");
        for (int k = 0; k < w.size(); ++k) {
            b.framing[k] = static_cast<std::uint8_t>(framings[k]);
            b.perm[k] = static_cast<std::uint8_t>(w(k + 1));
        }
        return b;
    }

    Permutation permutation() const { return Permutation(std::vector<int>(perm.begin(), perm.begin() + n)); }
    std::vector<int> framings() const { return std::vector<int>(framing.begin(), framing.begin() + n); }
    bool braid_is_identity() const {
        for (int k = 0; k < n; ++k)
            if (perm[k] != k + 1) return false;
        return true;
    }

    friend auto operator<=>(const BasisWord&, const BasisWord&) = default;
    friend bool operator==(const BasisWord&, const BasisWord&) = default;

    /// "t_1^2*t_3*g(2,1,3)"; the unit word renders as "1".
    friend std::string to_string(const BasisWord& b) {
        std::string s;
        for (int k = 0; k < b.n; ++k) {
            if (b.framing[k] == 0) continue;
            if (!s.empty()) s += "*";
            s += "t_" + std::to_string(k + 1);
            if (b.framing[k] > 1) s += "^" + std::to_string(b.framing[k]);
        }
        if (!b.braid_is_identity()) {
            if (!s.empty()) s += "*";
            s += "g" + to_string(b.permutation());
        }
        return s.empty() ? "1" : s;
    }
};

/// All d^n n! standard basis words in canonical order.
inline std::vector<BasisWord> standard_basis(const AlgebraContext& ctx) {
    std::vector<BasisWord> out;
    const auto perms = all_permutations(ctx.n);
    std::vector<int> a(ctx.n, 0);
    for (;;) {
        for (const auto& w : perms) out.push_back(BasisWord::from(a, w));
        int k = ctx.n - 1;
        while (k >= 0 && a[k] == ctx.d - 1) a[k--] = 0;
        if (k < 0) break;
        ++a[k];
    }
    return out;
}

/// Finite linear combination of standard basis words of Y_{d,n}(u).
class AlgebraElement {
public:
    using Terms = std::map<BasisWord, UScalar>;

    AlgebraElement() = default;
    explicit AlgebraElement(const AlgebraContext& ctx) : ctx_(ctx) {}
    AlgebraElement(const AlgebraContext& ctx, const BasisWord& w, const UScalar& c = UScalar(1)) : ctx_(ctx) {
        if (w.n != ctx.n) throw std::invalid_argument("basis word strand count mismatch");
        add_term(w, c);
    }

    static AlgebraElement unit(const AlgebraContext& ctx) { return {ctx, BasisWord::identity(ctx.n)}; }
    static AlgebraElement scalar(const AlgebraContext& ctx, const UScalar& c) {
        return {ctx, BasisWord::identity(ctx.n), c};
    }
    /// t_j^k.
    static AlgebraElement t(const AlgebraContext& ctx, int j, long long k = 1) {
        return unit(ctx).mul_by_framing(j, k);
    }
    /// g_i.
    static AlgebraElement g(const AlgebraContext& ctx, int i) { return unit(ctx).mul_by_generator(i); }
    /// g_i^{-1} = g_i + (u^{-1} - 1) e_i + (u^{-1} - 1) e_i g_i.
    static AlgebraElement g_inverse(const AlgebraContext& ctx, int i) {
        return unit(ctx).mul_by_inverse_generator(i);
    }
    /// g_w for a permutation of S_n.
    static AlgebraElement g_perm(const AlgebraContext& ctx, const Permutation& w) {
        return {ctx, BasisWord::from(std::vector<int>(ctx.n, 0), w)};
    }

    const AlgebraContext& context() const { return ctx_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    UScalar coefficient(const BasisWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? UScalar() : it->second;
    }

    void add_term(const BasisWord& w, const UScalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check_same(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check_same(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    AlgebraElement operator-() const { return scaled(UScalar(-1)); }
    AlgebraElement scaled(const UScalar& s) const {
        AlgebraElement r(ctx_);
        if (s.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * s);
        return r;
    }
    friend AlgebraElement operator*(const UScalar& s, const AlgebraElement& a) { return a.scaled(s); }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }

    /// Right multiplication by t_j^k: t^a g_w t_j^k = t^{a + k e_{w(j)}} g_w.
    AlgebraElement mul_by_framing(int j, long long k) const {
        if (j < 1 || j > ctx_.n) throw std::out_of_range("framing index out of range");
        const int step = static_cast<int>(((k % ctx_.d) + ctx_.d) % ctx_.d);
        if (step == 0) return *this;
        AlgebraElement r(ctx_);
        for (const auto& [w, c] : terms_) {
            BasisWord x = w;
            const int slot = x.perm[j - 1] - 1;
            x.framing[slot] = static_cast<std::uint8_t>((x.framing[slot] + step) % ctx_.d);
            r.terms_.emplace(x, c);
        }
        return r;
    }

    /// Right multiplication by t_1^{c_1} ... t_n^{c_n}.
    AlgebraElement mul_by_framings(const std::array<std::uint8_t, kMaxStrands>& c) const {
        AlgebraElement r(ctx_);
        for (const auto& [w, coef] : terms_) {
            BasisWord x = w;
            for (int j = 0; j < ctx_.n; ++j) {
                if (c[j] == 0) continue;
                const int slot = x.perm[j] - 1;
                x.framing[slot] = static_cast<std::uint8_t>((x.framing[slot] + c[j]) % ctx_.d);
            }
            r.terms_.emplace(x, coef);
        }
        return r;
    }

    /// Right multiplication by g_i.
    ///
    /// If l(w s_i) > l(w): t^a g_w g_i = t^a g_{w s_i}. Otherwise, with v = w s_i,
    /// t^a g_w g_i = t^a g_v + (u-1) t^a e_{v(i),v(i+1)} g_v + (u-1) t^a e_{v(i),v(i+1)} g_w,
    /// where e_{p,q} = (1/d) sum_s t_p^s t_q^{-s}.
    AlgebraElement mul_by_generator(int i) const {
        check_generator(i);
        AlgebraElement r(ctx_);
        const UScalar k = (UScalar::u() - UScalar(1)) * UScalar(Rational(1, ctx_.d));
        for (const auto& [w, c] : terms_) {
            BasisWord x = w;
            std::swap(x.perm[i - 1], x.perm[i]);
            if (w.perm[i - 1] < w.perm[i]) {
                r.add_term(x, c);
                continue;
            }
            r.add_term(x, c);
            const UScalar ck = c * k;
            const int p = x.perm[i - 1] - 1, q = x.perm[i] - 1;
            for (int s = 0; s < ctx_.d; ++s) {
                BasisWord yv = x, yw = w;
                yv.framing[p] = yw.framing[p] = static_cast<std::uint8_t>((w.framing[p] + s) % ctx_.d);
                yv.framing[q] = yw.framing[q] = static_cast<std::uint8_t>((w.framing[q] + ctx_.d - s) % ctx_.d);
                r.add_term(yv, ck);
                r.add_term(yw, ck);
            }
        }
        return r;
    }

    /// Right multiplication by e_{p,q} (positions p != q).
    AlgebraElement mul_by_idempotent(int p, int q) const {
        AlgebraElement r(ctx_);
        const UScalar inv_d = UScalar(Rational(1, ctx_.d));
        for (int s = 0; s < ctx_.d; ++s) {
            std::array<std::uint8_t, kMaxStrands> c{};
            c[p - 1] = static_cast<std::uint8_t>(s);
            c[q - 1] = static_cast<std::uint8_t>((ctx_.d - s) % ctx_.d);
            r += mul_by_framings(c).scaled(inv_d);
        }
        return r;
    }

    /// Right multiplication by g_i^{-1}.
    AlgebraElement mul_by_inverse_generator(int i) const {
        check_generator(i);
        const UScalar k = UScalar::u_power(-1) - UScalar(1);
        AlgebraElement e = mul_by_idempotent(i, i + 1);
        return mul_by_generator(i) + e.scaled(k) + e.mul_by_generator(i).scaled(k);
    }

    /// Right multiplication by g_w, letter by letter along a reduced word.
    AlgebraElement mul_by_braid(const BasisWord& w) const {
        AlgebraElement r = *this;
        for (int i : w.permutation().reduced_word()) r = r.mul_by_generator(i);
        return r;
    }

    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_same(b);
        // Group b by braid part: a * sum_c coef t^c g_w = (sum_c coef a t^c) g_w.
        std::map<std::array<std::uint8_t, kMaxStrands>, AlgebraElement> by_perm;
        for (const auto& [w, c] : b.terms_) {
            auto [it, inserted] = by_perm.try_emplace(w.perm, AlgebraElement(a.ctx_));
            it->second += a.mul_by_framings(w.framing).scaled(c);
        }
        AlgebraElement r(a.ctx_);
        for (const auto& [perm, partial] : by_perm) {
            BasisWord braid = BasisWord::identity(a.ctx_.n);
            braid.perm = perm;
            r += partial.mul_by_braid(braid);
        }
        return r;
    }
    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    AlgebraElement pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power of an algebra element");
        AlgebraElement r = unit(ctx_);
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// The same element viewed in Y_{d,m}, m >= n.
    AlgebraElement embedded(int m) const {
        AlgebraContext target(ctx_.d, m);
        if (m < ctx_.n) throw std::invalid_argument("cannot embed into fewer strands");
        AlgebraElement r(target);
        for (const auto& [w, c] : terms_) {
            BasisWord x = w;
            x.n = static_cast<std::uint8_t>(m);
            for (int k = ctx_.n; k < m; ++k) x.perm[k] = static_cast<std::uint8_t>(k + 1);
            r.terms_.emplace(x, c);
        }
        return r;
    }

    /// Terms in canonical word order, "coeff*word" joined by " + ".
    friend std::string to_string(const AlgebraElement& a) {
        if (a.is_zero()) return "0";
        std::string out;
        for (const auto& [w, c] : a.terms_) {
            std::string word = to_string(w);
            detail::append_term(out, to_string(c), word == "1" ? "" : word);
        }
        return out;
    }

private:
    void check_same(const AlgebraElement& o) const {
        if (!(ctx_ == o.ctx_)) throw std::invalid_argument("algebra elements from different contexts");
    }
    void check_generator(int i) const {
        if (i < 1 || i >= ctx_.n) throw std::out_of_range("generator index out of range");
    }

    AlgebraContext ctx_;
    Terms terms_;
};

/// e_{i,j} = (1/d) sum_s t_i^s t_j^{d-s}.
inline AlgebraElement idempotent(const AlgebraContext& ctx, int i, int j) {
    if (i < 1 || j > ctx.n || i == j || j < 1 || i > ctx.n) throw std::out_of_range("idempotent index out of range");
    return AlgebraElement::unit(ctx).mul_by_idempotent(i, j);
}

/// e_i^{(m)} = t_i^m e_i.
inline AlgebraElement shifted_idempotent(const AlgebraContext& ctx, int i, int m) {
    if (i < 1 || i >= ctx.n) throw std::out_of_range("idempotent index out of range");
    return AlgebraElement::t(ctx, i, m) * idempotent(ctx, i, i + 1);
}

/// (g_i + 1)/(u + 1).
inline AlgebraElement ell_generator(const AlgebraContext& ctx, int i) {
    return (AlgebraElement::g(ctx, i) + AlgebraElement::unit(ctx)).scaled(UScalar::inv_u_plus_one());
}

namespace detail {

inline void require_steinberg(const AlgebraContext& ctx, int i) {
    if (ctx.n < 3) throw std::invalid_argument("Steinberg elements need n >= 3");
    if (i < 1 || i > ctx.n - 2) throw std::out_of_range("Steinberg index out of range");
}

// Elements of <s_i, s_{i+1}> as permutations of S_n.
inline std::vector<Permutation> parabolic_pair(const AlgebraContext& ctx, int i) {
    const std::vector<std::vector<int>> words = {{}, {i}, {i + 1}, {i, i + 1}, {i + 1, i}, {i, i + 1, i}};
    std::vector<Permutation> out;
    for (const auto& w : words) out.push_back(Permutation::from_word(ctx.n, w));
    return out;
}

}  // namespace detail

/// g_{i,i+1} = sum over w in <s_i, s_{i+1}> of g_w.
inline AlgebraElement steinberg_g(const AlgebraContext& ctx, int i = 1) {
    detail::require_steinberg(ctx, i);
    AlgebraElement r(ctx);
    for (const auto& w : detail::parabolic_pair(ctx, i)) r += AlgebraElement::g_perm(ctx, w);
    return r;
}

/// Sum of g_x over H_{i,i+1} = <t_i t_{i+1}^{-1}, t_{i+1} t_{i+2}^{-1}> x| <s_i, s_{i+1}>,
/// i.e. t_i^a t_{i+1}^{b-a} t_{i+2}^{-b} g_w over all a, b, w. Equals d^2 r_{i,i+1}.
inline AlgebraElement group_sum_h(const AlgebraContext& ctx, int i = 1) {
    detail::require_steinberg(ctx, i);
    AlgebraElement r(ctx);
    const int d = ctx.d;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            std::vector<int> f(ctx.n, 0);
            f[i - 1] = a;
            f[i] = ((b - a) % d + d) % d;
            f[i + 1] = (d - b) % d;
            for (const auto& w : detail::parabolic_pair(ctx, i)) r.add_term(BasisWord::from(f, w), UScalar(1));
        }
    }
    return r;
}

/// Sum of g_x over C_{i,i+1} = <t_i, t_{i+1}, t_{i+2}> x| <s_i, s_{i+1}>. Equals d^2 c_{i,i+1}.
inline AlgebraElement group_sum_c(const AlgebraContext& ctx, int i = 1) {
    detail::require_steinberg(ctx, i);
    AlgebraElement r(ctx);
    const int d = ctx.d;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                std::vector<int> f(ctx.n, 0);
                f[i - 1] = a;
                f[i] = b;
                f[i + 1] = c;
                for (const auto& w : detail::parabolic_pair(ctx, i)) r.add_term(BasisWord::from(f, w), UScalar(1));
            }
    return r;
}

/// r_{i,i+1} = e_i e_{i+1} g_{i,i+1}.
inline AlgebraElement steinberg_r(const AlgebraContext& ctx, int i = 1) {
    detail::require_steinberg(ctx, i);
    return idempotent(ctx, i, i + 1) * idempotent(ctx, i + 1, i + 2) * steinberg_g(ctx, i);
}

/// c_{i,i+1} = (sum_k t_i^k) r_{i,i+1}.
inline AlgebraElement steinberg_c(const AlgebraContext& ctx, int i = 1) {
    AlgebraElement r = steinberg_r(ctx, i);
    AlgebraElement sum_t(ctx);
    for (int k = 0; k < ctx.d; ++k) sum_t += AlgebraElement::t(ctx, i, k);
    return sum_t * r;
}

struct SteinbergElements {
    AlgebraElement g12;
    AlgebraElement r12;
    AlgebraElement c12;
};

inline SteinbergElements steinberg_elements(const AlgebraContext& ctx) {
    return {steinberg_g(ctx, 1), steinberg_r(ctx, 1), steinberg_c(ctx, 1)};
}

/// (g_1 ... g_{n-1})^k and its inverse.
inline AlgebraElement coxeter_power(const AlgebraContext& ctx, int k) {
    AlgebraElement r = AlgebraElement::unit(ctx);
    for (int rep = 0; rep < k; ++rep)
        for (int i = 1; i < ctx.n; ++i) r = r.mul_by_generator(i);
    return r;
}
inline AlgebraElement coxeter_power_inverse(const AlgebraContext& ctx, int k) {
    AlgebraElement r = AlgebraElement::unit(ctx);
    for (int rep = 0; rep < k; ++rep)
        for (int i = ctx.n - 1; i >= 1; --i) r = r.mul_by_inverse_generator(i);
    return r;
}

enum class SteinbergKind { g, r, c };

/// (g_1 ... g_{n-1})^{i-1} x_{1,2} (g_1 ... g_{n-1})^{-(i-1)} for x in {g, r, c}.
inline AlgebraElement conjugate_steinberg(const AlgebraContext& ctx, int i, SteinbergKind kind = SteinbergKind::r) {
    detail::require_steinberg(ctx, i);
    AlgebraElement base = kind == SteinbergKind::g   ? steinberg_g(ctx, 1)
                          : kind == SteinbergKind::r ? steinberg_r(ctx, 1)
                                                     : steinberg_c(ctx, 1);
    return coxeter_power(ctx, i - 1) * base * coxeter_power_inverse(ctx, i - 1);
}

}  // namespace ftl
