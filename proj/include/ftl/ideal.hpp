#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftl/yokonuma.hpp"

namespace ftl {

inline constexpr long long kRankSizeGuard = 2000;

/// Row echelon span over Q(u), rows kept primitive in Q[u] (fraction free).
///
/// Each row is keyed by its pivot, the smallest basis word in its support.
class EchelonSpan {
public:
    using Row = std::map<BasisWord, QPolynomial>;

    explicit EchelonSpan(const AlgebraContext& ctx) : ctx_(ctx) {}

    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the span; an empty result means v lies in the span.
    Row reduce(const AlgebraElement& v) const { return reduce_row(to_row(v)); }
    bool contains(const AlgebraElement& v) const { return reduce(v).empty(); }

    /// Adds v if independent; returns the new reduced row as an element, or nothing.
    std::optional<AlgebraElement> insert(const AlgebraElement& v) {
        Row r = reduce(v);
        if (r.empty()) return std::nullopt;
        AlgebraElement e = to_element(r);
        const BasisWord pivot = r.begin()->first;
        rows_.emplace(pivot, std::move(r));
        return e;
    }

private:
    // Clears denominators: u^low p(u) / (u+1)^den times u^-minlow (u+1)^maxden.
    Row to_row(const AlgebraElement& v) const {
        if (!(v.context() == ctx_)) throw std::invalid_argument("element from a different algebra");
        Row r;
        if (v.is_zero()) return r;
        int min_low = 0, max_den = 0;
        bool first = true;
        for (const auto& [w, c] : v.terms()) {
            min_low = first ? c.low() : std::min(min_low, c.low());
            max_den = std::max(max_den, c.den());
            first = false;
        }
        const QPolynomial u_plus_one(std::vector<Rational>{Rational(1), Rational(1)});
        for (const auto& [w, c] : v.terms()) {
            QPolynomial p = c.numerator_polynomial() * QPolynomial::monomial(Rational(1), c.low() - min_low);
            for (int k = c.den(); k < max_den; ++k) p = p * u_plus_one;
            r.emplace(w, std::move(p));
        }
        make_primitive(r);
        return r;
    }

    static AlgebraElement to_element_in(const AlgebraContext& ctx, const Row& r) {
        AlgebraElement e(ctx);
        for (const auto& [w, p] : r) e.add_term(w, UScalar(0, p.coeffs()));
        return e;
    }
    AlgebraElement to_element(const Row& r) const { return to_element_in(ctx_, r); }

    // Divides by the (monic) gcd of all entries, then makes the pivot entry monic.
    static void make_primitive(Row& r) {
        if (r.empty()) return;
        QPolynomial g;
        for (const auto& [w, p] : r) {
            g = gcd(g, p);
            if (g.degree() == 0) break;
        }
        if (g.degree() > 0)
            for (auto& [w, p] : r) p = exact_div(p, g);
        const Rational scale = 1 / r.begin()->second.leading();
        if (scale != 1)
            for (auto& [w, p] : r) p = p.scaled(scale);
    }

    Row reduce_row(Row v) const {
        while (!v.empty()) {
            const auto it = rows_.find(v.begin()->first);
            if (it == rows_.end()) break;
            const Row& row = it->second;
            const QPolynomial a = row.begin()->second;  // pivot of row
            const QPolynomial b = v.begin()->second;    // entry of v at the same column
            const QPolynomial g = gcd(a, b);
            const QPolynomial fa = exact_div(a, g), fb = exact_div(b, g);
            Row next;
            for (auto& [w, p] : v) {
                QPolynomial q = p * fa;
                if (!(q == QPolynomial())) next.emplace(w, std::move(q));
            }
            for (const auto& [w, p] : row) {
                QPolynomial q = p * fb;
                auto [jt, inserted] = next.try_emplace(w, QPolynomial());
                jt->second = jt->second - q;
                if (jt->second.is_zero()) next.erase(jt);
            }
            make_primitive(next);
            v = std::move(next);
        }
        return v;
    }

    AlgebraContext ctx_;
    std::map<BasisWord, Row> rows_;
};

/// The two-sided ideal generated by a set of elements: the smallest subspace containing them
/// and closed under left and right multiplication by every t_j and g_i.
class TwoSidedIdeal {
public:
    TwoSidedIdeal(const AlgebraContext& ctx, const std::vector<AlgebraElement>& generators) : span_(ctx) {
        if (ctx.dimension() > kRankSizeGuard)
            throw std::length_error("algebra dimension " + std::to_string(ctx.dimension()) + " exceeds the rank guard");
        std::vector<AlgebraElement> mult;
        for (int j = 1; j <= ctx.n; ++j) mult.push_back(AlgebraElement::t(ctx, j, 1));
        for (int i = 1; i < ctx.n; ++i) mult.push_back(AlgebraElement::g(ctx, i));
        std::vector<AlgebraElement> pending;
        for (const auto& gen : generators)
            if (auto e = span_.insert(gen)) pending.push_back(std::move(*e));
        while (!pending.empty()) {
            AlgebraElement v = std::move(pending.back());
            pending.pop_back();
            for (const auto& m : mult) {
                if (auto e = span_.insert(m * v)) pending.push_back(std::move(*e));
                if (auto e = span_.insert(v * m)) pending.push_back(std::move(*e));
            }
        }
    }

    std::size_t rank() const { return span_.rank(); }
    bool contains(const AlgebraElement& v) const { return span_.contains(v); }

private:
    EchelonSpan span_;
};

enum class AlgebraTag { y, ftl, ctl, ytl };
enum class DimensionMethod { formula, rank };

inline std::string to_string(AlgebraTag t) {
    switch (t) {
        case AlgebraTag::y: return "Y";
        case AlgebraTag::ftl: return "FTL";
        case AlgebraTag::ctl: return "CTL";
        default: return "YTL";
    }
}

struct DimensionReport {
    AlgebraTag algebra = AlgebraTag::y;
    int d = 1;
    int n = 1;
    Integer dimension;
    DimensionMethod method = DimensionMethod::formula;
    std::size_t ideal_rank = 0;  // rank method only
};

inline Integer catalan(int k) {
    Integer c = 1;
    for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

/// Sum over compositions n = k_1 + ... + k_d of (n!/(k_1!...k_d!))^2 c_{k_1} ... c_{k_d}.
inline DimensionReport ftl_dimension_formula(int d, int n) {
    if (d < 1 || n < 1) throw std::invalid_argument("d and n must be >= 1");
    std::vector<Integer> fact(n + 1, 1);
    for (int k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
    Integer total = 0;
    std::vector<int> parts(d, 0);
    // Depth-first over compositions.
    auto walk = [&](auto&& self, int slot, int left) -> void {
        if (slot == d - 1) {
            parts[slot] = left;
            Integer multinomial = fact[n], cat = 1;
            for (int k : parts) {
                multinomial /= fact[k];
                cat *= catalan(k);
            }
            total += multinomial * multinomial * cat;
            return;
        }
        for (int k = 0; k <= left; ++k) {
            parts[slot] = k;
            self(self, slot + 1, left - k);
        }
    };
    walk(walk, 0, n);
    return {AlgebraTag::ftl, d, n, total, DimensionMethod::formula, 0};
}

inline AlgebraElement ideal_generator(const AlgebraContext& ctx, SteinbergKind kind) {
    return kind == SteinbergKind::g ? steinberg_g(ctx) : kind == SteinbergKind::r ? steinberg_r(ctx) : steinberg_c(ctx);
}

/// Quotient dimension d^n n! - rank of the principal ideal generated by g_{1,2}, r_{1,2} or c_{1,2}.
inline DimensionReport ideal_dimension(int d, int n, SteinbergKind kind) {
    const AlgebraContext ctx(d, n);
    if (ctx.dimension() > kRankSizeGuard)
        throw std::length_error("algebra dimension " + std::to_string(ctx.dimension()) + " exceeds the rank guard");
    const TwoSidedIdeal ideal(ctx, {ideal_generator(ctx, kind)});
    const AlgebraTag tag = kind == SteinbergKind::g ? AlgebraTag::ytl : kind == SteinbergKind::r ? AlgebraTag::ftl : AlgebraTag::ctl;
    return {tag, d, n, Integer(static_cast<long>(ctx.dimension())) - static_cast<long>(ideal.rank()), DimensionMethod::rank, ideal.rank()};
}

inline DimensionReport algebra_dimension(AlgebraTag tag, int d, int n, DimensionMethod method) {
    if (tag == AlgebraTag::y) {
        const AlgebraContext ctx(d, n);
        return {tag, d, n, Integer(static_cast<long>(ctx.dimension())), method, 0};
    }
    if (method == DimensionMethod::formula) {
        if (tag != AlgebraTag::ftl) throw std::invalid_argument("a closed formula is known only for FTL");
        return ftl_dimension_formula(d, n);
    }
    const SteinbergKind kind = tag == AlgebraTag::ftl ? SteinbergKind::r : tag == AlgebraTag::ctl ? SteinbergKind::c : SteinbergKind::g;
    return ideal_dimension(d, n, kind);
}

}  // namespace ftl
