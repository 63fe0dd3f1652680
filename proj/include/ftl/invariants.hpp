#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftl/braid.hpp"
#include "ftl/half_power.hpp"
#include "ftl/hecke.hpp"
#include "ftl/trace.hpp"

namespace ftl {

enum class InvariantKind { gamma, delta, vartheta, theta, homflypt, jones };

inline std::string to_string(InvariantKind k) {
    switch (k) {
        case InvariantKind::gamma: return "gamma";
        case InvariantKind::delta: return "delta";
        case InvariantKind::vartheta: return "vartheta";
        case InvariantKind::theta: return "theta";
        case InvariantKind::homflypt: return "homflypt";
        default: return "jones";
    }
}

/// Either a rational function in v (w = u) or a Laurent polynomial in W = sqrt(w).
struct InvariantValue {
    InvariantKind kind = InvariantKind::vartheta;
    int d = 1;
    std::vector<int> D;
    bool general_w = false;
    CyclotomicRF value;  // w = u
    WLaurent laurent;    // general w
    long long epsilon = 0;

    std::string text() const { return general_w ? to_string(laurent) : to_string(value); }
    /// Parity of the exponent sum; in general-w mode every W power has this parity.
    std::string grading() const { return (epsilon % 2 == 0) ? "even" : "odd"; }
};

namespace detail {

inline void check_subset(int d, const std::vector<int>& D) {
    if (D.empty()) throw std::invalid_argument("D must be non-empty");
    for (std::size_t k = 0; k < D.size(); ++k) {
        if (D[k] < 0 || D[k] >= d) throw std::out_of_range("D must be a subset of Z/dZ");
        if (k && D[k] <= D[k - 1]) throw std::invalid_argument("D must be strictly increasing");
    }
}

// Engines shared by the pipelines of one thread, keyed by d.
inline TraceEngine& shared_engine(int d) {
    thread_local std::map<int, std::unique_ptr<TraceEngine>> engines;
    auto& slot = engines[d];
    if (!slot) slot = std::make_unique<TraceEngine>(d);
    return *slot;
}
inline OcneanuTrace& shared_ocneanu() {
    thread_local OcneanuTrace tau;
    return tau;
}

/// sum_j c_j W^{eps - j} P^{n-1-j} with P = -(1 - v^2 W^2)|D| / (W (1 - v^2)).
/// Uses P z = 1/W, which holds for z = -(1-u)/((1-wu)|D|).
inline WLaurent normalize_general(int n, long long eps, const ZPolynomial& tr_z, int size_d) {
    const CyclotomicRF one_minus_u = CyclotomicRF(1) - CyclotomicRF::u();
    const CyclotomicRF k = CyclotomicRF(size_d) / one_minus_u;
    const WLaurent P = WLaurent::monomial(-1, -k) + WLaurent::monomial(1, k * CyclotomicRF::u());
    if (tr_z.degree() > n - 1) throw std::logic_error("trace has z-degree above n-1");
    WLaurent r;
    for (long j = 0; j <= tr_z.degree(); ++j) {
        if (tr_z.coeff(j).is_zero()) continue;
        r = r + WLaurent::monomial(static_cast<int>(eps - j), tr_z.coeff(j)) * P.pow(n - 1 - static_cast<int>(j));
    }
    return r;
}

/// (-(1+u)|D|/v)^{n-1} v^eps tr.
inline CyclotomicRF normalize_at_u(int n, long long eps, const CyclotomicRF& tr, int size_d) {
    const CyclotomicRF prefactor = -(CyclotomicRF::u() + CyclotomicRF(1)) * CyclotomicRF(size_d) / CyclotomicRF::v();
    return prefactor.pow(n - 1) * CyclotomicRF::v_power(static_cast<int>(eps)) * tr;
}

inline InvariantValue yokonuma_pipeline(InvariantKind kind, const FramedBraidWord& word, int d, const std::vector<int>& D,
                                        bool general_w) {
    check_subset(d, D);
    InvariantValue out{kind, d, D, general_w, {}, {}, word.exponent_sum()};
    const AlgebraContext ctx(d, word.n);
    const TracePolynomial tr = shared_engine(d)(to_algebra(word, ctx));
    const TraceParams params = esystem_params(d, D);
    const int size_d = static_cast<int>(D.size());
    if (general_w) out.laurent = normalize_general(word.n, out.epsilon, specialize_x(tr, params.x), size_d);
    else out.value = normalize_at_u(word.n, out.epsilon, params(tr), size_d);
    return out;
}

inline TracePolynomial ocneanu_of(const FramedBraidWord& word) { return shared_ocneanu()(to_hecke(word)); }

}  // namespace detail

/// Gamma_D: framed; general_w keeps W = sqrt(w) formal, otherwise w = u and the result is vartheta_D.
inline InvariantValue gamma_invariant(const FramedBraidWord& word, int d, const std::vector<int>& D, bool general_w) {
    return detail::yokonuma_pipeline(general_w ? InvariantKind::gamma : InvariantKind::vartheta, word, d, D, general_w);
}

/// Delta_D: classical words only.
inline InvariantValue delta_invariant(const FramedBraidWord& word, int d, const std::vector<int>& D, bool general_w) {
    if (!word.is_classical()) throw std::invalid_argument("delta/theta take zero-framed braids");
    return detail::yokonuma_pipeline(general_w ? InvariantKind::delta : InvariantKind::theta, word, d, D, general_w);
}

inline InvariantValue vartheta_invariant(const FramedBraidWord& word, int d, const std::vector<int>& D) {
    return gamma_invariant(word, d, D, false);
}
inline InvariantValue theta_invariant(const FramedBraidWord& word, int d, const std::vector<int>& D) {
    return delta_invariant(word, d, D, false);
}

/// P(lambda, u) through H_n(u) and the Ocneanu trace, W = sqrt(lambda).
inline InvariantValue homflypt(const FramedBraidWord& word) {
    InvariantValue out{InvariantKind::homflypt, 1, {0}, true, {}, {}, word.exponent_sum()};
    CdFunction<CyclotomicRF> x(1);
    x[0] = CyclotomicRF(1);
    out.laurent = detail::normalize_general(word.n, out.epsilon, specialize_x(detail::ocneanu_of(word), x), 1);
    return out;
}

/// V = P(u, u): Ocneanu trace at zeta = -1/(u+1).
inline InvariantValue jones(const FramedBraidWord& word) {
    InvariantValue out{InvariantKind::jones, 1, {0}, false, {}, {}, word.exponent_sum()};
    CdFunction<CyclotomicRF> x(1);
    x[0] = CyclotomicRF(1);
    const CyclotomicRF zeta = -(CyclotomicRF::u() + CyclotomicRF(1)).inverse();
    out.value = detail::normalize_at_u(word.n, out.epsilon, specialize(detail::ocneanu_of(word), zeta, x), 1);
    return out;
}

inline InvariantValue evaluate_invariant(InvariantKind kind, const FramedBraidWord& word, int d, const std::vector<int>& D) {
    switch (kind) {
        case InvariantKind::gamma: return gamma_invariant(word, d, D, true);
        case InvariantKind::delta: return delta_invariant(word, d, D, true);
        case InvariantKind::vartheta: return vartheta_invariant(word, d, D);
        case InvariantKind::theta: return theta_invariant(word, d, D);
        case InvariantKind::homflypt: return homflypt(word);
        default: return jones(word);
    }
}

/// Compares the CTL-side value (E-system x_D, z = -1/((u+1)|D|), CTL condition checked) with the
/// FTL-side value (Sup split with Sup_1 empty, FTL condition checked).
inline bool ctl_invariant_equality(const FramedBraidWord& word, int d, const std::vector<int>& D) {
    detail::check_subset(d, D);
    const TraceParams ctl_params = esystem_params(d, D);
    const TraceParams ftl_params = to_params(sup_split_params(d, {}, D));
    if (!check_ctl_pass(d, ctl_params).passed) return false;
    if (!check_ftl_pass(d, ftl_params).passed) return false;
    const AlgebraContext ctx(d, word.n);
    const TracePolynomial tr = detail::shared_engine(d)(to_algebra(word, ctx));
    const int size_d = static_cast<int>(D.size());
    const CyclotomicRF ctl_value = detail::normalize_at_u(word.n, word.exponent_sum(), ctl_params(tr), size_d);
    const CyclotomicRF ftl_value = detail::normalize_at_u(word.n, word.exponent_sum(), ftl_params(tr), size_d);
    return ctl_value == ftl_value;
}

}  // namespace ftl
