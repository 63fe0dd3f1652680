#pragma once

#include <stdexcept>
#include <vector>

#include "ftl/harmonic.hpp"
#include "ftl/rational_function.hpp"
#include "ftl/trace_polynomial.hpp"

namespace ftl {

/// Polynomial in z over Q(zeta_d)(v).
using ZPolynomial = Polynomial<CyclotomicRF>;

namespace detail {

inline CyclotomicRF power_cached(std::vector<CyclotomicRF>& cache, const CyclotomicRF& base, int k) {
    if (cache.empty()) cache.push_back(CyclotomicRF(1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base);
    return cache[k];
}

inline void check_x(const TracePolynomial& p, const CdFunction<CyclotomicRF>& x) {
    if (!p.is_zero() && x.size() != p.d()) throw std::invalid_argument("x vector length must equal d");
    if (!(x[0] == CyclotomicRF(1))) throw std::invalid_argument("x_0 must be 1");
}

}  // namespace detail

/// Substitutes x_s and keeps z: sum_j c_j z^j.
inline ZPolynomial specialize_x(const TracePolynomial& p, const CdFunction<CyclotomicRF>& x) {
    detail::check_x(p, x);
    std::vector<std::vector<CyclotomicRF>> powers(x.size());
    std::vector<CyclotomicRF> coeffs;
    for (const auto& [e, c] : p.terms()) {
        CyclotomicRF term = to_rational_function(c);
        for (int s = 1; s < x.size(); ++s)
            if (e[s] > 0) term *= detail::power_cached(powers[s], x[s], e[s]);
        if (static_cast<int>(coeffs.size()) <= e[0]) coeffs.resize(e[0] + 1);
        coeffs[e[0]] += term;
    }
    return ZPolynomial(std::move(coeffs));
}

/// Full substitution of z and x_1 .. x_{d-1}; x[0] must be 1.
inline CyclotomicRF specialize(const TracePolynomial& p, const CyclotomicRF& z, const CdFunction<CyclotomicRF>& x) {
    const ZPolynomial q = specialize_x(p, x);
    CyclotomicRF acc;
    for (long k = q.degree(); k >= 0; --k) acc = acc * z + q.coeff(k);
    return acc;
}

/// x_values holds x_1 .. x_{d-1}.
inline CyclotomicRF specialize(const TracePolynomial& p, const CyclotomicRF& z, const std::vector<Cyclotomic>& x_values) {
    CdFunction<CyclotomicRF> x(static_cast<int>(x_values.size()) + 1);
    x[0] = CyclotomicRF(1);
    for (std::size_t s = 0; s < x_values.size(); ++s) x[s + 1] = CyclotomicRF(x_values[s]);
    return specialize(p, z, x);
}

inline CdFunction<CyclotomicRF> lift(const CdFunction<Cyclotomic>& x) {
    CdFunction<CyclotomicRF> r(x.size());
    for (int k = 0; k < x.size(); ++k) r[k] = CyclotomicRF(x[k]);
    return r;
}

/// Specialized trace parameters: z and x with x_0 = 1.
struct TraceParams {
    CyclotomicRF z;
    CdFunction<CyclotomicRF> x;

    int d() const { return x.size(); }
    CyclotomicRF operator()(const TracePolynomial& p) const { return specialize(p, z, x); }
};

/// x from the E-system solution for D, z = -1/((u+1)|D|).
inline TraceParams esystem_params(int d, const std::vector<int>& D) {
    const CyclotomicRF u1 = CyclotomicRF::u() + CyclotomicRF(1);
    return {-(u1 * CyclotomicRF(static_cast<int>(D.size()))).inverse(), lift(esystem_solution_vector(d, D))};
}

inline TraceParams to_params(const SupSplitParams& s) { return {s.z, s.x}; }

}  // namespace ftl
