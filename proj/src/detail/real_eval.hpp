#pragma once

// Internal templated evaluators.  Real is double for the standard path and
// long double for the high-precision confirmation pass; products are always
// accumulated in compensated (two-term) form.

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <mutex>
#include <utility>

#include "ellq/errors.hpp"
#include "ellq/precision.hpp"

namespace ellq::detail {

inline constexpr std::size_t max_product_terms = 2'000'000;

/// Compensated running product: keeps the rounding error of every
/// multiplication in a correction term, roughly doubling the accumulator's
/// working precision.
template <class Real>
struct product_acc {
    Real hi{1};
    Real lo{0};

    void mul(Real f) {
        const Real p = hi * f;
        const Real err = std::fma(hi, f, -p);
        lo = lo * f + err;
        hi = p;
    }
    Real value() const { return hi + lo; }
};

template <class Real>
Real pow_r(Real base, Real expo) {
    return std::pow(base, expo);
}

/// (a;p)_inf, truncated at the smallest N with |a| p^N / (1-p) below tail.
template <class Real>
Real qpoch_inf_r(Real a, Real p, Real tail) {
    if (p == Real(0)) return Real(1) - a;
    if (!(p > Real(0)) || !(p < Real(1)))
        throw domain_error("q_pochhammer_inf: base must lie in [0,1)");
    product_acc<Real> acc;
    Real apj = a;
    const Real lim = tail * (Real(1) - p);
    for (std::size_t j = 0; j < max_product_terms; ++j) {
        acc.mul(Real(1) - apj);
        apj *= p;
        if (std::abs(apj) < lim) return acc.value();
    }
    throw domain_error("q_pochhammer_inf: truncation did not converge");
}

template <class Real>
Real theta_r(Real x, Real p, Real tail) {
    if (x == Real(0)) throw domain_error("theta: argument must be nonzero");
    if (!(p >= Real(0)) || !(p < Real(1)))
        throw domain_error("theta: nome must lie in [0,1)");
    if (p == Real(0)) return Real(1) - x;
    return qpoch_inf_r<Real>(x, p, tail) * qpoch_inf_r<Real>(p / x, p, tail);
}

/// (a;q)_k with real index k.
template <class Real>
Real qpoch_r(Real a, Real q, Real k, Real tail) {
    if (!(q > Real(0)) || !(q < Real(1)))
        throw domain_error("q_pochhammer: q must lie in (0,1)");
    const Real den = qpoch_inf_r<Real>(a * pow_r(q, k), q, tail);
    if (den == Real(0)) throw pole_error("q_pochhammer: denominator factor vanishes");
    return qpoch_inf_r<Real>(a, q, tail) / den;
}

template <class Real>
Real theta_poch_r(Real a, Real q, Real p, int k, Real tail) {
    if (k < 0) throw domain_error("theta_pochhammer: k must be a non-negative integer");
    product_acc<Real> acc;
    Real aqj = a;
    for (int j = 0; j < k; ++j) {
        acc.mul(theta_r<Real>(aqj, p, tail));
        aqj *= q;
    }
    return acc.value();
}

// ---------------------------------------------------------------------------
// numbers and weights

template <class Real>
Real q_number_r(Real x, Real q) {
    if (q == Real(1)) throw domain_error("q_number: q must differ from 1");
    return (Real(1) - pow_r(q, x)) / (Real(1) - q);
}

template <class Real>
Real quantum_number_r(Real x, Real q) {
    if (q == Real(0) || q == Real(1) || q == Real(-1))
        throw domain_error("quantum_number: q must avoid {0,1,-1}");
    return (pow_r(q, x) - pow_r(q, -x)) / (q - Real(1) / q);
}

template <class Real>
Real aq_number_r(Real x, Real a, Real q) {
    if (!(q > Real(0)) || !(q < Real(1)))
        throw domain_error("aq_number: q must lie in (0,1)");
    if (Real(1) - a * q == Real(0)) throw pole_error("aq_number: 1 - aq vanishes");
    const Real qx = pow_r(q, x);
    return (Real(1) - qx) * (Real(1) - a * qx) / ((Real(1) - q) * (Real(1) - a * q)) *
           pow_r(q, Real(1) - x);
}

template <class Real>
Real bq_number_r(Real x, Real b, Real q) {
    if (!(q > Real(0)) || !(q < Real(1)))
        throw domain_error("bq_number: q must lie in (0,1)");
    const Real qx = pow_r(q, x);
    const Real den = (Real(1) - q) * (Real(1) - b * qx);
    if (Real(1) - b * qx == Real(0)) throw pole_error("bq_number: 1 - b q^x vanishes");
    return (Real(1) - qx) * (Real(1) - b * q) / den;
}

template <class Real>
Real abq_number_r(Real x, Real q, Real a, Real b) {
    if (b == Real(0))
        throw domain_error("abq_number: b must be nonzero; use the one-parameter forms");
    const Real qx = pow_r(q, x);
    const Real d1 = Real(1) - q;
    const Real d2 = Real(1) - a * q;
    const Real d3 = Real(1) - b * qx;
    const Real d4 = Real(1) - a * qx / b;
    if (d1 == Real(0) || d2 == Real(0) || d3 == Real(0) || d4 == Real(0))
        throw pole_error("abq_number: denominator factor vanishes");
    return (Real(1) - qx) * (Real(1) - a * qx) * (Real(1) - b * q) * (Real(1) - a * q / b) /
           (d1 * d2 * d3 * d4);
}

template <class Real>
Real abq_weight_r(Real x, Real q, Real a, Real b) {
    if (b == Real(0)) throw domain_error("abq_weight: b must be nonzero");
    const Real qx = pow_r(q, x);
    const Real num = (Real(1) - a * q * qx * qx) * (Real(1) - b) * (Real(1) - b * q) *
                     (Real(1) - a / b) * (Real(1) - a * q / b);
    const Real d1 = Real(1) - a * q;
    const Real d2 = Real(1) - b * qx;
    const Real d3 = Real(1) - b * q * qx;
    const Real d4 = Real(1) - a * qx / b;
    const Real d5 = Real(1) - a * q * qx / b;
    if (d1 == Real(0) || d2 == Real(0) || d3 == Real(0) || d4 == Real(0) || d5 == Real(0))
        throw pole_error("abq_weight: denominator factor vanishes");
    return num / (d1 * d2 * d3 * d4 * d5) * qx;
}

// ---------------------------------------------------------------------------
// f-kernel of the rational Turan argument

template <class Real>
Real f_kernel_r(Real u, Real x, Real r, Real q) {
    const Real qx = pow_r(q, x);
    const Real den = Real(1) - u * qx;
    if (den == Real(0)) throw pole_error("f_kernel: 1 - u q^x vanishes");
    return (Real(1) - u * pow_r(q, x + r)) * (Real(1) - u * pow_r(q, x - r)) / (den * den);
}

template <class Real>
Real f_kernel_d1_r(Real u, Real x, Real r, Real q) {
    const Real qx = pow_r(q, x);
    const Real den = Real(1) - u * qx;
    if (den == Real(0)) throw pole_error("f_kernel_d1: 1 - u q^x vanishes");
    const Real c = Real(1) - pow_r(q, r);
    return -c * c * (Real(1) + u * qx) / (den * den * den) * pow_r(q, x - r);
}

template <class Real>
Real f_kernel_d2_r(Real u, Real x, Real r, Real q) {
    const Real qx = pow_r(q, x);
    const Real den = Real(1) - u * qx;
    if (den == Real(0)) throw pole_error("f_kernel_d2: 1 - u q^x vanishes");
    const Real c = Real(1) - pow_r(q, r);
    const Real d2 = den * den;
    return Real(-2) * c * c * (Real(2) + u * qx) / (d2 * d2) * pow_r(q, Real(2) * x - r);
}

// ---------------------------------------------------------------------------
// binomials

template <class Real>
Real q_binomial_r(Real x, Real k, Real q, Real tail) {
    const Real xk = x - k;
    return qpoch_r<Real>(pow_r(q, Real(1) + k), q, xk, tail) /
           qpoch_r<Real>(q, q, xk, tail);
}

template <class Real>
Real aq_binomial_r(Real x, Real k, Real a, Real q, Real tail) {
    const Real xk = x - k;
    const Real num = qpoch_r<Real>(pow_r(q, Real(1) + k), q, xk, tail) *
                     qpoch_r<Real>(a * pow_r(q, Real(1) + k), q, xk, tail);
    const Real den = qpoch_r<Real>(q, q, xk, tail) * qpoch_r<Real>(a * q, q, xk, tail);
    if (den == Real(0)) throw pole_error("aq_binomial: denominator vanishes");
    return num / den * pow_r(q, k * (k - x));
}

template <class Real>
Real bq_binomial_r(Real x, Real k, Real b, Real q, Real tail) {
    const Real xk = x - k;
    const Real num = qpoch_r<Real>(pow_r(q, Real(1) + k), q, xk, tail) *
                     qpoch_r<Real>(b * pow_r(q, Real(1) + k), q, xk, tail);
    const Real den = qpoch_r<Real>(q, q, xk, tail) *
                     qpoch_r<Real>(b * pow_r(q, Real(1) + Real(2) * k), q, xk, tail);
    if (den == Real(0)) throw pole_error("bq_binomial: denominator vanishes");
    return num / den;
}

/// Finite (k-factor) form shared by the a,b;q- and elliptic binomials;
/// p = 0 gives the plain q-level coefficient.
template <class Real>
Real abq_binomial_finite_r(Real x, int k, Real q, Real a, Real b, Real p, Real tail) {
    if (b == Real(0)) throw domain_error("abq_binomial: b must be nonzero");
    product_acc<Real> num;
    product_acc<Real> den;
    for (int j = 0; j < k; ++j) {
        const Real jr = Real(j);
        num.mul(theta_r<Real>(pow_r(q, Real(1) + x - Real(k) + jr), p, tail));
        num.mul(theta_r<Real>(a * pow_r(q, Real(1) + x - Real(k) + jr), p, tail));
        num.mul(theta_r<Real>(b * pow_r(q, Real(1) + Real(k) + jr), p, tail));
        num.mul(theta_r<Real>(a * pow_r(q, Real(1) - Real(k) + jr) / b, p, tail));
        den.mul(theta_r<Real>(pow_r(q, Real(1) + jr), p, tail));
        den.mul(theta_r<Real>(a * pow_r(q, Real(1) + jr), p, tail));
        den.mul(theta_r<Real>(b * pow_r(q, Real(1) + x + jr), p, tail));
        den.mul(theta_r<Real>(a * pow_r(q, Real(1) + x - Real(2) * Real(k) + jr) / b, p, tail));
    }
    const Real d = den.value();
    if (d == Real(0)) throw pole_error("abq_binomial: denominator theta factor vanishes");
    return num.value() / d;
}

/// Ratio-of-infinite-products form, valid for real k.
template <class Real>
Real abq_binomial_ratio_r(Real x, Real k, Real q, Real a, Real b, Real tail) {
    if (b == Real(0)) throw domain_error("abq_binomial: b must be nonzero");
    const Real xk = x - k;
    const Real num = qpoch_r<Real>(pow_r(q, Real(1) + k), q, xk, tail) *
                     qpoch_r<Real>(a * pow_r(q, Real(1) + k), q, xk, tail) *
                     qpoch_r<Real>(b * pow_r(q, Real(1) + k), q, xk, tail) *
                     qpoch_r<Real>(a * pow_r(q, Real(1) - k) / b, q, xk, tail);
    const Real den = qpoch_r<Real>(q, q, xk, tail) *
                     qpoch_r<Real>(a * q, q, xk, tail) *
                     qpoch_r<Real>(b * pow_r(q, Real(1) + Real(2) * k), q, xk, tail) *
                     qpoch_r<Real>(a * q / b, q, xk, tail);
    if (den == Real(0)) throw pole_error("abq_binomial: denominator vanishes");
    return num / den;
}

inline bool is_nonneg_integer(double k) {
    return k >= 0.0 && k == std::nearbyint(k) && k < 1e9;
}

template <class Real>
Real abq_binomial_r(Real x, Real k, Real q, Real a, Real b, Real tail) {
    if (is_nonneg_integer(static_cast<double>(k)))
        return abq_binomial_finite_r<Real>(x, static_cast<int>(k), q, a, b, Real(0), tail);
    return abq_binomial_ratio_r<Real>(x, k, q, a, b, tail);
}

// ---------------------------------------------------------------------------
// elliptic numbers, weights, binomials

template <class Real>
Real elliptic_number_r(Real x, Real q, Real a, Real b, Real p, Real tail) {
    if (b == Real(0)) throw domain_error("elliptic_number: b must be nonzero");
    const Real qx = pow_r(q, x);
    const Real num = theta_r<Real>(qx, p, tail) * theta_r<Real>(a * qx, p, tail) *
                     theta_r<Real>(b * q, p, tail) * theta_r<Real>(a * q / b, p, tail);
    const Real den = theta_r<Real>(q, p, tail) * theta_r<Real>(a * q, p, tail) *
                     theta_r<Real>(b * qx, p, tail) * theta_r<Real>(a * qx / b, p, tail);
    if (den == Real(0)) throw pole_error("elliptic_number: denominator theta vanishes");
    return num / den;
}

template <class Real>
Real elliptic_weight_r(Real x, Real q, Real a, Real b, Real p, Real tail) {
    if (b == Real(0)) throw domain_error("elliptic_weight: b must be nonzero");
    const Real qx = pow_r(q, x);
    const Real num = theta_r<Real>(a * q * qx * qx, p, tail) * theta_r<Real>(b, p, tail) *
                     theta_r<Real>(b * q, p, tail) * theta_r<Real>(a / b, p, tail) *
                     theta_r<Real>(a * q / b, p, tail);
    const Real den = theta_r<Real>(a * q, p, tail) * theta_r<Real>(b * qx, p, tail) *
                     theta_r<Real>(b * q * qx, p, tail) * theta_r<Real>(a * qx / b, p, tail) *
                     theta_r<Real>(a * q * qx / b, p, tail);
    if (den == Real(0)) throw pole_error("elliptic_weight: denominator theta vanishes");
    return num / den * qx;
}

template <class Real>
Real elliptic_binomial_r(Real x, int k, Real q, Real a, Real b, Real p, Real tail) {
    if (k < 0) throw domain_error("elliptic_binomial: k must be a non-negative integer");
    return abq_binomial_finite_r<Real>(x, k, q, a, b, p, tail);
}

// ---------------------------------------------------------------------------
// theta kernel

template <class Real>
struct pp_sq_cache {
    static Real get(Real p, Real tail) {
        if (p == Real(0)) return Real(1);
        static std::mutex mu;
        static std::map<std::pair<Real, Real>, Real> memo;
        std::scoped_lock lock(mu);
        auto [it, inserted] = memo.try_emplace({p, tail}, Real(0));
        if (inserted) {
            const Real v = qpoch_inf_r<Real>(p, p, tail);
            it->second = v * v;
        }
        return it->second;
    }
};

template <class Real>
Real theta_kernel_r(Real u, Real x, Real r, Real q, Real p, Real tail) {
    const Real den = theta_r<Real>(u * pow_r(q, x), p, tail);
    if (den == Real(0)) throw pole_error("theta_kernel: theta(u q^x) vanishes");
    return theta_r<Real>(u * pow_r(q, x + r), p, tail) *
           theta_r<Real>(u * pow_r(q, x - r), p, tail) / (den * den);
}

template <class Real>
Real theta_kernel_d1_r(Real u, Real x, Real r, Real q, Real p, Real tail) {
    const Real den = theta_r<Real>(u * pow_r(q, x), p, tail);
    if (den == Real(0)) throw pole_error("theta_kernel_d1: theta(u q^x) vanishes");
    const Real tq = theta_r<Real>(pow_r(q, r), p, tail);
    const Real den2 = den * den;
    return -pow_r(q, x - r) * pp_sq_cache<Real>::get(p, tail) * tq * tq *
           theta_r<Real>(u * u * pow_r(q, Real(2) * x), p, tail) / (den2 * den2);
}

// ---------------------------------------------------------------------------
// sigma machinery

template <class Real>
Real eta_series_r(Real p, Real tail, int min_terms) {
    Real s{0};
    Real pn = p;
    for (int n = 1; n < 1'000'000; ++n) {
        const Real d = Real(1) - pn;
        const Real term = pn / (d * d);
        s += term;
        if (n >= min_terms && std::abs(term) < tail * std::max(std::abs(s), Real(1e-30)))
            break;
        pn *= p;
    }
    const Real pi = Real(3.14159265358979323846264338327950288L);
    return pi * pi / Real(6) * (Real(1) - Real(24) * s);
}

template <class Real>
Real sigma_r(Real t, Real p, Real eta, Real pp_sq, Real tail) {
    const Real pi = Real(3.14159265358979323846264338327950288L);
    const Real two_pi_t = Real(2) * pi * t;
    if (std::abs(two_pi_t) > Real(700))
        throw domain_error("sigma: e^{2 pi i z} not representable");
    const Real u = std::exp(-two_pi_t);
    return std::exp(-eta * t * t + pi * t) * theta_r<Real>(u, p, tail) /
           (Real(2) * pi * pp_sq);
}

}  // namespace ellq::detail
