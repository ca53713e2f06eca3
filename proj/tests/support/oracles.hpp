#pragma once

// Test-only oracles, independent of the library's evaluation path:
//  * exact big-rational evaluation of the finite product forms (integer
//    arguments, rational parameters);
//  * the Gaussian binomial polynomial via the q-Pascal recurrence;
//  * Euler-product route to the continuous binomial;
//  * plain Richardson finite differences.

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using rat = boost::multiprecision::cpp_rational;

inline rat qpow(const rat& q, long e) {
    rat r = 1;
    const rat base = e >= 0 ? q : rat(1) / q;
    for (long i = 0; i < std::labs(e); ++i) r *= base;
    return r;
}

inline double to_d(const rat& r) { return static_cast<double>(r); }

inline rat q_number_rat(long x, const rat& q) {
    return (rat(1) - qpow(q, x)) / (rat(1) - q);
}

inline rat quantum_number_rat(long x, const rat& q) {
    return (qpow(q, x) - qpow(q, -x)) / (q - rat(1) / q);
}

inline rat aq_number_rat(long x, const rat& a, const rat& q) {
    return (rat(1) - qpow(q, x)) * (rat(1) - a * qpow(q, x)) /
           ((rat(1) - q) * (rat(1) - a * q)) * qpow(q, 1 - x);
}

inline rat bq_number_rat(long x, const rat& b, const rat& q) {
    return (rat(1) - qpow(q, x)) * (rat(1) - b * q) /
           ((rat(1) - q) * (rat(1) - b * qpow(q, x)));
}

inline rat abq_number_rat(long x, const rat& q, const rat& a, const rat& b) {
    const rat qx = qpow(q, x);
    return (rat(1) - qx) * (rat(1) - a * qx) * (rat(1) - b * q) * (rat(1) - a * q / b) /
           ((rat(1) - q) * (rat(1) - a * q) * (rat(1) - b * qx) * (rat(1) - a * qx / b));
}

inline rat abq_weight_rat(long x, const rat& q, const rat& a, const rat& b) {
    const rat qx = qpow(q, x);
    const rat num = (rat(1) - a * q * qx * qx) * (rat(1) - b) * (rat(1) - b * q) *
                    (rat(1) - a / b) * (rat(1) - a * q / b);
    const rat den = (rat(1) - a * q) * (rat(1) - b * qx) * (rat(1) - b * q * qx) *
                    (rat(1) - a * qx / b) * (rat(1) - a * q * qx / b);
    return num / den * qx;
}

inline rat qpoch_fin_rat(const rat& c, const rat& q, long k) {
    rat r = 1;
    rat cq = c;
    for (long j = 0; j < k; ++j) {
        r *= (rat(1) - cq);
        cq *= q;
    }
    return r;
}

/// Finite product form of the a,b;q-binomial coefficient (integer x, k).
inline rat abq_binomial_rat(long x, long k, const rat& q, const rat& a, const rat& b) {
    const rat num = qpoch_fin_rat(qpow(q, 1 + x - k), q, k) *
                    qpoch_fin_rat(a * qpow(q, 1 + x - k), q, k) *
                    qpoch_fin_rat(b * qpow(q, 1 + k), q, k) *
                    qpoch_fin_rat(a * qpow(q, 1 - k) / b, q, k);
    const rat den = qpoch_fin_rat(q, q, k) * qpoch_fin_rat(a * q, q, k) *
                    qpoch_fin_rat(b * qpow(q, 1 + x), q, k) *
                    qpoch_fin_rat(a * qpow(q, 1 + x - 2 * k) / b, q, k);
    return num / den;
}

inline rat aq_binomial_rat(long x, long k, const rat& a, const rat& q) {
    const long xk = x - k;
    const rat num = qpoch_fin_rat(qpow(q, 1 + k), q, xk) *
                    qpoch_fin_rat(a * qpow(q, 1 + k), q, xk);
    const rat den = qpoch_fin_rat(q, q, xk) * qpoch_fin_rat(a * q, q, xk);
    return num / den * qpow(q, k * (k - x));
}

/// Gaussian binomial polynomial evaluated at rational q, via the recurrence
/// [n,k] = [n-1,k-1] + q^k [n-1,k].
inline rat gauss_binomial_rat(long n, long k, const rat& q) {
    if (k < 0 || k > n) return 0;
    std::vector<rat> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                qpow(q, j) * row[static_cast<std::size_t>(j)];
    return row[static_cast<std::size_t>(k)];
}

/// Euler-product route: binom(x,k) = prod_{j>=1} (k+j)(x-k+j)/(j(x+j)),
/// truncated with a midpoint-rule tail estimate.  Needs x > 0.
inline double euler_product_binomial(double x, double k, long terms) {
    double prod = 1.0;
    for (long j = 1; j <= terms; ++j) {
        const double jd = static_cast<double>(j);
        prod *= (k + jd) * (x - k + jd) / (jd * (x + jd));
    }
    const double c = k * (x - k);
    const double tail = (c / x) * std::log1p(x / (static_cast<double>(terms) + 0.5));
    return prod * std::exp(tail);
}

template <class F>
double central_diff(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
double richardson_diff(F&& f, double x, double h) {
    const double d1 = central_diff(f, x, h);
    const double d2 = central_diff(f, x, h / 2);
    return (4.0 * d2 - d1) / 3.0;
}

/// |v - ref| <= tol * max(1, |ref|).
inline bool close_rel(double v, double ref, double tol) {
    return std::abs(v - ref) <= tol * std::max(1.0, std::abs(ref));
}

/// Deterministic uniform stream for property-style tests.
struct rng {
    std::uint64_t state;
    explicit rng(std::uint64_t seed) : state(seed) {}
    double uniform() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return double((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }
};

}  // namespace oracle
