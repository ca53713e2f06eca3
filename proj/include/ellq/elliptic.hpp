#pragma once

#include <cmath>

#include "ellq/precision.hpp"
#include "ellq/qnumbers.hpp"

namespace ellq {

/// Elliptic number [x]_{a,b;q,p} = theta(q^x, aq^x, bq, aq/b; p) /
/// theta(q, aq, bq^x, aq^x/b; p).  At p = 0 this evaluates the exact same
/// factors as abq_number.
double elliptic_number(double x, const ParamSet& params, const PrecisionPolicy& pol = {});

/// Elliptic weight; ten theta factors times q^x.  W(0) = 1.
double elliptic_weight(double x, const ParamSet& params, const PrecisionPolicy& pol = {});

/// Elliptic binomial coefficient, non-negative integer k, ratio of theta
/// shifted factorials.  p = 0 reduces to the finite form of abq_binomial.
double elliptic_binomial(double x, int k, const ParamSet& params, const PrecisionPolicy& pol = {});

/// Parameters of the theta kernel
///   f(u) = theta(uq^{x+r}, uq^{x-r}; p) / theta(uq^x; p)^2
/// on [lower(), upper()] = [p q^{-x-r}, q^{r-x}].
///
/// f vanishes at both endpoints and is unimodal: it increases on
/// (lower(), stationary_point()) and decreases on (stationary_point(),
/// upper()), where stationary_point() = sqrt(p) q^{-x}.  The closed-form
/// derivative is negative exactly on the decreasing side.
struct ThetaKernelSpec {
    double x;
    double r;
    double q;
    Nome p;

    ThetaKernelSpec(double x_, double r_, double q_, Nome p_)
        : x(x_), r(r_), q(q_), p(p_) {
        if (!(q > 0.0) || !(q < 1.0)) throw domain_error("theta kernel: q must lie in (0,1)");
        if (!(r > 0.0) || !(x >= r)) throw domain_error("theta kernel: need x >= r > 0");
        if (!(p.value() < std::pow(q, 2.0 * r)))
            throw domain_error("theta kernel: need p < q^{2r}");
    }

    double lower() const { return p.value() * std::pow(q, -x - r); }
    double upper() const { return std::pow(q, r - x); }
    double stationary_point() const { return std::sqrt(p.value()) * std::pow(q, -x); }
};

/// f(u) for u in [lower(), upper()] (endpoints included; f is 0 there).
double theta_kernel(double u, const ThetaKernelSpec& spec, const PrecisionPolicy& pol = {});

/// Closed-form derivative
///   f'(u) = -q^{x-r} (p;p)_inf^2 theta(q^r;p)^2 theta(u^2 q^{2x};p) / theta(uq^x;p)^4
/// for u strictly inside (lower(), upper()).  The (p;p)_inf^2 constant is
/// cached per nome.
double theta_kernel_d1_closed(double u, const ThetaKernelSpec& spec,
                              const PrecisionPolicy& pol = {});

/// Second derivative by Richardson central differences of the closed-form
/// first derivative (no closed form is provided for it).
double theta_kernel_d2(double u, const ThetaKernelSpec& spec, const PrecisionPolicy& pol = {});

}  // namespace ellq
