#pragma once

#include "ellq/errors.hpp"
#include "ellq/precision.hpp"

namespace ellq {

/// Parameter tuple (q, a, b) shared by the biparametric numbers, weights and
/// binomials.  p is carried along for the elliptic extensions and must be 0
/// for the plain q-level operations.
struct ParamSet {
    double q = 0.5;
    double a = 0.0;
    double b = 0.0;
    Nome p{};

    void validate() const {
        if (!(q > 0.0) || !(q < 1.0)) throw domain_error("params: q must lie in (0,1)");
        if (!(a >= 0.0)) throw domain_error("params: a must be >= 0");
        if (!(b >= 0.0)) throw domain_error("params: b must be >= 0");
    }
    /// 0 < a < b < 1, the domain on which numbers and weights are positive.
    bool in_positivity_domain() const {
        return q > 0.0 && q < 1.0 && a > 0.0 && a < b && b < 1.0;
    }
};

/// [x]_q = (1 - q^x) / (1 - q).
double q_number(double x, double q);

/// Quantum number <x>_q = (q^x - q^{-x}) / (q - q^{-1}); the a -> -1
/// specialization of the a;q-numbers.
double quantum_number(double x, double q);

/// a;q-number: (1-q^x)(1-aq^x) / ((1-q)(1-aq)) * q^{1-x}.
double aq_number(double x, double a, double q);

/// (b;q)-number: (1-q^x)(1-bq) / ((1-q)(1-bq^x)).
double bq_number(double x, double b, double q);

/// Biparametric a,b;q-number (requires b != 0; use aq_number/bq_number for
/// the one-parameter specializations).
double abq_number(double x, const ParamSet& params);

/// The a,b;q-weight W(x) making [x] + W(x)[y-x]_{aq^{2x},bq^x} = [y] exact.
double abq_weight(double x, const ParamSet& params);

/// Right-hand side of the negative-argument relation,
/// -W(x) [-x]_{aq^{2x}, bq^x; q}; equals abq_number(x, params).
double abq_number_negative(double x, const ParamSet& params);

/// Parameters of the rational kernel f(u) = (1-uq^{x+r})(1-uq^{x-r})/(1-uq^x)^2.
struct KernelSpec {
    double x;
    double r;
    double q;

    KernelSpec(double x_, double r_, double q_) : x(x_), r(r_), q(q_) {
        if (!(q > 0.0) || !(q < 1.0)) throw domain_error("kernel: q must lie in (0,1)");
        if (!(r > 0.0) || !(x >= r)) throw domain_error("kernel: need x >= r > 0");
    }
};

/// f(u) on [0,1]; decreasing and concave there.
double f_kernel(double u, const KernelSpec& spec);
/// Closed-form f'(u) = -(1-q^r)^2 (1+uq^x) / (1-uq^x)^3 * q^{x-r}, u in (0,1).
double f_kernel_d1(double u, const KernelSpec& spec);
/// Closed-form f''(u) = -2 (1-q^r)^2 (2+uq^x) / (1-uq^x)^4 * q^{2x-r}, u in (0,1).
double f_kernel_d2(double u, const KernelSpec& spec);

/// Multiplicative Turan ratio f(lambda) f(a) / (f(b) f(lambda a / b)).
/// For a positive, decreasing, concave f on [delta, lambda] and
/// delta < a <= b < lambda the ratio is <= 1.
template <class F>
double turan_ratio(F&& f, double lambda, double a, double b) {
    const double den = f(b) * f(lambda * a / b);
    if (den == 0.0) throw pole_error("turan_ratio: denominator vanishes");
    return f(lambda) * f(a) / den;
}

}  // namespace ellq
