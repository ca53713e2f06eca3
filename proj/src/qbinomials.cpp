#include "ellq/qbinomials.hpp"

#include <cmath>

#include "detail/real_eval.hpp"

namespace ellq {

namespace {

bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::nearbyint(v);
}

double checked_tgamma(double v, const char* what) {
    if (is_nonpositive_integer(v)) throw pole_error(what);
    return std::tgamma(v);
}

}  // namespace

double continuous_binomial(double x, double k) {
    const double gx = checked_tgamma(1.0 + x, "continuous_binomial: gamma pole at 1+x");
    const double gk = checked_tgamma(1.0 + k, "continuous_binomial: gamma pole at 1+k");
    const double gxk = checked_tgamma(1.0 + x - k, "continuous_binomial: gamma pole at 1+x-k");
    return gx / (gk * gxk);
}

double q_binomial(double x, double k, double q, const PrecisionPolicy& pol) {
    pol.validate();
    return detail::q_binomial_r<double>(x, k, q, pol.product_tail_bound);
}

double aq_binomial(double x, double k, double a, double q, const PrecisionPolicy& pol) {
    pol.validate();
    return detail::aq_binomial_r<double>(x, k, a, q, pol.product_tail_bound);
}

double bq_binomial(double x, double k, double b, double q, const PrecisionPolicy& pol) {
    pol.validate();
    return detail::bq_binomial_r<double>(x, k, b, q, pol.product_tail_bound);
}

double abq_binomial(double x, double k, const ParamSet& params, const PrecisionPolicy& pol) {
    pol.validate();
    params.validate();
    return detail::abq_binomial_r<double>(x, k, params.q, params.a, params.b,
                                          pol.product_tail_bound);
}

}  // namespace ellq
