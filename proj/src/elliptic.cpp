#include "ellq/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "detail/real_eval.hpp"

namespace ellq {

double elliptic_number(double x, const ParamSet& params, const PrecisionPolicy& pol) {
    pol.validate();
    params.validate();
    return detail::elliptic_number_r<double>(x, params.q, params.a, params.b,
                                             params.p.value(), pol.product_tail_bound);
}

double elliptic_weight(double x, const ParamSet& params, const PrecisionPolicy& pol) {
    pol.validate();
    params.validate();
    return detail::elliptic_weight_r<double>(x, params.q, params.a, params.b,
                                             params.p.value(), pol.product_tail_bound);
}

double elliptic_binomial(double x, int k, const ParamSet& params, const PrecisionPolicy& pol) {
    pol.validate();
    params.validate();
    return detail::elliptic_binomial_r<double>(x, k, params.q, params.a, params.b,
                                               params.p.value(), pol.product_tail_bound);
}

double theta_kernel(double u, const ThetaKernelSpec& spec, const PrecisionPolicy& pol) {
    pol.validate();
    if (!(u >= spec.lower()) || !(u <= spec.upper()))
        throw domain_error("theta_kernel: u outside [p q^{-x-r}, q^{r-x}]");
    return detail::theta_kernel_r<double>(u, spec.x, spec.r, spec.q, spec.p.value(),
                                          pol.product_tail_bound);
}

double theta_kernel_d1_closed(double u, const ThetaKernelSpec& spec,
                              const PrecisionPolicy& pol) {
    pol.validate();
    if (!(u > spec.lower()) || !(u < spec.upper()))
        throw domain_error("theta_kernel_d1: u must lie strictly inside the domain");
    return detail::theta_kernel_d1_r<double>(u, spec.x, spec.r, spec.q, spec.p.value(),
                                             pol.product_tail_bound);
}

double theta_kernel_d2(double u, const ThetaKernelSpec& spec, const PrecisionPolicy& pol) {
    pol.validate();
    const double lo = spec.lower();
    const double hi = spec.upper();
    if (!(u > lo) || !(u < hi))
        throw domain_error("theta_kernel_d2: u must lie strictly inside the domain");
    const double margin = std::min(u - lo, hi - u);
    const double h = std::min({1e-3 * (hi - lo), margin / 4.0, 1e-3});
    auto d1 = [&](double v) {
        return detail::theta_kernel_d1_r<double>(v, spec.x, spec.r, spec.q, spec.p.value(),
                                                 pol.product_tail_bound);
    };
    const double c1 = (d1(u + h) - d1(u - h)) / (2.0 * h);
    const double c2 = (d1(u + h / 2) - d1(u - h / 2)) / h;
    return (4.0 * c2 - c1) / 3.0;
}

}  // namespace ellq
