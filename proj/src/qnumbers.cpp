#include "ellq/qnumbers.hpp"

#include "detail/real_eval.hpp"

namespace ellq {

double q_number(double x, double q) { return detail::q_number_r<double>(x, q); }

double quantum_number(double x, double q) { return detail::quantum_number_r<double>(x, q); }

double aq_number(double x, double a, double q) { return detail::aq_number_r<double>(x, a, q); }

double bq_number(double x, double b, double q) { return detail::bq_number_r<double>(x, b, q); }

double abq_number(double x, const ParamSet& params) {
    params.validate();
    return detail::abq_number_r<double>(x, params.q, params.a, params.b);
}

double abq_weight(double x, const ParamSet& params) {
    params.validate();
    return detail::abq_weight_r<double>(x, params.q, params.a, params.b);
}

double abq_number_negative(double x, const ParamSet& params) {
    params.validate();
    const double q = params.q;
    const double shifted_a = params.a * std::pow(q, 2.0 * x);
    const double shifted_b = params.b * std::pow(q, x);
    return -detail::abq_weight_r<double>(x, q, params.a, params.b) *
           detail::abq_number_r<double>(-x, q, shifted_a, shifted_b);
}

double f_kernel(double u, const KernelSpec& spec) {
    if (!(u >= 0.0) || !(u <= 1.0)) throw domain_error("f_kernel: u must lie in [0,1]");
    return detail::f_kernel_r<double>(u, spec.x, spec.r, spec.q);
}

double f_kernel_d1(double u, const KernelSpec& spec) {
    if (!(u > 0.0) || !(u < 1.0)) throw domain_error("f_kernel_d1: u must lie in (0,1)");
    return detail::f_kernel_d1_r<double>(u, spec.x, spec.r, spec.q);
}

double f_kernel_d2(double u, const KernelSpec& spec) {
    if (!(u > 0.0) || !(u < 1.0)) throw domain_error("f_kernel_d2: u must lie in (0,1)");
    return detail::f_kernel_d2_r<double>(u, spec.x, spec.r, spec.q);
}

}  // namespace ellq
