#include "ellq/theta.hpp"

#include "detail/real_eval.hpp"

namespace ellq {

double theta(double x, Nome p, const PrecisionPolicy& pol) {
    pol.validate();
    return detail::theta_r<double>(x, p.value(), pol.product_tail_bound);
}

double q_pochhammer_inf(double a, double q, const PrecisionPolicy& pol) {
    pol.validate();
    if (!(q > 0.0) || !(q < 1.0))
        throw domain_error("q_pochhammer_inf: q must lie in (0,1)");
    return detail::qpoch_inf_r<double>(a, q, pol.product_tail_bound);
}

double q_pochhammer(double a, double q, double k, const PrecisionPolicy& pol) {
    pol.validate();
    return detail::qpoch_r<double>(a, q, k, pol.product_tail_bound);
}

double theta_pochhammer(double a, double q, Nome p, int k, const PrecisionPolicy& pol) {
    pol.validate();
    return detail::theta_poch_r<double>(a, q, p.value(), k, pol.product_tail_bound);
}

double p_pochhammer_sq(Nome p, const PrecisionPolicy& pol) {
    pol.validate();
    return detail::pp_sq_cache<double>::get(p.value(), pol.product_tail_bound);
}

}  // namespace ellq
