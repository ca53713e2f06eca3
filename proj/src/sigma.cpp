#include "ellq/sigma.hpp"

#include <cmath>
#include <limits>

#include "detail/real_eval.hpp"
#include "detail/sigma_fd.hpp"

namespace ellq {

namespace {

detail::sigma_params<double> params_of(const SigmaContext& ctx, const PrecisionPolicy& pol) {
    detail::sigma_params<double> sp;
    sp.p = ctx.nome().value();
    sp.eta = ctx.eta();
    sp.pp_sq = ctx.p_pochhammer_sq();
    sp.tail = pol.product_tail_bound;
    return sp;
}

}  // namespace

SigmaContext::SigmaContext(Nome p, const PrecisionPolicy& pol) : p_(p), pol_(pol) {
    pol.validate();
    const double pv = p.value();
    eta_ = detail::eta_series_r<double>(pv, pol.product_tail_bound, pol.eta_terms);
    pp_sq_ = detail::pp_sq_cache<double>::get(pv, pol.product_tail_bound);
    tau_im_ = pv > 0.0 ? -std::log(pv) / (2.0 * 3.14159265358979323846264338327950288)
                       : std::numeric_limits<double>::infinity();
    // Truncation self-check: eight extra series terms must not move eta.
    const double eta_more =
        detail::eta_series_r<double>(pv, pol.product_tail_bound, pol.eta_terms + 8);
    if (std::abs(eta_more - eta_) > pol.report_tol * std::max(1.0, std::abs(eta_)))
        throw domain_error("sigma context: eta series not converged");
}

double SigmaContext::lattice_distance(double t) const {
    return detail::lattice_distance_r<double>(t, tau_im_);
}

double sigma(double t, const SigmaContext& ctx, const PrecisionPolicy& pol) {
    pol.validate();
    return detail::sigma_at<double>(t, params_of(ctx, pol));
}

double zeta_w(double t, const SigmaContext& ctx, const PrecisionPolicy& pol) {
    pol.validate();
    return detail::zeta_w_r<double>(t, params_of(ctx, pol), pol.fd_step);
}

double wp(double t, const SigmaContext& ctx, const PrecisionPolicy& pol) {
    pol.validate();
    return detail::wp_r<double>(t, params_of(ctx, pol), pol.fd_step);
}

}  // namespace ellq
