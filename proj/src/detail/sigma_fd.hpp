#pragma once

// Templated finite-difference layer over the sigma closed form, shared by the
// public zeta_w/wp functions and by the verifier's extended-precision pass.

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail/real_eval.hpp"

namespace ellq::detail {

template <class Real>
struct sigma_params {
    Real p;
    Real eta;
    Real pp_sq;
    Real tail;

    static sigma_params make(Real p, Real tail, int eta_terms) {
        sigma_params sp;
        sp.p = p;
        sp.eta = eta_series_r<Real>(p, tail, eta_terms);
        sp.pp_sq = pp_sq_cache<Real>::get(p, tail);
        sp.tail = tail;
        return sp;
    }
    Real period() const {
        const Real pi = Real(3.14159265358979323846264338327950288L);
        return p > Real(0) ? -std::log(p) / (Real(2) * pi)
                           : std::numeric_limits<Real>::infinity();
    }
};

template <class Real>
Real sigma_at(Real t, const sigma_params<Real>& sp) {
    return sigma_r<Real>(t, sp.p, sp.eta, sp.pp_sq, sp.tail);
}

template <class Real>
Real lattice_distance_r(Real t, Real period) {
    if (!std::isfinite(period)) return std::abs(t);
    const Real m = std::round(t / period);
    return std::abs(t - m * period);
}

template <class Real, class F>
Real richardson_d1_r(F&& f, Real t, Real h) {
    const Real d1 = (f(t + h) - f(t - h)) / (Real(2) * h);
    const Real d2 = (f(t + h / 2) - f(t - h / 2)) / h;
    return (Real(4) * d2 - d1) / Real(3);
}

template <class Real>
Real zeta_w_r(Real t, const sigma_params<Real>& sp, Real fd_step) {
    if (sigma_at(t, sp) == Real(0)) throw pole_error("zeta_w: sigma vanishes");
    const Real d = lattice_distance_r<Real>(t, sp.period());
    const Real h = std::min(fd_step, d / Real(16));
    auto logsig = [&](Real s) { return std::log(std::abs(sigma_at(s, sp))); };
    return richardson_d1_r<Real>(logsig, t, h);
}

template <class Real>
Real wp_r(Real t, const sigma_params<Real>& sp, Real fd_step) {
    if (sigma_at(t, sp) == Real(0)) throw pole_error("wp: sigma vanishes");
    const Real d = lattice_distance_r<Real>(t, sp.period());
    const Real h = std::min(d / Real(8),
                            std::clamp(Real(0.02) * d, Real(3e-4), Real(5e-3)));
    auto zeta_at = [&](Real s) { return zeta_w_r<Real>(s, sp, fd_step); };
    return -richardson_d1_r<Real>(zeta_at, t, h);
}

}  // namespace ellq::detail
