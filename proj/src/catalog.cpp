// Property catalog: the eleven inequality theorems, the identity suite and
// the negative controls, each with a constraint-honoring sampler and a slack
// evaluator instantiated for double and long double.
//
// Domain notes baked into the samplers (all confirmed by counterexample
// search during development):
//  * the upper-parameter binomial inequalities (q-level and elliptic) need
//    k <= y; points with k > y violate them;
//  * the lower-parameter inequalities need x >= k + r so that every shifted
//    factorial exponent stays non-negative;
//  * the elliptic shifted inequality needs every theta argument of its
//    addition-formula decomposition, not just of the four scanned numbers,
//    to lie in (p, 1);
//  * the theta kernel is unimodal on its interval, so its derivative sign
//    tests live in test code on the decreasing side (no scan here).

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "detail/properties.hpp"
#include "detail/real_eval.hpp"
#include "detail/sigma_fd.hpp"

namespace ellq::verifier::detail {

namespace {

using ellq::detail::abq_binomial_finite_r;
using ellq::detail::abq_binomial_ratio_r;
using ellq::detail::abq_number_r;
using ellq::detail::abq_weight_r;
using ellq::detail::aq_binomial_r;
using ellq::detail::aq_number_r;
using ellq::detail::bq_binomial_r;
using ellq::detail::bq_number_r;
using ellq::detail::elliptic_number_r;
using ellq::detail::elliptic_weight_r;
using ellq::detail::pow_r;
using ellq::detail::q_binomial_r;
using ellq::detail::sigma_params;
using ellq::detail::theta_r;

// ---------------------------------------------------------------------------
// sampling helpers

double map_var(double u, const VarSpec& v) {
    if (v.integer) {
        const double n = std::floor(v.hi - v.lo + 1.0);
        return v.lo + std::min(n - 1.0, std::floor(u * n));
    }
    return v.lo + u * (v.hi - v.lo);
}

/// Uniform in [max(lo_eff, v.lo), v.hi]; NaN when empty.
double map_from(double u, double lo_eff, const VarSpec& v) {
    const double lo = std::max(lo_eff, v.lo);
    if (!(v.hi >= lo)) return std::numeric_limits<double>::quiet_NaN();
    return lo + u * (v.hi - lo);
}

/// Ordered pair a < b (or a > b under swap).  iu_a/iu_b index the unit draws.
bool pair_ab(const double* u, const SampleCtx& ctx, int iu_a, int iu_b,
             double& a, double& b) {
    const VarSpec& va = (*ctx.vars)[iu_a];
    const VarSpec& vb = (*ctx.vars)[iu_b];
    if (!ctx.swap_ab) {
        a = map_var(u[iu_a], va);
        b = map_from(u[iu_b], a, vb);
        return std::isfinite(b) && b > a;
    }
    b = map_var(u[iu_b], vb);
    a = map_from(u[iu_a], b, va);
    return std::isfinite(a) && a > b;
}

// ---------------------------------------------------------------------------
// slack helpers

template <class Real>
double slack_of(Real lhs, Real rhs) {
    const Real n = std::max({std::abs(lhs), std::abs(rhs), Real(1)});
    return static_cast<double>((lhs - rhs) / n);
}

template <class Real>
double residual_of(Real lhs, Real rhs) {
    const Real n = std::max({std::abs(lhs), std::abs(rhs), Real(1)});
    return static_cast<double>(std::abs(lhs - rhs) / n);
}

template <class Real>
Real tail_of(const PrecisionPolicy& pol) {
    return Real(pol.product_tail_bound);
}

// ---------------------------------------------------------------------------
// inequality evaluators

template <class Real>
double eval_prop_1factor(const Sample& s, const PrecisionPolicy&) {
    const Real nu = s[0], q = s[1], r = s[2], y = s[3], x = s[4];
    const Real lhs = (Real(1) - nu * pow_r(q, x)) * (Real(1) - nu * pow_r(q, y));
    const Real rhs = (Real(1) - nu * pow_r(q, x + r)) * (Real(1) - nu * pow_r(q, y - r));
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
double eval_aq_numbers(const Sample& s, const PrecisionPolicy&) {
    const Real q = s[0], a = s[1], r = s[2], y = s[3], x = s[4];
    const Real lhs = aq_number_r<Real>(x, a, q) * aq_number_r<Real>(y, a, q);
    const Real rhs = aq_number_r<Real>(x + r, a, q) * aq_number_r<Real>(y - r, a, q);
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
double eval_bq_numbers(const Sample& s, const PrecisionPolicy& pol) {
    const Real q = s[0], b = s[1], r = s[2], y = s[3], x = s[4];
    const Real lhs = bq_number_r<Real>(x, b, q) * bq_number_r<Real>(y, b, q);
    const Real rhs = bq_number_r<Real>(x + r, b, q) * bq_number_r<Real>(y - r, b, q);
    // Closed-form difference identity, checked alongside the inequality.
    const Real num = (Real(1) - pow_r(q, r)) * (Real(1) - pow_r(q, x - y + r)) *
                     (Real(1) - b) * (Real(1) - b * q) * (Real(1) - b * q) *
                     (Real(1) - b * pow_r(q, x + y));
    const Real den = (Real(1) - q) * (Real(1) - q) * (Real(1) - b * pow_r(q, x)) *
                     (Real(1) - b * pow_r(q, x + r)) * (Real(1) - b * pow_r(q, y)) *
                     (Real(1) - b * pow_r(q, y - r));
    if (den == Real(0)) throw pole_error("bq difference: denominator vanishes");
    const Real closed = num / den * pow_r(q, y - r);
    const double rho = residual_of<Real>(lhs - rhs, closed);
    if (rho > pol.report_tol) return -rho;
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
double eval_abq_shifted(const Sample& s, const PrecisionPolicy&) {
    const Real q = s[0], a = s[1], b = s[2], r = s[3], y = s[4], x = s[5];
    const Real A = a * pow_r(q, Real(2) * r), B = b * pow_r(q, r);
    const Real lhs = abq_number_r<Real>(x, q, A, B) * abq_number_r<Real>(y, q, a, b);
    const Real rhs = abq_number_r<Real>(x + r, q, a, b) * abq_number_r<Real>(y - r, q, A, B);
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
double eval_abq_direct(const Sample& s, const PrecisionPolicy&) {
    const Real q = s[0], a = s[1], b = s[2], r = s[3], y = s[4], x = s[5];
    const Real lhs = abq_number_r<Real>(x, q, a, b) * abq_number_r<Real>(y, q, a, b);
    const Real rhs = abq_number_r<Real>(x + r, q, a, b) * abq_number_r<Real>(y - r, q, a, b);
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
bool nonpositive_integer_r(Real v) {
    return v <= Real(0) && v == std::nearbyint(v);
}

template <class Real>
Real cbinom_r(Real x, Real k) {
    if (nonpositive_integer_r(Real(1) + x) || nonpositive_integer_r(Real(1) + k) ||
        nonpositive_integer_r(Real(1) + x - k))
        throw pole_error("continuous_binomial: gamma pole");
    return std::tgamma(Real(1) + x) / (std::tgamma(Real(1) + k) * std::tgamma(Real(1) + x - k));
}

template <class Real>
double eval_cont_binomial(const Sample& s, const PrecisionPolicy&) {
    const Real r = s[0], l = s[1], k = s[2], x = s[3], y = s[4];
    const Real lhs = cbinom_r<Real>(x, k) * cbinom_r<Real>(y, l);
    const Real rhs = cbinom_r<Real>(x, k + r) * cbinom_r<Real>(y, l - r);
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
double eval_aq_binomial_lower(const Sample& s, const PrecisionPolicy& pol) {
    const Real q = s[0], a = s[1], r = s[2], l = s[3], k = s[4], x = s[5], y = s[6];
    const Real tail = tail_of<Real>(pol);
    const Real lhs = aq_binomial_r<Real>(x, k, a, q, tail) *
                     aq_binomial_r<Real>(y, l, a, q, tail);
    const Real rhs = aq_binomial_r<Real>(x, k + r, a, q, tail) *
                     aq_binomial_r<Real>(y, l - r, a, q, tail);
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
double eval_abq_binomial_upper(const Sample& s, const PrecisionPolicy& pol) {
    const Real q = s[0];
    const int k = static_cast<int>(s[1]);
    const Real y = s[2], x = s[2] + s[3];
    const Real bqk = s[4];
    const Real a = s[5] * bqk;
    const Real b = bqk * pow_r(q, Real(-k));
    const Real tail = tail_of<Real>(pol);
    const Real lhs = abq_binomial_finite_r<Real>(x, k, q, a, b, Real(0), tail) *
                     abq_binomial_finite_r<Real>(y, k, q, a, b, Real(0), tail);
    const Real rhs = abq_binomial_finite_r<Real>(x + 1, k, q, a, b, Real(0), tail) *
                     abq_binomial_finite_r<Real>(y - 1, k, q, a, b, Real(0), tail);
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
double eval_ell_shifted(const Sample& s, const PrecisionPolicy& pol) {
    const Real q = s[0], a = s[1], b = s[2], r = s[3], y = s[4], x = s[5], p = s[6];
    const Real A = a * pow_r(q, Real(2) * r), B = b * pow_r(q, r);
    const Real tail = tail_of<Real>(pol);
    const Real lhs = elliptic_number_r<Real>(x, q, A, B, p, tail) *
                     elliptic_number_r<Real>(y, q, a, b, p, tail);
    const Real rhs = elliptic_number_r<Real>(x + r, q, a, b, p, tail) *
                     elliptic_number_r<Real>(y - r, q, A, B, p, tail);
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
double eval_ell_direct(const Sample& s, const PrecisionPolicy& pol) {
    const Real q = s[0], r = s[1], y = s[2], x = s[3], p = s[4], a = s[5], b = s[6];
    const Real tail = tail_of<Real>(pol);
    const Real lhs = elliptic_number_r<Real>(x, q, a, b, p, tail) *
                     elliptic_number_r<Real>(y, q, a, b, p, tail);
    const Real rhs = elliptic_number_r<Real>(x + r, q, a, b, p, tail) *
                     elliptic_number_r<Real>(y - r, q, a, b, p, tail);
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
double eval_ell_binomial_upper(const Sample& s, const PrecisionPolicy& pol) {
    const Real q = s[0];
    const int k = static_cast<int>(s[1]);
    const Real y = s[2], x = s[2] + s[3];
    const Real bqk = s[4];
    const Real a = s[5] * bqk;
    const Real p = s[6];
    const Real b = bqk * pow_r(q, Real(-k));
    const Real tail = tail_of<Real>(pol);
    const Real lhs = abq_binomial_finite_r<Real>(x, k, q, a, b, p, tail) *
                     abq_binomial_finite_r<Real>(y, k, q, a, b, p, tail);
    const Real rhs = abq_binomial_finite_r<Real>(x + 1, k, q, a, b, p, tail) *
                     abq_binomial_finite_r<Real>(y - 1, k, q, a, b, p, tail);
    return slack_of<Real>(lhs, rhs);
}

template <class Real>
double eval_bq_binomial_lower(const Sample& s, const PrecisionPolicy& pol) {
    const Real q = s[0], b = s[1], y = s[2], x = s[3], r = s[4], l = s[5], k = s[6];
    const Real tail = tail_of<Real>(pol);
    const Real lhs = bq_binomial_r<Real>(x, k, b, q, tail) *
                     bq_binomial_r<Real>(y, l, b, q, tail);
    const Real rhs = bq_binomial_r<Real>(x, k + r, b, q, tail) *
                     bq_binomial_r<Real>(y, l - r, b, q, tail);
    return slack_of<Real>(lhs, rhs);
}

// ---------------------------------------------------------------------------
// theta-argument enumeration for the elliptic positivity constraints

void push_number_args(std::vector<double>& out, double t, double q, double A, double B) {
    const double qt = std::pow(q, t);
    out.insert(out.end(), {qt, A * qt, B * q, A * q / B, q, A * q, B * qt, A * qt / B});
}

void push_weight_args(std::vector<double>& out, double t, double q, double A, double B) {
    const double qt = std::pow(q, t);
    out.insert(out.end(), {A * q * qt * qt, B, B * q, A / B, A * q / B,
                           A * q, B * qt, B * q * qt, A * qt / B, A * q * qt / B});
}

double min_positive(const std::vector<double>& v) {
    double m = 1.0;
    for (double x : v) m = std::min(m, x);
    return m;
}

// ---------------------------------------------------------------------------
// identity evaluators

template <class Real>
double eval_id_theta_inversion(const Sample& s, const PrecisionPolicy& pol) {
    const Real x = s[0], p = s[1];
    const Real tail = tail_of<Real>(pol);
    const Real th = theta_r<Real>(x, p, tail);
    const Real res = std::abs(th + x * theta_r<Real>(Real(1) / x, p, tail));
    return static_cast<double>(-res / std::max(Real(1), std::abs(th)));
}

template <class Real>
double eval_id_theta_quasiperiod(const Sample& s, const PrecisionPolicy& pol) {
    const Real x = s[0], p = s[1];
    const Real tail = tail_of<Real>(pol);
    const Real th = theta_r<Real>(x, p, tail);
    const Real res = std::abs(theta_r<Real>(p * x, p, tail) + th / x);
    return static_cast<double>(-res / std::max(Real(1), std::abs(th)));
}

template <class Real>
Real theta4_r(Real a1, Real a2, Real a3, Real a4, Real p, Real tail) {
    return theta_r<Real>(a1, p, tail) * theta_r<Real>(a2, p, tail) *
           theta_r<Real>(a3, p, tail) * theta_r<Real>(a4, p, tail);
}

template <class Real>
double eval_id_theta_addition(const Sample& s, const PrecisionPolicy& pol) {
    const Real x = s[0], y = s[1], u = s[2], t = s[3], p = s[4];
    const Real tail = tail_of<Real>(pol);
    const Real t1 = theta4_r<Real>(x * y, x / y, u * t, u / t, p, tail);
    const Real t2 = theta4_r<Real>(x * t, x / t, u * y, u / y, p, tail);
    const Real t3 = (u / y) * theta4_r<Real>(y * t, y / t, x * u, x / u, p, tail);
    const Real norm = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    if (norm == Real(0)) return 0.0;
    return static_cast<double>(-std::abs(t1 - t2 - t3) / norm);
}

template <class Real>
sigma_params<Real> make_sigma_params(Real p, const PrecisionPolicy& pol) {
    return sigma_params<Real>::make(p, tail_of<Real>(pol), pol.eta_terms);
}

template <class Real>
double eval_id_sigma_addition(const Sample& s, const PrecisionPolicy& pol) {
    const Real p = s[0], x = s[1], y = s[2], u = s[3], t = s[4];
    const auto sp = make_sigma_params<Real>(p, pol);
    auto sg = [&](Real z) { return ellq::detail::sigma_at<Real>(z, sp); };
    const Real t1 = sg(x + y) * sg(x - y) * sg(u + t) * sg(u - t);
    const Real t2 = sg(x + t) * sg(x - t) * sg(u + y) * sg(u - y);
    const Real t3 = sg(y + t) * sg(y - t) * sg(x + u) * sg(x - u);
    const Real norm = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    if (norm == Real(0)) return 0.0;
    return static_cast<double>(-std::abs(t1 - t2 - t3) / norm);
}

template <class Real>
double eval_id_zeta_diff0(const Sample& s, const PrecisionPolicy& pol) {
    const Real p = s[0], x = s[1], y = s[2], w = s[3];
    const auto sp = make_sigma_params<Real>(p, pol);
    auto sg = [&](Real z) { return ellq::detail::sigma_at<Real>(z, sp); };
    auto zt = [&](Real z) { return ellq::detail::zeta_w_r<Real>(z, sp, Real(pol.fd_step)); };
    const Real lhs = zt(x + y) + zt(x - y) - zt(x + w) - zt(x - w);
    const Real den = sg(x + y) * sg(x - y) * sg(x + w) * sg(x - w);
    if (den == Real(0)) throw pole_error("zeta_diff0: sigma denominator vanishes");
    const Real rhs = sg(2 * x) * sg(y + w) * sg(y - w) / den;
    return -residual_of<Real>(lhs, rhs);
}

template <class Real>
double eval_id_zeta_diff2(const Sample& s, const PrecisionPolicy& pol) {
    const Real p = s[0], u = s[1], v = s[2];
    const auto sp = make_sigma_params<Real>(p, pol);
    auto sg = [&](Real z) { return ellq::detail::sigma_at<Real>(z, sp); };
    auto zt = [&](Real z) { return ellq::detail::zeta_w_r<Real>(z, sp, Real(pol.fd_step)); };
    const Real lhs = zt(2 * u) + zt(2 * v) - 2 * zt(u + v);
    const Real den = sg(2 * u) * sg(2 * v) * sg(u + v) * sg(u + v);
    if (den == Real(0)) throw pole_error("zeta_diff2: sigma denominator vanishes");
    const Real rhs = sg(2 * u + 2 * v) * sg(u - v) * sg(u - v) / den;
    return -residual_of<Real>(lhs, rhs);
}

template <class Real>
double eval_id_wp_relation(const Sample& s, const PrecisionPolicy& pol) {
    const Real p = s[0], u = s[1], v = s[2];
    const auto sp = make_sigma_params<Real>(p, pol);
    auto sg = [&](Real z) { return ellq::detail::sigma_at<Real>(z, sp); };
    const Real lhs = ellq::detail::wp_r<Real>(v, sp, Real(pol.fd_step)) -
                     ellq::detail::wp_r<Real>(u, sp, Real(pol.fd_step));
    const Real den = sg(u) * sg(u) * sg(v) * sg(v);
    if (den == Real(0)) throw pole_error("wp_relation: sigma denominator vanishes");
    const Real rhs = sg(u - v) * sg(u + v) / den;
    return -residual_of<Real>(lhs, rhs);
}

template <class Real>
double eval_id_abq_addition(const Sample& s, const PrecisionPolicy&) {
    const Real q = s[0], a = s[1], b = s[2], x = s[3], y = s[4];
    const Real A = a * pow_r(q, Real(2) * x), B = b * pow_r(q, x);
    const Real lhs = abq_number_r<Real>(x, q, a, b) +
                     abq_weight_r<Real>(x, q, a, b) * abq_number_r<Real>(y - x, q, A, B);
    const Real rhs = abq_number_r<Real>(y, q, a, b);
    return -residual_of<Real>(lhs, rhs);
}

template <class Real>
double eval_id_ell_addition(const Sample& s, const PrecisionPolicy& pol) {
    const Real q = s[0], a = s[1], b = s[2], x = s[3], y = s[4], p = s[5];
    const Real tail = tail_of<Real>(pol);
    const Real A = a * pow_r(q, Real(2) * x), B = b * pow_r(q, x);
    const Real lhs = elliptic_number_r<Real>(x, q, a, b, p, tail) +
                     elliptic_weight_r<Real>(x, q, a, b, p, tail) *
                         elliptic_number_r<Real>(y - x, q, A, B, p, tail);
    const Real rhs = elliptic_number_r<Real>(y, q, a, b, p, tail);
    return -residual_of<Real>(lhs, rhs);
}

template <class Real>
double eval_id_binom_dual_forms(const Sample& s, const PrecisionPolicy& pol) {
    const Real q = s[0], a = s[1], b = s[2];
    const int k = static_cast<int>(s[3]);
    const Real x = s[4];
    const Real tail = tail_of<Real>(pol);
    const Real f1 = abq_binomial_ratio_r<Real>(x, Real(k), q, a, b, tail);
    const Real f2 = abq_binomial_finite_r<Real>(x, k, q, a, b, Real(0), tail);
    return -residual_of<Real>(f1, f2);
}

template <class Real>
double eval_id_k1_reductions(const Sample& s, const PrecisionPolicy& pol) {
    const Real q = s[0], a = s[1], b = s[2], x = s[3], p = s[4];
    const Real tail = tail_of<Real>(pol);
    const Real r1 = residual_of<Real>(
        abq_binomial_finite_r<Real>(x, 1, q, a, b / q, Real(0), tail),
        abq_number_r<Real>(x, q, a, b));
    const Real r2 = residual_of<Real>(aq_binomial_r<Real>(x, Real(1), a, q, tail),
                                      aq_number_r<Real>(x, a, q));
    const Real r3 = residual_of<Real>(bq_binomial_r<Real>(x, Real(1), b / q, q, tail),
                                      bq_number_r<Real>(x, b, q));
    const Real r4 = residual_of<Real>(
        abq_binomial_finite_r<Real>(x, 1, q, a, b / q, p, tail),
        elliptic_number_r<Real>(x, q, a, b, p, tail));
    return static_cast<double>(-std::max({r1, r2, r3, r4}));
}

template <class Real>
double eval_id_negative_argument(const Sample& s, const PrecisionPolicy&) {
    const Real q = s[0], a = s[1], b = s[2], x = s[3];
    const Real A = a * pow_r(q, Real(2) * x), B = b * pow_r(q, x);
    const Real rhs = -abq_weight_r<Real>(x, q, a, b) * abq_number_r<Real>(-x, q, A, B);
    return -residual_of<Real>(abq_number_r<Real>(x, q, a, b), rhs);
}

template <class Real>
double eval_id_bq_difference(const Sample& s, const PrecisionPolicy&) {
    const Real q = s[0], b = s[1], r = s[2], y = s[3], x = s[4];
    const Real lhs = bq_number_r<Real>(x, b, q) * bq_number_r<Real>(y, b, q) -
                     bq_number_r<Real>(x + r, b, q) * bq_number_r<Real>(y - r, b, q);
    const Real num = (Real(1) - pow_r(q, r)) * (Real(1) - pow_r(q, x - y + r)) *
                     (Real(1) - b) * (Real(1) - b * q) * (Real(1) - b * q) *
                     (Real(1) - b * pow_r(q, x + y));
    const Real den = (Real(1) - q) * (Real(1) - q) * (Real(1) - b * pow_r(q, x)) *
                     (Real(1) - b * pow_r(q, x + r)) * (Real(1) - b * pow_r(q, y)) *
                     (Real(1) - b * pow_r(q, y - r));
    if (den == Real(0)) throw pole_error("bq difference: denominator vanishes");
    return -residual_of<Real>(lhs, num / den * pow_r(q, y - r));
}

// ---------------------------------------------------------------------------
// catalog assembly

using EvalFn = std::function<double(const Sample&, const PrecisionPolicy&)>;

Property make(PropertyInfo info,
              std::function<std::optional<Sample>(const double*, const SampleCtx&)> sample,
              EvalFn eval_d, EvalFn eval_hi) {
    Property p;
    p.info = std::move(info);
    p.sample = std::move(sample);
    p.eval_d = std::move(eval_d);
    p.eval_hi = std::move(eval_hi);
    return p;
}

#define ELLQ_EVAL_PAIR(fn) EvalFn(&fn<double>), EvalFn(&fn<long double>)

/// nu/q/r/y/x chain shared by the one-parameter number scans.
std::optional<Sample> sample_qparam_ryx(const double* u, const SampleCtx& c) {
    const auto& v = *c.vars;
    Sample s{};
    s[0] = map_var(u[0], v[0]);
    s[1] = map_var(u[1], v[1]);
    s[2] = map_var(u[2], v[2]);                 // r
    s[3] = map_from(u[3], s[2], v[3]);          // y >= r
    s[4] = map_from(u[4], s[3], v[4]);          // x >= y
    if (!std::isfinite(s[3]) || !std::isfinite(s[4])) return std::nullopt;
    return s;
}

/// q / (a,b) ordered pair / r / y / x chain for the biparametric scans.
std::optional<Sample> sample_abq_ryx(const double* u, const SampleCtx& c) {
    const auto& v = *c.vars;
    Sample s{};
    s[0] = map_var(u[0], v[0]);
    if (!pair_ab(u, c, 1, 2, s[1], s[2])) return std::nullopt;
    s[3] = map_var(u[3], v[3]);
    s[4] = map_from(u[4], s[3], v[4]);
    s[5] = map_from(u[5], s[4], v[5]);
    if (!std::isfinite(s[4]) || !std::isfinite(s[5])) return std::nullopt;
    return s;
}

/// r <= l <= k, x >= k + r, l + (x - k) <= y <= x chain of the lower-index
/// binomial inequalities.
bool chain_rlkxy(const double* u, const std::vector<VarSpec>& v, int base, Sample& s) {
    s[base + 0] = map_var(u[base + 0], v[base + 0]);                    // r
    s[base + 1] = map_from(u[base + 1], s[base + 0], v[base + 1]);      // l >= r
    s[base + 2] = map_from(u[base + 2], s[base + 1], v[base + 2]);      // k >= l
    s[base + 3] = map_from(u[base + 3], s[base + 2] + s[base + 0], v[base + 3]);  // x >= k+r
    if (!std::isfinite(s[base + 1]) || !std::isfinite(s[base + 2]) ||
        !std::isfinite(s[base + 3]))
        return false;
    const double ylo = s[base + 1] + (s[base + 3] - s[base + 2]);       // l + (x-k)
    const double yhi = std::min(v[base + 4].hi, s[base + 3]);           // <= x
    if (!(yhi >= ylo)) return false;
    s[base + 4] = ylo + u[base + 4] * (yhi - ylo);
    return true;
}

const std::vector<Property>& build() {
    static const std::vector<Property> props = [] {
        std::vector<Property> out;

        // --- inequality theorems -----------------------------------------
        out.push_back(make(
            {"check_prop_1factor",
             "(1-nu q^x)(1-nu q^y) >= (1-nu q^{x+r})(1-nu q^{y-r})",
             {{"nu", 0.0, 0.999, false, true},
              {"q", 0.05, 0.95},
              {"r", 0.0, 1.5, false, true},
              {"y", 0.0, 4.0, false, true},
              {"x", 0.0, 5.5, false, true}}},
            &sample_qparam_ryx, ELLQ_EVAL_PAIR(eval_prop_1factor)));

        out.push_back(make(
            {"check_aq_numbers",
             "a;q-numbers are continuously strongly log-concave",
             {{"q", 0.05, 0.95},
              {"a", 0.005, 0.98},
              {"r", 0.0, 1.5, false, true},
              {"y", 0.0, 4.0, false, true},
              {"x", 0.0, 5.5, false, true}}},
            &sample_qparam_ryx, ELLQ_EVAL_PAIR(eval_aq_numbers)));

        out.push_back(make(
            {"check_bq_numbers",
             "(b;q)-numbers are continuously strongly log-concave "
             "(plus the closed-form difference identity)",
             {{"q", 0.05, 0.95},
              {"b", 0.005, 0.98},
              {"r", 0.0, 1.5, false, true},
              {"y", 0.0, 4.0, false, true},
              {"x", 0.0, 5.5, false, true}}},
            &sample_qparam_ryx, ELLQ_EVAL_PAIR(eval_bq_numbers)));

        out.push_back(make(
            {"check_abq_shifted",
             "[x]_{aq^{2r},bq^r}[y]_{a,b} >= [x+r]_{a,b}[y-r]_{aq^{2r},bq^r}",
             {{"q", 0.05, 0.95},
              {"a", 0.01, 0.97},
              {"b", 0.02, 0.99},
              {"r", 0.0, 1.5, false, true},
              {"y", 0.0, 4.0, false, true},
              {"x", 0.0, 5.5, false, true}}},
            &sample_abq_ryx, ELLQ_EVAL_PAIR(eval_abq_shifted)));

        out.push_back(make(
            {"check_abq_direct",
             "a,b;q-numbers are continuously strongly log-concave (0<a<b<1)",
             {{"q", 0.05, 0.95},
              {"a", 0.01, 0.97},
              {"b", 0.02, 0.99},
              {"r", 0.0, 1.5, false, true},
              {"y", 0.0, 4.0, false, true},
              {"x", 0.0, 5.5, false, true}}},
            &sample_abq_ryx, ELLQ_EVAL_PAIR(eval_abq_direct)));

        out.push_back(make(
            {"check_cont_binomial",
             "continuous binomial coefficients: C(x,k)C(y,l) >= C(x,k+r)C(y,l-r)",
             {{"r", 0.0, 1.5, false, true},
              {"l", 0.0, 3.0, false, true},
              {"k", 0.0, 4.5, false, true},
              {"x", 0.0, 9.0, false, true},
              {"y", 0.0, 9.0, false, true}}},
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                Sample s{};
                if (!chain_rlkxy(u, *c.vars, 0, s)) return std::nullopt;
                return s;
            },
            ELLQ_EVAL_PAIR(eval_cont_binomial)));

        out.push_back(make(
            {"check_aq_binomial_lower",
             "a;q-binomials are log-concave in the lower parameter (a=0 gives "
             "the plain q case)",
             {{"q", 0.05, 0.95},
              {"a", 0.0, 0.95, false, true},
              {"r", 0.0, 1.5, false, true},
              {"l", 0.0, 3.0, false, true},
              {"k", 0.0, 4.5, false, true},
              {"x", 0.0, 9.0, false, true},
              {"y", 0.0, 9.0, false, true}}},
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);
                s[1] = map_var(u[1], v[1]);
                if (!chain_rlkxy(u, v, 2, s)) return std::nullopt;
                return s;
            },
            ELLQ_EVAL_PAIR(eval_aq_binomial_lower)));

        out.push_back(make(
            {"check_abq_binomial_upper",
             "a,b;q-binomials are discretely strongly log-concave in the upper "
             "parameter (0<a<=bq^k<1, k<=y)",
             {{"q", 0.05, 0.95},
              {"k", 0.0, 4.0, true, true},
              {"y", 1.0, 5.0, false, true},
              {"dx", 0.0, 2.0, true, true},
              {"bqk", 0.02, 0.98},
              {"afrac", 0.02, 1.0}}},
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);
                s[1] = map_var(u[1], v[1]);                 // k (integer)
                s[2] = map_from(u[2], std::max(1.0, s[1]), v[2]);  // y >= max(1,k)
                if (!std::isfinite(s[2])) return std::nullopt;
                s[3] = map_var(u[3], v[3]);                 // x - y
                s[4] = map_var(u[4], v[4]);                 // bq^k
                s[5] = map_var(u[5], v[5]);                 // a / bq^k
                return s;
            },
            ELLQ_EVAL_PAIR(eval_abq_binomial_upper)));

        out.push_back(make(
            {"check_ell_shifted",
             "elliptic shifted log-concavity (proof-chain theta positivity)",
             {{"q", 0.05, 0.95},
              {"a", 0.01, 0.97},
              {"b", 0.02, 0.99},
              {"r", 0.0, 1.5, false, true},
              {"y", 0.0, 4.0, false, true},
              {"x", 0.0, 5.5, false, true},
              {"p", 0.0, 1.0}}},
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                auto s = sample_abq_ryx(u, c);
                if (!s) return std::nullopt;
                const double q = (*s)[0], a = (*s)[1], b = (*s)[2];
                const double r = (*s)[3], y = (*s)[4], x = (*s)[5];
                const double A = a * std::pow(q, 2.0 * r), B = b * std::pow(q, r);
                std::vector<double> args;
                push_number_args(args, x, q, A, B);
                push_number_args(args, y, q, a, b);
                push_number_args(args, x + r, q, a, b);
                push_number_args(args, y - r, q, A, B);
                // positivity of the addition-formula decomposition
                push_number_args(args, r, q, a, b);
                push_weight_args(args, y - r, q, A, B);
                push_number_args(args, x - y + r, q, a * std::pow(q, 2.0 * y),
                                 b * std::pow(q, y));
                const double m = min_positive(args);
                if (!(m > 0.0)) return std::nullopt;
                (*s)[6] = u[6] * 0.999 * m;
                if (!((*s)[6] > 0.0)) return std::nullopt;
                return s;
            },
            ELLQ_EVAL_PAIR(eval_ell_shifted)));

        out.push_back(make(
            {"check_ell_direct",
             "elliptic numbers are continuously strongly log-concave "
             "(0<p<q^{2r}, pq^{-x-r}<a<b<1)",
             {{"q", 0.05, 0.95},
              {"r", 0.0, 1.5, false, true},
              {"y", 0.0, 4.0, false, true},
              {"x", 0.0, 5.5, false, true},
              {"p", 0.0, 1.0},
              {"a", 0.0, 1.0},
              {"b", 0.0, 1.0}}},
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);
                s[1] = map_var(u[1], v[1]);
                s[2] = map_from(u[2], s[1], v[2]);
                s[3] = map_from(u[3], s[2], v[3]);
                if (!std::isfinite(s[2]) || !std::isfinite(s[3])) return std::nullopt;
                const double q = s[0], r = s[1], x = s[3];
                const double pmax = std::min(std::pow(q, 2.0 * r), std::pow(q, x + r));
                s[4] = u[4] * 0.999 * pmax;
                if (!(s[4] > 0.0)) return std::nullopt;
                const double delta = s[4] * std::pow(q, -x - r);
                s[5] = delta + (1.0 - delta) * (0.005 + 0.985 * u[5]);
                s[6] = s[5] + (1.0 - s[5]) * (0.005 + 0.985 * u[6]);
                if (!(delta < s[5]) || !(s[5] < s[6]) || !(s[6] < 1.0)) return std::nullopt;
                return s;
            },
            ELLQ_EVAL_PAIR(eval_ell_direct)));

        out.push_back(make(
            {"check_ell_binomial_upper",
             "elliptic binomials are discretely strongly log-concave in the "
             "upper parameter (0<p<q^2, pq^{-x-1}<a<=bq^k<1, k<=y)",
             {{"q", 0.05, 0.95},
              {"k", 0.0, 4.0, true, true},
              {"y", 1.0, 5.0, false, true},
              {"dx", 0.0, 2.0, true, true},
              {"bqk", 0.02, 0.98},
              {"afrac", 0.02, 1.0},
              {"p", 0.0, 1.0}}},
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);
                s[1] = map_var(u[1], v[1]);
                s[2] = map_from(u[2], std::max(1.0, s[1]), v[2]);
                if (!std::isfinite(s[2])) return std::nullopt;
                s[3] = map_var(u[3], v[3]);
                s[4] = map_var(u[4], v[4]);
                s[5] = map_var(u[5], v[5]);
                const double q = s[0], x = s[2] + s[3];
                const double a = s[5] * s[4];
                const double pmax = std::min(q * q, a * std::pow(q, x + 1.0));
                s[6] = u[6] * 0.999 * pmax;
                if (!(s[6] > 0.0)) return std::nullopt;
                return s;
            },
            ELLQ_EVAL_PAIR(eval_ell_binomial_upper)));

        // --- negative controls -------------------------------------------
        out.push_back(make(
            {"neg_abq_direct_swapped",
             "check_abq_direct outside its domain (a > b); the scan must find "
             "violations",
             {{"q", 0.1, 0.9},
              {"a", 0.1, 0.98},
              {"b", 0.05, 0.9},
              {"r", 0.0, 1.2, false, true},
              {"y", 0.0, 3.0, false, true},
              {"x", 0.0, 4.5, false, true}},
             true},
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                SampleCtx swapped = c;
                swapped.swap_ab = true;
                return sample_abq_ryx(u, swapped);
            },
            ELLQ_EVAL_PAIR(eval_abq_direct)));

        out.push_back(make(
            {"neg_bq_binomial_lower",
             "(b;q)-binomials are not log-concave in the lower parameter; the "
             "scan must find violations",
             {{"q", 0.5, 0.85},
              {"b", 0.75, 0.97},
              {"y", 3.0, 7.0},
              {"x", 3.0, 8.0},
              {"r", 0.2, 0.8},
              {"l", 0.2, 1.3},
              {"k", 0.2, 1.8}},
             true},
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);
                s[1] = map_var(u[1], v[1]);
                s[2] = map_var(u[2], v[2]);                       // y
                s[3] = s[2] + u[3] * 1.0;                         // x in [y, y+1]
                s[4] = map_var(u[4], v[4]);                       // r
                s[5] = s[4] + u[5] * 0.5;                         // l in [r, r+0.5]
                s[6] = s[5] + u[6] * 0.5;                         // k in [l, l+0.5]
                if (s[2] - s[5] < s[3] - s[6]) return std::nullopt;   // y-l >= x-k
                if (s[3] < s[6] + s[4]) return std::nullopt;          // x >= k+r
                return s;
            },
            ELLQ_EVAL_PAIR(eval_bq_binomial_lower)));

        // --- identities ----------------------------------------------------
        auto id_info = [](std::string id, std::string summary, std::vector<VarSpec> vars,
                          double tol) {
            PropertyInfo info{std::move(id), std::move(summary), std::move(vars)};
            info.identity = true;
            info.default_tol = tol;
            return info;
        };

        auto sample_plain = [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
            Sample s{};
            for (std::size_t i = 0; i < c.vars->size(); ++i)
                s[i] = map_var(u[i], (*c.vars)[i]);
            return s;
        };

        out.push_back(make(
            id_info("identity_theta_inversion", "theta(x;p) = -x theta(1/x;p)",
                    {{"x", 0.1, 10.0}, {"p", 0.0, 0.8, false, true}}, 1e-10),
            sample_plain, ELLQ_EVAL_PAIR(eval_id_theta_inversion)));

        out.push_back(make(
            id_info("identity_theta_quasiperiod", "theta(px;p) = -theta(x;p)/x",
                    {{"x", 0.1, 10.0}, {"p", 0.0, 0.8, false, true}}, 1e-10),
            sample_plain, ELLQ_EVAL_PAIR(eval_id_theta_quasiperiod)));

        out.push_back(make(
            id_info("identity_theta_addition",
                    "Weierstrass addition formula for theta products",
                    {{"x", 0.2, 2.5}, {"y", 0.2, 2.5}, {"u", 0.2, 2.5},
                     {"t", 0.2, 2.5}, {"p", 0.0, 0.8, false, true}},
                    1e-10),
            sample_plain, ELLQ_EVAL_PAIR(eval_id_theta_addition)));

        // Sigma-level identities sample coordinates as fractions of the
        // lattice period so the finite differences stay away from the zeros.
        auto sample_sigma_coords = [](std::vector<std::pair<double, double>> windows) {
            return [windows](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);  // p
                const double t0 = -std::log(s[0]) / (2.0 * 3.14159265358979323846);
                for (std::size_t i = 0; i < windows.size(); ++i)
                    s[i + 1] = (windows[i].first + windows[i].second * u[i + 1]) * t0;
                return s;
            };
        };

        out.push_back(make(
            id_info("identity_sigma_addition", "sigma addition formula",
                    {{"p", 0.03, 0.7}, {"x", 0.0, 1.0}, {"y", 0.0, 1.0},
                     {"u", 0.0, 1.0}, {"t", 0.0, 1.0}},
                    1e-10),
            sample_sigma_coords({{0.05, 0.40}, {0.05, 0.40}, {0.05, 0.40}, {0.05, 0.40}}),
            ELLQ_EVAL_PAIR(eval_id_sigma_addition)));

        out.push_back(make(
            id_info("identity_zeta_diff0",
                    "zeta(x+y)+zeta(x-y)-zeta(x+w)-zeta(x-w) = sigma ratio",
                    {{"p", 0.03, 0.6}, {"x", 0.0, 1.0}, {"y", 0.0, 1.0}, {"w", 0.0, 1.0}},
                    1e-7),
            sample_sigma_coords({{0.25, 0.17}, {0.05, 0.15}, {0.05, 0.15}}),
            ELLQ_EVAL_PAIR(eval_id_zeta_diff0)));

        out.push_back(make(
            id_info("identity_zeta_diff2",
                    "zeta(2u)+zeta(2v)-2 zeta(u+v) = sigma ratio",
                    {{"p", 0.03, 0.6}, {"u", 0.0, 1.0}, {"v", 0.0, 1.0}}, 1e-7),
            sample_sigma_coords({{0.05, 0.15}, {0.25, 0.17}}),
            ELLQ_EVAL_PAIR(eval_id_zeta_diff2)));

        out.push_back(make(
            id_info("identity_wp_relation",
                    "wp(v)-wp(u) = sigma(u-v)sigma(u+v)/(sigma^2(u)sigma^2(v))",
                    {{"p", 0.03, 0.5}, {"u", 0.0, 1.0}, {"v", 0.0, 1.0}}, 1e-6),
            sample_sigma_coords({{0.18, 0.12}, {0.32, 0.13}}),
            ELLQ_EVAL_PAIR(eval_id_wp_relation)));

        out.push_back(make(
            id_info("identity_abq_addition",
                    "[x] + W(x)[y-x]_{aq^{2x},bq^x} = [y] for a,b;q-numbers",
                    {{"q", 0.05, 0.95}, {"a", 0.01, 0.97}, {"b", 0.02, 0.99},
                     {"x", 0.0, 5.0, false, true}, {"y", 0.0, 5.0, false, true}},
                    1e-10),
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);
                if (!pair_ab(u, c, 1, 2, s[1], s[2])) return std::nullopt;
                s[3] = map_var(u[3], v[3]);
                s[4] = map_var(u[4], v[4]);
                return s;
            },
            ELLQ_EVAL_PAIR(eval_id_abq_addition)));

        out.push_back(make(
            id_info("identity_ell_addition",
                    "elliptic addition formula, elliptic positivity domain",
                    {{"q", 0.05, 0.95}, {"a", 0.01, 0.97}, {"b", 0.02, 0.99},
                     {"x", 0.0, 4.0, false, true}, {"y", 0.0, 7.0, false, true},
                     {"p", 0.0, 1.0}},
                    1e-10),
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);
                if (!pair_ab(u, c, 1, 2, s[1], s[2])) return std::nullopt;
                s[3] = map_var(u[3], v[3]);
                s[4] = map_from(u[4], s[3], v[4]);
                if (!std::isfinite(s[4])) return std::nullopt;
                const double q = s[0], a = s[1], b = s[2], x = s[3], y = s[4];
                std::vector<double> args;
                push_number_args(args, x, q, a, b);
                push_number_args(args, y, q, a, b);
                push_weight_args(args, x, q, a, b);
                push_number_args(args, y - x, q, a * std::pow(q, 2.0 * x),
                                 b * std::pow(q, x));
                const double m = min_positive(args);
                if (!(m > 0.0)) return std::nullopt;
                s[5] = u[5] * 0.999 * m;
                if (!(s[5] > 0.0)) return std::nullopt;
                return s;
            },
            ELLQ_EVAL_PAIR(eval_id_ell_addition)));

        out.push_back(make(
            id_info("identity_binom_dual_forms",
                    "both product forms of the a,b;q-binomial agree (integer k)",
                    {{"q", 0.05, 0.95}, {"a", 0.01, 0.97}, {"b", 0.02, 0.99},
                     {"k", 0.0, 4.0, true, true}, {"x", 0.0, 8.0, false, true}},
                    1e-10),
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);
                if (!pair_ab(u, c, 1, 2, s[1], s[2])) return std::nullopt;
                s[3] = map_var(u[3], v[3]);
                s[4] = map_from(u[4], s[3], v[4]);
                if (!std::isfinite(s[4])) return std::nullopt;
                return s;
            },
            ELLQ_EVAL_PAIR(eval_id_binom_dual_forms)));

        out.push_back(make(
            id_info("identity_k1_reductions",
                    "k=1 binomials reduce to the corresponding numbers",
                    {{"q", 0.05, 0.95}, {"a", 0.01, 0.97}, {"b", 0.02, 0.99},
                     {"x", 0.0, 5.0, false, true}, {"p", 0.0, 0.8, false, true}},
                    1e-10),
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);
                if (!pair_ab(u, c, 1, 2, s[1], s[2])) return std::nullopt;
                s[3] = map_var(u[3], v[3]);
                s[4] = map_var(u[4], v[4]);
                return s;
            },
            ELLQ_EVAL_PAIR(eval_id_k1_reductions)));

        out.push_back(make(
            id_info("identity_negative_argument",
                    "[x]_{a,b;q} = -W(x) [-x]_{aq^{2x},bq^x;q}",
                    {{"q", 0.05, 0.95}, {"a", 0.01, 0.97}, {"b", 0.02, 0.99},
                     {"x", 0.0, 3.0, false, true}},
                    1e-10),
            [](const double* u, const SampleCtx& c) -> std::optional<Sample> {
                const auto& v = *c.vars;
                Sample s{};
                s[0] = map_var(u[0], v[0]);
                if (!pair_ab(u, c, 1, 2, s[1], s[2])) return std::nullopt;
                s[3] = map_var(u[3], v[3]);
                return s;
            },
            ELLQ_EVAL_PAIR(eval_id_negative_argument)));

        out.push_back(make(
            id_info("identity_bq_difference",
                    "closed form of [x][y]-[x+r][y-r] for (b;q)-numbers",
                    {{"q", 0.05, 0.95}, {"b", 0.005, 0.98},
                     {"r", 0.0, 1.5, false, true}, {"y", 0.0, 4.0, false, true},
                     {"x", 0.0, 5.5, false, true}},
                    1e-10),
            &sample_qparam_ryx, ELLQ_EVAL_PAIR(eval_id_bq_difference)));

        return out;
    }();
    return props;
}

#undef ELLQ_EVAL_PAIR

}  // namespace

const std::vector<Property>& properties() { return build(); }

}  // namespace ellq::verifier::detail
