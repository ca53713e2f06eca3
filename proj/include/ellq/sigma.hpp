#pragma once

#include "ellq/precision.hpp"

namespace ellq {

/// Weierstrass sigma machinery for the lattice with half-periods (1/2, tau/2),
/// tau purely imaginary, nome p = e^{2 pi i tau} in [0,1).
///
/// All functions here work on the real coordinate t along the imaginary axis,
/// z = i t.  In that coordinate every i-factor of the closed form collapses to
/// a fixed sign:
///
///     sigma(t)  =  sigma_W(i t) / i        (real valued)
///     zeta_w(t) =  d/dt log sigma(t)  =  i * zeta_W(i t)
///     wp(t)     = -d/dt zeta_w(t)     = -wp_W(i t)
///
/// and the classical identities (addition formula, zeta-difference relations,
/// the wp difference relation) hold verbatim for these real functions, with
/// sigma'(0) = 1.
class SigmaContext {
public:
    explicit SigmaContext(Nome p, const PrecisionPolicy& pol = {});

    Nome nome() const { return p_; }
    /// The constant eta of the exponential prefactor.
    double eta() const { return eta_; }
    /// (p;p)_inf^2 normalization constant.
    double p_pochhammer_sq() const { return pp_sq_; }
    /// Imaginary part of tau (p = e^{-2 pi tau_im}); +inf for p = 0.
    double tau_im() const { return tau_im_; }
    /// Lattice period along the t axis; sigma vanishes at integer multiples.
    /// +inf for p = 0 (only the zero at t = 0 remains).
    double lattice_period() const { return tau_im_; }
    /// Distance from t to the nearest zero of sigma.
    double lattice_distance(double t) const;

    const PrecisionPolicy& policy() const { return pol_; }

private:
    Nome p_;
    PrecisionPolicy pol_;
    double eta_;
    double pp_sq_;
    double tau_im_;
};

/// sigma(t): closed form e^{-eta t^2 + pi t} theta(e^{-2 pi t};p) / (2 pi (p;p)_inf^2).
double sigma(double t, const SigmaContext& ctx, const PrecisionPolicy& pol = {});

/// zeta_w(t) = d/dt log sigma(t), Richardson-extrapolated central differences.
/// Raises pole_error at lattice points.
double zeta_w(double t, const SigmaContext& ctx, const PrecisionPolicy& pol = {});

/// wp(t) = -d/dt zeta_w(t), same differentiation scheme applied to zeta_w.
/// Accuracy is at least ~1e-7 relative while t stays a modest fraction of the
/// lattice period away from the lattice; see lattice_distance().
double wp(double t, const SigmaContext& ctx, const PrecisionPolicy& pol = {});

}  // namespace ellq
