#pragma once

#include "ellq/precision.hpp"
#include "ellq/qnumbers.hpp"

namespace ellq {

/// Continuous binomial coefficient Gamma(1+x) / (Gamma(1+k) Gamma(1+x-k)).
/// Raises pole_error when any of 1+x, 1+k, 1+x-k is a non-positive integer.
double continuous_binomial(double x, double k);

/// q-binomial (q^{1+k};q)_{x-k} / (q;q)_{x-k}; matches the Gaussian binomial
/// polynomial at integer x, k.
double q_binomial(double x, double k, double q, const PrecisionPolicy& pol = {});

/// a;q-binomial, symmetric under k <-> x-k.
double aq_binomial(double x, double k, double a, double q, const PrecisionPolicy& pol = {});

/// (b;q)-binomial; not symmetric under k <-> x-k.
double bq_binomial(double x, double k, double b, double q, const PrecisionPolicy& pol = {});

/// a,b;q-binomial coefficient.  Non-negative integer k uses the finite
/// k-factor product form; real k uses the ratio of infinite products.
/// Both forms agree wherever both apply.
double abq_binomial(double x, double k, const ParamSet& params, const PrecisionPolicy& pol = {});

}  // namespace ellq
