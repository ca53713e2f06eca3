#pragma once

#include "ellq/precision.hpp"

namespace ellq {

/// Modified Jacobi theta function theta(x;p) = (x;p)_inf (p/x;p)_inf.
/// For p = 0 this is exactly 1 - x.  The infinite products are truncated
/// once the geometric tail drops below pol.product_tail_bound.
double theta(double x, Nome p, const PrecisionPolicy& pol = {});

/// (a;q)_inf = prod_{j>=0} (1 - a q^j), 0 < q < 1.
double q_pochhammer_inf(double a, double q, const PrecisionPolicy& pol = {});

/// q-shifted factorial with real index, (a;q)_k = (a;q)_inf / (a q^k;q)_inf.
/// Raises pole_error when a factor of the denominator product vanishes
/// (removable poles at a = q^{-n} are not removed).
double q_pochhammer(double a, double q, double k, const PrecisionPolicy& pol = {});

/// Theta shifted factorial (a;q,p)_k = theta(a;p) theta(aq;p) ... theta(aq^{k-1};p)
/// for non-negative integer k.  Reduces to the finite q-factorial at p = 0.
double theta_pochhammer(double a, double q, Nome p, int k, const PrecisionPolicy& pol = {});

/// (p;p)_inf^2, memoized per nome.  Shared by concurrent scan workers.
double p_pochhammer_sq(Nome p, const PrecisionPolicy& pol = {});

}  // namespace ellq
