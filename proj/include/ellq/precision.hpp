#pragma once

#include "ellq/errors.hpp"

namespace ellq {

/// Truncation orders and tolerances governing every infinite product and
/// series in the library.  The defaults are suitable for double precision;
/// all identity and inequality checks downstream quote their tolerances
/// relative to report_tol.
struct PrecisionPolicy {
    /// Target relative tail of each truncated infinite product.
    double product_tail_bound = 1e-15;
    /// Minimum number of terms consumed by the eta series.
    int eta_terms = 16;
    /// Base step for finite-difference derivatives.
    double fd_step = 1e-5;
    /// Residual tolerance used when asserting identities.
    double report_tol = 1e-10;

    void validate() const {
        if (!(product_tail_bound > 0) || !(fd_step > 0) || !(report_tol > 0))
            throw domain_error("precision: all fields must be strictly positive");
        if (!(product_tail_bound < report_tol))
            throw domain_error("precision: product_tail_bound must be below report_tol");
        if (eta_terms < 1)
            throw domain_error("precision: eta_terms must be >= 1");
    }
};

/// Elliptic nome.  p = 0 is allowed and selects the q-degeneration
/// (every theta factor collapses to 1 - x).
class Nome {
public:
    Nome() : p_(0.0) {}
    explicit Nome(double p) : p_(p) {
        if (!(p >= 0.0) || !(p < 1.0))
            throw domain_error("nome: p must satisfy 0 <= p < 1");
    }
    double value() const { return p_; }
    bool is_zero() const { return p_ == 0.0; }

private:
    double p_;
};

}  // namespace ellq
