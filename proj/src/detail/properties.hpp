#pragma once

// Internal property registry backing the verifier.

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "ellq/verifier.hpp"

namespace ellq::verifier::detail {

inline constexpr int max_vars = 8;
using Sample = std::array<double, max_vars>;

struct SampleCtx {
    const std::vector<VarSpec>* vars = nullptr;
    bool swap_ab = false;
};

struct Property {
    PropertyInfo info;
    /// Maps one unit draw per variable onto a parameter point honoring the
    /// property's chained constraints; nullopt flags a constraint miss.
    std::function<std::optional<Sample>(const double* unit, const SampleCtx&)> sample;
    /// Slack at a point (negative slack beyond tolerance = violation).
    /// Throws pole_error/domain_error for points outside the math domain.
    std::function<double(const Sample&, const PrecisionPolicy&)> eval_d;
    /// Extended-precision re-evaluation used to confirm violations.
    std::function<double(const Sample&, const PrecisionPolicy&)> eval_hi;
};

const std::vector<Property>& properties();

}  // namespace ellq::verifier::detail
