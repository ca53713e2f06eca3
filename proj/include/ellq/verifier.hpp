#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ellq/precision.hpp"

namespace ellq::verifier {

/// One scan variable: name, sampling range, and whether the grid includes
/// the lower endpoint (used for parameters whose theorem domain is closed
/// on the left, e.g. r = 0 or a = 0).
struct VarSpec {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    bool integer = false;
    bool closed_lo = false;
};

struct PropertyInfo {
    std::string id;
    std::string summary;
    std::vector<VarSpec> vars;
    /// Negative control: the scan is expected to find at least one violation.
    bool negative_control = false;
    /// Identity check: slack is minus the normalized residual.
    bool identity = false;
    /// Default violation threshold on the slack.
    double default_tol = 1e-9;
};

struct ScanSpec {
    std::string property_id;
    /// Grid points per axis (0 = no grid; otherwise >= 2).
    int grid_points = 0;
    long long random_points = 10000;
    std::uint64_t seed = 1;
    /// NaN selects the property's default tolerance.
    double slack_tol = std::numeric_limits<double>::quiet_NaN();
    PrecisionPolicy precision{};
    /// 0 = use ELLQ_THREADS or hardware concurrency.
    int threads = 0;
    /// Per-variable range overrides (lo, hi).
    std::map<std::string, std::pair<double, double>> range_overrides;
    /// Sample the complement order a > b (negative-control domain for the
    /// properties constrained by a < b).
    bool swap_ab_order = false;
};

struct VerificationReport {
    std::string property_id;
    long long points_tested = 0;
    long long violations = 0;
    long long domain_skips = 0;
    /// Double-precision violation candidates that the high-precision pass
    /// reclassified as rounding noise.
    long long noise_reclassified = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    std::map<std::string, double> argmin_point;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
    double slack_tol = 1e-9;
    PrecisionPolicy precision{};
    bool violations_expected = false;
    long long grid_total = 0;
    long long random_total = 0;

    bool passed() const {
        return violations_expected ? violations >= 1 : violations == 0;
    }
};

/// The fixed property catalog: eleven theorem scans, the identity suite and
/// two negative controls.
const std::vector<PropertyInfo>& catalog();
const PropertyInfo* find_property(const std::string& id);
/// Identifiers of the identity properties, in suite order.
std::vector<std::string> identity_property_ids();

/// Deterministic scan: the full grid plus seeded random points, evaluated in
/// parallel and reduced in point-index order, so any thread count produces
/// the identical report.  Every double-precision violation candidate is
/// re-evaluated in extended precision before it is counted.
VerificationReport run_scan(const ScanSpec& spec);

/// Canonical JSON (sorted keys). elapsed_ms is serialized as 0 unless
/// include_timing is set, keeping report files byte-stable across runs.
std::string report_to_json(const VerificationReport& r, bool include_timing = false);
std::string reports_to_json(const std::vector<VerificationReport>& rs,
                            bool include_timing = false);
/// CSV with a header row, one property per row.
std::string reports_to_csv(const std::vector<VerificationReport>& rs,
                           bool include_timing = false);

}  // namespace ellq::verifier
