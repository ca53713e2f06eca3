// Scan engine: deterministic sampling (full grid plus counter-seeded random
// points), parallel evaluation, index-ordered reduction, extended-precision
// confirmation of violation candidates, and report serialization.

#include "ellq/verifier.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "detail/properties.hpp"

namespace ellq::verifier {

namespace {

using detail::Property;
using detail::Sample;
using detail::SampleCtx;

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits) { return double(bits >> 11) * 0x1.0p-53; }

enum class Cls : std::uint8_t { pass, violation, skip, noise };

struct Rec {
    Cls cls = Cls::skip;
    double slack = 0.0;
};

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("ELLQ_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 16u));
}

/// Unit coordinates of point `idx`: mixed-radix grid digits for the grid
/// block, a counter-seeded stream for the random block.
void unit_coords(long long idx, long long grid_total, int grid_per_axis,
                 std::uint64_t seed, const std::vector<VarSpec>& vars, double* u) {
    const int d = static_cast<int>(vars.size());
    if (idx < grid_total) {
        long long rest = idx;
        for (int i = 0; i < d; ++i) {
            const int j = static_cast<int>(rest % grid_per_axis);
            rest /= grid_per_axis;
            u[i] = vars[i].closed_lo ? double(j) / grid_per_axis
                                     : double(j + 1) / (grid_per_axis + 1);
        }
    } else {
        std::uint64_t state = seed + 0x9E3779B97F4A7C15ULL * std::uint64_t(idx + 1);
        for (int i = 0; i < d; ++i) u[i] = unit_double(splitmix64(state));
    }
}

const Property& require_property(const std::string& id) {
    for (const Property& p : detail::properties())
        if (p.info.id == id) return p;
    throw domain_error("verifier: unknown property '" + id + "'");
}

nlohmann::json precision_json(const PrecisionPolicy& pol) {
    return {{"product_tail_bound", pol.product_tail_bound},
            {"eta_terms", pol.eta_terms},
            {"fd_step", pol.fd_step},
            {"report_tol", pol.report_tol}};
}

nlohmann::json report_json(const VerificationReport& r, bool include_timing) {
    nlohmann::json j;
    j["property_id"] = r.property_id;
    j["points_tested"] = r.points_tested;
    j["violations"] = r.violations;
    j["domain_skips"] = r.domain_skips;
    j["noise_reclassified"] = r.noise_reclassified;
    j["min_slack"] = r.min_slack;
    j["argmin_point"] = r.argmin_point;
    j["seed"] = r.seed;
    j["elapsed_ms"] = include_timing ? r.elapsed_ms : 0.0;
    j["slack_tol"] = r.slack_tol;
    j["precision"] = precision_json(r.precision);
    j["violations_expected"] = r.violations_expected;
    j["grid_points"] = r.grid_total;
    j["random_points"] = r.random_total;
    j["pass"] = r.passed();
    return j;
}

}  // namespace

const std::vector<PropertyInfo>& catalog() {
    static const std::vector<PropertyInfo> infos = [] {
        std::vector<PropertyInfo> out;
        for (const Property& p : detail::properties()) out.push_back(p.info);
        return out;
    }();
    return infos;
}

const PropertyInfo* find_property(const std::string& id) {
    for (const PropertyInfo& info : catalog())
        if (info.id == id) return &info;
    return nullptr;
}

std::vector<std::string> identity_property_ids() {
    std::vector<std::string> out;
    for (const PropertyInfo& info : catalog())
        if (info.identity) out.push_back(info.id);
    return out;
}

VerificationReport run_scan(const ScanSpec& spec) {
    spec.precision.validate();
    const Property& prop = require_property(spec.property_id);
    if (spec.grid_points == 1 || spec.grid_points < 0)
        throw domain_error("scan: grid_points must be 0 or >= 2");
    if (spec.grid_points == 0 && spec.random_points < 1)
        throw domain_error("scan: need grid_points >= 2 or random_points >= 1");

    std::vector<VarSpec> vars = prop.info.vars;
    for (auto& v : vars) {
        auto it = spec.range_overrides.find(v.name);
        if (it != spec.range_overrides.end()) {
            v.lo = it->second.first;
            v.hi = it->second.second;
            if (!(v.hi >= v.lo)) throw domain_error("scan: empty range for " + v.name);
        }
    }
    for (const auto& [name, range] : spec.range_overrides) {
        bool known = false;
        for (const auto& v : vars) known = known || v.name == name;
        if (!known) throw domain_error("scan: unknown variable '" + name + "'");
    }

    const int d = static_cast<int>(vars.size());
    long long grid_total = 0;
    if (spec.grid_points >= 2) {
        grid_total = 1;
        for (int i = 0; i < d; ++i) {
            grid_total *= spec.grid_points;
            if (grid_total > 50'000'000) throw domain_error("scan: grid too large");
        }
    }
    const long long total = grid_total + spec.random_points;

    const double tol = std::isnan(spec.slack_tol) ? prop.info.default_tol : spec.slack_tol;
    if (!(tol > 0)) throw domain_error("scan: slack_tol must be positive");

    SampleCtx ctx;
    ctx.vars = &vars;
    ctx.swap_ab = spec.swap_ab_order;

    const auto t0 = std::chrono::steady_clock::now();

    std::vector<Rec> recs(static_cast<std::size_t>(total));
    std::atomic<long long> next{0};
    constexpr long long chunk = 256;

    auto worker = [&] {
        double u[detail::max_vars];
        for (;;) {
            const long long begin = next.fetch_add(chunk);
            if (begin >= total) return;
            const long long end = std::min(begin + chunk, total);
            for (long long idx = begin; idx < end; ++idx) {
                unit_coords(idx, grid_total, spec.grid_points, spec.seed, vars, u);
                Rec& rec = recs[static_cast<std::size_t>(idx)];
                std::optional<Sample> pt = prop.sample(u, ctx);
                if (!pt) {
                    rec.cls = Cls::skip;
                    continue;
                }
                double slack;
                try {
                    slack = prop.eval_d(*pt, spec.precision);
                } catch (const std::domain_error&) {
                    rec.cls = Cls::skip;
                    continue;
                }
                if (!std::isfinite(slack)) {
                    rec.cls = Cls::skip;
                    continue;
                }
                if (slack < -tol) {
                    // Confirm in extended precision before counting it.
                    double confirmed;
                    try {
                        confirmed = prop.eval_hi(*pt, spec.precision);
                    } catch (const std::domain_error&) {
                        rec.cls = Cls::skip;
                        continue;
                    }
                    if (confirmed < -tol / 10.0) {
                        rec.cls = Cls::violation;
                        rec.slack = confirmed;
                    } else {
                        rec.cls = Cls::noise;
                        rec.slack = confirmed;
                    }
                } else {
                    rec.cls = Cls::pass;
                    rec.slack = slack;
                }
            }
        }
    };

    const int nthreads = resolve_threads(spec.threads);
    if (nthreads <= 1 || total < 2 * chunk) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    VerificationReport rep;
    rep.property_id = prop.info.id;
    rep.seed = spec.seed;
    rep.slack_tol = tol;
    rep.precision = spec.precision;
    rep.violations_expected = prop.info.negative_control || spec.swap_ab_order;
    rep.grid_total = grid_total;
    rep.random_total = spec.random_points;

    long long argmin_idx = -1;
    for (long long idx = 0; idx < total; ++idx) {
        const Rec& rec = recs[static_cast<std::size_t>(idx)];
        switch (rec.cls) {
            case Cls::skip:
                ++rep.domain_skips;
                continue;
            case Cls::noise:
                ++rep.noise_reclassified;
                break;
            case Cls::violation:
                ++rep.violations;
                break;
            case Cls::pass:
                break;
        }
        ++rep.points_tested;
        if (rec.slack < rep.min_slack) {
            rep.min_slack = rec.slack;
            argmin_idx = idx;
        }
    }
    if (rep.points_tested == 0)
        throw domain_error("scan: empty effective domain for '" + prop.info.id + "'");

    if (argmin_idx >= 0) {
        double u[detail::max_vars];
        unit_coords(argmin_idx, grid_total, spec.grid_points, spec.seed, vars, u);
        if (auto pt = prop.sample(u, ctx)) {
            for (int i = 0; i < d; ++i) rep.argmin_point[vars[i].name] = (*pt)[i];
        }
    }

    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

std::string report_to_json(const VerificationReport& r, bool include_timing) {
    return report_json(r, include_timing).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& rs, bool include_timing) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(report_json(r, include_timing));
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& rs, bool include_timing) {
    std::ostringstream os;
    os << "property_id,points_tested,violations,domain_skips,noise_reclassified,"
          "min_slack,argmin_point,seed,elapsed_ms,slack_tol,violations_expected,pass\n";
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    for (const auto& r : rs) {
        os << r.property_id << ',' << r.points_tested << ',' << r.violations << ','
           << r.domain_skips << ',' << r.noise_reclassified << ',' << num(r.min_slack)
           << ',' << '"';
        bool first = true;
        for (const auto& [k, v] : r.argmin_point) {
            if (!first) os << ';';
            first = false;
            os << k << '=' << num(v);
        }
        os << '"' << ',' << r.seed << ',' << num(include_timing ? r.elapsed_ms : 0.0)
           << ',' << num(r.slack_tol) << ',' << (r.violations_expected ? 1 : 0) << ','
           << (r.passed() ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace ellq::verifier
