#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "ellq/elliptic.hpp"
#include "ellq/qbinomials.hpp"
#include "ellq/theta.hpp"
#include "support/oracles.hpp"

using ellq::Nome;
using ellq::ParamSet;
using ellq::ThetaKernelSpec;

namespace {
constexpr double kReportTol = 1e-10;

ParamSet with_p(double q, double a, double b, double p) { return ParamSet{q, a, b, Nome(p)}; }
}

TEST_CASE("elliptic number") {
    // p = 0 evaluates the exact same factors as the a,b;q-number
    oracle::rng gen(41);
    for (int i = 0; i < 40; ++i) {
        const double q = gen.uniform(0.1, 0.9);
        const double a = gen.uniform(0.05, 0.8);
        const double b = a + gen.uniform(0.01, 0.95 - a);
        const double x = gen.uniform(0.0, 4.0);
        CHECK(ellq::elliptic_number(x, with_p(q, a, b, 0.0)) ==
              doctest::Approx(ellq::abq_number(x, ParamSet{q, a, b})).epsilon(1e-15));
    }
    CHECK(ellq::elliptic_number(1.0, with_p(0.5, 0.25, 0.5, 0.05)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // frozen 50-digit product values
    CHECK(oracle::close_rel(ellq::elliptic_number(2.0, with_p(0.5, 0.25, 0.5, 0.05)),
                            0.62060175975466363619, 1e-13));
    // the spec's p = 1/16 point is degenerate: a q^x = p makes theta vanish
    CHECK(ellq::elliptic_number(2.0, with_p(0.5, 0.25, 0.5, 0.0625)) == 0.0);
}

TEST_CASE("elliptic weight") {
    CHECK(ellq::elliptic_weight(0.0, with_p(0.5, 0.25, 0.5, 0.05)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    oracle::rng gen(42);
    for (int i = 0; i < 40; ++i) {
        const double q = gen.uniform(0.1, 0.9);
        const double a = gen.uniform(0.05, 0.8);
        const double b = a + gen.uniform(0.01, 0.95 - a);
        const double x = gen.uniform(0.0, 4.0);
        CHECK(ellq::elliptic_weight(x, with_p(q, a, b, 0.0)) ==
              doctest::Approx(ellq::abq_weight(x, ParamSet{q, a, b})).epsilon(1e-15));
    }
    CHECK(oracle::close_rel(ellq::elliptic_weight(1.0, with_p(0.5, 0.25, 0.5, 0.05)),
                            -0.37939824024533636381, 1e-13));
    // exactly -1: theta(x;p) = theta(p/x;p) pairs the numerator and
    // denominator factors at this parameter point
    CHECK(ellq::elliptic_weight(1.0, with_p(0.5, 0.25, 0.5, 0.0625)) ==
          doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("elliptic binomial") {
    const ParamSet ps = with_p(0.5, 0.2, 0.5, 0.01);
    CHECK(ellq::elliptic_binomial(3.7, 0, ps) == 1.0);
    CHECK(oracle::close_rel(ellq::elliptic_binomial(3.0, 2, ps), 0.68491404144039973688,
                            1e-13));
    // p = 0 reduces to the finite form of the a,b;q-binomial
    oracle::rng gen(43);
    for (int i = 0; i < 30; ++i) {
        const double q = gen.uniform(0.1, 0.9);
        const double a = gen.uniform(0.05, 0.8);
        const double b = a + gen.uniform(0.01, 0.95 - a);
        const int k = static_cast<int>(gen.uniform(0.0, 4.999));
        const double x = k + gen.uniform(0.0, 3.0);
        CHECK(ellq::elliptic_binomial(x, k, with_p(q, a, b, 0.0)) ==
              doctest::Approx(ellq::abq_binomial(x, double(k), ParamSet{q, a, b}))
                  .epsilon(1e-14));
    }
    CHECK_THROWS_AS(ellq::elliptic_binomial(3.0, -1, ps), ellq::domain_error);
}

TEST_CASE("elliptic binomial k = 1 reduction") {
    oracle::rng gen(44);
    for (int i = 0; i < 30; ++i) {
        const double q = gen.uniform(0.1, 0.9);
        const double a = gen.uniform(0.05, 0.8);
        const double b = a + gen.uniform(0.01, 0.95 - a);
        const double x = gen.uniform(0.0, 4.0);
        const double p = gen.uniform(0.0, 0.5);
        const double binom = ellq::elliptic_binomial(x, 1, with_p(q, a, b / q, p));
        const double number = ellq::elliptic_number(x, with_p(q, a, b, p));
        REQUIRE(oracle::close_rel(binom, number, kReportTol));
    }
}

TEST_CASE("elliptic addition formula") {
    oracle::rng gen(45);
    int done = 0;
    while (done < 1000) {
        const double q = gen.uniform(0.05, 0.95);
        const double a = gen.uniform(0.01, 0.9);
        const double b = a + gen.uniform(0.005, 0.98 - a);
        const double x = gen.uniform(0.0, 4.0);
        const double y = x + gen.uniform(0.0, 3.0);
        // keep every theta argument of the formula inside (p, 1)
        const double qx = std::pow(q, x), qy = std::pow(q, y);
        const double m = std::min({a * qy, a * qy / b, a * q * qy * qy / b, qy});
        if (!(m > 0.0)) continue;
        const double p = gen.uniform(0.0, 1.0) * 0.999 * m;
        const ParamSet ps = with_p(q, a, b, p);
        const ParamSet shifted = with_p(q, a * qx * qx, b * qx, p);
        const double lhs = ellq::elliptic_number(x, ps) +
                           ellq::elliptic_weight(x, ps) *
                               ellq::elliptic_number(y - x, shifted);
        const double rhs = ellq::elliptic_number(y, ps);
        REQUIRE(std::abs(lhs - rhs) <=
                kReportTol * std::max({std::abs(lhs), std::abs(rhs), 1.0}));
        ++done;
    }
}

TEST_CASE("degeneration p -> 0 is monotone") {
    // a = 1/5 keeps the binomial away from the a q^{1-k}/b = 1 degeneracy
    const double q = 0.5, a = 0.2, b = 0.5, x = 2.0;
    const double n0 = ellq::abq_number(x, ParamSet{q, a, b});
    const double w0 = ellq::abq_weight(x, ParamSet{q, a, b});
    const double c0 = ellq::abq_binomial(3.0, 2.0, ParamSet{q, a, b});
    double prev_n = 1e300, prev_w = 1e300, prev_c = 1e300;
    for (double p : {1e-3, 1e-5, 1e-7}) {
        const double en = std::abs(ellq::elliptic_number(x, with_p(q, a, b, p)) - n0);
        const double ew = std::abs(ellq::elliptic_weight(x, with_p(q, a, b, p)) - w0);
        const double ec = std::abs(ellq::elliptic_binomial(3.0, 2, with_p(q, a, b, p)) - c0);
        CHECK(en < prev_n);
        CHECK(ew < prev_w);
        CHECK(ec < prev_c);
        prev_n = en;
        prev_w = ew;
        prev_c = ec;
    }
    // the gap scales like p, so p = 1e-12 lands below report tolerance
    CHECK(std::abs(ellq::elliptic_number(x, with_p(q, a, b, 1e-12)) - n0) <= kReportTol);
    CHECK(std::abs(ellq::elliptic_weight(x, with_p(q, a, b, 1e-12)) - w0) <= kReportTol);
    CHECK(std::abs(ellq::elliptic_binomial(3.0, 2, with_p(q, a, b, 1e-12)) - c0) <=
          kReportTol);
}

TEST_CASE("theta kernel degenerates to the rational kernel at p = 0") {
    const ThetaKernelSpec tspec(1.7, 0.8, 0.5, Nome(0.0));
    const ellq::KernelSpec fspec(1.7, 0.8, 0.5);
    for (double u = 0.05; u <= 1.0; u += 0.08) {
        CHECK(ellq::theta_kernel(u, tspec) ==
              doctest::Approx(ellq::f_kernel(u, fspec)).epsilon(1e-14));
        CHECK(ellq::theta_kernel_d1_closed(u, tspec) ==
              doctest::Approx(ellq::f_kernel_d1(u, fspec)).epsilon(1e-13));
    }
}

TEST_CASE("theta kernel domain handling") {
    CHECK_THROWS_AS(ThetaKernelSpec(1.0, 1.0, 0.5, Nome(0.3)), ellq::domain_error);
    const ThetaKernelSpec spec(1.0, 1.0, 0.5, Nome(0.1));
    CHECK(spec.lower() == doctest::Approx(0.4));
    CHECK(spec.upper() == doctest::Approx(1.0));
    // endpoints: f itself is defined (and vanishes), the derivative is not
    CHECK(ellq::theta_kernel(spec.lower(), spec) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(std::abs(ellq::theta_kernel(spec.upper(), spec)) <= 1e-13);
    CHECK_THROWS_AS(ellq::theta_kernel(0.39, spec), ellq::domain_error);
    CHECK_THROWS_AS(ellq::theta_kernel_d1_closed(spec.lower(), spec), ellq::domain_error);
}

TEST_CASE("theta kernel is unimodal with the stationary point at sqrt(p) q^{-x}") {
    const ThetaKernelSpec spec(1.0, 1.0, 0.5, Nome(0.1));
    const double u0 = spec.stationary_point();
    CHECK(u0 == doctest::Approx(std::sqrt(0.1) * 2.0).epsilon(1e-15));
    CHECK(ellq::theta_kernel_d1_closed(0.5 * (spec.lower() + u0), spec) > 0.0);
    CHECK(ellq::theta_kernel_d1_closed(0.5 * (u0 + spec.upper()), spec) < 0.0);
    CHECK(std::abs(ellq::theta_kernel_d1_closed(u0, spec)) <= 1e-12);
}

TEST_CASE("closed-form theta kernel derivative matches finite differences") {
    oracle::rng gen(46);
    for (int i = 0; i < 50; ++i) {
        const double q = gen.uniform(0.2, 0.8);
        const double r = gen.uniform(0.2, 1.2);
        const double x = r + gen.uniform(0.0, 1.5);
        const double p = gen.uniform(0.05, 0.95) * std::pow(q, 2.0 * r);
        const ThetaKernelSpec spec(x, r, q, Nome(p));
        const double lo = spec.lower(), hi = spec.upper();
        // anywhere strictly inside, including the increasing side
        const double u = lo + (0.05 + 0.9 * gen.uniform()) * (hi - lo);
        auto f = [&](double v) { return ellq::theta_kernel(v, spec); };
        const double h = std::min({1e-4, (u - lo) / 8, (hi - u) / 8});
        const double fd = oracle::richardson_diff(f, u, h);
        const double closed = ellq::theta_kernel_d1_closed(u, spec);
        REQUIRE(std::abs(fd - closed) <=
                1e-6 * std::max({std::abs(closed), std::abs(fd), 1e-12}));
    }
}

TEST_CASE("derivatives are negative on the decreasing side") {
    oracle::rng gen(47);
    for (int i = 0; i < 60; ++i) {
        const double q = gen.uniform(0.2, 0.8);
        const double r = gen.uniform(0.2, 1.2);
        const double x = r + gen.uniform(0.0, 1.5);
        const double p = gen.uniform(0.05, 0.95) * std::pow(q, 2.0 * r);
        const ThetaKernelSpec spec(x, r, q, Nome(p));
        const double lo = std::max(spec.stationary_point(), spec.lower());
        const double hi = spec.upper();
        const double u = lo + (0.02 + 0.96 * gen.uniform()) * (hi - lo);
        CHECK(ellq::theta_kernel_d1_closed(u, spec) < 0.0);
        CHECK(ellq::theta_kernel_d2(u, spec) < 0.0);
    }
}

TEST_CASE("term-wise logarithmic-derivative inequality on the decreasing side") {
    // the inequality behind the second-derivative sign argument, checked on
    // the displayed rational functions for each factor index j
    oracle::rng gen(48);
    for (int i = 0; i < 40; ++i) {
        const double q = gen.uniform(0.2, 0.8);
        const double r = gen.uniform(0.2, 1.2);
        const double x = r + gen.uniform(0.0, 1.5);
        const double p = gen.uniform(0.05, 0.95) * std::pow(q, 2.0 * r);
        const ThetaKernelSpec spec(x, r, q, Nome(p));
        const double lo = std::max(spec.stationary_point(), spec.lower());
        const double u = lo + (0.02 + 0.96 * gen.uniform()) * (spec.upper() - lo);
        const double q2x = std::pow(q, 2.0 * x);
        const double qx = std::pow(q, x);
        for (int j = 0; j < 6; ++j) {
            const double pj = std::pow(p, j);
            const double lhs1 = -2.0 * pj * u * q2x / (1.0 - pj * u * u * q2x);
            const double lhs2 = 4.0 * pj * p / (u * u * u * q2x) /
                                (1.0 - pj * p / (u * u * q2x));
            const double rhs1 = -4.0 * pj * qx / (1.0 - pj * u * qx);
            const double rhs2 = 4.0 * pj * p / (u * u * qx) / (1.0 - pj * p / (u * qx));
            REQUIRE(lhs1 >= rhs1);
            REQUIRE(lhs2 >= rhs2);
            REQUIRE(lhs1 + lhs2 > rhs1 + rhs2);
        }
    }
}

TEST_CASE("kernel positivity sweep") {
    const ThetaKernelSpec spec(1.5, 0.7, 0.55, Nome(0.08));
    const double lo = spec.lower(), hi = spec.upper();
    int sign_changes = 0;
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double u = lo + (hi - lo) * double(i) / 1000.0;
        const double f = ellq::theta_kernel(u, spec);
        CHECK(f >= -1e-12);
        if (i > 0 && ((f > 1e-12 && prev < -1e-12) || (f < -1e-12 && prev > 1e-12)))
            ++sign_changes;
        prev = f;
    }
    CHECK(sign_changes == 0);
}

TEST_CASE("per-nome cache is shareable across threads") {
    std::vector<std::thread> pool;
    std::vector<double> vals(8);
    for (int i = 0; i < 8; ++i)
        pool.emplace_back([&vals, i] { vals[static_cast<std::size_t>(i)] =
                                           ellq::p_pochhammer_sq(Nome(0.37)); });
    for (auto& th : pool) th.join();
    for (double v : vals) CHECK(v == vals[0]);
}
