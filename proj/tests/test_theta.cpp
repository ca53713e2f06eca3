#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellq/theta.hpp"
#include "support/oracles.hpp"

using ellq::Nome;
using ellq::PrecisionPolicy;

namespace {
const PrecisionPolicy pol{};
}

TEST_CASE("theta at p = 0 is the linear factor") {
    CHECK(ellq::theta(0.5, Nome(0.0)) == 0.5);
    CHECK(ellq::theta(-2.0, Nome(0.0)) == 3.0);
}

TEST_CASE("theta frozen values") {
    // 60-term truncated products evaluated in 50-digit arithmetic.
    CHECK(oracle::close_rel(ellq::theta(0.5, Nome(0.25)), 0.17591518468137042061, 1e-14));
    CHECK(oracle::close_rel(ellq::theta(0.3, Nome(0.1)), 0.43450491313098601013, 1e-14));
    CHECK(oracle::close_rel(ellq::theta(2.0, Nome(0.1)), -0.73901872371383851613, 1e-14));
}

TEST_CASE("theta inversion at a fixed pair") {
    CHECK(ellq::theta(2.0, Nome(0.1)) ==
          doctest::Approx(-2.0 * ellq::theta(0.5, Nome(0.1))).epsilon(1e-14));
}

TEST_CASE("theta domain errors") {
    CHECK_THROWS_AS(ellq::theta(0.0, Nome(0.3)), ellq::domain_error);
    CHECK_THROWS_AS(Nome(1.0), ellq::domain_error);
    CHECK_THROWS_AS(Nome(-0.1), ellq::domain_error);
}

TEST_CASE("q_pochhammer_inf values") {
    CHECK(ellq::q_pochhammer_inf(0.0, 0.5) == 1.0);
    CHECK(ellq::q_pochhammer_inf(1.0, 0.5) == 0.0);
    CHECK(oracle::close_rel(ellq::q_pochhammer_inf(0.5, 0.5), 0.28878809508660242128, 1e-14));
    CHECK_THROWS_AS(ellq::q_pochhammer_inf(0.5, 1.0), ellq::domain_error);
    CHECK_THROWS_AS(ellq::q_pochhammer_inf(0.5, -0.2), ellq::domain_error);
}

TEST_CASE("q_pochhammer with real index") {
    CHECK(ellq::q_pochhammer(0.4, 0.5, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ellq::q_pochhammer(0.5, 0.5, 2.0) == doctest::Approx(0.375).epsilon(1e-13));
    CHECK(oracle::close_rel(ellq::q_pochhammer(0.3, 0.5, 1.5), 0.63572439046255407745, 1e-13));
    // definitional ratio
    const double direct = ellq::q_pochhammer_inf(0.3, 0.5) /
                          ellq::q_pochhammer_inf(0.3 * std::pow(0.5, 1.5), 0.5);
    CHECK(ellq::q_pochhammer(0.3, 0.5, 1.5) == doctest::Approx(direct).epsilon(1e-15));
}

TEST_CASE("q_pochhammer matches the finite product at integer index") {
    oracle::rng gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = gen.uniform(-1.5, 0.95);
        const double q = gen.uniform(0.1, 0.9);
        const int k = static_cast<int>(gen.uniform(0.0, 7.0));
        double fin = 1.0;
        for (int j = 0; j < k; ++j) fin *= (1.0 - a * std::pow(q, j));
        CHECK(oracle::close_rel(ellq::q_pochhammer(a, q, k), fin, pol.report_tol));
    }
}

TEST_CASE("q_pochhammer pole is not removed") {
    // a q^k = 1 makes a denominator factor vanish.
    CHECK_THROWS_AS(ellq::q_pochhammer(2.0, 0.5, 1.0), ellq::pole_error);
}

TEST_CASE("theta_pochhammer") {
    CHECK(ellq::theta_pochhammer(0.4, 0.5, Nome(0.2), 0) == 1.0);
    const double p0 = ellq::theta_pochhammer(0.3, 0.5, Nome(0.0), 3);
    CHECK(p0 == doctest::Approx((1 - 0.3) * (1 - 0.15) * (1 - 0.075)).epsilon(1e-15));
    const double tp = ellq::theta_pochhammer(0.3, 0.5, Nome(0.1), 2);
    CHECK(tp == doctest::Approx(ellq::theta(0.3, Nome(0.1)) *
                                ellq::theta(0.15, Nome(0.1))).epsilon(1e-15));
    CHECK(oracle::close_rel(tp, 0.11215386993132802163, 1e-14));
    CHECK_THROWS_AS(ellq::theta_pochhammer(0.0, 0.5, Nome(0.1), 2), ellq::domain_error);
    CHECK_THROWS_AS(ellq::theta_pochhammer(0.3, 0.5, Nome(0.1), -1), ellq::domain_error);
}

TEST_CASE("inversion and quasi-periodicity over the sample grid") {
    const double ps[] = {0.0, 0.05, 0.3, 0.8};
    for (double p : ps) {
        for (double x = 0.1; x <= 10.0; x += 0.23) {
            const double th = ellq::theta(x, Nome(p));
            const double n = std::max(1.0, std::abs(th));
            CHECK(std::abs(th + x * ellq::theta(1.0 / x, Nome(p))) <= pol.report_tol * n);
            if (p > 0.0)
                CHECK(std::abs(ellq::theta(p * x, Nome(p)) + th / x) <= pol.report_tol * n);
        }
    }
}

TEST_CASE("theta addition formula over random positive arguments") {
    oracle::rng gen(2024);
    const double ps[] = {0.0, 0.05, 0.3, 0.8};
    for (int trial = 0; trial < 1000; ++trial) {
        const Nome p(ps[trial % 4]);
        const double x = gen.uniform(0.2, 2.5);
        const double y = gen.uniform(0.2, 2.5);
        const double u = gen.uniform(0.2, 2.5);
        const double t = gen.uniform(0.2, 2.5);
        auto th = [&](double z) { return ellq::theta(z, p); };
        const double t1 = th(x * y) * th(x / y) * th(u * t) * th(u / t);
        const double t2 = th(x * t) * th(x / t) * th(u * y) * th(u / y);
        const double t3 = (u / y) * th(y * t) * th(y / t) * th(x * u) * th(x / u);
        const double norm = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
        REQUIRE(std::abs(t1 - t2 - t3) <= pol.report_tol * norm);
    }
}

TEST_CASE("truncation rule copes with a nome close to 1") {
    const double th = ellq::theta(0.7, Nome(0.97));
    CHECK(std::isfinite(th));
    const double n = std::max(1.0, std::abs(th));
    CHECK(std::abs(th + 0.7 * ellq::theta(1.0 / 0.7, Nome(0.97))) <= pol.report_tol * n);
}

TEST_CASE("precision policy validation") {
    PrecisionPolicy bad = pol;
    bad.product_tail_bound = 1e-9;  // above report_tol
    CHECK_THROWS_AS(bad.validate(), ellq::domain_error);
    bad = pol;
    bad.eta_terms = 0;
    CHECK_THROWS_AS(bad.validate(), ellq::domain_error);
    bad = pol;
    bad.fd_step = 0.0;
    CHECK_THROWS_AS(bad.validate(), ellq::domain_error);
}

TEST_CASE("p_pochhammer_sq is memoized consistently") {
    const double v1 = ellq::p_pochhammer_sq(Nome(0.2));
    const double v2 = ellq::p_pochhammer_sq(Nome(0.2));
    CHECK(v1 == v2);
    CHECK(oracle::close_rel(v1, 0.5781059604773651879, 1e-14));
}
