// Python bindings for the main operations and the scan engine.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ellq/elliptic.hpp"
#include "ellq/qbinomials.hpp"
#include "ellq/qnumbers.hpp"
#include "ellq/sigma.hpp"
#include "ellq/theta.hpp"
#include "ellq/verifier.hpp"

namespace py = pybind11;

namespace {

ellq::PrecisionPolicy make_policy(double tail_bound, int eta_terms, double fd_step,
                                  double report_tol) {
    ellq::PrecisionPolicy pol{tail_bound, eta_terms, fd_step, report_tol};
    pol.validate();
    return pol;
}

ellq::ParamSet make_params(double q, double a, double b, double p) {
    return ellq::ParamSet{q, a, b, ellq::Nome(p)};
}

}  // namespace

PYBIND11_MODULE(ellq, m) {
    m.doc() = "generalized q- and elliptic numbers, binomial coefficients, and "
              "a log-concavity certification harness";

    py::class_<ellq::PrecisionPolicy>(m, "PrecisionPolicy")
        .def(py::init(&make_policy), py::arg("product_tail_bound") = 1e-15,
             py::arg("eta_terms") = 16, py::arg("fd_step") = 1e-5,
             py::arg("report_tol") = 1e-10)
        .def_readonly("product_tail_bound", &ellq::PrecisionPolicy::product_tail_bound)
        .def_readonly("eta_terms", &ellq::PrecisionPolicy::eta_terms)
        .def_readonly("fd_step", &ellq::PrecisionPolicy::fd_step)
        .def_readonly("report_tol", &ellq::PrecisionPolicy::report_tol);

    m.def("q_number", &ellq::q_number, py::arg("x"), py::arg("q"));
    m.def("quantum_number", &ellq::quantum_number, py::arg("x"), py::arg("q"));
    m.def("aq_number", &ellq::aq_number, py::arg("x"), py::arg("a"), py::arg("q"));
    m.def("bq_number", &ellq::bq_number, py::arg("x"), py::arg("b"), py::arg("q"));
    m.def(
        "abq_number",
        [](double x, double q, double a, double b) {
            return ellq::abq_number(x, make_params(q, a, b, 0.0));
        },
        py::arg("x"), py::arg("q"), py::arg("a"), py::arg("b"));
    m.def(
        "abq_weight",
        [](double x, double q, double a, double b) {
            return ellq::abq_weight(x, make_params(q, a, b, 0.0));
        },
        py::arg("x"), py::arg("q"), py::arg("a"), py::arg("b"));
    m.def(
        "theta",
        [](double x, double p, const ellq::PrecisionPolicy& pol) {
            return ellq::theta(x, ellq::Nome(p), pol);
        },
        py::arg("x"), py::arg("p"), py::arg("policy") = ellq::PrecisionPolicy{});
    m.def(
        "q_pochhammer_inf",
        [](double a, double q) { return ellq::q_pochhammer_inf(a, q); }, py::arg("a"),
        py::arg("q"));
    m.def(
        "q_pochhammer",
        [](double a, double q, double k) { return ellq::q_pochhammer(a, q, k); },
        py::arg("a"), py::arg("q"), py::arg("k"));
    m.def(
        "theta_pochhammer",
        [](double a, double q, double p, int k) {
            return ellq::theta_pochhammer(a, q, ellq::Nome(p), k);
        },
        py::arg("a"), py::arg("q"), py::arg("p"), py::arg("k"));
    m.def(
        "sigma",
        [](double t, double p) {
            ellq::SigmaContext ctx((ellq::Nome(p)));
            return ellq::sigma(t, ctx);
        },
        py::arg("t"), py::arg("p"));
    m.def(
        "zeta_w",
        [](double t, double p) {
            ellq::SigmaContext ctx((ellq::Nome(p)));
            return ellq::zeta_w(t, ctx);
        },
        py::arg("t"), py::arg("p"));
    m.def(
        "wp",
        [](double t, double p) {
            ellq::SigmaContext ctx((ellq::Nome(p)));
            return ellq::wp(t, ctx);
        },
        py::arg("t"), py::arg("p"));
    m.def("continuous_binomial", &ellq::continuous_binomial, py::arg("x"), py::arg("k"));
    m.def(
        "q_binomial",
        [](double x, double k, double q) { return ellq::q_binomial(x, k, q); },
        py::arg("x"), py::arg("k"), py::arg("q"));
    m.def(
        "aq_binomial",
        [](double x, double k, double a, double q) {
            return ellq::aq_binomial(x, k, a, q);
        },
        py::arg("x"), py::arg("k"), py::arg("a"), py::arg("q"));
    m.def(
        "bq_binomial",
        [](double x, double k, double b, double q) {
            return ellq::bq_binomial(x, k, b, q);
        },
        py::arg("x"), py::arg("k"), py::arg("b"), py::arg("q"));
    m.def(
        "abq_binomial",
        [](double x, double k, double q, double a, double b) {
            return ellq::abq_binomial(x, k, make_params(q, a, b, 0.0));
        },
        py::arg("x"), py::arg("k"), py::arg("q"), py::arg("a"), py::arg("b"));
    m.def(
        "elliptic_number",
        [](double x, double q, double a, double b, double p) {
            return ellq::elliptic_number(x, make_params(q, a, b, p));
        },
        py::arg("x"), py::arg("q"), py::arg("a"), py::arg("b"), py::arg("p"));
    m.def(
        "elliptic_weight",
        [](double x, double q, double a, double b, double p) {
            return ellq::elliptic_weight(x, make_params(q, a, b, p));
        },
        py::arg("x"), py::arg("q"), py::arg("a"), py::arg("b"), py::arg("p"));
    m.def(
        "elliptic_binomial",
        [](double x, int k, double q, double a, double b, double p) {
            return ellq::elliptic_binomial(x, k, make_params(q, a, b, p));
        },
        py::arg("x"), py::arg("k"), py::arg("q"), py::arg("a"), py::arg("b"), py::arg("p"));
    m.def(
        "f_kernel",
        [](double u, double x, double r, double q) {
            return ellq::f_kernel(u, ellq::KernelSpec(x, r, q));
        },
        py::arg("u"), py::arg("x"), py::arg("r"), py::arg("q"));
    m.def(
        "f_kernel_d1",
        [](double u, double x, double r, double q) {
            return ellq::f_kernel_d1(u, ellq::KernelSpec(x, r, q));
        },
        py::arg("u"), py::arg("x"), py::arg("r"), py::arg("q"));
    m.def(
        "theta_kernel",
        [](double u, double x, double r, double q, double p) {
            return ellq::theta_kernel(u, ellq::ThetaKernelSpec(x, r, q, ellq::Nome(p)));
        },
        py::arg("u"), py::arg("x"), py::arg("r"), py::arg("q"), py::arg("p"));
    m.def(
        "theta_kernel_d1",
        [](double u, double x, double r, double q, double p) {
            return ellq::theta_kernel_d1_closed(
                u, ellq::ThetaKernelSpec(x, r, q, ellq::Nome(p)));
        },
        py::arg("u"), py::arg("x"), py::arg("r"), py::arg("q"), py::arg("p"));

    m.def("properties", [] {
        std::vector<std::string> ids;
        for (const auto& info : ellq::verifier::catalog()) ids.push_back(info.id);
        return ids;
    });
    m.def(
        "run_scan",
        [](const std::string& property_id, int grid, long long random_points,
           std::uint64_t seed, int threads) {
            ellq::verifier::ScanSpec spec;
            spec.property_id = property_id;
            spec.grid_points = grid;
            spec.random_points = random_points;
            spec.seed = seed;
            spec.threads = threads;
            const auto rep = ellq::verifier::run_scan(spec);
            py::dict d;
            d["property_id"] = rep.property_id;
            d["points_tested"] = rep.points_tested;
            d["violations"] = rep.violations;
            d["domain_skips"] = rep.domain_skips;
            d["noise_reclassified"] = rep.noise_reclassified;
            d["min_slack"] = rep.min_slack;
            d["argmin_point"] = rep.argmin_point;
            d["seed"] = rep.seed;
            d["pass"] = rep.passed();
            return d;
        },
        py::arg("property_id"), py::arg("grid") = 0, py::arg("random_points") = 2000,
        py::arg("seed") = 1, py::arg("threads") = 0);
}
