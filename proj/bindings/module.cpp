#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "gbsoft/bench.hpp"
#include "gbsoft/gb_dist.hpp"
#include "gbsoft/metrics.hpp"
#include "gbsoft/ordinal_loss.hpp"
#include "gbsoft/param_solver.hpp"
#include "gbsoft/soft_encoder.hpp"
#include "gbsoft/special_math.hpp"

namespace py = pybind11;
using namespace gbsoft;

namespace {

std::vector<std::vector<double>> matrix_rows(const SoftLabelMatrix& m) {
    std::vector<std::vector<double>> rows(m.num_classes);
    for (int k = 1; k <= m.num_classes; ++k) {
        rows[k - 1].assign(m.row(k), m.row(k) + m.num_classes);
    }
    return rows;
}

SoftLabelMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    SoftLabelMatrix m;
    m.num_classes = static_cast<int>(rows.size());
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m.num_classes) {
            throw std::invalid_argument("label matrix must be square");
        }
        m.entries.insert(m.entries.end(), row.begin(), row.end());
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_gbsoft, m) {
    m.doc() = "Generalised-beta soft-label toolkit for ordinal classification";
    m.attr("__version__") = "0.1.0";

    py::class_<GBParams>(m, "GBParams")
        .def(py::init<double, double, double>(), py::arg("alpha") = 1.0, py::arg("u") = 1.0,
             py::arg("v") = 1.0)
        .def_readwrite("alpha", &GBParams::alpha)
        .def_readwrite("u", &GBParams::u)
        .def_readwrite("v", &GBParams::v)
        .def("__repr__", [](const GBParams& p) {
            std::ostringstream os;
            os << "GBParams(alpha=" << p.alpha << ", u=" << p.u << ", v=" << p.v << ")";
            return os.str();
        });

    m.def("log_gamma", &log_gamma, py::arg("z"));
    m.def("log_beta", &log_beta, py::arg("u"), py::arg("v"));
    m.def("reg_inc_beta", &reg_inc_beta, py::arg("z"), py::arg("u"), py::arg("v"));

    m.def("pdf", &pdf, py::arg("params"), py::arg("x"));
    m.def("cdf", &cdf, py::arg("params"), py::arg("x"));
    m.def("moment", &moment, py::arg("params"), py::arg("h"));
    m.def("mean", &mean, py::arg("params"));
    m.def("variance", &variance, py::arg("params"));
    m.def(
        "sample",
        [](const GBParams& p, std::uint64_t seed, int count) {
            std::mt19937_64 rng(seed);
            std::vector<double> out(count);
            for (double& x : out) x = sample(p, rng);
            return out;
        },
        py::arg("params"), py::arg("seed"), py::arg("count") = 1);

    m.def(
        "intermediate_params",
        [](int j, int J) { return intermediate_params(j, J); },
        py::arg("j"), py::arg("num_classes"));
    m.def(
        "first_class_v",
        [](int J, double lam, double eta) {
            return first_class_v(SolverConfig{J, lam, eta});
        },
        py::arg("num_classes"), py::arg("lam") = 1.0, py::arg("eta") = 1.0);
    m.def(
        "last_class_u",
        [](int J, double lam, double eta) {
            return last_class_u(SolverConfig{J, lam, eta});
        },
        py::arg("num_classes"), py::arg("lam") = 1.0, py::arg("eta") = 1.0);
    m.def(
        "class_distributions",
        [](int J, double lam, double eta) {
            return class_distributions(SolverConfig{J, lam, eta}).per_class;
        },
        py::arg("num_classes"), py::arg("lam") = 1.0, py::arg("eta") = 1.0);

    m.def(
        "encode_matrix",
        [](int J, double lam, double eta) {
            return matrix_rows(encode_matrix(SolverConfig{J, lam, eta}));
        },
        py::arg("num_classes"), py::arg("lam") = 1.0, py::arg("eta") = 1.0);
    m.def(
        "one_hot_matrix", [](int J) { return matrix_rows(one_hot_matrix(J)); },
        py::arg("num_classes"));

    m.def("softmax", &softmax, py::arg("logits"));
    m.def(
        "reg_cce",
        [](const std::vector<double>& p, int k, const std::vector<std::vector<double>>& labels) {
            return reg_cce(p, k, matrix_from_rows(labels));
        },
        py::arg("probs"), py::arg("true_class"), py::arg("labels"));
    m.def(
        "reg_cce_grad",
        [](const std::vector<double>& z, int k, const std::vector<std::vector<double>>& labels) {
            return reg_cce_grad(z, k, matrix_from_rows(labels));
        },
        py::arg("logits"), py::arg("true_class"), py::arg("labels"));

    m.def(
        "evaluate",
        [](const std::vector<int>& y_true, const std::vector<int>& y_pred, int J) {
            const MetricReport r = evaluate(confusion(y_true, y_pred, J));
            py::dict out;
            out["qwk"] = r.qwk;
            out["ms"] = r.ms;
            out["mae"] = r.mae;
            out["ccr"] = r.ccr;
            out["one_off"] = r.one_off;
            out["gmsec"] = r.gmsec;
            out["sensitivities"] = r.sensitivities;
            return out;
        },
        py::arg("y_true"), py::arg("y_pred"), py::arg("num_classes"));

    m.def(
        "compare_runs",
        [](const std::vector<double>& a, const std::vector<double>& b, int num_comparisons) {
            const TTestResult r = compare_runs(a, b, num_comparisons);
            py::dict out;
            out["t"] = r.t;
            out["p"] = r.p;
            out["threshold"] = r.threshold;
            out["significant"] = r.significant;
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("num_comparisons") = 1);

    py::register_exception<UndefinedMetricError>(m, "UndefinedMetricError", PyExc_ValueError);
}
