#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jointinfo/asymptotics.hpp"
#include "jointinfo/encoding.hpp"
#include "jointinfo/inference.hpp"
#include "jointinfo/measures.hpp"
#include "jointinfo/montecarlo.hpp"
#include "jointinfo/pmf.hpp"

namespace py = pybind11;
using namespace jointinfo;

namespace {

std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Plug-in joint entropy and mutual information estimators";
  m.attr("__version__") = JOINTINFO_VERSION;

  py::class_<PairShape>(m, "PairShape")
      .def(py::init<std::size_t, std::size_t>(), py::arg("rows"), py::arg("cols"))
      .def_property_readonly("rows", &PairShape::rows)
      .def_property_readonly("cols", &PairShape::cols)
      .def_property_readonly("cells", &PairShape::cells)
      .def("__repr__", [](const PairShape &s) {
        return "PairShape(" + std::to_string(s.rows()) + ", " + std::to_string(s.cols()) + ")";
      });

  m.def("encode_pair", &encode_pair, py::arg("i"), py::arg("j"), py::arg("shape"));
  m.def(
      "decode_index",
      [](std::size_t k, const PairShape &shape) {
        const Cell c = decode_index(k, shape);
        return py::make_tuple(c.row, c.col);
      },
      py::arg("k"), py::arg("shape"));
  m.def("diagonal_index", &diagonal_index, py::arg("i"), py::arg("shape"));

  py::class_<JointPmf>(m, "JointPmf")
      .def(py::init([](const std::vector<std::vector<double>> &rows, bool strict,
                       bool renormalize) {
             return JointPmf::from_rows(rows, PmfOptions{strict, renormalize});
           }),
           py::arg("rows"), py::arg("strict") = false, py::arg("renormalize") = false)
      .def_property_readonly("shape", &JointPmf::shape)
      .def_property_readonly("probs", [](const JointPmf &p) { return to_vector(p.probs()); })
      .def("at", &JointPmf::at, py::arg("i"), py::arg("j"));

  py::class_<ZPmf>(m, "ZPmf")
      .def(py::init([](std::size_t rows, std::size_t cols, std::vector<double> probs, bool strict,
                       bool renormalize) {
             return ZPmf(PairShape(rows, cols), std::move(probs), PmfOptions{strict, renormalize});
           }),
           py::arg("rows"), py::arg("cols"), py::arg("probs"), py::arg("strict") = false,
           py::arg("renormalize") = false)
      .def_property_readonly("shape", &ZPmf::shape)
      .def_property_readonly("probs", [](const ZPmf &p) { return to_vector(p.probs()); })
      .def("at", &ZPmf::at, py::arg("k"));

  py::class_<EmpiricalPmf>(m, "EmpiricalPmf")
      .def(py::init([](std::size_t rows, std::size_t cols, std::vector<std::uint64_t> counts) {
             return EmpiricalPmf(PairShape(rows, cols), std::move(counts));
           }),
           py::arg("rows"), py::arg("cols"), py::arg("counts"))
      .def_property_readonly("shape", &EmpiricalPmf::shape)
      .def_property_readonly("n", &EmpiricalPmf::n)
      .def_property_readonly("counts",
                             [](const EmpiricalPmf &e) {
                               return std::vector<std::uint64_t>(e.counts().begin(),
                                                                 e.counts().end());
                             })
      .def("freqs", &EmpiricalPmf::freqs)
      .def("to_zpmf", &EmpiricalPmf::to_zpmf);

  m.def("z_view", &z_view);
  m.def("joint_view", &joint_view);
  m.def(
      "estimate_pmf",
      [](const std::vector<std::size_t> &sample, const PairShape &shape) {
        return estimate_pmf(sample, shape);
      },
      py::arg("sample"), py::arg("shape"));
  m.def("marginal_x", &marginal_x);
  m.def("marginal_y", &marginal_y);
  m.def("conditional_x_given_y", &conditional_x_given_y, py::arg("p"), py::arg("j"));
  m.def("conditional_y_given_x", &conditional_y_given_x, py::arg("p"), py::arg("i"));

  py::enum_<Measure>(m, "Measure")
      .value("JOINT_ENTROPY", Measure::JointEntropy)
      .value("MUTUAL_INFORMATION", Measure::MutualInformation);
  py::enum_<Axis>(m, "Axis").value("X", Axis::X).value("Y", Axis::Y);

  m.def("entropy", [](const std::vector<double> &p) { return entropy(p); }, py::arg("p"));
  m.def("joint_entropy", &joint_entropy);
  m.def("mutual_information", &mutual_information);
  m.def(
      "kl_divergence",
      [](const std::vector<double> &p, const std::vector<double> &q) {
        return kl_divergence(p, q);
      },
      py::arg("p"), py::arg("q"));

  py::class_<VariancePair>(m, "VariancePair")
      .def_readonly("canonical", &VariancePair::canonical)
      .def_readonly("three_halves", &VariancePair::three_halves)
      .def_property_readonly("discrepancy", &VariancePair::discrepancy);

  m.def("rate_constant", &rate_constant);
  m.def("entropy_variance", &entropy_variance);
  m.def("mi_variance", &mi_variance);
  m.def("diagonal_mi_variance", &diagonal_mi_variance);
  m.def("marginal_variance", &marginal_variance, py::arg("p"), py::arg("axis"),
        py::arg("index"));
  m.def("multinomial_covariance", &multinomial_covariance);
  m.def(
      "confidence_interval",
      [](double estimate, double variance, std::uint64_t n, double alpha) {
        const Interval ci = confidence_interval(estimate, variance, n, alpha);
        return py::make_tuple(ci.lower, ci.upper);
      },
      py::arg("estimate"), py::arg("variance"), py::arg("n"), py::arg("alpha"));
  m.def("normal_cdf", &normal_cdf);
  m.def("normal_quantile", &normal_quantile);

  py::class_<EstimateReport>(m, "EstimateReport")
      .def_readonly("measure", &EstimateReport::measure)
      .def_readonly("estimate", &EstimateReport::estimate)
      .def_readonly("n", &EstimateReport::n)
      .def_readonly("variance", &EstimateReport::variance)
      .def_readonly("std_error", &EstimateReport::std_error)
      .def_property_readonly("ci", [](const EstimateReport &r) {
        return py::make_tuple(r.ci.lower, r.ci.upper);
      })
      .def_readonly("alpha", &EstimateReport::alpha);
  m.def("estimate_report", &estimate_report, py::arg("emp"), py::arg("measure"),
        py::arg("alpha") = 0.05);

  m.def("chi_square_cdf", &chi_square_cdf, py::arg("x"), py::arg("df"));
  m.def("chi_square_sf", &chi_square_sf, py::arg("x"), py::arg("df"));
  m.def("chi_square_quantile", &chi_square_quantile, py::arg("p"), py::arg("df"));
  m.def("lrt_statistic", &lrt_statistic);

  py::class_<TestReport>(m, "TestReport")
      .def_readonly("gamma_sq", &TestReport::gamma_sq)
      .def_readonly("mi_estimate", &TestReport::mi_estimate)
      .def_readonly("df", &TestReport::df)
      .def_readonly("threshold", &TestReport::threshold)
      .def_readonly("mi_threshold", &TestReport::mi_threshold)
      .def_readonly("p_value", &TestReport::p_value)
      .def_readonly("reject", &TestReport::reject)
      .def_readonly("alpha", &TestReport::alpha)
      .def_readonly("n", &TestReport::n);
  m.def("independence_test", &independence_test, py::arg("emp"), py::arg("alpha") = 0.05);

  py::class_<RngSpec>(m, "RngSpec")
      .def(py::init([](std::uint64_t seed) { return RngSpec{seed}; }), py::arg("master_seed") = 0)
      .def_readonly("master_seed", &RngSpec::master_seed)
      .def("stream_seed", &RngSpec::stream_seed);

  py::class_<ConvergenceTrace>(m, "ConvergenceTrace")
      .def_readonly("measure", &ConvergenceTrace::measure)
      .def_readonly("true_value", &ConvergenceTrace::true_value)
      .def_readonly("sizes", &ConvergenceTrace::sizes)
      .def_readonly("estimates", &ConvergenceTrace::estimates)
      .def_readonly("abs_errors", &ConvergenceTrace::abs_errors)
      .def_readonly("a_zn", &ConvergenceTrace::a_zn)
      .def_readonly("ratio", &ConvergenceTrace::ratio);

  py::class_<NormalityStudy>(m, "NormalityStudy")
      .def_readonly("measure", &NormalityStudy::measure)
      .def_readonly("n", &NormalityStudy::n)
      .def_readonly("replicates", &NormalityStudy::replicates)
      .def_readonly("true_value", &NormalityStudy::true_value)
      .def_readonly("sigma", &NormalityStudy::sigma)
      .def_readonly("t_values", &NormalityStudy::t_values)
      .def_readonly("mean", &NormalityStudy::mean)
      .def_readonly("variance", &NormalityStudy::variance)
      .def_readonly("ks_distance", &NormalityStudy::ks_distance)
      .def_property_readonly("histogram_edges",
                             [](const NormalityStudy &s) { return s.histogram.edges; })
      .def_property_readonly("histogram_counts",
                             [](const NormalityStudy &s) { return s.histogram.counts; })
      .def_readonly("qq_theoretical", &NormalityStudy::qq_theoretical)
      .def_readonly("qq_observed", &NormalityStudy::qq_observed);

  py::class_<VarianceCheck>(m, "VarianceCheck")
      .def_readonly("empirical", &VarianceCheck::empirical)
      .def_readonly("canonical", &VarianceCheck::canonical)
      .def_readonly("three_halves", &VarianceCheck::three_halves);

  m.def(
      "sample_z",
      [](const ZPmf &p, std::uint64_t n, const RngSpec &rng, std::uint64_t stream) {
        return sample_z(p, n, rng, stream);
      },
      py::arg("p"), py::arg("n"), py::arg("rng"), py::arg("stream") = 0);
  m.def(
      "convergence_trace",
      [](const ZPmf &p, const std::vector<std::uint64_t> &sizes, Measure measure,
         const RngSpec &rng, unsigned threads) {
        return convergence_trace(p, sizes, measure, rng, StudyOptions{threads});
      },
      py::arg("p"), py::arg("sizes"), py::arg("measure"), py::arg("rng"), py::arg("threads") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "normality_study",
      [](const ZPmf &p, std::uint64_t n, std::size_t replicates, Measure measure,
         const RngSpec &rng, unsigned threads) {
        return normality_study(p, n, replicates, measure, rng, StudyOptions{threads});
      },
      py::arg("p"), py::arg("n"), py::arg("replicates"), py::arg("measure"), py::arg("rng"),
      py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "rejection_rate",
      [](const ZPmf &p, std::uint64_t n, std::size_t replicates, double alpha,
         const RngSpec &rng, unsigned threads) {
        return rejection_rate(p, n, replicates, alpha, rng, StudyOptions{threads});
      },
      py::arg("p"), py::arg("n"), py::arg("replicates"), py::arg("alpha"), py::arg("rng"),
      py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
  m.def(
      "variance_check",
      [](const ZPmf &p, std::uint64_t n, std::size_t replicates, Measure measure,
         const RngSpec &rng, unsigned threads) {
        return variance_check(p, n, replicates, measure, rng, StudyOptions{threads});
      },
      py::arg("p"), py::arg("n"), py::arg("replicates"), py::arg("measure"), py::arg("rng"),
      py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
}
