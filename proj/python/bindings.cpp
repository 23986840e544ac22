#include "bvmax/classifier.hpp"
#include "bvmax/constants.hpp"
#include "bvmax/oracle.hpp"
#include "bvmax/reduction.hpp"
#include "bvmax/scalar_opt.hpp"
#include "bvmax/thresholds.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace bvmax;

namespace {

std::string params_repr(const ProblemParams& p) {
  std::ostringstream os;
  os << "ProblemParams(n=" << p.dim << ", a=" << p.a << ", b=" << p.b << ", q=" << p.q
     << ", alpha=" << p.alpha << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "best constants, thresholds, and ball maximizers for the D_alpha(a,b,q) family";
  m.attr("__version__") = "0.1.0";

  py::class_<ProblemParams>(m, "ProblemParams")
      .def(py::init([](int n, double a, double b, double q, double alpha) {
             ProblemParams p;
             p.dim = n;
             p.a = a;
             p.b = b;
             p.q = q;
             p.alpha = alpha;
             p.validate();
             return p;
           }),
           py::arg("n") = 2, py::arg("a") = 1.0, py::arg("b") = 1.0, py::arg("q") = 2.0,
           py::arg("alpha") = 1.0)
      .def_readwrite("n", &ProblemParams::dim)
      .def_readwrite("a", &ProblemParams::a)
      .def_readwrite("b", &ProblemParams::b)
      .def_readwrite("q", &ProblemParams::q)
      .def_readwrite("alpha", &ProblemParams::alpha)
      .def("validate", &ProblemParams::validate)
      .def("critical", &ProblemParams::critical)
      .def("sobolev_conjugate", &ProblemParams::sobolev_conjugate)
      .def("__repr__", &params_repr);

  m.def("sobolev_conjugate", &sobolev_conjugate, py::arg("n"));
  m.def("unit_sphere_area", &unit_sphere_area, py::arg("n"));
  m.def("gn_best_constant", &gn_best_constant, py::arg("n"), py::arg("q"));
  m.def("mazya_constant", &mazya_constant, py::arg("n"));
  m.def("critical_b0", &critical_b0, py::arg("n"), py::arg("q"));
  m.def("b0_zero_q", &b0_zero_q, py::arg("n"));

  py::enum_<ThresholdSource>(m, "ThresholdSource")
      .value("CLOSED_FORM", ThresholdSource::ClosedForm)
      .value("NUMERIC", ThresholdSource::Numeric);

  py::class_<ExtendedThreshold>(m, "Threshold")
      .def_readonly("value", &ExtendedThreshold::value)
      .def_readonly("source", &ExtendedThreshold::source)
      .def_readonly("formula", &ExtendedThreshold::formula)
      .def("__repr__", [](const ExtendedThreshold& th) {
        std::ostringstream os;
        os << "Threshold(value=" << th.value << ", formula='" << th.formula << "')";
        return os.str();
      });

  m.def("alpha_v", &alpha_v, py::arg("params"));
  m.def("alpha_c", &alpha_c, py::arg("params"));

  py::class_<EndpointLimits>(m, "EndpointLimits")
      .def_readonly("at_zero", &EndpointLimits::at_zero)
      .def_readonly("at_infinity", &EndpointLimits::at_infinity);

  py::class_<OptCandidate>(m, "OptCandidate")
      .def_readonly("t", &OptCandidate::t)
      .def_readonly("value", &OptCandidate::value);

  py::class_<ScalarOptResult>(m, "OptResult")
      .def_readonly("value", &ScalarOptResult::value)
      .def_readonly("arg", &ScalarOptResult::arg)
      .def_readonly("attained", &ScalarOptResult::attained)
      .def_readonly("plateau", &ScalarOptResult::plateau)
      .def_readonly("limits", &ScalarOptResult::limits)
      .def_readonly("candidates", &ScalarOptResult::candidates);

  m.def("d_alpha", &d_alpha, py::arg("params"));

  py::class_<ReducedFunctions>(m, "ReducedFunctions")
      .def(py::init<ProblemParams>(), py::arg("params"))
      .def("f", &ReducedFunctions::f, py::arg("t"))
      .def("g", &ReducedFunctions::g, py::arg("t"))
      .def("h", &ReducedFunctions::h, py::arg("t"))
      .def("log_f", &ReducedFunctions::log_f, py::arg("s"))
      .def("log_g", &ReducedFunctions::log_g, py::arg("s"))
      .def("log_h", &ReducedFunctions::log_h, py::arg("s"))
      .def("eq", &ReducedFunctions::eq)
      .def("one_star", &ReducedFunctions::one_star)
      .def("critical", &ReducedFunctions::critical);

  py::enum_<Verdict>(m, "Verdict")
      .value("ATTAINED", Verdict::Attained)
      .value("NOT_ATTAINED", Verdict::NotAttained);

  py::enum_<ThresholdRelation>(m, "ThresholdRelation")
      .value("BELOW_ALPHA_V", ThresholdRelation::BelowAlphaV)
      .value("AT_ALPHA_V", ThresholdRelation::AtAlphaV)
      .value("BETWEEN", ThresholdRelation::Between)
      .value("AT_ALPHA_C", ThresholdRelation::AtAlphaC)
      .value("ABOVE_ALPHA_C", ThresholdRelation::AboveAlphaC)
      .value("NO_THRESHOLD", ThresholdRelation::NoThreshold);

  py::class_<RegimeReport>(m, "RegimeReport")
      .def_readonly("params", &RegimeReport::params)
      .def_readonly("alpha_v", &RegimeReport::alpha_v)
      .def_readonly("alpha_c", &RegimeReport::alpha_c)
      .def_readonly("d_alpha", &RegimeReport::d_alpha)
      .def_readonly("verdict", &RegimeReport::verdict)
      .def_readonly("relation", &RegimeReport::relation)
      .def_readonly("case_label", &RegimeReport::case_label)
      .def("__repr__", [](const RegimeReport& r) {
        std::ostringstream os;
        os << "RegimeReport(case='" << r.case_label << "', "
           << (r.verdict == Verdict::Attained ? "attained" : "not-attained") << ")";
        return os.str();
      });

  m.def("classify", &classify, py::arg("params"), py::arg("eq_tol") = 1e-9);

  py::class_<BallMaximizer>(m, "BallMaximizer")
      .def_readonly("t0", &BallMaximizer::t0)
      .def_readonly("radius", &BallMaximizer::radius)
      .def_readonly("height", &BallMaximizer::height)
      .def_readonly("sign", &BallMaximizer::sign)
      .def_readonly("center", &BallMaximizer::center);

  py::class_<MaximizerSet>(m, "MaximizerSet")
      .def_readonly("maximizers", &MaximizerSet::maximizers)
      .def_readonly("continuum", &MaximizerSet::continuum)
      .def_readonly("note", &MaximizerSet::note);

  m.def("maximizer_set", py::overload_cast<const ProblemParams&>(&maximizer_set),
        py::arg("params"));
  m.def("maximizer_set", py::overload_cast<const RegimeReport&>(&maximizer_set),
        py::arg("report"));
  m.def("radius_of_t", &radius_of_t, py::arg("t"), py::arg("params"));
  m.def("height_of_t", &height_of_t, py::arg("t"), py::arg("params"));

  py::class_<RadialStepFunction>(m, "RadialStepFunction")
      .def(py::init([](int n, std::vector<double> radii, std::vector<double> shell_values) {
             RadialStepFunction u;
             u.dim = n;
             u.radii = std::move(radii);
             u.shell_values = std::move(shell_values);
             u.validate();
             return u;
           }),
           py::arg("n"), py::arg("radii"), py::arg("shell_values"))
      .def_readwrite("n", &RadialStepFunction::dim)
      .def_readwrite("radii", &RadialStepFunction::radii)
      .def_readwrite("shell_values", &RadialStepFunction::shell_values)
      .def("validate", &RadialStepFunction::validate);

  py::class_<BVNorms>(m, "BVNorms")
      .def_readonly("l1", &BVNorms::l1)
      .def_readonly("lq_q", &BVNorms::lq_q)
      .def_readonly("tv", &BVNorms::tv)
      .def_readonly("l1star_1star", &BVNorms::l1star_1star);

  m.def("norms", &norms, py::arg("u"), py::arg("q"));
  m.def("scaled", &scaled, py::arg("u"), py::arg("amplitude"));
  m.def("normalize_to_constraint", &normalize_to_constraint, py::arg("u"), py::arg("a"),
        py::arg("b"));
  m.def("functional_value", &functional_value, py::arg("u"), py::arg("alpha"), py::arg("q"));
  m.def("vanishing_element", &vanishing_element, py::arg("u"), py::arg("n"));
  m.def("concentrating_element", &concentrating_element, py::arg("u"), py::arg("n"));

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("params", &VerifyReport::params)
      .def_readonly("samples", &VerifyReport::samples)
      .def_readonly("seed", &VerifyReport::seed)
      .def_readonly("max_value", &VerifyReport::max_value)
      .def_readonly("d_alpha", &VerifyReport::d_alpha)
      .def_readonly("violations", &VerifyReport::violations)
      .def_readonly("gap", &VerifyReport::gap)
      .def_readonly("gn_violations", &VerifyReport::gn_violations)
      .def_readonly("reduction_violations", &VerifyReport::reduction_violations)
      .def_readonly("best_single_shell", &VerifyReport::best_single_shell);

  m.def("monte_carlo_bound_check", &monte_carlo_bound_check, py::arg("params"),
        py::arg("samples"), py::arg("seed"),
        py::arg("extra_single_shell_radii") = std::vector<double>{},
        py::call_guard<py::gil_scoped_release>());
}
