// Python bindings for the uncertainty-bound library: states, observables,
// the bound evaluators, the spin scenarios, and the oscillator subsystem.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uncert/auxopt.hpp"
#include "uncert/bounds.hpp"
#include "uncert/hilbert.hpp"
#include "uncert/oscillator.hpp"
#include "uncert/spin.hpp"

namespace py = pybind11;
using namespace uncert;

namespace {

std::vector<CVec> matrix_rows(const Matrix& m) {
  std::vector<CVec> rows(m.dim(), CVec(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) rows[r][c] = m(r, c);
  return rows;
}

Observable observable_from_rows(const std::vector<CVec>& rows) {
  const std::size_t dim = rows.size();
  std::vector<cplx> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (row.size() != dim)
      throw std::invalid_argument("observable matrix must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Observable(dim, std::move(entries));
}

} // namespace

PYBIND11_MODULE(pyuncert, m) {
  m.doc() = "Variance-based quantum uncertainty bounds";

  py::register_exception<DimensionMismatch>(m, "DimensionMismatchError",
                                            PyExc_ValueError);
  py::register_exception<ZeroDeviation>(m, "ZeroDeviationError",
                                        PyExc_ValueError);
  py::register_exception<PreconditionViolated>(m, "PreconditionViolatedError",
                                               PyExc_ValueError);
  py::register_exception<EvennessViolated>(m, "EvennessViolatedError",
                                           PyExc_ValueError);

  py::enum_<CaseTag>(m, "CaseTag")
      .value("CASE1_DEPENDENT", CaseTag::Case1Dependent)
      .value("CASE1_GENERIC", CaseTag::Case1Generic)
      .value("CASE2_ZERO_A", CaseTag::Case2ZeroA)
      .value("CASE2_ZERO_B", CaseTag::Case2ZeroB)
      .value("CASE3_ORTHOGONAL", CaseTag::Case3Orthogonal);

  py::enum_<Relation>(m, "Relation")
      .value("EQ2", Relation::Eq2)
      .value("EQ3", Relation::Eq3)
      .value("EQ4A", Relation::Eq4a)
      .value("EQ4B", Relation::Eq4b)
      .value("EQ5A", Relation::Eq5a)
      .value("EQ5B", Relation::Eq5b)
      .value("EQ13", Relation::Eq13)
      .value("EQ14", Relation::Eq14)
      .value("EQ15", Relation::Eq15)
      .value("EQ16", Relation::Eq16)
      .value("EQ17", Relation::Eq17)
      .value("MULTI", Relation::Multi)
      .value("CHENFEI", Relation::ChenFei);

  py::class_<QuantumState>(m, "QuantumState")
      .def(py::init<CVec>(), py::arg("amplitudes"))
      .def_property_readonly("dim", &QuantumState::dim)
      .def_property_readonly("amplitudes", &QuantumState::amplitudes)
      .def("__repr__", [](const QuantumState& s) {
        return "<QuantumState dim=" + std::to_string(s.dim()) + ">";
      });

  py::class_<Observable>(m, "Observable")
      .def(py::init(&observable_from_rows), py::arg("matrix"))
      .def_property_readonly("dim", &Observable::dim)
      .def_property_readonly(
          "matrix", [](const Observable& o) { return matrix_rows(o.matrix()); })
      .def("__repr__", [](const Observable& o) {
        return "<Observable dim=" + std::to_string(o.dim()) + ">";
      });

  py::class_<DeviationVector>(m, "DeviationVector")
      .def_readonly("base", &DeviationVector::base)
      .def_readonly("mean", &DeviationVector::mean)
      .def_readonly("vector", &DeviationVector::vector)
      .def_property_readonly("variance", &DeviationVector::variance)
      .def_property_readonly("delta", &DeviationVector::delta);

  py::class_<UncertaintyCase>(m, "UncertaintyCase")
      .def_readonly("tag", &UncertaintyCase::tag)
      .def_readonly("dependence_ratio", &UncertaintyCase::dependence_ratio)
      .def("__repr__", [](const UncertaintyCase& c) {
        return "<UncertaintyCase " + case_name(c.tag) + ">";
      });

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("relation", &BoundReport::relation)
      .def_readonly("lhs", &BoundReport::lhs)
      .def_readonly("rhs", &BoundReport::rhs)
      .def_readonly("aux_ids", &BoundReport::aux_ids)
      .def_readonly("lambda_", &BoundReport::lambda)
      .def_readonly("sign_choice", &BoundReport::sign_choice)
      .def_readonly("non_canonical", &BoundReport::non_canonical)
      .def_readonly("commutator_term", &BoundReport::commutator_term)
      .def_readonly("anticommutator_term", &BoundReport::anticommutator_term)
      .def_readonly("valid", &BoundReport::valid)
      .def_readonly("saturated", &BoundReport::saturated)
      .def("__repr__", [](const BoundReport& r) {
        return "<BoundReport " + relation_name(r.relation) +
               " lhs=" + std::to_string(r.lhs) + " rhs=" + std::to_string(r.rhs) +
               ">";
      });

  py::class_<ShiftedBypassResult>(m, "ShiftedBypassResult")
      .def_readonly("shifted", &ShiftedBypassResult::shifted)
      .def_readonly("eigenvalue", &ShiftedBypassResult::eigenvalue)
      .def_readonly("delta_a", &ShiftedBypassResult::delta_a)
      .def_readonly("delta_shifted", &ShiftedBypassResult::delta_shifted)
      .def_readonly("delta_equal", &ShiftedBypassResult::delta_equal)
      .def_readonly("commutator_preserved",
                    &ShiftedBypassResult::commutator_preserved);

  // hilbert
  m.def("expectation", &expectation, py::arg("obs"), py::arg("psi"));
  m.def("deviation_vector", &deviation_vector, py::arg("obs"), py::arg("psi"));
  m.def("normalized_deviation", &normalized_deviation, py::arg("dev"));
  m.def("classify_case", &classify_case, py::arg("dev_a"), py::arg("dev_b"));
  m.def("gram_schmidt_extend", &gram_schmidt_extend, py::arg("seeds"),
        py::arg("dim"));

  // bounds
  m.def("robertson_product", &robertson_product);
  m.def("robertson_decomposition", &robertson_decomposition);
  m.def("sum_bound_4a", &sum_bound_4a, py::arg("a"), py::arg("b"),
        py::arg("psi"), py::arg("aux"), py::arg("aux_id") = "aux");
  m.def("sum_bound_4b", &sum_bound_4b, py::arg("a"), py::arg("b"),
        py::arg("psi"), py::arg("aux_override") = std::nullopt,
        py::arg("aux_id") = "aux");
  m.def("weighted_sum_5a", &weighted_sum_5a, py::arg("a"), py::arg("b"),
        py::arg("psi"), py::arg("aux1"), py::arg("aux2"), py::arg("lambda_"),
        py::arg("aux1_id") = "aux1", py::arg("aux2_id") = "aux2");
  m.def("weighted_sum_5b", &weighted_sum_5b, py::arg("a"), py::arg("b"),
        py::arg("psi"), py::arg("aux_first"), py::arg("aux_second"),
        py::arg("lambda_"), py::arg("aux_first_id") = "aux1",
        py::arg("aux_second_id") = "aux2");
  m.def("product_one_aux", &product_one_aux, py::arg("a"), py::arg("b"),
        py::arg("psi"), py::arg("aux_n"), py::arg("aux_id") = "N");
  m.def("sum_one_aux", &sum_one_aux, py::arg("a"), py::arg("b"), py::arg("psi"),
        py::arg("aux_n"), py::arg("aux_id") = "N");
  m.def("product_two_aux", &product_two_aux, py::arg("a"), py::arg("b"),
        py::arg("psi"), py::arg("aux1"), py::arg("aux2"),
        py::arg("aux1_id") = "N1", py::arg("aux2_id") = "N2");
  m.def("sum_two_aux", &sum_two_aux, py::arg("a"), py::arg("b"), py::arg("psi"),
        py::arg("aux1"), py::arg("aux2"), py::arg("aux1_id") = "N1",
        py::arg("aux2_id") = "N2");
  m.def("strengthened_product", &strengthened_product, py::arg("a"),
        py::arg("b"), py::arg("psi"), py::arg("aux_n"), py::arg("aux_id") = "N");
  m.def("multi_observable_product", &multi_observable_product, py::arg("obs"),
        py::arg("psi"), py::arg("aux_n"), py::arg("aux_id") = "N");
  m.def("chen_fei_sum", &chen_fei_sum);
  m.def("shifted_operator_bypass", &shifted_operator_bypass);

  // auxopt
  py::class_<AuxParametrization>(m, "AuxParametrization")
      .def(py::init([](std::vector<QuantumState> basis, CVec coefficients) {
             return AuxParametrization{std::move(basis), std::move(coefficients)};
           }),
           py::arg("basis"), py::arg("coefficients"))
      .def_readonly("basis", &AuxParametrization::basis)
      .def_readonly("coefficients", &AuxParametrization::coefficients);
  m.def("aux_from_coefficients", &aux_from_coefficients);
  m.def("overlap_product_objective", &overlap_product_objective);
  m.def("optimal_aux_pair", &optimal_aux_pair);
  m.def("optimal_aux_multi", &optimal_aux_multi);

  // spin
  py::class_<SpinSystem>(m, "SpinSystem")
      .def_readonly("j", &SpinSystem::j)
      .def_readonly("dim", &SpinSystem::dim)
      .def_readonly("jx", &SpinSystem::jx)
      .def_readonly("jy", &SpinSystem::jy)
      .def_readonly("jz", &SpinSystem::jz)
      .def_readonly("jsq", &SpinSystem::jsq)
      .def_property_readonly(
          "jplus", [](const SpinSystem& s) { return matrix_rows(s.jplus); })
      .def_property_readonly(
          "jminus", [](const SpinSystem& s) { return matrix_rows(s.jminus); });
  m.def("spin_matrices", &spin_matrices, py::arg("j"));
  m.def("sigma_x", &sigma_x);
  m.def("sigma_y", &sigma_y);
  m.def("sigma_z", &sigma_z);
  m.def("qutrit_state", &qutrit_state, py::arg("phi"));
  m.def("qubit_state", &qubit_state, py::arg("phi"));

  py::enum_<SweepSystem>(m, "SweepSystem")
      .value("QUTRIT", SweepSystem::Qutrit)
      .value("QUBIT", SweepSystem::Qubit);
  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("phi", &SweepRow::phi)
      .def_readonly("mean_a", &SweepRow::mean_a)
      .def_readonly("mean_b", &SweepRow::mean_b)
      .def_readonly("var_a", &SweepRow::var_a)
      .def_readonly("var_b", &SweepRow::var_b)
      .def_readonly("eq2_lhs", &SweepRow::eq2_lhs)
      .def_readonly("eq2_rhs", &SweepRow::eq2_rhs)
      .def_readonly("eq4a_rhs", &SweepRow::eq4a_rhs)
      .def_readonly("eq4b_rhs", &SweepRow::eq4b_rhs)
      .def_readonly("tag", &SweepRow::tag)
      .def_readonly("bypass_delta", &SweepRow::bypass_delta);
  m.def("sweep", &sweep, py::arg("system"), py::arg("phi_grid"));
  m.def("linspace", &linspace, py::arg("start"), py::arg("end"),
        py::arg("points"));

  py::enum_<ToggleOperator>(m, "ToggleOperator")
      .value("JX", ToggleOperator::Jx)
      .value("JY", ToggleOperator::Jy);
  m.def("toggle_check", &toggle_check, py::arg("phi"),
        py::arg("which") = ToggleOperator::Jx);

  py::class_<Table1Entry>(m, "Table1Entry")
      .def_readonly("row", &Table1Entry::row)
      .def_readonly("exact", &Table1Entry::exact)
      .def_readonly("expected", &Table1Entry::expected)
      .def_readonly("report", &Table1Entry::report);
  m.def("table1_scenario", &table1_scenario);

  py::class_<HeadlineBounds>(m, "HeadlineBounds")
      .def_readonly("product", &HeadlineBounds::product)
      .def_readonly("sum_variances", &HeadlineBounds::sum_variances)
      .def_readonly("sum_deviations", &HeadlineBounds::sum_deviations)
      .def_readonly("combined_value", &HeadlineBounds::combined_value)
      .def_readonly("combined_expected", &HeadlineBounds::combined_expected);
  m.def("headline_bounds", &headline_bounds);

  // oscillator
  py::class_<Grid, std::shared_ptr<Grid>>(m, "Grid")
      .def_static("make_default", &Grid::make_default, py::arg("density") = 1)
      .def_static("make", &Grid::make, py::arg("half_width"),
                  py::arg("density") = 1)
      .def_property_readonly("nodes", &Grid::nodes)
      .def_property_readonly("weights", &Grid::weights)
      .def_property_readonly("size", &Grid::size);

  py::class_<FunctionState>(m, "FunctionState")
      .def_readonly("samples", &FunctionState::samples)
      .def_readonly("support_lo", &FunctionState::support_lo)
      .def_readonly("support_hi", &FunctionState::support_hi)
      .def_readonly("has_second_derivative",
                    &FunctionState::has_second_derivative);

  py::enum_<DeviationKind>(m, "DeviationKind")
      .value("X_SQUARED", DeviationKind::XSquared)
      .value("MOMENTUM", DeviationKind::Momentum);

  py::class_<ScaledGaussianReport>(m, "ScaledGaussianReport")
      .def_readonly("lambda_", &ScaledGaussianReport::lambda)
      .def_readonly("k", &ScaledGaussianReport::k)
      .def_readonly("mean_t", &ScaledGaussianReport::mean_t)
      .def_readonly("mean_v", &ScaledGaussianReport::mean_v)
      .def_readonly("delta_t", &ScaledGaussianReport::delta_t)
      .def_readonly("delta_v", &ScaledGaussianReport::delta_v)
      .def_readonly("virial_satisfied", &ScaledGaussianReport::virial_satisfied);

  m.def("fn_overlap", [](const FunctionState& a, const FunctionState& b) {
    return overlap(a, b);
  });
  m.def("fn_norm_sq", [](const FunctionState& a) { return norm_sq(a); });
  m.def("hermite_state", &hermite_state, py::arg("n"), py::arg("grid"));
  m.def("deviation_function", &deviation_function, py::arg("kind"),
        py::arg("grid"));
  m.def("trial_state", &trial_state, py::arg("eta"), py::arg("grid"));
  m.def("bound17_eta", &bound17_eta, py::arg("eta"), py::arg("grid"));
  m.def("split_aux_bound", &split_aux_bound, py::arg("grid"));
  m.def("half_line_product_bound", &half_line_product_bound, py::arg("dev_a"),
        py::arg("dev_b"));
  m.def("scaled_gaussian_state", &scaled_gaussian_state, py::arg("k"),
        py::arg("grid"));
  m.def("quartic_potential", &quartic_potential, py::arg("lambda_"),
        py::arg("grid"));
  m.def("harmonic_potential", &harmonic_potential, py::arg("grid"));
  m.def("scaled_gaussian_report", &scaled_gaussian_report, py::arg("lambda_"),
        py::arg("k"));
  m.def("virial_optimal_k", &virial_optimal_k, py::arg("lambda_"));
  m.def("stationarity_diagnostic", &stationarity_diagnostic, py::arg("psi"),
        py::arg("potential"));

  py::class_<TruncatedOscillator>(m, "TruncatedOscillator")
      .def_readonly("kinetic", &TruncatedOscillator::kinetic)
      .def_readonly("potential", &TruncatedOscillator::potential)
      .def_readonly("hamiltonian", &TruncatedOscillator::hamiltonian);
  m.def("truncated_oscillator", &truncated_oscillator, py::arg("levels"));
}
