#include "uncert/spin.hpp"

#include <cmath>

namespace uncert {

namespace {

constexpr cplx kI(0.0, 1.0);

bool is_half_integer(double j) {
  const double twice = 2.0 * j;
  return j > 0.0 && std::abs(twice - std::round(twice)) < 1e-9;
}

} // namespace

SpinSystem spin_matrices(double j) {
  if (!is_half_integer(j))
    throw std::invalid_argument("spin quantum number must be a positive half-integer");
  const std::size_t dim = static_cast<std::size_t>(std::lround(2.0 * j)) + 1;

  // Basis index i corresponds to mu = j - i.
  Matrix jplus(dim), jminus(dim), jz(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double mu = j - static_cast<double>(i);
    jz(i, i) = mu;
    if (i > 0) // J+ |j,mu> = sqrt((j-mu)(j+mu+1)) |j,mu+1>
      jplus(i - 1, i) = std::sqrt((j - mu) * (j + mu + 1.0));
    if (i + 1 < dim) // J- |j,mu> = sqrt((j+mu)(j-mu+1)) |j,mu-1>
      jminus(i + 1, i) = std::sqrt((j + mu) * (j - mu + 1.0));
  }

  const Matrix jx = 0.5 * (jplus + jminus);
  const Matrix jy = (-0.5 * kI) * (jplus - jminus);
  const Matrix jsq = jx * jx + jy * jy + jz * jz;

  return SpinSystem{j,
                    dim,
                    Observable(jx),
                    Observable(jy),
                    Observable(jz),
                    Observable(jsq),
                    jplus,
                    jminus};
}

Observable sigma_x() {
  return Observable(2, {0.0, 1.0, 1.0, 0.0});
}

Observable sigma_y() {
  return Observable(2, {0.0, -kI, kI, 0.0});
}

Observable sigma_z() {
  return Observable(2, {1.0, 0.0, 0.0, -1.0});
}

QuantumState qutrit_state(double phi) {
  return QuantumState({std::sin(phi), 0.0, std::cos(phi)});
}

QuantumState qubit_state(double phi) {
  return QuantumState({std::sin(phi), std::cos(phi)});
}

std::vector<double> linspace(double start, double end, int points) {
  if (points < 1) throw std::invalid_argument("linspace needs at least one point");
  if (points == 1) return {start};
  std::vector<double> grid(points);
  const double step = (end - start) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) grid[i] = start + step * i;
  grid.back() = end;
  return grid;
}

std::vector<SweepRow> sweep(SweepSystem system, const std::vector<double>& phi_grid) {
  if (phi_grid.empty()) throw std::invalid_argument("empty phi grid");

  const bool qutrit = system == SweepSystem::Qutrit;
  Observable a = sigma_x();
  Observable b = sigma_y();
  if (qutrit) {
    const SpinSystem sys = spin_matrices(1.0);
    a = sys.jx;
    b = sys.jy;
  }

  std::vector<SweepRow> rows;
  rows.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    const QuantumState psi = qutrit ? qutrit_state(phi) : qubit_state(phi);
    const DeviationVector da = deviation_vector(a, psi);
    const DeviationVector db = deviation_vector(b, psi);
    const UncertaintyCase uc = classify_case(da, db);

    SweepRow row;
    row.phi = phi;
    row.mean_a = da.mean;
    row.mean_b = db.mean;
    row.var_a = da.variance();
    row.var_b = db.variance();
    row.tag = uc.tag;

    const BoundReport eq2 = robertson_product(a, b, psi);
    row.eq2_lhs = eq2.lhs;
    row.eq2_rhs = eq2.rhs;

    // Canonical auxiliary state for both sum forms; Psi_A + Psi_B never
    // vanishes in either experiment family.
    const QuantumState aux = normalized_state(add(da.vector, db.vector));
    row.eq4a_rhs = sum_bound_4a(a, b, psi, aux, "canonical").rhs;
    row.eq4b_rhs = sum_bound_4b(a, b, psi).rhs;

    if (uc.tag == CaseTag::Case2ZeroB)
      row.bypass_delta = shifted_operator_bypass(a, b, psi).delta_shifted;
    else if (uc.tag == CaseTag::Case2ZeroA)
      row.bypass_delta = shifted_operator_bypass(b, a, psi).delta_shifted;

    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// ||u|| == 1 and |<u|v>| == 1 within tol, i.e. u = (phase) v.
bool equal_up_to_phase(const CVec& u, const CVec& v, double tol) {
  return std::abs(norm(u) - 1.0) <= tol &&
         std::abs(std::abs(inner(u, v)) - 1.0) <= tol;
}

} // namespace

bool toggle_check(double phi, ToggleOperator which) {
  const SpinSystem sys = spin_matrices(1.0);
  const Observable& op = which == ToggleOperator::Jx ? sys.jx : sys.jy;
  const CVec psi = qutrit_state(phi).amplitudes();
  const CVec phi10 = {0.0, 1.0, 0.0};
  constexpr double tol = 1e-12;

  const CVec op_psi = op.apply(psi);
  const CVec op_phi10 = op.apply(phi10);
  return equal_up_to_phase(op_psi, phi10, tol) &&
         equal_up_to_phase(op_phi10, psi, tol) &&
         norm(sub(op.apply(op_psi), psi)) <= tol &&
         norm(sub(op.apply(op_phi10), phi10)) <= tol;
}

namespace {

struct Table1Inputs {
  Observable a, b;
  QuantumState psi, n1, n2;
};

Table1Inputs table1_inputs() {
  const SpinSystem sys = spin_matrices(1.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  return {sys.jx, sys.jy,
          QuantumState({r3, r3, r3}),
          QuantumState({-r2, r2, 0.0}),
          QuantumState({r3, -r3, -r3})};
}

} // namespace

std::vector<Table1Entry> table1_scenario() {
  const Table1Inputs in = table1_inputs();
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);

  std::vector<Table1Entry> rows;
  rows.push_back({"4a (i)", "1/3", 1.0 / 3.0,
                  sum_bound_4a(in.a, in.b, in.psi, in.n1, "N1")});
  rows.push_back({"4a (ii)", "32/81", 32.0 / 81.0,
                  sum_bound_4a(in.a, in.b, in.psi, in.n2, "N2")});
  rows.push_back({"4b (i)", "1/12", 1.0 / 12.0,
                  sum_bound_4b(in.a, in.b, in.psi, in.n1, "N1")});
  rows.push_back({"4b (ii)", "10/81", 10.0 / 81.0,
                  sum_bound_4b(in.a, in.b, in.psi, in.n2, "N2")});
  rows.push_back({"5a", "59/81", 59.0 / 81.0,
                  weighted_sum_5a(in.a, in.b, in.psi, in.n1, in.n2, 1.0, "N1", "N2")});
  rows.push_back({"5b", "67/162", 67.0 / 162.0,
                  weighted_sum_5b(in.a, in.b, in.psi, in.n1, in.n2, 1.0, "N1", "N2")});
  rows.push_back({"13 (i)", "1/12", 1.0 / 12.0,
                  product_one_aux(in.a, in.b, in.psi, in.n1, "N1")});
  rows.push_back({"13 (ii)", "2/27", 2.0 / 27.0,
                  product_one_aux(in.a, in.b, in.psi, in.n2, "N2")});
  rows.push_back({"14 (i)", "1/sqrt3", 1.0 / s3,
                  sum_one_aux(in.a, in.b, in.psi, in.n1, "N1")});
  rows.push_back({"14 (ii)", "4sqrt2/9", 4.0 * s2 / 9.0,
                  sum_one_aux(in.a, in.b, in.psi, in.n2, "N2")});
  rows.push_back({"15", "1/(3sqrt6)", 1.0 / (3.0 * s6),
                  product_two_aux(in.a, in.b, in.psi, in.n1, in.n2, "N1", "N2")});
  rows.push_back({"16", "(sqrt3+2sqrt2)/6", (s3 + 2.0 * s2) / 6.0,
                  sum_two_aux(in.a, in.b, in.psi, in.n1, in.n2, "N1", "N2")});
  rows.push_back({"17 (i)", "1/6", 1.0 / 6.0,
                  strengthened_product(in.a, in.b, in.psi, in.n1, "N1")});
  rows.push_back({"17 (ii)", "4/27", 4.0 / 27.0,
                  strengthened_product(in.a, in.b, in.psi, in.n2, "N2")});
  return rows;
}

HeadlineBounds headline_bounds() {
  const Table1Inputs in = table1_inputs();
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);

  HeadlineBounds h;
  h.product = {"17 (i)", "1/6", 1.0 / 6.0,
               strengthened_product(in.a, in.b, in.psi, in.n1, "N1")};
  h.sum_variances = {"4a (ii)", "32/81", 32.0 / 81.0,
                     sum_bound_4a(in.a, in.b, in.psi, in.n2, "N2")};
  h.sum_deviations = {"16", "(sqrt3+2sqrt2)/6", (s3 + 2.0 * s2) / 6.0,
                      sum_two_aux(in.a, in.b, in.psi, in.n1, in.n2, "N1", "N2")};
  h.combined_value =
      std::sqrt(h.sum_variances.report.rhs + 2.0 * h.product.report.rhs);
  h.combined_expected = std::sqrt(59.0) / 9.0;
  return h;
}

} // namespace uncert
