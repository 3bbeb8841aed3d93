#include "uncert/bounds.hpp"

#include <cmath>

namespace uncert {

namespace {

void check_dims(const Observable& a, const Observable& b,
                const QuantumState& psi) {
  if (a.dim() != psi.dim() || b.dim() != psi.dim())
    throw DimensionMismatch("observable/state dimension mismatch");
}

void check_aux(const QuantumState& psi, const QuantumState& aux) {
  if (aux.dim() != psi.dim())
    throw DimensionMismatch("auxiliary state dimension mismatch");
}

BoundReport finish(BoundReport r) {
  r.valid = r.rhs <= r.lhs + kValidityTol;
  r.saturated = std::abs(r.lhs - r.rhs) <= kSaturationTol;
  return r;
}

// i<[A,B]> as a real number (the expectation of a commutator of Hermitian
// operators is purely imaginary).
double commutator_expectation_i(const Observable& a, const Observable& b,
                                const QuantumState& psi) {
  const Matrix c = commutator(a.matrix(), b.matrix());
  const cplx v = inner(psi.amplitudes(), c.apply(psi.amplitudes()));
  return (cplx(0.0, 1.0) * v).real();
}

} // namespace

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::Eq2: return "EQ2";
    case Relation::Eq3: return "EQ3";
    case Relation::Eq4a: return "EQ4A";
    case Relation::Eq4b: return "EQ4B";
    case Relation::Eq5a: return "EQ5A";
    case Relation::Eq5b: return "EQ5B";
    case Relation::Eq13: return "EQ13";
    case Relation::Eq14: return "EQ14";
    case Relation::Eq15: return "EQ15";
    case Relation::Eq16: return "EQ16";
    case Relation::Eq17: return "EQ17";
    case Relation::Multi: return "MULTI";
    case Relation::ChenFei: return "CHENFEI";
  }
  return "UNKNOWN";
}

std::optional<Relation> relation_from_name(const std::string& name) {
  static const std::pair<const char*, Relation> table[] = {
      {"EQ2", Relation::Eq2},   {"EQ3", Relation::Eq3},
      {"EQ4A", Relation::Eq4a}, {"EQ4B", Relation::Eq4b},
      {"EQ5A", Relation::Eq5a}, {"EQ5B", Relation::Eq5b},
      {"EQ13", Relation::Eq13}, {"EQ14", Relation::Eq14},
      {"EQ15", Relation::Eq15}, {"EQ16", Relation::Eq16},
      {"EQ17", Relation::Eq17}, {"MULTI", Relation::Multi},
      {"CHENFEI", Relation::ChenFei},
  };
  for (const auto& [n, r] : table)
    if (name == n) return r;
  return std::nullopt;
}

namespace {

// Shared decomposition for the Eq2/Eq3 pair: |<[A,B]>/2|^2 computed from the
// commutator matrix, (<[A,B]_+>/2 - <A><B>)^2 from the anticommutator.
struct ProductParts {
  double delta_a, delta_b;
  cplx overlap;
  double comm_term, anti_term;
};

ProductParts product_parts(const Observable& a, const Observable& b,
                           const QuantumState& psi) {
  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);

  const Matrix comm = commutator(a.matrix(), b.matrix());
  const Matrix anti = anticommutator(a.matrix(), b.matrix());
  const cplx comm_mean = inner(psi.amplitudes(), comm.apply(psi.amplitudes()));
  const cplx anti_mean = inner(psi.amplitudes(), anti.apply(psi.amplitudes()));
  const double anti_centered = 0.5 * anti_mean.real() - da.mean * db.mean;

  return {da.delta(), db.delta(), inner(da.vector, db.vector),
          std::norm(0.5 * comm_mean), anti_centered * anti_centered};
}

} // namespace

BoundReport robertson_product(const Observable& a, const Observable& b,
                              const QuantumState& psi) {
  check_dims(a, b, psi);
  const ProductParts p = product_parts(a, b, psi);
  BoundReport r;
  r.relation = Relation::Eq2;
  r.lhs = p.delta_a * p.delta_b;
  r.rhs = std::abs(p.overlap);
  r.commutator_term = p.comm_term;
  r.anticommutator_term = p.anti_term;
  return finish(r);
}

BoundReport robertson_decomposition(const Observable& a, const Observable& b,
                                    const QuantumState& psi) {
  check_dims(a, b, psi);
  const ProductParts p = product_parts(a, b, psi);
  BoundReport r;
  r.relation = Relation::Eq3;
  r.lhs = p.delta_a * p.delta_b;
  r.rhs = std::sqrt(p.comm_term + p.anti_term);
  r.commutator_term = p.comm_term;
  r.anticommutator_term = p.anti_term;
  return finish(r);
}

BoundReport sum_bound_4a(const Observable& a, const Observable& b,
                         const QuantumState& psi, const QuantumState& aux,
                         const std::string& aux_id) {
  check_dims(a, b, psi);
  check_aux(psi, aux);
  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);
  const double ci = commutator_expectation_i(a, b, psi);
  const cplx oa = inner(da.vector, aux.amplitudes());
  const cplx ob = inner(db.vector, aux.amplitudes());

  BoundReport r;
  r.relation = Relation::Eq4a;
  r.lhs = da.variance() + db.variance();
  r.aux_ids = {aux_id};
  r.rhs = -1.0;
  for (int s : {+1, -1}) {
    const double cand =
        s * ci + std::norm(oa + cplx(0.0, static_cast<double>(s)) * ob);
    if (cand > r.rhs) {
      r.rhs = cand;
      r.sign_choice = s;
    }
  }
  return finish(r);
}

BoundReport sum_bound_4b(const Observable& a, const Observable& b,
                         const QuantumState& psi,
                         const std::optional<QuantumState>& aux_override,
                         const std::string& aux_id) {
  check_dims(a, b, psi);
  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);
  const CVec sum = add(da.vector, db.vector);

  BoundReport r;
  r.relation = Relation::Eq4b;
  r.lhs = da.variance() + db.variance();
  if (aux_override) {
    check_aux(psi, *aux_override);
    const cplx o = inner(sum, aux_override->amplitudes());
    r.rhs = 0.5 * std::norm(o);
    r.aux_ids = {aux_id};
    r.non_canonical = true;
  } else {
    const double n = norm(sum);
    if (n <= kZeroDeviationTol)
      throw ZeroDeviation("Psi_A + Psi_B vanishes; canonical aux state undefined");
    r.rhs = 0.5 * n * n;
    r.aux_ids = {"canonical"};
  }
  return finish(r);
}

BoundReport weighted_sum_5a(const Observable& a, const Observable& b,
                            const QuantumState& psi, const QuantumState& aux1,
                            const QuantumState& aux2, double lambda,
                            const std::string& aux1_id,
                            const std::string& aux2_id) {
  check_dims(a, b, psi);
  check_aux(psi, aux1);
  check_aux(psi, aux2);
  if (!(lambda > 0.0))
    throw std::invalid_argument("lambda must be positive");

  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);
  const double ci = commutator_expectation_i(a, b, psi);
  const cplx oa1 = inner(da.vector, aux1.amplitudes());
  const cplx ob1 = inner(db.vector, aux1.amplitudes());
  const cplx oa2 = inner(da.vector, aux2.amplitudes());
  const cplx ob2 = inner(db.vector, aux2.amplitudes());

  BoundReport r;
  r.relation = Relation::Eq5a;
  r.lhs = (1.0 + lambda) * da.variance() + (1.0 + 1.0 / lambda) * db.variance();
  r.aux_ids = {aux1_id, aux2_id};
  r.lambda = lambda;
  r.rhs = -1.0;
  for (int s : {+1, -1}) {
    const cplx is(0.0, static_cast<double>(s));
    const double cand = 2.0 * s * ci + std::norm(oa1 + is * ob1) +
                        std::norm(lambda * oa2 + is * ob2) / lambda;
    if (cand > r.rhs) {
      r.rhs = cand;
      r.sign_choice = s;
    }
  }
  return finish(r);
}

BoundReport weighted_sum_5b(const Observable& a, const Observable& b,
                            const QuantumState& psi,
                            const std::optional<QuantumState>& aux_first,
                            const QuantumState& aux_second, double lambda,
                            const std::string& aux_first_id,
                            const std::string& aux_second_id) {
  check_dims(a, b, psi);
  check_aux(psi, aux_second);
  if (!(lambda > 0.0))
    throw std::invalid_argument("lambda must be positive");

  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);

  BoundReport r;
  r.relation = Relation::Eq5b;
  r.lhs = (1.0 + lambda) * da.variance() + (1.0 + 1.0 / lambda) * db.variance();
  r.lambda = lambda;

  double first_term;
  if (aux_first) {
    check_aux(psi, *aux_first);
    first_term = std::norm(inner(da.vector, aux_first->amplitudes()) +
                           inner(db.vector, aux_first->amplitudes()));
    r.aux_ids = {aux_first_id, aux_second_id};
    r.non_canonical = true;
  } else {
    const CVec sum = add(da.vector, db.vector);
    const double n = norm(sum);
    if (n <= kZeroDeviationTol)
      throw ZeroDeviation("Psi_A + Psi_B vanishes; canonical aux state undefined");
    first_term = n * n;
    r.aux_ids = {"canonical", aux_second_id};
  }

  const cplx oa2 = inner(da.vector, aux_second.amplitudes());
  const cplx ob2 = inner(db.vector, aux_second.amplitudes());
  r.rhs = first_term + std::norm(lambda * oa2 - ob2) / lambda;
  return finish(r);
}

BoundReport product_one_aux(const Observable& a, const Observable& b,
                            const QuantumState& psi, const QuantumState& aux_n,
                            const std::string& aux_id) {
  check_dims(a, b, psi);
  check_aux(psi, aux_n);
  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);
  BoundReport r;
  r.relation = Relation::Eq13;
  r.lhs = da.delta() * db.delta();
  r.rhs = std::abs(inner(da.vector, aux_n.amplitudes())) *
          std::abs(inner(db.vector, aux_n.amplitudes()));
  r.aux_ids = {aux_id};
  return finish(r);
}

BoundReport sum_one_aux(const Observable& a, const Observable& b,
                        const QuantumState& psi, const QuantumState& aux_n,
                        const std::string& aux_id) {
  check_dims(a, b, psi);
  check_aux(psi, aux_n);
  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);
  BoundReport r;
  r.relation = Relation::Eq14;
  r.lhs = da.delta() + db.delta();
  r.rhs = std::abs(inner(da.vector, aux_n.amplitudes())) +
          std::abs(inner(db.vector, aux_n.amplitudes()));
  r.aux_ids = {aux_id};
  return finish(r);
}

BoundReport product_two_aux(const Observable& a, const Observable& b,
                            const QuantumState& psi, const QuantumState& aux1,
                            const QuantumState& aux2,
                            const std::string& aux1_id,
                            const std::string& aux2_id) {
  check_dims(a, b, psi);
  check_aux(psi, aux1);
  check_aux(psi, aux2);
  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);
  BoundReport r;
  r.relation = Relation::Eq15;
  r.lhs = da.delta() * db.delta();
  r.rhs = std::abs(inner(da.vector, aux1.amplitudes())) *
          std::abs(inner(db.vector, aux2.amplitudes()));
  r.aux_ids = {aux1_id, aux2_id};
  return finish(r);
}

BoundReport sum_two_aux(const Observable& a, const Observable& b,
                        const QuantumState& psi, const QuantumState& aux1,
                        const QuantumState& aux2, const std::string& aux1_id,
                        const std::string& aux2_id) {
  check_dims(a, b, psi);
  check_aux(psi, aux1);
  check_aux(psi, aux2);
  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);
  BoundReport r;
  r.relation = Relation::Eq16;
  r.lhs = da.delta() + db.delta();
  r.rhs = std::abs(inner(da.vector, aux1.amplitudes())) +
          std::abs(inner(db.vector, aux2.amplitudes()));
  r.aux_ids = {aux1_id, aux2_id};
  return finish(r);
}

BoundReport strengthened_product(const Observable& a, const Observable& b,
                                 const QuantumState& psi,
                                 const QuantumState& aux_n,
                                 const std::string& aux_id) {
  check_dims(a, b, psi);
  check_aux(psi, aux_n);
  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);
  if (da.delta() <= kZeroDeviationTol || db.delta() <= kZeroDeviationTol)
    throw PreconditionViolated(
        "strengthened product requires nonzero deviation vectors");
  const double overlap = std::abs(inner(da.vector, db.vector));
  if (overlap > kCase3Tol)
    throw PreconditionViolated(
        "strengthened product requires orthogonal deviation vectors "
        "(|<Psi_A|Psi_B>| = " + std::to_string(overlap) + ")");

  BoundReport r;
  r.relation = Relation::Eq17;
  r.lhs = da.delta() * db.delta();
  r.rhs = 2.0 * std::abs(inner(da.vector, aux_n.amplitudes())) *
          std::abs(inner(db.vector, aux_n.amplitudes()));
  r.aux_ids = {aux_id};
  return finish(r);
}

BoundReport multi_observable_product(const std::vector<Observable>& obs,
                                     const QuantumState& psi,
                                     const QuantumState& aux_n,
                                     const std::string& aux_id) {
  if (obs.size() < 2)
    throw std::invalid_argument("multi-observable product needs >= 2 observables");
  for (const auto& o : obs)
    if (o.dim() != psi.dim())
      throw DimensionMismatch("observable/state dimension mismatch");
  check_aux(psi, aux_n);

  std::vector<DeviationVector> devs;
  devs.reserve(obs.size());
  for (const auto& o : obs) devs.push_back(deviation_vector(o, psi));

  for (const auto& d : devs)
    if (d.delta() <= kZeroDeviationTol)
      throw PreconditionViolated("multi-observable product requires nonzero deviations");
  for (std::size_t i = 0; i < devs.size(); ++i)
    for (std::size_t j = i + 1; j < devs.size(); ++j)
      if (std::abs(inner(devs[i].vector, devs[j].vector)) > kCase3Tol)
        throw PreconditionViolated(
            "multi-observable product requires pairwise-orthogonal deviations");

  const double n = static_cast<double>(devs.size());
  BoundReport r;
  r.relation = Relation::Multi;
  r.lhs = 1.0;
  r.rhs = std::pow(n, 0.5 * n);
  for (const auto& d : devs) {
    r.lhs *= d.delta();
    r.rhs *= std::abs(inner(d.vector, aux_n.amplitudes()));
  }
  r.aux_ids = {aux_id};
  return finish(r);
}

BoundReport chen_fei_sum(const Observable& a, const Observable& b,
                         const QuantumState& psi) {
  check_dims(a, b, psi);
  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);
  // Psi_{A+-B} = Psi_A +- Psi_B, so no extra matrix work is needed.
  const double d_sum = norm(add(da.vector, db.vector));
  const double d_diff = norm(sub(da.vector, db.vector));
  BoundReport r;
  r.relation = Relation::ChenFei;
  r.lhs = da.delta() + db.delta();
  r.rhs = std::max(d_sum, d_diff);
  return finish(r);
}

ShiftedBypassResult shifted_operator_bypass(const Observable& a,
                                            const Observable& b,
                                            const QuantumState& psi) {
  check_dims(a, b, psi);
  const DeviationVector da = deviation_vector(a, psi);
  const DeviationVector db = deviation_vector(b, psi);
  if (db.delta() > kEigenstateTol)
    throw PreconditionViolated(
        "shifted-operator bypass requires a B-eigenstate (Delta B = " +
        std::to_string(db.delta()) + ")");

  Observable shifted = observable_diff(b, a);
  const DeviationVector d_shifted = deviation_vector(shifted, psi);
  const Matrix comm_orig = commutator(a.matrix(), b.matrix());
  const Matrix comm_new = commutator(a.matrix(), shifted.matrix());

  ShiftedBypassResult res{std::move(shifted),
                          db.mean,
                          da.delta(),
                          d_shifted.delta(),
                          false,
                          false};
  res.delta_equal = std::abs(res.delta_shifted - res.delta_a) <= 1e-10;
  res.commutator_preserved = (comm_new - comm_orig).max_abs() <= 1e-10;
  return res;
}

} // namespace uncert
