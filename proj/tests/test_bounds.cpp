#include <cmath>

#include "doctest.h"
#include "test_helpers.hpp"
#include "uncert/auxopt.hpp"
#include "uncert/bounds.hpp"
#include "uncert/oscillator.hpp"
#include "uncert/spin.hpp"

using namespace uncert;
using uncert::testing::observable_with_deviation;
using uncert::testing::random_case3;
using uncert::testing::random_frame;
using uncert::testing::random_hermitian;
using uncert::testing::random_state;

namespace {

const double kPi = std::acos(-1.0);

struct Table1Fixture {
  SpinSystem sys = spin_matrices(1.0);
  QuantumState psi{CVec{1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0),
                        1.0 / std::sqrt(3.0)}};
  QuantumState n1{CVec{-1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0}};
  QuantumState n2{CVec{1.0 / std::sqrt(3.0), -1.0 / std::sqrt(3.0),
                       -1.0 / std::sqrt(3.0)}};
};

} // namespace

TEST_CASE("product bound on the qutrit experiment states saturates") {
  const SpinSystem sys = spin_matrices(1.0);
  for (double phi : {0.0, 0.3, 1.0, 2.5}) {
    const BoundReport r = robertson_product(sys.jx, sys.jy, qutrit_state(phi));
    const double expected = 0.5 * std::abs(std::cos(2.0 * phi));
    CHECK(r.lhs == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.valid);
    CHECK(r.saturated);
  }
}

TEST_CASE("product bound on the qubit experiment states saturates") {
  for (double phi : {0.1, 0.7, 2.0}) {
    const BoundReport r = robertson_product(sigma_x(), sigma_y(), qubit_state(phi));
    const double expected = std::abs(std::cos(2.0 * phi));
    CHECK(r.lhs == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.saturated);
  }
}

TEST_CASE("product bound trivializes on the uniform qutrit state") {
  const Table1Fixture f;
  const BoundReport r = robertson_product(f.sys.jx, f.sys.jy, f.psi);
  CHECK(r.lhs == doctest::Approx(1.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-12));
  CHECK(std::abs(r.rhs) < 1e-12);
  CHECK(r.valid);
  CHECK_FALSE(r.saturated);
}

TEST_CASE("both product routes agree and the decomposition sums to rhs^2") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> dim_dist(2, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t dim = dim_dist(rng);
    const Observable a = random_hermitian(dim, rng);
    const Observable b = random_hermitian(dim, rng);
    const QuantumState psi = random_state(dim, rng);

    const BoundReport r2 = robertson_product(a, b, psi);
    const BoundReport r3 = robertson_decomposition(a, b, psi);
    REQUIRE(r2.commutator_term.has_value());
    REQUIRE(r2.anticommutator_term.has_value());
    CHECK(std::abs(*r2.commutator_term + *r2.anticommutator_term -
                   r2.rhs * r2.rhs) < 1e-12);
    CHECK(std::abs(r2.rhs - r3.rhs) < 1e-10);
    CHECK(r3.valid);
  }
}

TEST_CASE("sum bound (one aux, sign choice) reproduces the comparison rows") {
  const Table1Fixture f;
  const BoundReport r1 = sum_bound_4a(f.sys.jx, f.sys.jy, f.psi, f.n1, "N1");
  CHECK(r1.rhs == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(r1.lhs == doctest::Approx(1.0 / 9.0 + 1.0 / 3.0).epsilon(1e-13));
  CHECK(r1.valid);

  const BoundReport r2 = sum_bound_4a(f.sys.jx, f.sys.jy, f.psi, f.n2, "N2");
  CHECK(r2.rhs == doctest::Approx(32.0 / 81.0).epsilon(1e-13));
  CHECK(r2.sign_choice.has_value());
}

TEST_CASE("sum bound reduces to the single-deviation form on Case-2 input") {
  const SpinSystem sys = spin_matrices(1.0);
  const QuantumState psi = qutrit_state(kPi / 4.0); // Psi_B = 0
  const DeviationVector da = deviation_vector(sys.jx, psi);
  const QuantumState bar_a = normalized_deviation(da);

  const BoundReport r = sum_bound_4a(sys.jx, sys.jy, psi, bar_a);
  CHECK(r.rhs == doctest::Approx(da.variance()).epsilon(1e-12));
  CHECK(r.saturated); // lhs = DeltaA^2 exactly

  // The 4b canonical route is weaker by the advertised factor of two.
  const BoundReport r4b = sum_bound_4b(sys.jx, sys.jy, psi);
  CHECK(r4b.rhs == doctest::Approx(0.5 * da.variance()).epsilon(1e-12));
}

TEST_CASE("sum bound via Psi_{A+B} with override states") {
  const Table1Fixture f;
  const BoundReport r1 = sum_bound_4b(f.sys.jx, f.sys.jy, f.psi, f.n1, "N1");
  CHECK(r1.rhs == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
  CHECK(r1.non_canonical);

  const BoundReport r2 = sum_bound_4b(f.sys.jx, f.sys.jy, f.psi, f.n2, "N2");
  CHECK(r2.rhs == doctest::Approx(10.0 / 81.0).epsilon(1e-13));

  const BoundReport canonical = sum_bound_4b(f.sys.jx, f.sys.jy, f.psi);
  CHECK_FALSE(canonical.non_canonical);
  CHECK(canonical.valid);
}

TEST_CASE("canonical Psi_{A+B} refuses when the deviation sum vanishes") {
  const Observable a = sigma_x();
  const Observable minus(cplx(-1.0) * sigma_x().matrix());
  const QuantumState psi({1.0, 0.0});
  CHECK_THROWS_AS(sum_bound_4b(a, minus, psi), ZeroDeviation);
}

TEST_CASE("weighted sum with two aux states reproduces the comparison row") {
  const Table1Fixture f;
  const BoundReport r =
      weighted_sum_5a(f.sys.jx, f.sys.jy, f.psi, f.n1, f.n2, 1.0, "N1", "N2");
  CHECK(r.rhs == doctest::Approx(59.0 / 81.0).epsilon(1e-13));
  CHECK(r.lhs == doctest::Approx(2.0 * (1.0 / 9.0 + 1.0 / 3.0)).epsilon(1e-13));
  CHECK(r.valid);
  CHECK(r.lambda == 1.0);
}

TEST_CASE("weighted sum at lambda = 1 with equal aux doubles the one-aux bound") {
  const Table1Fixture f;
  for (const QuantumState* aux : {&f.n1, &f.n2}) {
    const BoundReport r5 =
        weighted_sum_5a(f.sys.jx, f.sys.jy, f.psi, *aux, *aux, 1.0);
    const BoundReport r4 = sum_bound_4a(f.sys.jx, f.sys.jy, f.psi, *aux);
    CHECK(r5.rhs == doctest::Approx(2.0 * r4.rhs).epsilon(1e-12));
  }
}

TEST_CASE("weighted sum saturates on Case-2 input with the normalized deviation") {
  const SpinSystem sys = spin_matrices(1.0);
  const QuantumState psi = qutrit_state(kPi / 4.0);
  const DeviationVector da = deviation_vector(sys.jx, psi);
  const QuantumState bar_a = normalized_deviation(da);
  for (double lambda : {0.25, 1.0, 4.0}) {
    const BoundReport r = weighted_sum_5a(sys.jx, sys.jy, psi, bar_a, bar_a, lambda);
    CHECK(r.rhs == doctest::Approx((1.0 + lambda) * da.variance()).epsilon(1e-12));
    CHECK(r.saturated);
  }
  CHECK_THROWS_AS(weighted_sum_5a(sys.jx, sys.jy, psi, bar_a, bar_a, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(weighted_sum_5a(sys.jx, sys.jy, psi, bar_a, bar_a, -1.0),
                  std::invalid_argument);
}

TEST_CASE("weighted Psi_{A+B} variant reproduces the comparison row") {
  const Table1Fixture f;
  const BoundReport r =
      weighted_sum_5b(f.sys.jx, f.sys.jy, f.psi, f.n1, f.n2, 1.0, "N1", "N2");
  CHECK(r.rhs == doctest::Approx(67.0 / 162.0).epsilon(1e-13));
  CHECK(r.non_canonical);

  // Second aux orthogonal to both deviations contributes nothing; the
  // canonical first slot then carries ||Psi_A + Psi_B||^2 alone.
  const BoundReport inert =
      weighted_sum_5b(f.sys.jx, f.sys.jy, f.psi, std::nullopt, f.psi, 1.0);
  const DeviationVector da = deviation_vector(f.sys.jx, f.psi);
  const DeviationVector db = deviation_vector(f.sys.jy, f.psi);
  CHECK(inert.rhs ==
        doctest::Approx(norm_sq(add(da.vector, db.vector))).epsilon(1e-12));
}

TEST_CASE("weighted Psi_{A+B} variant on Case-2 input") {
  const SpinSystem sys = spin_matrices(1.0);
  const QuantumState psi = qutrit_state(kPi / 4.0);
  const DeviationVector da = deviation_vector(sys.jx, psi);
  // Canonical first slot equals Psi_A when Psi_B = 0; psi itself is inert as
  // the second aux, so the whole bound is DeltaA^2.
  const BoundReport r = weighted_sum_5b(sys.jx, sys.jy, psi, std::nullopt, psi, 1.0);
  CHECK(r.rhs == doctest::Approx(da.variance()).epsilon(1e-12));
}

TEST_CASE("one-aux product and sum bounds reproduce the comparison rows") {
  const Table1Fixture f;
  CHECK(product_one_aux(f.sys.jx, f.sys.jy, f.psi, f.n1).rhs ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-13));
  CHECK(product_one_aux(f.sys.jx, f.sys.jy, f.psi, f.n2).rhs ==
        doctest::Approx(2.0 / 27.0).epsilon(1e-13));
  CHECK(sum_one_aux(f.sys.jx, f.sys.jy, f.psi, f.n1).rhs ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
  CHECK(sum_one_aux(f.sys.jx, f.sys.jy, f.psi, f.n2).rhs ==
        doctest::Approx(4.0 * std::sqrt(2.0) / 9.0).epsilon(1e-13));

  // Any aux orthogonal to both deviations gives a zero bound; Psi works.
  CHECK(sum_one_aux(f.sys.jx, f.sys.jy, f.psi, f.psi).rhs ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("one-aux product saturates for dependent deviations with the shared direction") {
  const SpinSystem sys = spin_matrices(1.0);
  const QuantumState psi = qutrit_state(0.3);
  const DeviationVector da = deviation_vector(sys.jx, psi);
  const BoundReport r =
      product_one_aux(sys.jx, sys.jy, psi, normalized_deviation(da));
  CHECK(r.saturated);
}

TEST_CASE("two-aux product and sum bounds reproduce the comparison rows") {
  const Table1Fixture f;
  const BoundReport p = product_two_aux(f.sys.jx, f.sys.jy, f.psi, f.n1, f.n2);
  CHECK(p.rhs == doctest::Approx(1.0 / (3.0 * std::sqrt(6.0))).epsilon(1e-13));

  const BoundReport s = sum_two_aux(f.sys.jx, f.sys.jy, f.psi, f.n1, f.n2);
  CHECK(s.rhs ==
        doctest::Approx((std::sqrt(3.0) + 2.0 * std::sqrt(2.0)) / 6.0)
            .epsilon(1e-13));

  // Same aux twice reduces the two-aux product to the one-aux product.
  const BoundReport collapsed =
      product_two_aux(f.sys.jx, f.sys.jy, f.psi, f.n1, f.n1);
  CHECK(collapsed.rhs ==
        doctest::Approx(product_one_aux(f.sys.jx, f.sys.jy, f.psi, f.n1).rhs)
            .epsilon(1e-13));

  // Zero-overlap pair.
  CHECK(sum_two_aux(f.sys.jx, f.sys.jy, f.psi, f.psi, f.psi).rhs ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("sum of deviations saturates with the two normalized deviations") {
  const Table1Fixture f;
  const DeviationVector da = deviation_vector(f.sys.jx, f.psi);
  const DeviationVector db = deviation_vector(f.sys.jy, f.psi);
  const BoundReport r = sum_two_aux(f.sys.jx, f.sys.jy, f.psi,
                                    normalized_deviation(da),
                                    normalized_deviation(db));
  CHECK(r.saturated);
}

TEST_CASE("strengthened product needs and uses orthogonal deviations") {
  const Table1Fixture f;
  CHECK(strengthened_product(f.sys.jx, f.sys.jy, f.psi, f.n1).rhs ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(strengthened_product(f.sys.jx, f.sys.jy, f.psi, f.n2).rhs ==
        doctest::Approx(4.0 / 27.0).epsilon(1e-13));

  // Optimal aux saturates.
  const DeviationVector da = deviation_vector(f.sys.jx, f.psi);
  const DeviationVector db = deviation_vector(f.sys.jy, f.psi);
  const QuantumState best = optimal_aux_pair(da, db);
  const BoundReport opt = strengthened_product(f.sys.jx, f.sys.jy, f.psi, best);
  CHECK(opt.saturated);
  CHECK(opt.rhs == doctest::Approx(opt.lhs).epsilon(1e-12));

  // Non-orthogonal deviations refuse.
  CHECK_THROWS_AS(
      strengthened_product(f.sys.jx, f.sys.jy, qutrit_state(0.3), f.n1),
      PreconditionViolated);
}

TEST_CASE("multi-observable product generalizes the strengthened product") {
  const Table1Fixture f;

  SUBCASE("n = 2 coincides with the strengthened product") {
    const BoundReport two =
        multi_observable_product({f.sys.jx, f.sys.jy}, f.psi, f.n1);
    const BoundReport seventeen =
        strengthened_product(f.sys.jx, f.sys.jy, f.psi, f.n1);
    CHECK(two.rhs == doctest::Approx(seventeen.rhs).epsilon(1e-12));
    CHECK(two.lhs == doctest::Approx(seventeen.lhs).epsilon(1e-12));
  }

  SUBCASE("n = 3 synthetic construction saturates with the equal mix") {
    std::mt19937_64 rng(2024);
    const auto inst = random_case3(5, 3, rng);
    std::vector<DeviationVector> devs;
    for (const auto& o : inst.obs) devs.push_back(deviation_vector(o, inst.psi));
    const QuantumState aux = optimal_aux_multi(devs);
    const BoundReport r = multi_observable_product(inst.obs, inst.psi, aux);
    CHECK(r.valid);
    CHECK(std::abs(r.lhs - r.rhs) < 1e-8);
  }

  SUBCASE("base state as aux gives a zero bound") {
    const BoundReport r =
        multi_observable_product({f.sys.jx, f.sys.jy}, f.psi, f.psi);
    CHECK(r.rhs == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("non-orthogonal deviations refuse") {
    CHECK_THROWS_AS(multi_observable_product({f.sys.jx, f.sys.jy},
                                             qutrit_state(0.3), f.n1),
                    PreconditionViolated);
  }
}

TEST_CASE("combined-observable sum bound") {
  const SpinSystem sys = spin_matrices(1.0);

  SUBCASE("degenerates to Delta A on Case-2 input") {
    const QuantumState psi = qutrit_state(kPi / 4.0);
    const BoundReport r = chen_fei_sum(sys.jx, sys.jy, psi);
    const double da = deviation_vector(sys.jx, psi).delta();
    CHECK(r.rhs == doctest::Approx(da).epsilon(1e-12));
    CHECK(r.lhs == doctest::Approx(da).epsilon(1e-12));
    CHECK(r.saturated);
  }

  SUBCASE("equal observables give twice the deviation") {
    const QuantumState psi = qutrit_state(0.3);
    const BoundReport r = chen_fei_sum(sys.jx, sys.jx, psi);
    CHECK(r.rhs ==
          doctest::Approx(2.0 * deviation_vector(sys.jx, psi).delta())
              .epsilon(1e-12));
  }

  SUBCASE("uniform state stays valid") {
    const Table1Fixture f;
    const BoundReport r = chen_fei_sum(f.sys.jx, f.sys.jy, f.psi);
    CHECK(r.valid);
    CHECK(r.rhs <= r.lhs + 1e-12);
  }
}

TEST_CASE("shifted-operator bypass on the qutrit special point") {
  const SpinSystem sys = spin_matrices(1.0);
  const QuantumState psi = qutrit_state(kPi / 4.0);
  const ShiftedBypassResult res = shifted_operator_bypass(sys.jx, sys.jy, psi);
  CHECK(res.delta_equal);
  CHECK(res.commutator_preserved);
  CHECK(std::abs(res.eigenvalue) < 1e-12);
  CHECK(res.delta_shifted ==
        doctest::Approx(deviation_vector(sys.jx, psi).delta()).epsilon(1e-12));

  const Matrix diff = commutator(sys.jx.matrix(), res.shifted.matrix()) -
                      commutator(sys.jx.matrix(), sys.jy.matrix());
  CHECK(diff.max_abs() < 1e-12);
}

TEST_CASE("shifted-operator bypass on the qubit special point with swapped roles") {
  const QuantumState psi = qubit_state(kPi / 4.0); // sigma_x deviation vanishes
  const ShiftedBypassResult res = shifted_operator_bypass(sigma_y(), sigma_x(), psi);
  CHECK(res.delta_equal);
  CHECK(res.commutator_preserved);
}

TEST_CASE("shifted-operator bypass shows Delta T = Delta V on oscillator eigenstates") {
  const TruncatedOscillator osc = truncated_oscillator(6);
  CVec ground(6, 0.0);
  ground[0] = 1.0;
  const QuantumState psi(std::move(ground));
  const ShiftedBypassResult res =
      shifted_operator_bypass(osc.kinetic, osc.hamiltonian, psi);
  CHECK(res.delta_equal);
  CHECK(res.commutator_preserved);
  CHECK(res.eigenvalue == doctest::Approx(1.0).epsilon(1e-12));
  // Bbar = H - T = V, so the shifted spread is the potential-energy spread.
  const double dv = deviation_vector(osc.potential, psi).delta();
  CHECK(res.delta_shifted == doctest::Approx(dv).epsilon(1e-12));
}

TEST_CASE("shifted-operator bypass refuses when Delta B is not zero") {
  const SpinSystem sys = spin_matrices(1.0);
  CHECK_THROWS_AS(shifted_operator_bypass(sys.jx, sys.jy, qutrit_state(0.3)),
                  PreconditionViolated);
}

TEST_CASE("property: master validity over random instances") {
  std::mt19937_64 rng(123456789);
  std::uniform_int_distribution<std::size_t> dim_dist(2, 6);
  const double lambdas[] = {0.25, 1.0, 4.0};
  constexpr double tol = 1e-10;

  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t dim = dim_dist(rng);
    const Observable a = random_hermitian(dim, rng);
    const Observable b = random_hermitian(dim, rng);
    const QuantumState psi = random_state(dim, rng);
    const QuantumState aux1 = random_state(dim, rng);
    const QuantumState aux2 = random_state(dim, rng);
    const double lambda = lambdas[trial % 3];

    const BoundReport reports[] = {
        robertson_product(a, b, psi),
        robertson_decomposition(a, b, psi),
        sum_bound_4a(a, b, psi, aux1),
        sum_bound_4b(a, b, psi),
        sum_bound_4b(a, b, psi, aux1),
        weighted_sum_5a(a, b, psi, aux1, aux2, lambda),
        weighted_sum_5b(a, b, psi, aux1, aux2, lambda),
        weighted_sum_5b(a, b, psi, std::nullopt, aux2, lambda),
        product_one_aux(a, b, psi, aux1),
        sum_one_aux(a, b, psi, aux1),
        product_two_aux(a, b, psi, aux1, aux2),
        sum_two_aux(a, b, psi, aux1, aux2),
        chen_fei_sum(a, b, psi),
    };
    for (const auto& r : reports) {
      REQUIRE(r.rhs <= r.lhs + tol);
      REQUIRE(r.valid);
    }
  }
}

TEST_CASE("property: strengthened product stays valid and saturates optimally "
          "on random orthogonal-deviation instances") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<std::size_t> dim_dist(4, 6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = dim_dist(rng);
    const auto inst = random_case3(dim, 2, rng);
    const DeviationVector da = deviation_vector(inst.obs[0], inst.psi);
    const DeviationVector db = deviation_vector(inst.obs[1], inst.psi);

    const QuantumState aux = random_state(dim, rng);
    const BoundReport any = strengthened_product(inst.obs[0], inst.obs[1],
                                                 inst.psi, aux);
    CHECK(any.rhs <= any.lhs + 1e-10);

    const BoundReport best = strengthened_product(inst.obs[0], inst.obs[1],
                                                  inst.psi, optimal_aux_pair(da, db));
    CHECK(std::abs(best.lhs - best.rhs) < 1e-8);
    CHECK(best.saturated);
  }
}

TEST_CASE("property: product-bound saturation happens exactly for dependent or "
          "Case-2 deviations") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::size_t> dim_dist(2, 6);
  std::uniform_real_distribution<double> u(-1.5, 1.5);

  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = dim_dist(rng);
    const Observable a = random_hermitian(dim, rng);
    const QuantumState psi = random_state(dim, rng);

    // B = c A + d I makes Psi_B = c Psi_A: saturation guaranteed.
    const double c = u(rng), d = u(rng);
    const Observable b(cplx(c) * a.matrix() + cplx(d) * Matrix::identity(dim));
    const BoundReport dependent = robertson_product(a, b, psi);
    CHECK(dependent.saturated);
    const auto uc = classify_case(deviation_vector(a, psi),
                                  deviation_vector(b, psi));
    CHECK((uc.tag == CaseTag::Case1Dependent || uc.tag == CaseTag::Case2ZeroA ||
           uc.tag == CaseTag::Case2ZeroB));

    // Orthogonal-deviation construction: never saturated (rhs = 0, lhs > 0).
    const auto inst = random_case3(std::max<std::size_t>(dim, 3), 2, rng);
    const BoundReport orth = robertson_product(inst.obs[0], inst.obs[1], inst.psi);
    CHECK_FALSE(orth.saturated);
    CHECK(orth.rhs < 1e-10);

    // Consistency on generic random pairs: saturation implies a dependent or
    // Case-2 classification.
    const Observable b2 = random_hermitian(dim, rng);
    const BoundReport generic = robertson_product(a, b2, psi);
    if (generic.saturated) {
      const auto tag = classify_case(deviation_vector(a, psi),
                                     deviation_vector(b2, psi)).tag;
      CHECK((tag == CaseTag::Case1Dependent || tag == CaseTag::Case2ZeroA ||
             tag == CaseTag::Case2ZeroB));
    }
  }
}

TEST_CASE("property: two-aux bounds dominate their one-aux versions on the "
          "comparison inputs") {
  const Table1Fixture f;
  const double eq13_n1 = product_one_aux(f.sys.jx, f.sys.jy, f.psi, f.n1).rhs;
  const double eq13_n2 = product_one_aux(f.sys.jx, f.sys.jy, f.psi, f.n2).rhs;
  const double eq15_best =
      std::max(product_two_aux(f.sys.jx, f.sys.jy, f.psi, f.n1, f.n2).rhs,
               product_two_aux(f.sys.jx, f.sys.jy, f.psi, f.n2, f.n1).rhs);
  CHECK(eq15_best >= eq13_n1 - 1e-12);
  CHECK(eq15_best >= eq13_n2 - 1e-12);

  const double eq14_n1 = sum_one_aux(f.sys.jx, f.sys.jy, f.psi, f.n1).rhs;
  const double eq14_n2 = sum_one_aux(f.sys.jx, f.sys.jy, f.psi, f.n2).rhs;
  const double eq16 = sum_two_aux(f.sys.jx, f.sys.jy, f.psi, f.n1, f.n2).rhs;
  CHECK(eq16 >= eq14_n1 - 1e-12);
  CHECK(eq16 >= eq14_n2 - 1e-12);
}

TEST_CASE("property: Case-2 reduction of the sign-choice sum bound is exact") {
  std::mt19937_64 rng(808);
  std::uniform_int_distribution<std::size_t> dim_dist(2, 6);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = dim_dist(rng);

    // Diagonal B with a canonical-basis state makes Psi_B exactly zero.
    Matrix bm(dim);
    for (std::size_t i = 0; i < dim; ++i) bm(i, i) = u(rng);
    const Observable b(bm);
    CVec e(dim, 0.0);
    const std::size_t k = trial % dim;
    e[k] = 1.0;
    const QuantumState psi(std::move(e));

    const Observable a = random_hermitian(dim, rng);
    const QuantumState aux = random_state(dim, rng);
    const DeviationVector da = deviation_vector(a, psi);

    const BoundReport r = sum_bound_4a(a, b, psi, aux);
    const double expected = std::norm(inner(da.vector, aux.amplitudes()));
    CHECK(std::abs(r.rhs - expected) < 1e-15);
  }
}
