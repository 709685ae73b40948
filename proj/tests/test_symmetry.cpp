#include <doctest.h>

#include <cmath>

#include "minlab/implicit.hpp"
#include "minlab/matlib.hpp"
#include "minlab/parametric.hpp"
#include "minlab/rng.hpp"
#include "minlab/scenarios.hpp"
#include "minlab/symmetry.hpp"
#include "test_oracles.hpp"

using namespace minlab;
using namespace minlab::testing;

TEST_CASE("make_isometry validates orthogonality and records parity") {
  const AmbientIsometry rot = make_isometry(rotation_taking(
      VectorXd::Unit(3, 0), VectorXd::Unit(3, 2)));
  CHECK(rot.parity == 1);

  const AmbientIsometry refl =
      make_isometry(householder_reflection(VectorXd::Unit(3, 1)));
  CHECK(refl.parity == -1);

  CHECK_THROWS_AS(make_isometry((2.0 * MatrixXd::Identity(3, 3)).eval()),
                  ContractError);
  CHECK_THROWS_AS(make_isometry(MatrixXd::Zero(2, 3)), DimensionError);
}

TEST_CASE("block swap reflection") {
  const AmbientIsometry xi = xi_swap(1);
  VectorXd x(4);
  x << 1, 2, 3, 4;
  VectorXd expect(4);
  expect << 3, 4, 1, 2;
  CHECK((xi.apply(x) - expect).norm() == 0.0);
  CHECK(xi.parity == 1);  // two transpositions
  CHECK(xi_swap(2).parity == -1);  // three transpositions

  CHECK_THROWS_AS(xi_swap(0), ContractError);
}

TEST_CASE("helicoidal check on the equal torus") {
  const SurfaceHandle handle = clifford_torus_handle(1);
  const double a = 0.5;  // (a,a,a,a) has both block norms 1/sqrt2
  const VectorXd p = VectorXd::Constant(4, a);

  auto rng = rng_stream(700, 0);
  const HelicoidalReport good = helicoidal_check(handle, xi_swap(1), p, 200, rng);
  CHECK(good.fix_distance <= 1e-15);
  CHECK(good.preserve_fraction == 1.0);
  CHECK(good.swap_fraction == 1.0);
  CHECK(good.verdict);

  // identity preserves everything but swaps nothing
  const HelicoidalReport lazy = helicoidal_check(
      handle, make_isometry(MatrixXd::Identity(4, 4)), p, 200, rng);
  CHECK(lazy.preserve_fraction == 1.0);
  CHECK(lazy.swap_fraction == 0.0);
  CHECK_FALSE(lazy.verdict);

  // a generic rotation does not even preserve the surface
  MatrixXd R = MatrixXd::Identity(4, 4);
  const double c = std::cos(0.3), s = std::sin(0.3);
  R(0, 0) = c; R(0, 2) = -s; R(2, 0) = s; R(2, 2) = c;
  const HelicoidalReport off = helicoidal_check(handle, make_isometry(R), p, 200, rng);
  CHECK(off.preserve_fraction < 0.5);
  CHECK_FALSE(off.verdict);

  // p must lie on the surface
  CHECK_THROWS_AS(
      helicoidal_check(handle, xi_swap(1), VectorXd::Unit(4, 0), 10, rng),
      ContractError);
}

TEST_CASE("eta conjugator") {
  const double c = 1.0 / std::sqrt(2.0);

  SUBCASE("fixed-form points give the identity") {
    VectorXd q(4);
    q << c * std::cos(0.4), c * std::sin(0.4), c * std::cos(0.4), c * std::sin(0.4);
    const AmbientIsometry eta = eta_conjugator(q, 1);
    CHECK((eta.matrix - MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);
  }

  SUBCASE("generic points are moved to fixed form") {
    auto rng = rng_stream(701, 0);
    const SurfaceHandle handle = clifford_torus_handle(2);
    for (int i = 0; i < 10; ++i) {
      const VectorXd q = handle.sample_on(rng);
      const AmbientIsometry eta = eta_conjugator(q, 2);
      const VectorXd moved = eta.apply(q);
      CHECK((moved.head(3) - moved.tail(3)).norm() <= 1e-12);
      CHECK(handle.membership(moved) <= 1e-12);
      // block structure preserves both sides of the torus
      CHECK(eta.matrix.topRightCorner(3, 3).norm() == 0.0);
      CHECK(eta.matrix.bottomLeftCorner(3, 3).norm() == 0.0);
    }
  }

  SUBCASE("off-torus points are rejected") {
    CHECK_THROWS_AS(eta_conjugator(VectorXd::Unit(4, 0), 1), ContractError);
  }
}

TEST_CASE("conjugated xi is helicoidal at its own base point") {
  for (int p : {1, 2}) {
    const SurfaceHandle handle = clifford_torus_handle(p);
    for (int i = 0; i < 5; ++i) {
      auto rng = rng_stream(702 + p, i);
      const VectorXd q = handle.sample_on(rng);
      const AmbientIsometry iso = conjugated_xi(q, p);
      const HelicoidalReport r = helicoidal_check(handle, iso, q, 100, rng);
      CHECK(r.fix_distance <= 1e-12);
      CHECK(r.preserve_fraction == 1.0);
      CHECK(r.swap_fraction == 1.0);
      CHECK(r.verdict);
    }
  }
}

TEST_CASE("flattened operators respect composition") {
  const MatrixXd A1 = random_matrix(3, 3, 710);
  const MatrixXd A2 = random_matrix(3, 3, 711);
  const MatrixXd Y = random_matrix(3, 3, 712);

  auto flatten = [](const MatrixXd& M) {
    VectorXd v(M.size());
    for (int i = 0; i < M.rows(); ++i)
      for (int j = 0; j < M.cols(); ++j) v(i * M.cols() + j) = M(i, j);
    return v;
  };

  const VectorXd lhs = left_multiply_operator(A1) * flatten(Y);
  CHECK((lhs - flatten(A1 * Y)).norm() <= 1e-13);
  CHECK((left_multiply_operator((A1 * A2).eval()) -
         left_multiply_operator(A1) * left_multiply_operator(A2))
            .norm() <= 1e-12);

  const MatrixXd B1 = random_matrix(4, 4, 713);
  const MatrixXd B2 = random_matrix(4, 4, 714);
  const MatrixXd X = antisymmetrize(random_matrix(4, 4, 715));
  const VectorXd conj = skew_conjugation_operator(B1) * upper_from_skew(X);
  CHECK((conj - upper_from_skew(antisymmetrize(B1.transpose() * X * B1))).norm() <=
        1e-12);
  // (B1 B2)^T X (B1 B2) applies B1 first, then B2
  CHECK((skew_conjugation_operator((B1 * B2).eval()) -
         skew_conjugation_operator(B2) * skew_conjugation_operator(B1))
            .norm() <= 1e-11);
}

TEST_CASE("det helicoidal construction") {
  auto rng = rng_stream(720, 0);
  const ScalarField field = det_variety(3);
  for (int i = 0; i < 10; ++i) {
    const VarietyPoint pt = sample_det_variety(3, rng);
    MatrixXd X(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) X(r, c) = pt.x(3 * r + c);
    const AmbientIsometry iso = det_helicoidal_at(X);

    CHECK((iso.apply(pt.x) - pt.x).norm() <= 1e-12);  // fixes X itself
    // flips the sign of det on generic matrices
    const VectorXd y = gaussian_vector(9, rng);
    const VectorXd ay = iso.apply(y);
    CHECK(field.value(ay) == doctest::Approx(-field.value(y)).epsilon(1e-12));
    // orthogonal on the flattened space
    CHECK((iso.matrix.transpose() * iso.matrix - MatrixXd::Identity(9, 9))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
  }
  CHECK_THROWS_AS(det_helicoidal_at(MatrixXd::Identity(3, 3)), NotSingularError);
}

TEST_CASE("pf helicoidal construction") {
  auto rng = rng_stream(721, 0);
  const ScalarField field = pf_variety(2);
  for (int i = 0; i < 10; ++i) {
    const VarietyPoint pt = sample_pf_variety(2, rng);
    const MatrixXd X = skew_from_upper(pt.x);
    const AmbientIsometry iso = pf_helicoidal_at(X);

    CHECK((iso.apply(pt.x) - pt.x).norm() <= 1e-12);
    const VectorXd y = gaussian_vector(6, rng);
    const VectorXd by = iso.apply(y);
    CHECK(field.value(by) == doctest::Approx(-field.value(y)).epsilon(1e-12));
    CHECK((iso.matrix.transpose() * iso.matrix - MatrixXd::Identity(6, 6))
              .cwiseAbs()
              .maxCoeff() <= 1e-11);
  }

  // full-rank input is not on the variety
  MatrixXd L = MatrixXd::Zero(4, 4);
  L(0, 1) = 1; L(1, 0) = -1; L(2, 3) = 1; L(3, 2) = -1;
  CHECK_THROWS_AS(pf_helicoidal_at(L), NonRegularPointError);
  CHECK_THROWS_AS(pf_helicoidal_at(random_matrix(4, 4, 722)), ContractError);
}

TEST_CASE("pf helicoidal agrees with the canonical-form construction") {
  // alternative route: build B from the canonical frame, swapping the two
  // directions of the zero block
  auto rng = rng_stream(723, 0);
  const ScalarField field = pf_variety(3);
  for (int i = 0; i < 5; ++i) {
    const VarietyPoint pt = sample_pf_variety(3, rng);
    const MatrixXd X = skew_from_upper(pt.x);
    const SkewCanonicalForm form = skew_canonical_form(X);
    MatrixXd J = MatrixXd::Identity(6, 6);
    J.block(4, 4, 2, 2) << 0, 1, 1, 0;  // swap the zero-block directions
    const MatrixXd B_alt = form.Q * J * form.Q.transpose();
    const AmbientIsometry alt = make_isometry(skew_conjugation_operator(B_alt));
    const AmbientIsometry iso = pf_helicoidal_at(X);

    CHECK((alt.apply(pt.x) - pt.x).norm() <= 1e-10);
    const VectorXd y = gaussian_vector(15, rng);
    CHECK(field.value(alt.apply(y)) ==
          doctest::Approx(-field.value(y)).epsilon(1e-10));
    // both constructions act identically on the matrix they were built from
    CHECK((alt.apply(pt.x) - iso.apply(pt.x)).norm() <= 1e-10);
  }
}

TEST_CASE("crosscheck runner counts failures") {
  const Immersion torus = generalized_clifford(1, 1);
  CrosscheckScenario sc;
  sc.handle = clifford_torus_handle(1);
  sc.residual_tol = 1e-6;
  sc.sample_point = [torus](std::mt19937_64& rng) {
    const VectorXd phi = torus.sample_chart_point(rng);
    return std::make_pair(torus.eval(phi).value,
                          sphere_minimality_residual(torus, phi));
  };
  sc.iso_at = [](const VectorXd& x) { return conjugated_xi(x, 1); };

  const CrosscheckReport rep = symmetry_crosscheck(sc, 10, 50, 724);
  CHECK(rep.points.size() == 10);
  CHECK(rep.failures == 0);

  // an impossible residual bound flags every point
  sc.residual_tol = 0.0;
  CHECK(symmetry_crosscheck(sc, 10, 50, 724).failures > 0);
}
