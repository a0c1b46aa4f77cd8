#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "yaxter/dynamics.hpp"
#include "yaxter/error.hpp"

using namespace yaxter;
using std::numbers::pi;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::IoError;
}

HamiltonianModel h1_model(double theta, double omega = 1.0) {
  HamiltonianModel m;
  m.theta = theta;
  m.omega = omega;
  return m;
}

}  // namespace

TEST(Rk4, StaticHamiltonianMatchesExponential) {
  auto gen = testkit::rng(11);
  const auto h = testkit::random_hermitian(gen, 4);
  const auto psi = testkit::random_state(gen, 4);
  const double period = 1.7;
  const auto traj = evolve_with([&](double) { return h; }, psi, period, 2000);
  const auto exact = expm(h * Complex(0.0, -period)) * psi;
  EXPECT_LT(distance(traj.states.back(), exact), 1e-10);
  EXPECT_EQ(traj.states.size(), 2001u);
  EXPECT_NEAR(traj.times.back(), period, 1e-12);
  EXPECT_LT(traj.max_norm_drift, 1e-10);
}

TEST(Rk4, Guards) {
  const ComplexVector psi{1.0, 0.0};
  const auto z = spin::pauli_z();
  EXPECT_EQ(kind_of([&] { evolve_with([&](double) { return z; }, psi, 1.0, 99); }), ErrorKind::StepsTooFew);
  EXPECT_EQ(kind_of([&] { evolve_with([&](double) { return spin::pauli_x() * Complex(1e3); }, psi, 1.0, 100); }),
            ErrorKind::NormDrift);
  EXPECT_EQ(kind_of([] { evolve(h1_model(0.5), 0.0, ComplexVector(4, 0.5), 200); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { evolve(h1_model(0.5, -1.0), 1.0, ComplexVector(4, 0.5), 200); }), ErrorKind::BadParams);
}

TEST(Evolve, PeriodIsOneDriveCycle) {
  const auto traj = evolve(h1_model(0.4, 2.0), 1.0, {1, 0, 0, 0}, 400);
  EXPECT_NEAR(traj.times.back(), pi, 1e-12);
  EXPECT_EQ(traj.scale_g, 1.0);
}

TEST(Evolve, StaticLimitHasNoGeometricPhase) {
  const auto traj = evolve(h1_model(0.0), 3.0, {1, 0, 0, 0}, 2000);
  EXPECT_NEAR(return_fidelity(traj), 1.0, 1e-10);
  EXPECT_NEAR(geometric_phase(traj, BandLabel::Plus), 0.0, 1e-8);
}

TEST(Evolve, NotCyclic) {
  const double r = 1 / std::sqrt(2.0);
  const auto traj = evolve(h1_model(0.0), 1.5, {r, r, 0, 0}, 2000);
  EXPECT_LT(return_fidelity(traj), 1e-6);
  EXPECT_EQ(kind_of([&] { geometric_phase(traj, BandLabel::Plus); }), ErrorKind::NotCyclic);
}

TEST(Propagator, RMatrixSolvesSchrodinger) {
  auto gen = testkit::rng(5);
  const auto phi0 = testkit::random_state(gen, 4);
  const auto fam = m_family(Epsilon::plus());
  EXPECT_LT(propagator_deviation(fam, h1_model(pi / 3), phi0, 2000), 1e-9);
  EXPECT_LT(propagator_deviation(fam, h1_model(1.2, 0.7), phi0, 2000), 1e-9);
}

TEST(Propagator, RationalTlWithH3) {
  auto gen = testkit::rng(6);
  const auto phi0 = testkit::random_state(gen, 4);
  HamiltonianModel m = h1_model(0.8);
  m.kind = ModelKind::H3;
  EXPECT_LT(propagator_deviation(rational_tl_family(1.0, Epsilon::plus()), m, phi0, 2000), 1e-9);
}

TEST(Adiabatic, DeviationShrinksWithScale) {
  const auto rows = adiabatic_report(h1_model(pi / 3), {5.0, 20.0, 80.0}, 8000);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_GT(rows[0].deviation, rows[1].deviation);
  EXPECT_GT(rows[1].deviation, rows[2].deviation);
  for (const auto& r : rows) {
    EXPECT_GT(r.fidelity, 0.9);
    EXPECT_NEAR(r.analytic_phase, pi / 2, 1e-5);
  }
  // leading correction ∝ 1/g
  EXPECT_NEAR(rows[1].deviation / rows[2].deviation, 4.0, 0.3);
}
