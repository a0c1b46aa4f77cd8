#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "yaxter/error.hpp"
#include "yaxter/su2_criticality.hpp"

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

ComplexMatrix projector(std::size_t dim, std::initializer_list<std::size_t> idx) {
  ComplexMatrix p(dim, dim);
  for (auto i : idx) p(i, i) = 1.0;
  return p;
}

}  // namespace

TEST(FermionOps, SingleSiteAlgebra) {
  for (std::size_t n : {1u, 2u, 3u}) {
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t i = 1; i <= n; ++i) {
      const auto ops = fermionic_ops(i, n);
      EXPECT_EQ(frobenius_norm(ops.f * ops.f), 0.0);
      EXPECT_EQ(distance(anticommutator(ops.f, ops.f_dag), ComplexMatrix::identity(dim)), 0.0);
      EXPECT_EQ(distance(ops.number * ops.number, ops.number), 0.0);
    }
  }
}

TEST(FermionOps, DifferentSitesCommute) {
  const auto a = fermionic_ops(1, 3);
  const auto b = fermionic_ops(3, 3);
  EXPECT_EQ(frobenius_norm(commutator(a.f, b.f_dag)), 0.0);
  EXPECT_EQ(frobenius_norm(commutator(a.number, b.f)), 0.0);
}

TEST(Composite, SuTwoAlgebra) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto t = su2_composite(n);
    EXPECT_EQ(su2_algebra_residual(t), 0.0) << n;
    const std::size_t dim = std::size_t{1} << n;
    EXPECT_EQ(t.s_plus(0, dim - 1), Complex(1.0));
    EXPECT_EQ(frobenius_norm(t.s_plus), 1.0);
  }
  EXPECT_EQ(kind_of([] { su2_composite(1); }), ErrorKind::SiteOutOfRange);
}

TEST(Composite, NumberFormOfS3) {
  EXPECT_EQ(distance(su2_composite(2).s3, s3_number_form(2)), 0.0);
  // beyond two sites the forms only agree on the all-up / all-down pair
  const auto t = su2_composite(3);
  const auto p = projector(8, {0, 7});
  EXPECT_LT(distance(p * s3_number_form(3) * p, t.s3), 1e-15);
  EXPECT_GT(distance(s3_number_form(3), t.s3), 0.1);
}

TEST(Composite, CasimirOnDoublet) {
  const auto t = su2_composite(3);
  const auto c = casimir(t);
  EXPECT_LT(distance(c, projector(8, {0, 7}) * Complex(0.75)), 1e-15);
}

TEST(GapModel, ReproducesClosedForms) {
  for (double theta : {0.3, 1.2, 2.4}) {
    const auto g1 = gap_model_h1(theta, 0.9, 1.4);
    EXPECT_LT(distance(g1.h0() * Complex(g1.prefactor), h1(theta, 0.9, 1.4)), 1e-15);
    const auto g2 = gap_model_h2(theta, 0.9, 1.6, 1.4);
    EXPECT_LT(distance(g2.h0() * Complex(g2.prefactor), h2(theta, 0.9, 1.4, 1.6)), 1e-15);
  }
}

TEST(GapModel, BlockOperatorsForH2) {
  // J⁺ = S₁⁺S₂⁻ and J³ = (n̂₁ − n̂₂)/2
  const auto g = gap_model_h2(0.5, 0.0, 2.0);
  const auto a = fermionic_ops(1, 2);
  const auto b = fermionic_ops(2, 2);
  EXPECT_EQ(distance(g.s_plus(), a.f_dag * b.f), 0.0);
  EXPECT_EQ(distance(g.s3(), (a.number - b.number) * Complex(0.5)), 0.0);
  EXPECT_EQ(distance(commutator(g.s_plus(), g.s_minus()), g.s3() * Complex(2.0)), 0.0);
}

TEST(GapModel, Energy) {
  const auto g = gap_model_h1(0.7, 2.0);
  EXPECT_NEAR(g.energy(), 1.0, 1e-15);
  const auto ev = eig_hermitian(g.h0()).values;
  EXPECT_NEAR(ev[0], -1.0, 1e-14);
  EXPECT_NEAR(ev[3], 1.0, 1e-14);
  EXPECT_EQ(kind_of([] { gap_model_h2(0.5, 0.0, 0.0); }), ErrorKind::DegenerateQ);
}

TEST(Displacement, DiagonalizesH1Block) {
  for (double theta : {0.2, 1.0, 2.0})
    for (double phi : {0.0, 0.8, -2.0}) {
      const auto d = displacement_diagonalize(gap_model_h1(theta, phi));
      EXPECT_LT(d.residual, 1e-12);
      EXPECT_LT(unitarity_defect(d.w), 1e-13);
      const auto closed = coherent_state_closed_form(theta, phi);
      EXPECT_NEAR(std::abs(inner(closed, d.coherent_state)), 1.0, 1e-13);
      EXPECT_NEAR(std::abs(d.tau - closed[0] / closed[3]), 0.0, 1e-12);
    }
}

TEST(Displacement, DiagonalizesH2Block) {
  const auto g = gap_model_h2(0.9, 1.3, 0.6);
  const auto d = displacement_diagonalize(g);
  EXPECT_LT(d.residual, 1e-13);
  EXPECT_NEAR(norm(d.coherent_state), 1.0, 1e-14);
  EXPECT_EQ(d.coherent_state[0], Complex(0.0));
}

TEST(Displacement, Undefined) {
  GapModel g;
  g.epsilon = 0.0;
  g.delta = 0.0;
  EXPECT_EQ(kind_of([&] { displacement_diagonalize(g); }), ErrorKind::UndefinedRotation);
}

TEST(Scan, H1Rows) {
  const std::vector<double> thetas{0.0, 0.6, 1.2, pi / 2};
  const auto rows = criticality_scan(thetas, {}, 1.0, 400);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_FALSE(rows[i].q.has_value());
    EXPECT_NEAR(rows[i].gap, std::sin(thetas[i]), 1e-15);
    EXPECT_NEAR(rows[i].energy_split, 2 * std::abs(std::cos(thetas[i])), 1e-15);
  }
  EXPECT_TRUE(rows[0].critical);
  EXPECT_FALSE(rows[1].critical);
  EXPECT_NEAR(rows[1].concurrence, std::sin(0.6), 1e-12);
  EXPECT_NEAR(rows[1].berry_plus, pi * (1 - std::cos(0.6)), 1e-4);
  EXPECT_TRUE(std::isnan(rows[3].berry_plus));
  EXPECT_TRUE(std::isnan(rows[3].concurrence));
}

TEST(Scan, H2RowsThetaOuter) {
  const auto rows = criticality_scan({0.3, 0.9}, {0.5, 1.0, 2.0}, 1.0, 200);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_DOUBLE_EQ(rows[0].theta, 0.3);
  EXPECT_DOUBLE_EQ(rows[2].theta, 0.3);
  EXPECT_DOUBLE_EQ(rows[3].theta, 0.9);
  EXPECT_DOUBLE_EQ(*rows[4].q, 1.0);
  EXPECT_TRUE(rows[1].critical);
  EXPECT_EQ(rows[1].gap, 0.0);
  EXPECT_NEAR(rows[0].gap, 0.75, 1e-15);
  EXPECT_NEAR(rows[2].gap, rows[0].gap, 1e-15);
  EXPECT_EQ(kind_of([] { criticality_scan({}, {}); }), ErrorKind::BadParams);
  EXPECT_EQ(kind_of([] { criticality_scan({0.3}, {0.0}); }), ErrorKind::DegenerateQ);
}
