#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "yaxter/error.hpp"
#include "yaxter/hamiltonians.hpp"

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

// 2×2 Hermitian block [[a, b], [b*, −a]] has eigenvalues ±√(a² + |b|²)
double block_magnitude(const ComplexMatrix& h, std::size_t i, std::size_t j) {
  return std::hypot(h(i, i).real(), std::abs(h(i, j)));
}

}  // namespace

TEST(ClosedForms, HermitianAndTraceless) {
  for (double theta : {0.2, 1.0, 2.5})
    for (double phi : {0.0, 1.3, 4.0}) {
      for (const auto& h : {h1(theta, phi, 1.3), h2(theta, phi, 1.3, 1.7), h3(theta, phi, 1.3), h4(theta, phi, 1.3)}) {
        EXPECT_LT(hermiticity_defect(h), 1e-15);
        EXPECT_LT(std::abs(h.trace()), 1e-15);
      }
    }
}

TEST(ClosedForms, BlockSupport) {
  const auto a = h1(0.7, 0.4, 1.0);
  const auto b = h4(0.7, 0.4, 1.0);
  for (std::size_t i : {1u, 2u})
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(a(i, j), Complex(0.0));
  for (std::size_t i : {0u, 3u})
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(b(i, j), Complex(0.0));
}

TEST(ClosedForms, H1Spectrum) {
  const double theta = 0.9, omega = 2.0;
  const auto ev = eig_hermitian(h1(theta, 0.6, omega)).values;
  const double e = omega * std::abs(std::cos(theta));
  EXPECT_NEAR(ev[0], -e, 1e-13);
  EXPECT_NEAR(ev[1], 0.0, 1e-13);
  EXPECT_NEAR(ev[2], 0.0, 1e-13);
  EXPECT_NEAR(ev[3], e, 1e-13);
}

TEST(ClosedForms, H2SpectrumAgainstBlockFormula) {
  for (double q : {0.4, 1.8, 3.0}) {
    const double theta = 0.5;
    const auto h = h2(theta, 1.1, 1.0, q);
    const double mag = block_magnitude(h, 1, 2);
    const auto ev = eig_hermitian(h).values;
    EXPECT_NEAR(ev[0], -mag, 1e-13);
    EXPECT_NEAR(ev[3], mag, 1e-13);
    const auto forms = h2_energy_forms(theta, 1.0, q);
    EXPECT_NEAR(std::abs(forms.from_matrix[0]), mag, 1e-13);
    EXPECT_NEAR(forms.from_matrix[0], -forms.from_matrix[1], 1e-15);
    EXPECT_NEAR(forms.simplified[0], 4.0 * forms.from_matrix[0], 1e-13);
  }
}

TEST(ClosedForms, LambdaPlus) {
  EXPECT_NEAR(h2_lambda_plus(0.0, 2.0), std::sqrt(1.0 + 0.5625), 1e-15);
  EXPECT_NEAR(h2_lambda_plus(pi / 2, 1.0), 0.0, 1e-15);
  EXPECT_EQ(kind_of([] { h2_energy_forms(pi / 2, 1.0, 1.0); }), ErrorKind::NormalizationSingular);
}

TEST(ClosedForms, H2Errors) {
  EXPECT_EQ(kind_of([] { h2(0.3, 0.0, 1.0, 0.0); }), ErrorKind::DegenerateQ);
  EXPECT_EQ(kind_of([] { h2(pi / 2, 0.0, 1.0, 1.0); }), ErrorKind::NormalizationSingular);
}

TEST(ClosedForms, H3IsH1WithOppositeShift) {
  EXPECT_LT(h3_equals_h1_check(0.8, 1.0, -pi / 2), 1e-14);
  EXPECT_LT(h3_equals_h1_check(2.1, 0.5, -pi / 2), 1e-14);
}

TEST(ModelDispatch, Materialize) {
  HamiltonianModel m;
  m.theta = 0.4;
  m.omega = 1.5;
  m.q = 2.0;
  for (auto [kind, expected] : {std::pair{ModelKind::H1, h1(0.4, 0.3, 1.5)}, std::pair{ModelKind::H2, h2(0.4, 0.3, 1.5, 2.0)},
                                std::pair{ModelKind::H3, h3(0.4, 0.3, 1.5)}, std::pair{ModelKind::H4, h4(0.4, 0.3, 1.5)}}) {
    m.kind = kind;
    EXPECT_EQ(distance(m.materialize(0.3), expected), 0.0) << to_string(kind);
  }
  m.kind = ModelKind::NumericDerived;
  EXPECT_EQ(kind_of([&] { m.materialize(0.0); }), ErrorKind::BadParams);
  m.family = m_family(Epsilon::plus());
  m.theta = 1.0;
  EXPECT_LT(distance(m.materialize(0.3), h1(1.0, 0.3, 1.5)), 1e-8);
}

TEST(NumericDerivation, MFamilyGivesH1) {
  const auto fam = m_family(Epsilon::plus());
  for (double theta : {0.9, pi / 3, 1.4, 2.2}) {
    const auto d = derive_h_numeric(fam, theta, 0.7, 1.2);
    EXPECT_LT(distance(d.matrix, h1(theta, 0.7, 1.2)), 1e-9) << theta;
    EXPECT_LT(d.anti_hermitian, 1e-9);
  }
}

TEST(NumericDerivation, SecondOrderConvergence) {
  const auto fam = m_family(Epsilon::minus());
  const auto d = derive_h_numeric(fam, 1.1, 0.2, 1.0).matrix;
  const double order = fd_convergence_order(fam, d, 1.1, 0.2, 1.0, 1e-2);
  EXPECT_GT(order, 1.8);
  EXPECT_LT(order, 2.2);
  const double order_h1 = fd_convergence_order(m_family(Epsilon::plus()), h1(1.1, 0.2, 1.0), 1.1, 0.2, 1.0);
  EXPECT_NEAR(order_h1, 2.0, 0.1);
}

TEST(NumericDerivation, RationalTlGivesH3) {
  for (int e : {1, -1}) {
    const auto fam = rational_tl_family(1.0, Epsilon(e));
    for (double theta : {0.3, 1.0, 2.6}) {
      EXPECT_LT(distance(derive_h_numeric(fam, theta, 0.4, 1.0).matrix, h3(theta, 0.4, 1.0, Epsilon(e))), 1e-9)
          << theta << " eps " << e;
    }
  }
}

TEST(NumericDerivation, RationalTlMidMatchesH4UpToFluxOffset) {
  const auto fam = rational_tl_family(1.0, Epsilon::plus(), Family::TLMid);
  for (double theta : {0.3, 1.0}) {
    const auto d = derive_h_numeric(fam, theta, 0.4 + pi / 2, 1.0).matrix;
    EXPECT_LT(distance(d, h4(theta, 0.4, 1.0)), 1e-9);
    const auto ev = eig_hermitian(derive_h_numeric(fam, theta, 0.4, 1.0).matrix).values;
    const auto ref = eig_hermitian(h4(theta, 0.4, 1.0)).values;
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], ref[i], 1e-9);
  }
}

TEST(NumericDerivation, FluxIndependentFamilyGivesZero) {
  const auto d = derive_h_numeric(rational_yang_family(1.0), 0.7, 0.1, 1.0);
  EXPECT_LT(frobenius_norm(d.matrix), 1e-15);
}

TEST(NumericDerivation, StepGuard) {
  const auto fam = m_family(Epsilon::plus());
  EXPECT_EQ(kind_of([&] { derive_h_numeric(fam, 1.0, 0.0, 1.0, 1e-13); }), ErrorKind::StepTooSmall);
  EXPECT_EQ(kind_of([&] { derive_h_numeric(fam, 0.1, 0.0, 1.0); }), ErrorKind::ThetaOutOfDomain);
}

TEST(H2Compatibility, DiagonalFormWithPositiveOffset) {
  const auto c = h2_compatibility(0.7, 0.4, 1.0, 1.8);
  EXPECT_LT(c.diagonal_plus, 1e-9);
  EXPECT_LT(c.spectral_distance, 1e-9);
  EXPECT_GT(c.antidiagonal_minus, 0.1);
  EXPECT_GT(c.antidiagonal_plus, 0.1);
  EXPECT_GT(c.diagonal_minus, 0.1);
}
