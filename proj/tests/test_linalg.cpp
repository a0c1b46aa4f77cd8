#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "yaxter/braidgens.hpp"
#include "yaxter/error.hpp"
#include "yaxter/hamiltonians.hpp"
#include "yaxter/linalg.hpp"

using namespace yaxter;
using yaxter::testkit::random_hermitian;
using yaxter::testkit::random_matrix;
using yaxter::testkit::rng;

namespace {

// (A⊗B)[(i·p + k), (j·q + l)] = A[i,j]·B[k,l]
ComplexMatrix kron_by_index(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

TEST(ComplexMatrix, EntryCountMustMatch) {
  EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
  const ComplexMatrix m(2, 3, std::vector<Complex>(6, 1.0));
  EXPECT_EQ(m.entries().size(), 6u);
}

TEST(ComplexMatrix, AdjointIsInvolution) {
  auto gen = rng(11);
  const ComplexMatrix a = random_matrix(gen, 3, 5);
  EXPECT_EQ(distance(a.adjoint().adjoint(), a), 0.0);
  EXPECT_EQ(a.adjoint().rows(), 5u);
}

TEST(Kron, IdentityAndDiagonal) {
  EXPECT_EQ(distance(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4)), 0.0);
  const ComplexMatrix d = kron(spin::pauli_z(), ComplexMatrix::identity(2));
  const std::vector<Complex> diag{1.0, 1.0, -1.0, -1.0};
  EXPECT_EQ(distance(d, ComplexMatrix::diagonal(diag)), 0.0);
}

TEST(Kron, MatchesIndexFormulaAndIsAssociative) {
  auto gen = rng(12);
  const auto a = random_matrix(gen, 2, 2);
  const auto b = random_matrix(gen, 2, 2);
  const auto c = random_matrix(gen, 2, 2);
  EXPECT_LT(distance(kron(a, b), kron_by_index(a, b)), 1e-15);
  EXPECT_LT(distance(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-14);
  EXPECT_LT(distance(kron(permutation_p(), ComplexMatrix::identity(2)), embed_two_site(permutation_p(), 1, 3)), 1e-15);
}

TEST(Embed, TrivialCases) {
  EXPECT_EQ(distance(embed_two_site(permutation_p(), 1, 2), permutation_p()), 0.0);
  EXPECT_EQ(distance(embed_two_site(ComplexMatrix::identity(4), 2, 3), ComplexMatrix::identity(8)), 0.0);
}

TEST(Embed, BondRangeIsChecked) {
  const auto p = permutation_p();
  try {
    embed_two_site(p, 3, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BondOutOfRange);
  }
  EXPECT_THROW(embed_two_site(p, 0, 3), Error);
  EXPECT_THROW(embed_one_site(spin::raising(), 4, 3), Error);
}

TEST(Embed, PermutationBraids) {
  const auto p = permutation_p();
  const auto b1 = embed_two_site(p, 1, 3);
  const auto b2 = embed_two_site(p, 2, 3);
  EXPECT_LT(distance(b1 * b2 * b1, b2 * b1 * b2), 1e-15);
}

TEST(Eig, DiagonalInput) {
  const std::vector<Complex> diag{3.0, 1.0, 2.0};
  const auto es = eig_hermitian(ComplexMatrix::diagonal(diag));
  ASSERT_EQ(es.values.size(), 3u);
  EXPECT_DOUBLE_EQ(es.values[0], 1.0);
  EXPECT_DOUBLE_EQ(es.values[1], 2.0);
  EXPECT_DOUBLE_EQ(es.values[2], 3.0);
}

TEST(Eig, H1AtPiOverThree) {
  const auto es = eig_hermitian(h1(std::numbers::pi / 3, 0.0, 1.0));
  const double expected[4] = {-0.5, 0.0, 0.0, 0.5};
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(es.values[k], expected[k], 1e-12);
}

TEST(Eig, ReconstructsRandomHermitian) {
  auto gen = rng(13);
  const auto h = random_hermitian(gen, 8);
  const auto es = eig_hermitian(h);
  std::vector<Complex> lam(es.values.begin(), es.values.end());
  const auto rebuilt = es.vectors * ComplexMatrix::diagonal(lam) * es.vectors.adjoint();
  EXPECT_LT(distance(rebuilt, h), 1e-10);
  EXPECT_LT(unitarity_defect(es.vectors), 1e-12);
  for (std::size_t k = 0; k < 8; ++k) {
    const auto v = es.vector(k);
    auto hv = h * v;
    for (std::size_t i = 0; i < v.size(); ++i) hv[i] -= es.values[k] * v[i];
    EXPECT_LE(norm(hv), 1e-12 * frobenius_norm(h));
  }
}

TEST(Eig, DegenerateClusterOrderedByDominantComponent) {
  // zero eigenspace of h1 is spanned by |↑↓⟩ and |↓↑⟩
  const auto es = eig_hermitian(h1(0.9, 0.3, 1.0));
  EXPECT_NEAR(std::abs(es.vector(1)[1]), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(es.vector(2)[2]), 1.0, 1e-12);
}

TEST(Eig, DeterministicForFixedInput) {
  auto gen = rng(14);
  const auto h = random_hermitian(gen, 6);
  const auto a = eig_hermitian(h);
  const auto b = eig_hermitian(h);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(distance(a.vectors, b.vectors), 0.0);
}

TEST(Eig, RejectsNonHermitian) {
  const ComplexMatrix a{{1.0, 2.0}, {0.0, 1.0}};
  try {
    eig_hermitian(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHermitian);
  }
}

TEST(Expm, PauliRotation) {
  const double t = 0.37;
  const auto u = expm(Complex(0.0, -t) * spin::pauli_x());
  const ComplexMatrix expected{{std::cos(t), Complex(0.0, -std::sin(t))}, {Complex(0.0, -std::sin(t)), std::cos(t)}};
  EXPECT_LT(distance(u, expected), 1e-14);
}

TEST(Expm, LargeNormUsesSquaring) {
  const auto u = expm(Complex(0.0, 40.0) * spin::pauli_z());
  EXPECT_LT(unitarity_defect(u), 1e-12);
  EXPECT_NEAR(u(0, 0).real(), std::cos(40.0), 1e-12);
}

TEST(Spin, LadderAlgebra) {
  EXPECT_LT(distance(commutator(spin::raising(), spin::lowering()), spin::sz() * Complex(2.0)), 1e-15);
  EXPECT_LT(distance(commutator(spin::sz(), spin::raising()), spin::raising()), 1e-15);
}
