#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace yaxter {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};

/// Dense complex matrix stored row-major. Holds every operator of the
/// library: braid generators, R-matrices, Hamiltonians and spin operators.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-by-row literal, e.g. `{{1, 0}, {0, 1}}`.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
/// Frobenius distance; the equality measure used throughout.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);
/// ‖A A† − I‖.
double unitarity_defect(const ComplexMatrix& a);
/// ‖A − A†‖.
double hermiticity_defect(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// I^{⊗(bond−1)} ⊗ g ⊗ I^{⊗(sites−bond−1)} for a 4×4 two-site operator;
/// bonds are 1-based.
ComplexMatrix embed_two_site(const ComplexMatrix& g, std::size_t bond, std::size_t sites);
/// Single-site 2×2 operator placed at 1-based `site` of a chain.
ComplexMatrix embed_one_site(const ComplexMatrix& op, std::size_t site, std::size_t sites);

/// exp(A) by scaling and squaring with a degree-12 Taylor polynomial.
ComplexMatrix expm(const ComplexMatrix& a);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // ⟨a|b⟩
double norm(std::span<const Complex> v);
double distance(std::span<const Complex> a, std::span<const Complex> b);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]

  ComplexVector vector(std::size_t k) const;
};

/// Full spectrum of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Eigenvalues come back ascending. Inside a degenerate cluster (neighbouring
/// values closer than 1e-9) the eigenvectors are ordered by the index of their
/// largest-modulus component, lower index first on ties.
///
/// Throws NotHermitian when ‖h − h†‖ > 1e-10‖h‖ and NoConvergence when the
/// sweep budget is exhausted.
EigenSystem eig_hermitian(const ComplexMatrix& h);

namespace spin {
// Single spin-1/2 operators in the (|↑⟩, |↓⟩) basis.
ComplexMatrix identity();
ComplexMatrix raising();   // S⁺
ComplexMatrix lowering();  // S⁻
ComplexMatrix sz();        // S³ = σ³/2
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
}  // namespace spin

}  // namespace yaxter
