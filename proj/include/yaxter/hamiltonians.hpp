#pragma once

#include <optional>
#include <string_view>

#include "yaxter/baxterize.hpp"
#include "yaxter/braidgens.hpp"
#include "yaxter/linalg.hpp"

namespace yaxter {

// Units: ħ = 1, energies in units of ω, flux φ = ωt.

enum class ModelKind { H1, H2, H3, H4, NumericDerived };

std::string_view to_string(ModelKind kind);

struct HamiltonianModel {
  ModelKind kind = ModelKind::H1;
  double theta = 0.0;
  double omega = 1.0;
  double q = 1.0;                   // H2
  Epsilon epsilon = Epsilon::plus();  // H3
  std::optional<RMatrixFamily> family;  // NumericDerived

  ComplexMatrix materialize(double phi) const;
};

ComplexMatrix h1(double theta, double phi, double omega);
ComplexMatrix h2(double theta, double phi, double omega, double q);
/// The closed form carries no ε; the argument only mirrors the family it
/// came from.
ComplexMatrix h3(double theta, double phi, double omega, Epsilon epsilon = Epsilon::plus());
ComplexMatrix h4(double theta, double phi, double omega);

struct DerivedHamiltonian {
  ComplexMatrix matrix;          // (H + H†)/2
  double anti_hermitian = 0.0;   // ‖(H − H†)/2‖
};

inline constexpr double kDefaultFdStep = 1e-5;

/// H = iω·[R(φ+h) − R(φ−h)]/(2h)·R(φ)† at fixed θ, via the family's angle map.
DerivedHamiltonian derive_h_numeric(const RMatrixFamily& fam, double theta, double phi, double omega,
                                    double step = kDefaultFdStep);

/// log₂ of the error ratio between steps h and h/2 against an exact matrix.
double fd_convergence_order(const RMatrixFamily& fam, const ComplexMatrix& exact, double theta, double phi,
                            double omega, double coarse_step = 1e-4);

/// max over a φ′ grid of ‖h3(θ, φ′) − h1(θ, φ′ + shift)‖.
double h3_equals_h1_check(double theta, double omega, double shift = 1.5707963267948966);

/// Finite-difference H of the symmetrized six-vertex family compared with
/// h2, for both V forms and both signs of the π/2 flux offset.
struct H2Compatibility {
  double antidiagonal_minus = 0.0;
  double antidiagonal_plus = 0.0;
  double diagonal_minus = 0.0;
  double diagonal_plus = 0.0;
  double spectral_distance = 0.0;  // worst eigenvalue mismatch over the four
};

H2Compatibility h2_compatibility(double theta, double phi, double omega, double q);

/// λ₊ = √(cos²θ + (q − q⁻¹)²/4).
double h2_lambda_plus(double theta, double q);

/// Nonzero eigenvalues of h2, sign index 0 ↔ λ₊ and 1 ↔ λ₋, in two forms:
/// the one consistent with the matrix (−ω cosθ/λ±) and the 4× larger
/// simplified form (−4ω cosθ/λ±).
struct H2EnergyForms {
  double from_matrix[2];
  double simplified[2];
};

H2EnergyForms h2_energy_forms(double theta, double omega, double q);

}  // namespace yaxter
