#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "yaxter/hamiltonians.hpp"
#include "yaxter/linalg.hpp"
#include "yaxter/spectra_berry.hpp"

namespace yaxter {

struct FermionOps {
  ComplexMatrix f;       // S⁻ at the site
  ComplexMatrix f_dag;   // S⁺ at the site
  ComplexMatrix number;  // f†f
};

/// Single-site operators as plain tensor factors; different sites commute.
FermionOps fermionic_ops(std::size_t site, std::size_t sites);

struct SU2Triple {
  ComplexMatrix s_plus;
  ComplexMatrix s_minus;
  ComplexMatrix s3;
  std::size_t sites = 0;
};

/// S⁺ = Π f_i† = |↑…↑⟩⟨↓…↓|, S⁻ = (S⁺)†, S³ = [S⁺, S⁻]/2.
SU2Triple su2_composite(std::size_t sites);

/// max of ‖[S³, S⁺] − S⁺‖, ‖[S³, S⁻] + S⁻‖, ‖[S⁺, S⁻] − 2S³‖ and ‖S⁻ − (S⁺)†‖.
double su2_algebra_residual(const SU2Triple& t);

/// (1/n) Σ_i (n̂_i − 1/2); for two sites this is (n̂₁ + n̂₂ − 1)/2.
ComplexMatrix s3_number_form(std::size_t sites);

/// ½(S⁺S⁻ + S⁻S⁺) + (S³)².
ComplexMatrix casimir(const SU2Triple& t);

/// H₀ = 2εS³ + ΔS⁺ + Δ*S⁻ on a two-state block of the two-site space. The
/// block's raising operator is |hi⟩⟨lo|.
struct GapModel {
  double epsilon = 0.0;
  Complex delta{0.0, 0.0};
  std::pair<std::size_t, std::size_t> block{0, 3};  // (hi, lo)
  double prefactor = 1.0;  // model block = prefactor · H₀

  double energy() const;  // 𝓔 = √(ε² + |Δ|²)
  ComplexMatrix s_plus() const;
  ComplexMatrix s_minus() const;
  ComplexMatrix s3() const;
  ComplexMatrix h0() const;
  ComplexVector vacuum() const;  // |lo⟩
};

GapModel gap_model_h1(double theta, double phi, double omega = 1.0);
/// The block ladder operators are J⁺ = S₁⁺S₂⁻, J³ = (n̂₁ − n̂₂)/2.
GapModel gap_model_h2(double theta, double phi, double q, double omega = 1.0);

struct Displacement {
  ComplexMatrix w;
  Complex xi;
  double residual = 0.0;         // ‖W†H₀W − 2𝓔S³‖
  ComplexVector coherent_state;  // W|vac⟩
  Complex tau;                   // amplitude ratio of |hi⟩ to |lo⟩
};

/// W = exp(ξS⁺ − ξ*S⁻) with ξ = r·e^{i arg Δ} and r = −atan2(|Δ|, ε)/2.
Displacement displacement_diagonalize(const GapModel& gm);

/// (|0,0⟩ + τ|1,1⟩)/√(1 + |τ|²) with τ = −e^{iφ}tan(θ/2).
ComplexVector coherent_state_closed_form(double theta, double phi);

struct ScanRecord {
  double theta = 0.0;
  std::optional<double> q;
  double gap = 0.0;
  double concurrence = 0.0;  // NaN when the plus band is degenerate
  double berry_plus = 0.0;   // Wilson loop; NaN when the gap closes
  double energy_split = 0.0;
  bool critical = false;     // gap below 1e-12
};

/// H1 rows for an empty q grid, otherwise H2 rows (θ outer, q inner).
std::vector<ScanRecord> criticality_scan(const std::vector<double>& theta_grid, const std::vector<double>& q_grid,
                                         double omega = 1.0, std::size_t loop_points = kDefaultLoopPoints);

}  // namespace yaxter
