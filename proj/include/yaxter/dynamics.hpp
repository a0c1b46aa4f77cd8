#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "yaxter/baxterize.hpp"
#include "yaxter/hamiltonians.hpp"
#include "yaxter/spectra_berry.hpp"

namespace yaxter {

struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexVector> states;
  HamiltonianModel model;
  double scale_g = 1.0;
  double max_norm_drift = 0.0;
};

inline constexpr std::size_t kMinSteps = 100;
inline constexpr double kNormDriftLimit = 1e-6;

using TimeDependentH = std::function<ComplexMatrix(double t)>;

/// Fixed-step RK4 for i∂ₜψ = H(t)ψ on [0, period], keeping every step.
/// Throws StepsTooFew below 100 steps and NormDrift past 1e-6.
Trajectory evolve_with(const TimeDependentH& h, const ComplexVector& initial, double period, std::size_t steps);

/// Evolves under (g/ω)·H_model(φ = ωt) for one drive period 2π/ω.
Trajectory evolve(const HamiltonianModel& model, double scale_g, const ComplexVector& initial, std::size_t steps);

/// arg⟨Φ(0)|Φ(T)⟩ + E·T with E the band energy of the evolved Hamiltonian.
/// Throws NotCyclic when the return fidelity is below 0.9.
double geometric_phase(const Trajectory& traj, BandLabel band);

double return_fidelity(const Trajectory& traj);

/// max_t ‖Φ_RK4(t) − R(θ, ωt)Φ₀‖ where the integration starts from R(θ, 0)Φ₀
/// at g = ω. `model` supplies θ, ω and the Hamiltonian that is integrated.
double propagator_deviation(const RMatrixFamily& fam, const HamiltonianModel& model, const ComplexVector& phi0,
                            std::size_t steps);

struct AdiabaticRow {
  double g = 0.0;
  double fidelity = 0.0;
  double geometric_phase = 0.0;  // NaN when the state did not return
  double analytic_phase = 0.0;
  double deviation = 0.0;        // |wrap(geometric − analytic)|, NaN likewise
};

/// One row per g, started in the band eigenstate at φ = 0. The reference
/// phase is the band's Wilson loop.
std::vector<AdiabaticRow> adiabatic_report(const HamiltonianModel& model, const std::vector<double>& g_list,
                                           std::size_t steps, BandLabel band = BandLabel::Plus);

}  // namespace yaxter
