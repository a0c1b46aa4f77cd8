#include "yaxter/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "yaxter/error.hpp"

namespace yaxter {

namespace {

// y + a·k
ComplexVector axpy(const ComplexVector& y, Complex a, const ComplexVector& k) {
  ComplexVector out(y);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * k[i];
  return out;
}

ComplexVector rhs(const ComplexMatrix& h, const ComplexVector& psi) {
  ComplexVector out = h * psi;
  for (auto& x : out) x *= -kI;
  return out;
}

}  // namespace

Trajectory evolve_with(const TimeDependentH& h, const ComplexVector& initial, double period, std::size_t steps) {
  if (steps < kMinSteps) throw Error(ErrorKind::StepsTooFew, "need at least 100 steps");
  const double norm0 = norm(initial);
  const double dt = period / static_cast<double>(steps);
  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(initial);
  ComplexVector psi = initial;
  for (std::size_t n = 0; n < steps; ++n) {
    const double t = dt * static_cast<double>(n);
    const ComplexMatrix h_mid = h(t + dt / 2);
    const ComplexVector k1 = rhs(h(t), psi);
    const ComplexVector k2 = rhs(h_mid, axpy(psi, dt / 2, k1));
    const ComplexVector k3 = rhs(h_mid, axpy(psi, dt / 2, k2));
    const ComplexVector k4 = rhs(h(t + dt), axpy(psi, dt, k3));
    for (std::size_t i = 0; i < psi.size(); ++i) psi[i] += dt / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    const double drift = std::abs(norm(psi) - norm0);
    traj.max_norm_drift = std::max(traj.max_norm_drift, drift);
    if (drift > kNormDriftLimit) {
      throw Error(ErrorKind::NormDrift, "norm drifted by " + std::to_string(drift));
    }
    traj.times.push_back(t + dt);
    traj.states.push_back(psi);
  }
  return traj;
}

Trajectory evolve(const HamiltonianModel& model, double scale_g, const ComplexVector& initial, std::size_t steps) {
  if (!(scale_g > 0.0)) throw Error(ErrorKind::BadParams, "scale_g must be positive");
  if (!(model.omega > 0.0)) throw Error(ErrorKind::BadParams, "omega must be positive");
  const double omega = model.omega;
  const double ratio = scale_g / omega;
  const TimeDependentH h = [&model, omega, ratio](double t) { return model.materialize(omega * t) * Complex(ratio); };
  Trajectory traj = evolve_with(h, initial, 2.0 * std::numbers::pi / omega, steps);
  traj.model = model;
  traj.scale_g = scale_g;
  return traj;
}

double return_fidelity(const Trajectory& traj) {
  return std::abs(inner(traj.states.front(), traj.states.back()));
}

double geometric_phase(const Trajectory& traj, BandLabel band) {
  const double fidelity = return_fidelity(traj);
  if (fidelity < 0.9) throw Error(ErrorKind::NotCyclic, "return fidelity " + std::to_string(fidelity) + " below 0.9");
  const double energy = adiabatic_band(traj.model, 0.0, band).energy * traj.scale_g / traj.model.omega;
  const double period = traj.times.back() - traj.times.front();
  return wrap_phase(std::arg(inner(traj.states.front(), traj.states.back())) + energy * period);
}

double propagator_deviation(const RMatrixFamily& fam, const HamiltonianModel& model, const ComplexVector& phi0,
                            std::size_t steps) {
  const ComplexVector start = fam.at_angle(model.theta, 0.0) * phi0;
  const Trajectory traj = evolve(model, model.omega, start, steps);
  double worst = 0.0;
  for (std::size_t n = 0; n < traj.times.size(); ++n) {
    const ComplexVector exact = fam.at_angle(model.theta, model.omega * traj.times[n]) * phi0;
    worst = std::max(worst, distance(traj.states[n], exact));
  }
  return worst;
}

std::vector<AdiabaticRow> adiabatic_report(const HamiltonianModel& model, const std::vector<double>& g_list,
                                           std::size_t steps, BandLabel band) {
  const double analytic = berry_wilson_loop(model, band).unwrapped;
  const ComplexVector start = adiabatic_band(model, 0.0, band).state;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<AdiabaticRow> rows;
  for (double g : g_list) {
    const Trajectory traj = evolve(model, g, start, steps);
    AdiabaticRow row;
    row.g = g;
    row.fidelity = return_fidelity(traj);
    row.analytic_phase = analytic;
    try {
      row.geometric_phase = geometric_phase(traj, band);
      row.deviation = std::abs(wrap_phase(row.geometric_phase - analytic));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotCyclic) throw;
      row.geometric_phase = nan;
      row.deviation = nan;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace yaxter
