#include "yaxter/su2_criticality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "yaxter/error.hpp"

namespace yaxter {

FermionOps fermionic_ops(std::size_t site, std::size_t sites) {
  FermionOps ops{embed_one_site(spin::lowering(), site, sites), embed_one_site(spin::raising(), site, sites), {}};
  ops.number = ops.f_dag * ops.f;
  return ops;
}

SU2Triple su2_composite(std::size_t sites) {
  if (sites < 2) throw Error(ErrorKind::SiteOutOfRange, "composite generators need at least 2 sites");
  ComplexMatrix sp = ComplexMatrix::identity(std::size_t{1} << sites);
  for (std::size_t i = 1; i <= sites; ++i) sp = sp * embed_one_site(spin::raising(), i, sites);
  SU2Triple t;
  t.s_minus = sp.adjoint();
  t.s3 = commutator(sp, t.s_minus) * Complex(0.5);
  t.s_plus = std::move(sp);
  t.sites = sites;
  return t;
}

double su2_algebra_residual(const SU2Triple& t) {
  double r = frobenius_norm(commutator(t.s3, t.s_plus) - t.s_plus);
  r = std::max(r, frobenius_norm(commutator(t.s3, t.s_minus) + t.s_minus));
  r = std::max(r, distance(commutator(t.s_plus, t.s_minus), t.s3 * Complex(2.0)));
  return std::max(r, distance(t.s_minus, t.s_plus.adjoint()));
}

ComplexMatrix s3_number_form(std::size_t sites) {
  if (sites < 1) throw Error(ErrorKind::SiteOutOfRange, "need at least one site");
  const std::size_t dim = std::size_t{1} << sites;
  ComplexMatrix out(dim, dim);
  for (std::size_t i = 1; i <= sites; ++i) {
    out += fermionic_ops(i, sites).number - ComplexMatrix::identity(dim) * Complex(0.5);
  }
  return out * Complex(1.0 / static_cast<double>(sites));
}

ComplexMatrix casimir(const SU2Triple& t) {
  return (t.s_plus * t.s_minus + t.s_minus * t.s_plus) * Complex(0.5) + t.s3 * t.s3;
}

double GapModel::energy() const { return std::hypot(epsilon, std::abs(delta)); }

ComplexMatrix GapModel::s_plus() const {
  ComplexMatrix m(4, 4);
  m(block.first, block.second) = 1.0;
  return m;
}

ComplexMatrix GapModel::s_minus() const { return s_plus().adjoint(); }

ComplexMatrix GapModel::s3() const {
  ComplexMatrix m(4, 4);
  m(block.first, block.first) = 0.5;
  m(block.second, block.second) = -0.5;
  return m;
}

ComplexMatrix GapModel::h0() const {
  return s3() * Complex(2.0 * epsilon) + s_plus() * delta + s_minus() * std::conj(delta);
}

ComplexVector GapModel::vacuum() const {
  ComplexVector v(4);
  v[block.second] = 1.0;
  return v;
}

GapModel gap_model_h1(double theta, double phi, double omega) {
  GapModel gm;
  gm.epsilon = std::cos(theta);
  gm.delta = std::sin(theta) * std::polar(1.0, phi);
  gm.block = {0, 3};
  gm.prefactor = -omega * std::cos(theta);
  return gm;
}

GapModel gap_model_h2(double theta, double phi, double q, double omega) {
  if (q == 0.0) throw Error(ErrorKind::DegenerateQ, "q must be nonzero");
  const double c = std::cos(theta);
  const double den = q * q + 1.0 / (q * q) + 2.0 * std::cos(2.0 * theta);
  if (std::abs(den) < 1e-12) throw Error(ErrorKind::NormalizationSingular, "q^2 + q^-2 + 2cos2theta vanishes");
  GapModel gm;
  gm.epsilon = c;
  gm.delta = 0.5 * (q - 1.0 / q) * std::polar(1.0, phi);
  gm.block = {1, 2};
  gm.prefactor = -4.0 * omega * c / den;
  return gm;
}

Displacement displacement_diagonalize(const GapModel& gm) {
  const double mag = std::abs(gm.delta);
  if (mag < 1e-15 && std::abs(gm.epsilon) < 1e-15) {
    throw Error(ErrorKind::UndefinedRotation, "epsilon and delta both vanish");
  }
  const double r = -0.5 * std::atan2(mag, gm.epsilon);
  const double alpha = mag > 0.0 ? std::arg(gm.delta) : 0.0;
  Displacement d;
  d.xi = std::polar(1.0, alpha) * r;
  d.w = expm(gm.s_plus() * d.xi - gm.s_minus() * std::conj(d.xi));
  const ComplexMatrix rotated = d.w.adjoint() * gm.h0() * d.w;
  d.residual = distance(rotated, gm.s3() * Complex(2.0 * gm.energy()));
  d.coherent_state = d.w * gm.vacuum();
  const Complex lo = d.coherent_state[gm.block.second];
  d.tau = std::abs(lo) > 0.0 ? d.coherent_state[gm.block.first] / lo
                             : Complex(std::numeric_limits<double>::infinity());
  return d;
}

ComplexVector coherent_state_closed_form(double theta, double phi) {
  const Complex tau = -std::polar(1.0, phi) * std::tan(theta / 2.0);
  const double scale = 1.0 / std::sqrt(1.0 + std::norm(tau));
  ComplexVector v(4);
  v[3] = scale;
  v[0] = tau * scale;
  return v;
}

namespace {

ScanRecord scan_point(const HamiltonianModel& model, const GapModel& gm, std::optional<double> q,
                      std::size_t loop_points) {
  ScanRecord rec;
  rec.theta = model.theta;
  rec.q = q;
  rec.gap = std::abs(gm.delta);
  rec.critical = rec.gap < 1e-12;
  rec.energy_split = 2.0 * gm.energy() * std::abs(gm.prefactor);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  try {
    rec.concurrence = concurrence(adiabatic_band(model, 0.0, BandLabel::Plus).state);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateBand) throw;
    rec.concurrence = nan;
  }
  try {
    rec.berry_plus = berry_wilson_loop(model, BandLabel::Plus, loop_points).unwrapped;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GapClosed) throw;
    rec.berry_plus = nan;
  }
  return rec;
}

}  // namespace

std::vector<ScanRecord> criticality_scan(const std::vector<double>& theta_grid, const std::vector<double>& q_grid,
                                         double omega, std::size_t loop_points) {
  if (theta_grid.empty()) throw Error(ErrorKind::BadParams, "theta grid is empty");
  std::vector<ScanRecord> out;
  for (double theta : theta_grid) {
    if (q_grid.empty()) {
      HamiltonianModel model;
      model.theta = theta;
      model.omega = omega;
      out.push_back(scan_point(model, gap_model_h1(theta, 0.0, omega), std::nullopt, loop_points));
      continue;
    }
    for (double q : q_grid) {
      HamiltonianModel model;
      model.kind = ModelKind::H2;
      model.theta = theta;
      model.omega = omega;
      model.q = q;
      out.push_back(scan_point(model, gap_model_h2(theta, 0.0, q, omega), q, loop_points));
    }
  }
  return out;
}

}  // namespace yaxter
