#include "yaxter/hamiltonians.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "yaxter/error.hpp"

namespace yaxter {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::H1: return "h1";
    case ModelKind::H2: return "h2";
    case ModelKind::H3: return "h3";
    case ModelKind::H4: return "h4";
    case ModelKind::NumericDerived: return "numeric";
  }
  return "unknown";
}

ComplexMatrix HamiltonianModel::materialize(double phi) const {
  switch (kind) {
    case ModelKind::H1: return h1(theta, phi, omega);
    case ModelKind::H2: return h2(theta, phi, omega, q);
    case ModelKind::H3: return h3(theta, phi, omega, epsilon);
    case ModelKind::H4: return h4(theta, phi, omega);
    case ModelKind::NumericDerived:
      if (!family) throw Error(ErrorKind::BadParams, "numeric model needs an R-matrix family");
      return derive_h_numeric(*family, theta, phi, omega).matrix;
  }
  throw Error(ErrorKind::BadParams, "unknown model kind");
}

// Outer block {|↑↑⟩, |↓↓⟩} = indices (0, 3); inner block {|↑↓⟩, |↓↑⟩} = (1, 2).

ComplexMatrix h1(double theta, double phi, double omega) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  ComplexMatrix h(4, 4);
  h(0, 0) = c;
  h(3, 3) = -c;
  h(0, 3) = s * std::polar(1.0, phi);
  h(3, 0) = s * std::polar(1.0, -phi);
  return h * Complex(-omega * c);
}

ComplexMatrix h2(double theta, double phi, double omega, double q) {
  if (q == 0.0) throw Error(ErrorKind::DegenerateQ, "q must be nonzero");
  const double c = std::cos(theta);
  const double den = q * q + 1.0 / (q * q) + 2.0 * std::cos(2.0 * theta);
  if (std::abs(den) < 1e-12) throw Error(ErrorKind::NormalizationSingular, "q^2 + q^-2 + 2cos2theta vanishes");
  const double k = 0.5 * (q - 1.0 / q);
  ComplexMatrix h(4, 4);
  h(1, 1) = c;
  h(2, 2) = -c;
  h(1, 2) = k * std::polar(1.0, phi);
  h(2, 1) = k * std::polar(1.0, -phi);
  return h * Complex(-4.0 * omega * c / den);
}

ComplexMatrix h3(double theta, double phi, double omega, Epsilon) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  ComplexMatrix h(4, 4);
  h(0, 0) = c;
  h(3, 3) = -c;
  h(0, 3) = -kI * s * std::polar(1.0, phi);
  h(3, 0) = kI * s * std::polar(1.0, -phi);
  return h * Complex(-omega * c);
}

ComplexMatrix h4(double theta, double phi, double omega) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  ComplexMatrix h(4, 4);
  h(1, 1) = c;
  h(2, 2) = -c;
  h(1, 2) = s * std::polar(1.0, phi);
  h(2, 1) = s * std::polar(1.0, -phi);
  return h * Complex(-omega * c);
}

DerivedHamiltonian derive_h_numeric(const RMatrixFamily& fam, double theta, double phi, double omega, double step) {
  if (!(step >= 1e-12)) throw Error(ErrorKind::StepTooSmall, "finite-difference step below 1e-12");
  const ComplexMatrix dr = (fam.at_angle(theta, phi + step) - fam.at_angle(theta, phi - step)) * Complex(1.0 / (2.0 * step));
  const ComplexMatrix raw = Complex(0.0, omega) * dr * fam.at_angle(theta, phi).adjoint();
  const ComplexMatrix adj = raw.adjoint();
  return {(raw + adj) * Complex(0.5), frobenius_norm(raw - adj) * 0.5};
}

double fd_convergence_order(const RMatrixFamily& fam, const ComplexMatrix& exact, double theta, double phi,
                            double omega, double coarse_step) {
  const double e1 = distance(derive_h_numeric(fam, theta, phi, omega, coarse_step).matrix, exact);
  const double e2 = distance(derive_h_numeric(fam, theta, phi, omega, coarse_step / 2).matrix, exact);
  return std::log2(e1 / e2);
}

double h3_equals_h1_check(double theta, double omega, double shift) {
  double worst = 0.0;
  for (int k = 0; k < 8; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 8.0;
    worst = std::max(worst, distance(h3(theta, phi, omega), h1(theta, phi + shift, omega)));
  }
  return worst;
}

H2Compatibility h2_compatibility(double theta, double phi, double omega, double q) {
  const ComplexMatrix target = h2(theta, phi, omega, q);
  const auto target_eigs = eig_hermitian(target).values;
  H2Compatibility out;
  auto measure = [&](SymmetrizeForm form, double offset) {
    const auto fam = symmetrized_six_vertex_family(q, form, offset);
    const ComplexMatrix h = derive_h_numeric(fam, theta, phi, omega).matrix;
    const auto eigs = eig_hermitian(h).values;
    for (std::size_t i = 0; i < eigs.size(); ++i)
      out.spectral_distance = std::max(out.spectral_distance, std::abs(eigs[i] - target_eigs[i]));
    return distance(h, target);
  };
  const double half_pi = std::numbers::pi / 2;
  out.antidiagonal_minus = measure(SymmetrizeForm::Antidiagonal, -half_pi);
  out.antidiagonal_plus = measure(SymmetrizeForm::Antidiagonal, half_pi);
  out.diagonal_minus = measure(SymmetrizeForm::Diagonal, -half_pi);
  out.diagonal_plus = measure(SymmetrizeForm::Diagonal, half_pi);
  return out;
}

double h2_lambda_plus(double theta, double q) {
  if (q == 0.0) throw Error(ErrorKind::DegenerateQ, "q must be nonzero");
  const double c = std::cos(theta);
  const double k = 0.5 * (q - 1.0 / q);
  return std::sqrt(c * c + k * k);
}

H2EnergyForms h2_energy_forms(double theta, double omega, double q) {
  const double lp = h2_lambda_plus(theta, q);
  if (lp < 1e-12) throw Error(ErrorKind::NormalizationSingular, "lambda_+ vanishes");
  const double c = std::cos(theta);
  H2EnergyForms out{};
  const double lambdas[2] = {lp, -lp};
  for (int i = 0; i < 2; ++i) {
    out.from_matrix[i] = -omega * c / lambdas[i];
    out.simplified[i] = -4.0 * omega * c / lambdas[i];
  }
  return out;
}

}  // namespace yaxter
