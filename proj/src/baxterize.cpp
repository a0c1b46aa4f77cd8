#include "yaxter/baxterize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "yaxter/error.hpp"

namespace yaxter {

namespace {

constexpr double kSingular = 1e-12;

Complex compose(CompositionRule rule, Complex a, Complex b) {
  return rule == CompositionRule::Multiplicative ? a * b : a + b;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
  return out;
}

}  // namespace

std::string_view to_string(CompositionRule rule) {
  return rule == CompositionRule::Multiplicative ? "multiplicative" : "additive";
}

ComplexMatrix RMatrixFamily::at(Complex spectral, double flux) const { return evaluator(spectral, flux); }

ComplexMatrix RMatrixFamily::at_angle(double theta, double flux) const {
  if (!angle_evaluator) {
    throw Error(ErrorKind::UnsupportedParametrization, name + " has no angle parametrization");
  }
  return angle_evaluator(theta, flux);
}

ThetaX theta_to_x(double theta) {
  const double m = -std::cos(2.0 * theta);
  if (m <= 0.0) throw Error(ErrorKind::ThetaOutOfDomain, "theta_to_x needs -cos(2 theta) > 0");
  const double root = std::sqrt(m);
  return {(std::cos(theta) + std::sin(theta)) / root, (std::sin(theta) - std::cos(theta)) / root};
}

ComplexMatrix trig_baxterize_m(Complex x, double phi, Epsilon epsilon) {
  if (x == Complex(0.0)) throw Error(ErrorKind::ZeroSpectral, "spectral parameter x = 0");
  const Complex xi = 1.0 / x;
  const Complex s = 2.0 * (x * x + xi * xi);
  if (std::abs(s) < kSingular) throw Error(ErrorKind::NormalizationSingular, "x^2 + x^-2 vanishes");
  const Complex norm = 1.0 / std::sqrt(s);
  return norm * ((x + xi) * ComplexMatrix::identity(4) + (x - xi) * m_matrix(phi, epsilon));
}

ComplexMatrix trig_baxterize_sixvertex(Complex x, double q, double eta_phase) {
  if (x == Complex(0.0)) throw Error(ErrorKind::ZeroSpectral, "spectral parameter x = 0");
  const ComplexMatrix u = tl_u_sixvertex(q, eta_phase);
  const Complex xi = 1.0 / x;
  const Complex radicand = q * q + 1.0 / (q * q) - (x * x + xi * xi);
  const bool real_radicand = std::abs(radicand.imag()) <= kSingular * std::max(1.0, std::abs(radicand));
  if (std::abs(radicand) < kSingular || (real_radicand && radicand.real() <= 0.0)) {
    throw Error(ErrorKind::NormalizationSingular, "q^2 + q^-2 - (x^2 + x^-2) is not positive");
  }
  const Complex norm = real_radicand ? Complex(1.0 / std::sqrt(radicand.real())) : 1.0 / std::sqrt(radicand);
  return norm * ((q * x - xi / q) * ComplexMatrix::identity(4) - (x - xi) * u);
}

ComplexMatrix symmetrize(const ComplexMatrix& r, Complex x, SymmetrizeForm form) {
  if (r.rows() != 4 || r.cols() != 4) throw Error(ErrorKind::DimensionMismatch, "symmetrize expects a 4x4 matrix");
  if (x == Complex(0.0)) throw Error(ErrorKind::ZeroSpectral, "spectral parameter x = 0");
  const Complex a = std::pow(x, 0.25);
  ComplexMatrix vi(2, 2);
  ComplexMatrix vi_inv(2, 2);
  if (form == SymmetrizeForm::Antidiagonal) {
    // squares to the identity, so V_i⁻¹ = V_i
    vi = {{0.0, 1.0 / a}, {a, 0.0}};
    vi_inv = vi;
  } else {
    vi = {{a, 0.0}, {0.0, 1.0 / a}};
    vi_inv = {{1.0 / a, 0.0}, {0.0, a}};
  }
  const ComplexMatrix v = kron(vi, vi_inv);
  return v * r * v.adjoint();
}

ComplexMatrix rational_r_yang(double u, double c) {
  const Complex den(c, u);
  if (std::abs(den) < kSingular) throw Error(ErrorKind::SingularDenominator, "c + iu vanishes");
  return (Complex(-c) * ComplexMatrix::identity(4) + Complex(0.0, u) * permutation_p()) * (1.0 / den);
}

ComplexMatrix rational_baxterize_tl(double theta, double phi, Epsilon epsilon, Family u_family) {
  if (u_family != Family::TLDiag && u_family != Family::TLMid) {
    throw Error(ErrorKind::BadParams, "rational TL Baxterization needs tldiag or tlmid");
  }
  const ComplexMatrix u = u_family == Family::TLDiag ? tl_u_diag(phi, epsilon) : tl_u_mid(phi, epsilon);
  const double c = std::cos(theta);
  if (std::abs(c) < 1e-15) return ComplexMatrix::identity(4);
  // 1/(i tanθ − ε) written without tanθ
  const Complex g = c / Complex(-epsilon.as_double() * c, std::sin(theta));
  return ComplexMatrix::identity(4) + g * u;
}

RMatrixFamily m_family(Epsilon epsilon) {
  RMatrixFamily fam;
  fam.name = "mtype";
  fam.source = BraidGenerator{.family = Family::MType, .epsilon = epsilon};
  fam.scheme = Scheme::Trigonometric;
  fam.rule = CompositionRule::Multiplicative;
  fam.evaluator = [epsilon](Complex x, double flux) { return trig_baxterize_m(x, flux, epsilon); };
  fam.angle_evaluator = [epsilon](double theta, double flux) {
    return trig_baxterize_m(theta_to_x(theta).x, flux, epsilon);
  };
  return fam;
}

RMatrixFamily six_vertex_family(double q) {
  RMatrixFamily fam;
  fam.name = "sixvertex";
  fam.source = BraidGenerator{.family = Family::TLSixVertex, .q = q};
  fam.scheme = Scheme::Trigonometric;
  fam.rule = CompositionRule::Multiplicative;
  fam.unit_circle = true;
  fam.evaluator = [q](Complex x, double flux) { return trig_baxterize_sixvertex(x, q, flux); };
  fam.angle_evaluator = [q](double theta, double flux) {
    return trig_baxterize_sixvertex(std::polar(1.0, std::numbers::pi / 2 - theta), q, flux);
  };
  return fam;
}

RMatrixFamily symmetrized_six_vertex_family(double q, SymmetrizeForm form, double flux_offset) {
  RMatrixFamily fam = six_vertex_family(q);
  fam.name = form == SymmetrizeForm::Antidiagonal ? "sixvertex-symmetrized" : "sixvertex-symmetrized-diagonal";
  fam.evaluator = [q, form](Complex x, double flux) {
    return symmetrize(trig_baxterize_sixvertex(x, q, flux), x, form);
  };
  fam.angle_evaluator = [q, form, flux_offset](double theta, double flux) {
    const Complex x = std::polar(1.0, std::numbers::pi / 2 - theta);
    return symmetrize(trig_baxterize_sixvertex(x, q, flux + flux_offset), x, form);
  };
  return fam;
}

RMatrixFamily rational_yang_family(double c) {
  RMatrixFamily fam;
  fam.name = "rational-yang";
  fam.source = BraidGenerator{.family = Family::Permutation};
  fam.scheme = Scheme::Rational;
  fam.rule = CompositionRule::Additive;
  fam.evaluator = [c](Complex u, double) { return rational_r_yang(u.real(), c); };
  // no flux dependence, so the induced Hamiltonian vanishes
  fam.angle_evaluator = [c](double theta, double) { return rational_r_yang(std::tan(theta), c); };
  return fam;
}

RMatrixFamily rational_tl_family(double a, Epsilon epsilon, Family u_family) {
  if (u_family != Family::TLDiag && u_family != Family::TLMid) {
    throw Error(ErrorKind::BadParams, "rational TL family needs tldiag or tlmid");
  }
  RMatrixFamily fam;
  fam.name = u_family == Family::TLDiag ? "rational-tl" : "rational-tl-mid";
  fam.source = BraidGenerator{.family = u_family, .epsilon = epsilon};
  fam.scheme = Scheme::Rational;
  fam.rule = CompositionRule::Additive;
  fam.evaluator = [a, epsilon, u_family](Complex u, double flux) {
    const Complex den = Complex(0.0, a) - epsilon.as_double() * u;
    if (std::abs(den) < kSingular) throw Error(ErrorKind::SingularDenominator, "i a - eps u vanishes");
    const ComplexMatrix gen = u_family == Family::TLDiag ? tl_u_diag(flux, epsilon) : tl_u_mid(flux, epsilon);
    return ComplexMatrix::identity(4) + (u / den) * gen;
  };
  fam.angle_evaluator = [epsilon, u_family](double theta, double flux) {
    return rational_baxterize_tl(theta, flux, epsilon, u_family);
  };
  return fam;
}

RMatrixFamily identity_family() {
  RMatrixFamily fam;
  fam.name = "identity";
  fam.rule = CompositionRule::Multiplicative;
  fam.evaluator = [](Complex, double) { return ComplexMatrix::identity(4); };
  fam.angle_evaluator = [](double, double) { return ComplexMatrix::identity(4); };
  return fam;
}

double ybe_residual(const RMatrixFamily& fam, Complex a, Complex b, double flux,
                    std::optional<CompositionRule> rule) {
  const Complex ab = compose(rule.value_or(fam.rule), a, b);
  const ComplexMatrix ra = fam.at(a, flux);
  const ComplexMatrix rb = fam.at(b, flux);
  const ComplexMatrix rab = fam.at(ab, flux);
  const ComplexMatrix lhs = embed_two_site(ra, 1, 3) * embed_two_site(rab, 2, 3) * embed_two_site(rb, 1, 3);
  const ComplexMatrix rhs = embed_two_site(rb, 2, 3) * embed_two_site(rab, 1, 3) * embed_two_site(ra, 2, 3);
  return distance(lhs, rhs);
}

double unitarity_residual(const RMatrixFamily& fam, const std::vector<GridPoint>& grid) {
  double worst = 0.0;
  for (const auto& p : grid) worst = std::max(worst, unitarity_defect(fam.at(p.spectral, p.flux)));
  return worst;
}

std::vector<Complex> default_spectral_grid(const RMatrixFamily& fam) {
  std::vector<Complex> out;
  if (fam.rule == CompositionRule::Additive) {
    for (double s : linspace(-2.0, 2.0, 5)) out.emplace_back(s);
  } else {
    for (double s : linspace(-1.0, 1.0, 5)) out.push_back(fam.unit_circle ? std::polar(1.0, s) : Complex(std::exp(s)));
  }
  return out;
}

std::vector<GridPoint> default_unitarity_grid(const RMatrixFamily& fam) {
  std::vector<GridPoint> out;
  for (Complex s : default_spectral_grid(fam)) {
    for (int k = 0; k < 6; ++k) {
      const double flux = 2.0 * std::numbers::pi * k / 6.0;
      try {
        (void)fam.at(s, flux);
      } catch (const Error&) {
        continue;
      }
      out.push_back({s, flux});
    }
  }
  return out;
}

GridResidual ybe_grid_residual(const RMatrixFamily& fam, const std::vector<Complex>& grid, double flux,
                               std::optional<CompositionRule> rule) {
  GridResidual result;
  for (Complex a : grid) {
    for (Complex b : grid) {
      try {
        result.max_residual = std::max(result.max_residual, ybe_residual(fam, a, b, flux, rule));
        ++result.evaluated;
      } catch (const Error& e) {
        const auto k = e.kind();
        if (k != ErrorKind::NormalizationSingular && k != ErrorKind::SingularDenominator &&
            k != ErrorKind::ZeroSpectral) {
          throw;
        }
        ++result.skipped;
      }
    }
  }
  return result;
}

double asymptotic_braid_distance(const RMatrixFamily& fam, Complex x, double flux) {
  if (!fam.source) throw Error(ErrorKind::UnsupportedParametrization, fam.name + " has no braid source");
  BraidGenerator g = *fam.source;
  g.phi = flux;
  g.eta_phase = flux;
  const ComplexMatrix b = g.braid_matrix();
  const ComplexMatrix r = fam.at(x, flux);
  const Complex overlap = (b.adjoint() * r).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return distance(r * (1.0 / frobenius_norm(r)), b * (phase / frobenius_norm(b)));
}

}  // namespace yaxter
