#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yaxter/braidgens.hpp"
#include "yaxter/linalg.hpp"

namespace yaxter {

enum class Scheme { Trigonometric, Rational };
enum class CompositionRule { Multiplicative, Additive };

std::string_view to_string(CompositionRule rule);

/// A unitary R(spectral, flux) together with its YBE composition rule.
struct RMatrixFamily {
  using Evaluator = std::function<ComplexMatrix(Complex spectral, double flux)>;
  using AngleEvaluator = std::function<ComplexMatrix(double theta, double flux)>;

  std::string name;
  std::optional<BraidGenerator> source;
  Scheme scheme = Scheme::Trigonometric;
  CompositionRule rule = CompositionRule::Multiplicative;
  bool unit_circle = false;  // spectral values live on |x| = 1
  Evaluator evaluator;
  AngleEvaluator angle_evaluator;  // R(θ, φ) as used by the Hamiltonian rule

  ComplexMatrix at(Complex spectral, double flux) const;
  /// Throws UnsupportedParametrization for families without an angle map.
  ComplexMatrix at_angle(double theta, double flux) const;
};

struct ThetaX {
  double x;
  double x_inv;
};

/// x(θ) = (cosθ + sinθ)/√(−cos2θ), defined for θ ∈ (π/4, 3π/4) mod π.
ThetaX theta_to_x(double theta);

/// [2(x² + x⁻²)]^{-1/2} [(x + x⁻¹)I + (x − x⁻¹)M(φ, ε)].
ComplexMatrix trig_baxterize_m(Complex x, double phi, Epsilon epsilon);

/// [q² + q⁻² − (x² + x⁻²)]^{-1/2} [(qx − q⁻¹x⁻¹)I − (x − x⁻¹)U].
ComplexMatrix trig_baxterize_sixvertex(Complex x, double q, double eta_phase);

enum class SymmetrizeForm {
  Antidiagonal,  // V_i = [[0, x^{-1/4}], [x^{1/4}, 0]]
  Diagonal,  // V_i = diag(x^{1/4}, x^{-1/4})
};

/// V R V† with V = V_i(x) ⊗ V_i(x)⁻¹, principal branch of x^{1/4}.
ComplexMatrix symmetrize(const ComplexMatrix& r, Complex x, SymmetrizeForm form = SymmetrizeForm::Antidiagonal);

/// (−c·I + iu·P)/(c + iu).
ComplexMatrix rational_r_yang(double u, double c);

/// I + G·U with G = 1/(i tanθ − ε); the θ = π/2 limit gives R = I.
/// `u_family` selects the corner (TLDiag) or centre (TLMid) generator.
ComplexMatrix rational_baxterize_tl(double theta, double phi, Epsilon epsilon, Family u_family = Family::TLDiag);

RMatrixFamily m_family(Epsilon epsilon);
RMatrixFamily six_vertex_family(double q);
/// Six-vertex R conjugated by V. The angle map uses x = e^{i(π/2 − θ)} and
/// η-phase = φ + flux_offset.
RMatrixFamily symmetrized_six_vertex_family(double q, SymmetrizeForm form = SymmetrizeForm::Antidiagonal,
                                            double flux_offset = -1.5707963267948966);
RMatrixFamily rational_yang_family(double c);
/// R(u) = I + u/(i·a − εu)·U; at angle θ, a/u = tanθ.
RMatrixFamily rational_tl_family(double a, Epsilon epsilon, Family u_family = Family::TLDiag);
RMatrixFamily identity_family();

/// Frobenius distance between R₁₂(a)R₂₃(ab)R₁₂(b) and R₂₃(b)R₁₂(ab)R₂₃(a),
/// with ab = a·b or a + b depending on the rule (the family's own unless
/// overridden).
double ybe_residual(const RMatrixFamily& fam, Complex a, Complex b, double flux = 0.0,
                    std::optional<CompositionRule> rule = std::nullopt);

struct GridPoint {
  Complex spectral;
  double flux;
};

double unitarity_residual(const RMatrixFamily& fam, const std::vector<GridPoint>& grid);

/// Five spectral samples: e^{s} (or e^{is} on the unit circle) for the
/// multiplicative rule, s ∈ [−1, 1]; linear in [−2, 2] for the additive one.
std::vector<Complex> default_spectral_grid(const RMatrixFamily& fam);
std::vector<GridPoint> default_unitarity_grid(const RMatrixFamily& fam);

struct GridResidual {
  double max_residual = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;  // pairs hitting a singular normalization
};

GridResidual ybe_grid_residual(const RMatrixFamily& fam, const std::vector<Complex>& grid, double flux = 0.0,
                               std::optional<CompositionRule> rule = std::nullopt);

/// Distance between R(x)/‖R(x)‖ and B/‖B‖ after removing the best global
/// phase; B is the braid matrix of the family's source.
double asymptotic_braid_distance(const RMatrixFamily& fam, Complex x, double flux);

}  // namespace yaxter
