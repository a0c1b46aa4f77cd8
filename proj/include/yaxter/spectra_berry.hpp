#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "yaxter/hamiltonians.hpp"
#include "yaxter/linalg.hpp"

namespace yaxter {

enum class BandLabel { Plus, Minus, Zero1, Zero2 };
enum class BerryMethod { AnalyticH1, AnalyticH2, WilsonLoop, FromConcurrence, Dynamical };

std::string_view to_string(BandLabel band);
std::string_view to_string(BerryMethod method);

struct AdiabaticBand {
  BandLabel label = BandLabel::Plus;
  double energy = 0.0;
  ComplexVector state;  // unit norm, first nonvanishing component real positive
};

struct BerryResult {
  double phase = 0.0;      // wrapped to (−π, π]
  double unwrapped = 0.0;  // accumulated along the loop
  BerryMethod method = BerryMethod::WilsonLoop;
  std::size_t loop_points = 0;
  BandLabel band = BandLabel::Plus;
};

inline constexpr double kDegeneracyGap = 1e-9;
inline constexpr std::size_t kDefaultLoopPoints = 2000;

/// Wraps to (−π, π].
double wrap_phase(double angle);

/// The plus band carries energy −ω cosθ·(positive factor) in every model, so
/// it is the lowest level when ω cosθ > 0 and the highest otherwise; the two
/// middle levels are the zero bands. Throws DegenerateBand when the requested
/// band touches another one (zero bands are only checked against the
/// nonzero pair).
AdiabaticBand adiabatic_band(const HamiltonianModel& model, double phi, BandLabel band);

/// Rotates v so its first component with modulus above 1e-12 is real positive.
void fix_gauge(ComplexVector& v);

/// −arg Π⟨n_k|n_{k+1}⟩ over a closed loop (the last state connects back to
/// the first); the unwrapped value sums the individual link phases.
BerryResult wilson_phase(const std::vector<ComplexVector>& loop);

/// Discrete Berry phase over φ: 0 → 2π sampled at K points. Throws GapClosed
/// when the band touches another level anywhere on the loop.
BerryResult berry_wilson_loop(const HamiltonianModel& model, BandLabel band,
                              std::size_t loop_points = kDefaultLoopPoints);

/// ±π(1 − cosθ).
BerryResult berry_analytic_h1(double theta, int band_sign);
/// ±π(1 − cosθ/λ₊).
BerryResult berry_analytic_h2(double theta, double q, int band_sign);

/// 2|ad − bc|.
double concurrence(std::span<const Complex> state);

/// ±π(1 − √(1 − C²)), plus sign for the plus band.
BerryResult berry_from_concurrence(double c, int band_sign);

/// Ω = 2π(1 − cosθ).
double solid_angle(double theta);

/// Closed-form adiabatic state of the h2 plus band, (λ₊ − cosθ)^{∓1/2} form.
/// Requires λ₊ > cosθ.
ComplexVector h2_closed_form_plus_state(double theta, double phi, double q);

}  // namespace yaxter
