#include "yaxter/spectra_berry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "yaxter/error.hpp"

namespace yaxter {

std::string_view to_string(BandLabel band) {
  switch (band) {
    case BandLabel::Plus: return "plus";
    case BandLabel::Minus: return "minus";
    case BandLabel::Zero1: return "zero1";
    case BandLabel::Zero2: return "zero2";
  }
  return "unknown";
}

std::string_view to_string(BerryMethod method) {
  switch (method) {
    case BerryMethod::AnalyticH1: return "analytic-h1";
    case BerryMethod::AnalyticH2: return "analytic-h2";
    case BerryMethod::WilsonLoop: return "wilson";
    case BerryMethod::FromConcurrence: return "concurrence";
    case BerryMethod::Dynamical: return "dynamical";
  }
  return "unknown";
}

double wrap_phase(double angle) {
  const double two_pi = 2.0 * std::numbers::pi;
  double w = std::fmod(angle, two_pi);
  if (w <= -std::numbers::pi) w += two_pi;
  if (w > std::numbers::pi) w -= two_pi;
  return w;
}

void fix_gauge(ComplexVector& v) {
  for (const Complex& c : v) {
    if (std::abs(c) > 1e-12) {
      const Complex phase = std::conj(c) / std::abs(c);
      for (Complex& x : v) x *= phase;
      return;
    }
  }
}

namespace {

std::size_t band_index(const HamiltonianModel& model, BandLabel band) {
  const bool plus_lowest = model.omega * std::cos(model.theta) > 0.0;
  switch (band) {
    case BandLabel::Plus: return plus_lowest ? 0 : 3;
    case BandLabel::Minus: return plus_lowest ? 3 : 0;
    case BandLabel::Zero1: return 1;
    case BandLabel::Zero2: return 2;
  }
  return 0;
}

// Smallest distance from level `idx` to the levels it must stay separated
// from; the zero pair is not required to be split.
double band_gap(const std::vector<double>& values, std::size_t idx) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j == idx) continue;
    const bool both_middle = (idx == 1 || idx == 2) && (j == 1 || j == 2);
    if (both_middle) continue;
    gap = std::min(gap, std::abs(values[j] - values[idx]));
  }
  return gap;
}

}  // namespace

AdiabaticBand adiabatic_band(const HamiltonianModel& model, double phi, BandLabel band) {
  const ComplexMatrix h = model.materialize(phi);
  if (h.rows() != 4) throw Error(ErrorKind::DimensionMismatch, "adiabatic bands need a two-site model");
  const EigenSystem es = eig_hermitian(h);
  const std::size_t idx = band_index(model, band);
  if (band_gap(es.values, idx) < kDegeneracyGap) {
    throw Error(ErrorKind::DegenerateBand, std::string(to_string(band)) + " band is degenerate");
  }
  AdiabaticBand out{band, es.values[idx], es.vector(idx)};
  fix_gauge(out.state);
  return out;
}

BerryResult wilson_phase(const std::vector<ComplexVector>& loop) {
  if (loop.size() < 2) throw Error(ErrorKind::BadParams, "a loop needs at least two states");
  Complex product(1.0);
  double sum = 0.0;
  for (std::size_t k = 0; k < loop.size(); ++k) {
    const Complex link = inner(loop[k], loop[(k + 1) % loop.size()]);
    sum += std::arg(link);
    product *= link / std::abs(link);
  }
  BerryResult r;
  r.phase = wrap_phase(-std::arg(product));
  r.unwrapped = -sum;
  r.method = BerryMethod::WilsonLoop;
  r.loop_points = loop.size();
  return r;
}

BerryResult berry_wilson_loop(const HamiltonianModel& model, BandLabel band, std::size_t loop_points) {
  if (loop_points < 8) throw Error(ErrorKind::BadParams, "Wilson loop needs at least 8 points");
  std::vector<ComplexVector> loop;
  loop.reserve(loop_points);
  for (std::size_t k = 0; k < loop_points; ++k) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(loop_points);
    try {
      loop.push_back(adiabatic_band(model, phi, band).state);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateBand) throw;
      throw Error(ErrorKind::GapClosed, "gap closes along the loop at phi = " + std::to_string(phi));
    }
  }
  BerryResult r = wilson_phase(loop);
  r.band = band;
  return r;
}

namespace {
BerryResult analytic(double unwrapped, BerryMethod method, int band_sign) {
  BerryResult r;
  r.unwrapped = unwrapped;
  r.phase = wrap_phase(unwrapped);
  r.method = method;
  r.band = band_sign >= 0 ? BandLabel::Plus : BandLabel::Minus;
  return r;
}

double sign_of(int band_sign) { return band_sign >= 0 ? 1.0 : -1.0; }
}  // namespace

BerryResult berry_analytic_h1(double theta, int band_sign) {
  return analytic(sign_of(band_sign) * std::numbers::pi * (1.0 - std::cos(theta)), BerryMethod::AnalyticH1,
                  band_sign);
}

BerryResult berry_analytic_h2(double theta, double q, int band_sign) {
  const double lp = h2_lambda_plus(theta, q);
  if (!(lp > 0.0)) throw Error(ErrorKind::OutOfRange, "lambda_+ must be positive");
  return analytic(sign_of(band_sign) * std::numbers::pi * (1.0 - std::cos(theta) / lp), BerryMethod::AnalyticH2,
                  band_sign);
}

double concurrence(std::span<const Complex> state) {
  if (state.size() != 4) throw Error(ErrorKind::DimensionMismatch, "concurrence needs a two-qubit state");
  if (std::abs(norm(state) - 1.0) > 1e-10) throw Error(ErrorKind::NotNormalized, "state is not normalized");
  return 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
}

BerryResult berry_from_concurrence(double c, int band_sign) {
  if (!(c >= 0.0 && c <= 1.0)) throw Error(ErrorKind::OutOfRange, "concurrence must lie in [0, 1]");
  return analytic(sign_of(band_sign) * std::numbers::pi * (1.0 - std::sqrt(1.0 - c * c)),
                  BerryMethod::FromConcurrence, band_sign);
}

double solid_angle(double theta) { return 2.0 * std::numbers::pi * (1.0 - std::cos(theta)); }

ComplexVector h2_closed_form_plus_state(double theta, double phi, double q) {
  const double lp = h2_lambda_plus(theta, q);
  const double gap = lp - std::cos(theta);
  if (!(gap > 1e-12)) throw Error(ErrorKind::OutOfRange, "closed-form state needs lambda_+ > cos(theta)");
  const double k = 0.5 * (q - 1.0 / q);
  const double pre = 1.0 / std::sqrt(2.0 * lp);
  ComplexVector v(4);
  v[1] = pre * k / std::sqrt(gap);
  v[2] = pre * kI * std::sqrt(gap) * std::polar(1.0, -phi);
  return v;
}

}  // namespace yaxter
