#include "yaxter/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "yaxter/error.hpp"

namespace yaxter {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BondOutOfRange: return "BondOutOfRange";
    case ErrorKind::SiteOutOfRange: return "SiteOutOfRange";
    case ErrorKind::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorKind::DegenerateQ: return "DegenerateQ";
    case ErrorKind::ZeroSpectral: return "ZeroSpectral";
    case ErrorKind::ThetaOutOfDomain: return "ThetaOutOfDomain";
    case ErrorKind::NormalizationSingular: return "NormalizationSingular";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::UnsupportedParametrization: return "UnsupportedParametrization";
    case ErrorKind::StepTooSmall: return "StepTooSmall";
    case ErrorKind::DegenerateBand: return "DegenerateBand";
    case ErrorKind::GapClosed: return "GapClosed";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UndefinedRotation: return "UndefinedRotation";
    case ErrorKind::StepsTooFew: return "StepsTooFew";
    case ErrorKind::NormDrift: return "NormDrift";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorKind::DimensionMismatch, "entry count does not equal rows*cols");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix difference");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b + b * a;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) { return frobenius_norm(a - b); }

double unitarity_defect(const ComplexMatrix& a) {
  return distance(a * a.adjoint(), ComplexMatrix::identity(a.rows()));
}

double hermiticity_defect(const ComplexMatrix& a) { return distance(a, a.adjoint()); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

ComplexMatrix embed_two_site(const ComplexMatrix& g, std::size_t bond, std::size_t sites) {
  if (g.rows() != 4 || g.cols() != 4) {
    throw Error(ErrorKind::DimensionMismatch, "two-site operator must be 4x4");
  }
  if (sites < 2 || bond < 1 || bond > sites - 1) {
    throw Error(ErrorKind::BondOutOfRange,
                "bond " + std::to_string(bond) + " on " + std::to_string(sites) + " sites");
  }
  const std::size_t left = std::size_t{1} << (bond - 1);
  const std::size_t right = std::size_t{1} << (sites - bond - 1);
  return kron(kron(ComplexMatrix::identity(left), g), ComplexMatrix::identity(right));
}

ComplexMatrix embed_one_site(const ComplexMatrix& op, std::size_t site, std::size_t sites) {
  if (op.rows() != 2 || op.cols() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "single-site operator must be 2x2");
  }
  if (site < 1 || site > sites) {
    throw Error(ErrorKind::SiteOutOfRange,
                "site " + std::to_string(site) + " on " + std::to_string(sites) + " sites");
  }
  const std::size_t left = std::size_t{1} << (site - 1);
  const std::size_t right = std::size_t{1} << (sites - site);
  return kron(kron(ComplexMatrix::identity(left), op), ComplexMatrix::identity(right));
}

ComplexMatrix expm(const ComplexMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "expm of non-square matrix");
  const std::size_t n = a.rows();
  // max absolute column sum
  double norm1 = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    double col = 0.0;
    for (std::size_t r = 0; r < n; ++r) col += std::abs(a(r, c));
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  if (norm1 > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm1 / 0.5)));
  const ComplexMatrix scaled = a * Complex(std::ldexp(1.0, -squarings));

  constexpr int kDegree = 12;
  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= kDegree; ++k) {
    term = term * scaled * Complex(1.0 / k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "inner product");
  Complex acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

double distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector distance");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

ComplexVector EigenSystem::vector(std::size_t k) const {
  ComplexVector v(vectors.rows());
  for (std::size_t r = 0; r < vectors.rows(); ++r) v[r] = vectors(r, k);
  return v;
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kClusterGap = 1e-9;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Applies A ← J† A J and V ← V J for the unitary J that annihilates a(p, q).
// J = diag(1, e^{-iα}) · [[c, s], [-s, c]] on the (p, q) plane, where
// a(p, q) = |a(p, q)| e^{iα}.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q, double floor) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag <= floor) return;
  const Complex phase = apq / mag;  // e^{iα}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {  // A ← A J
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // A ← J† A
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {  // V ← V J
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

std::size_t dominant_index(const ComplexMatrix& v, std::size_t col) {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const double m = std::abs(v(r, col));
    // strict comparison with a relative slack keeps the lower index on ties
    if (m > best_mag * (1.0 + 1e-12) + 1e-15) {
      best_mag = m;
      best = r;
    }
  }
  return best;
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& h) {
  if (!h.is_square()) throw Error(ErrorKind::NotHermitian, "matrix is not square");
  const double scale = frobenius_norm(h);
  if (hermiticity_defect(h) > 1e-10 * scale) {
    throw Error(ErrorKind::NotHermitian, "‖h − h†‖ exceeds 1e-10‖h‖");
  }
  const std::size_t n = h.rows();
  ComplexMatrix a = (h + h.adjoint()) * Complex(0.5);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = 1e-16 * scale;
  const double floor = 1e-18 * scale;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > kMaxSweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi sweeps exceeded " + std::to_string(kMaxSweeps));
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q, floor);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  // reorder each degenerate cluster by dominant component index
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start + 1;
    while (end < n && a(order[end], order[end]).real() - a(order[end - 1], order[end - 1]).real() <
                          kClusterGap) {
      ++end;
    }
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                     order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::size_t i, std::size_t j) {
                       return dominant_index(v, i) < dominant_index(v, j);
                     });
    start = end;
  }

  EigenSystem es;
  es.values.resize(n);
  es.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
  }
  return es;
}

namespace spin {
ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix raising() { return {{0.0, 1.0}, {0.0, 0.0}}; }
ComplexMatrix lowering() { return {{0.0, 0.0}, {1.0, 0.0}}; }
ComplexMatrix sz() { return {{0.5, 0.0}, {0.0, -0.5}}; }
ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix pauli_y() { return {{0.0, -kI}, {kI, 0.0}}; }
ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace spin

}  // namespace yaxter
