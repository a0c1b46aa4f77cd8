#include "yaxter/braidgens.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "yaxter/error.hpp"

namespace yaxter {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Permutation: return "permutation";
    case Family::MType: return "mtype";
    case Family::BHalf: return "bhalf";
    case Family::SixVertexB: return "sixvertex";
    case Family::TLSixVertex: return "tl-sixvertex";
    case Family::TLDiag: return "tldiag";
    case Family::TLMid: return "tlmid";
  }
  return "unknown";
}

Epsilon::Epsilon(int value) : value_(value) {
  if (value != 1 && value != -1) {
    throw Error(ErrorKind::InvalidEpsilon, "epsilon must be +1 or -1, got " + std::to_string(value));
  }
}

ComplexMatrix permutation_p() {
  return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
}

ComplexMatrix m_matrix(double phi, Epsilon epsilon) {
  const double e = epsilon.as_double();
  ComplexMatrix m(4, 4);
  m(0, 3) = std::polar(1.0, phi);
  m(1, 2) = e;
  m(2, 1) = -e;
  m(3, 0) = -std::polar(1.0, -phi);
  return m;
}

ComplexMatrix b_half(double phi, Epsilon epsilon) {
  return (ComplexMatrix::identity(4) + m_matrix(phi, epsilon)) * Complex(1.0 / std::sqrt(2.0));
}

namespace {
void require_q(double q) {
  if (q == 0.0 || !std::isfinite(q)) throw Error(ErrorKind::DegenerateQ, "q must be nonzero");
}
}  // namespace

ComplexMatrix tl_u_sixvertex(double q, double eta_phase) {
  require_q(q);
  ComplexMatrix u(4, 4);
  u(1, 1) = q;
  u(1, 2) = std::polar(1.0, eta_phase);
  u(2, 1) = std::polar(1.0, -eta_phase);
  u(2, 2) = 1.0 / q;
  return u;
}

// B = q(I − q⁻¹U). Putting −η in both off-diagonal slots would only agree
// with this at η = ±1 and breaks the braid relation otherwise.
ComplexMatrix six_vertex_b(double q, double eta_phase) {
  require_q(q);
  return ComplexMatrix::identity(4) * Complex(q) - tl_u_sixvertex(q, eta_phase);
}

ComplexMatrix tl_u_diag(double phi, Epsilon epsilon) {
  const double e = epsilon.as_double();
  ComplexMatrix u(4, 4);
  u(0, 0) = e;
  u(0, 3) = std::polar(1.0, phi);
  u(3, 0) = std::polar(1.0, -phi);
  u(3, 3) = e;
  return u;
}

ComplexMatrix tl_u_mid(double phi, Epsilon epsilon) {
  const double e = epsilon.as_double();
  ComplexMatrix u(4, 4);
  u(1, 1) = e;
  u(1, 2) = std::polar(1.0, phi);
  u(2, 1) = std::polar(1.0, -phi);
  u(2, 2) = e;
  return u;
}

ComplexMatrix BraidGenerator::materialize() const {
  switch (family) {
    case Family::Permutation: return permutation_p();
    case Family::MType: return m_matrix(phi, epsilon);
    case Family::BHalf: return b_half(phi, epsilon);
    case Family::SixVertexB: return six_vertex_b(q, eta_phase);
    case Family::TLSixVertex: return tl_u_sixvertex(q, eta_phase);
    case Family::TLDiag: return tl_u_diag(phi, epsilon);
    case Family::TLMid: return tl_u_mid(phi, epsilon);
  }
  throw Error(ErrorKind::UnknownFamily, "unhandled family");
}

bool BraidGenerator::is_temperley_lieb() const noexcept {
  return family == Family::TLSixVertex || family == Family::TLDiag || family == Family::TLMid;
}

double BraidGenerator::tl_loop_value() const {
  switch (family) {
    case Family::TLSixVertex: require_q(q); return q + 1.0 / q;
    case Family::TLDiag:
    case Family::TLMid: return 2.0 * epsilon.as_double();
    default: break;
  }
  throw Error(ErrorKind::BadParams, std::string(to_string(family)) + " is not a TL generator");
}

ComplexMatrix BraidGenerator::braid_matrix() const {
  switch (family) {
    case Family::MType: return b_half(phi, epsilon);
    case Family::TLSixVertex: return six_vertex_b(q, eta_phase);
    case Family::TLDiag:
    case Family::TLMid:
      // 1 + f·d + f² = 0 with d = 2ε has the double root f = −ε
      return ComplexMatrix::identity(4) - materialize() * Complex(epsilon.as_double());
    default: return materialize();
  }
}

double check_braid_relations(const ComplexMatrix& b, std::size_t sites) {
  if (sites < 3) throw Error(ErrorKind::BondOutOfRange, "braid relations need at least 3 sites");
  std::vector<ComplexMatrix> bonds;
  for (std::size_t i = 1; i < sites; ++i) bonds.push_back(embed_two_site(b, i, sites));
  double residual = 0.0;
  for (std::size_t i = 0; i + 1 < bonds.size(); ++i) {
    const auto& bi = bonds[i];
    const auto& bj = bonds[i + 1];
    residual = std::max(residual, distance(bi * bj * bi, bj * bi * bj));
  }
  for (std::size_t i = 0; i < bonds.size(); ++i)
    for (std::size_t j = i + 2; j < bonds.size(); ++j)
      residual = std::max(residual, frobenius_norm(commutator(bonds[i], bonds[j])));
  return residual;
}

double check_braid_relations(const BraidGenerator& g, std::size_t sites) {
  return check_braid_relations(g.braid_matrix(), sites);
}

double ExtraSpecialResidual::hard() const { return std::max(square, distant_commute); }
double ExtraSpecialResidual::max() const { return std::max(hard(), adjacent_anti); }

ExtraSpecialResidual check_extraspecial(double phi, Epsilon epsilon, std::size_t sites) {
  if (sites < 3) throw Error(ErrorKind::BondOutOfRange, "extra-special check needs at least 3 sites");
  const double e = epsilon.as_double();
  const ComplexMatrix sp = spin::raising();
  const ComplexMatrix sm = spin::lowering();
  const ComplexMatrix id = ComplexMatrix::identity(std::size_t{1} << sites);

  std::vector<ComplexMatrix> ms;
  for (std::size_t i = 1; i < sites; ++i) {
    const auto sp_i = embed_one_site(sp, i, sites);
    const auto sm_i = embed_one_site(sm, i, sites);
    const auto sp_j = embed_one_site(sp, i + 1, sites);
    const auto sm_j = embed_one_site(sm, i + 1, sites);
    ms.push_back(std::polar(1.0, phi) * (sp_i * sp_j) - std::polar(1.0, -phi) * (sm_i * sm_j) +
                 Complex(e) * (sp_i * sm_j - sm_i * sp_j));
  }

  ExtraSpecialResidual r;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    r.square = std::max(r.square, frobenius_norm(ms[i] * ms[i] + id));
    if (i + 1 < ms.size()) {
      r.adjacent_anti = std::max(r.adjacent_anti, frobenius_norm(anticommutator(ms[i], ms[i + 1])));
    }
    for (std::size_t j = i + 2; j < ms.size(); ++j)
      r.distant_commute = std::max(r.distant_commute, frobenius_norm(commutator(ms[i], ms[j])));
  }
  return r;
}

double check_temperley_lieb(const ComplexMatrix& u, double d, std::size_t sites) {
  if (sites < 3) throw Error(ErrorKind::BondOutOfRange, "TL relations need at least 3 sites");
  std::vector<ComplexMatrix> us;
  for (std::size_t i = 1; i < sites; ++i) us.push_back(embed_two_site(u, i, sites));
  double residual = 0.0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    residual = std::max(residual, distance(us[i] * us[i], us[i] * Complex(d)));
    if (i + 1 < us.size()) residual = std::max(residual, distance(us[i] * us[i + 1] * us[i], us[i]));
    if (i > 0) residual = std::max(residual, distance(us[i] * us[i - 1] * us[i], us[i]));
  }
  return residual;
}

}  // namespace yaxter
