#pragma once

#include <cstddef>
#include <string_view>

#include "yaxter/linalg.hpp"

namespace yaxter {

enum class Family { Permutation, MType, BHalf, SixVertexB, TLSixVertex, TLDiag, TLMid };

std::string_view to_string(Family family);

/// Sign parameter restricted to ±1.
class Epsilon {
 public:
  explicit Epsilon(int value);
  static Epsilon plus() { return Epsilon(1); }
  static Epsilon minus() { return Epsilon(-1); }
  int value() const noexcept { return value_; }
  double as_double() const noexcept { return static_cast<double>(value_); }

 private:
  int value_;
};

/// A named, parametrized two-site generator.
struct BraidGenerator {
  Family family = Family::Permutation;
  double phi = 0.0;                 // flux for MType / BHalf / TLDiag / TLMid
  Epsilon epsilon = Epsilon::plus();
  double q = 1.0;                   // SixVertexB / TLSixVertex
  double eta_phase = 0.0;           // η = e^{i·eta_phase}

  /// The family's defining 4×4 matrix (P, M, B, or the TL generator U).
  ComplexMatrix materialize() const;
  /// The braid operator attached to the family. TL generators map to
  /// I + fU with f = −ε (TLDiag, TLMid) or to q·I − U (TLSixVertex);
  /// MType maps to (I + M)/√2.
  ComplexMatrix braid_matrix() const;
  /// Loop parameter d of U² = d·U for the TL families.
  double tl_loop_value() const;
  bool is_temperley_lieb() const noexcept;
};

// Constructors for the concrete two-site matrices, basis (|↑↑⟩,|↑↓⟩,|↓↑⟩,|↓↓⟩).
ComplexMatrix permutation_p();
ComplexMatrix m_matrix(double phi, Epsilon epsilon);
ComplexMatrix b_half(double phi, Epsilon epsilon);
ComplexMatrix six_vertex_b(double q, double eta_phase);
ComplexMatrix tl_u_sixvertex(double q, double eta_phase);
ComplexMatrix tl_u_diag(double phi, Epsilon epsilon);
ComplexMatrix tl_u_mid(double phi, Epsilon epsilon);

/// Max Frobenius residual of B_i B_{i+1} B_i = B_{i+1} B_i B_{i+1} over
/// adjacent bonds together with ‖[B_i, B_j]‖ over |i − j| ≥ 2.
double check_braid_relations(const ComplexMatrix& b, std::size_t sites);
double check_braid_relations(const BraidGenerator& g, std::size_t sites);

struct ExtraSpecialResidual {
  double square = 0.0;           // max ‖M_i² + 1‖
  double distant_commute = 0.0;  // max ‖[M_i, M_j]‖, |i − j| ≥ 2
  double adjacent_anti = 0.0;    // max ‖{M_i, M_{i+1}}‖, reported only

  /// The two relations asserted as hard invariants.
  double hard() const;
  double max() const;
};

/// M on every bond is built bondwise from spin ladder operators.
ExtraSpecialResidual check_extraspecial(double phi, Epsilon epsilon, std::size_t sites);

/// Max residual of U_i U_{i±1} U_i − U_i and U_i² − d·U_i.
double check_temperley_lieb(const ComplexMatrix& u, double d, std::size_t sites);

}  // namespace yaxter
