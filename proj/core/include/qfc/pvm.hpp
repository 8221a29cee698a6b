#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qfc/funcalc.hpp"
#include "qfc/spectral.hpp"

namespace qfc {

/// One spectral atom: the projection onto the eigenspace of a merged
/// eigenvalue representative.
struct SpectralAtom {
  Quaternion lambda;
  QMatrix projection;
};

/// Finitely atomic projection-valued measure on the restricted spectrum.
/// Measurable sets are subsets of the atom index set; the measure of a set
/// is the sum of its atoms' projections. Carries the eigenbasis that
/// induces the left scalar multiplication used by the integral.
class QPVM {
 public:
  QPVM(Frame frame, QMatrix basis, std::vector<SpectralAtom> atoms);

  int n() const { return basis_.n(); }
  std::size_t atom_count() const { return atoms_.size(); }
  const std::vector<SpectralAtom>& atoms() const { return atoms_; }
  const Frame& frame() const { return frame_; }
  const QMatrix& basis() const { return basis_; }

  /// F(omega) for omega a set of atom indices.
  QMatrix projection_of(const std::vector<std::size_t>& keys) const;

  /// Scalar measure F_{x,y}(omega) = <x | F(omega) y>.
  Quaternion scalar_measure(const QVector& x, const QVector& y,
                            const std::vector<std::size_t>& keys) const;

  /// Left multiplication by q induced by the measure's basis.
  QMatrix left_mult_operator(const Quaternion& q) const;

 private:
  Frame frame_;
  QMatrix basis_;
  std::vector<SpectralAtom> atoms_;
};

/// Spectral measure of a normal operator: each atom is the extension of the
/// corresponding complex spectral projection, i.e. U P U* with P selecting
/// the eigenvalue positions of one merged representative.
QPVM spectral_measure(const QMatrix& t, const Frame& fr);
QPVM spectral_measure(const EigenSystem& es);

struct AxiomReport {
  double completeness = 0.0;     // ||sum F({l}) - I||
  double self_adjointness = 0.0; // max ||F - F*||
  double idempotence = 0.0;      // max ||F^2 - F||
  double multiplicativity = 0.0; // max over disjoint pairs ||F_a F_b||
  double additivity = 0.0;       // scalar measures over disjoint unions
  bool pass(double tol = 1e-10) const;
};

AxiomReport check_axioms(const QPVM& f,
                         const std::vector<std::pair<QVector, QVector>>& samples);

/// Integral of f against the measure: sum_l L_{f(lambda_l)} F({lambda_l}),
/// the simple-function formula realized exactly in the atomic case. The
/// scalar acts through the induced left multiplication, not entrywise.
QMatrix integrate(const QFunction& f, const QPVM& measure);

/// Max residual of the two scalar representation identities
///   <x|f(T)y> = integral of f against F_{x,y}
///   <x|f(T)y> = integral of F1 against F_{x,y} + of F2 against F_{x,n.y}
/// over random vector pairs.
double representation_check(const QMatrix& t, const QFunction& f,
                            const Frame& fr, int trials,
                            std::uint64_t seed = 7);

struct CommutantReport {
  bool applicable = false;
  double commute_t = 0.0;
  double commute_tstar = 0.0;
  double calculus_residual = 0.0;
  double measure_residual = 0.0;
};

/// For S commuting with T and T*: residuals of S f(T) = f(T) S and
/// S F(omega) = F(omega) S. Reports inapplicable when the precondition
/// fails instead of throwing.
CommutantReport commutant_check(const QMatrix& s, const QMatrix& t,
                                const QFunction& f, const QPVM& measure,
                                const Frame& fr, double pre_tol = 1e-10);

struct UniquenessReport {
  bool equal = false;
  double max_atom_diff = 0.0;
  double max_representation_residual = 0.0;
  std::string diagnostics;
};

/// Atom-by-atom comparison of two measures claiming to represent the same
/// operator, after aligning their supports.
UniquenessReport uniqueness_check(const QPVM& f, const QPVM& g, const QMatrix& t,
                                  const std::vector<QFunction>& f_suite,
                                  double tol = 1e-9, std::uint64_t seed = 11);

/// Scalar anticommutation identity of slice integrals against the complex
/// measure, checked through the restriction: for a, b in the slice space,
///   conj(n) . integral(f+, E_{a,b}) = - integral(conj f+, E_{b,a}) . n.
double jordan_dE_identity_check(const QPVM& measure, const QFunction& f,
                                int samples, std::uint64_t seed = 13);

}  // namespace qfc
