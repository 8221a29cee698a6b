#pragma once

#include <vector>

#include "qfc/qmatrix.hpp"

namespace qfc {

/// Unitary diagonalization of a normal operator: T = U diag(lambda) U*,
/// with the columns of U forming a Hilbert basis of slice eigenvectors and
/// every eigenvalue representative in the closed upper half slice C_m^+.
///
/// The basis inside a degenerate eigenspace is not unique; consumers must
/// only rely on quantities that are invariant under that choice (functions
/// of T, spectral projections, the induced J).
struct EigenSystem {
  QMatrix U;
  std::vector<Quaternion> lambdas;
  Frame frame;
};

struct SpectrumEntry {
  SphereClass cls;
  int multiplicity = 0;
};

/// Axially symmetric spectrum: one sphere class per merged eigenvalue
/// orbit, with multiplicities.
struct SphericalSpectrum {
  std::vector<SpectrumEntry> classes;

  bool contains(const SphereClass& c, double tol) const;
};

struct EigenOptions {
  /// Normality gate for the input operator (absolute, Frobenius residual).
  double normal_tol = 1e-9;
  /// Hard failure threshold on ||T U - U diag(lambda)||_F.
  double residual_tol = 1e-7;
};

/// Diagonalize a normal operator through its complex embedding.
///
/// The embedded matrix is split into commuting Hermitian parts which are
/// diagonalized simultaneously; eigenvalues then come in conjugate pairs
/// and one representative per pair is kept, with the sign ambiguity of
/// exactly real eigenvalues resolved by pairing eigenvectors under the
/// quaternionic (antilinear) symmetry of the embedding rather than by
/// eigenvalue proximity.
EigenSystem eigendecompose(const QMatrix& t, const Frame& fr,
                           const EigenOptions& opt = {});

double eigensystem_residual(const QMatrix& t, const EigenSystem& es);

/// Group eigenvalues whose representatives coincide up to a relative
/// tolerance; returns one (representative, member indices) pair per group,
/// ordered by representative.
struct EigenvalueGroup {
  Quaternion representative;
  std::vector<int> members;
};
std::vector<EigenvalueGroup> merge_eigenvalues(
    const std::vector<Quaternion>& lambdas, double rel_tol = 1e-8);

SphericalSpectrum spherical_spectrum(const QMatrix& t, const Frame& fr);
SphericalSpectrum spherical_spectrum(const EigenSystem& es);

/// Distinct eigenvalue representatives of the restricted operator, after
/// merging numerically coincident ones.
std::vector<Quaternion> merged_plus_spectrum(const EigenSystem& es,
                                             double rel_tol = 1e-8);

/// The anti-self-adjoint unitary U diag(m,...,m) U* commuting with T; it is
/// the left multiplication by m induced by the eigenbasis. For operators
/// with purely real spectrum any such J works and this construction is the
/// uniform choice.
QMatrix build_J(const EigenSystem& es);
QMatrix build_J(const QMatrix& t, const Frame& fr);

/// The companion unit U diag(n,...,n) U*; anticommutes with build_J.
QMatrix build_Jprime(const EigenSystem& es);

/// Matrix of the restriction of S to the slice Hilbert space in the
/// eigenbasis. Requires S to commute with build_J(es); for T itself this is
/// diag(lambda) over the slice.
ComplexMatrix restrict_plus(const QMatrix& s, const EigenSystem& es,
                            double tol = 1e-9);

/// Unique right-linear extension of a slice operator given in the
/// eigenbasis; the left inverse of restrict_plus. Norm-preserving,
/// multiplicative and star-compatible.
QMatrix extend_tilde(const ComplexMatrix& m, const EigenSystem& es);

}  // namespace qfc
