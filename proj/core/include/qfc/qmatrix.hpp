#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qfc/quaternion.hpp"
#include "qfc/qvector.hpp"

namespace qfc {

/// Computational carrier for operators on the slice Hilbert space: a plain
/// dense complex matrix whose entries are slice numbers a + m b read as
/// a + i b.
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Dense square matrix over the quaternions, acting on QVector by
/// matrix-vector product from the left; models a bounded right-linear
/// operator on H^n.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static QMatrix identity(int n);
  static QMatrix diagonal(const std::vector<Quaternion>& d);
  /// Row-major entries, size n*n.
  static QMatrix from_entries(int n, std::vector<Quaternion> entries);
  static QMatrix from_columns(const std::vector<QVector>& cols);

  int n() const { return n_; }
  const Quaternion& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * n_ + c];
  }
  Quaternion& operator()(int r, int c) {
    return a_[static_cast<std::size_t>(r) * n_ + c];
  }
  const std::vector<Quaternion>& entries() const { return a_; }

  QVector column(int c) const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s);

  QVector operator*(const QVector& x) const;

 private:
  int n_ = 0;
  std::vector<Quaternion> a_;
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(QMatrix a, double s);
QMatrix operator*(double s, QMatrix a);
QMatrix operator*(const QMatrix& a, const QMatrix& b);

/// Conjugate transpose; the unique operator with <x|Ay> = <adjoint(A)x|y>.
QMatrix adjoint(const QMatrix& a);

struct OperatorFlags {
  bool normal = false;
  bool self_adjoint = false;
  bool anti_self_adjoint = false;
  bool unitary = false;
  bool positive = false;
};

/// Test the classical operator classes to the given absolute tolerance.
/// Positivity means self-adjoint with eigenvalues >= -tol.
OperatorFlags classify(const QMatrix& a, double tol = 1e-10);

/// T^2 - T (q + conj q) + I |q|^2. Singularity of this operator at q is
/// what puts the whole sphere class of q into the spherical spectrum; the
/// result depends on q only through re(q) and |q|.
QMatrix delta_q(const QMatrix& t, const Quaternion& q);

/// Complex embedding: each entry a = c + d n (c, d in the m-slice) becomes
/// the 2x2 block [[c, d], [-conj d, conj c]], assembled per entry into a
/// 2n x 2n complex matrix. A star-algebra homomorphism.
ComplexMatrix chi_embed(const QMatrix& a, const Frame& fr);

/// Left inverse of chi_embed. Throws StructureError when the block
/// symmetry is violated beyond tol (relative to the largest entry).
QMatrix chi_unembed(const ComplexMatrix& m, const Frame& fr, double tol = 1e-9);

/// Operator norm: the largest singular value of the complex embedding.
double op_norm(const QMatrix& a);
double frobenius_norm(const QMatrix& a);

double min_singular_value(const ComplexMatrix& m);

/// Read a slice quaternion a + m b as the complex number a + i b. Throws
/// SliceError if q sticks out of the slice beyond tol * (1 + |q|).
std::complex<double> slice_complex(const Quaternion& q, const Frame& fr,
                                   double tol = 1e-9);
Quaternion from_slice_complex(const std::complex<double>& z, const Frame& fr);

}  // namespace qfc
