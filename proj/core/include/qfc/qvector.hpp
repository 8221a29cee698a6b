#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qfc/quaternion.hpp"

namespace qfc {

/// Vector in the right quaternionic module H^n; scalars act entrywise from
/// the right.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t n) : e_(n) {}
  QVector(std::initializer_list<Quaternion> init) : e_(init) {}
  explicit QVector(std::vector<Quaternion> entries) : e_(std::move(entries)) {}

  std::size_t size() const { return e_.size(); }
  const Quaternion& operator[](std::size_t t) const { return e_[t]; }
  Quaternion& operator[](std::size_t t) { return e_[t]; }
  const std::vector<Quaternion>& entries() const { return e_; }

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);

  /// Right scalar multiplication x * q.
  QVector operator*(const Quaternion& q) const;
  QVector operator*(double s) const;

  double norm() const;

 private:
  std::vector<Quaternion> e_;
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);

/// Inner product sum_l conj(x_l) y_l; conjugate-symmetric and right-linear
/// in the second argument. Throws PreconditionError on length mismatch.
Quaternion inner(const QVector& x, const QVector& y);

/// Weighted variant used to realize finitely atomic L^2 spaces: the atom
/// weights enter as a diagonal weight vector.
Quaternion inner(const QVector& x, const QVector& y,
                 const std::vector<double>& weights);

/// Residual of the polarization identity
/// 4<x|y> = sum_{l in {1,i,j,k}} (||x l + y||^2 - ||x l - y||^2) l.
double check_polarization(const QVector& x, const QVector& y);

/// Orthonormal basis of H^n. Construction verifies the Gram matrix against
/// the identity and fails loudly instead of re-orthonormalizing.
class HilbertBasis {
 public:
  explicit HilbertBasis(std::vector<QVector> vectors, double tol = 1e-10);

  static HilbertBasis standard(std::size_t n);

  std::size_t size() const { return vectors_.size(); }
  const std::vector<QVector>& vectors() const { return vectors_; }
  const QVector& operator[](std::size_t t) const { return vectors_[t]; }

 private:
  std::vector<QVector> vectors_;
};

/// Left scalar multiplication induced by a Hilbert basis:
/// q . x = sum_z z * q * <z|x>. For the standard basis this is entrywise
/// left multiplication.
QVector left_multiply(const Quaternion& q, const QVector& x,
                      const HilbertBasis& basis);

}  // namespace qfc
