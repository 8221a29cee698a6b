#include "qfc/qvector.hpp"

#include <cmath>

#include "qfc/errors.hpp"

namespace qfc {

namespace {

void require_same_size(const QVector& x, const QVector& y, const char* who) {
  if (x.size() != y.size()) {
    throw PreconditionError(std::string(who) + ": length mismatch");
  }
}

}  // namespace

QVector& QVector::operator+=(const QVector& o) {
  require_same_size(*this, o, "QVector::operator+=");
  for (std::size_t t = 0; t < e_.size(); ++t) e_[t] += o.e_[t];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  require_same_size(*this, o, "QVector::operator-=");
  for (std::size_t t = 0; t < e_.size(); ++t) e_[t] -= o.e_[t];
  return *this;
}

QVector QVector::operator*(const Quaternion& q) const {
  QVector r(*this);
  for (Quaternion& v : r.e_) v = v * q;
  return r;
}

QVector QVector::operator*(double s) const {
  QVector r(*this);
  for (Quaternion& v : r.e_) v *= s;
  return r;
}

double QVector::norm() const {
  double s = 0.0;
  for (const Quaternion& v : e_) s += v.norm_sq();
  return std::sqrt(s);
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }

Quaternion inner(const QVector& x, const QVector& y) {
  require_same_size(x, y, "inner");
  Quaternion s;
  for (std::size_t t = 0; t < x.size(); ++t) s += x[t].conj() * y[t];
  return s;
}

Quaternion inner(const QVector& x, const QVector& y,
                 const std::vector<double>& weights) {
  require_same_size(x, y, "inner");
  if (weights.size() != x.size()) {
    throw PreconditionError("inner: weight vector length mismatch");
  }
  Quaternion s;
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (weights[t] < 0.0) throw PreconditionError("inner: negative weight");
    s += x[t].conj() * y[t] * weights[t];
  }
  return s;
}

double check_polarization(const QVector& x, const QVector& y) {
  require_same_size(x, y, "check_polarization");
  static const std::array<Quaternion, 4> kUnits = {
      Quaternion(1.0), Quaternion::unit_i(), Quaternion::unit_j(),
      Quaternion::unit_k()};
  Quaternion rhs;
  for (const Quaternion& l : kUnits) {
    const QVector xl = x * l;
    const double plus = (xl + y).norm();
    const double minus = (xl - y).norm();
    rhs += l * (plus * plus - minus * minus);
  }
  return (inner(x, y) * 4.0 - rhs).norm();
}

HilbertBasis::HilbertBasis(std::vector<QVector> vectors, double tol)
    : vectors_(std::move(vectors)) {
  const std::size_t n = vectors_.size();
  if (n == 0) throw PreconditionError("HilbertBasis: empty basis");
  for (const QVector& v : vectors_) {
    if (v.size() != n) {
      throw PreconditionError("HilbertBasis: need n vectors of length n");
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Quaternion g = inner(vectors_[r], vectors_[c]);
      const Quaternion expected = (r == c) ? Quaternion(1.0) : Quaternion();
      if ((g - expected).norm() > tol) {
        throw PreconditionError("HilbertBasis: vectors are not orthonormal");
      }
    }
  }
}

HilbertBasis HilbertBasis::standard(std::size_t n) {
  std::vector<QVector> vs;
  vs.reserve(n);
  for (std::size_t t = 0; t < n; ++t) {
    QVector v(n);
    v[t] = Quaternion(1.0);
    vs.push_back(std::move(v));
  }
  return HilbertBasis(std::move(vs));
}

QVector left_multiply(const Quaternion& q, const QVector& x,
                      const HilbertBasis& basis) {
  if (basis.size() != x.size()) {
    throw PreconditionError("left_multiply: basis/vector dimension mismatch");
  }
  QVector r(x.size());
  for (std::size_t t = 0; t < basis.size(); ++t) {
    r += basis[t] * (q * inner(basis[t], x));
  }
  return r;
}

}  // namespace qfc
