#include "qfc/qmatrix.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "qfc/errors.hpp"

namespace qfc {

namespace {

void require_same_n(const QMatrix& a, const QMatrix& b, const char* who) {
  if (a.n() != b.n()) {
    throw PreconditionError(std::string(who) + ": dimension mismatch");
  }
}

}  // namespace

QMatrix QMatrix::identity(int n) {
  QMatrix a(n);
  for (int t = 0; t < n; ++t) a(t, t) = Quaternion(1.0);
  return a;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& d) {
  QMatrix a(static_cast<int>(d.size()));
  for (int t = 0; t < a.n(); ++t) a(t, t) = d[static_cast<std::size_t>(t)];
  return a;
}

QMatrix QMatrix::from_entries(int n, std::vector<Quaternion> entries) {
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    throw PreconditionError("QMatrix::from_entries: need n*n entries");
  }
  QMatrix a;
  a.n_ = n;
  a.a_ = std::move(entries);
  return a;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
  const int n = static_cast<int>(cols.size());
  QMatrix a(n);
  for (int c = 0; c < n; ++c) {
    if (cols[static_cast<std::size_t>(c)].size() != static_cast<std::size_t>(n)) {
      throw PreconditionError("QMatrix::from_columns: ragged columns");
    }
    for (int r = 0; r < n; ++r) {
      a(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    }
  }
  return a;
}

QVector QMatrix::column(int c) const {
  QVector v(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
  return v;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_n(*this, o, "QMatrix::operator+=");
  for (std::size_t t = 0; t < a_.size(); ++t) a_[t] += o.a_[t];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_n(*this, o, "QMatrix::operator-=");
  for (std::size_t t = 0; t < a_.size(); ++t) a_[t] -= o.a_[t];
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  for (Quaternion& v : a_) v *= s;
  return *this;
}

QVector QMatrix::operator*(const QVector& x) const {
  if (x.size() != static_cast<std::size_t>(n_)) {
    throw PreconditionError("QMatrix: vector dimension mismatch");
  }
  QVector r(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    Quaternion s;
    for (int c = 0; c < n_; ++c) s += (*this)(i, c) * x[static_cast<std::size_t>(c)];
    r[static_cast<std::size_t>(i)] = s;
  }
  return r;
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(QMatrix a, double s) { return a *= s; }
QMatrix operator*(double s, QMatrix a) { return a *= s; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  require_same_n(a, b, "QMatrix::operator*");
  const int n = a.n();
  QMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < n; ++t) {
      const Quaternion& ait = a(i, t);
      if (ait == Quaternion()) continue;
      for (int c = 0; c < n; ++c) r(i, c) += ait * b(t, c);
    }
  }
  return r;
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix r(a.n());
  for (int i = 0; i < a.n(); ++i) {
    for (int c = 0; c < a.n(); ++c) r(i, c) = a(c, i).conj();
  }
  return r;
}

OperatorFlags classify(const QMatrix& a, double tol) {
  const QMatrix astar = adjoint(a);
  OperatorFlags f;
  f.normal = frobenius_norm(astar * a - a * astar) <= tol;
  f.self_adjoint = frobenius_norm(a - astar) <= tol;
  f.anti_self_adjoint = frobenius_norm(a + astar) <= tol;
  f.unitary = frobenius_norm(astar * a - QMatrix::identity(a.n())) <= tol;
  if (f.self_adjoint) {
    const ComplexMatrix m = chi_embed(a, Frame::standard());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    f.positive = es.info() == Eigen::Success && es.eigenvalues().minCoeff() >= -tol;
  }
  return f;
}

QMatrix delta_q(const QMatrix& t, const Quaternion& q) {
  QMatrix r = t * t - t * (2.0 * q.re());
  const double qq = q.norm_sq();
  for (int i = 0; i < r.n(); ++i) r(i, i) += Quaternion(qq);
  return r;
}

ComplexMatrix chi_embed(const QMatrix& a, const Frame& fr) {
  const int n = a.n();
  ComplexMatrix m(2 * n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) {
      const auto q = frame_decompose(a(r, col), fr);
      const std::complex<double> c(q[0], q[1]);
      const std::complex<double> d(q[2], q[3]);
      m(2 * r, 2 * col) = c;
      m(2 * r, 2 * col + 1) = d;
      m(2 * r + 1, 2 * col) = -std::conj(d);
      m(2 * r + 1, 2 * col + 1) = std::conj(c);
    }
  }
  return m;
}

QMatrix chi_unembed(const ComplexMatrix& m, const Frame& fr, double tol) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0) {
    throw StructureError("chi_unembed: expected an even square matrix");
  }
  const int n = static_cast<int>(m.rows()) / 2;
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  QMatrix a(n);
  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) {
      const std::complex<double> c11 = m(2 * r, 2 * col);
      const std::complex<double> c12 = m(2 * r, 2 * col + 1);
      const std::complex<double> c21 = m(2 * r + 1, 2 * col);
      const std::complex<double> c22 = m(2 * r + 1, 2 * col + 1);
      if (std::abs(c22 - std::conj(c11)) > tol * scale ||
          std::abs(c21 + std::conj(c12)) > tol * scale) {
        throw StructureError("chi_unembed: block symmetry violated");
      }
      const std::complex<double> c = 0.5 * (c11 + std::conj(c22));
      const std::complex<double> d = 0.5 * (c12 - std::conj(c21));
      a(r, col) = frame_recompose({c.real(), c.imag(), d.real(), d.imag()}, fr);
    }
  }
  return a;
}

double op_norm(const QMatrix& a) {
  if (a.n() == 0) return 0.0;
  const ComplexMatrix m = chi_embed(a, Frame::standard());
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double frobenius_norm(const QMatrix& a) {
  double s = 0.0;
  for (const Quaternion& v : a.entries()) s += v.norm_sq();
  return std::sqrt(s);
}

double min_singular_value(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

std::complex<double> slice_complex(const Quaternion& q, const Frame& fr,
                                   double tol) {
  const auto c = frame_decompose(q, fr);
  if (std::hypot(c[2], c[3]) > tol * (1.0 + q.norm())) {
    throw SliceError("slice_complex: value leaves the slice");
  }
  return {c[0], c[1]};
}

Quaternion from_slice_complex(const std::complex<double>& z, const Frame& fr) {
  return Quaternion(z.real()) + fr.m() * z.imag();
}

}  // namespace qfc
