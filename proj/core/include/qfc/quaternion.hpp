#pragma once

#include <array>
#include <cmath>
#include <iosfwd>
#include <vector>

namespace qfc {

/// Element of the real quaternion algebra, q = w + x*i + y*j + z*k.
///
/// Products follow i*i = j*j = k*k = i*j*k = -1, hence ij = k, jk = i,
/// ki = j. Values are plain aggregates; every operation returns a new
/// quaternion, nothing mutates in place except the compound operators.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  static Quaternion from_array(const std::array<double, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
  }
  std::array<double, 4> to_array() const { return {w, x, y, z}; }

  double re() const { return w; }
  Quaternion im() const { return {0.0, x, y, z}; }
  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }
  double im_norm() const { return std::sqrt(x * x + y * y + z * z); }

  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Quaternion& operator*=(double s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  Quaternion& operator/=(double s) { return *this *= 1.0 / s; }

  bool operator==(const Quaternion&) const = default;
};

inline Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
inline Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
inline Quaternion operator*(Quaternion a, double s) { return a *= s; }
inline Quaternion operator*(double s, Quaternion a) { return a *= s; }
inline Quaternion operator/(Quaternion a, double s) { return a /= s; }
inline Quaternion operator+(Quaternion a, double s) {
  a.w += s;
  return a;
}
inline Quaternion operator+(double s, Quaternion a) {
  a.w += s;
  return a;
}
inline Quaternion operator-(Quaternion a, double s) {
  a.w -= s;
  return a;
}
inline Quaternion operator-(double s, const Quaternion& a) {
  return Quaternion(s) - a;
}

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

/// Multiplicative inverse conj(q) / |q|^2. Throws std::domain_error on the
/// zero quaternion.
Quaternion inverse(const Quaternion& q);

inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol) {
  return (a - b).norm() <= tol;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Unit purely imaginary quaternion: an axis on the imaginary unit sphere.
/// Construction normalizes the imaginary part and rejects inputs with a
/// significant real component.
class ImaginaryUnit {
 public:
  explicit ImaginaryUnit(const Quaternion& q, double tol = 1e-9);

  static ImaginaryUnit i() { return ImaginaryUnit(Quaternion::unit_i()); }
  static ImaginaryUnit j() { return ImaginaryUnit(Quaternion::unit_j()); }
  static ImaginaryUnit k() { return ImaginaryUnit(Quaternion::unit_k()); }

  const Quaternion& value() const { return axis_; }

 private:
  Quaternion axis_;
};

/// An anticommuting pair (m, n) of imaginary units; m*n completes it to an
/// oriented orthogonal triple, so (1, m, n, mn) is a real basis of the
/// algebra.
class Frame {
 public:
  Frame(const ImaginaryUnit& m, const ImaginaryUnit& n, double tol = 1e-9);

  /// The (i, j) frame with mn = k.
  static Frame standard();

  const Quaternion& m() const { return m_; }
  const Quaternion& n() const { return n_; }
  const Quaternion& mn() const { return mn_; }

 private:
  Quaternion m_, n_, mn_;
};

/// Imaginary parts smaller than this collapse to zero when forming sphere
/// classes, so real spectral points do not turn into spurious spheres.
inline constexpr double kNearRealTol = 1e-12;

/// Similarity class of a quaternion: all p with re(p) = re and |im(p)| = rad.
/// rad = 0 collapses the class to a single real point.
struct SphereClass {
  double re = 0.0;
  double rad = 0.0;

  Quaternion representative(const Quaternion& axis) const {
    return Quaternion(re) + axis * rad;
  }
  bool contains(const Quaternion& q, double tol) const;
  double distance(const SphereClass& o) const {
    return std::hypot(re - o.re, rad - o.rad);
  }
  bool operator==(const SphereClass&) const = default;
};

SphereClass sphere_class_of(const Quaternion& q);

/// Coordinates of q in the real basis (1, m, n, mn):
/// q = c[0] + c[1] m + c[2] n + c[3] mn.
std::array<double, 4> frame_decompose(const Quaternion& q, const Frame& fr);
Quaternion frame_recompose(const std::array<double, 4>& c, const Frame& fr);

/// Sphere classes swept by a set of slice points, one class per distinct
/// (re, |im|) pair.
std::vector<SphereClass> circularize(const std::vector<Quaternion>& points);

/// Deterministic samples of a sphere class. The first six samples of a
/// nondegenerate class walk the signed coordinate axes +/-i, +/-j, +/-k;
/// further samples follow a Fibonacci lattice on the axis sphere.
std::vector<Quaternion> sample_sphere_class(const SphereClass& c, int count);

}  // namespace qfc
