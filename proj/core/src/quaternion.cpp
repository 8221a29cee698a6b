#include "qfc/quaternion.hpp"

#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qfc/errors.hpp"

namespace qfc {

Quaternion inverse(const Quaternion& q) {
  const double n2 = q.norm_sq();
  if (n2 == 0.0) {
    throw std::domain_error("inverse: zero quaternion is not invertible");
  }
  return q.conj() / n2;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ')';
}

ImaginaryUnit::ImaginaryUnit(const Quaternion& q, double tol) {
  const double imn = q.im_norm();
  if (imn <= 0.0) {
    throw PreconditionError("ImaginaryUnit: vanishing imaginary part");
  }
  if (std::abs(q.w) > tol * q.norm()) {
    throw PreconditionError("ImaginaryUnit: axis has a nonzero real part");
  }
  axis_ = Quaternion{0.0, q.x / imn, q.y / imn, q.z / imn};
}

Frame::Frame(const ImaginaryUnit& m, const ImaginaryUnit& n, double tol)
    : m_(m.value()), n_(n.value()), mn_(m.value() * n.value()) {
  const double anticomm = (m_ * n_ + n_ * m_).norm();
  if (anticomm > tol) {
    throw PreconditionError("Frame: axes do not anticommute");
  }
}

Frame Frame::standard() { return Frame(ImaginaryUnit::i(), ImaginaryUnit::j()); }

bool SphereClass::contains(const Quaternion& q, double tol) const {
  const SphereClass c = sphere_class_of(q);
  return distance(c) <= tol;
}

SphereClass sphere_class_of(const Quaternion& q) {
  double rad = q.im_norm();
  if (rad < kNearRealTol) rad = 0.0;
  return {q.re(), rad};
}

std::array<double, 4> frame_decompose(const Quaternion& q, const Frame& fr) {
  // q = q0 + q1 m + q2 n + q3 mn with real coefficients; each coefficient is
  // read off by right-multiplying with the corresponding axis and taking the
  // real part, since re(u v) = -<im u, im v> for imaginary units.
  return {q.re(), -(q * fr.m()).re(), -(q * fr.n()).re(), -(q * fr.mn()).re()};
}

Quaternion frame_recompose(const std::array<double, 4>& c, const Frame& fr) {
  return Quaternion(c[0]) + fr.m() * c[1] + fr.n() * c[2] + fr.mn() * c[3];
}

std::vector<SphereClass> circularize(const std::vector<Quaternion>& points) {
  std::vector<SphereClass> classes;
  for (const Quaternion& p : points) {
    const SphereClass c = sphere_class_of(p);
    bool seen = false;
    for (const SphereClass& existing : classes) {
      if (existing.distance(c) <= kNearRealTol) {
        seen = true;
        break;
      }
    }
    if (!seen) classes.push_back(c);
  }
  return classes;
}

std::vector<Quaternion> sample_sphere_class(const SphereClass& c, int count) {
  if (count < 1) {
    throw PreconditionError("sample_sphere_class: count must be positive");
  }
  std::vector<Quaternion> samples;
  samples.reserve(static_cast<std::size_t>(count));
  if (c.rad == 0.0) {
    samples.assign(static_cast<std::size_t>(count), Quaternion(c.re));
    return samples;
  }
  static constexpr std::array<Quaternion, 6> kAxes = {
      Quaternion{0, 1, 0, 0},  Quaternion{0, -1, 0, 0}, Quaternion{0, 0, 1, 0},
      Quaternion{0, 0, -1, 0}, Quaternion{0, 0, 0, 1},  Quaternion{0, 0, 0, -1}};
  for (int t = 0; t < count && t < 6; ++t) {
    samples.push_back(c.representative(kAxes[static_cast<std::size_t>(t)]));
  }
  const int extra = count - 6;
  // Fibonacci lattice on the unit sphere of imaginary axes.
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int t = 0; t < extra; ++t) {
    const double zc = 1.0 - 2.0 * (t + 0.5) / extra;
    const double r = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    const double phi = golden_angle * t;
    const Quaternion axis{0.0, r * std::cos(phi), r * std::sin(phi), zc};
    samples.push_back(c.representative(axis));
  }
  return samples;
}

}  // namespace qfc
