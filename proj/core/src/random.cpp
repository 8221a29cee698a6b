#include "qfc/random.hpp"

#include <algorithm>
#include <cmath>

#include "qfc/errors.hpp"

namespace qfc {

Quaternion random_quaternion(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  return Quaternion{gauss(rng) * scale, gauss(rng) * scale, gauss(rng) * scale,
                    gauss(rng) * scale};
}

Quaternion random_unit_imaginary(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Quaternion q{0.0, gauss(rng), gauss(rng), gauss(rng)};
    const double n = q.im_norm();
    if (n > 1e-6) return q / n;
  }
}

Frame random_frame(std::mt19937_64& rng) {
  const Quaternion m = random_unit_imaginary(rng);
  while (true) {
    Quaternion raw = random_unit_imaginary(rng);
    // Orthogonalize the imaginary 3-vectors; anticommuting = perpendicular.
    const double dot = raw.x * m.x + raw.y * m.y + raw.z * m.z;
    raw -= m * dot;
    const double n = raw.im_norm();
    if (n > 1e-6) {
      return Frame(ImaginaryUnit(m), ImaginaryUnit(raw / n));
    }
  }
}

QVector random_qvector(std::size_t n, std::mt19937_64& rng) {
  QVector v(n);
  for (std::size_t t = 0; t < n; ++t) v[t] = random_quaternion(rng);
  return v;
}

QMatrix random_qmatrix(int n, std::mt19937_64& rng) {
  QMatrix a(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a(r, c) = random_quaternion(rng, 0.5);
  }
  return a;
}

QMatrix random_unitary(int n, std::mt19937_64& rng) {
  std::vector<QVector> cols;
  cols.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    QVector v = random_qvector(static_cast<std::size_t>(n), rng);
    // Two Gram-Schmidt passes; coefficients act from the right.
    for (int pass = 0; pass < 2; ++pass) {
      for (const QVector& u : cols) v -= u * inner(u, v);
    }
    const double norm = v.norm();
    if (norm < 1e-8) {
      --c;  // essentially impossible; redraw
      continue;
    }
    cols.push_back(v * (1.0 / norm));
  }
  return QMatrix::from_columns(cols);
}

std::vector<Quaternion> random_plus_spectrum(int n, const Frame& fr,
                                             std::mt19937_64& rng,
                                             const SpectrumSpec& spec) {
  std::uniform_real_distribution<double> ure(spec.re_min, spec.re_max);
  std::uniform_real_distribution<double> urad(spec.rad_min, spec.rad_max);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int distinct = spec.distinct > 0 ? std::min(spec.distinct, n) : n;

  std::vector<SphereClass> classes;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    classes.clear();
    for (int c = 0; c < distinct; ++c) {
      const bool real = u01(rng) < spec.real_prob;
      classes.push_back({ure(rng), real ? 0.0 : urad(rng)});
    }
    if (spec.min_separation <= 0.0) break;
    bool ok = true;
    for (std::size_t a = 0; a < classes.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        if (classes[a].distance(classes[b]) < spec.min_separation) {
          ok = false;
          break;
        }
      }
    }
    if (ok) break;
    if (attempt == 9999) {
      throw PreconditionError("random_plus_spectrum: separation unreachable");
    }
  }

  std::vector<Quaternion> lambdas;
  lambdas.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    const SphereClass& cls = classes[static_cast<std::size_t>(t) % classes.size()];
    lambdas.push_back(cls.representative(fr.m()));
  }
  return lambdas;
}

QMatrix normal_from_spectrum(const std::vector<Quaternion>& lambdas,
                             std::mt19937_64& rng) {
  const int n = static_cast<int>(lambdas.size());
  const QMatrix u = random_unitary(n, rng);
  return u * QMatrix::diagonal(lambdas) * adjoint(u);
}

QMatrix random_normal(int n, const Frame& fr, std::mt19937_64& rng,
                      const SpectrumSpec& spec,
                      std::vector<Quaternion>* lambdas_out) {
  std::vector<Quaternion> lambdas = random_plus_spectrum(n, fr, rng, spec);
  QMatrix t = normal_from_spectrum(lambdas, rng);
  if (lambdas_out) *lambdas_out = std::move(lambdas);
  return t;
}

QMatrix random_star_polynomial(const QMatrix& t, std::mt19937_64& rng,
                               int max_degree) {
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  const QMatrix tstar = adjoint(t);
  const int n = t.n();
  QMatrix acc(n);
  const double c0 = uc(rng);
  for (int d = 0; d < n; ++d) acc(d, d) = Quaternion(c0);
  QMatrix power_t = QMatrix::identity(n);
  for (int s = 1; s <= max_degree; ++s) {
    power_t = power_t * t;
    QMatrix mixed = power_t;
    acc += mixed * uc(rng);
    for (int r = 1; r <= max_degree - s; ++r) {
      mixed = mixed * tstar;
      acc += mixed * uc(rng);
    }
  }
  QMatrix power_s = QMatrix::identity(n);
  for (int s = 1; s <= max_degree; ++s) {
    power_s = power_s * tstar;
    acc += power_s * uc(rng);
  }
  return acc;
}

}  // namespace qfc
