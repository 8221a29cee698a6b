#include "qfc/oracle.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

#include "qfc/errors.hpp"

namespace qfc {

namespace {

// Defect score evaluated through the embedded matrix: cache chi(T) and
// chi(T)^2 once, then each probe assembles a small complex matrix and takes
// its smallest singular value.
class DefectScore {
 public:
  DefectScore(const QMatrix& t, const Frame& fr, int sphere_samples)
      : m_(chi_embed(t, fr)), m2_(m_ * m_), samples_(std::max(1, sphere_samples)) {}

  double operator()(double re, double rad) const {
    // The defect depends on the probe only through its sphere class, so all
    // axis samples score identically; the loop keeps the min-over-samples
    // contract honest.
    double best = std::numeric_limits<double>::infinity();
    const std::vector<Quaternion> probes =
        sample_sphere_class(SphereClass{re, std::max(rad, 0.0)}, samples_);
    for (const Quaternion& q : probes) {
      const ComplexMatrix d =
          m2_ - (2.0 * q.re()) * m_ +
          q.norm_sq() * ComplexMatrix::Identity(m_.rows(), m_.cols());
      best = std::min(best, min_singular_value(d));
    }
    return best;
  }

 private:
  ComplexMatrix m_;
  ComplexMatrix m2_;
  int samples_;
};

struct GridPoint {
  int ia = 0;
  int ir = 0;
  double score = 0.0;
};

}  // namespace

void ScanGrid::validate() const {
  if (re_step <= 0.0 || rad_step <= 0.0) {
    throw PreconditionError("ScanGrid: steps must be positive");
  }
  if (re_max < re_min || rad_max < rad_min || rad_min < 0.0) {
    throw PreconditionError("ScanGrid: empty or negative window");
  }
  if (sphere_samples < 1) {
    throw PreconditionError("ScanGrid: need at least one sphere sample");
  }
}

ScanGrid ScanGrid::for_operator(const QMatrix& t, double step,
                                int sphere_samples) {
  const double radius = op_norm(t) + 2.0 * step + 0.1;
  ScanGrid g;
  g.re_min = -radius;
  g.re_max = radius;
  g.re_step = step;
  g.rad_min = 0.0;
  g.rad_max = radius;
  g.rad_step = step;
  g.sphere_samples = sphere_samples;
  return g;
}

double delta_min_sv(const QMatrix& t, const Quaternion& q, const Frame& fr) {
  return min_singular_value(chi_embed(delta_q(t, q), fr));
}

std::vector<SphereClass> brute_spectrum(const QMatrix& t, const ScanGrid& grid,
                                        const Frame& fr, int refine_depth) {
  grid.validate();
  const DefectScore score(t, fr, grid.sphere_samples);

  const int na = static_cast<int>(std::floor((grid.re_max - grid.re_min) / grid.re_step)) + 1;
  const int nr = static_cast<int>(std::floor((grid.rad_max - grid.rad_min) / grid.rad_step)) + 1;
  std::vector<double> values(static_cast<std::size_t>(na) * nr);
  auto at = [&](int ia, int ir) -> double& {
    return values[static_cast<std::size_t>(ia) * nr + ir];
  };
  for (int ia = 0; ia < na; ++ia) {
    const double a = grid.re_min + ia * grid.re_step;
    for (int ir = 0; ir < nr; ++ir) {
      at(ia, ir) = score(a, grid.rad_min + ir * grid.rad_step);
    }
  }

  // Local minima over the 8-neighborhood; out-of-window counts as +inf.
  std::vector<GridPoint> minima;
  for (int ia = 0; ia < na; ++ia) {
    for (int ir = 0; ir < nr; ++ir) {
      const double v = at(ia, ir);
      bool is_min = true;
      for (int da = -1; da <= 1 && is_min; ++da) {
        for (int dr = -1; dr <= 1; ++dr) {
          if (da == 0 && dr == 0) continue;
          const int ja = ia + da;
          const int jr = ir + dr;
          if (ja < 0 || ja >= na || jr < 0 || jr >= nr) continue;
          if (at(ja, jr) < v) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) minima.push_back({ia, ir, v});
    }
  }

  const double threshold = 1e-6 * (1.0 + std::pow(op_norm(t), 2));

  std::vector<SphereClass> found;
  for (const GridPoint& seed : minima) {
    double a = grid.re_min + seed.ia * grid.re_step;
    double r = grid.rad_min + seed.ir * grid.rad_step;
    double best = seed.score;
    double step = std::max(grid.re_step, grid.rad_step);
    for (int depth = 0; depth < refine_depth; ++depth) {
      bool moved = true;
      while (moved) {
        moved = false;
        for (int da = -1; da <= 1; ++da) {
          for (int dr = -1; dr <= 1; ++dr) {
            if (da == 0 && dr == 0) continue;
            const double ca = a + da * step;
            const double cr = std::max(0.0, r + dr * step);
            const double v = score(ca, cr);
            if (v < best) {
              best = v;
              a = ca;
              r = cr;
              moved = true;
            }
          }
        }
      }
      step *= 0.5;
    }
    if (best >= threshold) continue;
    const SphereClass cls{a, r < 1e-7 ? 0.0 : r};
    bool duplicate = false;
    for (SphereClass& existing : found) {
      if (existing.distance(cls) < 1e-3) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) found.push_back(cls);
  }
  std::sort(found.begin(), found.end(), [](const SphereClass& x, const SphereClass& y) {
    return x.re != y.re ? x.re < y.re : x.rad < y.rad;
  });
  return found;
}

QMatrix direct_poly(const QMatrix& t, const std::vector<double>& coeffs) {
  const int n = t.n();
  QMatrix acc(n);
  if (coeffs.empty()) return acc;
  for (std::size_t idx = coeffs.size(); idx-- > 0;) {
    acc = acc * t;
    for (int d = 0; d < n; ++d) acc(d, d) += Quaternion(coeffs[idx]);
  }
  return acc;
}

QMatrix chi_exp(const QMatrix& t, const Frame& fr) {
  const ComplexMatrix m = chi_embed(t, fr);
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  double scaled = norm;
  while (scaled > 0.5) {
    scaled *= 0.5;
    ++squarings;
  }
  const ComplexMatrix a = m / std::pow(2.0, squarings);
  ComplexMatrix term = ComplexMatrix::Identity(m.rows(), m.cols());
  ComplexMatrix sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    if (term.norm() < 1e-18 * std::max(1.0, sum.norm())) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return chi_unembed(sum, fr, 1e-8);
}

}  // namespace qfc
