#include "qfc/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "qfc/errors.hpp"

namespace qfc {

namespace {

// Antilinear symmetry of the embedding: w -> Omega conj(w), where Omega is
// the embedded image of n * I. Maps an eigenvector of the embedded matrix
// to one of the conjugate eigenvalue and squares to -1.
ComplexVector omega_conj(const ComplexVector& w) {
  ComplexVector r(w.size());
  for (Eigen::Index t = 0; t + 1 < w.size(); t += 2) {
    r[t] = std::conj(w[t + 1]);
    r[t + 1] = -std::conj(w[t]);
  }
  return r;
}

// Quaternionic column recovered from an embedded eigenvector:
// x_r = w_{2r} - conj(w_{2r+1}) n, written in the frame's real basis.
QVector unembed_vector(const ComplexVector& w, const Frame& fr) {
  const std::size_t n = static_cast<std::size_t>(w.size()) / 2;
  QVector x(n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::complex<double> a = w[2 * static_cast<Eigen::Index>(r)];
    const std::complex<double> b = w[2 * static_cast<Eigen::Index>(r) + 1];
    x[r] = frame_recompose({a.real(), a.imag(), -b.real(), b.imag()}, fr);
  }
  return x;
}

struct Candidate {
  ComplexVector w;
  double a = 0.0;
  double b = 0.0;
};

double rayleigh(const ComplexMatrix& h, const ComplexVector& w) {
  return std::real(w.dot(h * w));
}

// Rotate an orthonormal block so that the compression of h becomes
// diagonal; returns the sorted compressed eigenvalues. Small solve, so
// nearly coincident values inside the block are resolved to machine
// precision instead of leaning on the outer solver's gaps.
Eigen::VectorXd rediagonalize(ComplexMatrix& block, const ComplexMatrix& h) {
  ComplexMatrix compressed = block.adjoint() * h * block;
  compressed = 0.5 * (compressed + compressed.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(compressed);
  if (es.info() != Eigen::Success) {
    throw ConvergenceError("eigendecompose: block solve failed");
  }
  block = block * es.eigenvectors();
  return es.eigenvalues();
}

// Select one vector per conjugate pair inside a subspace of (numerically)
// real eigenvalue: walk the pool in order, remove each pick together with
// its antilinear partner, and re-orthonormalize what remains. Exactly one
// pool column must collapse per round. The selections and their
// unembeddings stay orthonormal in the quaternionic sense because every
// later pick is explicitly orthogonal to all earlier {w, Jw} pairs.
void select_real_pairs(std::vector<ComplexVector> pool, const ComplexMatrix& h1,
                       std::vector<Candidate>& out) {
  while (!pool.empty()) {
    if (pool.size() == 1) {
      throw ConvergenceError("eigendecompose: unpaired real eigenvector");
    }
    const ComplexVector w = pool.front().normalized();
    out.push_back({w, rayleigh(h1, w), 0.0});
    const ComplexVector jw = omega_conj(w);

    std::vector<ComplexVector> rest;
    rest.reserve(pool.size() - 2);
    for (std::size_t c = 1; c < pool.size(); ++c) {
      ComplexVector v = pool[c];
      for (int pass = 0; pass < 2; ++pass) {
        v -= w * w.dot(v);
        v -= jw * jw.dot(v);
        for (const ComplexVector& u : rest) v -= u * u.dot(v);
      }
      const double norm = v.norm();
      if (norm > 0.5) rest.push_back(v / norm);
    }
    if (rest.size() != pool.size() - 2) {
      throw ConvergenceError("eigendecompose: real-pair removal lost track");
    }
    pool = std::move(rest);
  }
}

}  // namespace

bool SphericalSpectrum::contains(const SphereClass& c, double tol) const {
  return std::any_of(classes.begin(), classes.end(), [&](const SpectrumEntry& e) {
    return e.cls.distance(c) <= tol;
  });
}

EigenSystem eigendecompose(const QMatrix& t, const Frame& fr,
                           const EigenOptions& opt) {
  const int n = t.n();
  if (n == 0) throw PreconditionError("eigendecompose: empty operator");
  if (!classify(t, opt.normal_tol).normal) {
    throw PreconditionError("eigendecompose: operator is not normal");
  }

  const ComplexMatrix m = chi_embed(t, fr);
  const Eigen::Index big = 2 * n;
  const ComplexMatrix h1 = 0.5 * (m + m.adjoint());
  const ComplexMatrix h2 = std::complex<double>(0.0, -0.5) * (m - m.adjoint());

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es1(h1);
  if (es1.info() != Eigen::Success) {
    throw ConvergenceError("eigendecompose: Hermitian solve failed");
  }
  const Eigen::VectorXd avals = es1.eigenvalues();
  const ComplexMatrix q = es1.eigenvectors();

  const double scale = 1.0 + m.norm();
  // Wide clustering in the real part: anything the outer solver might have
  // resolved poorly lands in one cluster, and the per-cell re-solve below
  // recovers the split to machine precision.
  const double cluster_tol = 1e-6 * scale;
  const double cell_tol = 4e-10 * scale;
  const double real_tol = 2e-10 * scale;

  std::vector<Candidate> selected;
  selected.reserve(static_cast<std::size_t>(n));

  Eigen::Index start = 0;
  while (start < big) {
    Eigen::Index end = start + 1;
    while (end < big && avals[end] - avals[end - 1] <= cluster_tol) ++end;
    const Eigen::Index k = end - start;

    // The cluster span is (near-)invariant under the imaginary part;
    // diagonalize it there, then split into cells of equal imaginary value.
    ComplexMatrix w = q.middleCols(start, k);
    const Eigen::VectorXd bvals = rediagonalize(w, h2);

    std::vector<ComplexVector> real_pool;
    Eigen::Index cell_start = 0;
    while (cell_start < k) {
      Eigen::Index cell_end = cell_start + 1;
      while (cell_end < k && bvals[cell_end] - bvals[cell_end - 1] <= cell_tol) {
        ++cell_end;
      }
      const double b = bvals.segment(cell_start, cell_end - cell_start).mean();
      if (b > real_tol) {
        // One conjugate-pair representative per cell vector; restore the
        // real-part split inside the cell exactly.
        ComplexMatrix cell = w.middleCols(cell_start, cell_end - cell_start);
        const Eigen::VectorXd cell_avals = rediagonalize(cell, h1);
        for (Eigen::Index c = 0; c < cell.cols(); ++c) {
          selected.push_back(
              {cell.col(c), cell_avals[c], rayleigh(h2, cell.col(c))});
        }
      } else if (b >= -real_tol) {
        for (Eigen::Index c = cell_start; c < cell_end; ++c) {
          real_pool.push_back(w.col(c));
        }
      }
      cell_start = cell_end;
    }

    if (real_pool.size() % 2 != 0) {
      throw ConvergenceError("eigendecompose: odd real eigenvalue pool");
    }
    if (!real_pool.empty()) {
      // Order the pool by the refined real part before pairing, so each
      // pick is pure in the real coordinate.
      ComplexMatrix pool(big, static_cast<Eigen::Index>(real_pool.size()));
      for (std::size_t c = 0; c < real_pool.size(); ++c) {
        pool.col(static_cast<Eigen::Index>(c)) = real_pool[c];
      }
      rediagonalize(pool, h1);
      std::vector<ComplexVector> ordered;
      ordered.reserve(real_pool.size());
      for (Eigen::Index c = 0; c < pool.cols(); ++c) ordered.push_back(pool.col(c));
      select_real_pairs(std::move(ordered), h1, selected);
    }
    start = end;
  }

  if (selected.size() != static_cast<std::size_t>(n)) {
    throw ConvergenceError("eigendecompose: conjugate pair selection failed");
  }

  std::stable_sort(selected.begin(), selected.end(),
                   [](const Candidate& lhs, const Candidate& rhs) {
                     if (lhs.a != rhs.a) return lhs.a < rhs.a;
                     return lhs.b < rhs.b;
                   });

  std::vector<QVector> cols;
  std::vector<Quaternion> lambdas;
  cols.reserve(selected.size());
  lambdas.reserve(selected.size());
  for (const Candidate& cand : selected) {
    cols.push_back(unembed_vector(cand.w, fr));
    lambdas.push_back(Quaternion(cand.a) + fr.m() * std::max(cand.b, 0.0));
  }

  EigenSystem es{QMatrix::from_columns(cols), std::move(lambdas), fr};
  const QMatrix gram = adjoint(es.U) * es.U - QMatrix::identity(n);
  if (frobenius_norm(gram) > 1e-10) {
    throw ConvergenceError("eigendecompose: eigenbasis lost orthonormality");
  }
  if (eigensystem_residual(t, es) > opt.residual_tol) {
    throw ConvergenceError("eigendecompose: residual above tolerance");
  }
  return es;
}

double eigensystem_residual(const QMatrix& t, const EigenSystem& es) {
  return frobenius_norm(t * es.U - es.U * QMatrix::diagonal(es.lambdas));
}

std::vector<EigenvalueGroup> merge_eigenvalues(
    const std::vector<Quaternion>& lambdas, double rel_tol) {
  const int n = static_cast<int>(lambdas.size());
  std::vector<int> parent(lambdas.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const double gap = (lambdas[static_cast<std::size_t>(a)] -
                          lambdas[static_cast<std::size_t>(b)])
                             .norm();
      const double sc = 1.0 + std::max(lambdas[static_cast<std::size_t>(a)].norm(),
                                       lambdas[static_cast<std::size_t>(b)].norm());
      if (gap <= rel_tol * sc) parent[static_cast<std::size_t>(find(a))] = find(b);
    }
  }
  std::vector<EigenvalueGroup> groups;
  for (int root = 0; root < n; ++root) {
    if (find(root) != root) continue;
    EigenvalueGroup g;
    for (int v = 0; v < n; ++v) {
      if (find(v) == root) g.members.push_back(v);
    }
    Quaternion mean;
    for (int v : g.members) mean += lambdas[static_cast<std::size_t>(v)];
    mean /= static_cast<double>(g.members.size());
    if (mean.im_norm() < kNearRealTol * (1.0 + mean.norm())) mean = Quaternion(mean.re());
    g.representative = mean;
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end(),
            [](const EigenvalueGroup& lhs, const EigenvalueGroup& rhs) {
              if (lhs.representative.re() != rhs.representative.re()) {
                return lhs.representative.re() < rhs.representative.re();
              }
              return lhs.representative.im_norm() < rhs.representative.im_norm();
            });
  return groups;
}

SphericalSpectrum spherical_spectrum(const QMatrix& t, const Frame& fr) {
  return spherical_spectrum(eigendecompose(t, fr));
}

SphericalSpectrum spherical_spectrum(const EigenSystem& es) {
  SphericalSpectrum spec;
  for (const EigenvalueGroup& g : merge_eigenvalues(es.lambdas)) {
    spec.classes.push_back({sphere_class_of(g.representative),
                            static_cast<int>(g.members.size())});
  }
  return spec;
}

std::vector<Quaternion> merged_plus_spectrum(const EigenSystem& es,
                                             double rel_tol) {
  std::vector<Quaternion> reps;
  for (const EigenvalueGroup& g : merge_eigenvalues(es.lambdas, rel_tol)) {
    reps.push_back(g.representative);
  }
  return reps;
}

QMatrix build_J(const EigenSystem& es) {
  const std::vector<Quaternion> d(es.lambdas.size(), es.frame.m());
  return es.U * QMatrix::diagonal(d) * adjoint(es.U);
}

QMatrix build_J(const QMatrix& t, const Frame& fr) {
  return build_J(eigendecompose(t, fr));
}

QMatrix build_Jprime(const EigenSystem& es) {
  const std::vector<Quaternion> d(es.lambdas.size(), es.frame.n());
  return es.U * QMatrix::diagonal(d) * adjoint(es.U);
}

ComplexMatrix restrict_plus(const QMatrix& s, const EigenSystem& es,
                            double tol) {
  if (s.n() != es.U.n()) {
    throw PreconditionError("restrict_plus: dimension mismatch");
  }
  const QMatrix j = build_J(es);
  const double comm = frobenius_norm(s * j - j * s);
  if (comm > tol * (1.0 + frobenius_norm(s))) {
    throw PreconditionError(
        "restrict_plus: operator does not commute with the slice structure");
  }
  const int n = s.n();
  const QMatrix in_basis = adjoint(es.U) * s * es.U;
  ComplexMatrix r(n, n);
  const double slice_tol = 1e-8;
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      r(row, col) = slice_complex(in_basis(row, col), es.frame, slice_tol);
    }
  }
  return r;
}

QMatrix extend_tilde(const ComplexMatrix& m, const EigenSystem& es) {
  const int n = es.U.n();
  if (m.rows() != n || m.cols() != n) {
    throw PreconditionError("extend_tilde: matrix must match the eigenbasis");
  }
  QMatrix mq(n);
  for (int row = 0; row < n; ++row) {
    for (int col = 0; col < n; ++col) {
      mq(row, col) = from_slice_complex(m(row, col), es.frame);
    }
  }
  return es.U * mq * adjoint(es.U);
}

}  // namespace qfc
