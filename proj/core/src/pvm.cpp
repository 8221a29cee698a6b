#include "qfc/pvm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qfc/errors.hpp"

namespace qfc {

namespace {

QVector random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  QVector v(n);
  for (std::size_t t = 0; t < n; ++t) v[t] = Quaternion{g(rng), g(rng), g(rng), g(rng)};
  return v;
}

ComplexVector random_complex_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(n);
  for (int t = 0; t < n; ++t) v[t] = std::complex<double>(g(rng), g(rng));
  return v;
}

}  // namespace

QPVM::QPVM(Frame frame, QMatrix basis, std::vector<SpectralAtom> atoms)
    : frame_(frame), basis_(std::move(basis)), atoms_(std::move(atoms)) {
  for (const SpectralAtom& atom : atoms_) {
    if (atom.projection.n() != basis_.n()) {
      throw PreconditionError("QPVM: atom dimension mismatch");
    }
  }
}

QMatrix QPVM::projection_of(const std::vector<std::size_t>& keys) const {
  QMatrix sum(n());
  for (std::size_t key : keys) {
    if (key >= atoms_.size()) throw PreconditionError("QPVM: bad atom key");
    sum += atoms_[key].projection;
  }
  return sum;
}

Quaternion QPVM::scalar_measure(const QVector& x, const QVector& y,
                                const std::vector<std::size_t>& keys) const {
  return inner(x, projection_of(keys) * y);
}

QMatrix QPVM::left_mult_operator(const Quaternion& q) const {
  const std::vector<Quaternion> d(static_cast<std::size_t>(n()), q);
  return basis_ * QMatrix::diagonal(d) * adjoint(basis_);
}

QPVM spectral_measure(const QMatrix& t, const Frame& fr) {
  return spectral_measure(eigendecompose(t, fr));
}

QPVM spectral_measure(const EigenSystem& es) {
  const int n = es.U.n();
  std::vector<SpectralAtom> atoms;
  for (const EigenvalueGroup& g : merge_eigenvalues(es.lambdas)) {
    QMatrix sel(n);
    for (int idx : g.members) sel(idx, idx) = Quaternion(1.0);
    atoms.push_back({g.representative, es.U * sel * adjoint(es.U)});
  }
  return QPVM(es.frame, es.U, std::move(atoms));
}

bool AxiomReport::pass(double tol) const {
  return completeness <= tol && self_adjointness <= tol && idempotence <= tol &&
         multiplicativity <= tol && additivity <= tol;
}

AxiomReport check_axioms(const QPVM& f,
                         const std::vector<std::pair<QVector, QVector>>& samples) {
  AxiomReport report;
  const int n = f.n();
  QMatrix total(n);
  for (const SpectralAtom& atom : f.atoms()) total += atom.projection;
  report.completeness = frobenius_norm(total - QMatrix::identity(n));

  for (const SpectralAtom& atom : f.atoms()) {
    const QMatrix& p = atom.projection;
    report.self_adjointness =
        std::max(report.self_adjointness, frobenius_norm(p - adjoint(p)));
    report.idempotence = std::max(report.idempotence, frobenius_norm(p * p - p));
  }
  for (std::size_t a = 0; a < f.atom_count(); ++a) {
    for (std::size_t b = 0; b < f.atom_count(); ++b) {
      if (a == b) continue;
      report.multiplicativity = std::max(
          report.multiplicativity,
          frobenius_norm(f.atoms()[a].projection * f.atoms()[b].projection));
    }
  }
  for (const auto& [x, y] : samples) {
    for (std::size_t a = 0; a < f.atom_count(); ++a) {
      for (std::size_t b = a + 1; b < f.atom_count(); ++b) {
        const Quaternion split = f.scalar_measure(x, y, {a}) +
                                 f.scalar_measure(x, y, {b});
        const Quaternion joint = f.scalar_measure(x, y, {a, b});
        report.additivity = std::max(report.additivity, (joint - split).norm());
      }
    }
  }
  return report;
}

QMatrix integrate(const QFunction& f, const QPVM& measure) {
  QMatrix acc(measure.n());
  for (const SpectralAtom& atom : measure.atoms()) {
    acc += measure.left_mult_operator(f(atom.lambda)) * atom.projection;
  }
  return acc;
}

double representation_check(const QMatrix& t, const QFunction& f,
                            const Frame& fr, int trials, std::uint64_t seed) {
  const EigenSystem es = eigendecompose(t, fr);
  const QPVM measure = spectral_measure(es);
  const QMatrix ft = full_calculus(es, f);
  const QMatrix integral = integrate(f, measure);

  const FrameSplit split = frame_split(f, fr);
  const QMatrix i1 = integrate(split.F1, measure);
  const QMatrix i2 = integrate(split.F2, measure);
  const QMatrix ln = measure.left_mult_operator(fr.n());

  std::mt19937_64 rng(seed);
  double worst = 0.0;
  const std::size_t n = static_cast<std::size_t>(t.n());
  for (int trial = 0; trial < trials; ++trial) {
    const QVector x = random_vector(n, rng);
    const QVector y = random_vector(n, rng);
    const Quaternion lhs = inner(x, ft * y);
    const Quaternion direct = inner(x, integral * y);
    const Quaternion split_form = inner(x, i1 * y) + inner(x, i2 * (ln * y));
    worst = std::max(worst, (lhs - direct).norm());
    worst = std::max(worst, (lhs - split_form).norm());
  }
  return worst;
}

CommutantReport commutant_check(const QMatrix& s, const QMatrix& t,
                                const QFunction& f, const QPVM& measure,
                                const Frame& fr, double pre_tol) {
  CommutantReport report;
  const QMatrix tstar = adjoint(t);
  report.commute_t = op_norm(s * t - t * s);
  report.commute_tstar = op_norm(s * tstar - tstar * s);
  report.applicable = report.commute_t < pre_tol && report.commute_tstar < pre_tol;
  if (!report.applicable) return report;

  const QMatrix ft = full_calculus(t, f, fr);
  report.calculus_residual = op_norm(s * ft - ft * s);
  for (const SpectralAtom& atom : measure.atoms()) {
    const QMatrix& p = atom.projection;
    report.measure_residual =
        std::max(report.measure_residual, op_norm(s * p - p * s));
  }
  return report;
}

UniquenessReport uniqueness_check(const QPVM& f, const QPVM& g, const QMatrix& t,
                                  const std::vector<QFunction>& f_suite,
                                  double tol, std::uint64_t seed) {
  UniquenessReport report;
  std::ostringstream diag;

  if (f.atom_count() != g.atom_count()) {
    diag << "atom count mismatch: " << f.atom_count() << " vs " << g.atom_count();
    report.diagnostics = diag.str();
    return report;
  }

  // Align supports by eigenvalue representative.
  const double align_tol = 1e-6;
  std::vector<bool> used(g.atom_count(), false);
  bool aligned = true;
  for (const SpectralAtom& fa : f.atoms()) {
    double best = align_tol;
    std::size_t pick = g.atom_count();
    for (std::size_t c = 0; c < g.atom_count(); ++c) {
      if (used[c]) continue;
      const double gap = (fa.lambda - g.atoms()[c].lambda).norm();
      if (gap < best) {
        best = gap;
        pick = c;
      }
    }
    if (pick == g.atom_count()) {
      aligned = false;
      diag << "no partner for atom at " << fa.lambda << "; ";
      continue;
    }
    used[pick] = true;
    report.max_atom_diff =
        std::max(report.max_atom_diff,
                 op_norm(fa.projection - g.atoms()[pick].projection));
  }

  // Both measures must reproduce the operator through the scalar identity.
  std::mt19937_64 rng(seed);
  const std::size_t n = static_cast<std::size_t>(t.n());
  const QMatrix recon_f = integrate(QFunction::identity(), f);
  const QMatrix recon_g = integrate(QFunction::identity(), g);
  report.max_representation_residual =
      std::max(op_norm(recon_f - t), op_norm(recon_g - t));

  // Integrals of suite members are only comparable across measures when
  // they are insensitive to the choice of slice structure on real
  // eigenspaces, i.e. real-valued at every real atom. (A function with a
  // nonreal value at a real spectral point sees the measure's own J.)
  for (const QFunction& fn : f_suite) {
    bool j_insensitive = true;
    for (const SpectralAtom& atom : f.atoms()) {
      if (atom.lambda.im_norm() < kNearRealTol &&
          fn(atom.lambda).im_norm() > 1e-12) {
        j_insensitive = false;
        break;
      }
    }
    if (!j_insensitive) continue;
    const QMatrix via_f = integrate(fn, f);
    const QMatrix via_g = integrate(fn, g);
    for (int trial = 0; trial < 8; ++trial) {
      const QVector x = random_vector(n, rng);
      const QVector y = random_vector(n, rng);
      const Quaternion a = inner(x, via_f * y);
      const Quaternion b = inner(x, via_g * y);
      report.max_representation_residual =
          std::max(report.max_representation_residual, (a - b).norm());
    }
  }

  report.equal = aligned && report.max_atom_diff < tol;
  if (!aligned) report.diagnostics = diag.str();
  return report;
}

double jordan_dE_identity_check(const QPVM& measure, const QFunction& f,
                                int samples, std::uint64_t seed) {
  const Frame& fr = measure.frame();
  if (f.slice_compat() == SliceCompat::kNone) {
    throw PreconditionError("jordan_dE_identity_check: needs slice-valued f");
  }
  // Complex values of f at the atoms; the complex measure acts on slice
  // coefficient vectors in the eigenbasis.
  std::vector<std::complex<double>> values;
  values.reserve(measure.atom_count());
  for (const SpectralAtom& atom : measure.atoms()) {
    values.push_back(slice_complex(f(atom.lambda), fr));
  }

  const int n = measure.n();
  // Eigenvalue index -> atom index map comes from reconstructing groups.
  // Atoms project in the eigenbasis onto disjoint index sets, so we recover
  // them from the diagonal of U* P U.
  std::vector<std::size_t> atom_of(static_cast<std::size_t>(n), 0);
  for (std::size_t a = 0; a < measure.atom_count(); ++a) {
    const QMatrix in_basis =
        adjoint(measure.basis()) * measure.atoms()[a].projection * measure.basis();
    for (int t = 0; t < n; ++t) {
      if (in_basis(t, t).re() > 0.5) atom_of[static_cast<std::size_t>(t)] = a;
    }
  }

  std::mt19937_64 rng(seed);
  double worst = 0.0;
  const Quaternion nq = fr.n();
  for (int trial = 0; trial < samples; ++trial) {
    const ComplexVector alpha = random_complex_vector(n, rng);
    const ComplexVector beta = random_complex_vector(n, rng);
    std::complex<double> s{};
    std::complex<double> s_rev{};
    for (int t = 0; t < n; ++t) {
      const std::complex<double> v = values[atom_of[static_cast<std::size_t>(t)]];
      s += std::conj(alpha[t]) * v * beta[t];
      s_rev += std::conj(beta[t]) * std::conj(v) * alpha[t];
    }
    const Quaternion lhs = nq.conj() * from_slice_complex(s, fr);
    const Quaternion rhs = -(from_slice_complex(s_rev, fr) * nq);
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

}  // namespace qfc
