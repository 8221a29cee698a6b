#pragma once

#include <vector>

#include "qfc/qmatrix.hpp"

namespace qfc {

/// Scan window over (re, rad) class coordinates plus the number of axis
/// samples taken per candidate class.
struct ScanGrid {
  double re_min = -1.0;
  double re_max = 1.0;
  double re_step = 0.04;
  double rad_min = 0.0;
  double rad_max = 1.0;
  double rad_step = 0.04;
  int sphere_samples = 1;

  void validate() const;

  /// Window covering the closed ball of radius ||T|| with a margin.
  static ScanGrid for_operator(const QMatrix& t, double step = 0.04,
                               int sphere_samples = 1);
};

/// Brute-force spherical spectrum: scan the grid for local minima of the
/// smallest singular value of the embedded defect operator, descend each
/// minimum with step halving, and keep refined points whose defect falls
/// below an absolute threshold of 1e-6 (1 + ||T||^2). Never touches the
/// eigendecomposition path.
std::vector<SphereClass> brute_spectrum(const QMatrix& t, const ScanGrid& grid,
                                        const Frame& fr, int refine_depth = 22);

/// Smallest singular value of the embedded defect operator at q; the
/// membership score behind the scan.
double delta_min_sv(const QMatrix& t, const Quaternion& q, const Frame& fr);

/// Horner evaluation of a real-coefficient polynomial in T by plain matrix
/// products; independent of any eigendecomposition.
QMatrix direct_poly(const QMatrix& t, const std::vector<double>& coeffs);

/// Exponential through the embedding: scaling-and-squaring Taylor series of
/// the embedded matrix, mapped back. Throws StructureError if the result
/// loses the embedding symmetry.
QMatrix chi_exp(const QMatrix& t, const Frame& fr);

}  // namespace qfc
