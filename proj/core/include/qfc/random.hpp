#pragma once

#include <random>
#include <vector>

#include "qfc/qmatrix.hpp"

namespace qfc {

// Deterministic random fixtures shared by the tests, the verification
// command and the benchmarks. Everything is seeded explicitly.

Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0);
Quaternion random_unit_imaginary(std::mt19937_64& rng);
Frame random_frame(std::mt19937_64& rng);
QVector random_qvector(std::size_t n, std::mt19937_64& rng);
QMatrix random_qmatrix(int n, std::mt19937_64& rng);

/// Haar-ish random unitary from Gram-Schmidt over the quaternions.
QMatrix random_unitary(int n, std::mt19937_64& rng);

/// Shape of a random spectrum in upper-half-slice coordinates.
struct SpectrumSpec {
  double re_min = -1.5;
  double re_max = 1.5;
  double rad_max = 1.2;
  /// Radius floor for nonreal classes; real classes always have rad 0.
  double rad_min = 0.05;
  double real_prob = 0.3;
  /// Minimum pairwise (re, rad) distance between distinct classes; 0 = off.
  double min_separation = 0.0;
  /// Number of distinct classes; 0 means n (all simple).
  int distinct = 0;
};

/// Eigenvalue representatives in the frame's upper half slice.
std::vector<Quaternion> random_plus_spectrum(int n, const Frame& fr,
                                             std::mt19937_64& rng,
                                             const SpectrumSpec& spec = {});

/// Normal operator with prescribed eigenvalues and a random eigenbasis.
QMatrix normal_from_spectrum(const std::vector<Quaternion>& lambdas,
                             std::mt19937_64& rng);

/// Random normal operator; optionally reports the spectrum used.
QMatrix random_normal(int n, const Frame& fr, std::mt19937_64& rng,
                      const SpectrumSpec& spec = {},
                      std::vector<Quaternion>* lambdas_out = nullptr);

/// Real-coefficient polynomial in T and T*; always lies in the commutant.
QMatrix random_star_polynomial(const QMatrix& t, std::mt19937_64& rng,
                               int max_degree = 2);

}  // namespace qfc
