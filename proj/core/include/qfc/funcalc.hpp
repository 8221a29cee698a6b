#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qfc/spectral.hpp"

namespace qfc {

/// How a function relates to the slices of the algebra.
///   kNone      - no guarantee; only the two-component calculus applies.
///   kAllSlices - maps each slice into itself (identity, exp, real-valued
///                functions, ...), usable under any frame.
///   kAxis      - maps the spectrum into one fixed slice C_m.
enum class SliceCompat { kNone, kAllSlices, kAxis };

/// Evaluable continuous function on (a subset of) the quaternions, tagged
/// with its slice behaviour. Evaluation must be pure; the calculus only
/// consumes values at spectral points.
class QFunction {
 public:
  using Eval = std::function<Quaternion(const Quaternion&)>;

  QFunction(std::string name, Eval eval, SliceCompat compat = SliceCompat::kNone,
            std::optional<ImaginaryUnit> axis = std::nullopt);

  Quaternion operator()(const Quaternion& q) const { return eval_(q); }
  const std::string& name() const { return name_; }
  SliceCompat slice_compat() const { return compat_; }
  const std::optional<ImaginaryUnit>& slice_axis() const { return axis_; }

  /// True when the declaration guarantees values inside C_m of the frame.
  bool slice_compatible_with(const Frame& fr) const;

  /// Pointwise conjugate q -> conj(f(q)); slice behaviour is preserved.
  QFunction conjugated() const;

  // Builtin library.
  static QFunction identity();
  static QFunction constant(const Quaternion& c);
  static QFunction real_part();
  static QFunction im_magnitude();
  static QFunction conjugation();
  static QFunction exp_fn();
  static QFunction sqrt_fn(const Frame& fr);
  static QFunction monomial(int degree);
  /// p(q) = sum_t c_t q^t with coefficients in the m-slice of fr.
  static QFunction polynomial(const std::vector<Quaternion>& coeffs,
                              const Frame& fr);
  /// 1 on sphere classes inside the closed (re, rad) box, 0 elsewhere.
  static QFunction indicator(double re_min, double re_max, double rad_min,
                             double rad_max);
  /// The stock non-slice example: q = a + j b maps to (a + m b) + j (a - m b),
  /// with m taken from the frame.
  static QFunction eg1(const Frame& fr);

 private:
  std::string name_;
  Eval eval_;
  SliceCompat compat_;
  std::optional<ImaginaryUnit> axis_;
};

/// Unique decomposition of f along the frame: f = f0 + f1 m + f2 n + f3 mn
/// pointwise, regrouped as f = F1 + F2 n with slice-valued F1, F2.
struct FrameSplit {
  std::function<double(const Quaternion&)> f0, f1, f2, f3;
  QFunction F1, F2;
};

FrameSplit frame_split(const QFunction& f, const Frame& fr);

/// Conjugate-symmetric pair of component maps on a slice: S1 even and S2
/// odd under slice conjugation.
struct StemFunction {
  std::function<Quaternion(const Quaternion&)> s1;
  std::function<Quaternion(const Quaternion&)> s2;
};

/// Function induced on the circularization: a + j b -> S1(z) + j S2(z) with
/// z = a + m b. Verifies the stem symmetry at the given slice sample points
/// and throws std::domain_error when it fails.
QFunction induce_slice_function(const StemFunction& stem, const Frame& fr,
                                const std::vector<Quaternion>& slice_samples,
                                double tol = 1e-10);

/// Values of f at the eigenvalue representatives. When f declares a fixed
/// axis it must match the frame of the eigensystem.
std::vector<Quaternion> restrict_function(const QFunction& f,
                                          const EigenSystem& es);

/// Calculus for slice-compatible functions: the extension of the classical
/// calculus of the restricted operator, concretely U diag(f(lambda)) U*.
/// Values are checked to stay in the slice at every spectral point.
QMatrix cm_calculus(const EigenSystem& es, const QFunction& f);
QMatrix cm_calculus(const QMatrix& t, const QFunction& f, const Frame& fr);

/// Full calculus for arbitrary continuous f: split f = F1 + F2 n and form
/// F1(T) + F2(T) J'.
QMatrix full_calculus(const EigenSystem& es, const QFunction& f);
QMatrix full_calculus(const QMatrix& t, const QFunction& f, const Frame& fr);

/// Closed diagonal form U diag(f(lambda)) U*, used as an independent
/// cross-check of full_calculus.
QMatrix diagonal_calculus(const EigenSystem& es, const QFunction& f);

QMatrix poly_calculus(const QMatrix& t, const std::vector<Quaternion>& coeffs,
                      const Frame& fr);

/// || f(T)* - conj(f)(T) ||; small for slice-compatible f.
double adjoint_law_check(const QMatrix& t, const QFunction& f, const Frame& fr);

/// || f(T) J' - J' f(T)* ||; asserted for slice-valued f only.
double jprime_law_check(const QMatrix& t, const QFunction& f, const Frame& fr);

/// Slice-compatible builtins exercised by the verification suites.
std::vector<QFunction> builtin_slice_suite(const Frame& fr);
/// The slice suite plus the non-slice fixture.
std::vector<QFunction> builtin_suite(const Frame& fr);

/// Parse the function mini-language used by the command line:
///   identity | exp | conj | re | immag | sqrt | eg1
///   poly:[c0,c1,...]            (numbers or [w,x,y,z] arrays in the m-slice)
///   indicator:re0,re1,rad0,rad1
///   const:[w,x,y,z] | const:c
/// Throws DslError on anything malformed.
QFunction parse_function_dsl(const std::string& text, const Frame& fr);

}  // namespace qfc
