#include "qfc/funcalc.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qfc/errors.hpp"

namespace qfc {

namespace {

using nlohmann::json;

// Axis of the imaginary part, falling back to the given default for
// (near-)real arguments so slice-wise formulas stay total.
Quaternion im_axis_or(const Quaternion& q, const Quaternion& fallback) {
  const double b = q.im_norm();
  if (b < kNearRealTol) return fallback;
  return q.im() / b;
}

}  // namespace

QFunction::QFunction(std::string name, Eval eval, SliceCompat compat,
                     std::optional<ImaginaryUnit> axis)
    : name_(std::move(name)), eval_(std::move(eval)), compat_(compat),
      axis_(std::move(axis)) {
  if (compat_ == SliceCompat::kAxis && !axis_) {
    throw PreconditionError("QFunction: axis compatibility needs an axis");
  }
}

bool QFunction::slice_compatible_with(const Frame& fr) const {
  switch (compat_) {
    case SliceCompat::kAllSlices:
      return true;
    case SliceCompat::kAxis:
      // C_m = C_{-m}; only the axis line matters.
      return (axis_->value() - fr.m()).norm() <= 1e-9 ||
             (axis_->value() + fr.m()).norm() <= 1e-9;
    case SliceCompat::kNone:
      return false;
  }
  return false;
}

QFunction QFunction::conjugated() const {
  Eval inner = eval_;
  return QFunction("conj[" + name_ + "]",
                   [inner](const Quaternion& q) { return inner(q).conj(); },
                   compat_, axis_);
}

QFunction QFunction::identity() {
  return QFunction("identity", [](const Quaternion& q) { return q; },
                   SliceCompat::kAllSlices);
}

QFunction QFunction::constant(const Quaternion& c) {
  std::ostringstream name;
  name << "const" << c;
  if (c.im_norm() < kNearRealTol) {
    return QFunction(name.str(), [c](const Quaternion&) { return c; },
                     SliceCompat::kAllSlices);
  }
  return QFunction(name.str(), [c](const Quaternion&) { return c; },
                   SliceCompat::kAxis, ImaginaryUnit(c.im()));
}

QFunction QFunction::real_part() {
  return QFunction("re", [](const Quaternion& q) { return Quaternion(q.re()); },
                   SliceCompat::kAllSlices);
}

QFunction QFunction::im_magnitude() {
  return QFunction("immag",
                   [](const Quaternion& q) { return Quaternion(q.im_norm()); },
                   SliceCompat::kAllSlices);
}

QFunction QFunction::conjugation() {
  return QFunction("conj", [](const Quaternion& q) { return q.conj(); },
                   SliceCompat::kAllSlices);
}

QFunction QFunction::exp_fn() {
  return QFunction("exp",
                   [](const Quaternion& q) {
                     const double b = q.im_norm();
                     const double ea = std::exp(q.re());
                     if (b < kNearRealTol) return Quaternion(ea);
                     const Quaternion axis = q.im() / b;
                     return Quaternion(ea * std::cos(b)) +
                            axis * (ea * std::sin(b));
                   },
                   SliceCompat::kAllSlices);
}

QFunction QFunction::sqrt_fn(const Frame& fr) {
  const Quaternion m = fr.m();
  return QFunction("sqrt",
                   [m](const Quaternion& q) {
                     const double r = q.norm();
                     if (r == 0.0) return Quaternion();
                     const double b = q.im_norm();
                     // Negative reals need an axis; take the frame's, which
                     // keeps values in the upper half slice.
                     const Quaternion axis = im_axis_or(q, m);
                     const double theta = std::atan2(b, q.re());
                     const double rt = std::sqrt(r);
                     return Quaternion(rt * std::cos(0.5 * theta)) +
                            axis * (rt * std::sin(0.5 * theta));
                   },
                   SliceCompat::kAllSlices);
}

QFunction QFunction::monomial(int degree) {
  if (degree < 0) throw PreconditionError("monomial: negative degree");
  return QFunction("pow" + std::to_string(degree),
                   [degree](const Quaternion& q) {
                     Quaternion acc(1.0);
                     for (int t = 0; t < degree; ++t) acc = acc * q;
                     return acc;
                   },
                   SliceCompat::kAllSlices);
}

QFunction QFunction::polynomial(const std::vector<Quaternion>& coeffs,
                                const Frame& fr) {
  bool real_only = true;
  for (const Quaternion& c : coeffs) {
    const auto parts = frame_decompose(c, fr);
    if (std::hypot(parts[2], parts[3]) > 1e-12 * (1.0 + c.norm())) {
      throw PreconditionError("polynomial: coefficient leaves the slice");
    }
    if (std::abs(parts[1]) > 1e-12 * (1.0 + c.norm())) real_only = false;
  }
  auto eval = [coeffs](const Quaternion& q) {
    Quaternion acc;
    for (std::size_t t = coeffs.size(); t-- > 0;) {
      acc = acc * q + coeffs[t];
    }
    return acc;
  };
  if (real_only) {
    return QFunction("poly", eval, SliceCompat::kAllSlices);
  }
  return QFunction("poly", eval, SliceCompat::kAxis, ImaginaryUnit(fr.m()));
}

QFunction QFunction::indicator(double re_min, double re_max, double rad_min,
                               double rad_max) {
  return QFunction("indicator",
                   [=](const Quaternion& q) {
                     const SphereClass c = sphere_class_of(q);
                     const bool in = c.re >= re_min && c.re <= re_max &&
                                     c.rad >= rad_min && c.rad <= rad_max;
                     return Quaternion(in ? 1.0 : 0.0);
                   },
                   SliceCompat::kAllSlices);
}

QFunction QFunction::eg1(const Frame& fr) {
  const Quaternion m = fr.m();
  return QFunction("eg1",
                   [m](const Quaternion& q) {
                     const double a = q.re();
                     const double b = q.im_norm();
                     const Quaternion j = im_axis_or(q, m);
                     const Quaternion za = Quaternion(a) + m * b;
                     const Quaternion zb = Quaternion(a) - m * b;
                     return za + j * zb;
                   },
                   SliceCompat::kNone);
}

FrameSplit frame_split(const QFunction& f, const Frame& fr) {
  auto component = [f, fr](int idx) {
    return [f, fr, idx](const Quaternion& q) {
      return frame_decompose(f(q), fr)[static_cast<std::size_t>(idx)];
    };
  };
  QFunction f1("F1[" + f.name() + "]",
               [f, fr](const Quaternion& q) {
                 const auto c = frame_decompose(f(q), fr);
                 return Quaternion(c[0]) + fr.m() * c[1];
               },
               SliceCompat::kAxis, ImaginaryUnit(fr.m()));
  QFunction f2("F2[" + f.name() + "]",
               [f, fr](const Quaternion& q) {
                 const auto c = frame_decompose(f(q), fr);
                 return Quaternion(c[2]) + fr.m() * c[3];
               },
               SliceCompat::kAxis, ImaginaryUnit(fr.m()));
  return FrameSplit{component(0), component(1), component(2), component(3),
                    std::move(f1), std::move(f2)};
}

QFunction induce_slice_function(const StemFunction& stem, const Frame& fr,
                                const std::vector<Quaternion>& slice_samples,
                                double tol) {
  for (const Quaternion& z : slice_samples) {
    const Quaternion zbar = z.conj();
    const double even = (stem.s1(zbar) - stem.s1(z)).norm();
    const double odd = (stem.s2(zbar) + stem.s2(z)).norm();
    const double scale = 1.0 + stem.s1(z).norm() + stem.s2(z).norm();
    if (even > tol * scale || odd > tol * scale) {
      throw std::domain_error("induce_slice_function: stem symmetry violated");
    }
  }
  const Quaternion m = fr.m();
  auto s1 = stem.s1;
  auto s2 = stem.s2;
  return QFunction("slice",
                   [s1, s2, m](const Quaternion& q) {
                     const double a = q.re();
                     const double b = q.im_norm();
                     const Quaternion z = Quaternion(a) + m * b;
                     if (b < kNearRealTol) return s1(z);
                     const Quaternion j = q.im() / b;
                     return s1(z) + j * s2(z);
                   });
}

std::vector<Quaternion> restrict_function(const QFunction& f,
                                          const EigenSystem& es) {
  if (f.slice_compat() == SliceCompat::kAxis &&
      !f.slice_compatible_with(es.frame)) {
    throw SliceError("restrict_function: function is tied to another slice");
  }
  std::vector<Quaternion> values;
  values.reserve(es.lambdas.size());
  for (const Quaternion& lambda : es.lambdas) values.push_back(f(lambda));
  return values;
}

QMatrix cm_calculus(const EigenSystem& es, const QFunction& f) {
  if (!f.slice_compatible_with(es.frame)) {
    throw SliceError("cm_calculus: function is not declared slice-compatible");
  }
  const std::vector<Quaternion> values = restrict_function(f, es);
  const int n = es.U.n();
  ComplexMatrix diag = ComplexMatrix::Zero(n, n);
  for (int t = 0; t < n; ++t) {
    // Throws SliceError if a value leaves the slice at a spectral point.
    diag(t, t) = slice_complex(values[static_cast<std::size_t>(t)], es.frame);
  }
  return extend_tilde(diag, es);
}

QMatrix cm_calculus(const QMatrix& t, const QFunction& f, const Frame& fr) {
  return cm_calculus(eigendecompose(t, fr), f);
}

QMatrix full_calculus(const EigenSystem& es, const QFunction& f) {
  const FrameSplit split = frame_split(f, es.frame);
  const QMatrix a = cm_calculus(es, split.F1);
  const QMatrix b = cm_calculus(es, split.F2);
  return a + b * build_Jprime(es);
}

QMatrix full_calculus(const QMatrix& t, const QFunction& f, const Frame& fr) {
  return full_calculus(eigendecompose(t, fr), f);
}

QMatrix diagonal_calculus(const EigenSystem& es, const QFunction& f) {
  std::vector<Quaternion> values;
  values.reserve(es.lambdas.size());
  for (const Quaternion& lambda : es.lambdas) values.push_back(f(lambda));
  return es.U * QMatrix::diagonal(values) * adjoint(es.U);
}

QMatrix poly_calculus(const QMatrix& t, const std::vector<Quaternion>& coeffs,
                      const Frame& fr) {
  return cm_calculus(t, QFunction::polynomial(coeffs, fr), fr);
}

double adjoint_law_check(const QMatrix& t, const QFunction& f, const Frame& fr) {
  if (!f.slice_compatible_with(fr)) {
    throw PreconditionError("adjoint_law_check: needs a slice-compatible f");
  }
  const EigenSystem es = eigendecompose(t, fr);
  const QMatrix lhs = adjoint(full_calculus(es, f));
  const QMatrix rhs = full_calculus(es, f.conjugated());
  return op_norm(lhs - rhs);
}

double jprime_law_check(const QMatrix& t, const QFunction& f, const Frame& fr) {
  if (!f.slice_compatible_with(fr)) {
    throw PreconditionError("jprime_law_check: needs a slice-compatible f");
  }
  const EigenSystem es = eigendecompose(t, fr);
  const QMatrix ft = full_calculus(es, f);
  const QMatrix jp = build_Jprime(es);
  return op_norm(ft * jp - jp * adjoint(ft));
}

std::vector<QFunction> builtin_slice_suite(const Frame& fr) {
  std::vector<QFunction> suite;
  suite.push_back(QFunction::identity());
  suite.push_back(QFunction::real_part());
  suite.push_back(QFunction::im_magnitude());
  suite.push_back(QFunction::conjugation());
  suite.push_back(QFunction::exp_fn());
  suite.push_back(QFunction::sqrt_fn(fr));
  suite.push_back(QFunction::monomial(3));
  suite.push_back(QFunction::polynomial(
      {Quaternion(0.4) + fr.m() * 0.3, Quaternion(-0.5), fr.m() * 0.2}, fr));
  suite.push_back(QFunction::indicator(-0.5, 1.5, 0.0, 1.0));
  return suite;
}

std::vector<QFunction> builtin_suite(const Frame& fr) {
  std::vector<QFunction> suite = builtin_slice_suite(fr);
  suite.push_back(QFunction::eg1(fr));
  return suite;
}

namespace {

Quaternion quaternion_from_dsl_json(const json& jc) {
  if (jc.is_number()) return Quaternion(jc.get<double>());
  if (jc.is_array() && jc.size() == 4) {
    std::array<double, 4> a{};
    for (std::size_t t = 0; t < 4; ++t) {
      if (!jc[t].is_number()) throw DslError("coefficient entries must be numbers");
      a[t] = jc[t].get<double>();
    }
    return Quaternion::from_array(a);
  }
  throw DslError("coefficient must be a number or a 4-array");
}

std::vector<double> parse_number_list(const std::string& text,
                                      std::size_t expected) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw DslError("trailing characters in number");
    } catch (const DslError&) {
      throw;
    } catch (const std::exception&) {
      throw DslError("expected a number, got '" + item + "'");
    }
  }
  if (out.size() != expected) {
    throw DslError("expected " + std::to_string(expected) + " numbers");
  }
  return out;
}

}  // namespace

QFunction parse_function_dsl(const std::string& text, const Frame& fr) {
  const std::size_t colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);

  if (head == "identity") return QFunction::identity();
  if (head == "exp") return QFunction::exp_fn();
  if (head == "conj") return QFunction::conjugation();
  if (head == "re") return QFunction::real_part();
  if (head == "immag") return QFunction::im_magnitude();
  if (head == "sqrt") return QFunction::sqrt_fn(fr);
  if (head == "eg1") return QFunction::eg1(fr);

  if (head == "poly") {
    json jc = json::parse(rest, nullptr, false);
    if (jc.is_discarded() || !jc.is_array() || jc.empty()) {
      throw DslError("poly: expected a nonempty JSON array of coefficients");
    }
    std::vector<Quaternion> coeffs;
    coeffs.reserve(jc.size());
    for (const json& item : jc) coeffs.push_back(quaternion_from_dsl_json(item));
    try {
      return QFunction::polynomial(coeffs, fr);
    } catch (const PreconditionError& e) {
      throw DslError(std::string("poly: ") + e.what());
    }
  }
  if (head == "indicator") {
    const std::vector<double> box = parse_number_list(rest, 4);
    return QFunction::indicator(box[0], box[1], box[2], box[3]);
  }
  if (head == "const") {
    json jc = json::parse(rest, nullptr, false);
    if (jc.is_discarded()) throw DslError("const: expected a number or 4-array");
    return QFunction::constant(quaternion_from_dsl_json(jc));
  }
  throw DslError("unknown function '" + head + "'");
}

}  // namespace qfc
