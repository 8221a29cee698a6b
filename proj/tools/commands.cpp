#include "commands.hpp"

#include <cmath>
#include <iostream>
#include <random>

#include <nlohmann/json.hpp>

#include "qfc/errors.hpp"
#include "qfc/funcalc.hpp"
#include "qfc/io.hpp"
#include "qfc/oracle.hpp"
#include "qfc/pvm.hpp"
#include "qfc/random.hpp"
#include "qfc/spectral.hpp"

namespace qfc::cli {

namespace {

using nlohmann::json;

Frame make_frame(const JobConfig& cfg) {
  return Frame(ImaginaryUnit(Quaternion::from_array(cfg.frame_m)),
               ImaginaryUnit(Quaternion::from_array(cfg.frame_n)));
}

json frame_to_json(const Frame& fr) {
  return json{{"m", quaternion_to_json(fr.m())}, {"n", quaternion_to_json(fr.n())}};
}

QMatrix load_normal_operator(const JobConfig& cfg, const Frame&) {
  QMatrix t = load_matrix(cfg.input);
  if (!classify(t, cfg.tol).normal) {
    throw PreconditionError("input operator is not normal at tolerance " +
                            std::to_string(cfg.tol));
  }
  return t;
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << canonical_dump(j);
  } else {
    save_json(j, path);
  }
}

int guarded(const JobConfig& cfg, int (*body)(const JobConfig&)) {
  try {
    return body(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const DslError& e) {
    std::cerr << "function error: " << e.what() << '\n';
    return kDslError;
  } catch (const SliceError& e) {
    std::cerr << "slice violation: " << e.what() << '\n';
    return kSliceViolation;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

json spectrum_json(const EigenSystem& es, const Frame& fr) {
  const SphericalSpectrum spec = spherical_spectrum(es);
  json classes = json::array();
  for (const SpectrumEntry& e : spec.classes) {
    classes.push_back({{"re", e.cls.re},
                       {"rad", e.cls.rad},
                       {"multiplicity", e.multiplicity}});
  }
  json plus = json::array();
  for (const Quaternion& rep : merged_plus_spectrum(es)) {
    plus.push_back(quaternion_to_json(rep));
  }
  return json{{"command", "spectrum"},
              {"frame", frame_to_json(fr)},
              {"classes", std::move(classes)},
              {"plus_spectrum", std::move(plus)}};
}

int spectrum_body(const JobConfig& cfg) {
  const Frame fr = make_frame(cfg);
  const QMatrix t = load_normal_operator(cfg, fr);
  emit(spectrum_json(eigendecompose(t, fr), fr), cfg.out);
  return kOk;
}

// The identity polynomial must reproduce the input bit for bit, so it
// bypasses the diagonalization round trip.
bool is_identity_poly(const QFunction& f, const std::string& dsl) {
  if (f.name() != "poly" && dsl != "identity") return false;
  if (dsl == "identity") return true;
  const json jc = json::parse(dsl.substr(dsl.find(':') + 1), nullptr, false);
  if (jc.is_discarded() || !jc.is_array() || jc.size() != 2) return false;
  auto value = [](const json& item, double expect) {
    if (item.is_number()) return item.get<double>() == expect;
    return item.is_array() && item.size() == 4 && item[0].is_number() &&
           item[0].get<double>() == expect && item[1].get<double>() == 0.0 &&
           item[2].get<double>() == 0.0 && item[3].get<double>() == 0.0;
  };
  return value(jc[0], 0.0) && value(jc[1], 1.0);
}

int apply_body(const JobConfig& cfg) {
  const Frame fr = make_frame(cfg);
  const QFunction f = parse_function_dsl(cfg.function_dsl, fr);
  const QMatrix t = load_normal_operator(cfg, fr);
  if (f.slice_compat() == SliceCompat::kAxis && !f.slice_compatible_with(fr)) {
    throw SliceError("function '" + f.name() + "' is tied to a different slice");
  }

  QMatrix result(t.n());
  double crosscheck = 0.0;
  if (is_identity_poly(f, cfg.function_dsl)) {
    result = t;
  } else {
    const EigenSystem es = eigendecompose(t, fr);
    result = full_calculus(es, f);
    crosscheck = op_norm(result - diagonal_calculus(es, f));
  }

  emit(matrix_to_json(result), cfg.out);
  if (!cfg.report.empty()) {
    save_json(json{{"command", "apply"},
                   {"frame", frame_to_json(fr)},
                   {"function", cfg.function_dsl},
                   {"crosscheck_residual", crosscheck}},
              cfg.report);
  }
  return kOk;
}

int measure_body(const JobConfig& cfg) {
  const Frame fr = make_frame(cfg);
  const QMatrix t = load_normal_operator(cfg, fr);
  const QPVM measure = spectral_measure(t, fr);

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::pair<QVector, QVector>> samples;
  for (int s = 0; s < 16; ++s) {
    samples.emplace_back(random_qvector(static_cast<std::size_t>(t.n()), rng),
                         random_qvector(static_cast<std::size_t>(t.n()), rng));
  }
  const AxiomReport axioms = check_axioms(measure, samples);

  json atoms = json::array();
  for (const SpectralAtom& atom : measure.atoms()) {
    double trace = 0.0;
    for (int d = 0; d < atom.projection.n(); ++d) trace += atom.projection(d, d).re();
    atoms.push_back({{"lambda", quaternion_to_json(atom.lambda)},
                     {"projection", matrix_to_json(atom.projection)},
                     {"rank", static_cast<int>(std::lround(trace))}});
  }
  emit(json{{"command", "measure"},
            {"frame", frame_to_json(fr)},
            {"atoms", std::move(atoms)},
            {"axioms",
             {{"completeness", axioms.completeness},
              {"self_adjointness", axioms.self_adjointness},
              {"idempotence", axioms.idempotence},
              {"multiplicativity", axioms.multiplicativity},
              {"additivity", axioms.additivity},
              {"pass", axioms.pass()}}}},
       cfg.out);
  return kOk;
}

int verify_body(const JobConfig& cfg) {
  const Frame fr = make_frame(cfg);
  const QMatrix t = load_normal_operator(cfg, fr);
  const std::size_t n = static_cast<std::size_t>(t.n());
  std::mt19937_64 rng(cfg.seed);

  json checks = json::array();
  bool all_pass = true;
  auto record = [&](const std::string& name, double residual, double threshold) {
    const bool pass = residual < threshold;
    all_pass = all_pass && pass;
    checks.push_back({{"check", name},
                      {"residual", residual},
                      {"threshold", threshold},
                      {"pass", pass}});
    std::cout << (pass ? "PASS" : "FAIL") << ' ' << name << " residual=" << residual
              << " threshold=" << threshold << '\n';
  };

  {
    double worst = 0.0;
    for (int s = 0; s < 500; ++s) {
      worst = std::max(worst, check_polarization(random_qvector(n, rng),
                                                 random_qvector(n, rng)));
    }
    record("polarization", worst, 1e-10);
  }
  {
    double worst = 0.0;
    for (int s = 0; s < 8; ++s) {
      const QMatrix a = random_qmatrix(t.n(), rng);
      const QMatrix b = random_qmatrix(t.n(), rng);
      const ComplexMatrix prod = chi_embed(a * b, fr) - chi_embed(a, fr) * chi_embed(b, fr);
      const ComplexMatrix star = chi_embed(adjoint(a), fr) - chi_embed(a, fr).adjoint();
      worst = std::max({worst, prod.norm(), star.norm()});
    }
    record("chi_homomorphism", worst, 1e-12);
  }

  const EigenSystem es = eigendecompose(t, fr);
  if (cfg.suite != "fast") {
    const SphericalSpectrum spec = spherical_spectrum(es);
    const std::vector<SphereClass> brute =
        brute_spectrum(t, ScanGrid::for_operator(t), fr);
    double worst = 0.0;
    if (brute.size() != spec.classes.size()) {
      worst = 1.0;
    } else {
      for (const SpectrumEntry& e : spec.classes) {
        double best = 1.0;
        for (const SphereClass& b : brute) best = std::min(best, e.cls.distance(b));
        worst = std::max(worst, best);
      }
    }
    record("brute_spectrum_agreement", worst, 5e-4);
  }
  {
    double adj = 0.0, jp = 0.0;
    for (const QFunction& f : builtin_slice_suite(fr)) {
      adj = std::max(adj, adjoint_law_check(t, f, fr));
      jp = std::max(jp, jprime_law_check(t, f, fr));
    }
    record("adjoint_law", adj, 1e-10);
    record("jprime_law", jp, 1e-10);
  }
  {
    double worst = 0.0;
    for (const QFunction& f : builtin_suite(fr)) {
      worst = std::max(worst, representation_check(t, f, fr, 50, cfg.seed));
    }
    record("representation", worst, 1e-9);
  }
  const QPVM measure = spectral_measure(es);
  {
    const QMatrix s = random_star_polynomial(t, rng);
    const CommutantReport rep =
        commutant_check(s, t, QFunction::exp_fn(), measure, fr);
    record("commutant", rep.applicable
                            ? std::max(rep.calculus_residual, rep.measure_residual)
                            : 1.0,
           1e-9);
  }
  {
    std::vector<std::pair<QVector, QVector>> samples;
    for (int s = 0; s < 8; ++s) {
      samples.emplace_back(random_qvector(n, rng), random_qvector(n, rng));
    }
    const AxiomReport axioms = check_axioms(measure, samples);
    record("pvm_axioms",
           std::max({axioms.completeness, axioms.self_adjointness,
                     axioms.idempotence, axioms.multiplicativity,
                     axioms.additivity}),
           1e-10);
  }
  {
    const QMatrix recon = integrate(QFunction::identity(), measure);
    record("reconstruction", op_norm(recon - t), 1e-10);
  }

  const json report{{"command", "verify"},
                    {"frame", frame_to_json(fr)},
                    {"seed", cfg.seed},
                    {"checks", std::move(checks)},
                    {"pass", all_pass}};
  if (!cfg.report.empty()) save_json(report, cfg.report);
  if (!cfg.out.empty()) save_json(report, cfg.out);
  return all_pass ? kOk : kVerifyFailed;
}

}  // namespace

int run_spectrum(const JobConfig& cfg) { return guarded(cfg, spectrum_body); }
int run_apply(const JobConfig& cfg) { return guarded(cfg, apply_body); }
int run_measure(const JobConfig& cfg) { return guarded(cfg, measure_body); }
int run_verify(const JobConfig& cfg) { return guarded(cfg, verify_body); }

}  // namespace qfc::cli
