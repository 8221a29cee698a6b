#include <doctest.h>

#include <random>

#include "qfc/errors.hpp"
#include "qfc/oracle.hpp"
#include "qfc/qvector.hpp"
#include "qfc/random.hpp"
#include "qfc/spectral.hpp"
#include "test_helpers.hpp"

using qfc::EigenSystem;
using qfc::Frame;
using qfc::QMatrix;
using qfc::Quaternion;
using qfc::QVector;
using qfc::SphereClass;
using testing_oracles::entry_distance;
using testing_oracles::oracle_mul;

namespace {
const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();
const Quaternion qk = Quaternion::unit_k();

void check_valid(const QMatrix& t, const EigenSystem& es) {
  const int n = t.n();
  CHECK(qfc::frobenius_norm(qfc::adjoint(es.U) * es.U - QMatrix::identity(n)) <
        1e-10);
  CHECK(qfc::eigensystem_residual(t, es) < 1e-9);
  for (const Quaternion& lambda : es.lambdas) {
    // Representative sits in the closed upper half slice.
    const auto c = qfc::frame_decompose(lambda, es.frame);
    CHECK(c[1] >= 0.0);
    CHECK(std::abs(c[2]) < 1e-10);
    CHECK(std::abs(c[3]) < 1e-10);
  }
}
}  // namespace

TEST_CASE("eigendecompose: diagonal operator with upper-slice entries") {
  const Frame fr = Frame::standard();
  const QMatrix t = QMatrix::diagonal({Quaternion(1) + qi, Quaternion(2)});
  const EigenSystem es = qfc::eigendecompose(t, fr);
  check_valid(t, es);
  REQUIRE(es.lambdas.size() == 2);
  CHECK((es.lambdas[0] - (Quaternion(1) + qi)).norm() < 1e-12);
  CHECK((es.lambdas[1] - Quaternion(2)).norm() < 1e-12);
  CHECK(entry_distance(es.U * QMatrix::diagonal(es.lambdas) * qfc::adjoint(es.U),
                       t) < 1e-12);
}

TEST_CASE("eigendecompose: the single-entry j operator lands in the slice") {
  const Frame fr = Frame::standard();
  const QMatrix t = QMatrix::diagonal({qj});
  const EigenSystem es = qfc::eigendecompose(t, fr);
  check_valid(t, es);
  CHECK((es.lambdas[0] - qi).norm() < 1e-12);
  // The eigenvector satisfies j u = u i; (1+k)/sqrt(2) is one witness.
  const Quaternion u = es.U(0, 0);
  CHECK((oracle_mul(qj, u) - oracle_mul(u, qi)).norm() < 1e-12);
  CHECK(std::abs(u.norm() - 1.0) < 1e-12);
  const Quaternion witness = (Quaternion(1) + qk) / std::sqrt(2.0);
  CHECK((oracle_mul(qj, witness) - oracle_mul(witness, qi)).norm() < 1e-15);
}

TEST_CASE("eigendecompose: real point") {
  const QMatrix t = QMatrix::diagonal({Quaternion(2)});
  const EigenSystem es = qfc::eigendecompose(t, Frame::standard());
  CHECK((es.lambdas[0] - Quaternion(2)).norm() < 1e-12);
  CHECK(std::abs(es.U(0, 0).norm() - 1.0) < 1e-12);
}

TEST_CASE("eigendecompose: conjugate representatives merge upward") {
  const QMatrix t = QMatrix::diagonal({Quaternion(1) + qi, Quaternion(1) - qi});
  const EigenSystem es = qfc::eigendecompose(t, Frame::standard());
  check_valid(t, es);
  for (const Quaternion& lambda : es.lambdas) {
    CHECK((lambda - (Quaternion(1) + qi)).norm() < 1e-12);
  }
}

TEST_CASE("eigendecompose: degenerate and random operators") {
  std::mt19937_64 rng(71);
  SUBCASE("repeated real eigenvalue") {
    const QMatrix t = QMatrix::identity(4) * 3.0;
    const EigenSystem es = qfc::eigendecompose(t, Frame::standard());
    check_valid(t, es);
    for (const Quaternion& lambda : es.lambdas) {
      CHECK((lambda - Quaternion(3)).norm() < 1e-12);
    }
  }
  SUBCASE("random normal operators under random frames") {
    for (int trial = 0; trial < 30; ++trial) {
      const Frame fr = trial % 3 == 0 ? qfc::random_frame(rng) : Frame::standard();
      const int n = 1 + static_cast<int>(rng() % 6);
      qfc::SpectrumSpec spec;
      spec.distinct = 1 + static_cast<int>(rng() % n);
      const QMatrix t = qfc::random_normal(n, fr, rng, spec);
      const EigenSystem es = qfc::eigendecompose(t, fr);
      check_valid(t, es);
      CHECK(entry_distance(
                es.U * QMatrix::diagonal(es.lambdas) * qfc::adjoint(es.U), t) <
            1e-10);
    }
  }
  SUBCASE("non-normal input is rejected") {
    const QMatrix nilpotent = QMatrix::from_entries(
        2, {Quaternion(), Quaternion(1), Quaternion(), Quaternion()});
    CHECK_THROWS_AS((void)qfc::eigendecompose(nilpotent, Frame::standard()),
                    qfc::PreconditionError);
  }
}

TEST_CASE("eigendecompose: nearly coincident spectra stay accurate") {
  // Gaps between machine precision and the outer solver's comfort zone are
  // resolved by the per-cell re-solve; none of these may throw or lose
  // orthonormality.
  const Frame fr = Frame::standard();
  std::mt19937_64 rng(263);
  auto probe = [&](const std::vector<Quaternion>& lams) {
    const QMatrix u = qfc::random_unitary(static_cast<int>(lams.size()), rng);
    const QMatrix t = u * QMatrix::diagonal(lams) * qfc::adjoint(u);
    const EigenSystem es = qfc::eigendecompose(t, fr);
    check_valid(t, es);
    CHECK(qfc::eigensystem_residual(t, es) < 1e-12);
  };
  probe({Quaternion(1) + qi, Quaternion(1.0 + 1e-7) + qi});
  probe({Quaternion(1) + qi, Quaternion(1.0 + 1e-9) + qi});
  probe({Quaternion(1) + qi * 0.5, Quaternion(1) + qi * (0.5 + 1e-7)});
  probe({Quaternion(2), Quaternion(2.0 + 1e-7), Quaternion(2) + qi});
  probe({Quaternion(0.5) + qi * 1e-9, Quaternion(-0.5)});
  probe({Quaternion(1), Quaternion(1), Quaternion(1.0 + 1e-7),
         Quaternion(1) + qi * 1e-6});
}

TEST_CASE("spherical spectrum") {
  const Frame fr = Frame::standard();
  SUBCASE("mixed sphere and point") {
    const auto spec =
        qfc::spherical_spectrum(QMatrix::diagonal({Quaternion(1) + qi, Quaternion(2)}), fr);
    REQUIRE(spec.classes.size() == 2);
    CHECK(spec.classes[0].cls.distance(SphereClass{1, 1}) < 1e-12);
    CHECK(spec.classes[0].multiplicity == 1);
    CHECK(spec.classes[1].cls.distance(SphereClass{2, 0}) < 1e-12);
  }
  SUBCASE("two axis points share the unit sphere class") {
    const auto spec = qfc::spherical_spectrum(QMatrix::diagonal({qi, qj}), fr);
    REQUIRE(spec.classes.size() == 1);
    CHECK(spec.classes[0].cls.distance(SphereClass{0, 1}) < 1e-12);
    CHECK(spec.classes[0].multiplicity == 2);
  }
  SUBCASE("atomic multiplication operator over the sphere") {
    const auto spec = qfc::spherical_spectrum(QMatrix::diagonal({qi, qj, qk}), fr);
    REQUIRE(spec.classes.size() == 1);
    CHECK(spec.classes[0].cls.distance(SphereClass{0, 1}) < 1e-12);
    CHECK(spec.classes[0].multiplicity == 3);
  }
}

TEST_CASE("membership score agrees with the reported classes") {
  std::mt19937_64 rng(73);
  const Frame fr = Frame::standard();
  qfc::SpectrumSpec spec;
  spec.min_separation = 0.2;
  spec.rad_min = 0.25;
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const QMatrix t = qfc::random_normal(n, fr, rng, spec);
    const auto spectrum = qfc::spherical_spectrum(t, fr);
    for (const auto& entry : spectrum.classes) {
      // Sampled points of a reported class score as members, identically
      // across the whole similarity orbit.
      for (const Quaternion& q : qfc::sample_sphere_class(entry.cls, 16)) {
        CHECK(qfc::delta_min_sv(t, q, fr) < 1e-6);
      }
      // Distant probes score as non-members.
      const SphereClass far{entry.cls.re + 0.1, entry.cls.rad + 0.1};
      bool is_distant = true;
      for (const auto& other : spectrum.classes) {
        is_distant = is_distant && other.cls.distance(far) >= 0.1 - 1e-12;
      }
      if (is_distant) {
        for (const Quaternion& q : qfc::sample_sphere_class(far, 4)) {
          CHECK(qfc::delta_min_sv(t, q, fr) > 1e-3);
        }
      }
    }
  }
}

TEST_CASE("induced slice structure J") {
  const Frame fr = Frame::standard();
  SUBCASE("for the j operator, J recovers the operator itself") {
    const QMatrix t = QMatrix::diagonal({qj});
    const QMatrix j = qfc::build_J(t, fr);
    CHECK(entry_distance(j, t) < 1e-12);
  }
  SUBCASE("diagonal upper-slice operator gets the constant axis") {
    const QMatrix t = QMatrix::diagonal({Quaternion(1) + qi, Quaternion(2)});
    CHECK(entry_distance(qfc::build_J(t, fr), QMatrix::diagonal({qi, qi})) <
          1e-12);
  }
  SUBCASE("algebraic laws and the left-multiplication identification") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 3);
      const QMatrix t = qfc::random_normal(n, fr, rng);
      const EigenSystem es = qfc::eigendecompose(t, fr);
      const QMatrix j = qfc::build_J(es);
      const auto flags = qfc::classify(j, 1e-9);
      CHECK(flags.anti_self_adjoint);
      CHECK(flags.unitary);
      CHECK(qfc::frobenius_norm(j * j + QMatrix::identity(n)) < 1e-10);
      CHECK(qfc::frobenius_norm(j * t - t * j) < 1e-9);
      const QMatrix tstar = qfc::adjoint(t);
      CHECK(qfc::frobenius_norm(j * tstar - tstar * j) < 1e-9);

      // J acts as the basis-induced left multiplication by m.
      std::vector<QVector> cols;
      for (int c = 0; c < n; ++c) cols.push_back(es.U.column(c));
      const qfc::HilbertBasis basis(cols);
      const QVector x = qfc::random_qvector(static_cast<std::size_t>(n), rng);
      CHECK((j * x - left_multiply(fr.m(), x, basis)).norm() < 1e-10);
    }
  }
}

TEST_CASE("companion unit J'") {
  const Frame fr = Frame::standard();
  SUBCASE("identity eigenbasis gives the constant n axis") {
    const QMatrix t = QMatrix::diagonal({Quaternion(1) + qi, Quaternion(2)});
    const EigenSystem es = qfc::eigendecompose(t, fr);
    CHECK(entry_distance(qfc::build_Jprime(es), QMatrix::diagonal({qj, qj})) <
          1e-12);
  }
  SUBCASE("for the j operator the companion is -i") {
    // (1+k) j (1-k) / 2 = -i, frozen via the table oracle.
    const Quaternion u = (Quaternion(1) + qk) / std::sqrt(2.0);
    const Quaternion direct = oracle_mul(oracle_mul(u, qj), u.conj());
    CHECK((direct + qi).norm() < 1e-14);
    const EigenSystem es = qfc::eigendecompose(QMatrix::diagonal({qj}), fr);
    CHECK(entry_distance(qfc::build_Jprime(es), QMatrix::diagonal({-qi})) <
          1e-12);
  }
  SUBCASE("J and J' anticommute") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 10; ++trial) {
      const QMatrix t = qfc::random_normal(3, fr, rng);
      const EigenSystem es = qfc::eigendecompose(t, fr);
      const QMatrix j = qfc::build_J(es);
      const QMatrix jp = qfc::build_Jprime(es);
      CHECK(qfc::frobenius_norm(j * jp + jp * j) < 1e-10);
      const auto flags = qfc::classify(jp, 1e-9);
      CHECK(flags.anti_self_adjoint);
      CHECK(flags.unitary);
    }
  }
}

TEST_CASE("restriction to the slice space") {
  const Frame fr = Frame::standard();
  std::mt19937_64 rng(89);
  const QMatrix t = qfc::random_normal(4, fr, rng);
  const EigenSystem es = qfc::eigendecompose(t, fr);

  SUBCASE("the operator itself restricts to its eigenvalue diagonal") {
    const qfc::ComplexMatrix r = qfc::restrict_plus(t, es);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        const std::complex<double> expected =
            a == b ? qfc::slice_complex(es.lambdas[static_cast<std::size_t>(a)], fr)
                   : std::complex<double>(0.0);
        CHECK(std::abs(r(a, b) - expected) < 1e-10);
      }
    }
  }
  SUBCASE("identity restricts to the complex identity") {
    CHECK((qfc::restrict_plus(QMatrix::identity(4), es) -
           qfc::ComplexMatrix::Identity(4, 4))
              .norm() < 1e-12);
  }
  SUBCASE("functoriality: T^2 restricts to the squared diagonal") {
    const qfc::ComplexMatrix r = qfc::restrict_plus(t * t, es);
    const qfc::ComplexMatrix d = qfc::restrict_plus(t, es);
    CHECK((r - d * d).norm() < 1e-9);
  }
  SUBCASE("non-commuting operators are rejected") {
    const QMatrix rogue = qfc::random_qmatrix(4, rng);
    CHECK_THROWS_AS((void)qfc::restrict_plus(rogue, es), qfc::PreconditionError);
  }
}

TEST_CASE("extension from the slice space") {
  const Frame fr = Frame::standard();
  std::mt19937_64 rng(97);
  const QMatrix t = qfc::random_normal(3, fr, rng);
  const EigenSystem es = qfc::eigendecompose(t, fr);

  SUBCASE("inverse of restriction on the diagonal") {
    CHECK(entry_distance(qfc::extend_tilde(qfc::restrict_plus(t, es), es), t) <
          1e-10);
  }
  SUBCASE("complex identity extends to the identity") {
    CHECK(entry_distance(
              qfc::extend_tilde(qfc::ComplexMatrix::Identity(3, 3), es),
              QMatrix::identity(3)) < 1e-12);
  }
  SUBCASE("multiplication by m extends to J") {
    qfc::ComplexMatrix m = qfc::ComplexMatrix::Zero(3, 3);
    for (int d = 0; d < 3; ++d) m(d, d) = std::complex<double>(0, 1);
    CHECK(entry_distance(qfc::extend_tilde(m, es), qfc::build_J(es)) < 1e-12);
  }
  SUBCASE("norm, star and products are preserved") {
    for (int trial = 0; trial < 10; ++trial) {
      const qfc::ComplexMatrix m = qfc::ComplexMatrix::Random(3, 3);
      const qfc::ComplexMatrix k = qfc::ComplexMatrix::Random(3, 3);
      const QMatrix em = qfc::extend_tilde(m, es);
      const QMatrix ek = qfc::extend_tilde(k, es);
      CHECK((qfc::restrict_plus(em, es) - m).norm() < 1e-10);
      CHECK(qfc::op_norm(em) ==
            doctest::Approx(m.jacobiSvd().singularValues()(0)).epsilon(1e-9));
      CHECK(entry_distance(qfc::adjoint(em),
                           qfc::extend_tilde(m.adjoint().eval(), es)) < 1e-12);
      CHECK(entry_distance(em * ek, qfc::extend_tilde((m * k).eval(), es)) <
            1e-11);
    }
  }
  SUBCASE("inverses map to inverses") {
    // Invertible normal operator; its inverse through the embedding is an
    // independent route to the same answer.
    qfc::SpectrumSpec spec;
    spec.re_min = 0.5;
    spec.re_max = 2.0;
    const QMatrix inv_t = qfc::random_normal(3, fr, rng, spec);
    const EigenSystem ies = qfc::eigendecompose(inv_t, fr);
    const qfc::ComplexMatrix r = qfc::restrict_plus(inv_t, ies);
    const QMatrix s = qfc::extend_tilde(r.inverse().eval(), ies);
    CHECK(entry_distance(s * inv_t, QMatrix::identity(3)) < 1e-9);
    CHECK(entry_distance(inv_t * s, QMatrix::identity(3)) < 1e-9);
    const QMatrix via_chi =
        qfc::chi_unembed(qfc::chi_embed(inv_t, fr).inverse().eval(), fr, 1e-7);
    CHECK(entry_distance(s, via_chi) < 1e-8);
  }
  SUBCASE("round trip on commutant members") {
    const QMatrix s = qfc::random_star_polynomial(t, rng);
    CHECK(entry_distance(qfc::extend_tilde(qfc::restrict_plus(s, es), es), s) <
          1e-10);
  }
}
