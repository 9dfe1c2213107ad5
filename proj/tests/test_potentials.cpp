#include <catch_amalgamated.hpp>

#include "qlc/ldg.hpp"
#include "qlc/maier_saupe.hpp"
#include "test_helpers.hpp"

using namespace qlc;
using Catch::Approx;

namespace {

const SphereRule& rule23() {
  static SphereRule r = lebedev_rule(23);
  return r;
}

}  // namespace

TEST_CASE("ldg density values") {
  LdgParams p{1, 1, 1};
  CHECK(ldg_density(p, QTensor{}) == 0.0);
  // tr Q^2 = 2/3, tr Q^3 = 2/9 at s = 1
  CHECK(ldg_density(p, uniaxial(1.0, Vec3(0, 0, 1))) ==
        Approx(-5.0 / 27.0).margin(1e-13));
  LdgParams mbba{0.42e3 * 1.0, 0.64e4, 0.35e4};  // alpha (T* - T) at 1 degree
  CHECK_NOTHROW(mbba.validate());
  CHECK_THROWS_AS((LdgParams{-1, 1, 1}.validate()), ConfigError);
}

TEST_CASE("ldg derivatives match finite differences") {
  LdgParams p{1.3, 0.8, 2.1};
  CHECK(ldg_gradient(p, QTensor{}).frobenius_norm() == 0.0);
  CHECK((ldg_hessian(p, QTensor{}) + p.a * Mat5::Identity())
            .cwiseAbs()
            .maxCoeff() == Approx(0.0).margin(1e-14));

  for (int i = 0; i < 20; ++i) {
    QTensor q(test::random_vec5(0.4));
    Vec5 fd = test::fd_gradient(
        [&](const QTensor& x) { return ldg_density(p, x); }, q);
    Vec5 g = ldg_gradient(p, q).coeffs;
    CHECK((g - fd).norm() <= 1e-7 * (1 + g.norm()));

    Mat5 jfd = test::fd_jacobian(
        [&](const QTensor& x) { return ldg_gradient(p, x).coeffs; }, q);
    Mat5 h = ldg_hessian(p, q);
    CHECK((h - jfd).cwiseAbs().maxCoeff() <= 1e-6 * (1 + h.norm()));
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("moment map basics") {
  CHECK(moment_map(QTensor{}, rule23()).frobenius_norm() <= 1e-14);

  // uniaxial multiplier gives a uniaxial moment about the same axis
  QTensor lam = uniaxial(3.0, Vec3(0, 0, 1));
  QTensor m = moment_map(lam, rule23());
  for (int i = 1; i < 5; ++i) CHECK(std::abs(m.coeffs[i]) <= 1e-13);

  // 1D polar-angle reduction oracle: with L = diag(-l/3,-l/3,2l/3) s.t.
  // p.Lp = l (cos^2 th - 1/3), the e_z moment coefficient is
  // int (z^2 - 1/3) e^{l z^2} dz / int e^{l z^2} dz, z in [-1,1].
  double l = 3.0 * std::sqrt(1.5) * lam.coeffs[0] / 3.0;  // recover scale
  // lam = s (n x n - I/3) with coeffs[0] = s sqrt(2/3); p.Lam p = s(z^2-1/3)
  double s = lam.coeffs[0] / std::sqrt(2.0 / 3.0);
  int ng = 100000;
  double num = 0, den = 0;
  for (int k = 0; k < ng; ++k) {  // midpoint rule, smooth integrand
    double z = -1.0 + (k + 0.5) * 2.0 / ng;
    double w = std::exp(s * (z * z - 1.0 / 3.0));
    num += w * (z * z - 1.0 / 3.0);
    den += w;
  }
  (void)l;
  double expect_coeff0 = std::sqrt(3.0 / 2.0) * num / den;
  // m.coeffs[0] = sqrt(2/3)^-1 ... direct: m0 = <m_1> with m_1 = sqrt(3/2)(z^2-1/3)
  CHECK(m.coeffs[0] == Approx(expect_coeff0).margin(1e-7));

  for (int i = 0; i < 10; ++i) {
    QTensor lamr(test::random_vec5(2.0));
    EigenTriple ev = eigenvalues(moment_map(lamr, rule23()));
    CHECK(ev.min() > -1.0 / 3.0);
    CHECK(ev.max() < 2.0 / 3.0);
  }
}

TEST_CASE("solve_multiplier") {
  MaierSaupeState st0 = solve_multiplier(QTensor{}, rule23());
  CHECK(st0.lambda.frobenius_norm() <= 1e-12);
  CHECK(st0.logZ == Approx(std::log(4.0 * M_PI)).margin(1e-12));

  QTensor target = uniaxial(0.3, Vec3(0, 0, 1));
  MaierSaupeState st = solve_multiplier(target, rule23());
  CHECK(st.residual_norm <= 1e-10);
  for (int i = 1; i < 5; ++i) CHECK(std::abs(st.lambda.coeffs[i]) <= 1e-9);
  CHECK((moment_map(st.lambda, rule23()) - target).frobenius_norm() <= 1e-10);

  // near the physical boundary the multiplier is large but finite
  QTensor tight = uniaxial(1.0 - 3.0 * 0.01, Vec3(0, 0, 1));
  CHECK(physicality_margin(tight) == Approx(0.01).margin(1e-12));
  MaierSaupeState sth = solve_multiplier(tight, lebedev_rule(35));
  CHECK(sth.residual_norm <= 1e-10);
  CHECK(std::isfinite(sth.lambda.frobenius_norm()));
  CHECK(sth.lambda.frobenius_norm() > 5.0);

  CHECK_THROWS_AS(solve_multiplier(uniaxial(1.0, Vec3(0, 0, 1)), rule23()),
                  NotPhysicalError);
}

TEST_CASE("f value and entropy consistency") {
  MaierSaupeState st0 = solve_multiplier(QTensor{}, rule23());
  CHECK(f_value(st0) == Approx(-std::log(4.0 * M_PI)).margin(1e-10));

  MaierSaupeState st = solve_multiplier(uniaxial(0.3, Vec3(0, 0, 1)), rule23());
  // direct quadrature of rho* ln rho* for the optimal density
  double logZ = st.logZ;
  Vec5 lam = st.lambda.coeffs;
  double entropy = integrate(rule23(), [&](const Vec3& p) {
    double s = lam.dot(detail::sphere_moments(p));
    double rho = std::exp(s - logZ);
    return rho * std::log(rho);
  });
  CHECK(f_value(st) == Approx(entropy).margin(1e-9));
}

TEST_CASE("f blow-up is monotone toward the boundary") {
  SphereRule rule = lebedev_rule(35);
  double prev = -1e300;
  std::optional<QTensor> warm;
  for (double t : {1e-1, 1e-2, 1e-3}) {
    QTensor q = uniaxial(1.0 - 3.0 * t, Vec3(0, 0, 1));
    MaierSaupeState st = solve_multiplier(q, rule, warm);
    warm = st.lambda;
    double f = f_value(st);
    CHECK(f > prev);
    prev = f;
    // lower blow-up form: f + (1/2) ln(lambda_min + 1/3) stays bounded
    CHECK(std::isfinite(f + 0.5 * std::log(t)));
  }
}

TEST_CASE("f derivatives") {
  MaierSaupeState st0 = solve_multiplier(QTensor{}, rule23());
  CHECK(f_gradient(st0).frobenius_norm() <= 1e-12);
  CHECK((f_hessian(st0) - 7.5 * Mat5::Identity()).cwiseAbs().maxCoeff() <=
        1e-8);

  for (int i = 0; i < 5; ++i) {
    QTensor q = test::random_physical(0.05);
    MaierSaupeState st = solve_multiplier(q, rule23());
    Vec5 fd = test::fd_gradient(
        [&](const QTensor& x) {
          return f_value(solve_multiplier(x, rule23(), st.lambda));
        },
        q, 1e-5);
    Vec5 g = f_gradient(st).coeffs;
    CHECK((g - fd).norm() <= 1e-6 * (1 + g.norm()));

    Mat5 jfd = test::fd_jacobian(
        [&](const QTensor& x) {
          return f_gradient(solve_multiplier(x, rule23(), st.lambda)).coeffs;
        },
        q, 1e-5);
    Mat5 h = f_hessian(st);
    CHECK((h - jfd).cwiseAbs().maxCoeff() <= 1e-5 * (1 + h.norm()));
    Eigen::SelfAdjointEigenSolver<Mat5> es(h);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("duality round trip") {
  for (int i = 0; i < 25; ++i) {
    QTensor q = test::random_physical(0.02);
    MaierSaupeState st = solve_multiplier(q, rule23());
    CHECK((moment_map(st.lambda, rule23()) - q).frobenius_norm() <= 1e-10);
  }
}

TEST_CASE("f convexity") {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    QTensor a = test::random_physical(0.02);
    QTensor b = test::random_physical(0.02);
    double t = u(test::rng());
    QTensor mid(t * a.coeffs + (1 - t) * b.coeffs);
    double fmid = f_value(solve_multiplier(mid, rule23()));
    double fa = f_value(solve_multiplier(a, rule23()));
    double fb = f_value(solve_multiplier(b, rule23()));
    CHECK(fmid <= t * fa + (1 - t) * fb + 1e-9);
  }
}

TEST_CASE("frame equivariance under octahedral rotations") {
  Mat3 r;  // rotation: x->y, y->z, z->x (node-set symmetry)
  r << 0, 0, 1, 1, 0, 0, 0, 1, 0;
  for (int i = 0; i < 5; ++i) {
    QTensor q = test::random_physical(0.05);
    QTensor qr = from_matrix(Mat3(r * to_matrix(q) * r.transpose()));
    MaierSaupeState st = solve_multiplier(q, rule23());
    MaierSaupeState str = solve_multiplier(qr, rule23());
    CHECK(f_value(str) == Approx(f_value(st)).margin(1e-10));
    Mat3 lam_rot = r * to_matrix(st.lambda) * r.transpose();
    CHECK((to_matrix(str.lambda) - lam_rot).cwiseAbs().maxCoeff() <= 1e-8);
  }
}

TEST_CASE("bm density and weak-form pairings") {
  BmParams p{2.0, 1.0};
  MaierSaupeState st0 = solve_multiplier(QTensor{}, rule23());
  CHECK(bm_density(p, st0) == Approx(-2.0 * std::log(4.0 * M_PI)).margin(1e-10));
  Mat5 h0 = bm_hessian(p, st0);
  CHECK((h0 - (0.5 * p.T * 7.5 - p.kappa) * Mat5::Identity())
            .cwiseAbs()
            .maxCoeff() <= 1e-8);

  // the weak form uses T/2 and kappa, so the density derivative is exactly
  // twice the pairing; the factor is pinned here
  QTensor q = test::random_physical(0.05);
  MaierSaupeState st = solve_multiplier(q, rule23());
  Vec5 fd = test::fd_gradient(
      [&](const QTensor& x) {
        return bm_density(p, solve_multiplier(x, rule23(), st.lambda));
      },
      q, 1e-5);
  Vec5 g = bm_gradient(p, st).coeffs;
  CHECK((2.0 * g - fd).norm() <= 1e-6 * (1 + fd.norm()));
}
