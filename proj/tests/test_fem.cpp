#include <catch_amalgamated.hpp>

#include "qlc/assembly.hpp"
#include "qlc/fe_space.hpp"
#include "qlc/manufactured.hpp"
#include "qlc/mesh.hpp"
#include "qlc/newton.hpp"
#include "test_helpers.hpp"

using namespace qlc;
using Catch::Approx;

namespace {

DiscreteField linear_field(const FeSpace& space, const Vec5& q0,
                           const Mat5x3& g) {
  return interpolate(space, [&](const Vec3& x) { return QTensor(q0 + g * x); });
}

Mat5x3 random_mat5x3(double scale = 1.0) {
  Mat5x3 g;
  for (int i = 0; i < 5; ++i) g.row(i) = test::random_vec5(scale).head<3>().transpose();
  return g;
}

Eigen::MatrixXd block_expand(const SpMat& scalar) {
  Eigen::MatrixXd s(scalar);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(5 * s.rows(), 5 * s.cols());
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j)
      for (int c = 0; c < 5; ++c) out(5 * i + c, 5 * j + c) = s(i, j);
  return out;
}

}  // namespace

TEST_CASE("ellipticity check") {
  CHECK(ellipticity_check({1, 0, 0}).ok);
  CHECK(ellipticity_check({1, 0, 0}).margin == Approx(0.6));
  CHECK(ellipticity_check({1, 0.2, 0.2}).ok);
  CHECK_FALSE(ellipticity_check({1, 0, 2}).ok);     // L3 = 2 L1 boundary
  CHECK_FALSE(ellipticity_check({1, -0.7, 0.5}).ok);  // divergence condition
  CHECK_FALSE(ellipticity_check({0, 1, 0}).ok);

  TetMesh mesh = unit_cube_mesh(2);
  FeSpace space(mesh);
  CHECK_THROWS_AS(assemble_elastic(space, {1, 0, 2}), EllipticityError);
  CHECK_NOTHROW(assemble_elastic(space, {1, 0, 2}, /*allow_nonelliptic=*/true));
}

TEST_CASE("space layout and interpolation") {
  TetMesh mesh = unit_cube_mesh(2);
  FeSpace space(mesh);
  CHECK(space.n_dofs() == 5 * 27);
  CHECK(space.free_vertices.size() == 1);
  CHECK(space.n_free_dofs() == 5);

  // P1 interpolation reproduces affine fields exactly
  Vec5 q0 = test::random_vec5(0.1);
  Mat5x3 g = random_mat5x3(0.1);
  DiscreteField f = linear_field(space, q0, g);
  for (std::size_t e = 0; e < mesh.n_tets(); ++e) {
    CHECK((f.gradient_on(e) - g).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((f.at_barycentric(e, {0.25, 0.25, 0.25, 0.25}).coeffs -
           (q0 + g * Vec3(mesh.vertices[mesh.tets[e][0]] * 0.25 +
                          mesh.vertices[mesh.tets[e][1]] * 0.25 +
                          mesh.vertices[mesh.tets[e][2]] * 0.25 +
                          mesh.vertices[mesh.tets[e][3]] * 0.25)))
              .norm() <= 1e-12);
  }

  DiscreteField m = interpolate(space, ManufacturedSolution::value);
  CHECK(m.min_vertex_margin() > 0.1);
}

TEST_CASE("elastic quadratic form matches the density on affine fields") {
  TetMesh mesh = unit_cube_mesh(2);
  FeSpace space(mesh);
  ElasticConstants c{1.0, 0.2, 0.2};
  ElasticMatrices mats = assemble_elastic(space, c);
  for (int trial = 0; trial < 5; ++trial) {
    Mat5x3 g = random_mat5x3();
    DiscreteField f = linear_field(space, test::random_vec5(), g);
    double quad_form = 0.5 * f.values.dot(mats.full * f.values);
    CHECK(quad_form == Approx(elastic_density(c, g)).epsilon(1e-11));
    CHECK(energy(space, f, c, LdgPotential({1, 1, 1})) ==
          Approx(elastic_density(c, g) +
                 [&] {
                   // independent bulk oracle by elevated quadrature
                   SimplexRule rule = simplex_rule(6);
                   double acc = 0.0;
                   for (std::size_t e = 0; e < mesh.n_tets(); ++e) {
                     double scale = 6.0 * space.volumes[e];
                     for (std::size_t k = 0; k < rule.size(); ++k)
                       acc += scale * rule.weights[k] *
                              ldg_density({1, 1, 1},
                                          f.at_barycentric(e, rule.bary[k]));
                   }
                   return acc;
                 }())
              .epsilon(1e-9));
  }
}

TEST_CASE("one-constant elastic matrix decouples into scalar Laplacians") {
  TetMesh mesh = unit_cube_mesh(2);
  FeSpace space(mesh);
  ElasticMatrices mats = assemble_elastic(space, {1.3, 0, 0});
  Eigen::MatrixXd expected = 1.3 * block_expand(scalar_stiffness(space));
  CHECK((Eigen::MatrixXd(mats.full) - expected).cwiseAbs().maxCoeff() <=
        1e-12);
}

TEST_CASE("elastic ff block is symmetric positive definite") {
  TetMesh mesh = unit_cube_mesh(3);
  FeSpace space(mesh);
  ElasticMatrices mats = assemble_elastic(space, {1.0, 0.2, 0.2});
  Eigen::MatrixXd a(mats.ff);
  CHECK((a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (a + a.transpose()));
  CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("bulk residual and tangent basics") {
  TetMesh mesh = unit_cube_mesh(2);
  FeSpace space(mesh);
  DiscreteField zero(space);
  LdgPotential ldg({1, 1, 1});
  // the LDG gradient vanishes at Q = 0
  CHECK(assemble_bulk_residual(space, zero, ldg).norm() == 0.0);

  // BM zero-field tangent is a scaled block mass matrix
  BmParams bp{2.0, 1.0};
  BmPotential bm(bp, lebedev_rule(23));
  Eigen::MatrixXd tangent(assemble_bulk_tangent(space, zero, bm));
  Eigen::MatrixXd mass_ff =
      block_expand(restrict_scalar_free(space, scalar_mass(space)));
  double factor = 0.5 * bp.T * 7.5 - bp.kappa;
  CHECK((tangent - factor * mass_ff).cwiseAbs().maxCoeff() <= 1e-8);

  // non-physical states are rejected during BM assembly
  DiscreteField sat = interpolate(
      space, [](const Vec3&) { return uniaxial(1.0, Vec3(0, 0, 1)); });
  CHECK_THROWS_AS(assemble_bulk_residual(space, sat, bm),
                  NotPhysicalAtQuadPointError);
}

TEST_CASE("residual is the gradient of the energy") {
  TetMesh mesh = unit_cube_mesh(2);
  FeSpace space(mesh);
  ElasticConstants c{1.0, 0.2, 0.2};
  ElasticMatrices elastic = assemble_elastic(space, c);
  LdgPotential ldg({1, 1, 1});
  DiscreteField field = interpolate(space, ManufacturedSolution::value);

  Eigen::VectorXd r =
      detail::full_residual(space, field, elastic, ldg, std::nullopt, 4);
  int fv = space.free_vertices[0];
  for (int comp = 0; comp < 5; ++comp) {
    const double h = 1e-6;
    DiscreteField p = field, m = field;
    p.values[5 * fv + comp] += h;
    m.values[5 * fv + comp] -= h;
    double fd = (energy(space, p, c, ldg) - energy(space, m, c, ldg)) / (2 * h);
    CHECK(r[comp] == Approx(fd).margin(1e-7));
  }
}

TEST_CASE("bulk tangent matches a finite-difference Jacobian") {
  TetMesh mesh = unit_cube_mesh(2);
  FeSpace space(mesh);
  DiscreteField field = interpolate(space, ManufacturedSolution::value);
  LdgPotential ldg({1, 1, 1});
  BmPotential bm({2.0, 1.0}, lebedev_rule(23));
  for (const BulkPotential* pot :
       std::initializer_list<const BulkPotential*>{&ldg, &bm}) {
    Eigen::MatrixXd tangent(assemble_bulk_tangent(space, field, *pot));
    CHECK((tangent - tangent.transpose()).cwiseAbs().maxCoeff() <= 1e-9);
    int fv = space.free_vertices[0];
    Eigen::MatrixXd fd(5, 5);
    const double h = 1e-6;
    for (int comp = 0; comp < 5; ++comp) {
      DiscreteField p = field, m = field;
      p.values[5 * fv + comp] += h;
      m.values[5 * fv + comp] -= h;
      fd.col(comp) = (assemble_bulk_residual(space, p, *pot) -
                      assemble_bulk_residual(space, m, *pot)) /
                     (2 * h);
    }
    CHECK((tangent - fd).cwiseAbs().maxCoeff() <= 1e-5);
  }
}

TEST_CASE("norm oracles") {
  TetMesh mesh = unit_cube_mesh(2);
  FeSpace space(mesh);

  Vec5 q0 = test::random_vec5();
  DiscreteField constant =
      interpolate(space, [&](const Vec3&) { return QTensor(q0); });
  CHECK(l2_norm(space, constant) == Approx(q0.norm()).epsilon(1e-12));
  CHECK(h1_seminorm(space, constant) <= 1e-12);

  Mat5x3 g = random_mat5x3();
  DiscreteField lin = linear_field(space, Vec5::Zero(), g);
  CHECK(h1_seminorm(space, lin) == Approx(g.norm()).epsilon(1e-11));
  CHECK(h1_norm(space, lin) * h1_norm(space, lin) ==
        Approx(l2_norm(space, lin) * l2_norm(space, lin) + g.squaredNorm())
            .epsilon(1e-10));

  // the interpolant of an affine field has (numerically) zero error
  ErrorNorms err = error_norms(
      space, lin, [&](const Vec3& x) { return QTensor(Vec5(g * x)); },
      [&](const Vec3&) { return g; });
  CHECK(err.h1() <= 1e-12);
}

TEST_CASE("interpolation error rates for the smooth reference field") {
  double prev_h1 = 0, prev_l2 = 0, prev_h = 0;
  std::vector<double> orders_h1, orders_l2;
  for (int n : {2, 4, 8}) {
    TetMesh mesh = unit_cube_mesh(n);
    FeSpace space(mesh);
    DiscreteField f = interpolate(space, ManufacturedSolution::value);
    ErrorNorms err = error_norms(space, f, ManufacturedSolution::value,
                                 ManufacturedSolution::gradient, 6);
    if (prev_h > 0) {
      double lh = std::log(prev_h / mesh.h_max);
      orders_h1.push_back(std::log(prev_h1 / err.h1()) / lh);
      orders_l2.push_back(std::log(prev_l2 / err.l2) / lh);
    }
    prev_h = mesh.h_max;
    prev_h1 = err.h1();
    prev_l2 = err.l2;
  }
  CHECK(orders_h1.back() == Approx(1.0).margin(0.2));
  CHECK(orders_l2.back() == Approx(2.0).margin(0.2));
}
