#pragma once

// Assembly of the elastic bilinear form, bulk residuals/tangents, energies
// and norms for P1 Q-tensor fields.
//
// Elastic density (coefficient form): with G(a,j) = d q_a / d x_j,
//   A-pairing(G, H) = L1 sum_aj G(a,j) H(a,j)
//                   + sum_ab G.row(a) (L2 C_ab + L3 C_ab^T) H.row(b)^T
// where C_ab = E_a E_b captures the divergence and cross-gradient
// contractions of the basis matrices.

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <functional>
#include <memory>
#include <vector>

#include "qlc/errors.hpp"
#include "qlc/fe_space.hpp"
#include "qlc/ldg.hpp"
#include "qlc/maier_saupe.hpp"
#include "qlc/simplex_quad.hpp"
#include "qlc/tensor.hpp"

namespace qlc {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

struct ElasticConstants {
  double L1 = 1.0;
  double L2 = 0.0;
  double L3 = 0.0;
};

struct EllipticityReport {
  bool ok = false;
  double margin = 0.0;  // min slack across the four strict inequalities
};

inline EllipticityReport ellipticity_check(const ElasticConstants& c) {
  double slacks[4] = {
      c.L1,
      c.L3 + c.L1,
      2.0 * c.L1 - c.L3,
      c.L2 + 0.6 * c.L1 + 0.1 * c.L3,
  };
  EllipticityReport r;
  r.margin = *std::min_element(std::begin(slacks), std::end(slacks));
  r.ok = r.margin > 0;
  return r;
}

namespace detail {

inline const std::array<std::array<Mat3, 5>, 5>& basis_products() {
  static const auto prods = [] {
    std::array<std::array<Mat3, 5>, 5> c;
    const auto& e = tensor_basis();
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) c[a][b] = e[a] * e[b];
    return c;
  }();
  return prods;
}

}  // namespace detail

// A-pairing of two coefficient gradients (trial G, test H).
inline double elastic_pair(const ElasticConstants& c, const Mat5x3& g,
                           const Mat5x3& h) {
  const auto& prod = detail::basis_products();
  double v = c.L1 * g.cwiseProduct(h).sum();
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) {
      const Mat3& cab = prod[a][b];
      v += g.row(a) * (c.L2 * cab + c.L3 * cab.transpose()) *
           h.row(b).transpose();
    }
  return v;
}

// Elastic energy density W(G) = (1/2) A-pairing(G, G).
inline double elastic_density(const ElasticConstants& c, const Mat5x3& g) {
  return 0.5 * elastic_pair(c, g, g);
}

struct ElasticMatrices {
  SpMat full;  // 5V x 5V
  SpMat ff;    // free x free
};

// P1 gradients are elementwise constant, so single-point quadrature is exact.
inline ElasticMatrices assemble_elastic(const FeSpace& space,
                                        const ElasticConstants& c,
                                        bool allow_nonelliptic = false) {
  if (!allow_nonelliptic && !ellipticity_check(c).ok)
    throw EllipticityError("assemble_elastic: elastic constants violate the "
                           "ellipticity conditions");
  const auto& prod = detail::basis_products();
  const TetMesh& mesh = *space.mesh;
  std::vector<Triplet> trip_full, trip_ff;
  for (std::size_t e = 0; e < mesh.n_tets(); ++e) {
    const Tet& t = mesh.tets[e];
    const Mat3x4& g = space.shape_gradients[e];
    const double vol = space.volumes[e];
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n) {
        const Vec3 gm = g.col(m);  // test
        const Vec3 gn = g.col(n);  // trial
        const double dot_mn = gm.dot(gn);
        for (int a = 0; a < 5; ++a)
          for (int b = 0; b < 5; ++b) {
            double val = (a == b) ? c.L1 * dot_mn : 0.0;
            const Mat3& cab = prod[a][b];
            val += gn.transpose() * (c.L2 * cab + c.L3 * cab.transpose()) * gm;
            val *= vol;
            int row = 5 * t[m] + b;
            int col = 5 * t[n] + a;
            trip_full.emplace_back(row, col, val);
            int fr = space.free_dof(t[m], b);
            int fc = space.free_dof(t[n], a);
            if (fr >= 0 && fc >= 0) trip_ff.emplace_back(fr, fc, val);
          }
      }
  }
  ElasticMatrices out;
  out.full.resize(space.n_dofs(), space.n_dofs());
  out.full.setFromTriplets(trip_full.begin(), trip_full.end());
  out.ff.resize(space.n_free_dofs(), space.n_free_dofs());
  out.ff.setFromTriplets(trip_ff.begin(), trip_ff.end());
  return out;
}

// ---------------------------------------------------------------------------
// Bulk potentials behind a common pointwise interface.

struct BulkEval {
  double density = 0.0;
  Vec5 grad = Vec5::Zero();
  Mat5 hess = Mat5::Zero();
};

class BulkPotential {
 public:
  virtual ~BulkPotential() = default;
  virtual bool requires_physical() const = 0;
  // cache_key identifies the (element, quadrature point) slot for warm starts.
  virtual BulkEval eval(const QTensor& q, std::size_t cache_key,
                        bool need_hessian) const = 0;
};

class LdgPotential final : public BulkPotential {
 public:
  explicit LdgPotential(const LdgParams& p) : params_(p) {}
  bool requires_physical() const override { return false; }
  BulkEval eval(const QTensor& q, std::size_t, bool need_hessian) const override {
    BulkEval out;
    out.density = ldg_density(params_, q);
    out.grad = ldg_gradient(params_, q).coeffs;
    if (need_hessian) out.hess = ldg_hessian(params_, q);
    return out;
  }
  const LdgParams& params() const { return params_; }

 private:
  LdgParams params_;
};

class BmPotential final : public BulkPotential {
 public:
  BmPotential(const BmParams& p, SphereRule rule, double dual_tol = 1e-10)
      : params_(p), rule_(std::move(rule)), dual_tol_(dual_tol) {}
  bool requires_physical() const override { return true; }
  BulkEval eval(const QTensor& q, std::size_t cache_key,
                bool need_hessian) const override {
    std::optional<QTensor> warm;
    if (cache_key < warm_.size() && warm_valid_[cache_key])
      warm = QTensor(warm_[cache_key]);
    MaierSaupeState st = solve_multiplier(q, rule_, warm, dual_tol_);
    if (cache_key != knocache) {
      if (cache_key >= warm_.size()) {
        warm_.resize(cache_key + 1, Vec5::Zero());
        warm_valid_.resize(cache_key + 1, false);
      }
      warm_[cache_key] = st.lambda.coeffs;
      warm_valid_[cache_key] = true;
    }
    BulkEval out;
    out.density = bm_density(params_, st);
    out.grad = bm_gradient(params_, st).coeffs;
    if (need_hessian) out.hess = bm_hessian(params_, st);
    return out;
  }
  const BmParams& params() const { return params_; }
  const SphereRule& rule() const { return rule_; }

  static constexpr std::size_t knocache = static_cast<std::size_t>(-1);

 private:
  BmParams params_;
  SphereRule rule_;
  double dual_tol_;
  mutable std::vector<Vec5> warm_;
  mutable std::vector<bool> warm_valid_;
};

// ---------------------------------------------------------------------------
// Bulk residual / tangent by tet quadrature.

inline void check_physical_at(const BulkPotential& pot, const QTensor& q,
                              std::size_t elem, std::size_t pt) {
  if (!pot.requires_physical()) return;
  double m = physicality_margin(q);
  if (!(m > 0))
    throw NotPhysicalAtQuadPointError(
        "bulk assembly: field not physical at quadrature point (margin " +
            std::to_string(m) + ")",
        elem, pt, m);
}

inline Eigen::VectorXd assemble_bulk_residual(const FeSpace& space,
                                              const DiscreteField& field,
                                              const BulkPotential& pot,
                                              int quad_degree = 4) {
  SimplexRule rule = simplex_rule(quad_degree);
  const TetMesh& mesh = *space.mesh;
  Eigen::VectorXd r = Eigen::VectorXd::Zero(space.n_free_dofs());
  for (std::size_t e = 0; e < mesh.n_tets(); ++e) {
    const Tet& t = mesh.tets[e];
    const double scale = 6.0 * space.volumes[e];
    for (std::size_t k = 0; k < rule.size(); ++k) {
      QTensor q = field.at_barycentric(e, rule.bary[k]);
      check_physical_at(pot, q, e, k);
      BulkEval be = pot.eval(q, e * rule.size() + k, false);
      const double w = scale * rule.weights[k];
      for (int m = 0; m < 4; ++m) {
        double phi = rule.bary[k][m];
        for (int b = 0; b < 5; ++b) {
          int dof = space.free_dof(t[m], b);
          if (dof >= 0) r[dof] += w * phi * be.grad[b];
        }
      }
    }
  }
  return r;
}

inline SpMat assemble_bulk_tangent(const FeSpace& space,
                                   const DiscreteField& field,
                                   const BulkPotential& pot,
                                   int quad_degree = 4) {
  SimplexRule rule = simplex_rule(quad_degree);
  const TetMesh& mesh = *space.mesh;
  std::vector<Triplet> trips;
  for (std::size_t e = 0; e < mesh.n_tets(); ++e) {
    const Tet& t = mesh.tets[e];
    const double scale = 6.0 * space.volumes[e];
    for (std::size_t k = 0; k < rule.size(); ++k) {
      QTensor q = field.at_barycentric(e, rule.bary[k]);
      check_physical_at(pot, q, e, k);
      BulkEval be = pot.eval(q, e * rule.size() + k, true);
      const double w = scale * rule.weights[k];
      for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
          double phimn = w * rule.bary[k][m] * rule.bary[k][n];
          for (int b = 0; b < 5; ++b) {
            int row = space.free_dof(t[m], b);
            if (row < 0) continue;
            for (int a = 0; a < 5; ++a) {
              int col = space.free_dof(t[n], a);
              if (col >= 0) trips.emplace_back(row, col, phimn * be.hess(b, a));
            }
          }
        }
      }
    }
  }
  SpMat j(space.n_free_dofs(), space.n_free_dofs());
  j.setFromTriplets(trips.begin(), trips.end());
  return j;
}

// Total energy: elastic density at the constant element gradient plus bulk
// density by quadrature.
inline double energy(const FeSpace& space, const DiscreteField& field,
                     const ElasticConstants& c, const BulkPotential& pot,
                     int quad_degree = 4) {
  SimplexRule rule = simplex_rule(quad_degree);
  const TetMesh& mesh = *space.mesh;
  double total = 0.0;
  for (std::size_t e = 0; e < mesh.n_tets(); ++e) {
    Mat5x3 g = field.gradient_on(e);
    total += space.volumes[e] * elastic_density(c, g);
    const double scale = 6.0 * space.volumes[e];
    for (std::size_t k = 0; k < rule.size(); ++k) {
      QTensor q = field.at_barycentric(e, rule.bary[k]);
      check_physical_at(pot, q, e, k);
      BulkEval be = pot.eval(q, BmPotential::knocache, false);
      total += scale * rule.weights[k] * be.density;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Scalar P1 matrices (building blocks for norms and test oracles).

inline SpMat scalar_stiffness(const FeSpace& space) {
  const TetMesh& mesh = *space.mesh;
  std::vector<Triplet> trips;
  for (std::size_t e = 0; e < mesh.n_tets(); ++e) {
    const Tet& t = mesh.tets[e];
    const Mat3x4& g = space.shape_gradients[e];
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        trips.emplace_back(t[m], t[n],
                           space.volumes[e] * g.col(m).dot(g.col(n)));
  }
  SpMat k(mesh.n_vertices(), mesh.n_vertices());
  k.setFromTriplets(trips.begin(), trips.end());
  return k;
}

inline SpMat scalar_mass(const FeSpace& space) {
  const TetMesh& mesh = *space.mesh;
  std::vector<Triplet> trips;
  for (std::size_t e = 0; e < mesh.n_tets(); ++e) {
    const Tet& t = mesh.tets[e];
    for (int m = 0; m < 4; ++m)
      for (int n = 0; n < 4; ++n)
        trips.emplace_back(t[m], t[n],
                           space.volumes[e] * (m == n ? 0.1 : 0.05));
  }
  SpMat mm(mesh.n_vertices(), mesh.n_vertices());
  mm.setFromTriplets(trips.begin(), trips.end());
  return mm;
}

// Restriction of a scalar vertex matrix to free vertices.
inline SpMat restrict_scalar_free(const FeSpace& space, const SpMat& m) {
  std::vector<Triplet> trips;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it) {
      int r = space.vertex_to_free[it.row()];
      int c = space.vertex_to_free[it.col()];
      if (r >= 0 && c >= 0) trips.emplace_back(r, c, it.value());
    }
  SpMat out(space.free_vertices.size(), space.free_vertices.size());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

// ---------------------------------------------------------------------------
// Norms.

inline double l2_norm(const FeSpace& space, const DiscreteField& field) {
  SimplexRule rule = simplex_rule(2);
  double acc = 0.0;
  for (std::size_t e = 0; e < space.mesh->n_tets(); ++e) {
    const double scale = 6.0 * space.volumes[e];
    for (std::size_t k = 0; k < rule.size(); ++k) {
      QTensor q = field.at_barycentric(e, rule.bary[k]);
      acc += scale * rule.weights[k] * q.coeffs.squaredNorm();
    }
  }
  return std::sqrt(acc);
}

inline double h1_seminorm(const FeSpace& space, const DiscreteField& field) {
  double acc = 0.0;
  for (std::size_t e = 0; e < space.mesh->n_tets(); ++e)
    acc += space.volumes[e] * field.gradient_on(e).squaredNorm();
  return std::sqrt(acc);
}

inline double h1_norm(const FeSpace& space, const DiscreteField& field) {
  double l2 = l2_norm(space, field);
  double semi = h1_seminorm(space, field);
  return std::sqrt(l2 * l2 + semi * semi);
}

struct ErrorNorms {
  double l2 = 0.0;
  double h1_semi = 0.0;
  double h1() const { return std::sqrt(l2 * l2 + h1_semi * h1_semi); }
};

// Error against an exact field given by value and coefficient-gradient
// callbacks, integrated with elevated quadrature.
inline ErrorNorms error_norms(
    const FeSpace& space, const DiscreteField& field,
    const std::function<QTensor(const Vec3&)>& exact_value,
    const std::function<Mat5x3(const Vec3&)>& exact_gradient,
    int quad_degree = 4) {
  SimplexRule rule = simplex_rule(std::max(quad_degree, 4));
  const TetMesh& mesh = *space.mesh;
  double l2 = 0.0, h1s = 0.0;
  for (std::size_t e = 0; e < mesh.n_tets(); ++e) {
    const Tet& t = mesh.tets[e];
    const double scale = 6.0 * space.volumes[e];
    Mat5x3 gh = field.gradient_on(e);
    for (std::size_t k = 0; k < rule.size(); ++k) {
      Vec3 x = Vec3::Zero();
      for (int m = 0; m < 4; ++m)
        x += rule.bary[k][m] * mesh.vertices[t[m]];
      QTensor diff = exact_value(x) - field.at_barycentric(e, rule.bary[k]);
      Mat5x3 gdiff = exact_gradient(x) - gh;
      l2 += scale * rule.weights[k] * diff.coeffs.squaredNorm();
      h1s += scale * rule.weights[k] * gdiff.squaredNorm();
    }
  }
  ErrorNorms out;
  out.l2 = std::sqrt(l2);
  out.h1_semi = std::sqrt(h1s);
  return out;
}

// ---------------------------------------------------------------------------
// Weak residual of an exact (manufactured) field, used as forcing:
//   l(P) = A(Q_exact, P) + B(Q_exact, P)  for all free test functions P.

inline Eigen::VectorXd assemble_exact_weak_residual(
    const FeSpace& space, const ElasticConstants& c, const BulkPotential& pot,
    const std::function<QTensor(const Vec3&)>& exact_value,
    const std::function<Mat5x3(const Vec3&)>& exact_gradient,
    int quad_degree = 6) {
  const auto& prod = detail::basis_products();
  SimplexRule rule = simplex_rule(quad_degree);
  const TetMesh& mesh = *space.mesh;
  Eigen::VectorXd r = Eigen::VectorXd::Zero(space.n_free_dofs());
  for (std::size_t e = 0; e < mesh.n_tets(); ++e) {
    const Tet& t = mesh.tets[e];
    const Mat3x4& gphi = space.shape_gradients[e];
    const double scale = 6.0 * space.volumes[e];
    for (std::size_t k = 0; k < rule.size(); ++k) {
      Vec3 x = Vec3::Zero();
      for (int m = 0; m < 4; ++m)
        x += rule.bary[k][m] * mesh.vertices[t[m]];
      QTensor q = exact_value(x);
      check_physical_at(pot, q, e, k);
      Mat5x3 gq = exact_gradient(x);
      BulkEval be = pot.eval(q, e * rule.size() + k, false);
      const double w = scale * rule.weights[k];
      // Elastic pairing against each unit test gradient (comp b, vertex m).
      for (int m = 0; m < 4; ++m) {
        const Vec3 gm = gphi.col(m);
        const double phi = rule.bary[k][m];
        for (int b = 0; b < 5; ++b) {
          int dof = space.free_dof(t[m], b);
          if (dof < 0) continue;
          double val = c.L1 * gq.row(b).dot(gm);
          for (int a = 0; a < 5; ++a) {
            const Mat3& cab = prod[a][b];
            val += gq.row(a) * (c.L2 * cab + c.L3 * cab.transpose()) * gm;
          }
          r[dof] += w * (val + be.grad[b] * phi);
        }
      }
    }
  }
  return r;
}

}  // namespace qlc
