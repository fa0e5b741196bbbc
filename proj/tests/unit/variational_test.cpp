#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pencilkit/errors.hpp"
#include "pencilkit/generators.hpp"
#include "pencilkit/variational.hpp"
#include "test_support.hpp"

using namespace pencilkit;
using pktest::diag;
using pktest::vec;

namespace {

Subspace span(const Matrix& m) { return orthonormalize(m); }

Matrix cols(std::initializer_list<Vector> vs) {
  Matrix m(vs.begin()->size(), static_cast<int>(vs.size()));
  int j = 0;
  for (const auto& v : vs) m.col(j++) = v;
  return m;
}

}  // namespace

TEST(ProjectPencil, FullSpaceIsExact) {
  Rng rng(401);
  const SymmetricPencil p = random_indefinite_pencil(5, rng);
  const ProjectedPencil pp = project_pencil(p, Subspace::full(5));
  EXPECT_EQ(pp.A_V.matrix(), p.A().matrix());
  EXPECT_EQ(pp.B_V.matrix(), p.B().matrix());
}

TEST(ProjectPencil, CoordinatePlane) {
  const SymmetricPencil p(diag({3, 2, 1}), SymMatrix::identity(3));
  const ProjectedPencil pp = project_pencil(p, span(cols({vec({1, 0, 0}), vec({0, 1, 0})})));
  EXPECT_LE((pp.A_V.matrix() - diag({3, 2}).matrix()).norm(), 1e-15);
  EXPECT_LE((pp.B_V.matrix() - Matrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(ProjectPencil, DiagonalLineAverages) {
  const SymmetricPencil p(diag({3, 2, 1}), SymMatrix::identity(3));
  const ProjectedPencil pp = project_pencil(p, span(cols({vec({1, 1, 1})})));
  EXPECT_NEAR(pp.A_V(0, 0), 2.0, 1e-14);
  EXPECT_NEAR(pp.B_V(0, 0), 1.0, 1e-14);
}

TEST(ProjectPencil, NeutralLineIsRejected) {
  const SymmetricPencil p(diag({1, 1}), diag({1, -1}));
  EXPECT_THROW(project_pencil(p, span(cols({vec({1, 1})}))), DegenerateTrialSpace);
}

TEST(ClassifiedEigenvalues, Examples) {
  const ClassifiedEigenvalues a = classified_projected_eigenvalues(diag({3, 2}), SymMatrix::identity(2));
  ASSERT_EQ(a.mu_plus.size(), 2u);
  EXPECT_NEAR(a.mu_plus[0], 2, 1e-14);
  EXPECT_NEAR(a.mu_plus[1], 3, 1e-14);
  EXPECT_TRUE(a.mu_minus.empty());

  const ClassifiedEigenvalues b = classified_projected_eigenvalues(diag({1, 1}), diag({1, -1}));
  ASSERT_EQ(b.mu_plus.size(), 1u);
  ASSERT_EQ(b.mu_minus.size(), 1u);
  EXPECT_NEAR(b.mu_plus[0], 1, 1e-14);
  EXPECT_NEAR(b.mu_minus[0], -1, 1e-14);

  const ClassifiedEigenvalues c = classified_projected_eigenvalues(diag({2}), diag({1}));
  ASSERT_EQ(c.mu_plus.size(), 1u);
  EXPECT_NEAR(c.mu_plus[0], 2, 1e-14);
}

TEST(ClassifiedEigenvalues, OrderingAndComplexPart) {
  const SymmetricPencil p(diag({1, 4, -2, -5}), diag({1, 1, -1, -1}));
  const ClassifiedEigenvalues c = classified_eigenvalues(p);
  EXPECT_EQ(c.mu_plus, (std::vector<double>{1, 4}));
  EXPECT_EQ(c.mu_minus, (std::vector<double>{5, 2}));

  const ClassifiedEigenvalues z = classified_projected_eigenvalues(pktest::sym({{0, 1}, {1, 0}}), diag({1, -1}));
  EXPECT_TRUE(z.mu_plus.empty());
  EXPECT_EQ(z.neutral_or_complex.size(), 2u);
}

TEST(ClassifiedEigenvalues, AgreesWithDefiniteOracle) {
  Rng rng(402);
  for (int t = 0; t < 60; ++t) {
    const oracle::DefiniteCase c = oracle::definite_case(2 + t % 7, rng);
    const oracle::DefiniteSpectrum want = oracle::definite_spectrum(c);
    const ClassifiedEigenvalues got = classified_eigenvalues(c.pencil);
    ASSERT_EQ(got.mu_plus.size(), want.plus.size());
    ASSERT_EQ(got.mu_minus.size(), want.minus.size());
    for (size_t i = 0; i < want.plus.size(); ++i)
      EXPECT_NEAR(got.mu_plus[i], want.plus[i], 1e-8 * std::max(1.0, std::abs(want.plus[i])));
    for (size_t i = 0; i < want.minus.size(); ++i)
      EXPECT_NEAR(got.mu_minus[i], want.minus[i], 1e-8 * std::max(1.0, std::abs(want.minus[i])));
  }
}

TEST(RayleighRitz, ClassicalPlane) {
  const SymmetricPencil p(diag({3, 2, 1}), SymMatrix::identity(3));
  const RayleighRitzReport r = rayleigh_ritz_bounds(p, span(cols({vec({1, 0, 0}), vec({0, 1, 0})})));
  EXPECT_EQ(r.trial_dim, 2);
  EXPECT_EQ(r.mu_plus, (std::vector<double>{2, 3}));
  EXPECT_EQ(r.full_plus.size(), 3u);
  EXPECT_EQ(r.bound_verdicts, (std::vector<bool>{true, true}));
  EXPECT_TRUE(r.all_pass());
}

TEST(RayleighRitz, Line) {
  const SymmetricPencil p(diag({3, 2, 1}), SymMatrix::identity(3));
  const RayleighRitzReport r = rayleigh_ritz_bounds(p, span(cols({vec({1, 1, 1})})));
  ASSERT_EQ(r.mu_plus.size(), 1u);
  EXPECT_NEAR(r.mu_plus[0], 2.0, 1e-14);
  EXPECT_TRUE(r.all_pass());
}

namespace {

// Positive-type eigenvalues of a real-spectrum pencil, from QZ and the sign
// of (Bx, x) on each eigenvector, ascending.
std::vector<double> qz_positive_type(const Matrix& a, const Matrix& b) {
  const Eigen::GeneralizedEigenSolver<Matrix> qz(a, b, true);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const Complex z = qz.alphas()(i) / qz.betas()(i);
    const CVector x = qz.eigenvectors().col(i);
    const double form = (x.adjoint() * b.cast<Complex>() * x)(0, 0).real();
    if (std::abs(z.imag()) < 1e-9 && form > 0) out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(RayleighRitz, OneNegativeDirectionDefiniteCases) {
  Rng rng(403);
  const SymMatrix b = diag({1, 1, 1, -1});
  int run = 0;
  for (int t = 0; t < 2000 && run < 60; ++t) {
    const SymmetricPencil p(random_symmetric(4, rng), b);
    const Subspace v = random_subspace(4, 2, rng);
    if (is_singular_pencil(p)) continue;
    const ClassifiedEigenvalues full = classified_eigenvalues(p);
    if (!full.neutral_or_complex.empty() || full.mu_minus.front() >= full.mu_plus.front()) continue;
    const double sigma = 0.5 * (full.mu_minus.front() + full.mu_plus.front());
    if (inertia(SymMatrix(p.A().matrix() - sigma * b.matrix())).n_plus != 4) continue;
    RayleighRitzReport r;
    try {
      r = rayleigh_ritz_bounds(p, v);
    } catch (const DegenerateTrialSpace&) {
      continue;
    }
    ++run;
    for (bool ok : r.bound_verdicts) EXPECT_TRUE(ok) << "trial " << t;
  }
  EXPECT_GE(run, 30);
}

TEST(RayleighRitz, InterlacedSpectrumCanViolateUnshiftedBound) {
  // Without definiteness a negative-type eigenvalue may sit among the
  // positive-type ones and the compressed value can drop below the first.
  Rng rng(403);
  const SymMatrix b = diag({1, 1, 1, -1});
  int violations = 0;
  for (int t = 0; t < 200; ++t) {
    const SymmetricPencil p(random_symmetric(4, rng), b);
    const Subspace v = random_subspace(4, 2, rng);
    if (is_singular_pencil(p) || !classified_eigenvalues(p).neutral_or_complex.empty()) continue;
    RayleighRitzReport r;
    try {
      r = rayleigh_ritz_bounds(p, v);
    } catch (const DegenerateTrialSpace&) {
      continue;
    }
    if (r.all_pass()) continue;
    ++violations;
    const std::vector<double> full = qz_positive_type(p.A().matrix(), b.matrix());
    const Matrix& vb = v.basis();
    const std::vector<double> mu =
        qz_positive_type(vb.transpose() * p.A().matrix() * vb, vb.transpose() * b.matrix() * vb);
    ASSERT_FALSE(mu.empty());
    EXPECT_LT(mu.front(), full.front());
    EXPECT_NEAR(r.mu_plus.front(), mu.front(), 1e-8 * std::max(1.0, std::abs(mu.front())));
    EXPECT_FALSE(r.full_minus.empty());
    EXPECT_GT(r.full_minus.front(), r.full_plus.front());
  }
  EXPECT_GT(violations, 0);
}

TEST(RayleighRitz, SingularBThrows) {
  EXPECT_THROW(rayleigh_ritz_bounds(SymmetricPencil(diag({1, 2}), diag({1, 0})), Subspace::full(2)), SingularB);
}

TEST(RayleighRitz, NestingOnDefiniteB) {
  Rng rng(404);
  for (int t = 0; t < 40; ++t) {
    const int n = 4 + t % 4;
    const Matrix g = random_matrix(n, n, rng);
    const SymmetricPencil p(random_symmetric(n, rng), SymMatrix(g * g.transpose() + 0.1 * Matrix::Identity(n, n)));
    const Matrix w = random_orthogonal(n, rng).leftCols(3);
    const Subspace vs(n, w.leftCols(2));
    const Subspace ws(n, w);
    const RayleighRitzReport small = rayleigh_ritz_bounds(p, vs);
    const RayleighRitzReport big = rayleigh_ritz_bounds(p, ws);
    ASSERT_EQ(small.mu_plus.size(), 2u);
    ASSERT_EQ(big.mu_plus.size(), 3u);
    for (size_t m = 0; m < 2; ++m) EXPECT_GE(small.mu_plus[m], big.mu_plus[m] - 1e-10);
    EXPECT_TRUE(small.all_pass());
    EXPECT_TRUE(big.all_pass());
  }
}

TEST(RayleighQuotientScan, Examples) {
  const SymmetricPencil a(diag({3, 1}), SymMatrix::identity(2));
  EXPECT_NEAR(rayleigh_quotient_scan(a, Subspace::full(2), Cone::positive, 32), 1.0, 1e-10);

  const SymmetricPencil b(diag({1, 1}), diag({1, -1}));
  EXPECT_NEAR(rayleigh_quotient_scan(b, span(cols({vec({1, 0})})), Cone::positive, 32), 1.0, 1e-12);
  EXPECT_THROW(rayleigh_quotient_scan(b, span(cols({vec({0, 1})})), Cone::positive, 32), EmptyConeIntersection);
  EXPECT_NEAR(rayleigh_quotient_scan(b, span(cols({vec({0, 1})})), Cone::negative, 32), -1.0, 1e-12);
}

TEST(RayleighQuotientScan, PositiveConeInfimumIsSmallestPositiveType) {
  Rng rng(405);
  for (int t = 0; t < 40; ++t) {
    const oracle::DefiniteCase c = oracle::definite_case(2 + t % 5, rng);
    const oracle::DefiniteSpectrum s = oracle::definite_spectrum(c);
    const double got = rayleigh_quotient_scan(c.pencil, Subspace::full(c.pencil.dim()), Cone::positive, 64, t);
    EXPECT_NEAR(got, s.plus.front(), 1e-8 * std::max(1.0, std::abs(s.plus.front())));
  }
}

TEST(SupInf, ReproducesClassifiedEigenvalues) {
  Rng rng(406);
  for (int t = 0; t < 12; ++t) {
    const oracle::DefiniteCase c = oracle::definite_case(3 + t % 3, rng);
    const Subspace v = random_subspace(c.pencil.dim(), 3, rng);
    ProjectedPencil pp{SymMatrix::zero(1), SymMatrix::zero(1)};
    try {
      pp = project_pencil(c.pencil, v);
    } catch (const DegenerateTrialSpace&) {
      continue;
    }
    const ClassifiedEigenvalues mu = classified_projected_eigenvalues(pp.A_V, pp.B_V);
    for (size_t m = 0; m < mu.mu_plus.size(); ++m) {
      const SupInfEstimate e = sup_inf_estimate(pp.A_V, pp.B_V, static_cast<int>(m) + 1, 24, 1000 + t);
      EXPECT_NEAR(e.value, mu.mu_plus[m], 1e-8 * std::max(1.0, std::abs(mu.mu_plus[m])))
          << "trial " << t << " m " << m;
      EXPECT_GT(e.evaluations, 0);
    }
  }
}
