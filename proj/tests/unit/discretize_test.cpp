#include <cmath>

#include <gtest/gtest.h>

#include "pencilkit/discretize.hpp"
#include "pencilkit/errors.hpp"
#include "pencilkit/reduction.hpp"
#include "pencilkit/variational.hpp"

using namespace pencilkit;

namespace {

const double kPi = std::acos(-1.0);

double smallest_real_eigenvalue(const SymmetricPencil& p) {
  const auto v = pencil_eigenvalues(p).multiset();
  double best = INFINITY;
  for (const auto& z : v) best = std::min(best, z.real());
  return best;
}

}  // namespace

TEST(GreenKernel, IsMinimum) {
  EXPECT_EQ(green_kernel(0.2, 0.7), 0.2);
  EXPECT_EQ(green_kernel(0.7, 0.2), 0.2);
  EXPECT_EQ(green_kernel(0.5, 0.5), 0.5);
}

TEST(GridSpec, NodesAndValidation) {
  const GridSpec mid{4, Scheme::midpoint_nystrom, 0.0, 1.0};
  EXPECT_DOUBLE_EQ(mid.h(), 0.25);
  EXPECT_DOUBLE_EQ(mid.nodes()(0), 0.125);
  const GridSpec fem{5, Scheme::piecewise_linear_fem, 0.0, 1.0};
  EXPECT_DOUBLE_EQ(fem.h(), 0.25);
  EXPECT_DOUBLE_EQ(fem.nodes()(4), 1.0);
  EXPECT_THROW((GridSpec{3}).validate(), InvalidArgument);
  EXPECT_THROW((GridSpec{8, Scheme::midpoint_nystrom, 1.0, 0.0}).validate(), InvalidArgument);
}

TEST(GreenKernelPencil, LargestEigenvalue) {
  const SymmetricPencil p = green_kernel_pencil(GridSpec{32});
  const double top = sym_eig(p.A()).values.maxCoeff();
  EXPECT_NEAR(top, 4.0 / (kPi * kPi), 1e-3);
}

TEST(GreenKernelPencil, WeightInertia) {
  const SymmetricPencil p = green_kernel_pencil(GridSpec{32});
  EXPECT_EQ(inertia(p.B()), (Inertia{16, 0, 16}));
  EXPECT_EQ(p.A().asymmetry(), 0.0);
  EXPECT_EQ(p.B().asymmetry(), 0.0);
}

TEST(GreenKernelPencil, OddGridThrows) {
  EXPECT_THROW(green_kernel_pencil(GridSpec{33}), OddGrid);
}

TEST(GreenKernelPencil, RefinementReducesError) {
  const double exact = 4.0 / (kPi * kPi);
  double previous = INFINITY;
  for (int n : {8, 16, 32, 64}) {
    const double err = std::abs(sym_eig(green_kernel_pencil(GridSpec{n}).A()).values.maxCoeff() - exact);
    EXPECT_LT(err, previous) << "n=" << n;
    previous = err;
  }
}

TEST(GreenKernelPencil, LeadingEigenvaluesAtN64) {
  const Vector ev = sym_eig(green_kernel_pencil(GridSpec{64}).A()).values.reverse();
  for (int k = 1; k <= 4; ++k) {
    const double exact = 1.0 / ((k - 0.5) * (k - 0.5) * kPi * kPi);
    EXPECT_NEAR(ev(k - 1), exact, 0.02 * exact) << "k=" << k;
  }
}

TEST(GreenKernelPencil, FeedsReduction) {
  for (int n : {16, 32, 64}) {
    const CorrespondenceReport r = spectral_correspondence_report(green_kernel_pencil(GridSpec{n}));
    EXPECT_TRUE(r.pass) << "n=" << n << " hausdorff " << r.hausdorff << " angle " << r.max_angle;
  }
}

TEST(WeightedPencil, MatchesGreenKernelPencil) {
  const GridSpec g{16};
  const SymmetricPencil a = weighted_multiplication_pencil([](double x) { return 2 * x - 1; }, g,
                                                           OperatorSource::green_kernel);
  const SymmetricPencil b = green_kernel_pencil(g);
  EXPECT_EQ(a.A().matrix(), b.A().matrix());
  EXPECT_EQ(a.B().matrix(), b.B().matrix());
}

TEST(WeightedPencil, IdentitySourceWithUnitWeight) {
  const SymmetricPencil p = weighted_multiplication_pencil([](double) { return 1.0; }, GridSpec{8},
                                                           OperatorSource::identity);
  EXPECT_EQ(p.A().matrix(), Matrix::Identity(8, 8));
  EXPECT_EQ(p.B().matrix(), Matrix::Identity(8, 8));
}

TEST(WeightedPencil, FemWithLinearWeight) {
  const GridSpec g{32, Scheme::piecewise_linear_fem};
  const SymmetricPencil p = weighted_multiplication_pencil([](double x) { return x; }, g,
                                                           OperatorSource::fem_laplacian);
  EXPECT_EQ(inertia(p.B()).n_plus, p.dim());
  for (const auto& z : pencil_eigenvalues(p).multiset()) {
    EXPECT_LE(std::abs(z.imag()), 1e-9);
    EXPECT_GT(z.real(), 0.0);
  }
}

TEST(WeightedPencil, SchemeAndSourceMustMatch) {
  EXPECT_THROW(weighted_multiplication_pencil([](double x) { return x; }, GridSpec{8},
                                              OperatorSource::fem_laplacian),
               InvalidArgument);
}

TEST(Fem, DirichletDirichletGroundState) {
  const GridSpec g{32, Scheme::piecewise_linear_fem};
  const SymmetricPencil p(fem_laplacian(g), fem_mass(g));
  EXPECT_NEAR(smallest_real_eigenvalue(p), kPi * kPi, 0.01 * kPi * kPi);
}

TEST(Fem, DirichletNeumannGroundState) {
  const GridSpec g{32, Scheme::piecewise_linear_fem};
  const SymmetricPencil p(fem_laplacian(g, Boundary::dirichlet_neumann), fem_mass(g, Boundary::dirichlet_neumann));
  const double exact = kPi * kPi / 4;
  EXPECT_NEAR(smallest_real_eigenvalue(p), exact, 0.01 * exact);
}

TEST(Fem, StiffnessPattern) {
  const GridSpec g{10, Scheme::piecewise_linear_fem};
  const SymMatrix k = fem_laplacian(g);
  const double h = g.h();
  ASSERT_EQ(k.dim(), 8);
  for (int i = 1; i + 1 < k.dim(); ++i) {
    EXPECT_NEAR(k(i, i - 1), -1 / h, 1e-12);
    EXPECT_NEAR(k(i, i), 2 / h, 1e-12);
    EXPECT_NEAR(k(i, i + 1), -1 / h, 1e-12);
    for (int j = 0; j < k.dim(); ++j)
      if (std::abs(i - j) > 1) EXPECT_EQ(k(i, j), 0.0);
  }
  EXPECT_EQ(fem_laplacian(g, Boundary::dirichlet_neumann).dim(), 9);
  EXPECT_NEAR(fem_laplacian(g, Boundary::dirichlet_neumann)(8, 8), 1 / h, 1e-12);
}

TEST(Fem, UnitMassIntegratesToLength) {
  const GridSpec g{12, Scheme::piecewise_linear_fem};
  const SymMatrix m = fem_mass(g, Boundary::dirichlet_neumann);
  // Hat functions without the Dirichlet node sum to 1 except on the first cell.
  const double total = Vector::Ones(m.dim()).dot(m.matrix() * Vector::Ones(m.dim()));
  EXPECT_NEAR(total, 1.0 - 2.0 * g.h() / 3.0, 1e-12);
}

TEST(Naming, ToString) {
  EXPECT_EQ(to_string(Boundary::dirichlet_neumann), "dirichlet-neumann");
  EXPECT_EQ(to_string(Scheme::midpoint_nystrom), "midpoint-nystrom");
}
