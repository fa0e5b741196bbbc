#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pencilkit/generators.hpp"
#include "test_support.hpp"

using namespace pencilkit;
using pktest::diag;

TEST(DetRoots, DiagonalPencils) {
  EXPECT_EQ(pktest::sorted_real(oracle::det_roots(SymmetricPencil(diag({2, 3}), diag({1, -1})))),
            (std::vector<double>{-3, 2}));
  const auto roots = oracle::det_roots(SymmetricPencil(diag({2, 5}), diag({1, 0})));
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].real(), 2.0, 1e-12);
}

TEST(DetRoots, CompanionOfKnownPolynomial) {
  // det(A − λB) for A = diag(1, 4, 9), B = I is (1−λ)(4−λ)(9−λ).
  const auto r = pktest::sorted_real(oracle::det_roots(SymmetricPencil(diag({1, 4, 9}), SymMatrix::identity(3))));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0], 1, 1e-12);
  EXPECT_NEAR(r[1], 4, 1e-12);
  EXPECT_NEAR(r[2], 9, 1e-12);
}

TEST(DetRoots, IndependentOfEigensolvers) {
  Rng rng(501);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 6;
    const SymmetricPencil p = random_indefinite_pencil(n, rng);
    const Eigen::GeneralizedEigenSolver<Matrix> qz(p.A().matrix(), p.B().matrix());
    std::vector<Complex> want;
    for (int i = 0; i < n; ++i) want.push_back(qz.alphas()(i) / qz.betas()(i));
    EXPECT_LE(oracle::multiset_distance(oracle::det_roots(p), want), 1e-7 * eigenvalue_scale(want));
  }
}

TEST(MultisetDistance, Conventions) {
  EXPECT_EQ(oracle::multiset_distance({}, {}), 0.0);
  EXPECT_TRUE(std::isinf(oracle::multiset_distance({1.0}, {})));
  EXPECT_NEAR(oracle::multiset_distance({1.0, 1.0}, {1.0, 1.5}), 0.5, 1e-15);
}

TEST(DefiniteSpectrum, DiagonalExample) {
  oracle::DefiniteCase c{SymmetricPencil(diag({1, 4, 2}), diag({1, 1, -1})), 0.0};
  const oracle::DefiniteSpectrum s = oracle::definite_spectrum(c);
  ASSERT_EQ(s.plus.size(), 2u);
  ASSERT_EQ(s.minus.size(), 1u);
  EXPECT_NEAR(s.plus[0], 1, 1e-12);
  EXPECT_NEAR(s.plus[1], 4, 1e-12);
  EXPECT_NEAR(s.minus[0], -2, 1e-12);
}
