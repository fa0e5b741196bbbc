#include "pencilkit/generators.hpp"

#include <algorithm>
#include <cmath>

#include "pencilkit/errors.hpp"

namespace pencilkit {

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

double min_abs_eigenvalue(const Matrix& m) {
  return sym_eig(SymMatrix(m)).values.cwiseAbs().minCoeff();
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Matrix random_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> nd;
  Matrix m(rows, cols);
  // Column-major fill keeps the draw order independent of Eigen internals.
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = nd(rng);
  return m;
}

SymMatrix random_symmetric(int n, Rng& rng) {
  const Matrix g = random_matrix(n, n, rng);
  return SymMatrix(g + g.transpose());
}

Matrix random_orthogonal(int n, Rng& rng) {
  const Matrix g = random_matrix(n, n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix the sign ambiguity of the factorization.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

Subspace random_subspace(int n, int k, Rng& rng) {
  if (k < 0 || k > n) throw InvalidArgument("random_subspace: dimension out of range");
  if (k == 0) return Subspace::zero(n);
  return Subspace(n, random_orthogonal(n, rng).leftCols(k), 1e-10);
}

SymMatrix random_nonsingular_symmetric(int n, int n_minus, Rng& rng) {
  if (n_minus < 0 || n_minus > n) throw InvalidArgument("random_nonsingular_symmetric: bad inertia");
  Vector d(n);
  for (int i = 0; i < n; ++i) d(i) = uniform(rng, 0.5, 2.0) * (i < n_minus ? -1.0 : 1.0);
  const Matrix q = random_orthogonal(n, rng);
  return SymMatrix(q * d.asDiagonal() * q.transpose());
}

SymmetricPencil random_indefinite_pencil(int n, Rng& rng, bool mixed) {
  if (mixed && n < 2) throw InvalidArgument("random_indefinite_pencil: mixed inertia needs n ≥ 2");
  const int n_minus = mixed ? uniform_int(rng, 1, n - 1) : uniform_int(rng, 0, n);
  SymMatrix b = random_nonsingular_symmetric(n, n_minus, rng);
  return SymmetricPencil(random_symmetric(n, rng), std::move(b));
}

SymmetricPencil random_definite_pencil(int n, Rng& rng) {
  if (n < 2) throw InvalidArgument("random_definite_pencil: n ≥ 2 required");
  SymMatrix b = random_nonsingular_symmetric(n, uniform_int(rng, 1, n - 1), rng);
  const Matrix g = random_matrix(n, n, rng);
  const double sigma = uniform(rng, -1.0, 1.0);
  Matrix a = g * g.transpose() / n + 0.1 * Matrix::Identity(n, n) + sigma * b.matrix();
  return SymmetricPencil(SymMatrix(a), std::move(b));
}

JordanPencil random_jordan_pencil(int n, Rng& rng, bool allow_complex) {
  if (n < 2) throw InvalidArgument("random_jordan_pencil: n ≥ 2 required");
  std::vector<JordanBlockSpec> blocks;
  int left = n;
  blocks.push_back({0.0, std::min(left, uniform_int(rng, 2, 3)), 1});
  left -= blocks.back().size;
  bool have_complex = false;
  while (left > 0) {
    if (allow_complex && !have_complex && left >= 2 && uniform(rng, 0.0, 1.0) < 0.3) {
      blocks.push_back({Complex(uniform(rng, -2.0, 2.0), uniform(rng, 0.5, 2.0)), 2, 0});
      have_complex = true;
    } else {
      blocks.push_back({0.0, std::min(left, uniform_int(rng, 1, 3)), 1});
    }
    left -= blocks.back().size;
  }
  std::vector<double> used;
  for (auto& blk : blocks) {
    if (blk.sign == 0) continue;
    double l = 0.0;
    do {
      l = uniform(rng, -3.0, 3.0);
    } while (std::any_of(used.begin(), used.end(), [&](double u) { return std::abs(u - l) < 0.5; }));
    used.push_back(l);
    blk.eigenvalue = l;
    blk.sign = uniform(rng, 0.0, 1.0) < 0.5 ? -1 : 1;
  }

  Matrix a0 = Matrix::Zero(n, n), b0 = Matrix::Zero(n, n);
  int at = 0;
  for (const auto& blk : blocks) {
    const int s = blk.size;
    if (blk.sign == 0) {
      const double re = blk.eigenvalue.real(), im = blk.eigenvalue.imag();
      a0.block(at, at, 2, 2) << re, im, im, -re;
      b0.block(at, at, 2, 2) << 1.0, 0.0, 0.0, -1.0;
    } else {
      Matrix flip = Matrix::Zero(s, s), shift = Matrix::Zero(s, s);
      for (int i = 0; i < s; ++i) flip(i, s - 1 - i) = 1.0;
      for (int i = 0; i + 1 < s; ++i) shift(i, i + 1) = 1.0;
      a0.block(at, at, s, s) = blk.sign * (blk.eigenvalue.real() * flip + flip * shift);
      b0.block(at, at, s, s) = blk.sign * flip;
    }
    at += s;
  }
  Matrix c;
  do {
    c = Matrix::Identity(n, n) + 0.3 * random_matrix(n, n, rng);
  } while (Eigen::JacobiSVD<Matrix>(c).singularValues().minCoeff() < 0.3);
  return JordanPencil{SymmetricPencil(SymMatrix(c.transpose() * a0 * c), SymMatrix(c.transpose() * b0 * c)),
                      blocks};
}

SymmetricPencil invariant_kernel_pencil(int n, int k, Rng& rng) {
  if (k < 1 || k >= n) throw InvalidArgument("invariant_kernel_pencil: need 1 ≤ k < n");
  const int m = n - k;
  const Matrix b1 = random_nonsingular_symmetric(m, uniform_int(rng, 0, m), rng).matrix();
  Matrix a1;
  do {
    a1 = random_symmetric(m, rng).matrix();
  } while (min_abs_eigenvalue(a1) < 0.05);
  const Matrix a2 = random_nonsingular_symmetric(k, uniform_int(rng, 0, k), rng).matrix();
  const Matrix q = random_orthogonal(n, rng);
  const Matrix a = q * block_diag(a1, a2) * q.transpose();
  const Matrix b = q * block_diag(b1, Matrix::Zero(k, k)) * q.transpose();
  return SymmetricPencil(SymMatrix(a), SymMatrix(b));
}

SymmetricPencil neutral_multivalued_pencil(int n, Rng& rng) {
  if (n < 3) throw InvalidArgument("neutral_multivalued_pencil: n ≥ 3 required");
  Matrix a3(3, 3);
  do {
    const double a11 = uniform(rng, -2.0, 2.0), a12 = uniform(rng, -2.0, 2.0), a22 = uniform(rng, -2.0, 2.0);
    a3 << a11, a12, 1.0, a12, a22, -1.0, 1.0, -1.0, 0.0;
  } while (min_abs_eigenvalue(a3) < 0.05);
  Matrix b3 = Matrix::Zero(3, 3);
  b3(0, 0) = 1.0;
  b3(1, 1) = -1.0;
  Matrix a = a3, b = b3;
  if (n > 3) {
    Matrix a2;
    do {
      a2 = random_symmetric(n - 3, rng).matrix();
    } while (min_abs_eigenvalue(a2) < 0.05);
    a = block_diag(a3, a2);
    b = block_diag(b3, random_nonsingular_symmetric(n - 3, uniform_int(rng, 0, n - 3), rng).matrix());
  }
  const Matrix q = random_orthogonal(n, rng);
  return SymmetricPencil(SymMatrix(q * a * q.transpose()), SymMatrix(q * b * q.transpose()));
}

LinearRelation random_multivalued_relation(int n, int k, Rng& rng, bool selfadjoint) {
  if (k < 1 || k >= n) throw InvalidArgument("random_multivalued_relation: need 1 ≤ k < n");
  const SymMatrix gram = random_nonsingular_symmetric(n, uniform_int(rng, 0, n), rng);
  Matrix f, c;
  do {
    f = orthonormalize(random_matrix(n, k, rng)).basis();
    c = null_space(Matrix(f.transpose() * gram.matrix()));
  } while (f.cols() != k || min_abs_eigenvalue(f.transpose() * gram.matrix() * f) < 0.1 ||
           min_abs_eigenvalue(c.transpose() * gram.matrix() * c) < 0.1);
  const int m = n - k;
  const Matrix gram_c = c.transpose() * gram.matrix() * c;
  const Matrix mc = selfadjoint ? Matrix(gram_c.inverse() * random_symmetric(m, rng).matrix())
                                : random_matrix(m, m, rng);
  Matrix pairs = Matrix::Zero(2 * n, m + k);
  pairs.topLeftCorner(n, m) = c;
  pairs.bottomLeftCorner(n, m) = c * mc;
  pairs.bottomRightCorner(n, k) = f;
  return LinearRelation::from_pairs(pairs, gram);
}

LinearRelation neutral_relation(int n, Rng& rng) {
  if (n < 2) throw InvalidArgument("neutral_relation: n ≥ 2 required");
  const SymMatrix gram = random_nonsingular_symmetric(n, uniform_int(rng, 1, n - 1), rng);
  const SymEig e = sym_eig(gram);
  // e.values ascending: column 0 is negative, the last is positive.
  const Vector v = e.vectors.col(0) / std::sqrt(-e.values(0)) +
                   e.vectors.col(n - 1) / std::sqrt(e.values(n - 1));
  const int m = n - 2;
  Matrix pairs = Matrix::Zero(2 * n, m + 1);
  pairs.bottomLeftCorner(n, 1) = v;
  if (m > 0) {
    const Matrix x = random_matrix(n, m, rng);
    pairs.block(0, 1, n, m) = x;
    pairs.block(n, 1, n, m) = random_matrix(n, n, rng) * x;
  }
  return LinearRelation::from_pairs(pairs, gram);
}

}  // namespace pencilkit
