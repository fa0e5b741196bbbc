#include "pencilkit/discretize.hpp"

#include <array>
#include <cmath>

#include "pencilkit/errors.hpp"

namespace pencilkit {

std::string_view to_string(Scheme s) {
  return s == Scheme::midpoint_nystrom ? "midpoint-nystrom" : "piecewise-linear-fem";
}

std::string_view to_string(OperatorSource s) {
  switch (s) {
    case OperatorSource::green_kernel:
      return "green-kernel";
    case OperatorSource::identity:
      return "identity";
    case OperatorSource::fem_laplacian:
      return "fem-laplacian";
  }
  return "unknown";
}

std::string_view to_string(Boundary b) {
  return b == Boundary::dirichlet_dirichlet ? "dirichlet-dirichlet" : "dirichlet-neumann";
}

void GridSpec::validate() const {
  if (n < 4) throw InvalidArgument("GridSpec: need at least 4 nodes");
  if (!(a < b)) throw InvalidArgument("GridSpec: empty interval");
}

double GridSpec::h() const {
  return scheme == Scheme::midpoint_nystrom ? (b - a) / n : (b - a) / (n - 1);
}

Vector GridSpec::nodes() const {
  validate();
  Vector x(n);
  const double step = h();
  for (int i = 0; i < n; ++i)
    x(i) = scheme == Scheme::midpoint_nystrom ? a + (i + 0.5) * step : a + i * step;
  if (scheme == Scheme::piecewise_linear_fem) x(n - 1) = b;
  return x;
}

double green_kernel(double x, double xi) { return x <= xi ? x : xi; }

SymmetricPencil green_kernel_pencil(const GridSpec& g) {
  g.validate();
  if (g.scheme != Scheme::midpoint_nystrom)
    throw InvalidArgument("green_kernel_pencil: midpoint Nyström grid required");
  if (g.a != 0.0 || g.b != 1.0) throw InvalidArgument("green_kernel_pencil: interval must be (0,1)");
  const Vector x = g.nodes();
  for (int i = 0; i < g.n; ++i)
    if (std::abs(2.0 * x(i) - 1.0) <= 1e-12)
      throw OddGrid("green_kernel_pencil: a node coincides with x = 1/2; use an even n");
  const double h = g.h();
  Matrix a(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) a(i, j) = h * green_kernel(x(i), x(j));
  return SymmetricPencil(SymMatrix(a), SymMatrix::diagonal((2.0 * x.array() - 1.0).matrix()));
}

namespace {

// First and last retained FEM node indices.
std::pair<int, int> fem_unknowns(const GridSpec& g, Boundary boundary) {
  return {1, boundary == Boundary::dirichlet_dirichlet ? g.n - 2 : g.n - 1};
}

}  // namespace

SymMatrix fem_laplacian(const GridSpec& g, Boundary boundary) {
  g.validate();
  if (g.scheme != Scheme::piecewise_linear_fem)
    throw InvalidArgument("fem_laplacian: piecewise-linear grid required");
  const double h = g.h();
  Matrix full = Matrix::Zero(g.n, g.n);
  for (int e = 0; e + 1 < g.n; ++e) {
    full(e, e) += 1.0 / h;
    full(e + 1, e + 1) += 1.0 / h;
    full(e, e + 1) -= 1.0 / h;
    full(e + 1, e) -= 1.0 / h;
  }
  const auto [lo, hi] = fem_unknowns(g, boundary);
  return SymMatrix(full.block(lo, lo, hi - lo + 1, hi - lo + 1));
}

SymMatrix fem_mass(const GridSpec& g, Boundary boundary, const std::function<double(double)>& weight) {
  g.validate();
  if (g.scheme != Scheme::piecewise_linear_fem)
    throw InvalidArgument("fem_mass: piecewise-linear grid required");
  const Vector x = g.nodes();
  // Gauss-Legendre on [0,1].
  constexpr std::array<double, 3> gp{0.1127016653792583, 0.5, 0.8872983346207417};
  constexpr std::array<double, 3> gw{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  Matrix full = Matrix::Zero(g.n, g.n);
  for (int e = 0; e + 1 < g.n; ++e) {
    const double he = x(e + 1) - x(e);
    for (std::size_t q = 0; q < gp.size(); ++q) {
      const double t = gp[q];
      const double w = weight ? weight(x(e) + t * he) : 1.0;
      const std::array<double, 2> phi{1.0 - t, t};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) full(e + i, e + j) += gw[q] * he * w * phi[i] * phi[j];
    }
  }
  const auto [lo, hi] = fem_unknowns(g, boundary);
  return SymMatrix(full.block(lo, lo, hi - lo + 1, hi - lo + 1));
}

SymmetricPencil weighted_multiplication_pencil(const std::function<double(double)>& w,
                                               const GridSpec& g, OperatorSource source,
                                               Boundary boundary) {
  g.validate();
  if (!w) throw InvalidArgument("weighted_multiplication_pencil: weight is empty");
  if (source == OperatorSource::fem_laplacian) {
    if (g.scheme != Scheme::piecewise_linear_fem)
      throw InvalidArgument("weighted_multiplication_pencil: fem-laplacian needs a FEM grid");
    return SymmetricPencil(fem_laplacian(g, boundary), fem_mass(g, boundary, w));
  }
  if (g.scheme != Scheme::midpoint_nystrom)
    throw InvalidArgument("weighted_multiplication_pencil: Nyström grid required for this source");
  const Vector x = g.nodes();
  Vector d(g.n);
  for (int i = 0; i < g.n; ++i) {
    d(i) = w(x(i));
    if (!std::isfinite(d(i))) throw InvalidArgument("weighted_multiplication_pencil: unbounded weight");
  }
  SymMatrix bmat = SymMatrix::diagonal(d);
  if (source == OperatorSource::identity) return SymmetricPencil(SymMatrix::identity(g.n), bmat);
  const double h = g.h();
  Matrix a(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) a(i, j) = h * green_kernel(x(i), x(j));
  return SymmetricPencil(SymMatrix(a), bmat);
}

}  // namespace pencilkit
