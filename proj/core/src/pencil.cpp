#include "pencilkit/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "pencilkit/errors.hpp"
#include "pencilkit/reduction.hpp"

namespace pencilkit {

namespace {

constexpr double kPi = std::numbers::pi;

// Connected components of "closer than tol·max(1,|a|,|b|)", in order of
// first appearance.
std::vector<std::vector<std::size_t>> group_indices(const std::vector<Complex>& values, double tol) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = std::max({1.0, std::abs(values[i]), std::abs(values[j])});
      if (std::abs(values[i] - values[j]) <= tol * s) parent[find(i)] = find(j);
    }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    const auto pos = std::find(roots.begin(), roots.end(), r);
    if (pos == roots.end()) {
      roots.push_back(r);
      groups.push_back({i});
    } else {
      groups[static_cast<std::size_t>(pos - roots.begin())].push_back(i);
    }
  }
  return groups;
}

std::pair<Complex, int> group_mean(const std::vector<Complex>& values, const std::vector<std::size_t>& g) {
  Complex sum = 0.0;
  for (std::size_t i : g) sum += values[i];
  return {sum / static_cast<double>(g.size()), static_cast<int>(g.size())};
}

// Smallest-k right singular vectors of m, k clamped to [1, cap].
CMatrix near_null_vectors(const CMatrix& m, double tol, int cap) {
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const auto n = m.cols();
  const double smax = s.size() ? s(0) : 0.0;
  int k = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) <= tol * smax) ++k;
  k += static_cast<int>(n - s.size());  // wide matrices
  k = std::clamp(k, 1, std::max(1, cap));
  return svd.matrixV().rightCols(k);
}

Matrix near_null_vectors_real(const Matrix& m, double tol, int cap) {
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  int k = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) <= tol * smax) ++k;
  k = std::clamp(k, 1, std::max(1, cap));
  return svd.matrixV().rightCols(k);
}

// Scales v to unit norm with its largest-magnitude entry real and positive.
CVector normalize_phase(const CVector& v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const Complex a = v(imax);
  if (std::abs(a) == 0.0) return v;
  const Complex phase = std::conj(a) / std::abs(a);
  CVector w = v * phase;
  return w / w.norm();
}

// A defective eigenvalue of block size m splits by about eps^{1/m}, which for
// m ≥ 3 can exceed tol_cluster. Values are grouped at a looser radius and a
// group is kept only when L(mean) is numerically singular; otherwise its
// members are regrouped at tol_cluster under the same test, and a group that
// still fails is returned as singletons (eigenvalues accumulating near a
// point, as for discretized compact operators).
std::vector<std::pair<Complex, int>> pencil_clusters(const SymmetricPencil& p,
                                                     const std::vector<Complex>& values,
                                                     const Tolerances& tol) {
  auto singular_at = [&](Complex z) { return regular_type_margin(p, z) <= tol.eig * p.residual_scale(z); };
  std::vector<std::pair<Complex, int>> out;
  for (const auto& g : group_indices(values, 100.0 * tol.cluster)) {
    const auto loose = group_mean(values, g);
    if (loose.second == 1 || singular_at(loose.first)) {
      out.push_back(loose);
      continue;
    }
    std::vector<Complex> members;
    for (std::size_t i : g) members.push_back(values[i]);
    for (const auto& h : group_indices(members, tol.cluster)) {
      const auto tight = group_mean(members, h);
      if (tight.second == 1 || singular_at(tight.first)) {
        out.push_back(tight);
      } else {
        for (std::size_t i : h) out.emplace_back(members[i], 1);
      }
    }
  }
  return out;
}

PencilSpectrum build_items(const SymmetricPencil& p, const std::vector<Complex>& raw,
                           int infinite_count, const Tolerances& tol, bool with_chains) {
  PencilSpectrum out;
  out.infinite_count = infinite_count;
  const double escale = eigenvalue_scale(raw);
  for (auto [value, count] : pencil_clusters(p, raw, tol)) {
    EigenItem item;
    if (std::abs(value.imag()) <= tol.imag * escale) value = Complex(value.real(), 0.0);
    item.value = value;
    item.algebraic_multiplicity = count;
    if (value.imag() == 0.0) {
      const Matrix l = p.A().matrix() - value.real() * p.B().matrix();
      Matrix v = near_null_vectors_real(l, tol.eig, count);
      item.eigenvectors = orthonormalize(v, tol.rank).basis().cast<Complex>();
    } else {
      item.eigenvectors = orthonormalize_complex(near_null_vectors(p.at(value), tol.eig, count),
                                                 tol.rank);
    }
    const CMatrix lv = p.at(value) * item.eigenvectors;
    item.residual = 0.0;
    for (Eigen::Index c = 0; c < lv.cols(); ++c)
      item.residual = std::max(item.residual, lv.col(c).norm() / p.residual_scale(value));
    item.sign_type = eigenspace_sign_type(p.B(), item.eigenvectors, value, escale, tol);
    if (with_chains) {
      try {
        item.chains = jordan_chains(p, value, tol, count);
      } catch (const NotAnEigenvalue&) {
      }
    }
    out.items.push_back(std::move(item));
  }
  std::sort(out.items.begin(), out.items.end(), [](const EigenItem& a, const EigenItem& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

// Newton steps on log det L(λ): λ ← λ + 1/tr(L(λ)⁻¹B). A step is accepted only
// while it stays well inside the distance to the nearest other root estimate.
Complex polish_root(const SymmetricPencil& p, Complex lambda, double guard) {
  const CMatrix b = p.B().matrix().cast<Complex>();
  double last = std::numeric_limits<double>::infinity();
  for (int it = 0; it < 12; ++it) {
    Eigen::PartialPivLU<CMatrix> lu(p.at(lambda));
    const CMatrix x = lu.solve(b);
    if (!x.allFinite()) break;
    const Complex tr = x.trace();
    if (std::abs(tr) == 0.0) break;
    const Complex step = 1.0 / tr;
    const double s = std::abs(step);
    if (!std::isfinite(s) || s > 0.25 * guard || s > last) break;
    lambda += step;
    last = s;
    if (s <= 1e-15 * std::max(1.0, std::abs(lambda))) break;
  }
  return lambda;
}

}  // namespace

SymmetricPencil::SymmetricPencil(SymMatrix a, SymMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.dim() != b_.dim()) throw DimensionMismatch("SymmetricPencil: A and B differ in dimension");
}

CMatrix SymmetricPencil::at(Complex lambda) const {
  return a_.matrix().cast<Complex>() - lambda * b_.matrix().cast<Complex>();
}

double SymmetricPencil::residual_scale(Complex lambda) const {
  return std::max(1e-300, a_.norm() + std::abs(lambda) * b_.norm());
}

std::string_view to_string(SignType t) {
  switch (t) {
    case SignType::positive:
      return "positive";
    case SignType::negative:
      return "negative";
    case SignType::neutral:
      return "neutral";
    case SignType::complex:
      return "complex";
  }
  return "unknown";
}

std::vector<Complex> PencilSpectrum::multiset() const {
  std::vector<Complex> out;
  for (const auto& it : items)
    for (int k = 0; k < it.algebraic_multiplicity; ++k) out.push_back(it.value);
  return out;
}

double eigenvalue_scale(const std::vector<Complex>& values) {
  double s = 1.0;
  for (const auto& v : values) s = std::max(s, std::abs(v));
  return s;
}

double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    double d = 0.0;
    for (const auto& u : x) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& v : y) best = std::min(best, std::abs(u - v));
      d = std::max(d, best);
    }
    return d;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::vector<std::pair<Complex, int>> cluster_eigenvalues(const std::vector<Complex>& values,
                                                         double tol_cluster) {
  std::vector<std::pair<Complex, int>> out;
  for (const auto& g : group_indices(values, tol_cluster)) out.push_back(group_mean(values, g));
  return out;
}

SignType eigenspace_sign_type(const SymMatrix& b, const CMatrix& eigenvectors, Complex value,
                              double scale, const Tolerances& tol) {
  if (std::abs(value.imag()) > tol.imag * scale) return SignType::complex;
  if (eigenvectors.cols() == 0) return SignType::neutral;
  const CMatrix g = eigenvectors.adjoint() * b.matrix().cast<Complex>() * eigenvectors;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (g + g.adjoint()), Eigen::EigenvaluesOnly);
  const double thr = tol.type * b.norm();
  const auto& ev = es.eigenvalues();
  if (ev.minCoeff() > thr) return SignType::positive;
  if (ev.maxCoeff() < -thr) return SignType::negative;
  return SignType::neutral;
}

bool is_singular_pencil(const SymmetricPencil& p, const Tolerances& tol) {
  const int n = p.dim();
  const double r0 = std::max(1.0, p.B().norm() > 0 ? p.A().norm() / p.B().norm() : 1.0);
  for (int j = 0; j <= n; ++j) {
    const double rad = r0 * 0.7 * (1.0 + 0.13 * j);
    const Complex lambda = std::polar(rad, 0.4 + 2.0 * kPi * j / (n + 1));
    const double margin = regular_type_margin(p, lambda) / p.residual_scale(lambda);
    if (margin > tol.det) return false;
  }
  return true;
}

double regular_type_margin(const SymmetricPencil& p, Complex lambda) {
  return smallest_singular_value(p.at(lambda));
}

namespace {

// q(z) = det(L(unit·z)/s) recovered from samples on the circle |λ| = ‖A‖/‖B‖.
struct DetPolynomial {
  Complex unit;
  std::vector<Complex> coeff;
  int degree = 0;
};

DetPolynomial det_polynomial(const SymmetricPencil& p) {
  const int n = p.dim();
  const int samples = n + 1;
  const double na = p.A().norm();
  const double nb = p.B().norm();
  const double radius = (na > 0 && nb > 0) ? na / nb : 1.0;
  const double theta0 = 0.3;
  DetPolynomial out;
  out.unit = std::polar(radius, theta0);

  // det(L(λ_j)/s) with a fixed s keeps the samples in floating-point range.
  const double s = p.residual_scale(radius);
  std::vector<Complex> vals(samples);
  for (int j = 0; j < samples; ++j) {
    const Complex lambda = out.unit * std::polar(1.0, 2.0 * kPi * j / samples);
    vals[j] = (p.at(lambda) / s).partialPivLu().determinant();
  }
  out.coeff.resize(samples);
  double cmax = 0.0;
  for (int k = 0; k < samples; ++k) {
    Complex acc = 0.0;
    for (int j = 0; j < samples; ++j) acc += vals[j] * std::polar(1.0, -2.0 * kPi * j * k / samples);
    out.coeff[k] = acc / static_cast<double>(samples);
    cmax = std::max(cmax, std::abs(out.coeff[k]));
  }
  out.degree = samples - 1;
  while (out.degree > 0 && std::abs(out.coeff[out.degree]) <= 1e-10 * cmax) --out.degree;
  return out;
}

}  // namespace

PencilSpectrum pencil_eigenvalues_det(const SymmetricPencil& p, const Tolerances& tol,
                                      bool with_chains) {
  if (is_singular_pencil(p, tol)) throw SingularPencil("det(A - λB) vanishes identically");
  const int n = p.dim();
  const DetPolynomial q = det_polynomial(p);
  const int degree = q.degree;
  const Complex unit = q.unit;
  const std::vector<Complex>& coeff = q.coeff;

  std::vector<Complex> roots;
  if (degree > 0) {
    CMatrix comp = CMatrix::Zero(degree, degree);
    for (int i = 1; i < degree; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < degree; ++i) comp(i, degree - 1) = -coeff[i] / coeff[degree];
    Eigen::ComplexEigenSolver<CMatrix> es(comp, false);
    if (es.info() != Eigen::Success)
      throw NonConvergence("pencil_eigenvalues_det: companion eigensolver failed", 0.0);
    for (int i = 0; i < degree; ++i) roots.push_back(unit * es.eigenvalues()(i));
    // A root of multiplicity m splits into m companion eigenvalues about
    // eps^{1/m} apart; their mean is accurate while Newton on det stalls at
    // different points for each. Only isolated roots are polished.
    const auto clusters = pencil_clusters(p, roots, tol);
    std::vector<Complex> refined;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      const auto [value, count] = clusters[i];
      if (count > 1) {
        refined.insert(refined.end(), static_cast<std::size_t>(count), value);
        continue;
      }
      double guard = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < clusters.size(); ++j)
        if (j != i) guard = std::min(guard, std::abs(value - clusters[j].first));
      if (!std::isfinite(guard)) guard = std::max(1.0, std::abs(value));
      refined.push_back(polish_root(p, value, guard));
    }
    roots = std::move(refined);
  }
  return build_items(p, roots, n - degree, tol, with_chains);
}

PencilSpectrum pencil_eigenvalues_qz(const SymmetricPencil& p, const Tolerances& tol,
                                     bool with_chains) {
  if (is_singular_pencil(p, tol)) throw SingularPencil("det(A - λB) vanishes identically");
  const int n = p.dim();
  const bool b_invertible = abs_sqrt_sign(p.B(), tol.zero).kernel.rank() == 0;
  const int degree = b_invertible ? n : det_polynomial(p).degree;
  Eigen::GeneralizedEigenSolver<Matrix> qz(p.A().matrix(), p.B().matrix(), false);
  if (qz.info() != Eigen::Success) throw NonConvergence("pencil_eigenvalues_qz: QZ iteration failed", 0.0);
  // Rank the pairs (α, β) by the chordal size of β; the leading `degree`
  // ones are the finite eigenvalues.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto finiteness = [&](int i) {
    const double a = std::abs(qz.alphas()(i)), b = std::abs(qz.betas()(i));
    return b / std::max(std::hypot(a, b), std::numeric_limits<double>::min());
  };
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return finiteness(i) > finiteness(j); });
  std::vector<Complex> roots;
  for (int r = 0; r < degree; ++r) {
    const int i = order[r];
    roots.push_back(qz.alphas()(i) / qz.betas()(i));
  }
  return build_items(p, roots, n - degree, tol, with_chains);
}

PencilSpectrum pencil_eigenvalues(const SymmetricPencil& p, const Tolerances& tol,
                                  bool with_chains) {
  if (is_singular_pencil(p, tol)) throw SingularPencil("det(A - λB) vanishes identically");
  const AbsSqrtSign k = abs_sqrt_sign(p.B(), tol.zero);
  if (k.kernel.rank() > 0) return pencil_eigenvalues_qz(p, tol, with_chains);
  const ReducedOperator s = reduce_direct(p, tol);
  Eigen::EigenSolver<Matrix> es(s.matrix, false);
  if (es.info() != Eigen::Success)
    throw NonConvergence("pencil_eigenvalues: real Schur iteration failed", 0.0);
  std::vector<Complex> raw(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return build_items(p, raw, 0, tol, with_chains);
}

std::vector<JordanChain> jordan_chains_general(const CMatrix& l0, const CMatrix& rhs,
                                               Complex lambda0, double tol_chain,
                                               int max_multiplicity) {
  const auto n = l0.rows();
  if (l0.cols() != n || rhs.rows() != n || rhs.cols() != n)
    throw DimensionMismatch("jordan_chains_general: shape mismatch");

  auto toeplitz = [&](Eigen::Index k) {
    CMatrix t = CMatrix::Zero(n * k, n * k);
    for (Eigen::Index i = 0; i < k; ++i) {
      t.block(i * n, i * n, n, n) = l0;
      if (i > 0) t.block(i * n, (i - 1) * n, n, n) = -rhs;
    }
    return t;
  };

  // ker T_k holds chains x₀..x_{k−1}; dim ker T_k − dim ker T_{k−1} counts
  // blocks of size ≥ k. When L0 has many small singular values the relative
  // rank test keeps finding longer "chains" whose vectors grow like
  // ‖L0⁺·rhs‖^k, so the known multiplicity bounds dim ker T_k.
  const Eigen::Index cap = max_multiplicity > 0 ? std::min<Eigen::Index>(max_multiplicity, n) : n;
  std::vector<CMatrix> kernels;
  std::vector<Eigen::Index> count_at_least;  // r_k
  Eigen::Index prev_dim = 0;
  for (Eigen::Index k = 1; k <= n && prev_dim < cap; ++k) {
    CMatrix z = null_space(toeplitz(k), tol_chain);
    Eigen::Index r = z.cols() - prev_dim;
    if (!count_at_least.empty()) r = std::min(r, count_at_least.back());
    r = std::min(r, cap - prev_dim);
    if (r <= 0) break;
    kernels.push_back(std::move(z));
    count_at_least.push_back(r);
    prev_dim += r;
  }

  std::vector<JordanChain> chains;
  if (kernels.empty()) return chains;

  CMatrix heads(n, 0);
  const auto longest = static_cast<Eigen::Index>(kernels.size());
  for (Eigen::Index k = longest; k >= 1; --k) {
    const Eigen::Index want =
        count_at_least[k - 1] - (k < longest ? count_at_least[k] : Eigen::Index{0});
    if (want <= 0) continue;
    const CMatrix& z = kernels[k - 1];
    const CMatrix z0 = z.topRows(n);
    CMatrix proj = z0;
    if (heads.cols() > 0) proj -= heads * (heads.adjoint() * z0);
    Eigen::BDCSVD<CMatrix> svd(proj, Eigen::ComputeFullV);
    for (Eigen::Index j = 0; j < want && j < svd.matrixV().cols(); ++j) {
      const CVector head = normalize_phase(z0 * svd.matrixV().col(j));
      JordanChain chain{lambda0, {head}};
      if (k > 1) {
        // Minimum-norm tail for the fixed head.
        const Eigen::Index m = n * (k - 1);
        CMatrix sys = CMatrix::Zero(m, m);
        CVector b = CVector::Zero(m);
        for (Eigen::Index i = 0; i < k - 1; ++i) {
          sys.block(i * n, i * n, n, n) = l0;
          if (i > 0) sys.block(i * n, (i - 1) * n, n, n) = -rhs;
        }
        b.head(n) = rhs * head;
        Eigen::BDCSVD<CMatrix> ls(sys, Eigen::ComputeThinU | Eigen::ComputeThinV);
        ls.setThreshold(tol_chain);
        const CVector tail = ls.solve(b);
        for (Eigen::Index i = 0; i < k - 1; ++i) chain.vectors.push_back(tail.segment(i * n, n));
      }
      chains.push_back(std::move(chain));
      CMatrix grown(n, heads.cols() + 1);
      grown << heads, head;
      heads = orthonormalize_complex(grown, 1e-12);
    }
  }
  std::stable_sort(chains.begin(), chains.end(),
                   [](const JordanChain& a, const JordanChain& b) { return a.length() > b.length(); });
  return chains;
}

std::vector<JordanChain> jordan_chains(const SymmetricPencil& p, Complex lambda0,
                                       const Tolerances& tol, int max_multiplicity) {
  const CMatrix l0 = p.at(lambda0);
  const double margin = smallest_singular_value(l0) / p.residual_scale(lambda0);
  if (margin > tol.eig)
    throw NotAnEigenvalue("jordan_chains: λ0 is not an eigenvalue of the pencil", margin);
  const CMatrix rhs = p.B().matrix().cast<Complex>();
  auto chains = jordan_chains_general(l0, rhs, lambda0, std::max(tol.chain, tol.eig), max_multiplicity);
  if (chains.empty()) {
    // λ0 passed the margin test but sits just outside the rank tolerance.
    chains.push_back(JordanChain{lambda0, {normalize_phase(near_null_vectors(l0, 0.0, 1).col(0))}});
  }
  return chains;
}

double chain_residual(const SymmetricPencil& p, const JordanChain& chain) {
  const CMatrix l = p.at(chain.eigenvalue);
  const CMatrix b = p.B().matrix().cast<Complex>();
  double xmax = 0.0;
  for (const auto& x : chain.vectors) xmax = std::max(xmax, x.norm());
  if (xmax == 0.0) return std::numeric_limits<double>::infinity();
  double r = 0.0;
  for (std::size_t i = 0; i < chain.vectors.size(); ++i) {
    CVector e = l * chain.vectors[i];
    if (i > 0) e -= b * chain.vectors[i - 1];
    r = std::max(r, e.norm());
  }
  return r / (p.residual_scale(chain.eigenvalue) * xmax);
}

NonisotropyCheck check_nonisotropic(const SymmetricPencil& p, const Tolerances& tol) {
  const PencilSpectrum spec = pencil_eigenvalues(p, tol);
  NonisotropyCheck out;
  for (const auto& it : spec.items)
    if (it.sign_type == SignType::neutral) out.witnesses.push_back(it);
  out.verdict = out.witnesses.empty();
  return out;
}

}  // namespace pencilkit
