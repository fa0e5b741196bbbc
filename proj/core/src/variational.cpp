#include "pencilkit/variational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

#include "pencilkit/errors.hpp"

namespace pencilkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nonsingular(const SymMatrix& b_v, double reference_norm, const Tolerances& tol,
                         const char* where) {
  const SymEig e = sym_eig(b_v);
  const double thr = tol.zero * std::max(reference_norm, 1e-300);
  for (Eigen::Index i = 0; i < e.values.size(); ++i)
    if (std::abs(e.values(i)) <= thr)
      throw DegenerateTrialSpace(std::string(where) + ": B_V is singular on the trial space");
}

// Eigenvector of a real eigenvalue rotated to be (numerically) real.
Vector real_direction(const CVector& x) {
  Eigen::Index imax = 0;
  x.cwiseAbs().maxCoeff(&imax);
  const Complex phase = std::abs(x(imax)) > 0 ? std::conj(x(imax)) / std::abs(x(imax)) : Complex(1.0);
  return (phase * x).real();
}

// Downhill simplex maximizing f, started from x0 with initial step `step`.
Vector nelder_mead_max(const std::function<double(const Vector&)>& f, const Vector& x0, double step,
                       int max_iter, int& evaluations) {
  const auto d = x0.size();
  std::vector<Vector> simplex(d + 1, x0);
  std::vector<double> val(d + 1);
  for (Eigen::Index i = 0; i < d; ++i) simplex[i + 1](i) += step;
  auto eval = [&](const Vector& x) {
    ++evaluations;
    return -f(x);
  };
  for (Eigen::Index i = 0; i <= d; ++i) val[i] = eval(simplex[i]);
  std::vector<Eigen::Index> order(d + 1);
  for (int it = 0; it < max_iter; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return val[a] < val[b]; });
    const auto best = order.front(), worst = order.back(), second = order[d - 1];
    if (std::abs(val[worst] - val[best]) <= 1e-14 * std::max(1.0, std::abs(val[best]))) break;
    Vector centroid = Vector::Zero(d);
    for (Eigen::Index i = 0; i < d; ++i) centroid += simplex[order[i]];
    centroid /= static_cast<double>(d);
    const Vector xr = centroid + (centroid - simplex[worst]);
    const double fr = eval(xr);
    if (fr < val[best]) {
      const Vector xe = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = eval(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        val[worst] = fe;
      } else {
        simplex[worst] = xr;
        val[worst] = fr;
      }
    } else if (fr < val[second]) {
      simplex[worst] = xr;
      val[worst] = fr;
    } else {
      const bool outside = fr < val[worst];
      const Vector xc = outside ? Vector(centroid + 0.5 * (xr - centroid))
                                : Vector(centroid + 0.5 * (simplex[worst] - centroid));
      const double fc = eval(xc);
      if (fc < std::min(fr, val[worst])) {
        simplex[worst] = xc;
        val[worst] = fc;
      } else {
        for (Eigen::Index i = 0; i <= d; ++i) {
          if (i == best) continue;
          simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
          val[i] = eval(simplex[i]);
        }
      }
    }
  }
  const auto best = std::min_element(val.begin(), val.end()) - val.begin();
  return simplex[best];
}

}  // namespace

ProjectedPencil project_pencil(const SymmetricPencil& p, const Subspace& v, const Tolerances& tol) {
  if (v.ambient_dim() != p.dim()) throw DimensionMismatch("project_pencil: subspace lives in another space");
  if (v.rank() == 0) throw InvalidArgument("project_pencil: trial space must be nontrivial");
  const Matrix& q = v.basis();
  ProjectedPencil out{SymMatrix(q.transpose() * p.A().matrix() * q),
                      SymMatrix(q.transpose() * p.B().matrix() * q)};
  require_nonsingular(out.B_V, p.B().norm(), tol, "project_pencil");
  return out;
}

ClassifiedEigenvalues classified_eigenvalues(const SymmetricPencil& p, const Tolerances& tol) {
  const PencilSpectrum spec = pencil_eigenvalues(p, tol);
  ClassifiedEigenvalues out;
  for (const auto& item : spec.items) {
    const bool real = item.value.imag() == 0.0;
    for (int c = 0; c < item.algebraic_multiplicity; ++c) {
      if (real && item.sign_type == SignType::positive)
        out.mu_plus.push_back(item.value.real());
      else if (real && item.sign_type == SignType::negative)
        out.mu_minus.push_back(item.value.real());
      else
        out.neutral_or_complex.push_back(item.value);
    }
  }
  std::sort(out.mu_plus.begin(), out.mu_plus.end());
  std::sort(out.mu_minus.begin(), out.mu_minus.end(), std::greater<>());
  return out;
}

ClassifiedEigenvalues classified_projected_eigenvalues(const SymMatrix& a_v, const SymMatrix& b_v,
                                                       const Tolerances& tol) {
  if (a_v.dim() != b_v.dim()) throw DimensionMismatch("classified_projected_eigenvalues: shape");
  require_nonsingular(b_v, b_v.norm(), tol, "classified_projected_eigenvalues");
  return classified_eigenvalues(SymmetricPencil(a_v, b_v), tol);
}

bool RayleighRitzReport::all_pass() const {
  return std::all_of(bound_verdicts.begin(), bound_verdicts.end(), [](bool b) { return b; });
}

RayleighRitzReport rayleigh_ritz_bounds(const SymmetricPencil& p, const Subspace& v, const Tolerances& tol,
                                        int index_offset) {
  if (index_offset < 0) throw InvalidArgument("rayleigh_ritz_bounds: negative index offset");
  if (abs_sqrt_sign(p.B(), tol.zero).kernel.rank() > 0)
    throw SingularB("rayleigh_ritz_bounds: the full problem needs a nonsingular B");
  const ProjectedPencil proj = project_pencil(p, v, tol);
  const ClassifiedEigenvalues mu = classified_projected_eigenvalues(proj.A_V, proj.B_V, tol);
  const ClassifiedEigenvalues full = classified_eigenvalues(p, tol);

  RayleighRitzReport rep;
  rep.trial_dim = v.rank();
  rep.projected_A = proj.A_V;
  rep.projected_B = proj.B_V;
  rep.mu_plus = mu.mu_plus;
  rep.mu_minus = mu.mu_minus;
  rep.neutral_or_complex = mu.neutral_or_complex;
  rep.full_plus = full.mu_plus;
  rep.full_minus = full.mu_minus;

  double s = 1.0;
  for (const auto* list : {&rep.mu_plus, &rep.mu_minus, &rep.full_plus, &rep.full_minus})
    for (double x : *list) s = std::max(s, std::abs(x));
  rep.scale = s;
  const double slack = tol.bound * s;
  const auto off = static_cast<std::size_t>(index_offset);
  for (std::size_t m = 0; m < rep.mu_plus.size() && m + off < rep.full_plus.size(); ++m)
    rep.bound_verdicts.push_back(rep.mu_plus[m] >= rep.full_plus[m + off] - slack);
  for (std::size_t m = 0; m < rep.mu_minus.size() && m + off < rep.full_minus.size(); ++m)
    rep.minus_verdicts.push_back(rep.mu_minus[m] <= rep.full_minus[m + off] + slack);
  return rep;
}

double rayleigh_quotient_scan(const SymmetricPencil& p, const Subspace& m, Cone cone, int samples,
                              std::uint64_t seed, const Tolerances& tol) {
  if (m.ambient_dim() != p.dim()) throw DimensionMismatch("rayleigh_quotient_scan: subspace dimension");
  if (m.rank() == 0) throw InvalidArgument("rayleigh_quotient_scan: M must be nontrivial");
  if (samples < 0) throw InvalidArgument("rayleigh_quotient_scan: negative sample count");
  const Matrix& a = p.A().matrix();
  const Matrix& b = p.B().matrix();
  const double type_thr = tol.type * std::max(p.B().norm(), 1e-300);
  const double sign = cone == Cone::positive ? 1.0 : -1.0;

  bool found = false;
  double best = sign * kInf;
  auto consider = [&](const Vector& x) {
    const double nx = x.squaredNorm();
    if (nx == 0.0) return;
    const double bx = x.dot(b * x);
    if (sign * bx <= type_thr * nx) return;
    const double q = x.dot(a * x) / bx;
    found = true;
    best = cone == Cone::positive ? std::min(best, q) : std::max(best, q);
  };

  const Matrix& basis = m.basis();
  const SymMatrix a_m(basis.transpose() * a * basis);
  const SymMatrix b_m(basis.transpose() * b * basis);
  try {
    const SymmetricPencil compressed(a_m, b_m);
    if (!is_singular_pencil(compressed, tol)) {
      for (const auto& item : pencil_eigenvalues(compressed, tol).items) {
        if (item.value.imag() != 0.0) continue;
        for (Eigen::Index c = 0; c < item.eigenvectors.cols(); ++c)
          consider(basis * real_direction(item.eigenvectors.col(c)));
      }
    }
  } catch (const Error&) {
    // The sampled part still gives an estimate.
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  for (int s = 0; s < samples; ++s) {
    Vector g(m.rank());
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = nd(rng);
    consider(basis * g);
  }
  if (!found) throw EmptyConeIntersection("rayleigh_quotient_scan: no sampled vector lies in the cone");
  return best;
}

SupInfEstimate sup_inf_estimate(const SymMatrix& a_v, const SymMatrix& b_v, int m, int samples,
                                std::uint64_t seed, const Tolerances& tol) {
  const int k = a_v.dim();
  if (b_v.dim() != k) throw DimensionMismatch("sup_inf_estimate: shape");
  if (m < 1 || m > k) throw InvalidArgument("sup_inf_estimate: index out of range");
  require_nonsingular(b_v, b_v.norm(), tol, "sup_inf_estimate");
  const KreinStructure form(b_v, tol.zero);
  SupInfEstimate out;

  // Smallest positive-type eigenvalue of the pair on Y^[⊥]; -inf when Y is
  // degenerate, so such constraint spaces never win the supremum.
  auto inner = [&](const Matrix& y) -> double {
    Matrix w = Matrix::Identity(k, k);
    if (y.cols() > 0) {
      const Subspace ys = orthonormalize(y, 1e-8);
      if (ys.rank() != y.cols() || !is_ortho_complemented(form, ys, 1e-8)) {
        ++out.rejected;
        return -kInf;
      }
      w = null_space(Matrix(ys.basis().transpose() * b_v.matrix()), 1e-10);
    }
    const SymMatrix aw(w.transpose() * a_v.matrix() * w);
    const SymMatrix bw(w.transpose() * b_v.matrix() * w);
    try {
      const ClassifiedEigenvalues ev = classified_projected_eigenvalues(aw, bw, tol);
      return ev.mu_plus.empty() ? kInf : ev.mu_plus.front();
    } catch (const Error&) {
      ++out.rejected;
      return -kInf;
    }
  };

  if (m == 1) {
    out.value = inner(Matrix(k, 0));
    out.evaluations = 1;
    return out;
  }

  const int cols = m - 1;
  auto unpack = [&](const Vector& x) { return Matrix(Eigen::Map<const Matrix>(x.data(), k, cols)); };
  auto objective = [&](const Vector& x) {
    const double v = inner(unpack(x));
    return std::isfinite(v) ? v : (v > 0 ? 1e300 : -1e300);
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<std::pair<double, Vector>> starts;
  for (int s = 0; s < std::max(samples, 1); ++s) {
    Vector x(k * cols);
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = nd(rng);
    ++out.evaluations;
    starts.emplace_back(objective(x), x);
  }
  std::stable_sort(starts.begin(), starts.end(), [](const auto& l, const auto& r) { return l.first > r.first; });

  double best = -kInf;
  const std::size_t refine = std::min<std::size_t>(starts.size(), 4);
  for (std::size_t i = 0; i < refine; ++i) {
    Vector x = starts[i].second;
    // Restarting the simplex around the current optimum avoids premature collapse.
    for (int round = 0; round < 3; ++round)
      x = nelder_mead_max(objective, x, 0.25 / (1 << round), 400 * k * cols, out.evaluations);
    best = std::max(best, objective(x));
  }
  out.value = best;
  return out;
}

}  // namespace pencilkit
