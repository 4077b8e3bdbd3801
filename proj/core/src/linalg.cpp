#include "asrc/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace asrc {

double spectral_norm(const Mat& a, int max_iters, double tol) {
  if (a.size() == 0) return 0.0;
  const Mat ata = a.transpose() * a;
  const auto n = ata.rows();

  Vec v = Vec::Ones(n) / std::sqrt(static_cast<double>(n));
  if ((ata * v).norm() == 0.0) {
    // The all-ones start may lie in the null space; try the basis vectors.
    for (Eigen::Index i = 0; i < n; ++i) {
      Vec u = Vec::Unit(n, i);
      if ((ata * u).norm() > 0.0) {
        v = u;
        break;
      }
    }
  }

  double lambda = v.dot(ata * v);
  for (int it = 0; it < max_iters; ++it) {
    Vec w = ata * v;
    const double wn = w.norm();
    if (wn == 0.0) return 0.0;
    v = w / wn;
    const double next = v.dot(ata * v);
    const bool converged = std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next));
    lambda = next;
    if (converged) break;
  }
  return std::sqrt(std::max(lambda, 0.0));
}

Vec symmetric_eigenvalues(const Mat& a, double tol) {
  Mat m = 0.5 * (a + a.transpose());
  const auto n = m.rows();
  const double scale = std::max(m.norm(), 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += m(p, q) * m(p, q);
    if (std::sqrt(off) <= tol * scale) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (m(p, q) == 0.0) continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double mkp = m(k, p);
          const double mkq = m(k, q);
          m(k, p) = c * mkp - s * mkq;
          m(k, q) = s * mkp + c * mkq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double mpk = m(p, k);
          const double mqk = m(q, k);
          m(p, k) = c * mpk - s * mqk;
          m(q, k) = s * mpk + c * mqk;
        }
      }
    }
  }

  Vec eig = m.diagonal();
  std::sort(eig.data(), eig.data() + eig.size());
  return eig;
}

double min_eigenvalue(const Mat& a) { return symmetric_eigenvalues(a).minCoeff(); }

double max_eigenvalue(const Mat& a) { return symmetric_eigenvalues(a).maxCoeff(); }

bool is_positive_definite(const Mat& a, double sym_tol) {
  if (a.rows() == 0 || a.rows() != a.cols() || !a.allFinite()) return false;
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > sym_tol * std::max(1.0, a.cwiseAbs().maxCoeff()))
    return false;
  return min_eigenvalue(a) > 0.0;
}

double gamma_norm(const Mat& omega) {
  const auto n = omega.rows();
  Mat gamma(n, 2 * n);
  gamma << omega, Mat::Identity(n, n);
  return spectral_norm(gamma);
}

bool all_finite(const Vec& v) { return v.allFinite(); }

}  // namespace asrc
