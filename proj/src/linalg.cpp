#include "entdyn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entdyn {

namespace {
constexpr int kMaxSweeps = 64;
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (n_ != rhs.n_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  ComplexMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a) {
  const int n = a.dim();
  if (n <= 0) throw std::invalid_argument("hermitian_eigen: empty matrix");

  ComplexMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(h.frobenius_norm(), 1e-300);
  const double stop = 1e-15 * scale;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(h(p, q));
    if (std::sqrt(off) < stop) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(h(p, q));
        if (r <= 1e-18 * scale) {
          h(p, q) = h(q, p) = 0.0;
          continue;
        }
        const Complex u = h(p, q) / r;  // phase of the off-diagonal element
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // A' = R^dag A R with R_pp = c, R_pq = s u, R_qp = -s conj(u), R_qq = c.
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const Complex aip = h(i, p);
          const Complex aiq = h(i, q);
          h(i, p) = c * aip - s * std::conj(u) * aiq;
          h(i, q) = s * u * aip + c * aiq;
          h(p, i) = std::conj(h(i, p));
          h(q, i) = std::conj(h(i, q));
        }
        h(p, p) = c * c * app - 2.0 * s * c * r + s * s * aqq;
        h(q, q) = s * s * app + 2.0 * s * c * r + c * c * aqq;
        h(p, q) = h(q, p) = 0.0;

        for (int i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(u) * viq;
          v(i, q) = s * u * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = h(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&diag](int i, int j) { return diag[i] < diag[j]; });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  const int n = a.dim();
  if (n <= 0) throw std::invalid_argument("singular_values: empty matrix");
  ComplexMatrix w = a;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0;
        Complex g{};
        for (int i = 0; i < n; ++i) {
          app += std::norm(w(i, p));
          aqq += std::norm(w(i, q));
          g += std::conj(w(i, p)) * w(i, q);
        }
        const double r = std::abs(g);
        if (r <= 1e-15 * std::sqrt(app * aqq) || r == 0.0) continue;
        rotated = true;
        const Complex u = g / r;
        const double zeta = (aqq - app) / (2.0 * r);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int i = 0; i < n; ++i) {
          const Complex wip = w(i, p);
          const Complex wiq = w(i, q);
          w(i, p) = c * wip - s * std::conj(u) * wiq;
          w(i, q) = s * u * wip + c * wiq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(n);
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < n; ++i) col += std::norm(w(i, j));
    sv[j] = std::sqrt(col);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace entdyn
