// Test-only reference computations. Nothing here calls into the library's
// evaluation path: strategies are simulated as pure state vectors with
// hand-written loops, and closed forms are written out independently.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "chshstar/qcore.hpp"

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<Vec>;

inline Mat to_mat(const chshstar::ComplexMatrix& m) {
  Mat out(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline Vec to_vec(const chshstar::ComplexMatrix& ket) {
  Vec v(ket.rows());
  for (std::size_t i = 0; i < ket.rows(); ++i) v[i] = ket(i, 0);
  return v;
}

inline Vec mat_vec(const Mat& u, const Vec& v) {
  Vec out(u.size(), C{});
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += u[i][j] * v[j];
  return out;
}

inline double overlap2(const Vec& bra, const Vec& ket) {
  C s{};
  for (std::size_t i = 0; i < ket.size(); ++i) s += std::conj(bra[i]) * ket[i];
  return std::norm(s);
}

/// Average win probability of a pure-state unitary strategy measured in an
/// orthonormal basis with the given outcome labels, inputs uniform over q x q.
inline double pure_success(int q, const Vec& psi, const std::vector<Mat>& a, const std::vector<Mat>& b,
                           const std::vector<Vec>& basis, const std::vector<int>& labels) {
  double total = 0.0;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      const Vec fin = mat_vec(b[y], mat_vec(a[x], psi));
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (labels[k] == (x * y) % q) total += overlap2(basis[k], fin);
    }
  return total / (q * q);
}

/// Simplified closed form of the Clifford + Rz(eps) strategy: (2 + cos eps + sin eps) / 4.
inline double rz_family(double eps) { return (2.0 + std::cos(eps) + std::sin(eps)) / 4.0; }

inline double tsirelson() {
  const double c = std::cos(std::numbers::pi / 8);
  return c * c;
}

/// CHSH_3 value of the fixed qutrit strategy, computed once with an
/// independent numpy script (complex128) and frozen here.
inline constexpr double kQutritFixedNumpy = 0.7123860142010863;

}  // namespace oracle
