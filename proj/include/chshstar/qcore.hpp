/**
 * @file chshstar/qcore.hpp
 * @brief Small dense complex linear algebra and quantum primitives.
 *
 * Everything here is sized for single qudits up to d = 9 and the one
 * two-qubit register used by the CHSH lift. Matrices are row-major and
 * dense; states are density matrices; transformations are Kraus channels.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace chshstar {

using Complex = std::complex<double>;

/// Tolerance for structural checks (unitarity, completeness, projectors).
inline constexpr double kStructuralTol = 1e-10;
/// Tolerance for equality of computed probabilities and state Hermiticity/trace.
inline constexpr double kProbabilityTol = 1e-12;
/// Largest dimension the library is sized for.
inline constexpr std::size_t kMaxDim = 9;

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ComplexMatrix {
public:
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw DimensionError("ComplexMatrix: dimensions must be positive");
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0)
      throw DimensionError("ComplexMatrix: dimensions must be positive");
    if (entries_.size() != rows * cols)
      throw DimensionError("ComplexMatrix: entry count does not match dimensions");
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0)
      throw DimensionError("ComplexMatrix: dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_)
        throw DimensionError("ComplexMatrix: ragged initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }

  static ComplexMatrix diagonal(std::initializer_list<Complex> diag) {
    return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
  }

  /// Column vector |i> in dimension d.
  static ComplexMatrix ket(std::size_t d, std::size_t i) {
    if (i >= d) throw DimensionError("ket: index out of range");
    ComplexMatrix v(d, 1);
    v(i, 0) = 1.0;
    return v;
  }

  /// |i><j| in dimension d.
  static ComplexMatrix basis_operator(std::size_t d, std::size_t i, std::size_t j) {
    if (i >= d || j >= d) throw DimensionError("basis_operator: index out of range");
    ComplexMatrix m(d, d);
    m(i, j) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex trace() const {
    if (!is_square()) throw DimensionError("trace: matrix is not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o, "operator+=");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_shape(o, "operator-=");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  void require_same_shape(const ComplexMatrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string(what) + ": dimension mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

inline ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

inline ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

/// Kronecker product; entry (i*b.rows()+k, j*b.cols()+l) = a(i,j) * b(k,l).
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

/// |v><v| for a column vector v.
inline ComplexMatrix outer(const ComplexMatrix& ket) { return matmul(ket, dagger(ket)); }

/// <u|v> for column vectors.
inline Complex inner(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.cols() != 1 || v.cols() != 1 || u.rows() != v.rows())
    throw DimensionError("inner: expects column vectors of equal length");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.rows(); ++i) s += std::conj(u(i, 0)) * v(i, 0);
  return s;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

inline bool is_hermitian(const ComplexMatrix& a, double tol) {
  return a.is_square() && max_abs_diff(a, dagger(a)) <= tol;
}

inline bool is_unitary(const ComplexMatrix& u, double tol = kStructuralTol) {
  return u.is_square() && approx_equal(matmul(dagger(u), u), ComplexMatrix::identity(u.rows()), tol);
}

/// Global-phase canonical form: the first entry (row-major) with modulus
/// above `tol` is rotated onto the positive real axis.
inline ComplexMatrix canonical_phase(const ComplexMatrix& a, double tol = 1e-9) {
  for (const Complex& e : a.entries()) {
    if (std::abs(e) > tol) return a * (std::abs(e) / e);
  }
  return a;
}

inline bool equal_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b, double tol = 1e-9) {
  return approx_equal(canonical_phase(a, tol), canonical_phase(b, tol), tol);
}

namespace detail {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& e) {
  ComplexMatrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& a) { return (a + dagger(a)) * 0.5; }

}  // namespace detail

/// Ascending eigenvalues of a Hermitian matrix.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (!h.is_square()) throw DimensionError("hermitian_eigenvalues: matrix is not square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(detail::to_eigen(h), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// ---------------------------------------------------------------------------
// State

/// Density matrix: Hermitian, unit trace, positive semidefinite.
class State {
public:
  explicit State(ComplexMatrix density) : rho_(std::move(density)) { validate(); }

  /// Rank-1 density from a (not necessarily normalized) nonzero column vector.
  static State pure(const ComplexMatrix& ket) {
    if (ket.cols() != 1) throw DimensionError("State::pure: expects a column vector");
    const double norm2 = std::real(inner(ket, ket));
    if (norm2 <= kStructuralTol) throw std::invalid_argument("State::pure: zero vector");
    return State(detail::hermitian_part(outer(ket) * (1.0 / norm2)));
  }

  static State basis(std::size_t d, std::size_t i) { return pure(ComplexMatrix::ket(d, i)); }

  const ComplexMatrix& density() const noexcept { return rho_; }
  std::size_t dim() const noexcept { return rho_.rows(); }

private:
  struct Trusted {};
  State(Trusted, ComplexMatrix density) : rho_(std::move(density)) {}

  void validate() const {
    if (!rho_.is_square()) throw DimensionError("State: density matrix must be square");
    if (rho_.rows() > kMaxDim) throw DimensionError("State: dimension above supported maximum");
    if (!is_hermitian(rho_, kProbabilityTol)) throw std::invalid_argument("State: density is not Hermitian");
    if (std::abs(rho_.trace() - Complex{1.0}) > kProbabilityTol)
      throw std::invalid_argument("State: trace is not 1");
    if (hermitian_eigenvalues(rho_).front() < -kStructuralTol)
      throw std::invalid_argument("State: density is not positive semidefinite");
  }

  friend class Channel;

  ComplexMatrix rho_;
};

// ---------------------------------------------------------------------------
// Channel

/// Trace-preserving map given by Kraus operators.
///
/// Each Kraus operator may carry an erasure weight: the number of bits
/// destroyed when that branch occurs. The expected erasure of applying the
/// channel to rho is sum_i w_i Tr(K_i rho K_i^dagger). Unitary gates carry
/// weight zero.
class Channel {
public:
  explicit Channel(std::vector<ComplexMatrix> kraus, std::vector<double> erasure_bits = {})
      : kraus_(std::move(kraus)), erasure_bits_(std::move(erasure_bits)) {
    if (kraus_.empty()) throw std::invalid_argument("Channel: needs at least one Kraus operator");
    const std::size_t d = kraus_.front().rows();
    if (d > kMaxDim) throw DimensionError("Channel: dimension above supported maximum");
    ComplexMatrix completeness(d, d);
    for (const auto& k : kraus_) {
      if (k.rows() != d || k.cols() != d)
        throw DimensionError("Channel: Kraus operators must share one square dimension");
      completeness += matmul(dagger(k), k);
    }
    if (!approx_equal(completeness, ComplexMatrix::identity(d), kStructuralTol))
      throw std::invalid_argument("Channel: Kraus operators are not trace preserving");
    if (erasure_bits_.empty()) erasure_bits_.assign(kraus_.size(), 0.0);
    if (erasure_bits_.size() != kraus_.size())
      throw std::invalid_argument("Channel: one erasure weight per Kraus operator required");
    for (double w : erasure_bits_)
      if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("Channel: erasure weights must be finite and >= 0");
  }

  static Channel unitary(ComplexMatrix u) {
    if (!chshstar::is_unitary(u)) throw std::invalid_argument("Channel::unitary: matrix is not unitary");
    return Channel({std::move(u)});
  }

  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  const std::vector<double>& erasure_bits() const noexcept { return erasure_bits_; }
  std::size_t dim() const noexcept { return kraus_.front().rows(); }

  bool is_unitary() const { return kraus_.size() == 1 && chshstar::is_unitary(kraus_.front()); }

  bool erases() const {
    return std::any_of(erasure_bits_.begin(), erasure_bits_.end(), [](double w) { return w > 0.0; });
  }

  State apply(const State& s) const {
    if (s.dim() != dim()) throw DimensionError("apply_channel: dimension mismatch");
    const std::size_t d = dim();
    ComplexMatrix out(d, d);
    for (const auto& k : kraus_) out += matmul(matmul(k, s.density()), dagger(k));
    return State(State::Trusted{}, detail::hermitian_part(out));
  }

  double expected_bits_erased(const State& s) const {
    if (s.dim() != dim()) throw DimensionError("expected_bits_erased: dimension mismatch");
    double bits = 0.0;
    for (std::size_t i = 0; i < kraus_.size(); ++i) {
      if (erasure_bits_[i] == 0.0) continue;
      const auto& k = kraus_[i];
      bits += erasure_bits_[i] * std::real(matmul(matmul(k, s.density()), dagger(k)).trace());
    }
    return bits;
  }

private:
  std::vector<ComplexMatrix> kraus_;
  std::vector<double> erasure_bits_;
};

inline State apply_channel(const Channel& ch, const State& s) { return ch.apply(s); }

/// Qubit reset to |0>; Kraus {|0><0|, |0><1|}. The second branch erases one bit.
inline Channel erase_channel() {
  return Channel({ComplexMatrix::basis_operator(2, 0, 0), ComplexMatrix::basis_operator(2, 0, 1)},
                 {0.0, 1.0});
}

/// Reset to |0> with probability p, identity otherwise.
/// Kraus {sqrt(p)|0><0|, sqrt(p)|0><1|, sqrt(1-p) I}.
inline Channel partial_erase(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("partial_erase: p must lie in [0, 1]");
  const double sp = std::sqrt(p);
  return Channel({ComplexMatrix::basis_operator(2, 0, 0) * sp, ComplexMatrix::basis_operator(2, 0, 1) * sp,
                  ComplexMatrix::identity(2) * std::sqrt(1.0 - p)},
                 {0.0, 1.0, 0.0});
}

// ---------------------------------------------------------------------------
// Measurement

struct LabelProbability {
  int label;
  double probability;
};

/// Projective measurement whose raw outcomes are relabelled into game answers.
class Measurement {
public:
  Measurement(std::vector<ComplexMatrix> projectors, std::vector<int> labels)
      : projectors_(std::move(projectors)), labels_(std::move(labels)) {
    if (projectors_.empty()) throw std::invalid_argument("Measurement: no projectors");
    if (labels_.size() != projectors_.size())
      throw std::invalid_argument("Measurement: one label per projector required");
    const std::size_t d = projectors_.front().rows();
    ComplexMatrix total(d, d);
    for (std::size_t i = 0; i < projectors_.size(); ++i) {
      const auto& p = projectors_[i];
      if (p.rows() != d || p.cols() != d) throw DimensionError("Measurement: projector dimension mismatch");
      if (!is_hermitian(p, kStructuralTol)) throw std::invalid_argument("Measurement: projector is not Hermitian");
      if (!approx_equal(matmul(p, p), p, kStructuralTol))
        throw std::invalid_argument("Measurement: projector is not idempotent");
      for (std::size_t j = 0; j < i; ++j)
        if (!approx_equal(matmul(p, projectors_[j]), ComplexMatrix(d, d), kStructuralTol))
          throw std::invalid_argument("Measurement: projectors are not orthogonal");
      total += p;
    }
    if (!approx_equal(total, ComplexMatrix::identity(d), kStructuralTol))
      throw std::invalid_argument("Measurement: projectors do not sum to identity");
    for (int l : labels_)
      if (l < 0) throw std::invalid_argument("Measurement: labels must be non-negative");
  }

  /// Rank-1 measurement in an orthonormal basis of column vectors.
  static Measurement in_basis(const std::vector<ComplexMatrix>& kets, std::vector<int> labels) {
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(kets.size());
    for (const auto& k : kets) projectors.push_back(outer(k));
    return Measurement(std::move(projectors), std::move(labels));
  }

  static Measurement computational(std::size_t d, std::vector<int> labels) {
    std::vector<ComplexMatrix> kets;
    for (std::size_t i = 0; i < d; ++i) kets.push_back(ComplexMatrix::ket(d, i));
    return in_basis(kets, std::move(labels));
  }

  const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  std::size_t dim() const noexcept { return projectors_.front().rows(); }

  int max_label() const { return *std::max_element(labels_.begin(), labels_.end()); }

  /// Probability that the relabelled outcome equals `label`.
  double probability_of(int label, const State& s) const {
    if (s.dim() != dim()) throw DimensionError("outcome_distribution: dimension mismatch");
    double p = 0.0;
    for (std::size_t i = 0; i < projectors_.size(); ++i)
      if (labels_[i] == label) p += std::real(matmul(projectors_[i], s.density()).trace());
    return p;
  }

private:
  std::vector<ComplexMatrix> projectors_;
  std::vector<int> labels_;
};

/// Label distribution, ascending by label; raw outcomes sharing a label are summed.
inline std::vector<LabelProbability> outcome_distribution(const Measurement& m, const State& s) {
  if (s.dim() != m.dim()) throw DimensionError("outcome_distribution: dimension mismatch");
  std::vector<int> labels = m.labels();
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<LabelProbability> out;
  out.reserve(labels.size());
  for (int l : labels) out.push_back({l, m.probability_of(l, s)});
  return out;
}

/// Partial trace over the first factor of a (da*db)-dimensional operator.
inline ComplexMatrix partial_trace_first(const ComplexMatrix& rho, std::size_t da, std::size_t db) {
  if (rho.rows() != da * db || rho.cols() != da * db) throw DimensionError("partial_trace_first: dimension mismatch");
  ComplexMatrix r(db, db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < db; ++k)
      for (std::size_t l = 0; l < db; ++l) r(k, l) += rho(i * db + k, i * db + l);
  return r;
}

// ---------------------------------------------------------------------------
// Gates and named states

namespace gates {

inline constexpr double pi = std::numbers::pi;
inline const Complex I{0.0, 1.0};

inline ComplexMatrix identity() { return ComplexMatrix::identity(2); }
inline ComplexMatrix pauli_x() { return {{0, 1}, {1, 0}}; }
inline ComplexMatrix pauli_y() { return {{0, -I}, {I, 0}}; }
inline ComplexMatrix pauli_z() { return {{1, 0}, {0, -1}}; }
inline ComplexMatrix hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return {{h, h}, {h, -h}};
}

/// diag(1, e^{i theta}).
inline ComplexMatrix phase(double theta) { return ComplexMatrix::diagonal({1.0, std::polar(1.0, theta)}); }
inline ComplexMatrix s_gate() { return ComplexMatrix::diagonal({1.0, I}); }
inline ComplexMatrix t_gate() { return phase(pi / 4); }

/// exp(-i theta Z / 2).
inline ComplexMatrix rz(double theta) {
  return ComplexMatrix::diagonal({std::polar(1.0, -theta / 2), std::polar(1.0, theta / 2)});
}

/// exp(-i theta Y / 2).
inline ComplexMatrix ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {{c, -s}, {s, c}};
}

/// Rz(alpha) Ry(beta) Rz(gamma); covers SU(2), hence U(2) up to phase.
inline ComplexMatrix euler_zyz(double alpha, double beta, double gamma) {
  return matmul(matmul(rz(alpha), ry(beta)), rz(gamma));
}

inline ComplexMatrix ket0() { return ComplexMatrix::ket(2, 0); }
inline ComplexMatrix ket1() { return ComplexMatrix::ket(2, 1); }
inline ComplexMatrix ket_plus() {
  const double h = 1.0 / std::sqrt(2.0);
  return ComplexMatrix(2, 1, {h, h});
}
inline ComplexMatrix ket_minus() {
  const double h = 1.0 / std::sqrt(2.0);
  return ComplexMatrix(2, 1, {h, -h});
}
inline ComplexMatrix ket_plus_i() {
  const double h = 1.0 / std::sqrt(2.0);
  return ComplexMatrix(2, 1, {h, h * I});
}
inline ComplexMatrix ket_minus_i() {
  const double h = 1.0 / std::sqrt(2.0);
  return ComplexMatrix(2, 1, {h, -h * I});
}

/// Bloch-sphere pure state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
inline ComplexMatrix bloch_ket(double theta, double phi) {
  return ComplexMatrix(2, 1, {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
}

enum class PauliAxis { x, y, z };

/// Eigenbasis of a Pauli observable: +1 eigenstate labelled `plus_label`,
/// -1 eigenstate labelled 1 - plus_label.
inline Measurement pauli_measurement(PauliAxis axis, int plus_label = 0) {
  if (plus_label != 0 && plus_label != 1) throw std::invalid_argument("pauli_measurement: label must be 0 or 1");
  std::vector<ComplexMatrix> kets;
  switch (axis) {
    case PauliAxis::x: kets = {ket_plus(), ket_minus()}; break;
    case PauliAxis::y: kets = {ket_plus_i(), ket_minus_i()}; break;
    case PauliAxis::z: kets = {ket0(), ket1()}; break;
  }
  return Measurement::in_basis(kets, {plus_label, 1 - plus_label});
}

}  // namespace gates

/// Generalized Pauli gates and the Fourier measurement for one qudit.
struct QuditGates {
  std::size_t dim;
  ComplexMatrix identity;
  ComplexMatrix shift;  ///< X|i> = |i+1 mod d>
  ComplexMatrix clock;  ///< Z|i> = w^i |i>, w = exp(2 pi i / d)
  std::optional<ComplexMatrix> t3;  ///< d = 3 only: diag(1, w^{-1/3}, w^{-2/3})
  std::optional<ComplexMatrix> v;   ///< d = 3 only: diag(1, w, w)
  std::optional<ComplexMatrix> w;   ///< d = 3 only: diag(1, 1, w)
  Measurement fourier;              ///< |f_k> = sum_j w^{jk}|j>/sqrt(d), labelled k
};

/// k-th Fourier basis vector in dimension d.
inline ComplexMatrix fourier_ket(std::size_t d, std::size_t k) {
  ComplexMatrix v(d, 1);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t j = 0; j < d; ++j)
    v(j, 0) = std::polar(norm, 2.0 * gates::pi * static_cast<double>((j * k) % d) / static_cast<double>(d));
  return v;
}

inline QuditGates qudit_gates(std::size_t d) {
  if (d < 2) throw std::invalid_argument("qudit_gates: dimension must be at least 2");
  if (d > kMaxDim) throw DimensionError("qudit_gates: dimension above supported maximum");
  ComplexMatrix shift(d, d), clock(d, d);
  const double dd = static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) {
    shift((i + 1) % d, i) = 1.0;
    clock(i, i) = std::polar(1.0, 2.0 * gates::pi * static_cast<double>(i) / dd);
  }
  std::vector<ComplexMatrix> kets;
  std::vector<int> labels;
  for (std::size_t k = 0; k < d; ++k) {
    kets.push_back(fourier_ket(d, k));
    labels.push_back(static_cast<int>(k));
  }
  QuditGates g{d, ComplexMatrix::identity(d), std::move(shift), std::move(clock), {}, {}, {},
               Measurement::in_basis(kets, std::move(labels))};
  if (d == 3) {
    const Complex w = std::polar(1.0, 2.0 * gates::pi / 3.0);
    g.t3 = ComplexMatrix::diagonal({1.0, std::polar(1.0, -2.0 * gates::pi / 9.0), std::polar(1.0, -4.0 * gates::pi / 9.0)});
    g.v = ComplexMatrix::diagonal({1.0, w, w});
    g.w = ComplexMatrix::diagonal({1.0, 1.0, w});
  }
  return g;
}

// ---------------------------------------------------------------------------
// Random instances for property checks and optimizer restarts

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// phases of R's diagonal folded back into Q.
template <class Rng>
ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    if (std::abs(rjj) > 0.0) q.col(j) *= rjj / std::abs(rjj);
  }
  return detail::from_eigen(q);
}

template <class Rng>
State random_pure_state(std::size_t d, Rng& rng) {
  return State::pure(matmul(random_unitary(d, rng), ComplexMatrix::ket(d, 0)));
}

/// Full-rank mixed state G G^dagger / Tr(G G^dagger).
template <class Rng>
State random_mixed_state(std::size_t d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  ComplexMatrix rho = matmul(g, dagger(g));
  rho *= 1.0 / std::real(rho.trace());
  return State(detail::hermitian_part(rho));
}

/// Random CPTP map with `n_kraus` Kraus operators, cut from a random
/// isometry d -> d * n_kraus.
template <class Rng>
Channel random_channel(std::size_t d, std::size_t n_kraus, Rng& rng) {
  const ComplexMatrix u = random_unitary(d * n_kraus, rng);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < n_kraus; ++k) {
    ComplexMatrix block(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) block(i, j) = u(k * d + i, j);
    kraus.push_back(std::move(block));
  }
  return Channel(std::move(kraus));
}

inline std::string to_string(const ComplexMatrix& m, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      const Complex z = m(i, j);
      const double re = std::abs(z.real()) < 1e-15 ? 0.0 : z.real();
      const double im = std::abs(z.imag()) < 1e-15 ? 0.0 : z.imag();
      os << re;
      if (im != 0.0) os << (im < 0 ? "-" : "+") << std::abs(im) << 'i';
    }
  }
  os << ']';
  return os.str();
}

}  // namespace chshstar
