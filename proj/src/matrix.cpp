#include "dunion/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dunion/error.hpp"

namespace dunion {
namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InvalidArgument, what);
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows_ * cols_, "matrix entry count does not match its shape");
  require(std::all_of(entries_.begin(), entries_.end(), finite),
          "matrix entries must be finite");
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    require(row.size() == c, "ragged matrix literal");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {r, c, std::move(entries)};
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::ones(std::size_t rows, std::size_t cols) {
  return {rows, cols, std::vector<Complex>(rows * cols, Complex{1.0})};
}

PermutationMatrix::PermutationMatrix(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t c : image_) {
    require(c < image_.size() && !seen[c], "permutation image is not a bijection");
    seen[c] = true;
  }
}

PermutationMatrix PermutationMatrix::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  return PermutationMatrix(std::move(image));
}

std::optional<PermutationMatrix> PermutationMatrix::from_dense(const DenseMatrix& m, double tol) {
  if (!m.square()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<std::size_t> image(n);
  std::vector<bool> col_used(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t hits = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (std::abs(m(r, c)) <= tol) continue;
      if (std::abs(m(r, c) - Complex{1.0}) > tol) return std::nullopt;
      image[r] = c;
      ++hits;
    }
    if (hits != 1 || col_used[image[r]]) return std::nullopt;
    col_used[image[r]] = true;
  }
  return PermutationMatrix(std::move(image));
}

DenseMatrix PermutationMatrix::to_dense() const {
  DenseMatrix m(size(), size());
  for (std::size_t r = 0; r < size(); ++r) m(r, image_[r]) = 1.0;
  return m;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "add: shape mismatch");
  DenseMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

DenseMatrix adjoint(const DenseMatrix& m) {
  DenseMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

DenseMatrix scale(const DenseMatrix& m, Complex factor) {
  DenseMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c) * factor;
  return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.cols() == b.rows(), "multiply: inner dimensions differ");
  const std::size_t rows = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t cols = b.cols();
  DenseMatrix out(rows, cols);
  // i-k-j order; each output row belongs to exactly one thread.
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ri = 0; ri < static_cast<std::ptrdiff_t>(rows); ++ri) {
    const auto r = static_cast<std::size_t>(ri);
    for (std::size_t k = 0; k < inner; ++k) {
      const Complex lhs = a(r, k);
      if (lhs == Complex{}) continue;
      for (std::size_t c = 0; c < cols; ++c) out(r, c) += lhs * b(k, c);
    }
  }
  return out;
}

DenseMatrix multiply(const DenseMatrix& a, const PermutationMatrix& p) {
  require(a.cols() == p.size(), "multiply: inner dimensions differ");
  DenseMatrix out(a.rows(), a.cols());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ri = 0; ri < static_cast<std::ptrdiff_t>(a.rows()); ++ri) {
    const auto r = static_cast<std::size_t>(ri);
    for (std::size_t k = 0; k < p.size(); ++k) out(r, p[k]) = a(r, k);
  }
  return out;
}

DenseMatrix hadamard(const DenseMatrix& n, const DenseMatrix& m) {
  require(n.rows() == m.rows() && n.cols() == m.cols(), "hadamard: shape mismatch");
  DenseMatrix out(n.rows(), n.cols());
  for (std::size_t r = 0; r < n.rows(); ++r)
    for (std::size_t c = 0; c < n.cols(); ++c) out(r, c) = n(r, c) * m(r, c);
  return out;
}

DenseMatrix generalized_hadamard(const DenseMatrix& n, const DenseMatrix& m) {
  require(n.square() && m.square(), "generalized_hadamard: inputs must be square");
  require(n.rows() > 0 && m.rows() % n.rows() == 0,
          "generalized_hadamard: order of N must divide order of M");
  const std::size_t r = m.rows() / n.rows();
  if (r == 1) return hadamard(n, m);
  DenseMatrix out(m.rows(), m.cols());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ri = 0; ri < static_cast<std::ptrdiff_t>(m.rows()); ++ri) {
    const auto row = static_cast<std::size_t>(ri);
    for (std::size_t col = 0; col < m.cols(); ++col)
      out(row, col) = n(row / r, col / r) * m(row, col);
  }
  return out;
}

DenseMatrix kronecker(const DenseMatrix& n, const DenseMatrix& m) {
  const std::size_t rows = n.rows() * m.rows();
  const std::size_t cols = n.cols() * m.cols();
  DenseMatrix out(rows, cols);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ri = 0; ri < static_cast<std::ptrdiff_t>(rows); ++ri) {
    const auto row = static_cast<std::size_t>(ri);
    const std::size_t nr = row / m.rows();
    const std::size_t mr = row % m.rows();
    for (std::size_t col = 0; col < cols; ++col)
      out(row, col) = n(nr, col / m.cols()) * m(mr, col % m.cols());
  }
  return out;
}

PermutationMatrix kronecker(const PermutationMatrix& a, const PermutationMatrix& b) {
  std::vector<std::size_t> image(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) image[i * b.size() + j] = a[i] * b.size() + b[j];
  return PermutationMatrix(std::move(image));
}

DenseMatrix direct_sum(std::span<const DenseMatrix> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) {
    require(b.square(), "direct_sum: every block must be square");
    total += b.rows();
  }
  DenseMatrix out(total, total);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(offset + r, offset + c) = b(r, c);
    offset += b.rows();
  }
  return out;
}

PermutationMatrix direct_sum(std::span<const PermutationMatrix> blocks) {
  std::vector<std::size_t> image;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.size(); ++r) image.push_back(offset + b[r]);
    offset += b.size();
  }
  return PermutationMatrix(std::move(image));
}

PermutationMatrix rho_reg_zk(std::size_t k, std::size_t l) {
  require(k >= 1 && l < k, "rho_reg_zk: need 0 <= l < k");
  std::vector<std::size_t> image(k);
  for (std::size_t i = 0; i < k; ++i) image[i] = (i + l) % k;
  return PermutationMatrix(std::move(image));
}

UnitarityCheck is_unitary(const DenseMatrix& u, double tol) {
  require(u.square(), "is_unitary: matrix must be square");
  const std::size_t n = u.rows();
  const DenseMatrix gram = multiply(adjoint(u), u);
  // per-thread max then a max-reduce, which is order independent
  double residual = 0.0;
#pragma omp parallel for schedule(static) reduction(max : residual)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < n; ++j)
      residual = std::max(residual, std::abs(gram(i, j) - (i == j ? Complex{1.0} : Complex{})));
  }
  return {residual <= tol, residual};
}

DenseMatrix fourier(std::size_t k) {
  require(k >= 1, "fourier: k must be positive");
  DenseMatrix out(k, k);
  const double norm = 1.0 / std::sqrt(static_cast<double>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      // Reduce a*b mod k first so the angle stays in [0, 2 pi).
      const std::size_t r = (a * b) % k;
      if (4 * r % k == 0) {
        // quarter turns are exact: 1, i, -1, -i
        constexpr Complex kQuarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        out(a, b) = norm * kQuarter[4 * r / k];
        continue;
      }
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(k);
      out(a, b) = std::polar(norm, angle);
    }
  }
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double min_abs_entry(const DenseMatrix& m) {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex& z : m.entries()) best = std::min(best, std::abs(z));
  return best;
}

namespace serial {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  require(a.cols() == b.rows(), "multiply: inner dimensions differ");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex lhs = a(r, k);
      if (lhs == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += lhs * b(k, c);
    }
  return out;
}

UnitarityCheck is_unitary(const DenseMatrix& u, double tol) {
  require(u.square(), "is_unitary: matrix must be square");
  const DenseMatrix gram = serial::multiply(adjoint(u), u);
  const double residual = max_abs_diff(gram, DenseMatrix::identity(u.rows()));
  return {residual <= tol, residual};
}

}  // namespace serial
}  // namespace dunion
